use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

/// How a value of `K` was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Shuffle product over irreducible components.
    Product,
    /// Sum over all maximal parabolics (central longest element).
    Summ1,
    /// Pairs and fixed points of the longest-element automorphism.
    Summ2,
    /// Rank 0 or 1.
    BaseCase,
    /// Orbits under the group extended by the fork swap of `D_n`.
    BarDAugmented,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Product => "product",
            Method::Summ1 => "summ1",
            Method::Summ2 => "summ2",
            Method::BaseCase => "base-case",
            Method::BarDAugmented => "bar-d-augmented",
        }
    }
}

/// One summand or factor of a [`KResult`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub description: String,
    #[serde(with = "decimal")]
    pub value: BigUint,
}

impl Term {
    pub fn new(description: impl Into<String>, value: BigUint) -> Self {
        Self { description: description.into(), value }
    }
}

/// Exact `K(W)` with an audit trail. For `Product` the value is the product of
/// the terms (the multinomial is the first term); otherwise it is their sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KResult {
    pub group: String,
    #[serde(with = "decimal")]
    pub value: BigUint,
    pub method: Method,
    pub terms: Vec<Term>,
}

impl KResult {
    /// Recompute the value from the terms.
    pub fn terms_total(&self) -> BigUint {
        match self.method {
            Method::Product => self.terms.iter().map(|t| &t.value).product(),
            _ if self.terms.is_empty() => self.value.clone(),
            _ => self.terms.iter().map(|t| &t.value).sum(),
        }
    }

    pub fn is_consistent(&self) -> bool {
        self.terms_total() == self.value
    }

    /// Term values as decimal strings joined by ` + `.
    pub fn breakdown(&self) -> String {
        let sep = if self.method == Method::Product { " * " } else { " + " };
        self.terms.iter().map(|t| t.value.to_string()).collect::<Vec<_>>().join(sep)
    }
}

/// Big naturals as decimal strings.
pub mod decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn serialize_vec<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(ToString::to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|_| serde::de::Error::custom(format!("not a decimal natural: {s:?}")))
    }
}
