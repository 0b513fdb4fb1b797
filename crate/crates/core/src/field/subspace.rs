use serde::{Deserialize, Serialize};

use super::matrix::{dot, rref, Matrix};
use super::scalar::{Field, FieldScalar};
use crate::error::{Error, Result};

/// A linear subspace stored as the RREF basis of its row span.
///
/// Two subspaces are equal as sets exactly when their representations are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subspace {
    ambient: usize,
    field: Field,
    basis: Vec<Vec<FieldScalar>>,
}

impl Subspace {
    /// Span of `vectors` in `field^ambient`.
    pub fn span(field: Field, vectors: Vec<Vec<FieldScalar>>, ambient: usize) -> Result<Self> {
        for (row, v) in vectors.iter().enumerate() {
            if v.len() != ambient {
                return Err(Error::Ragged { row, len: v.len(), expected: ambient });
            }
            if v.iter().any(|x| x.field() > field) {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(Self { ambient, field, basis: rref(vectors, ambient).rows })
    }

    /// Solution set `{ x : <n, x> = 0 for every normal n }`.
    pub fn orthogonal_complement_of(field: Field, normals: Vec<Vec<FieldScalar>>, ambient: usize) -> Result<Self> {
        let constraints = Self::span(field, normals, ambient)?;
        Ok(constraints.annihilator())
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { FieldScalar::one() } else { FieldScalar::zero() }).collect())
            .collect();
        Self { ambient, field, basis }
    }

    pub fn zero(field: Field, ambient: usize) -> Self {
        Self { ambient, field, basis: Vec::new() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn basis(&self) -> &[Vec<FieldScalar>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.basis.len()
    }

    /// `{ y : <y, x> = 0 for all x in self }`.
    pub fn annihilator(&self) -> Subspace {
        let ns = if self.basis.is_empty() {
            return Subspace::full(self.field, self.ambient);
        } else {
            rref(self.basis.clone(), self.ambient).nullspace()
        };
        Subspace { ambient: self.ambient, field: self.field, basis: rref(ns, self.ambient).rows }
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!("ambient {} vs {}", self.ambient, other.ambient)));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut constraints = self.annihilator().basis;
        constraints.extend(other.annihilator().basis);
        let c = Subspace { ambient: self.ambient, field: self.field, basis: rref(constraints, self.ambient).rows };
        Ok(c.annihilator())
    }

    /// Sum `self + other`.
    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Ok(Subspace { ambient: self.ambient, field: self.field, basis: rref(rows, self.ambient).rows })
    }

    pub fn contains_vector(&self, v: &[FieldScalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        // reduce v against the RREF basis
        let mut r = v.to_vec();
        for row in &self.basis {
            let p = row.iter().position(|x| !x.is_zero()).expect("RREF rows are nonzero");
            if !r[p].is_zero() {
                let f = r[p].clone();
                for (x, b) in r.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *x = &*x - &(&f * b);
                    }
                }
            }
        }
        r.iter().all(FieldScalar::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains_vector(b))
    }

    /// Whether every vector of `self` is orthogonal to `normal`.
    pub fn is_orthogonal_to(&self, normal: &[FieldScalar]) -> bool {
        self.basis.iter().all(|b| dot(b, normal).is_zero())
    }

    /// Image `{ m x : x in self }`.
    pub fn apply_matrix(&self, m: &Matrix) -> Result<Subspace> {
        if m.rows() != self.ambient || m.cols() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix on ambient {}",
                m.rows(),
                m.cols(),
                self.ambient
            )));
        }
        if m.rank() < self.ambient {
            return Err(Error::SingularMatrix);
        }
        let images = self.basis.iter().map(|b| m.apply(b)).collect();
        Ok(Subspace { ambient: self.ambient, field: self.field, basis: rref(images, self.ambient).rows })
    }

    /// Basis rows as exact strings, for JSON dumps.
    pub fn basis_strings(&self) -> Vec<Vec<String>> {
        self.basis.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
    }
}

/// RREF span of `vectors` in the smallest field containing their entries.
pub fn canonical_subspace(vectors: Vec<Vec<FieldScalar>>, ambient: usize) -> Result<Subspace> {
    let field = vectors.iter().flatten().map(FieldScalar::field).fold(Field::Rational, Field::join);
    Subspace::span(field, vectors, ambient)
}
