use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use super::series::EgfSeries;
use crate::coxeter::{Family, TypeLabel};
use crate::error::{Error, Result};

/// Stored values for the exceptional types.
pub const EXCEPTIONAL: [(&str, u64); 6] =
    [("H3", 4), ("H4", 12), ("F4", 16), ("E6", 82), ("E7", 768), ("E8", 4056)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceName {
    T,
    A,
    B,
    D,
    BarD,
}

/// A named integer sequence; `values[i]` is the term of index `start + i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceTable {
    pub name: SequenceName,
    pub start: usize,
    #[serde(serialize_with = "crate::recursion::decimal::serialize_vec")]
    pub values: Vec<BigUint>,
}

impl SequenceTable {
    pub fn get(&self, n: usize) -> Option<&BigUint> {
        n.checked_sub(self.start).and_then(|i| self.values.get(i))
    }

    pub fn end(&self) -> usize {
        self.start + self.values.len()
    }
}

/// `T_0..=T_n` by the Seidel triangle `E(m, k) = E(m, k-1) + E(m-1, m-k)`, `T_m = E(m, m)`.
pub fn euler_numbers(n: usize) -> SequenceTable {
    let mut row = vec![BigUint::from(1u32)];
    let mut values = vec![BigUint::from(1u32)];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        next.push(BigUint::from(0u32));
        for k in 1..=m {
            let v = &next[k - 1] + &row[m - k];
            next.push(v);
        }
        values.push(next[m].clone());
        row = next;
    }
    SequenceTable { name: SequenceName::T, start: 0, values }
}

/// `T_0..=T_n` as EGF coefficients of `(1 + sin z) / cos z`.
pub fn euler_numbers_by_division(n: usize) -> SequenceTable {
    let a = (&EgfSeries::constant(1, n) + &EgfSeries::sin(n)).div(&EgfSeries::cos(n)).expect("cos(0) = 1");
    let values = (0..=n).map(|k| a.egf_natural(k).expect("zigzag numbers are natural")).collect();
    SequenceTable { name: SequenceName::T, start: 0, values }
}

fn t(n: usize) -> BigUint {
    euler_numbers(n).values.pop().expect("nonempty")
}

fn diff(a: BigUint, b: BigUint) -> BigUint {
    (BigInt::from(a) - BigInt::from(b)).to_biguint().expect("closed forms are nonnegative")
}

/// `d_n = 2T_{n+1} - n T_n` for even `n`, `2T_{n+1} - (n+1) T_n` for odd `n` (`n >= 2`).
pub fn d_closed_form(n: usize) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::RankOutOfRange(format!("d_n needs n >= 2, got {n}")));
    }
    let factor = if n % 2 == 0 { n } else { n + 1 };
    Ok(diff(t(n + 1) * 2u32, t(n) * factor))
}

/// `bar d_n = 2T_{n+1} - (n+1) T_n` (`n >= 2`).
pub fn bar_d_closed_form(n: usize) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::RankOutOfRange(format!("bar d_n needs n >= 2, got {n}")));
    }
    Ok(diff(t(n + 1) * 2u32, t(n) * (n + 1)))
}

/// `K` of an irreducible type from the closed forms and the exceptional table.
pub fn k_closed_form(label: TypeLabel) -> BigUint {
    let n = label.rank as usize;
    match label.family {
        Family::A => t(n),
        Family::B => t(n + 1),
        Family::D => d_closed_form(n).expect("D_n has n >= 4"),
        Family::I2 => BigUint::from(if n % 2 == 1 { 1u32 } else { 2 }),
        Family::E | Family::F | Family::H => {
            let name = label.to_string();
            let (_, v) = EXCEPTIONAL.iter().find(|(s, _)| *s == name).expect("every exceptional type is tabulated");
            BigUint::from(*v)
        }
    }
}

/// Closed form for a product of irreducible types via the shuffle formula.
pub fn k_closed_form_product(labels: &[TypeLabel]) -> BigUint {
    let ranks: Vec<usize> = labels.iter().map(TypeLabel::coxeter_rank).collect();
    labels.iter().map(|&l| k_closed_form(l)).product::<BigUint>() * crate::combinatorics::multinomial(&ranks)
}
