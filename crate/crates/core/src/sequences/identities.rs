use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::Serialize;

use super::closed::euler_numbers;
use super::series::EgfSeries;
use crate::error::{Error, Result};
use crate::recursion::Engine;

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    /// First coefficient index where the two sides differ.
    pub first_mismatch: Option<usize>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub order: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

/// Check every generating-function identity coefficientwise up to `z^order`,
/// with the `d` and `bar d` values taken from `engine`.
pub fn verify_identities(order: usize, engine: &Engine) -> Result<IdentityReport> {
    if order < 4 {
        return Err(Error::RankOutOfRange(format!("identity checks need order >= 4, got {order}")));
    }
    // derivatives lose one order, so build everything one step further out
    let n = order + 1;
    let one = EgfSeries::constant(1, n);
    let z = EgfSeries::z(n);
    let sin = EgfSeries::sin(n);
    let cos = EgfSeries::cos(n);
    let tan = EgfSeries::tan(n);
    let sec = EgfSeries::sec(n);
    let cos2 = &cos * &cos;

    let a = (&one + &sin).div(&cos)?;
    let b = one.div(&(&one - &sin))?;
    let bar_d = (&(&EgfSeries::constant(2, n) - &cos) - &(&z * &sin)).div(&(&one - &sin))?;

    let t = euler_numbers(n + 1).values;
    let mut d = vec![BigUint::from(0u32); n + 1];
    let mut bar = vec![BigUint::from(0u32); n + 1];
    for k in 2..=n {
        d[k] = engine.k_value(&format!("D{k}"))?;
        bar[k] = engine.k_bar(k as u32)?;
    }

    let mut checks = Vec::new();
    let mut check = |name: &str, lhs: EgfSeries, rhs: EgfSeries| {
        let (lhs, rhs) = (lhs.truncate(order), rhs.truncate(order));
        checks.push(IdentityCheck { name: name.to_string(), first_mismatch: lhs.first_mismatch(&rhs) });
    };

    check("sec + tan = (1 + sin)/cos", &sec + &tan, a.clone());
    check("(1 + sin)/cos has coefficients T_n", a.clone(), EgfSeries::from_egf(&t[..=n]));
    check("A' - 1 = (A^2 - 1)/2", &a.derivative() - &one, (&(&a * &a) - &one).scale(&half()));
    check("B' = B A", b.derivative(), &b * &a);
    check("B = A'", b.clone(), a.derivative());
    check("B has coefficients T_{n+1}", b.clone(), EgfSeries::from_egf(&t[1..=n + 1]));
    check(
        "(2 - cos - z sin)/(1 - sin) = (2 - z) A' + z - A",
        bar_d.clone(),
        &(&(&(&EgfSeries::constant(2, n) - &z) * &a.derivative()) + &z) - &a,
    );
    check("bar D' = (bar D - z) A", bar_d.derivative(), &(&bar_d - &z) * &a);
    let mut bar_egf: Vec<BigInt> = bar.iter().cloned().map(BigInt::from).collect();
    bar_egf[0] = BigInt::from(1);
    bar_egf[1] = BigInt::from(1);
    check("bar D has coefficients bar d_n", bar_d.clone(), EgfSeries::from_egf(&bar_egf));
    check("sec' = sec tan", sec.derivative(), &sec * &tan);
    let mut u: Vec<BigInt> = (0..=n).map(|k| BigInt::from(d[k].clone()) - BigInt::from(bar[k].clone())).collect();
    u[0] = BigInt::from(1);
    check("1 + sum (d_n - bar d_n) z^n/n! = sec", EgfSeries::from_egf(&u), sec.clone());
    let even: Vec<BigInt> = (0..=n).map(|k| if k % 2 == 0 { BigInt::from(d[k].clone()) } else { BigInt::from(0) }).collect();
    let odd: Vec<BigInt> = (0..=n).map(|k| if k % 2 == 1 { BigInt::from(d[k].clone()) } else { BigInt::from(0) }).collect();
    check(
        "sin (2 sin - z)/cos^2 has coefficients d_2n",
        (&sin * &(&sin.scale(&BigRational::from_integer(BigInt::from(2))) - &z)).div(&cos2)?,
        EgfSeries::from_egf(&even),
    );
    check(
        "(sin (2 - cos) - z)/cos^2 has coefficients d_2n+1",
        (&(&sin * &(&EgfSeries::constant(2, n) - &cos)) - &z).div(&cos2)?,
        EgfSeries::from_egf(&odd),
    );
    Ok(IdentityReport { order, checks })
}
