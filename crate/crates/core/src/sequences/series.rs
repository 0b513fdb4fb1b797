use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::factorial;
use crate::error::{Error, Result};

/// Power series `sum_{k <= order} c_k z^k` with exact rational coefficients,
/// known up to and including `z^order`. The EGF coefficient at `k` is `c_k k!`.
#[derive(Clone, PartialEq, Eq)]
pub struct EgfSeries {
    coefficients: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn inverse_factorial(k: usize) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(factorial(k)))
}

impl EgfSeries {
    /// Series from ordinary coefficients `c_0..=c_order`.
    pub fn from_coefficients(coefficients: Vec<BigRational>) -> Self {
        assert!(!coefficients.is_empty(), "a series needs at least the constant term");
        Self { coefficients }
    }

    /// Series whose EGF coefficients are the given integers.
    pub fn from_egf<T: Into<BigInt> + Clone>(values: &[T]) -> Self {
        let coefficients = values
            .iter()
            .enumerate()
            .map(|(k, v)| BigRational::from_integer(v.clone().into()) * inverse_factorial(k))
            .collect();
        Self::from_coefficients(coefficients)
    }

    pub fn zero(order: usize) -> Self {
        Self::constant(0, order)
    }

    pub fn constant(c: i64, order: usize) -> Self {
        let mut coefficients = vec![BigRational::zero(); order + 1];
        coefficients[0] = rat(c);
        Self { coefficients }
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coefficients[1] = BigRational::one();
        }
        s
    }

    pub fn sin(order: usize) -> Self {
        let coefficients = (0..=order)
            .map(|k| match k % 4 {
                1 => inverse_factorial(k),
                3 => -inverse_factorial(k),
                _ => BigRational::zero(),
            })
            .collect();
        Self { coefficients }
    }

    pub fn cos(order: usize) -> Self {
        let coefficients = (0..=order)
            .map(|k| match k % 4 {
                0 => inverse_factorial(k),
                2 => -inverse_factorial(k),
                _ => BigRational::zero(),
            })
            .collect();
        Self { coefficients }
    }

    pub fn tan(order: usize) -> Self {
        Self::sin(order).div(&Self::cos(order)).expect("cos(0) = 1")
    }

    pub fn sec(order: usize) -> Self {
        Self::constant(1, order).div(&Self::cos(order)).expect("cos(0) = 1")
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficient(&self, k: usize) -> &BigRational {
        &self.coefficients[k]
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    /// `c_k k!`.
    pub fn egf_coefficient(&self, k: usize) -> BigRational {
        &self.coefficients[k] * BigRational::from_integer(BigInt::from(factorial(k)))
    }

    /// `c_k k!` when it is an integer.
    pub fn egf_integer(&self, k: usize) -> Option<BigInt> {
        let c = self.egf_coefficient(k);
        c.is_integer().then(|| c.to_integer())
    }

    /// `c_k k!` when it is a natural number.
    pub fn egf_natural(&self, k: usize) -> Option<BigUint> {
        self.egf_integer(k).filter(|v| !v.is_negative()).and_then(|v| v.to_biguint())
    }

    /// Same series cut down to `order`.
    pub fn truncate(&self, order: usize) -> Self {
        Self { coefficients: self.coefficients[..=order.min(self.order())].to_vec() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { coefficients: self.coefficients.iter().map(|x| x * c).collect() }
    }

    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        let coefficients = (1..=self.order()).map(|k| &self.coefficients[k] * rat(k as i64)).collect();
        Self { coefficients }
    }

    /// `self / other`; needs a nonzero constant term in `other`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let b0 = &other.coefficients[0];
        if b0.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let order = self.order().min(other.order());
        let mut c: Vec<BigRational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.coefficients[k].clone();
            for j in 0..k {
                acc -= &c[j] * &other.coefficients[k - j];
            }
            c.push(acc / b0);
        }
        Ok(Self { coefficients: c })
    }

    /// `self(inner(z))`; needs a zero constant term in `inner`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coefficients[0].is_zero() {
            return Err(Error::DimensionMismatch("inner series must vanish at 0".into()));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coefficients[..=order].iter().rev() {
            acc = &(&acc * &inner) + &Self::constant(0, order).with_constant(c.clone());
        }
        Ok(acc)
    }

    fn with_constant(mut self, c: BigRational) -> Self {
        self.coefficients[0] = c;
        self
    }

    /// Index of the first coefficient where the two series differ, comparing
    /// up to the smaller order.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        let order = self.order().min(other.order());
        (0..=order).find(|&k| self.coefficients[k] != other.coefficients[k])
    }
}

impl fmt::Debug for EgfSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.coefficients.iter().enumerate().map(|(k, c)| format!("{c}z^{k}")).collect();
        write!(f, "{} + O(z^{})", terms.join(" + "), self.order() + 1)
    }
}

impl Add for &EgfSeries {
    type Output = EgfSeries;
    fn add(self, rhs: &EgfSeries) -> EgfSeries {
        let order = self.order().min(rhs.order());
        EgfSeries { coefficients: (0..=order).map(|k| &self.coefficients[k] + &rhs.coefficients[k]).collect() }
    }
}

impl Sub for &EgfSeries {
    type Output = EgfSeries;
    fn sub(self, rhs: &EgfSeries) -> EgfSeries {
        let order = self.order().min(rhs.order());
        EgfSeries { coefficients: (0..=order).map(|k| &self.coefficients[k] - &rhs.coefficients[k]).collect() }
    }
}

impl Mul for &EgfSeries {
    type Output = EgfSeries;
    fn mul(self, rhs: &EgfSeries) -> EgfSeries {
        let order = self.order().min(rhs.order());
        let coefficients = (0..=order)
            .map(|k| (0..=k).map(|j| &self.coefficients[j] * &rhs.coefficients[k - j]).sum())
            .collect();
        EgfSeries { coefficients }
    }
}

impl Neg for &EgfSeries {
    type Output = EgfSeries;
    fn neg(self) -> EgfSeries {
        EgfSeries { coefficients: self.coefficients.iter().map(|c| -c).collect() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for EgfSeries {
            type Output = EgfSeries;
            fn $m(self, rhs: EgfSeries) -> EgfSeries {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);
