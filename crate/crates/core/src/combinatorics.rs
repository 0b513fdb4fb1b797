//! Big-integer factorials, binomials and multinomials.

use num_bigint::BigUint;
use num_traits::One;

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    // running product stays integral: C(n-k+i, i) at step i
    (1..=k).fold(BigUint::one(), |acc, i| acc * BigUint::from(n - k + i) / BigUint::from(i))
}

/// `(sum parts)! / prod(part!)`.
pub fn multinomial(parts: &[usize]) -> BigUint {
    let mut total = 0;
    let mut acc = BigUint::one();
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}
