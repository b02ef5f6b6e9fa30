//! Exact rational scalars and sparse multivariate polynomials over a fixed,
//! globally ordered variable universe.

mod monomial;
mod poly;
mod rational;
mod text;

use core::fmt;

pub use monomial::{Monomial, Var, MAX_GENERIC_ORDER, NVARS};
pub use poly::{Poly, PolyAccumulator};
pub use rational::{ParseRationalError, Rational};
pub use text::{parse_poly, ParseError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingError {
    /// Content of the zero polynomial is undefined.
    ZeroContent,
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::ZeroContent => f.write_str("content of the zero polynomial"),
        }
    }
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = num_bigint::BigInt::from(1u32);
    for k in 2..=n {
        acc *= k;
    }
    Rational::from_bigint(acc)
}

/// `n!/(n-k)!`, zero when `k > n`.
pub fn falling(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::ZERO;
    }
    let mut acc = num_bigint::BigInt::from(1u32);
    for j in 0..k {
        acc *= n - j;
    }
    Rational::from_bigint(acc)
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::ZERO;
    }
    &falling(n, k) / &factorial(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn combinatorial_helpers() {
        assert_eq!(factorial(0), Rational::ONE);
        assert_eq!(factorial(5), Rational::from_int(120));
        assert_eq!(falling(5, 2), Rational::from_int(20));
        assert_eq!(falling(2, 5), Rational::ZERO);
        assert_eq!(binomial(5, 2), Rational::from_int(10));
        assert_eq!(binomial(3, 4), Rational::ZERO);
        assert_eq!(factorial(25).to_string(), "15511210043330985984000000");
    }
}
