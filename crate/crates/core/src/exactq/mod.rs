//! Exact scalar arithmetic.
//!
//! Everything in the crate is computed over [`Rational`] (arbitrary precision,
//! always in lowest terms). Volumes and even zeta values live in [`PiExact`],
//! the graded ring of monomials `r * pi^(s/2)`.

mod bernoulli;
mod factor;
mod pi_exact;

pub use bernoulli::{
    bernoulli, bernoulli_poly, binomial, euler_number, factorial, gamma_half, gen_bernoulli_mod4,
    l_psi_exact_odd, zeta_even_exact, zeta_negative_odd,
};
pub use factor::{
    factor, factor_rational, is_prime_u64, is_probable_prime, FactoredInteger, FactoredRational,
};
pub use pi_exact::PiExact;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational number. Always normalized: lowest terms, positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("zero has no factorization")]
    ZeroInput,
    #[error("Euler numbers are only defined here for even indices, got {0}")]
    OddEulerIndex(u32),
    #[error("L(psi, s) closed form needs odd s, got {0}")]
    EvenLIndex(u32),
    #[error("index must be positive")]
    NonPositiveIndex,
    #[error("cannot add pi^({left}/2) and pi^({right}/2) terms")]
    PiPowerMismatch { left: i64, right: i64 },
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

/// `num / den` as a normalized rational.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// `2^e` for any integer exponent.
pub fn pow2(e: i64) -> Rational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let err = || ExactError::Parse(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rational("6/-4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert_eq!(rat(-3, 2).to_string(), "-3/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn powers_of_two() {
        assert_eq!(pow2(3), int(8));
        assert_eq!(pow2(-2), rat(1, 4));
        assert_eq!(pow2(0), int(1));
    }
}
