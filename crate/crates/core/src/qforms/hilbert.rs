use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Place, QformError};
use crate::exactq::Rational;

/// `r = p^v * u` with `u` a `p`-adic unit, returned as `(v, numerator' * denominator')`
/// (the unit part is only ever used up to squares, and `1/w = w` mod squares).
pub(crate) fn split_valuation(r: &Rational, p: u64) -> (i64, BigInt) {
    fn strip(n: &BigInt, p: &BigInt) -> (i64, BigInt) {
        let mut n = n.clone();
        let mut v = 0;
        while (&n % p).is_zero() {
            n /= p;
            v += 1;
        }
        (v, n)
    }
    let pb = BigInt::from(p);
    let (a, num) = strip(r.numer(), &pb);
    let (b, den) = strip(r.denom(), &pb);
    (a - b, num * den)
}

fn mod_u64(n: &BigInt, m: u64) -> u64 {
    n.mod_floor(&BigInt::from(m))
        .to_u64()
        .expect("residue fits u64")
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % m as u128) as u64;
        }
        base = ((base as u128 * base as u128) % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Legendre symbol `(u/p)` for odd prime `p` and `u` prime to `p`, via Euler's criterion.
pub(crate) fn legendre(u: &BigInt, p: u64) -> i8 {
    let r = pow_mod(mod_u64(u, p), (p - 1) / 2, p);
    if r == 1 {
        1
    } else {
        -1
    }
}

fn ensure_prime(p: u64) -> Result<(), QformError> {
    if crate::exactq::is_prime_u64(p) {
        Ok(())
    } else {
        Err(QformError::NotPrime(p))
    }
}

/// Hilbert symbol `(a, b)_v`: `+1` iff `z^2 = a x^2 + b y^2` has a nontrivial
/// solution over the completion of `Q` at `v`.
pub fn hilbert_symbol(a: &Rational, b: &Rational, v: Place) -> Result<i8, QformError> {
    if a.is_zero() || b.is_zero() {
        return Err(QformError::ZeroEntry);
    }
    match v {
        Place::Infinite => Ok(if a.is_negative() && b.is_negative() {
            -1
        } else {
            1
        }),
        Place::Finite(2) => {
            let (alpha, u) = split_valuation(a, 2);
            let (beta, w) = split_valuation(b, 2);
            let u = mod_u64(&u, 8);
            let w = mod_u64(&w, 8);
            let eps = |x: u64| ((x - 1) / 2) % 2;
            let omega = |x: u64| ((x * x - 1) / 8) % 2;
            let e = eps(u) * eps(w)
                + (alpha.rem_euclid(2) as u64) * omega(w)
                + (beta.rem_euclid(2) as u64) * omega(u);
            Ok(if e.is_multiple_of(2) { 1 } else { -1 })
        }
        Place::Finite(p) => {
            ensure_prime(p)?;
            let (alpha, u) = split_valuation(a, p);
            let (beta, w) = split_valuation(b, p);
            let (alpha, beta) = (alpha.rem_euclid(2), beta.rem_euclid(2));
            let mut s: i8 = 1;
            if alpha * beta == 1 && (p % 4 == 3) {
                s = -s;
            }
            if beta == 1 {
                s *= legendre(&u, p);
            }
            if alpha == 1 {
                s *= legendre(&w, p);
            }
            Ok(s)
        }
    }
}

/// Canonical square-class representative at a place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(tag = "place", rename_all = "snake_case")]
pub enum SquareClass {
    /// Sign of the number.
    Real { negative: bool },
    /// Odd `p`: valuation parity and whether the unit part is a non-residue.
    Odd {
        odd_valuation: bool,
        nonresidue: bool,
    },
    /// `p = 2`: valuation parity and the unit part mod 8.
    Two { odd_valuation: bool, unit_mod8: u8 },
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SquareClass::Real { negative } => write!(f, "{}", if *negative { "-1" } else { "1" }),
            SquareClass::Odd {
                odd_valuation,
                nonresidue,
            } => write!(
                f,
                "{}{}",
                if *nonresidue { "n" } else { "1" },
                if *odd_valuation { "*p" } else { "" }
            ),
            SquareClass::Two {
                odd_valuation,
                unit_mod8,
            } => write!(f, "{}{}", unit_mod8, if *odd_valuation { "*2" } else { "" }),
        }
    }
}

pub fn square_class(r: &Rational, v: Place) -> Result<SquareClass, QformError> {
    if r.is_zero() {
        return Err(QformError::ZeroEntry);
    }
    Ok(match v {
        Place::Infinite => SquareClass::Real {
            negative: r.is_negative(),
        },
        Place::Finite(2) => {
            let (val, u) = split_valuation(r, 2);
            SquareClass::Two {
                odd_valuation: val.rem_euclid(2) == 1,
                unit_mod8: mod_u64(&u, 8) as u8,
            }
        }
        Place::Finite(p) => {
            ensure_prime(p)?;
            let (val, u) = split_valuation(r, p);
            SquareClass::Odd {
                odd_valuation: val.rem_euclid(2) == 1,
                nonresidue: legendre(&u, p) == -1,
            }
        }
    })
}

pub fn is_local_square(r: &Rational, v: Place) -> Result<bool, QformError> {
    Ok(match square_class(r, v)? {
        SquareClass::Real { negative } => !negative,
        SquareClass::Odd {
            odd_valuation,
            nonresidue,
        } => !odd_valuation && !nonresidue,
        SquareClass::Two {
            odd_valuation,
            unit_mod8,
        } => !odd_valuation && unit_mod8 == 1,
    })
}

pub fn is_rational_square(r: &Rational) -> bool {
    if r.is_negative() {
        return false;
    }
    let is_sq = |n: &BigInt| {
        let s = n.sqrt();
        &s * &s == *n
    };
    is_sq(r.numer()) && is_sq(r.denom())
}

/// Primes dividing the numerator or denominator.
pub(crate) fn support_primes(r: &Rational) -> Vec<u64> {
    let mut out = Vec::new();
    for n in [r.numer(), r.denom()] {
        if n.abs().is_one() {
            continue;
        }
        let f = crate::exactq::factor(n).expect("nonzero");
        for p in f.factors.keys() {
            out.push(p.to_u64().expect("support prime fits u64"));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{int, rat};

    fn h(a: i64, b: i64, v: Place) -> i8 {
        hilbert_symbol(&int(a), &int(b), v).unwrap()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(h(-1, -1, Place::Infinite), -1);
        assert_eq!(h(-1, -1, Place::Finite(2)), -1);
        assert_eq!(h(2, 7, Place::Finite(7)), 1);
    }

    #[test]
    fn textbook_values() {
        // (2, 3)_3 = (2/3) = -1; (3, 3)_3 = (-1/3) = -1; (5, 5)_5 = (-1/5) = 1
        assert_eq!(h(2, 3, Place::Finite(3)), -1);
        assert_eq!(h(3, 3, Place::Finite(3)), -1);
        assert_eq!(h(5, 5, Place::Finite(5)), 1);
        assert_eq!(h(2, 3, Place::Finite(2)), -1);
        assert_eq!(h(2, 2, Place::Finite(2)), 1);
        assert_eq!(h(3, 3, Place::Finite(2)), -1);
        // squares do not matter
        assert_eq!(
            hilbert_symbol(&rat(3, 4), &rat(27, 5), Place::Finite(3)).unwrap(),
            h(3, 15, Place::Finite(3))
        );
    }

    #[test]
    fn zero_and_composite_rejected() {
        assert_eq!(
            hilbert_symbol(&int(0), &int(1), Place::Infinite),
            Err(QformError::ZeroEntry)
        );
        assert_eq!(
            hilbert_symbol(&int(2), &int(3), Place::Finite(9)),
            Err(QformError::NotPrime(9))
        );
    }

    #[test]
    fn square_classes() {
        assert!(is_local_square(&int(17), Place::Finite(2)).unwrap());
        assert!(!is_local_square(&int(-1), Place::Finite(3)).unwrap());
        assert!(is_local_square(&int(-1), Place::Finite(5)).unwrap());
        assert!(is_local_square(&rat(4, 9), Place::Infinite).unwrap());
        assert!(is_rational_square(&rat(4, 9)));
        assert!(!is_rational_square(&int(-4)));
        assert_eq!(support_primes(&rat(-12, 35)), vec![2, 3, 5, 7]);
    }
}
