//! Local and global invariants of diagonal quadratic forms over `Q`.

mod genus;
mod hilbert;
mod local;

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exactq::{int, parse_rational, Rational};

pub use genus::{
    fp_type, genus_comparison, genus_equal_finite_places, FpType, GenusComparison, GenusWitness,
};
pub use hilbert::{hilbert_symbol, is_local_square, is_rational_square, square_class, SquareClass};
pub use local::{
    anisotropic_dim, hasse_invariant, is_isotropic_rational, local_invariants, qp_equivalent,
    rationally_equivalent, relevant_primes, witt_index, witt_index_rational, GlobalInvariants,
    LocalInvariants,
};

/// Upper end of the safety sweep of primes used by global checks.
pub const DEFAULT_PRIME_SWEEP: u64 = 100;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QformError {
    #[error("quadratic form entries must be nonzero")]
    ZeroEntry,
    #[error("quadratic form needs at least one entry")]
    Empty,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("the F_p type needs even dimension, got {0}")]
    OddDimension(u32),
    #[error("the F_p type needs an odd prime, got {0}")]
    EvenPrime(u64),
}

/// A place of `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Infinite,
    Finite(u64),
}

impl Place {
    pub fn finite(p: u64) -> Result<Self, QformError> {
        if crate::exactq::is_prime_u64(p) {
            Ok(Place::Finite(p))
        } else {
            Err(QformError::NotPrime(p))
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinite => write!(f, "inf"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for Place {
    type Err = QformError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "infinity" | "oo" | "∞" | "R" => Ok(Place::Infinite),
            t => {
                let p: u64 = t.parse().map_err(|_| QformError::Parse(s.into()))?;
                Place::finite(p)
            }
        }
    }
}

/// Nondegenerate diagonal form `<a_1, ..., a_d>` over `Q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagonalForm {
    entries: Vec<Rational>,
}

impl DiagonalForm {
    pub fn new(entries: Vec<Rational>) -> Result<Self, QformError> {
        if entries.is_empty() {
            return Err(QformError::Empty);
        }
        if entries.iter().any(Zero::is_zero) {
            return Err(QformError::ZeroEntry);
        }
        Ok(Self { entries })
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self, QformError> {
        Self::new(entries.iter().map(|&a| int(a)).collect())
    }

    /// `b_{m,n} = <1 (m times), -1 (n times)>`.
    pub fn standard(m: u32, n: u32) -> Result<Self, QformError> {
        let entries = std::iter::repeat_n(int(1), m as usize)
            .chain(std::iter::repeat_n(int(-1), n as usize))
            .collect();
        Self::new(entries)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn dim(&self) -> u32 {
        self.entries.len() as u32
    }

    /// Product of the entries (the determinant of the Gram matrix).
    pub fn disc(&self) -> Rational {
        self.entries.iter().fold(int(1), |acc, a| acc * a)
    }

    /// `(positive entries, negative entries)`.
    pub fn signature(&self) -> (u32, u32) {
        let neg = self.entries.iter().filter(|a| a.is_negative()).count() as u32;
        (self.dim() - neg, neg)
    }
}

impl fmt::Display for DiagonalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|a| a.to_string()).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

impl FromStr for DiagonalForm {
    type Err = QformError;

    /// `"1,1,1,-1"`, rationals allowed (`"1/2,-3"`), or the shortcut `"b(m,n)"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let err = || QformError::Parse(s.to_string());
        if let Some(inner) = t.strip_prefix("b(").and_then(|r| r.strip_suffix(')')) {
            let (m, n) = inner.split_once(',').ok_or_else(err)?;
            let m: u32 = m.trim().parse().map_err(|_| err())?;
            let n: u32 = n.trim().parse().map_err(|_| err())?;
            return Self::standard(m, n);
        }
        let entries = t
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| err())?;
        Self::new(entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::rat;

    #[test]
    fn parsing() {
        let f: DiagonalForm = "1,1,1,1,-1".parse().unwrap();
        assert_eq!(f, DiagonalForm::standard(4, 1).unwrap());
        let g: DiagonalForm = "b(8,2)".parse().unwrap();
        assert_eq!(g.dim(), 10);
        assert_eq!(g.signature(), (8, 2));
        let h: DiagonalForm = "1/2, -3".parse().unwrap();
        assert_eq!(h.entries(), &[rat(1, 2), int(-3)]);
        assert_eq!(h.to_string(), "<1/2,-3>");
        assert!("1,0".parse::<DiagonalForm>().is_err());
        assert!("".parse::<DiagonalForm>().is_err());
        assert!("b(1)".parse::<DiagonalForm>().is_err());
    }

    #[test]
    fn places() {
        assert_eq!("inf".parse::<Place>().unwrap(), Place::Infinite);
        assert_eq!("7".parse::<Place>().unwrap(), Place::Finite(7));
        assert_eq!("9".parse::<Place>(), Err(QformError::NotPrime(9)));
    }

    #[test]
    fn discriminant() {
        assert_eq!(DiagonalForm::standard(2, 3).unwrap().disc(), int(-1));
        assert_eq!(
            DiagonalForm::from_ints(&[2, 3, -5]).unwrap().disc(),
            int(-30)
        );
    }
}
