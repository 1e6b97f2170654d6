use std::fmt;

use serde::Serialize;

use super::hilbert::legendre;
use super::{qp_equivalent, DiagonalForm, Place, QformError, DEFAULT_PRIME_SWEEP};

/// Type of a nondegenerate even-dimensional form over `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FpType {
    /// Orthogonal sum of hyperbolic planes.
    Plus,
    /// Anisotropic kernel of dimension 2.
    Minus,
}

impl FpType {
    /// `+1` for the split type, `-1` otherwise; the twist in `p^l - eps`.
    pub fn epsilon(&self) -> i8 {
        match self {
            FpType::Plus => 1,
            FpType::Minus => -1,
        }
    }
}

impl fmt::Display for FpType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FpType::Plus => "⊕",
            FpType::Minus => "⊖",
        })
    }
}

/// `b_{m,n}` over `F_p` is split iff `disc = (-1)^n` and `(-1)^(d/2)` agree mod
/// squares, i.e. iff `(-1)^(n + d/2)` is a square mod `p`.
pub fn fp_type(m: u32, n: u32, p: u64) -> Result<FpType, QformError> {
    let d = m + n;
    if d % 2 == 1 {
        return Err(QformError::OddDimension(d));
    }
    if p == 2 {
        return Err(QformError::EvenPrime(p));
    }
    Place::finite(p)?;
    let exponent = n + d / 2;
    let square = exponent.is_multiple_of(2) || legendre(&(-1).into(), p) == 1;
    Ok(if square { FpType::Plus } else { FpType::Minus })
}

/// First place where two standard forms fail to be integrally equivalent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GenusWitness {
    Rank,
    Place(u64),
    AllPass { bound: u64 },
}

impl fmt::Display for GenusWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenusWitness::Rank => write!(f, "rank"),
            GenusWitness::Place(p) => write!(f, "p={p}"),
            GenusWitness::AllPass { bound } => write!(f, "all p <= {bound} pass"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusComparison {
    pub equal: bool,
    pub witness: GenusWitness,
}

/// Compares `b_{m,n}` and `b_{m2,n2}` over `Z_p` for all primes.
///
/// Odd `p` (up to `bound`): both lattices are unimodular, so rank and
/// discriminant class decide. Beyond the bound nothing new can happen since
/// only `p mod 4` enters. `p = 2`: odd unimodular `+-1`-diagonal lattices are
/// classified by rank, determinant class and oddity `m - n mod 8`.
pub fn genus_comparison(
    m: u32,
    n: u32,
    m2: u32,
    n2: u32,
    bound: u64,
) -> Result<GenusComparison, QformError> {
    if m + n != m2 + n2 {
        return Ok(GenusComparison {
            equal: false,
            witness: GenusWitness::Rank,
        });
    }
    let f = DiagonalForm::standard(m, n)?;
    let g = DiagonalForm::standard(m2, n2)?;
    for p in crate::sieve(bound.max(5)).into_iter().skip(1) {
        if !qp_equivalent(&f, &g, Place::Finite(p))? {
            return Ok(GenusComparison {
                equal: false,
                witness: GenusWitness::Place(p),
            });
        }
    }
    let det_class_equal = n % 2 == n2 % 2;
    let oddity_equal = (m as i64 - n as i64 - m2 as i64 + n2 as i64).rem_euclid(8) == 0;
    if !(det_class_equal && oddity_equal) {
        return Ok(GenusComparison {
            equal: false,
            witness: GenusWitness::Place(2),
        });
    }
    Ok(GenusComparison {
        equal: true,
        witness: GenusWitness::AllPass {
            bound: bound.max(5),
        },
    })
}

pub fn genus_equal_finite_places(m: u32, n: u32, m2: u32, n2: u32) -> Result<bool, QformError> {
    Ok(genus_comparison(m, n, m2, n2, DEFAULT_PRIME_SWEEP)?.equal)
}
