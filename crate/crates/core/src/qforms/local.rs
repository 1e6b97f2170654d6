use std::collections::BTreeMap;

use serde::Serialize;

use super::hilbert::{
    hilbert_symbol, is_local_square, is_rational_square, square_class, support_primes, SquareClass,
};
use super::{DiagonalForm, Place, QformError, DEFAULT_PRIME_SWEEP};
use crate::exactq::{int, Rational};

/// Classification data of a form over one completion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalInvariants {
    pub dimension: u32,
    pub disc_class: SquareClass,
    pub hasse: i8,
    /// Only at the infinite place.
    pub signature: Option<(u32, u32)>,
}

/// `prod_{i<j} (a_i, a_j)_v`.
pub fn hasse_invariant(f: &DiagonalForm, v: Place) -> Result<i8, QformError> {
    let e = f.entries();
    let mut s = 1;
    for i in 0..e.len() {
        for j in (i + 1)..e.len() {
            s *= hilbert_symbol(&e[i], &e[j], v)?;
        }
    }
    Ok(s)
}

pub fn local_invariants(f: &DiagonalForm, v: Place) -> Result<LocalInvariants, QformError> {
    Ok(LocalInvariants {
        dimension: f.dim(),
        disc_class: square_class(&f.disc(), v)?,
        hasse: hasse_invariant(f, v)?,
        signature: matches!(v, Place::Infinite).then(|| f.signature()),
    })
}

/// Isometry over `Q_v`: dimension, discriminant class and Hasse invariant
/// (and the signature at the infinite place).
pub fn qp_equivalent(f: &DiagonalForm, g: &DiagonalForm, v: Place) -> Result<bool, QformError> {
    if f.dim() != g.dim() {
        return Ok(false);
    }
    if v == Place::Infinite {
        return Ok(f.signature() == g.signature());
    }
    Ok(local_invariants(f, v)? == local_invariants(g, v)?)
}

/// Isotropy over `Q_p` from `(dim, disc, hasse)` alone.
fn isotropic_at(dim: u32, disc: &Rational, hasse: i8, p: Place) -> Result<bool, QformError> {
    Ok(match dim {
        0 | 1 => false,
        2 => is_local_square(&-disc, p)?,
        3 => hasse == hilbert_symbol(&int(-1), &-disc, p)?,
        4 => !(is_local_square(disc, p)? && hasse == -hilbert_symbol(&int(-1), &int(-1), p)?),
        _ => true,
    })
}

/// Invariants of `f'` where `f = H + f'` and `H = <1,-1>`:
/// `d(f') = -d(f)` and `s(f') = s(f) (-1, -d(f))`.
fn peel(dim: u32, disc: &Rational, hasse: i8, p: Place) -> Result<(u32, Rational, i8), QformError> {
    let h = hilbert_symbol(&int(-1), &-disc, p)?;
    Ok((dim - 2, -disc, hasse * h))
}

/// Number of hyperbolic planes split off over `Q_v`.
pub fn witt_index(f: &DiagonalForm, v: Place) -> Result<u32, QformError> {
    if v == Place::Infinite {
        let (pos, neg) = f.signature();
        return Ok(pos.min(neg));
    }
    let mut dim = f.dim();
    let mut disc = f.disc();
    let mut hasse = hasse_invariant(f, v)?;
    let mut witt = 0;
    while isotropic_at(dim, &disc, hasse, v)? {
        (dim, disc, hasse) = peel(dim, &disc, hasse, v)?;
        witt += 1;
    }
    Ok(witt)
}

pub fn anisotropic_dim(f: &DiagonalForm, v: Place) -> Result<u32, QformError> {
    Ok(f.dim() - 2 * witt_index(f, v)?)
}

/// `{2}`, the primes dividing some entry, and every prime up to `sweep`.
pub fn relevant_primes(f: &DiagonalForm, sweep: u64) -> Vec<u64> {
    let mut ps: Vec<u64> = crate::sieve(sweep.max(2));
    for a in f.entries() {
        ps.extend(support_primes(a));
    }
    ps.sort_unstable();
    ps.dedup();
    ps
}

/// Global invariants of a rational form, enough to decide rational isotropy
/// and to split off hyperbolic planes without constructing the complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalInvariants {
    pub dim: u32,
    pub disc: Rational,
    pub signature: (u32, u32),
    /// Hasse invariants at the relevant primes; 1 elsewhere.
    pub hasse: BTreeMap<u64, i8>,
}

impl GlobalInvariants {
    pub fn of(f: &DiagonalForm, sweep: u64) -> Result<Self, QformError> {
        let mut hasse = BTreeMap::new();
        for p in relevant_primes(f, sweep) {
            hasse.insert(p, hasse_invariant(f, Place::Finite(p))?);
        }
        Ok(Self {
            dim: f.dim(),
            disc: f.disc(),
            signature: f.signature(),
            hasse,
        })
    }

    /// Hasse–Minkowski.
    pub fn is_isotropic(&self) -> Result<bool, QformError> {
        let (pos, neg) = self.signature;
        match self.dim {
            0 | 1 => Ok(false),
            2 => Ok(is_rational_square(&-&self.disc)),
            _ if pos == 0 || neg == 0 => Ok(false),
            3 | 4 => {
                for (&p, &s) in &self.hasse {
                    if !isotropic_at(self.dim, &self.disc, s, Place::Finite(p))? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            _ => Ok(true),
        }
    }

    /// Invariants of the complement of a hyperbolic plane.
    pub fn split_hyperbolic_plane(&self) -> Result<Self, QformError> {
        let mut hasse = BTreeMap::new();
        for (&p, &s) in &self.hasse {
            let (_, _, s2) = peel(self.dim, &self.disc, s, Place::Finite(p))?;
            hasse.insert(p, s2);
        }
        Ok(Self {
            dim: self.dim - 2,
            disc: -&self.disc,
            signature: (self.signature.0 - 1, self.signature.1 - 1),
            hasse,
        })
    }
}

pub fn is_isotropic_rational(f: &DiagonalForm) -> Result<bool, QformError> {
    GlobalInvariants::of(f, DEFAULT_PRIME_SWEEP)?.is_isotropic()
}

/// Rational Witt index, by repeatedly splitting off hyperbolic planes.
pub fn witt_index_rational(f: &DiagonalForm) -> Result<u32, QformError> {
    let mut inv = GlobalInvariants::of(f, DEFAULT_PRIME_SWEEP)?;
    let mut witt = 0;
    while inv.is_isotropic()? {
        inv = inv.split_hyperbolic_plane()?;
        witt += 1;
    }
    Ok(witt)
}

/// Isometry over `Q`: equal local invariants at infinity and at every prime
/// relevant to either form.
pub fn rationally_equivalent(f: &DiagonalForm, g: &DiagonalForm) -> Result<bool, QformError> {
    if f.dim() != g.dim() || f.signature() != g.signature() {
        return Ok(false);
    }
    let mut primes = relevant_primes(f, DEFAULT_PRIME_SWEEP);
    primes.extend(relevant_primes(g, DEFAULT_PRIME_SWEEP));
    primes.sort_unstable();
    primes.dedup();
    for p in primes {
        if !qp_equivalent(f, g, Place::Finite(p))? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(m: u32, n: u32) -> DiagonalForm {
        DiagonalForm::standard(m, n).unwrap()
    }

    #[test]
    fn hasse_examples() {
        for v in [Place::Infinite, Place::Finite(2), Place::Finite(3)] {
            assert_eq!(
                hasse_invariant(&DiagonalForm::from_ints(&[1, 1]).unwrap(), v).unwrap(),
                1
            );
        }
        assert_eq!(hasse_invariant(&b(1, 1), Place::Finite(2)).unwrap(), 1);
        assert_eq!(hasse_invariant(&b(0, 3), Place::Infinite).unwrap(), -1);
    }

    #[test]
    fn witt_indices_at_two() {
        assert_eq!(witt_index(&b(4, 1), Place::Finite(2)).unwrap(), 1);
        assert_eq!(witt_index(&b(2, 3), Place::Finite(2)).unwrap(), 2);
        assert_eq!(anisotropic_dim(&b(4, 1), Place::Finite(2)).unwrap(), 3);
        assert_eq!(witt_index(&b(3, 0), Place::Finite(2)).unwrap(), 0);
        // <1,1,1> is isotropic at every odd prime
        assert_eq!(witt_index(&b(3, 0), Place::Finite(3)).unwrap(), 1);
    }

    #[test]
    fn real_witt_index() {
        for (m, n) in [(8, 2), (4, 6), (3, 3), (1, 5)] {
            assert_eq!(witt_index(&b(m, n), Place::Infinite).unwrap(), m.min(n));
        }
    }

    #[test]
    fn rational_witt_indices() {
        assert_eq!(witt_index_rational(&b(4, 1)).unwrap(), 1);
        assert_eq!(witt_index_rational(&b(2, 3)).unwrap(), 2);
        assert_eq!(witt_index_rational(&b(3, 0)).unwrap(), 0);
        assert_eq!(witt_index_rational(&b(8, 2)).unwrap(), 2);
        assert_eq!(witt_index_rational(&b(4, 6)).unwrap(), 4);
        // x^2 + y^2 - 3z^2 has no rational zero
        assert!(!is_isotropic_rational(&DiagonalForm::from_ints(&[1, 1, -3]).unwrap()).unwrap());
        assert!(is_isotropic_rational(&DiagonalForm::from_ints(&[1, 1, -2]).unwrap()).unwrap());
        assert!(is_isotropic_rational(&DiagonalForm::from_ints(&[2, -8]).unwrap()).unwrap());
        assert!(!is_isotropic_rational(&DiagonalForm::from_ints(&[1, -2]).unwrap()).unwrap());
    }

    #[test]
    fn qp_equivalence_of_8_2_and_4_6() {
        let (f, g) = (b(8, 2), b(4, 6));
        for p in crate::sieve(97) {
            assert!(qp_equivalent(&f, &g, Place::Finite(p)).unwrap(), "p = {p}");
        }
        assert!(!qp_equivalent(&f, &g, Place::Infinite).unwrap());
        assert!(!rationally_equivalent(&f, &g).unwrap());
        assert!(rationally_equivalent(&f, &f).unwrap());
    }
}
