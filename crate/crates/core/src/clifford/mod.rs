//! Clifford algebras `C(V_A, b_{m,n})` over a runtime-supplied commutative ring.
//!
//! Elements are finitely supported maps from [`Blade`]s to ring elements. The
//! [`Clifford`] value carries the signature and the ring and implements all
//! arithmetic; [`Multivector`]s are plain data.

mod blade;
pub mod exp_log;
mod ring;

use std::collections::BTreeMap;

use thiserror::Error;

pub use blade::{blade_mul, Blade, Signature, MAX_DIM};
pub use ring::{Dual, DualNumbers, Integers, Rationals, Ring, ZMod};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("invalid signature ({m},{n}): need 1 <= m + n <= 63")]
    InvalidSignature { m: u32, n: u32 },
    #[error("signature mismatch: ({0},{1}) vs ({2},{3})")]
    SignatureMismatch(u32, u32, u32, u32),
    #[error("blade {0} does not fit dimension {1}")]
    BladeOutOfRange(String, u32),
    #[error("element has odd-grade support")]
    OddSupport,
    #[error("ring {0} cannot describe its annihilator of 2")]
    NoAnnihilatorData(String),
    #[error("coefficient {coeff} of {blade} is not 2-adically integral")]
    NonIntegral { blade: String, coeff: String },
    #[error("exp needs an argument in 4*C_0 (coefficient of {0} not divisible by 4)")]
    NotInFourC0(String),
    #[error("log needs an argument congruent to 1 mod 4 (coefficient of {0})")]
    NotOneModFour(String),
    #[error("precision must be between 2 and 63 bits, got {0}")]
    BadPrecision(u32),
}

/// Element of a Clifford algebra; no explicitly stored zero coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector<E> {
    sig: Signature,
    terms: BTreeMap<Blade, E>,
}

impl<E: Clone> Multivector<E> {
    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn terms(&self) -> &BTreeMap<Blade, E> {
        &self.terms
    }

    pub fn coeff(&self, blade: Blade) -> Option<&E> {
        self.terms.get(&blade)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient-wise change of ring. The caller supplies the target ring so
    /// zero images are dropped.
    pub fn map_coeffs<R: Ring>(
        &self,
        target: &R,
        f: impl Fn(&E) -> R::Elem,
    ) -> Multivector<R::Elem> {
        let terms = self
            .terms
            .iter()
            .map(|(b, c)| (*b, f(c)))
            .filter(|(_, c)| !target.is_zero(c))
            .collect();
        Multivector {
            sig: self.sig,
            terms,
        }
    }
}

/// The algebra itself: a signature and a coefficient ring.
#[derive(Debug, Clone)]
pub struct Clifford<R: Ring> {
    sig: Signature,
    ring: R,
}

impl<R: Ring> Clifford<R> {
    pub fn new(sig: Signature, ring: R) -> Self {
        Self { sig, ring }
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn zero(&self) -> Multivector<R::Elem> {
        Multivector {
            sig: self.sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> Multivector<R::Elem> {
        self.scalar(self.ring.one())
    }

    pub fn scalar(&self, c: R::Elem) -> Multivector<R::Elem> {
        self.term(c, Blade::EMPTY)
            .expect("the empty blade fits every signature")
    }

    pub fn term(&self, c: R::Elem, blade: Blade) -> Result<Multivector<R::Elem>, CliffordError> {
        self.from_terms([(blade, c)])
    }

    pub fn blade(&self, blade: Blade) -> Result<Multivector<R::Elem>, CliffordError> {
        self.term(self.ring.one(), blade)
    }

    /// Basis vector `e_i` (1-based).
    pub fn vector(&self, i: u32) -> Multivector<R::Elem> {
        self.blade(Blade::from_indices(&[i]))
            .expect("basis vector index within dimension")
    }

    /// Sums repeated blades and drops zero coefficients.
    pub fn from_terms(
        &self,
        terms: impl IntoIterator<Item = (Blade, R::Elem)>,
    ) -> Result<Multivector<R::Elem>, CliffordError> {
        let mut out = self.zero();
        for (b, c) in terms {
            if !b.fits(self.sig.dim()) {
                return Err(CliffordError::BladeOutOfRange(
                    b.to_string(),
                    self.sig.dim(),
                ));
            }
            self.accumulate(&mut out.terms, b, c);
        }
        Ok(out)
    }

    fn accumulate(&self, terms: &mut BTreeMap<Blade, R::Elem>, b: Blade, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        match terms.get_mut(&b) {
            Some(existing) => {
                let sum = self.ring.add(existing, &c);
                if self.ring.is_zero(&sum) {
                    terms.remove(&b);
                } else {
                    *existing = sum;
                }
            }
            None => {
                terms.insert(b, c);
            }
        }
    }

    fn check(&self, x: &Multivector<R::Elem>) -> Result<(), CliffordError> {
        if x.sig != self.sig {
            return Err(CliffordError::SignatureMismatch(
                self.sig.m(),
                self.sig.n(),
                x.sig.m(),
                x.sig.n(),
            ));
        }
        Ok(())
    }

    pub fn add(
        &self,
        x: &Multivector<R::Elem>,
        y: &Multivector<R::Elem>,
    ) -> Result<Multivector<R::Elem>, CliffordError> {
        self.check(x)?;
        self.check(y)?;
        let mut out = x.clone();
        for (b, c) in &y.terms {
            self.accumulate(&mut out.terms, *b, c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self, x: &Multivector<R::Elem>) -> Multivector<R::Elem> {
        self.map_signs(x, |_| -1)
    }

    pub fn sub(
        &self,
        x: &Multivector<R::Elem>,
        y: &Multivector<R::Elem>,
    ) -> Result<Multivector<R::Elem>, CliffordError> {
        self.add(x, &self.neg(y))
    }

    pub fn scale(&self, c: &R::Elem, x: &Multivector<R::Elem>) -> Multivector<R::Elem> {
        let terms = x
            .terms
            .iter()
            .map(|(b, v)| (*b, self.ring.mul(c, v)))
            .filter(|(_, v)| !self.ring.is_zero(v))
            .collect();
        Multivector { sig: x.sig, terms }
    }

    pub fn mul(
        &self,
        x: &Multivector<R::Elem>,
        y: &Multivector<R::Elem>,
    ) -> Result<Multivector<R::Elem>, CliffordError> {
        self.check(x)?;
        self.check(y)?;
        let mut terms = BTreeMap::new();
        for (bj, cj) in &x.terms {
            for (bk, ck) in &y.terms {
                let (sign, b) = blade_mul(*bj, *bk, self.sig);
                let mut c = self.ring.mul(cj, ck);
                if sign < 0 {
                    c = self.ring.neg(&c);
                }
                self.accumulate(&mut terms, b, c);
            }
        }
        Ok(Multivector {
            sig: self.sig,
            terms,
        })
    }

    /// `x^k` for `k >= 0`.
    pub fn pow(
        &self,
        x: &Multivector<R::Elem>,
        k: u32,
    ) -> Result<Multivector<R::Elem>, CliffordError> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    fn map_signs(
        &self,
        x: &Multivector<R::Elem>,
        sign: impl Fn(Blade) -> i8,
    ) -> Multivector<R::Elem> {
        let terms = x
            .terms
            .iter()
            .map(|(b, c)| {
                let c = if sign(*b) < 0 {
                    self.ring.neg(c)
                } else {
                    c.clone()
                };
                (*b, c)
            })
            .collect();
        Multivector { sig: x.sig, terms }
    }

    /// The anti-automorphism fixing `V`.
    pub fn iota(&self, x: &Multivector<R::Elem>) -> Multivector<R::Elem> {
        self.map_signs(x, |b| b.reversion_sign())
    }

    pub fn grade_involution(&self, x: &Multivector<R::Elem>) -> Multivector<R::Elem> {
        self.map_signs(x, |b| b.grade_sign())
    }

    /// `x -> iota(x')`, acting on blades by `(-1)^(|J|(|J|+1)/2)`.
    pub fn conjugate(&self, x: &Multivector<R::Elem>) -> Multivector<R::Elem> {
        self.map_signs(x, |b| b.conjugation_sign())
    }

    /// Commutator `xy - yx`.
    pub fn bracket(
        &self,
        x: &Multivector<R::Elem>,
        y: &Multivector<R::Elem>,
    ) -> Result<Multivector<R::Elem>, CliffordError> {
        self.sub(&self.mul(x, y)?, &self.mul(y, x)?)
    }

    pub fn is_even(&self, x: &Multivector<R::Elem>) -> bool {
        x.terms.keys().all(|b| b.grade() % 2 == 0)
    }

    /// `g` is even, `g * conj(g) = 1`, and `g e_i conj(g)` is a vector for every
    /// basis vector `e_i`. Only basis vectors are checked; surjectivity onto
    /// `V_A` is not tested separately.
    pub fn is_spin_element(&self, g: &Multivector<R::Elem>) -> Result<bool, CliffordError> {
        self.check(g)?;
        if !self.is_even(g) {
            return Err(CliffordError::OddSupport);
        }
        let gbar = self.conjugate(g);
        if self.mul(g, &gbar)? != self.one() {
            return Ok(false);
        }
        for i in 1..=self.sig.dim() {
            let image = self.mul(&self.mul(g, &self.vector(i))?, &gbar)?;
            if image.terms.keys().any(|b| b.grade() != 1) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Generators of `Lie(Spin)(A)`: every `e(J)` with `|J| = 2`, plus `a e(J)`
    /// for even `|J| != 2` and `a` running over generators of `ann(2A)`.
    pub fn lie_algebra_basis(&self) -> Result<Vec<Multivector<R::Elem>>, CliffordError> {
        let ann = self
            .ring
            .ann2_generators()
            .ok_or_else(|| CliffordError::NoAnnihilatorData(self.ring.name()))?;
        let d = self.sig.dim();
        let mut blades: Vec<Blade> = (0..(1u64 << d))
            .map(Blade::from_bits)
            .filter(|b| b.grade() % 2 == 0)
            .collect();
        blades.sort_by_key(|b| (b.grade() != 2, b.grade(), *b));
        let mut out = Vec::new();
        for b in blades {
            if b.grade() == 2 {
                out.push(self.blade(b)?);
            } else {
                for a in &ann {
                    out.push(self.term(a.clone(), b)?);
                }
            }
        }
        Ok(out)
    }

    /// Debug rendering such as `3*e{1,2} + -1*e{}`.
    pub fn format(&self, x: &Multivector<R::Elem>) -> String {
        format_multivector(x)
    }
}

/// Renders `c*e{...}` terms joined by `" + "`; the zero element prints as `0`.
pub fn format_multivector<E: std::fmt::Display + Clone>(x: &Multivector<E>) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.terms
        .iter()
        .map(|(b, c)| format!("{c}*{b}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn z(m: u32, n: u32) -> Clifford<Integers> {
        Clifford::new(Signature::new(m, n).unwrap(), Integers)
    }

    fn b(ix: &[u32]) -> Blade {
        Blade::from_indices(ix)
    }

    #[test]
    fn product_examples() {
        let alg = z(1, 1);
        let e1 = alg.vector(1);
        let one = alg.one();
        let p = alg.add(&one, &e1).unwrap();
        let q = alg.sub(&one, &e1).unwrap();
        assert!(alg.mul(&p, &q).unwrap().is_zero());

        let alg = z(2, 0);
        let e12 = alg.blade(b(&[1, 2])).unwrap();
        assert_eq!(alg.mul(&e12, &e12).unwrap(), alg.scalar(BigInt::from(-1)));
    }

    #[test]
    fn signature_mismatch_is_an_error() {
        let a = z(2, 0);
        let c = z(1, 1);
        assert!(matches!(
            a.mul(&a.one(), &c.one()),
            Err(CliffordError::SignatureMismatch(..))
        ));
    }

    #[test]
    fn involution_examples() {
        let alg = z(3, 0);
        let e12 = alg.blade(b(&[1, 2])).unwrap();
        assert_eq!(alg.conjugate(&e12), alg.neg(&e12));
        let e123 = alg.blade(b(&[1, 2, 3])).unwrap();
        assert_eq!(alg.iota(&e123), alg.neg(&e123));
        assert_eq!(alg.conjugate(&alg.one()), alg.one());
    }

    #[test]
    fn spin_membership_examples() {
        let alg = z(2, 0);
        assert!(alg.is_spin_element(&alg.one()).unwrap());
        let e12 = alg.blade(b(&[1, 2])).unwrap();
        assert!(alg.is_spin_element(&e12).unwrap());
        let g = alg.add(&alg.one(), &e12).unwrap();
        assert!(!alg.is_spin_element(&g).unwrap());
        assert_eq!(
            alg.is_spin_element(&alg.vector(1)),
            Err(CliffordError::OddSupport)
        );
    }

    #[test]
    fn bracket_examples() {
        let alg = z(3, 0);
        let e12 = alg.blade(b(&[1, 2])).unwrap();
        let e23 = alg.blade(b(&[2, 3])).unwrap();
        assert!(alg.bracket(&e12, &e12).unwrap().is_zero());
        let expected = alg.term(BigInt::from(2), b(&[1, 3])).unwrap();
        assert_eq!(alg.bracket(&e12, &e23).unwrap(), expected);
    }

    #[test]
    fn lie_basis_examples() {
        let alg = z(2, 1);
        let basis = alg.lie_algebra_basis().unwrap();
        let expected: Vec<_> = [b(&[1, 2]), b(&[1, 3]), b(&[2, 3])]
            .into_iter()
            .map(|x| alg.blade(x).unwrap())
            .collect();
        assert_eq!(basis, expected);

        let alg = Clifford::new(Signature::new(2, 2).unwrap(), ZMod::new(4));
        let basis = alg.lie_algebra_basis().unwrap();
        assert_eq!(basis.len(), 8);
        assert_eq!(
            basis
                .iter()
                .filter(|x| x.terms().keys().all(|k| k.grade() == 2))
                .count(),
            6
        );
        assert!(basis.contains(&alg.scalar(2)));
        assert!(basis.contains(&alg.term(2, b(&[1, 2, 3, 4])).unwrap()));

        let alg = Clifford::new(Signature::new(1, 1).unwrap(), Rationals);
        assert_eq!(
            alg.lie_algebra_basis().unwrap(),
            vec![alg.blade(b(&[1, 2])).unwrap()]
        );
    }

    #[test]
    fn formatting() {
        let alg = z(2, 0);
        let x = alg
            .from_terms([
                (b(&[1, 2]), BigInt::from(3)),
                (Blade::EMPTY, BigInt::from(-1)),
            ])
            .unwrap();
        assert_eq!(alg.format(&x), "-1*e{} + 3*e{1,2}");
        assert_eq!(alg.format(&alg.zero()), "0");
    }

    #[test]
    fn blades_outside_dimension_rejected() {
        let alg = z(2, 0);
        assert!(alg.blade(b(&[3])).is_err());
    }
}
