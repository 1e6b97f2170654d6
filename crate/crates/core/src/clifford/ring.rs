use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactq::Rational;

/// Commutative coefficient ring, supplied at runtime so one element type can
/// serve `Z`, `Q`, `F_p`, `Z/2^N` and dual numbers over any of these.
pub trait Ring: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// Module generators of `ann(2A) = {a : 2a = 0}`, when the ring can list them.
    fn ann2_generators(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    fn in_ann2(&self, a: &Self::Elem) -> bool {
        self.is_zero(&self.add(a, a))
    }

    /// Inverse of an odd element, for rings `Z/2^N`.
    fn invert_odd(&self, _a: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    fn name(&self) -> String;
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn ann2_generators(&self) -> Option<Vec<BigInt>> {
        Some(Vec::new())
    }
    fn name(&self) -> String {
        "Z".into()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn from_i64(&self, n: i64) -> Rational {
        Rational::from_integer(n.into())
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn ann2_generators(&self) -> Option<Vec<Rational>> {
        Some(Vec::new())
    }
    fn name(&self) -> String {
        "Q".into()
    }
}

/// `Z/nZ` with elements stored as reduced `u64`; covers `F_p` and `Z/2^N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZMod {
    modulus: u64,
}

impl ZMod {
    pub fn new(modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        Self { modulus }
    }

    /// `Z/2^bits`.
    pub fn pow2(bits: u32) -> Self {
        assert!((1..=63).contains(&bits));
        Self::new(1u64 << bits)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn reduce(&self, n: &BigInt) -> u64 {
        let m = BigInt::from(self.modulus);
        let r = ((n % &m) + &m) % &m;
        u64::try_from(r).expect("reduced residue fits")
    }
}

impl Ring for ZMod {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.modulus
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.modulus as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.modulus - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.modulus as u128) as u64
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.modulus as i64) as u64
    }
    fn ann2_generators(&self) -> Option<Vec<u64>> {
        if self.modulus.is_multiple_of(2) {
            Some(vec![self.modulus / 2])
        } else {
            Some(Vec::new())
        }
    }
    fn invert_odd(&self, a: &u64) -> Option<u64> {
        // Extended Euclid; fails when gcd(a, n) != 1.
        let (mut r0, mut r1) = (self.modulus as i128, *a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        (r0 == 1).then(|| t0.rem_euclid(self.modulus as i128) as u64)
    }
    fn name(&self) -> String {
        format!("Z/{}", self.modulus)
    }
}

/// `a + b*eps` with `eps^2 = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dual<E> {
    pub re: E,
    pub eps: E,
}

impl<E: fmt::Display> fmt::Display for Dual<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+{}eps)", self.re, self.eps)
    }
}

/// The dual numbers `A[eps]`, used to test Lie algebra membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualNumbers<R> {
    pub base: R,
}

impl<R: Ring> DualNumbers<R> {
    pub fn new(base: R) -> Self {
        Self { base }
    }

    pub fn pure(&self, a: R::Elem) -> Dual<R::Elem> {
        Dual {
            re: a,
            eps: self.base.zero(),
        }
    }

    pub fn infinitesimal(&self, b: R::Elem) -> Dual<R::Elem> {
        Dual {
            re: self.base.zero(),
            eps: b,
        }
    }
}

impl<R: Ring> Ring for DualNumbers<R> {
    type Elem = Dual<R::Elem>;

    fn zero(&self) -> Self::Elem {
        self.pure(self.base.zero())
    }
    fn one(&self) -> Self::Elem {
        self.pure(self.base.one())
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Dual {
            re: self.base.add(&a.re, &b.re),
            eps: self.base.add(&a.eps, &b.eps),
        }
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Dual {
            re: self.base.neg(&a.re),
            eps: self.base.neg(&a.eps),
        }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Dual {
            re: self.base.mul(&a.re, &b.re),
            eps: self
                .base
                .add(&self.base.mul(&a.re, &b.eps), &self.base.mul(&a.eps, &b.re)),
        }
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.pure(self.base.from_i64(n))
    }
    fn ann2_generators(&self) -> Option<Vec<Self::Elem>> {
        let gens = self.base.ann2_generators()?;
        let mut out: Vec<_> = gens.iter().cloned().map(|g| self.pure(g)).collect();
        out.extend(gens.into_iter().map(|g| self.infinitesimal(g)));
        Some(out)
    }
    fn name(&self) -> String {
        format!("{}[eps]", self.base.name())
    }
}
