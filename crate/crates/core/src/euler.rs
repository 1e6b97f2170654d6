//! Euler characteristics of `Gamma_{m,n}`, the level-4 principal congruence
//! subgroup of `Spin(m,n)(Z)`, and the invariants that only depend on them.
//!
//! [`chi_closed`] evaluates the closed formula. [`adelic_assembly_exact`]
//! rebuilds the same number from its factors: Weyl ratio, compact dual volume,
//! the 2-adic volume `4^(-d(d-1)/2)` and the odd Euler product written in terms
//! of zeta and `L(psi, s)` values. [`adelic_assembly_float`] truncates the odd
//! Euler product instead.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exactq::{
    binomial, factor_rational, gen_bernoulli_mod4, int, l_psi_exact_odd, pow2, zeta_even_exact,
    zeta_negative_odd, ExactError, FactoredRational, PiExact, Rational,
};
use crate::ggroups::{
    spin_volume_fp, vol_compact_dual, weyl_ratio, GgroupError, SpinGroupDescriptor,
};
use crate::qforms::{Place, QformError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EulerError {
    #[error("need m, n >= 1 and m + n >= 3, got ({m}, {n})")]
    InvalidPair { m: u32, n: u32 },
    #[error("the adelic formula needs m or n even, got ({m}, {n})")]
    BothOdd { m: u32, n: u32 },
    #[error("prime bound must be at least 100, got {0}")]
    PrimeBoundTooSmall(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("assembly left pi^({0}/2)")]
    ResidualPi(i64),
    #[error("assembly disagrees with the closed form: {assembled} vs {closed}")]
    Mismatch { assembled: String, closed: String },
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Ggroup(#[from] GgroupError),
    #[error(transparent)]
    Qform(#[from] QformError),
}

impl EulerError {
    /// Whether the error indicates a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            EulerError::ResidualPi(_)
                | EulerError::Mismatch { .. }
                | EulerError::Exact(ExactError::PiPowerMismatch { .. })
        )
    }
}

/// Which branch of the formula applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// `d = 0 mod 4`.
    ZeroMod4,
    /// `d = 2 mod 4`.
    TwoMod4,
    /// `d` odd.
    Odd,
    /// `m`, `n` both odd; `chi = 0`.
    BothOdd,
}

impl CaseTag {
    pub fn of(desc: &SpinGroupDescriptor) -> Self {
        if desc.delta() == 1 {
            return CaseTag::BothOdd;
        }
        match desc.d() % 4 {
            0 => CaseTag::ZeroMod4,
            2 => CaseTag::TwoMod4,
            _ => CaseTag::Odd,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::ZeroMod4 => "d=0 mod 4",
            CaseTag::TwoMod4 => "d=2 mod 4",
            CaseTag::Odd => "d odd",
            CaseTag::BothOdd => "m,n odd",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CaseTag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerResult {
    pub value: Rational,
    /// `None` for zero.
    pub factored: Option<FactoredRational>,
    pub sign: i8,
    pub descriptor: SpinGroupDescriptor,
    pub case_tag: CaseTag,
}

impl Serialize for EulerResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("EulerResult", 4)?;
        st.serialize_field("value", &self.value.to_string())?;
        st.serialize_field("factored", &self.factored_string())?;
        st.serialize_field("sign", &self.sign)?;
        st.serialize_field("case", &self.case_tag)?;
        st.end()
    }
}

impl EulerResult {
    pub fn factored_string(&self) -> String {
        match &self.factored {
            Some(f) => f.to_string(),
            None => "0".into(),
        }
    }
}

fn descriptor(m: u32, n: u32) -> Result<SpinGroupDescriptor, EulerError> {
    let desc = SpinGroupDescriptor::new(m, n).map_err(|_| EulerError::InvalidPair { m, n })?;
    if desc.d() < 3 {
        return Err(EulerError::InvalidPair { m, n });
    }
    Ok(desc)
}

fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// `(-1)^(mn/2)`; only meaningful for even `mn`.
fn parity_sign(desc: &SpinGroupDescriptor) -> i8 {
    if (desc.dim_x() / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The factor `R(d)`.
pub fn r_factor(d: u32) -> Result<Rational, EulerError> {
    if d < 3 {
        return Err(EulerError::InvalidPair { m: d, n: 0 });
    }
    let l = i64::from(d / 2);
    let value = match d % 4 {
        0 => {
            let z = zeta_negative_odd(d / 4)?;
            pow2(5 * l * l - 4 * l) * (pow2(l) - int(1)) * z.abs()
        }
        2 => {
            assert!(l % 2 == 1, "d = 2 mod 4 forces odd l");
            let b = gen_bernoulli_mod4(d / 2)?;
            pow2(5 * l * l - 5 * l + 1) * b.abs() / int(l)
        }
        _ => {
            let z = zeta_negative_odd((d - 1) / 2)?;
            pow2(5 * l * l) * (pow2(i64::from(d) - 1) - int(1)) * z.abs()
        }
    };
    Ok(value)
}

/// `prod_{j=1}^{l-1} (2^(2j) - 1) |zeta(1 - 2j)|`.
pub fn zeta_product(ell: u32) -> Result<Rational, EulerError> {
    let mut acc = int(1);
    for j in 1..ell {
        acc *= (pow2(2 * i64::from(j)) - int(1)) * zeta_negative_odd(j)?.abs();
    }
    Ok(acc)
}

pub fn chi_closed(m: u32, n: u32) -> Result<EulerResult, EulerError> {
    let desc = descriptor(m, n)?;
    let case_tag = CaseTag::of(&desc);
    let value = if case_tag == CaseTag::BothOdd {
        Rational::zero()
    } else {
        let l = desc.ell();
        let c = int(binomial(l, desc.k()));
        int(parity_sign(&desc)) * r_factor(desc.d())? * c * zeta_product(l)?
    };
    let factored = if value.is_zero() {
        None
    } else {
        Some(factor_rational(&value)?)
    };
    Ok(EulerResult {
        sign: sign_of(&value),
        value,
        factored,
        descriptor: desc,
        case_tag,
    })
}

/// The factors of the adelic volume formula, kept separate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdelicAssembly {
    pub descriptor: SpinGroupDescriptor,
    pub case_tag: CaseTag,
    pub tamagawa: Rational,
    pub weyl_ratio: Rational,
    pub vol_dual: PiExact,
    /// Volume of `Spin(Z_2)` level-4 subgroup, `2^(-d(d-1))`.
    pub local_2_volume: Rational,
    /// `prod_{p odd} p^(dim G) / |G(F_p)|` as a zeta/L expression.
    pub odd_product_exact: PiExact,
    pub sign_factor: i8,
}

impl AdelicAssembly {
    /// Product of all factors; the `pi` powers must cancel.
    pub fn value(&self) -> PiExact {
        let r = int(self.sign_factor) * &self.tamagawa * &self.weyl_ratio / &self.local_2_volume;
        PiExact::rational(r) / self.vol_dual.clone() * self.odd_product_exact.clone()
    }
}

/// `zeta(2j)(1 - 2^(-2j))`.
fn zeta_even_odd_part(j: u32) -> Result<PiExact, EulerError> {
    Ok(zeta_even_exact(j)? * PiExact::rational(int(1) - pow2(-2 * i64::from(j))))
}

/// The odd-prime Euler product in closed form.
fn odd_euler_product(desc: &SpinGroupDescriptor, case_tag: CaseTag) -> Result<PiExact, EulerError> {
    let l = desc.ell();
    let mut acc = match case_tag {
        CaseTag::ZeroMod4 => {
            // zeta(l)(1 - 2^-l), l even
            zeta_even_exact(l / 2)? * PiExact::rational(int(1) - pow2(-i64::from(l)))
        }
        CaseTag::TwoMod4 => l_psi_exact_odd(l)?,
        CaseTag::Odd => zeta_even_odd_part(l)?,
        CaseTag::BothOdd => unreachable!("rejected by caller"),
    };
    for j in 1..l {
        acc = acc * zeta_even_odd_part(j)?;
    }
    Ok(acc)
}

pub fn adelic_assembly(m: u32, n: u32) -> Result<AdelicAssembly, EulerError> {
    let desc = descriptor(m, n)?;
    let case_tag = CaseTag::of(&desc);
    if case_tag == CaseTag::BothOdd {
        return Err(EulerError::BothOdd { m, n });
    }
    let d = i64::from(desc.d());
    Ok(AdelicAssembly {
        descriptor: desc,
        case_tag,
        tamagawa: int(1),
        weyl_ratio: weyl_ratio(&desc),
        vol_dual: vol_compact_dual(desc.d())?,
        local_2_volume: pow2(-d * (d - 1)),
        odd_product_exact: odd_euler_product(&desc, case_tag)?,
        sign_factor: parity_sign(&desc),
    })
}

pub fn adelic_assembly_exact(m: u32, n: u32) -> Result<Rational, EulerError> {
    let v = adelic_assembly(m, n)?.value();
    if v.half_pi_power() != 0 {
        return Err(EulerError::ResidualPi(v.half_pi_power()));
    }
    Ok(v.coeff().clone())
}

/// The adelic formula with the odd Euler product truncated at `prime_bound`.
/// Accumulated in log space.
pub fn adelic_assembly_float(m: u32, n: u32, prime_bound: u64) -> Result<f64, EulerError> {
    if prime_bound < 100 {
        return Err(EulerError::PrimeBoundTooSmall(prime_bound));
    }
    let a = adelic_assembly(m, n)?;
    let desc = a.descriptor;
    let mut log_product = 0.0;
    for p in crate::sieve(prime_bound).into_iter().skip(1) {
        let vol = spin_volume_fp(&desc, p)?
            .to_f64()
            .expect("volume in (0, 1]");
        log_product -= vol.ln();
    }
    let d = f64::from(desc.d());
    let log_abs = a.weyl_ratio.to_f64().expect("finite").ln() - a.vol_dual.to_f64().ln()
        + d * (d - 1.0) * std::f64::consts::LN_2
        + log_product;
    Ok(f64::from(a.sign_factor) * log_abs.exp())
}

/// Sign of `chi` from `(m, n)` alone.
pub fn chi_sign(m: u32, n: u32) -> Result<i8, EulerError> {
    let desc = SpinGroupDescriptor::new(m, n).map_err(|_| EulerError::InvalidPair { m, n })?;
    Ok(if desc.delta() == 1 {
        0
    } else {
        parity_sign(&desc)
    })
}

/// Value of a Novikov–Shubin invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NsValue {
    Finite(u32),
    /// The `infinity^+` marker.
    InfinityPlus,
}

impl Serialize for NsValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            NsValue::Finite(v) => s.serialize_u32(*v),
            NsValue::InfinityPlus => s.serialize_str("inf+"),
        }
    }
}

impl fmt::Display for NsValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NsValue::Finite(v) => write!(f, "{v}"),
            NsValue::InfinityPlus => write!(f, "∞⁺"),
        }
    }
}

/// l2-Betti numbers, Novikov–Shubin invariants and l2-torsion sign.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct L2Profile {
    pub betti_degree: Option<u32>,
    #[serde(serialize_with = "ser_rational")]
    pub betti_value: Rational,
    /// Inclusive; `None` when empty.
    pub ns_range: Option<(u32, u32)>,
    /// Value on `ns_range`; `infinity^+` in all other degrees.
    pub ns_value: NsValue,
    pub torsion_sign: i8,
}

impl L2Profile {
    pub fn novikov_shubin(&self, degree: u32) -> NsValue {
        match self.ns_range {
            Some((a, b)) if (a..=b).contains(&degree) => self.ns_value,
            _ => NsValue::InfinityPlus,
        }
    }

    /// `sum_p (-1)^p b_p`.
    pub fn alternating_betti_sum(&self) -> Rational {
        match self.betti_degree {
            Some(k) if k % 2 == 1 => -self.betti_value.clone(),
            Some(_) => self.betti_value.clone(),
            None => Rational::zero(),
        }
    }
}

pub fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub fn l2_profile(m: u32, n: u32) -> Result<L2Profile, EulerError> {
    let chi = chi_closed(m, n)?;
    let desc = chi.descriptor;
    let dim = desc.dim_x();
    let delta = desc.delta();
    Ok(if delta == 0 {
        L2Profile {
            betti_degree: Some(dim / 2),
            betti_value: chi.value.abs(),
            ns_range: None,
            ns_value: NsValue::Finite(0),
            torsion_sign: 0,
        }
    } else {
        L2Profile {
            betti_degree: None,
            betti_value: Rational::zero(),
            ns_range: Some(((dim - delta) / 2, (dim + delta) / 2 - 1)),
            ns_value: NsValue::Finite(delta),
            torsion_sign: if ((dim - 1) / 2) % 2 == 0 { 1 } else { -1 },
        }
    })
}

/// `chi(A * B) = chi(A) + chi(B) - 1`.
pub fn chi_free_product(a: &Rational, b: &Rational) -> Rational {
    a + b - int(1)
}

pub fn chi_direct_product(a: &Rational, b: &Rational) -> Rational {
    a * b
}

/// `rho(Gamma x Lambda) = chi(Gamma) rho(Lambda)`.
pub fn rho_product(chi: &Rational, rho: &Rational) -> Rational {
    chi * rho
}

/// `chi` of a free group of rank `r`.
pub fn chi_free_group(rank: &BigInt) -> Rational {
    int(1) - Rational::from_integer(rank.clone())
}

/// Sign of the Euler–Poincaré measure of `Spin(b_{m,n})` over `Z[1/S]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SArithmeticReport {
    pub m: u32,
    pub n: u32,
    pub primes: Vec<u64>,
    /// Witt index at each place of `S` and at infinity.
    pub local_ranks: Vec<(String, u32)>,
    pub rank_s: u32,
    pub rank_q: u32,
    pub sign: i8,
    /// Set when `dim X` is odd and the measure vanishes.
    pub flagged: bool,
}

/// `(-1)^(dim X / 2) (-1)^(rank_Q)`; the arithmetic sign when `S` is empty.
pub fn s_arithmetic_sign(m: u32, n: u32, primes: &[u64]) -> Result<SArithmeticReport, EulerError> {
    let desc = SpinGroupDescriptor::new(m, n).map_err(|_| EulerError::InvalidPair { m, n })?;
    let mut primes: Vec<u64> = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    let mut local_ranks = vec![("inf".to_string(), desc.witt_index_at(Place::Infinite)?)];
    for &p in &primes {
        let place = Place::finite(p).map_err(|_| EulerError::NotPrime(p))?;
        local_ranks.push((p.to_string(), desc.witt_index_at(place)?));
    }
    let rank_s = local_ranks.iter().map(|(_, r)| r).sum();
    let rank_q = desc.witt_index_rational()?;
    let flagged = desc.dim_x() % 2 == 1;
    let sign = if flagged {
        0
    } else if primes.is_empty() {
        chi_sign(m, n)?
    } else {
        let s = parity_sign(&desc) as i32 * if rank_q % 2 == 0 { 1 } else { -1 };
        s as i8
    };
    Ok(SArithmeticReport {
        m,
        n,
        primes,
        local_ranks,
        rank_s,
        rank_q,
        sign,
        flagged,
    })
}

/// Machine-readable summary of one `Gamma_{m,n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiReport {
    pub m: u32,
    pub n: u32,
    pub d: u32,
    #[serde(rename = "dimX")]
    pub dim_x: u32,
    pub delta: u32,
    pub chi: String,
    pub chi_rational: String,
    pub sign: i8,
    pub case: CaseTag,
    pub l2: L2Profile,
}

pub fn chi_report(m: u32, n: u32) -> Result<ChiReport, EulerError> {
    let chi = chi_closed(m, n)?;
    let desc = chi.descriptor;
    Ok(ChiReport {
        m,
        n,
        d: desc.d(),
        dim_x: desc.dim_x(),
        delta: desc.delta(),
        chi: chi.factored_string(),
        chi_rational: chi.value.to_string(),
        sign: chi.sign,
        case: chi.case_tag,
        l2: l2_profile(m, n)?,
    })
}
