//! Truncated exponential and logarithm on `4 C_0` over `Z/2^N`.
//!
//! Both series are summed over exact rationals from an integer lift and only
//! reduced at the end. Every coefficient must have odd denominator; a coefficient
//! with even denominator means the input violated the precondition.
//!
//! For `x` with all coefficients of 2-adic valuation at least `v >= 2`, the term
//! `x^k / k!` has valuation at least `v k - (k - 1)` and `x^k / k` at least
//! `v k - floor(log2 k)`. Both bounds increase with `k`, so the series stop at
//! the first index where the bound reaches `N`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{Clifford, CliffordError, Integers, Multivector, Rationals, Ring, Signature, ZMod};
use crate::exactq::Rational;

fn check_bits(bits: u32) -> Result<(), CliffordError> {
    if (2..=63).contains(&bits) {
        Ok(())
    } else {
        Err(CliffordError::BadPrecision(bits))
    }
}

/// Smallest 2-adic valuation among the coefficients (`None` for zero).
pub fn min_two_adic_valuation(x: &Multivector<BigInt>) -> Option<u64> {
    x.terms()
        .values()
        .map(|c| c.trailing_zeros().unwrap_or(u64::MAX))
        .min()
}

fn to_rational(x: &Multivector<BigInt>) -> Multivector<Rational> {
    x.map_coeffs(&Rationals, |c| Rational::from_integer(c.clone()))
}

/// Lifts residues in `[0, 2^N)` to integers.
pub fn lift(x: &Multivector<u64>) -> Multivector<BigInt> {
    x.map_coeffs(&Integers, |c| BigInt::from(*c))
}

/// Reduces a rational multivector mod `2^bits`, inverting odd denominators.
pub fn reduce_mod_pow2(
    x: &Multivector<Rational>,
    bits: u32,
) -> Result<Multivector<u64>, CliffordError> {
    check_bits(bits)?;
    let ring = ZMod::pow2(bits);
    for (b, c) in x.terms() {
        if c.denom().is_even() {
            return Err(CliffordError::NonIntegral {
                blade: b.to_string(),
                coeff: c.to_string(),
            });
        }
    }
    Ok(x.map_coeffs(&ring, |c| {
        let num = ring.reduce(c.numer());
        let den = ring.reduce(c.denom());
        let inv = ring.invert_odd(&den).expect("odd denominator is a unit");
        ring.mul(&num, &inv)
    }))
}

/// Number of exp terms (indices `0..count`) that can be nonzero mod `2^bits`.
fn exp_term_count(valuation: u64, bits: u32) -> u32 {
    let v = valuation.min(64);
    let mut k: u64 = 1;
    while (v - 1) * k + 1 < bits as u64 {
        k += 1;
    }
    k as u32
}

fn log_term_count(valuation: u64, bits: u32) -> u32 {
    let v = valuation.min(64);
    let mut k: u64 = 1;
    while v * k - u64::from(63 - k.leading_zeros()) < bits as u64 {
        k += 1;
    }
    k as u32
}

/// `sum_{k < terms} x^k / k!` over `Q`.
pub fn exp_series(
    alg: &Clifford<Rationals>,
    x: &Multivector<Rational>,
    terms: u32,
) -> Result<Multivector<Rational>, CliffordError> {
    let mut acc = alg.zero();
    let mut power = alg.one();
    let mut fact = Rational::one();
    for k in 0..terms {
        if k > 0 {
            power = alg.mul(&power, x)?;
            fact *= Rational::from_integer(k.into());
        }
        acc = alg.add(&acc, &alg.scale(&fact.recip(), &power))?;
    }
    Ok(acc)
}

/// `sum_{1 <= k < terms} (-1)^(k-1) a^k / k` over `Q`.
pub fn log_series(
    alg: &Clifford<Rationals>,
    a: &Multivector<Rational>,
    terms: u32,
) -> Result<Multivector<Rational>, CliffordError> {
    let mut acc = alg.zero();
    let mut power = alg.one();
    for k in 1..terms {
        power = alg.mul(&power, a)?;
        let sign = if k % 2 == 1 { 1 } else { -1 };
        let c = Rational::new(sign.into(), k.into());
        acc = alg.add(&acc, &alg.scale(&c, &power))?;
    }
    Ok(acc)
}

/// `exp(x) mod 2^bits` for an even integral `x` with every coefficient divisible by 4.
pub fn exp_mod_pow2(
    sig: Signature,
    x: &Multivector<BigInt>,
    bits: u32,
) -> Result<Multivector<u64>, CliffordError> {
    check_bits(bits)?;
    let alg = Clifford::new(sig, Rationals);
    let xz = Clifford::new(sig, Integers);
    if !xz.is_even(x) {
        return Err(CliffordError::OddSupport);
    }
    if let Some((b, _)) = x
        .terms()
        .iter()
        .find(|(_, c)| !c.is_multiple_of(&BigInt::from(4)))
    {
        return Err(CliffordError::NotInFourC0(b.to_string()));
    }
    let terms = match min_two_adic_valuation(x) {
        None => 1,
        Some(v) => exp_term_count(v, bits),
    };
    let series = exp_series(&alg, &to_rational(x), terms)?;
    reduce_mod_pow2(&series, bits)
}

/// `log(g) mod 2^bits` for an even integral `g` with `g - 1` divisible by 4.
pub fn log_mod_pow2(
    sig: Signature,
    g: &Multivector<BigInt>,
    bits: u32,
) -> Result<Multivector<u64>, CliffordError> {
    check_bits(bits)?;
    let zalg = Clifford::new(sig, Integers);
    if !zalg.is_even(g) {
        return Err(CliffordError::OddSupport);
    }
    let a = zalg.sub(g, &zalg.one())?;
    if let Some((b, _)) = a
        .terms()
        .iter()
        .find(|(_, c)| !c.is_multiple_of(&BigInt::from(4)))
    {
        return Err(CliffordError::NotOneModFour(b.to_string()));
    }
    let terms = match min_two_adic_valuation(&a) {
        None => return Ok(Clifford::new(sig, ZMod::pow2(bits)).zero()),
        Some(v) => log_term_count(v, bits),
    };
    let alg = Clifford::new(sig, Rationals);
    let series = log_series(&alg, &to_rational(&a), terms)?;
    reduce_mod_pow2(&series, bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::Blade;

    #[test]
    fn term_counts_follow_valuation_bounds() {
        // v = 2: term k has valuation >= k + 1; k = 7 is the first with >= 8.
        assert_eq!(exp_term_count(2, 8), 7);
        assert_eq!(exp_term_count(3, 8), 4);
        // v = 2: 2k - floor(log2 k) >= 8 first at k = 5.
        assert_eq!(log_term_count(2, 8), 5);
    }

    #[test]
    fn exp_of_zero_is_one() {
        let sig = Signature::new(2, 0).unwrap();
        let zero = Clifford::new(sig, Integers).zero();
        let e = exp_mod_pow2(sig, &zero, 8).unwrap();
        assert_eq!(e, Clifford::new(sig, ZMod::pow2(8)).one());
    }

    #[test]
    fn exp_log_round_trip_on_four_e12() {
        let sig = Signature::new(2, 0).unwrap();
        let zalg = Clifford::new(sig, Integers);
        let x = zalg
            .term(BigInt::from(4), Blade::from_indices(&[1, 2]))
            .unwrap();
        let g = exp_mod_pow2(sig, &x, 8).unwrap();

        // Brute-force partial sums: adding more terms changes nothing mod 2^8.
        let qalg = Clifford::new(sig, Rationals);
        let longer = exp_series(&qalg, &to_rational(&x), 20).unwrap();
        assert_eq!(reduce_mod_pow2(&longer, 8).unwrap(), g);

        let back = log_mod_pow2(sig, &lift(&g), 8).unwrap();
        assert_eq!(
            back,
            x.map_coeffs(&ZMod::pow2(8), |c| ZMod::pow2(8).reduce(c))
        );
        let ralg = Clifford::new(sig, ZMod::pow2(8));
        assert!(ralg.is_spin_element(&g).unwrap());
    }

    #[test]
    fn precondition_violations() {
        let sig = Signature::new(2, 1).unwrap();
        let zalg = Clifford::new(sig, Integers);
        let x = zalg
            .term(BigInt::from(2), Blade::from_indices(&[1, 2]))
            .unwrap();
        assert!(matches!(
            exp_mod_pow2(sig, &x, 8),
            Err(CliffordError::NotInFourC0(_))
        ));
        assert!(matches!(
            exp_mod_pow2(sig, &zalg.vector(1), 8),
            Err(CliffordError::OddSupport)
        ));
        let g = zalg.add(&zalg.one(), &x).unwrap();
        assert!(matches!(
            log_mod_pow2(sig, &g, 8),
            Err(CliffordError::NotOneModFour(_))
        ));
        assert!(matches!(
            exp_mod_pow2(sig, &zalg.zero(), 1),
            Err(CliffordError::BadPrecision(1))
        ));
    }

    #[test]
    fn even_denominator_is_flagged() {
        let sig = Signature::new(2, 0).unwrap();
        let qalg = Clifford::new(sig, Rationals);
        let x = qalg.scalar(Rational::new(1.into(), 2.into()));
        assert!(matches!(
            reduce_mod_pow2(&x, 8),
            Err(CliffordError::NonIntegral { .. })
        ));
    }
}
