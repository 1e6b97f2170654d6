use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{int, ExactError, PiExact, Rational};

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn bernoulli_table() -> &'static Mutex<Vec<Rational>> {
    static TABLE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![Rational::one()]))
}

/// Bernoulli number `B_n` with the convention `B_1 = -1/2`, i.e. the
/// coefficients of `t / (e^t - 1)`.
///
/// Uses `sum_{k=0}^{n} C(n+1, k) B_k = 0`; the table is memoized behind a lock.
pub fn bernoulli(n: u32) -> Rational {
    let mut table = bernoulli_table().lock().unwrap_or_else(|e| e.into_inner());
    while table.len() <= n as usize {
        let m = table.len() as u32;
        let mut sum = Rational::zero();
        for (k, b) in table.iter().enumerate() {
            if !b.is_zero() {
                sum += Rational::from_integer(binomial(m + 1, k as u32)) * b;
            }
        }
        table.push(-sum / int(m + 1));
    }
    table[n as usize].clone()
}

/// Bernoulli polynomial `B_n(x) = sum_k C(n,k) B_k x^(n-k)`.
pub fn bernoulli_poly(n: u32, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut xp = Rational::one();
    for k in (0..=n).rev() {
        let b = bernoulli(k);
        if !b.is_zero() {
            acc += Rational::from_integer(binomial(n, k)) * b * &xp;
        }
        xp *= x;
    }
    acc
}

/// Generalized Bernoulli number `B_{psi,n}` for the primitive character mod 4:
/// `4^(n-1) (B_n(1/4) - B_n(3/4))`. Vanishes for even `n`.
pub fn gen_bernoulli_mod4(n: u32) -> Result<Rational, ExactError> {
    if n == 0 {
        return Err(ExactError::NonPositiveIndex);
    }
    let quarter = Rational::new(1.into(), 4.into());
    let three_quarters = Rational::new(3.into(), 4.into());
    let diff = bernoulli_poly(n, &quarter) - bernoulli_poly(n, &three_quarters);
    Ok(Rational::from_integer(BigInt::one() << (2 * (n - 1))) * diff)
}

/// Signed `zeta(1 - 2j) = -B_{2j} / (2j)`.
pub fn zeta_negative_odd(j: u32) -> Result<Rational, ExactError> {
    if j == 0 {
        return Err(ExactError::NonPositiveIndex);
    }
    Ok(-bernoulli(2 * j) / int(2 * j))
}

/// `zeta(2j) = (-1)^(j+1) B_{2j} (2 pi)^(2j) / (2 (2j)!)`.
pub fn zeta_even_exact(j: u32) -> Result<PiExact, ExactError> {
    if j == 0 {
        return Err(ExactError::NonPositiveIndex);
    }
    let b = bernoulli(2 * j);
    let sign = if j % 2 == 1 { 1 } else { -1 };
    let coeff = b * Rational::from_integer(BigInt::one() << (2 * j))
        / Rational::from_integer(factorial(2 * j) * 2)
        * int(sign);
    Ok(PiExact::new(coeff, 4 * j as i64))
}

/// Secant-series Euler number `E_n` (`E_0 = 1, E_2 = -1, E_4 = 5, ...`).
pub fn euler_number(n: u32) -> Result<BigInt, ExactError> {
    if n % 2 == 1 {
        return Err(ExactError::OddEulerIndex(n));
    }
    let half = n / 2;
    let mut e: Vec<BigInt> = vec![BigInt::one()];
    for m in 1..=half {
        // sum_{k=0}^{m} C(2m, 2k) E_{2k} = 0
        let s: BigInt = (0..m)
            .map(|k| binomial(2 * m, 2 * k) * &e[k as usize])
            .sum();
        e.push(-s);
    }
    Ok(e.pop().unwrap_or_else(BigInt::one))
}

/// `L(psi, 2k+1) = (-1)^k E_{2k} pi^(2k+1) / (4^(k+1) (2k)!)`.
pub fn l_psi_exact_odd(ell: u32) -> Result<PiExact, ExactError> {
    if ell.is_multiple_of(2) {
        return Err(ExactError::EvenLIndex(ell));
    }
    let k = (ell - 1) / 2;
    let e = euler_number(2 * k)?;
    let signed = if k.is_multiple_of(2) { e } else { -e };
    let den = (BigInt::one() << (2 * (k + 1))) * factorial(2 * k);
    Ok(PiExact::new(Rational::new(signed, den), 2 * ell as i64))
}

/// `Gamma(j/2)`: `(j/2 - 1)!` for even `j`, `(2n)!/(4^n n!) sqrt(pi)` for `j = 2n + 1`.
pub fn gamma_half(j: u32) -> Result<PiExact, ExactError> {
    if j == 0 {
        return Err(ExactError::NonPositiveIndex);
    }
    if j.is_even() {
        Ok(PiExact::rational(Rational::from_integer(factorial(
            j / 2 - 1,
        ))))
    } else {
        let n = (j - 1) / 2;
        let coeff = Rational::new(factorial(2 * n), (BigInt::one() << (2 * n)) * factorial(n));
        Ok(PiExact::new(coeff, 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::rat;

    /// Akiyama–Tanigawa; produces B_n with B_1 = +1/2.
    fn akiyama_tanigawa(n: usize) -> Rational {
        let mut a: Vec<Rational> = (0..=n).map(|m| rat(1, m as i64 + 1)).collect();
        for j in 1..=n {
            for m in 0..=(n - j) {
                a[m] = int(m as i64 + 1) * (&a[m] - &a[m + 1]);
            }
        }
        a[0].clone()
    }

    #[test]
    fn bernoulli_small_values() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
    }

    #[test]
    fn bernoulli_matches_akiyama_tanigawa() {
        // Frozen from the oracle: B_12 = -691/2730.
        assert_eq!(akiyama_tanigawa(12), rat(-691, 2730));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        for n in 2..40 {
            assert_eq!(bernoulli(n), akiyama_tanigawa(n as usize), "B_{n}");
        }
    }

    #[test]
    fn odd_bernoulli_vanish() {
        for n in (3..60).step_by(2) {
            assert!(bernoulli(n).is_zero());
        }
    }

    #[test]
    fn bernoulli_polynomial_values() {
        assert_eq!(bernoulli_poly(1, &rat(1, 2)), int(0));
        assert_eq!(bernoulli_poly(2, &int(0)), rat(1, 6));
        // x^3 - 3/2 x^2 + 1/2 x at 1/4
        let x = rat(1, 4);
        let direct = &x * &x * &x - rat(3, 2) * &x * &x + rat(1, 2) * &x;
        assert_eq!(direct, rat(3, 64));
        assert_eq!(bernoulli_poly(3, &x), rat(3, 64));
    }

    #[test]
    fn generalized_bernoulli_table() {
        assert_eq!(gen_bernoulli_mod4(1).unwrap(), rat(-1, 2));
        assert_eq!(gen_bernoulli_mod4(5).unwrap(), rat(-25, 2));
        assert_eq!(gen_bernoulli_mod4(2).unwrap(), int(0));
        for n in (2..20).step_by(2) {
            assert!(gen_bernoulli_mod4(n).unwrap().is_zero());
        }
        assert!(gen_bernoulli_mod4(0).is_err());
    }

    /// Direct character sum: B_{psi,n} = 4^(n-1) sum_{a=1}^{4} psi(a) B_n(a/4).
    #[test]
    fn generalized_bernoulli_by_character_sum() {
        for n in 1..16u32 {
            let mut s = Rational::zero();
            for (a, psi) in [(1, 1), (2, 0), (3, -1), (4, 0)] {
                s += int(psi) * bernoulli_poly(n, &rat(a, 4));
            }
            s *= Rational::from_integer(BigInt::from(4).pow(n - 1));
            assert_eq!(s, gen_bernoulli_mod4(n).unwrap());
        }
    }

    #[test]
    fn negative_zeta_values() {
        assert_eq!(zeta_negative_odd(1).unwrap(), rat(-1, 12));
        assert_eq!(zeta_negative_odd(2).unwrap(), rat(1, 120));
        assert_eq!(zeta_negative_odd(3).unwrap(), rat(-1, 252));
        assert_eq!(zeta_negative_odd(4).unwrap(), rat(1, 240));
    }

    #[test]
    fn even_zeta_values() {
        assert_eq!(zeta_even_exact(1).unwrap(), PiExact::new(rat(1, 6), 4));
        assert_eq!(zeta_even_exact(2).unwrap(), PiExact::new(rat(1, 90), 8));
        assert_eq!(zeta_even_exact(4).unwrap(), PiExact::new(rat(1, 9450), 16));
    }

    #[test]
    fn euler_numbers() {
        assert_eq!(euler_number(0).unwrap(), BigInt::from(1));
        assert_eq!(euler_number(2).unwrap(), BigInt::from(-1));
        assert_eq!(euler_number(4).unwrap(), BigInt::from(5));
        assert_eq!(euler_number(6).unwrap(), BigInt::from(-61));
        assert_eq!(euler_number(8).unwrap(), BigInt::from(1385));
        assert_eq!(euler_number(3), Err(ExactError::OddEulerIndex(3)));
    }

    #[test]
    fn l_values() {
        assert_eq!(l_psi_exact_odd(1).unwrap(), PiExact::new(rat(1, 4), 2));
        assert_eq!(l_psi_exact_odd(3).unwrap(), PiExact::new(rat(1, 32), 6));
        assert_eq!(l_psi_exact_odd(5).unwrap(), PiExact::new(rat(5, 1536), 10));
        assert!(l_psi_exact_odd(4).is_err());
    }

    #[test]
    fn gamma_at_half_integers() {
        assert_eq!(gamma_half(2).unwrap(), PiExact::rational(int(1)));
        assert_eq!(gamma_half(1).unwrap(), PiExact::new(int(1), 1));
        assert_eq!(gamma_half(5).unwrap(), PiExact::new(rat(3, 4), 1));
        // Gamma(x + 1) = x Gamma(x)
        for j in 1..30u32 {
            let lhs = gamma_half(j + 2).unwrap();
            let rhs = gamma_half(j).unwrap() * PiExact::rational(rat(j as i64, 2));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 4), BigInt::from(5));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(factorial(0), BigInt::from(1));
    }
}
