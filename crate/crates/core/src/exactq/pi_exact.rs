use std::fmt;
use std::ops::{Div, Mul};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use super::{ExactError, Rational};

/// Exact monomial `coeff * pi^(half_pi_power / 2)`.
///
/// Zero is stored with `half_pi_power = 0`. Products add powers; sums are only
/// defined between equal powers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiExact {
    coeff: Rational,
    half_pi_power: i64,
}

// 60 decimals of pi.
const PI_DIGITS: &str = "3141592653589793238462643383279502884197169399375105820974944";

fn pi_rational() -> &'static Rational {
    static PI: OnceLock<Rational> = OnceLock::new();
    PI.get_or_init(|| {
        let num: BigInt = PI_DIGITS.parse().unwrap();
        let den = BigInt::from(10).pow(PI_DIGITS.len() as u32 - 1);
        Rational::new(num, den)
    })
}

fn sqrt_pi_rational() -> &'static Rational {
    static SQRT_PI: OnceLock<Rational> = OnceLock::new();
    SQRT_PI.get_or_init(|| {
        // floor(sqrt(pi * 10^120)) / 10^60; pi carries 60 correct decimals.
        let scale = BigInt::from(10).pow(120u32);
        let pi = pi_rational();
        let scaled = (pi.numer() * &scale) / pi.denom();
        Rational::new(scaled.sqrt(), BigInt::from(10).pow(60u32))
    })
}

impl PiExact {
    pub fn new(coeff: Rational, half_pi_power: i64) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            Self {
                coeff,
                half_pi_power,
            }
        }
    }

    pub fn rational(coeff: Rational) -> Self {
        Self::new(coeff, 0)
    }

    pub fn zero() -> Self {
        Self {
            coeff: Rational::zero(),
            half_pi_power: 0,
        }
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    /// `pi^(half_pi_power / 2)`.
    pub fn pi_power(half_pi_power: i64) -> Self {
        Self::new(Rational::one(), half_pi_power)
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn half_pi_power(&self) -> i64 {
        self.half_pi_power
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// The rational value, if no power of pi is left.
    pub fn as_rational(&self) -> Option<&Rational> {
        (self.half_pi_power == 0).then_some(&self.coeff)
    }

    /// Partial addition: errors unless both terms carry the same power of pi.
    pub fn checked_add(&self, other: &Self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.half_pi_power != other.half_pi_power {
            return Err(ExactError::PiPowerMismatch {
                left: self.half_pi_power,
                right: other.half_pi_power,
            });
        }
        Ok(Self::new(&self.coeff + &other.coeff, self.half_pi_power))
    }

    /// Multiplicative inverse; panics on zero like rational division.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "PiExact::inv of zero");
        Self::new(self.coeff.recip(), -self.half_pi_power)
    }

    pub fn powi(&self, e: i32) -> Self {
        if e == 0 {
            return Self::one();
        }
        let base = if e < 0 { self.inv() } else { self.clone() };
        let k = e.unsigned_abs();
        Self::new(Pow::pow(&base.coeff, k), base.half_pi_power * i64::from(k))
    }

    pub fn abs(&self) -> Self {
        Self::new(self.coeff.abs(), self.half_pi_power)
    }

    /// Numerical value, with pi substituted from a 60-digit rational
    /// approximation before the final rounding to `f64`.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let whole = self.half_pi_power.div_euclid(2);
        let half = self.half_pi_power.rem_euclid(2);
        let mut value = self.coeff.clone();
        let pi = pi_rational();
        let pi_pow = Pow::pow(pi, whole.unsigned_abs());
        if whole >= 0 {
            value *= pi_pow;
        } else {
            value /= pi_pow;
        }
        if half == 1 {
            value *= sqrt_pi_rational();
        }
        value.to_f64().unwrap_or(f64::NAN)
    }
}

impl Mul for PiExact {
    type Output = PiExact;
    fn mul(self, rhs: PiExact) -> PiExact {
        &self * &rhs
    }
}

impl Mul<&PiExact> for &PiExact {
    type Output = PiExact;
    fn mul(self, rhs: &PiExact) -> PiExact {
        PiExact::new(
            &self.coeff * &rhs.coeff,
            self.half_pi_power + rhs.half_pi_power,
        )
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for PiExact {
    type Output = PiExact;
    fn div(self, rhs: PiExact) -> PiExact {
        &self * &rhs.inv()
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div<&PiExact> for &PiExact {
    type Output = PiExact;
    fn div(self, rhs: &PiExact) -> PiExact {
        self * &rhs.inv()
    }
}

impl From<Rational> for PiExact {
    fn from(r: Rational) -> Self {
        Self::rational(r)
    }
}

impl fmt::Display for PiExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.half_pi_power {
            0 => write!(f, "{}", self.coeff),
            p if p % 2 == 0 => write!(f, "{}*pi^{}", self.coeff, p / 2),
            p => write!(f, "{}*pi^({}/2)", self.coeff, p),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{int, rat};

    #[test]
    fn zero_is_canonical() {
        let z = PiExact::new(int(0), 7);
        assert_eq!(z.half_pi_power(), 0);
        assert_eq!(z, PiExact::zero());
    }

    #[test]
    fn partial_addition() {
        let a = PiExact::new(rat(1, 2), 4);
        let b = PiExact::new(rat(1, 3), 4);
        assert_eq!(a.checked_add(&b).unwrap(), PiExact::new(rat(5, 6), 4));
        let c = PiExact::new(int(1), 3);
        assert_eq!(
            a.checked_add(&c),
            Err(ExactError::PiPowerMismatch { left: 4, right: 3 })
        );
        assert_eq!(a.checked_add(&PiExact::zero()).unwrap(), a);
    }

    #[test]
    fn numeric_value() {
        let pi = PiExact::pi_power(2).to_f64();
        assert!((pi - std::f64::consts::PI).abs() < 1e-15);
        let root = PiExact::pi_power(1).to_f64();
        assert!((root * root - std::f64::consts::PI).abs() < 1e-14);
        let inv = PiExact::new(rat(3, 2), -3).to_f64();
        assert!((inv - 1.5 / std::f64::consts::PI.powf(1.5)).abs() < 1e-15);
    }

    #[test]
    fn powers_and_inverse() {
        let x = PiExact::new(rat(2, 3), 3);
        assert_eq!(x.powi(2), PiExact::new(rat(4, 9), 6));
        assert_eq!(x.powi(-1), x.inv());
        assert_eq!(&x * &x.inv(), PiExact::one());
        assert_eq!(x.to_string(), "2/3*pi^(3/2)");
    }
}
