use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactError, Rational};

const TRIAL_BOUND: u32 = 1_000_000;

/// Bases 2..37 make Miller–Rabin deterministic below 3.3e24.
const DETERMINISTIC_BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
/// Extra fixed witnesses used above the deterministic range (error < 4^-20).
const EXTRA_BASES: [u32; 8] = [41, 43, 47, 53, 59, 61, 67, 71];

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        crate::sieve(TRIAL_BOUND as u64)
            .into_iter()
            .map(|p| p as u32)
            .collect()
    })
}

/// Sign and prime factorization of a nonzero integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    pub sign: i8,
    pub factors: BTreeMap<BigUint, u32>,
}

impl FactoredInteger {
    pub fn value(&self) -> BigInt {
        let mag: BigUint = self
            .factors
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e));
        BigInt::from_biguint(
            if self.sign < 0 {
                Sign::Minus
            } else {
                Sign::Plus
            },
            mag,
        )
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors.get(&BigUint::from(p)).copied().unwrap_or(0)
    }

    fn fmt_magnitude(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (p, e) in &self.factors {
            if !first {
                write!(f, " * ")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        self.fmt_magnitude(f)
    }
}

/// Factored numerator over factored (positive) denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredRational {
    pub numer: FactoredInteger,
    pub denom: FactoredInteger,
}

impl FactoredRational {
    pub fn is_integer(&self) -> bool {
        self.denom.factors.is_empty()
    }
}

impl fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.numer)?;
        if !self.is_integer() {
            write!(f, " / ")?;
            if self.denom.factors.len() > 1 {
                write!(f, "(")?;
                self.denom.fmt_magnitude(f)?;
                write!(f, ")")?;
            } else {
                self.denom.fmt_magnitude(f)?;
            }
        }
        Ok(())
    }
}

pub fn factor(n: &BigInt) -> Result<FactoredInteger, ExactError> {
    if n.is_zero() {
        return Err(ExactError::ZeroInput);
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut factors = BTreeMap::new();
    let mut rest = n.magnitude().clone();

    for &p in small_primes() {
        if rest.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut e = 0;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.insert(pb, e);
        }
    }
    if !rest.is_one() {
        split_large(rest, &mut factors);
    }
    Ok(FactoredInteger { sign, factors })
}

pub fn factor_rational(r: &Rational) -> Result<FactoredRational, ExactError> {
    Ok(FactoredRational {
        numer: factor(r.numer())?,
        denom: factor(r.denom())?,
    })
}

fn split_large(n: BigUint, out: &mut BTreeMap<BigUint, u32>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        *out.entry(n).or_insert(0) += 1;
        return;
    }
    let d = pollard_brent(&n);
    let other = &n / &d;
    split_large(d, out);
    split_large(other, out);
}

/// Miller–Rabin with fixed witnesses; deterministic below 3.3e24.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for &p in DETERMINISTIC_BASES.iter() {
        if n == &BigUint::from(p) {
            return true;
        }
        if (n % p).is_zero() {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    let limit: BigUint = "3317044064679887385961981".parse().unwrap();
    let bases = DETERMINISTIC_BASES.iter().chain(if n >= &limit {
        EXTRA_BASES.iter()
    } else {
        [].iter()
    });
    'witness: for &a in bases {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for machine integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in DETERMINISTIC_BASES.iter() {
        let p = u64::from(p);
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in DETERMINISTIC_BASES.iter() {
        let mut x = pow_mod(u64::from(a), d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let mut c = BigUint::one();
    loop {
        if let Some(d) = brent_attempt(n, &c) {
            return d;
        }
        c += 1u32;
    }
}

fn brent_attempt(n: &BigUint, c: &BigUint) -> Option<BigUint> {
    let f = |x: &BigUint| (x * x + c) % n;
    let mut y = BigUint::from(2u32);
    let mut r: u64 = 1;
    let mut q = BigUint::one();
    let m: u64 = 128;
    let mut g = BigUint::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..m.min(r - k) {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (q * diff) % n;
            }
            g = q.gcd(n);
            k += m;
        }
        r *= 2;
        if r > 1 << 40 {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = f(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}
