//! Group-theoretic constants attached to `Spin(m,n)`: Weyl group orders, orders
//! of the finite groups `Spin(F_p)` with a brute-force check, and the volume of
//! the compact dual `Spin(d)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::exactq::{factorial, gamma_half, pow2, ExactError, PiExact, Rational};
use crate::qforms::{fp_type, witt_index, witt_index_rational, DiagonalForm, Place, QformError};

/// Largest `p^(d^2)` the brute-force count will attempt.
pub const BRUTEFORCE_BUDGET: f64 = 1e8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GgroupError {
    #[error("m and n must be at least 1, got ({m}, {n})")]
    InvalidSignature { m: u32, n: u32 },
    #[error("dimension {0} is too small here")]
    DimensionTooSmall(u32),
    #[error("Weyl group rank must be at least 1")]
    RankZero,
    #[error("finite group orders need an odd prime, got {0}")]
    EvenPrime(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("entry {0} is not a unit mod {1}")]
    NotUnit(String, u64),
    #[error("brute force over F_{p}^({d}x{d}) exceeds the budget")]
    BudgetExceeded { d: u32, p: u64 },
    #[error(transparent)]
    Qform(#[from] QformError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// `Spin(m,n)` with `m, n >= 1` and its numerical data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpinGroupDescriptor {
    pub m: u32,
    pub n: u32,
}

impl SpinGroupDescriptor {
    pub fn new(m: u32, n: u32) -> Result<Self, GgroupError> {
        if m == 0 || n == 0 || m + n > crate::clifford::MAX_DIM {
            return Err(GgroupError::InvalidSignature { m, n });
        }
        Ok(Self { m, n })
    }

    pub fn d(&self) -> u32 {
        self.m + self.n
    }

    /// Rank of `Spin(d)`, `floor(d/2)`.
    pub fn ell(&self) -> u32 {
        self.d() / 2
    }

    pub fn k(&self) -> u32 {
        self.m / 2
    }

    pub fn k2(&self) -> u32 {
        self.n / 2
    }

    /// Dimension of the symmetric space.
    pub fn dim_x(&self) -> u32 {
        self.m * self.n
    }

    /// Fundamental rank.
    pub fn delta(&self) -> u32 {
        self.ell() - self.k() - self.k2()
    }

    /// Dimension of `Spin(d)`.
    pub fn dim_group(&self) -> u32 {
        self.d() * (self.d() - 1) / 2
    }

    pub fn form(&self) -> DiagonalForm {
        DiagonalForm::standard(self.m, self.n).expect("m + n >= 2")
    }

    pub fn real_rank(&self) -> u32 {
        self.m.min(self.n)
    }

    pub fn witt_index_rational(&self) -> Result<u32, GgroupError> {
        Ok(witt_index_rational(&self.form())?)
    }

    pub fn witt_index_at(&self, v: Place) -> Result<u32, GgroupError> {
        Ok(witt_index(&self.form(), v)?)
    }
}

impl fmt::Display for SpinGroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Spin({},{})", self.m, self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Series {
    B,
    D,
}

impl FromStr for Series {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "B" | "b" => Ok(Series::B),
            "D" | "d" => Ok(Series::D),
            other => Err(format!("unknown series {other:?}")),
        }
    }
}

/// Rank 0 allowed (trivial group); `D_1` is taken to be trivial.
fn weyl_order_raw(series: Series, rank: u32) -> BigUint {
    let fact = factorial(rank).to_biguint().expect("factorial is positive");
    match (series, rank) {
        (_, 0) | (Series::D, 1) => BigUint::one(),
        (Series::B, r) => fact << r,
        (Series::D, r) => fact << (r - 1),
    }
}

/// `|W(B_l)| = 2^l l!`, `|W(D_l)| = 2^(l-1) l!` (and `|W(D_1)| = 1`).
pub fn weyl_order(series: Series, rank: u32) -> Result<BigUint, GgroupError> {
    if rank == 0 {
        return Err(GgroupError::RankZero);
    }
    Ok(weyl_order_raw(series, rank))
}

/// `|W(Spin(d))| / |W(Spin(m) x Spin(n))|`, computed from the series orders.
pub fn weyl_ratio(desc: &SpinGroupDescriptor) -> Rational {
    let big = if desc.d().is_multiple_of(2) {
        weyl_order_raw(Series::D, desc.ell())
    } else {
        weyl_order_raw(Series::B, desc.ell())
    };
    let part = |x: u32| {
        if x.is_multiple_of(2) {
            weyl_order_raw(Series::D, x / 2)
        } else {
            weyl_order_raw(Series::B, x / 2)
        }
    };
    let small = part(desc.m) * part(desc.n);
    Rational::new(big.into(), small.into())
}

fn check_odd_prime(p: u64) -> Result<(), GgroupError> {
    if p == 2 {
        return Err(GgroupError::EvenPrime(p));
    }
    if !crate::exactq::is_prime_u64(p) {
        return Err(GgroupError::NotPrime(p));
    }
    Ok(())
}

/// `|Spin(b_{m,n})(F_p)|` for odd `p`.
///
/// Even `d`: `p^(l(l-1)) (p^l - eps) prod_{j<l} (p^(2j) - 1)` with `eps = +1`
/// for the split type and `-1` otherwise. Odd `d`: `p^(l^2) prod_{j<=l} (p^(2j) - 1)`.
pub fn spin_order_fp(desc: &SpinGroupDescriptor, p: u64) -> Result<BigUint, GgroupError> {
    check_odd_prime(p)?;
    if desc.d() < 3 {
        return Err(GgroupError::DimensionTooSmall(desc.d()));
    }
    let l = desc.ell();
    let pb = BigUint::from(p);
    let one = BigUint::one();
    if desc.d().is_multiple_of(2) {
        let mut order = pb.pow(l * (l - 1));
        order *= match fp_type(desc.m, desc.n, p)?.epsilon() {
            1 => pb.pow(l) - &one,
            _ => pb.pow(l) + &one,
        };
        for j in 1..l {
            order *= pb.pow(2 * j) - &one;
        }
        Ok(order)
    } else {
        let mut order = pb.pow(l * l);
        for j in 1..=l {
            order *= pb.pow(2 * j) - &one;
        }
        Ok(order)
    }
}

/// `|Spin(F_p)| / p^(dim G)` as an exact rational; the volume of `Spin(Z_p)`.
pub fn spin_volume_fp(desc: &SpinGroupDescriptor, p: u64) -> Result<Rational, GgroupError> {
    let order = spin_order_fp(desc, p)?;
    let scale = BigUint::from(p).pow(desc.dim_group());
    Ok(Rational::new(order.into(), scale.into()))
}

fn residue(a: &Rational, p: u64) -> Result<u64, GgroupError> {
    let not_unit = || GgroupError::NotUnit(a.to_string(), p);
    let pi = p as i128;
    let num = (a.numer() % p)
        .to_i128()
        .ok_or_else(not_unit)?
        .rem_euclid(pi);
    let den = (a.denom() % p)
        .to_i128()
        .ok_or_else(not_unit)?
        .rem_euclid(pi);
    if num == 0 || den == 0 {
        return Err(not_unit());
    }
    let inv = pow_mod(den as u64, p - 2, p);
    Ok((num as u64 * inv) % p)
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Determinant mod `p` of a matrix given by columns.
fn det_mod(cols: &[Vec<u64>], p: u64) -> u64 {
    let d = cols.len();
    let mut a: Vec<Vec<u64>> = (0..d)
        .map(|i| (0..d).map(|j| cols[j][i]).collect())
        .collect();
    let mut det = 1u64;
    for c in 0..d {
        let Some(r) = (c..d).find(|&r| a[r][c] != 0) else {
            return 0;
        };
        if r != c {
            a.swap(r, c);
            det = (p - det) % p;
        }
        det = det * a[c][c] % p;
        let inv = pow_mod(a[c][c], p - 2, p);
        for r in (c + 1)..d {
            let f = a[r][c] * inv % p;
            if f == 0 {
                continue;
            }
            let (top, bottom) = a.split_at_mut(r);
            for (x, y) in bottom[0][c..d].iter_mut().zip(&top[c][c..d]) {
                *x = (*x + p * p - f * y % p) % p;
            }
        }
    }
    det
}

struct Enumerator {
    p: u64,
    diag: Vec<u64>,
    vectors: Vec<Vec<u64>>,
}

impl Enumerator {
    fn dot(&self, x: &[u64], y: &[u64]) -> u64 {
        x.iter()
            .zip(y)
            .zip(&self.diag)
            .fold(0, |acc, ((a, b), g)| (acc + a * b % self.p * g) % self.p)
    }

    /// Extends `cols` to all full matrices `M` with `M^T B M = B`; counts `det = 1`.
    fn count(&self, cols: &mut Vec<Vec<u64>>) -> u64 {
        let j = cols.len();
        if j == self.diag.len() {
            return u64::from(det_mod(cols, self.p) == 1);
        }
        let mut total = 0;
        for v in &self.vectors {
            if self.dot(v, v) != self.diag[j] {
                continue;
            }
            if cols.iter().any(|c| self.dot(c, v) != 0) {
                continue;
            }
            cols.push(v.clone());
            total += self.count(cols);
            cols.pop();
        }
        total
    }
}

/// Counts `M in SL_d(F_p)` with `M^T diag(f) M = diag(f)` by building `M`
/// column by column. Parallel over the first column.
pub fn so_order_bruteforce(f: &DiagonalForm, p: u64) -> Result<u64, GgroupError> {
    check_odd_prime(p)?;
    let d = f.dim();
    if (p as f64).powi((d * d) as i32) > BRUTEFORCE_BUDGET {
        return Err(GgroupError::BudgetExceeded { d, p });
    }
    let diag = f
        .entries()
        .iter()
        .map(|a| residue(a, p))
        .collect::<Result<Vec<_>, _>>()?;
    let total = p.pow(d);
    let vectors: Vec<Vec<u64>> = (0..total)
        .map(|mut x| {
            (0..d)
                .map(|_| {
                    let digit = x % p;
                    x /= p;
                    digit
                })
                .collect()
        })
        .collect();
    let e = Enumerator { p, diag, vectors };
    let count = e
        .vectors
        .par_iter()
        .filter(|v| e.dot(v, v) == e.diag[0])
        .map(|v| e.count(&mut vec![v.clone()]))
        .sum();
    Ok(count)
}

/// `vol(Spin(d)) = 2^((3d - d^2)/2) prod_{j=2}^d pi^(j/2) / Gamma(j/2)`.
pub fn vol_compact_dual(d: u32) -> Result<PiExact, GgroupError> {
    if d < 2 {
        return Err(GgroupError::DimensionTooSmall(d));
    }
    let d64 = i64::from(d);
    let mut vol = PiExact::rational(pow2((3 * d64 - d64 * d64) / 2));
    for j in 2..=d {
        vol = vol * PiExact::pi_power(i64::from(j)) / gamma_half(j)?;
    }
    Ok(vol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{int, rat};

    fn desc(m: u32, n: u32) -> SpinGroupDescriptor {
        SpinGroupDescriptor::new(m, n).unwrap()
    }

    #[test]
    fn descriptor_data() {
        let g = desc(8, 2);
        assert_eq!(
            (g.d(), g.ell(), g.k(), g.k2(), g.dim_x(), g.delta()),
            (10, 5, 4, 1, 16, 0)
        );
        assert_eq!(desc(3, 1).delta(), 1);
        assert_eq!(desc(5, 5).delta(), 1);
        assert!(SpinGroupDescriptor::new(0, 3).is_err());
        for d in 2..=40 {
            for m in 1..d {
                let g = desc(m, d - m);
                assert!(g.delta() <= 1);
                assert_eq!(g.delta() == 1, m % 2 == 1 && (d - m) % 2 == 1);
                assert_eq!(g.delta() % 2, g.dim_x() % 2);
            }
        }
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(weyl_order(Series::B, 1).unwrap(), 2u32.into());
        assert_eq!(weyl_order(Series::D, 5).unwrap(), 1920u32.into());
        assert_eq!(weyl_order(Series::B, 3).unwrap(), 48u32.into());
        assert_eq!(weyl_order(Series::D, 1).unwrap(), 1u32.into());
        assert_eq!(weyl_order(Series::B, 0), Err(GgroupError::RankZero));
    }

    #[test]
    fn weyl_ratios() {
        assert_eq!(weyl_ratio(&desc(8, 2)), int(10));
        assert_eq!(weyl_ratio(&desc(4, 6)), int(20));
        assert_eq!(weyl_ratio(&desc(2, 2)), int(4));
        for d in 3..=30 {
            for m in 1..d {
                let (g, h) = (desc(m, d - m), desc(d - m, m));
                assert_eq!(weyl_ratio(&g), weyl_ratio(&h));
                if g.delta() == 0 {
                    let c = crate::exactq::binomial(g.ell(), g.k());
                    assert_eq!(weyl_ratio(&g), int(c * 2), "({m},{})", d - m);
                }
            }
        }
    }

    #[test]
    fn artin_orders() {
        assert_eq!(spin_order_fp(&desc(2, 1), 3).unwrap(), 24u32.into());
        assert_eq!(spin_order_fp(&desc(4, 1), 3).unwrap(), 51840u32.into());
        assert_eq!(spin_order_fp(&desc(2, 2), 3).unwrap(), 576u32.into());
        assert_eq!(spin_order_fp(&desc(3, 1), 3).unwrap(), 720u32.into());
        assert_eq!(
            spin_order_fp(&desc(2, 2), 2),
            Err(GgroupError::EvenPrime(2))
        );
        assert_eq!(spin_order_fp(&desc(2, 2), 9), Err(GgroupError::NotPrime(9)));
    }

    #[test]
    fn volume_matches_euler_factor_for_d10() {
        // (1 - psi(p) p^-5) prod_{j<=4} (1 - p^-2j)
        let g = desc(8, 2);
        for p in [3u64, 5, 7, 11, 13] {
            let psi = if p % 4 == 1 { 1 } else { -1 };
            let q = |e: u32| rat(1, p.pow(e) as i64);
            let mut expected = int(1) - q(5) * int(psi);
            for j in 1..=4 {
                expected *= int(1) - q(2 * j);
            }
            assert_eq!(spin_volume_fp(&g, p).unwrap(), expected, "p = {p}");
        }
    }

    #[test]
    fn bruteforce_small() {
        let f = DiagonalForm::from_ints(&[1, -1]).unwrap();
        assert_eq!(so_order_bruteforce(&f, 3).unwrap(), 2);
        let f = DiagonalForm::from_ints(&[1, 1, -1]).unwrap();
        assert_eq!(so_order_bruteforce(&f, 3).unwrap(), 24);
        assert_eq!(so_order_bruteforce(&f, 5).unwrap(), 120);
        let f = DiagonalForm::from_ints(&[1, 3]).unwrap();
        assert!(matches!(
            so_order_bruteforce(&f, 3),
            Err(GgroupError::NotUnit(..))
        ));
        let f = DiagonalForm::standard(5, 0).unwrap();
        assert!(matches!(
            so_order_bruteforce(&f, 3),
            Err(GgroupError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn determinant() {
        assert_eq!(det_mod(&[vec![0, 1], vec![1, 0]], 5), 4);
        assert_eq!(
            det_mod(&[vec![2, 0, 0], vec![0, 3, 0], vec![1, 1, 1]], 7),
            6
        );
    }

    /// `vol(S^(j-1)) = 2 pi^(j/2) / Gamma(j/2)` from `vol(S^(k+1)) = 2 pi vol(S^(k-1)) / k`.
    fn sphere_volumes(max: u32) -> Vec<PiExact> {
        let mut v = vec![
            PiExact::zero(),
            PiExact::new(int(2), 0),
            PiExact::new(int(2), 2),
        ];
        for j in 3..=max {
            // vol(S^(j-1)) = 2 pi vol(S^(j-3)) / (j - 2)
            let prev = v[(j - 2) as usize].clone();
            v.push(prev * PiExact::new(rat(2, i64::from(j) - 2), 2));
        }
        v
    }

    #[test]
    fn compact_dual_volume() {
        assert_eq!(vol_compact_dual(3).unwrap(), PiExact::new(int(2), 4));
        assert_eq!(vol_compact_dual(2).unwrap(), PiExact::new(int(2), 2));
        assert!(vol_compact_dual(1).is_err());
        let spheres = sphere_volumes(20);
        for d in 2..=20u32 {
            let v = vol_compact_dual(d).unwrap();
            assert!(v.coeff() > &int(0));
            let odd = (2..=d).filter(|j| j % 2 == 1).count() as i64;
            let sum: i64 = (2..=d).map(i64::from).sum();
            assert_eq!(v.half_pi_power(), sum - odd);
            let mut oracle =
                PiExact::rational(int(2) * pow2(-(i64::from(d) * (i64::from(d) - 1) / 2)));
            for j in 2..=d {
                oracle = oracle * spheres[j as usize].clone();
            }
            assert_eq!(v, oracle, "d = {d}");
        }
    }
}
