//! Self-checks behind `spinchi verify`. Each suite compares a computation
//! against an independent route to the same number and reports pass/fail.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::clifford::exp_log::{exp_mod_pow2, lift, log_mod_pow2};
use crate::clifford::{Blade, Clifford, Integers, Multivector, Signature, ZMod};
use crate::euler::{
    adelic_assembly_exact, adelic_assembly_float, chi_closed, chi_sign, s_arithmetic_sign,
};
use crate::exactq::{
    bernoulli, factor_rational, gen_bernoulli_mod4, int, l_psi_exact_odd, rat, zeta_even_exact,
    zeta_negative_odd, Rational,
};
use crate::ggroups::{so_order_bruteforce, spin_order_fp, SpinGroupDescriptor};
use crate::profinite::sweep_theorem_frank_dim;
use crate::qforms::{hilbert_symbol, witt_index, DiagonalForm, Place};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Exactq,
    Clifford,
    Oracles,
    Adelic,
    Float,
    Qforms,
    ExpLog,
    Sweep,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Exactq,
        Suite::Clifford,
        Suite::Oracles,
        Suite::Adelic,
        Suite::Float,
        Suite::Qforms,
        Suite::ExpLog,
        Suite::Sweep,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Exactq => "exactq",
            Suite::Clifford => "clifford",
            Suite::Oracles => "oracles",
            Suite::Adelic => "adelic",
            Suite::Float => "float",
            Suite::Qforms => "qforms",
            Suite::ExpLog => "explog",
            Suite::Sweep => "sweep",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::EACH
            .iter()
            .chain([Suite::All].iter())
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub prime_bound: u64,
    pub d_max: u32,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            prime_bound: 100_000,
            d_max: 14,
            seed: 20240229,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<String>,
    pub seconds: f64,
    /// Worst relative error, float suite only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_relative_error: Option<f64>,
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
    max_rel: Option<f64>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.checks += 1;
        self.failures.push(what);
    }
}

pub fn run(suite: Suite, opts: &VerifyOptions) -> Vec<SuiteResult> {
    match suite {
        Suite::All => Suite::EACH.iter().map(|s| run_one(*s, opts)).collect(),
        s => vec![run_one(s, opts)],
    }
}

fn run_one(suite: Suite, opts: &VerifyOptions) -> SuiteResult {
    let start = Instant::now();
    let mut t = Tally::default();
    match suite {
        Suite::Exactq => exactq_suite(&mut t),
        Suite::Clifford => clifford_suite(&mut t, opts.seed),
        Suite::Oracles => oracle_suite(&mut t),
        Suite::Adelic => adelic_suite(&mut t),
        Suite::Float => float_suite(&mut t, opts.prime_bound),
        Suite::Qforms => qforms_suite(&mut t, opts.seed),
        Suite::ExpLog => explog_suite(&mut t, opts.seed),
        Suite::Sweep => sweep_suite(&mut t, opts.d_max),
        Suite::All => unreachable!(),
    }
    SuiteResult {
        suite: suite.name().into(),
        passed: t.failures.is_empty(),
        checks: t.checks,
        failures: t.failures,
        seconds: start.elapsed().as_secs_f64(),
        max_relative_error: t.max_rel,
    }
}

/// `sum_{k <= n} k^-s` plus the Euler–Maclaurin tail through the `B_2` term.
fn zeta_numeric(s: f64, n: u32) -> f64 {
    let nf = f64::from(n);
    let head: f64 = (1..=n).map(|k| f64::from(k).powf(-s)).sum();
    head + nf.powf(1.0 - s) / (s - 1.0) - nf.powf(-s) / 2.0 + s * nf.powf(-s - 1.0) / 12.0
}

/// `sum_k (-1)^k (2k+1)^-s`, averaging the last two partial sums.
fn l_psi_numeric(s: f64, n: u32) -> f64 {
    let mut sum = 0.0;
    let mut prev = 0.0;
    for k in 0..n {
        prev = sum;
        let term = f64::from(2 * k + 1).powf(-s);
        sum += if k % 2 == 0 { term } else { -term };
    }
    (sum + prev) / 2.0
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    ((a - b) / b).abs() <= tol
}

fn exactq_suite(t: &mut Tally) {
    t.check(bernoulli(12) == rat(-691, 2730), || "B_12".into());
    let table = [
        (1, rat(-1, 2)),
        (3, rat(3, 2)),
        (5, rat(-25, 2)),
        (7, rat(427, 2)),
        (9, rat(-12465, 2)),
    ];
    for (l, want) in table {
        t.check(gen_bernoulli_mod4(l).ok() == Some(want), || {
            format!("B_psi,{l}")
        });
    }
    for (j, want) in [(1, rat(-1, 12)), (2, rat(1, 120)), (4, rat(1, 240))] {
        t.check(zeta_negative_odd(j).ok() == Some(want), || {
            format!("zeta(1-2*{j})")
        });
    }
    for j in 1..=6u32 {
        let exact = zeta_even_exact(j).map(|z| z.to_f64()).unwrap_or(f64::NAN);
        let s = f64::from(2 * j);
        t.check(close(exact, zeta_numeric(s, 1000), 1e-12), || {
            format!("zeta({s})")
        });
    }
    for l in [1u32, 3, 5, 7] {
        let exact = l_psi_exact_odd(l).map(|z| z.to_f64()).unwrap_or(f64::NAN);
        t.check(
            close(exact, l_psi_numeric(f64::from(l), 200_000), 1e-8),
            || format!("L(psi,{l})"),
        );
    }
    for (m, n) in [(8, 2), (4, 6)] {
        match chi_closed(m, n).and_then(|c| Ok(factor_rational(&c.value)?)) {
            Ok(f) => {
                let back = Rational::new(f.numer.value(), f.denom.value());
                t.check(back == chi_closed(m, n).unwrap().value, || {
                    format!("factor chi({m},{n})")
                });
            }
            Err(e) => t.fail(format!("factor chi({m},{n}): {e}")),
        }
    }
}

fn random_element<R: Rng>(
    alg: &Clifford<Integers>,
    rng: &mut R,
    terms: usize,
) -> Multivector<BigInt> {
    let d = alg.signature().dim();
    let items: Vec<(Blade, BigInt)> = (0..terms)
        .map(|_| {
            (
                Blade::from_bits(rng.gen_range(0..(1u64 << d))),
                BigInt::from(rng.gen_range(-5i64..=5)),
            )
        })
        .collect();
    alg.from_terms(items).expect("blades fit")
}

fn clifford_suite(t: &mut Tally, seed: u64) {
    // conj(e_J) = conj(e_jk) ... conj(e_j1) with conj(e_i) = -e_i
    for d in 1..=10u32 {
        let sig = Signature::new(d / 2 + d % 2, d / 2).expect("d <= 10");
        let alg = Clifford::new(sig, Integers);
        for bits in 0..(1u64 << d) {
            let blade = Blade::from_bits(bits);
            let mut reversed = alg.one();
            for i in blade.indices() {
                reversed = alg
                    .mul(&alg.neg(&alg.vector(i)), &reversed)
                    .expect("same algebra");
            }
            let e = alg.blade(blade).expect("fits");
            t.check(alg.conjugate(&e) == reversed, || {
                format!("conjugation of {blade} in d={d}")
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100 {
        let d = rng.gen_range(1..=6);
        let m = rng.gen_range(0..=d);
        let alg = Clifford::new(Signature::new(m, d - m).expect("d <= 6"), Integers);
        let (x, y, z) = (
            random_element(&alg, &mut rng, 4),
            random_element(&alg, &mut rng, 4),
            random_element(&alg, &mut rng, 4),
        );
        let xy = alg.mul(&x, &y).unwrap();
        let lhs = alg.mul(&xy, &z).unwrap();
        let rhs = alg.mul(&x, &alg.mul(&y, &z).unwrap()).unwrap();
        t.check(lhs == rhs, || format!("associativity in Cl({m},{})", d - m));
        let conj = alg.mul(&alg.conjugate(&y), &alg.conjugate(&x)).unwrap();
        t.check(alg.conjugate(&xy) == conj, || {
            "conjugation anti-automorphism".into()
        });
        let iota = alg.mul(&alg.iota(&y), &alg.iota(&x)).unwrap();
        t.check(alg.iota(&xy) == iota, || "iota anti-automorphism".into());
    }
}

fn oracle_suite(t: &mut Tally) {
    for (d, p) in [(3u32, 3u64), (3, 5), (3, 7), (4, 3)] {
        for m in 1..d {
            let desc = SpinGroupDescriptor::new(m, d - m).expect("m, n >= 1");
            let artin = spin_order_fp(&desc, p).ok().and_then(|o| o.to_u64());
            match so_order_bruteforce(&desc.form(), p) {
                Ok(count) => t.check(artin == Some(count), || {
                    format!("|SO(b_{m},{})(F_{p})|: {artin:?} vs {count}", d - m)
                }),
                Err(e) => t.fail(format!("brute force ({m},{},{p}): {e}", d - m)),
            }
        }
    }
}

fn adelic_suite(t: &mut Tally) {
    for d in 3..=12u32 {
        for m in 1..d {
            let n = d - m;
            if m % 2 == 1 && n % 2 == 1 {
                continue;
            }
            let closed = chi_closed(m, n).map(|c| c.value);
            let adelic = adelic_assembly_exact(m, n);
            match (closed, adelic) {
                (Ok(a), Ok(b)) => {
                    t.check(a == b, || format!("({m},{n}): closed {a} vs adelic {b}"))
                }
                (a, b) => t.fail(format!("({m},{n}): {a:?} / {b:?}")),
            }
            let sign = chi_sign(m, n).ok();
            let closed_sign = chi_closed(m, n).ok().map(|c| c.sign);
            t.check(sign == closed_sign, || format!("sign ({m},{n})"));
        }
    }
}

fn float_suite(t: &mut Tally, prime_bound: u64) {
    let mut worst: f64 = 0.0;
    for d in 4..=10u32 {
        for m in 1..d {
            let n = d - m;
            if m % 2 == 1 && n % 2 == 1 {
                continue;
            }
            let exact = chi_closed(m, n).ok().and_then(|c| c.value.to_f64());
            match (exact, adelic_assembly_float(m, n, prime_bound)) {
                (Some(e), Ok(f)) => {
                    let rel = ((f - e) / e).abs();
                    worst = worst.max(rel);
                    t.check(rel <= 1e-3, || {
                        format!("({m},{n}): relative error {rel:.3e}")
                    });
                }
                (e, f) => t.fail(format!("({m},{n}): {e:?} / {f:?}")),
            }
        }
    }
    t.max_rel = Some(worst);
}

fn qforms_suite(t: &mut Tally, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        let mut pick = || loop {
            let a: i64 = rng.gen_range(-500..=500);
            if a != 0 {
                return a;
            }
        };
        let (a, b) = (int(pick()), int(pick()));
        let mut places = vec![Place::Infinite, Place::Finite(2)];
        for r in [&a, &b] {
            if let Ok(f) = crate::exactq::factor(r.numer()) {
                places.extend(
                    f.factors
                        .keys()
                        .filter_map(|p| p.to_u64())
                        .map(Place::Finite),
                );
            }
        }
        places.sort();
        places.dedup();
        let product: i8 = places
            .iter()
            .map(|&v| hilbert_symbol(&a, &b, v).unwrap_or(0))
            .product();
        t.check(product == 1, || format!("product formula for ({a}, {b})"));
    }
    let two = Place::Finite(2);
    let b41 = DiagonalForm::standard(4, 1).expect("nonempty");
    let b23 = DiagonalForm::standard(2, 3).expect("nonempty");
    t.check(witt_index(&b41, two).ok() == Some(1), || {
        "Witt index of b_4,1 over Q_2".into()
    });
    t.check(witt_index(&b23, two).ok() == Some(2), || {
        "Witt index of b_2,3 over Q_2".into()
    });
    for (m, n, rank) in [(4, 1, 2), (2, 3, 4)] {
        match s_arithmetic_sign(m, n, &[2]) {
            Ok(r) => t.check(r.sign == -1 && r.rank_s == rank, || {
                format!("S-arithmetic ({m},{n})")
            }),
            Err(e) => t.fail(format!("S-arithmetic ({m},{n}): {e}")),
        }
    }
}

fn explog_suite(t: &mut Tally, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (m, n, bits) in [(2u32, 1u32, 8u32), (3, 1, 8), (3, 2, 6)] {
        let sig = Signature::new(m, n).expect("small signature");
        let ring = ZMod::pow2(bits);
        let alg = Clifford::new(sig, ring);
        let basis = match alg.lie_algebra_basis() {
            Ok(b) => b,
            Err(e) => return t.fail(format!("Lie basis: {e}")),
        };
        for _ in 0..20 {
            let mut y = alg.zero();
            for b in &basis {
                let c: u64 = rng.gen_range(0..ring.modulus());
                y = alg.add(&y, &alg.scale(&c, b)).expect("same algebra");
            }
            let x = alg.scale(&4, &y);
            let result = exp_mod_pow2(sig, &lift(&x), bits).and_then(|g| {
                let spin = alg.is_spin_element(&g)?;
                let back = log_mod_pow2(sig, &lift(&g), bits)?;
                let again = exp_mod_pow2(sig, &lift(&back), bits)?;
                Ok((spin, back == x, again == g))
            });
            match result {
                Ok((spin, left, right)) => {
                    t.check(spin, || {
                        format!("exp image not in Spin for Cl({m},{n}) mod 2^{bits}")
                    });
                    t.check(left, || {
                        format!("log(exp(x)) != x in Cl({m},{n}) mod 2^{bits}")
                    });
                    t.check(right, || {
                        format!("exp(log(g)) != g in Cl({m},{n}) mod 2^{bits}")
                    });
                }
                Err(e) => t.fail(format!("Cl({m},{n}) mod 2^{bits}: {e}")),
            }
        }
    }
}

fn sweep_suite(t: &mut Tally, d_max: u32) {
    match sweep_theorem_frank_dim(d_max) {
        Ok(s) => {
            t.check(s.violations.is_empty(), || {
                format!("{} violations", s.violations.len())
            });
            let has = |a: (u32, u32), b: (u32, u32)| {
                s.classes.iter().any(|c| c.contains(&a) && c.contains(&b))
            };
            if d_max >= 10 {
                t.check(has((8, 2), (4, 6)), || "class {(8,2),(4,6)} missing".into());
                t.check(has((5, 5), (1, 9)), || "class {(5,5),(1,9)} missing".into());
            }
        }
        Err(e) => t.fail(format!("sweep: {e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn numeric_oracles() {
        assert!(close(
            zeta_numeric(2.0, 1000),
            std::f64::consts::PI.powi(2) / 6.0,
            1e-12
        ));
        assert!(close(
            l_psi_numeric(1.0, 200_000),
            std::f64::consts::FRAC_PI_4,
            1e-8
        ));
    }

    #[test]
    fn fast_suites_pass() {
        let opts = VerifyOptions {
            prime_bound: 1000,
            d_max: 8,
            ..Default::default()
        };
        for s in [Suite::Exactq, Suite::Adelic, Suite::Qforms, Suite::Sweep] {
            let r = &run(s, &opts)[0];
            assert!(r.passed, "{}: {:?}", r.suite, r.failures);
        }
    }
}
