//! Helpers shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use spinchi::clifford::{Blade, Clifford, Integers, Multivector, Signature};

fn valuation(mut n: i64, p: i64) -> u32 {
    if n == 0 {
        return u32::MAX;
    }
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// `(a, b)_p` for squarefree `a, b`: search primitive solutions of
/// `z^2 = a x^2 + b y^2 mod p^k` whose gradient valuation `e` has `2e < k`,
/// so that they lift to `Z_p`.
pub fn hilbert_bruteforce(a: i64, b: i64, p: i64) -> i8 {
    let k = if p == 2 { 6 } else { 3 };
    let q = p.pow(k);
    let mut roots: HashMap<i64, Vec<i64>> = HashMap::new();
    for z in 0..q {
        roots.entry(z * z % q).or_default().push(z);
    }
    for x in 0..q {
        for y in 0..q {
            if x % p == 0 && y % p == 0 {
                continue;
            }
            let t = (a * x * x + b * y * y).rem_euclid(q);
            for &z in roots.get(&t).into_iter().flatten() {
                let e = [2 * z, 2 * a * x, 2 * b * y]
                    .iter()
                    .map(|&g| valuation(g.rem_euclid(q), p).min(k))
                    .min()
                    .unwrap();
                if 2 * e < k {
                    return 1;
                }
            }
        }
    }
    -1
}

pub fn squarefree(n: i64) -> bool {
    (2..=n.abs())
        .take_while(|d| d * d <= n.abs())
        .all(|d| n % (d * d) != 0)
}

/// `4 * sum c_ij e_i e_j` with small random `c_ij`.
pub fn random_lie_element(sig: Signature, rng: &mut ChaCha8Rng) -> Multivector<BigInt> {
    let alg = Clifford::new(sig, Integers);
    let d = sig.dim();
    let terms = (1..=d)
        .flat_map(|i| (i + 1..=d).map(move |j| Blade::from_indices(&[i, j])))
        .map(|b| (b, BigInt::from(4 * rng.gen_range(-6i64..=6))))
        .collect::<Vec<_>>();
    alg.from_terms(terms).unwrap()
}
