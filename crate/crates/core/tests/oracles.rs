//! Brute-force oracles independent of the library's closed forms.

mod common;

use common::{hilbert_bruteforce, random_lie_element, squarefree};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spinchi::clifford::exp_log::{exp_mod_pow2, lift, log_mod_pow2};
use spinchi::clifford::{Blade, Clifford, DualNumbers, Signature, ZMod};
use spinchi::exactq::int;
use spinchi::qforms::{genus_comparison, hilbert_symbol, GenusWitness, Place};

#[test]
fn hilbert_symbol_matches_local_solvability() {
    let values: Vec<i64> = (-15..=15).filter(|&n| n != 0 && squarefree(n)).collect();
    for p in [2, 3, 5, 7] {
        for &a in &values {
            for &b in &values {
                let expected = hilbert_bruteforce(a, b, p);
                let got = hilbert_symbol(&int(a), &int(b), Place::Finite(p as u64)).unwrap();
                assert_eq!(got, expected, "({a},{b})_{p}");
            }
        }
    }
}

/// Number of `x in (Z/16)^d` with `b_{m,n}(x) = t mod 16`, by convolving the
/// one-variable distributions.
fn representation_counts(m: u32, n: u32) -> Vec<u128> {
    const Q: usize = 16;
    let mut dist = vec![0u128; Q];
    dist[0] = 1;
    for sign in std::iter::repeat_n(1i64, m as usize).chain(std::iter::repeat_n(-1, n as usize)) {
        let mut next = vec![0u128; Q];
        for (t, &c) in dist.iter().enumerate() {
            for x in 0..Q as i64 {
                let s = (t as i64 + sign * x * x).rem_euclid(Q as i64) as usize;
                next[s] += c;
            }
        }
        dist = next;
    }
    dist
}

#[test]
fn two_adic_genus_matches_representation_counts() {
    for d in 3..=14u32 {
        for m in 1..d {
            for m2 in 1..d {
                let (n, n2) = (d - m, d - m2);
                let c = genus_comparison(m, n, m2, n2, 50).unwrap();
                let same_counts = representation_counts(m, n) == representation_counts(m2, n2);
                match c.witness {
                    GenusWitness::Place(2) => assert!(!same_counts, "({m},{n}) vs ({m2},{n2})"),
                    GenusWitness::AllPass { .. } => {
                        assert!(same_counts, "({m},{n}) vs ({m2},{n2})")
                    }
                    _ => {}
                }
                if !same_counts {
                    assert!(!c.equal);
                }
            }
        }
    }
}

#[test]
fn exp_log_round_trip_mod_pow2() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (m, n, bits) in [(2, 1, 8), (3, 1, 8), (3, 2, 6)] {
        let sig = Signature::new(m, n).unwrap();
        let ring = ZMod::pow2(bits);
        let target = Clifford::new(sig, ring);
        for _ in 0..50 {
            let x = random_lie_element(sig, &mut rng);
            let g = exp_mod_pow2(sig, &x, bits).unwrap();
            assert!(
                target.is_spin_element(&g).unwrap(),
                "exp({x:?}) not in Spin"
            );
            let back = log_mod_pow2(sig, &lift(&g), bits).unwrap();
            assert_eq!(back, x.map_coeffs(&ring, |c| ring.reduce(c)));
            let again = exp_mod_pow2(sig, &lift(&back), bits).unwrap();
            assert_eq!(again, g);
        }
    }
}

#[test]
fn lie_algebra_is_tangent_space_of_spin() {
    for (m, n, bits) in [(2, 1, 3), (2, 2, 3), (3, 1, 2)] {
        let sig = Signature::new(m, n).unwrap();
        let base = ZMod::pow2(bits);
        let small = Clifford::new(sig, base);
        let dual = DualNumbers::new(base);
        let big = Clifford::new(sig, dual.clone());
        let tangent = |x: &spinchi::clifford::Multivector<u64>| {
            let eps = x.map_coeffs(&dual, |c| dual.infinitesimal(*c));
            big.is_spin_element(&big.add(&big.one(), &eps).unwrap())
                .unwrap()
        };
        for x in small.lie_algebra_basis().unwrap() {
            assert!(tangent(&x), "{} should be tangent", small.format(&x));
        }
        let q = base.modulus();
        let d = sig.dim();
        for bitsj in 0..(1u64 << d) {
            let b = Blade::from_bits(bitsj);
            if !b.grade().is_multiple_of(2) || b.grade() == 2 {
                continue;
            }
            for c in 1..q {
                let x = small.term(c, b).unwrap();
                assert_eq!(tangent(&x), (2 * c).is_multiple_of(q), "{} e{b}", c);
            }
        }
    }
}
