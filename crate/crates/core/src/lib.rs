//! Exact Euler characteristics of the level-4 congruence subgroups
//! `Gamma_{m,n}` of `Spin(m,n)`, together with the machinery needed to check
//! them: exact zeta/L special values, Clifford algebras over small rings,
//! local invariants of quadratic forms over `Q`, finite orthogonal group
//! orders, and profinite-commensurability comparisons.

pub mod cli;
pub mod clifford;
pub mod euler;
pub mod exactq;
pub mod ggroups;
pub mod profinite;
pub mod qforms;
pub mod verify;

/// Primes up to and including `bound`.
pub fn sieve(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}
