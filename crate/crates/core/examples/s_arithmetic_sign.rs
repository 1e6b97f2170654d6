// Sign of the Euler–Poincaré measure of Spin(b_{m,n}) over Z[1/S].
//
// ```bash
// cargo run --example s_arithmetic_sign
// ```

use spinchi::euler::s_arithmetic_sign;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (m, n, s) in [
        (4, 1, vec![2]),
        (2, 3, vec![2]),
        (2, 2, vec![]),
        (4, 2, vec![2, 3]),
        (3, 1, vec![2]),
    ] {
        let r = s_arithmetic_sign(m, n, &s)?;
        println!(
            "({m},{n}) S={:?}: ranks {:?}, rank_S {}, rank_Q {}, sign {:+}{}",
            r.primes,
            r.local_ranks,
            r.rank_s,
            r.rank_q,
            r.sign,
            if r.flagged { " (dim X odd)" } else { "" }
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
