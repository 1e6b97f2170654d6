// l2-Betti numbers, Novikov–Shubin invariants and l2-torsion signs.
//
// ```bash
// cargo run --example l2_profile
// ```

use spinchi::euler::{chi_sign, l2_profile};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (m, n) in [(8, 2), (3, 1), (2, 1), (5, 3), (5, 5)] {
        let p = l2_profile(m, n)?;
        let betti = match p.betti_degree {
            Some(k) => format!("b_{k} = {}", p.betti_value),
            None => "all b_k = 0".into(),
        };
        let ns = match p.ns_range {
            Some((a, b)) => format!("alpha = {} on [{a}, {b}]", p.ns_value),
            None => "alpha = inf+ everywhere".into(),
        };
        println!(
            "({m},{n}) sign {:+}  {betti}; {ns}; torsion sign {:+}",
            chi_sign(m, n)?,
            p.torsion_sign
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
