// F_p types and integral equivalence of b_{m,n} at every prime.
//
// ```bash
// cargo run --example genus_comparison
// ```

use spinchi::qforms::{fp_type, genus_comparison};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for p in [3, 5, 7, 11, 13] {
        println!(
            "p = {p:>2}: b(8,2) {}  b(4,6) {}  b(4,4) {}",
            fp_type(8, 2, p)?,
            fp_type(4, 6, p)?,
            fp_type(4, 4, p)?
        );
    }
    for (m, n, m2, n2) in [
        (8, 2, 4, 6),
        (8, 2, 9, 1),
        (8, 2, 2, 8),
        (5, 5, 1, 9),
        (8, 2, 4, 4),
    ] {
        let c = genus_comparison(m, n, m2, n2, 100)?;
        println!("b({m},{n}) ~ b({m2},{n2}): {} [{}]", c.equal, c.witness);
    }
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
