// Local-equivalence classes up to a dimension bound, and the pairs whose
// Euler characteristics differ.
//
// ```bash
// cargo run --release --example sweeps
// ```

use spinchi::profinite::{sweep_euler_not_profinite, sweep_theorem_frank_dim, write_csv, PairRow};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let s = sweep_theorem_frank_dim(12)?;
    println!(
        "{} pairs checked, {} violations",
        s.pairs_checked,
        s.violations.len()
    );
    for class in &s.classes {
        println!("  class {class:?}");
    }
    let hits: Vec<PairRow> = sweep_euler_not_profinite(12)?
        .iter()
        .map(PairRow::from)
        .collect();
    println!("pairs with different chi:");
    let mut buf = Vec::new();
    write_csv(&hits, &mut buf)?;
    print!("{}", String::from_utf8(buf)?);
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
