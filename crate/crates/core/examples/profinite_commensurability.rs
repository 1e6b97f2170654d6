// Comparing two groups Gamma_{m,n} of the same dimension.
//
// ```bash
// cargo run --example profinite_commensurability
// ```

use spinchi::profinite::profinitely_commensurable;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (m, n, m2, n2) in [(8, 2, 4, 6), (8, 2, 9, 1), (5, 5, 1, 9), (3, 2, 1, 4)] {
        let r = profinitely_commensurable(m, n, m2, n2)?;
        println!(
            "{} vs {}: {} [{}]",
            r.pair[0], r.pair[1], r.csp_note.conclusion, r.witness
        );
        println!(
            "    chi {} / {}, Witt indices {:?}",
            r.chi_both[0].factored_string(),
            r.chi_both[1].factored_string(),
            r.csp_note.witt_indices
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
