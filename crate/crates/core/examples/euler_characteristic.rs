// chi(Gamma_{m,n}) from the closed formula.
//
// ```bash
// cargo run --example euler_characteristic
// ```

use spinchi::euler::{chi_closed, r_factor, zeta_product};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (m, n) in [(8, 2), (4, 6), (2, 2), (2, 1), (3, 1), (5, 5), (6, 6)] {
        let chi = chi_closed(m, n)?;
        println!(
            "chi(Gamma_{m},{n}) = {:<28} [{}]",
            chi.factored_string(),
            chi.case_tag
        );
    }
    println!("R(10) = {}", r_factor(10)?);
    println!("prod_(j<5) (2^2j - 1)|zeta(1-2j)| = {}", zeta_product(5)?);
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
