// The Euler characteristic rebuilt from its adelic factors, exactly and with
// a truncated Euler product.
//
// ```bash
// cargo run --release --example adelic_assembly
// ```

use num_traits::ToPrimitive;
use spinchi::euler::{adelic_assembly, adelic_assembly_exact, adelic_assembly_float, chi_closed};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = adelic_assembly(8, 2)?;
    println!("tamagawa       {}", a.tamagawa);
    println!("weyl ratio     {}", a.weyl_ratio);
    println!("vol(G_u)       {}", a.vol_dual);
    println!("vol(K_2)       {}", a.local_2_volume);
    println!("odd product    {}", a.odd_product_exact);
    println!("assembled      {}", a.value());

    for (m, n) in [(8, 2), (4, 6), (2, 2), (2, 1)] {
        let closed = chi_closed(m, n)?.value;
        let exact = adelic_assembly_exact(m, n)?;
        let approx = adelic_assembly_float(m, n, 10_000)?;
        let rel = (approx / closed.to_f64().unwrap_or(f64::NAN) - 1.0).abs();
        println!(
            "({m},{n}) closed == adelic: {}   float rel. error at P=10^4: {rel:.2e}",
            closed == exact
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
