// Euler characteristics of products and free products built from Gamma_{8,2}
// and Gamma_{4,6}.
//
// ```bash
// cargo run --example product_combinators
// ```

use spinchi::euler::{chi_closed, chi_direct_product, chi_free_group, chi_free_product};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = chi_closed(8, 2)?.value;
    let b = chi_closed(4, 6)?.value;
    let c2 = &a * &a;
    let free = chi_free_group(&(c2.to_integer() * 2));
    let values = [
        (
            "G82 x G82 * F",
            chi_free_product(&chi_direct_product(&a, &a), &free),
        ),
        (
            "G82 x G46 * F",
            chi_free_product(&chi_direct_product(&a, &b), &free),
        ),
        (
            "G46 x G46 * F",
            chi_free_product(&chi_direct_product(&b, &b), &free),
        ),
    ];
    for (name, v) in &values {
        println!("{name}: chi / c^2 = {}", v / &c2);
    }
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
