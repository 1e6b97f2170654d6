// Bernoulli numbers, zeta and L(psi, s) special values, and exact pi powers.
//
// ```bash
// cargo run --example exact_special_values
// ```

use spinchi::exactq::{
    bernoulli, factor, gamma_half, gen_bernoulli_mod4, l_psi_exact_odd, rat, zeta_even_exact,
    zeta_negative_odd,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("B_12 = {}", bernoulli(12));
    assert_eq!(bernoulli(12), rat(-691, 2730));

    for l in [1, 3, 5, 7, 9] {
        println!("B_psi,{l} = {}", gen_bernoulli_mod4(l)?);
    }
    for j in 1..=4 {
        println!(
            "zeta({}) = {}    zeta({}) = {}",
            1 - 2 * j as i32,
            zeta_negative_odd(j)?,
            2 * j,
            zeta_even_exact(j)?
        );
    }
    for l in [1, 3, 5] {
        let v = l_psi_exact_odd(l)?;
        println!("L(psi,{l}) = {v} ~ {:.12}", v.to_f64());
    }
    println!("Gamma(5/2) = {}", gamma_half(5)?);

    let c = factor(&"3011283758121487318463564136448000".parse()?)?;
    println!("factored: {c}");
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
