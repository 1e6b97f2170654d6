// Truncated exponential and logarithm on 4 C_0 modulo 2^N.
//
// ```bash
// cargo run --example two_adic_exp_log
// ```

use num_bigint::BigInt;
use spinchi::clifford::exp_log::{exp_mod_pow2, lift, log_mod_pow2};
use spinchi::clifford::{Blade, Clifford, Integers, Signature, ZMod};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let bits = 8;
    let sig = Signature::new(3, 1)?;
    let zalg = Clifford::new(sig, Integers);
    let x = zalg.from_terms([
        (Blade::from_indices(&[1, 2]), BigInt::from(4)),
        (Blade::from_indices(&[3, 4]), BigInt::from(12)),
        (Blade::from_indices(&[1, 4]), BigInt::from(-8)),
    ])?;
    let g = exp_mod_pow2(sig, &x, bits)?;
    let ring = Clifford::new(sig, ZMod::pow2(bits));
    println!("x          = {}", zalg.format(&x));
    println!("exp(x)     = {}", ring.format(&g));
    println!("in Spin    = {}", ring.is_spin_element(&g)?);
    let back = log_mod_pow2(sig, &lift(&g), bits)?;
    println!("log(exp x) = {}", ring.format(&back));

    let bad = zalg.from_terms([(Blade::from_indices(&[1, 2]), BigInt::from(2))])?;
    match exp_mod_pow2(sig, &bad, bits) {
        Err(e) => println!("2 e12 rejected: {e}"),
        Ok(_) => return Err("2 e12 is outside 4 C_0".into()),
    }
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
