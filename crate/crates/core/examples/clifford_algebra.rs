// Blade products, conjugation and spin membership in C(b_{m,n}).
//
// ```bash
// cargo run --example clifford_algebra
// ```

use num_bigint::BigInt;
use spinchi::clifford::{blade_mul, Blade, Clifford, Integers, Signature, ZMod};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let sig = Signature::new(2, 1)?;
    let e12 = Blade::from_indices(&[1, 2]);
    let e23 = Blade::from_indices(&[2, 3]);
    let (sign, blade) = blade_mul(e12, e23, sig);
    println!("e{{1,2}} * e{{2,3}} = {sign} {blade}   (e2^2 = +1)");
    let (sign, blade) = blade_mul(e23, e23, sig);
    println!("e{{2,3}}^2 = {sign} {blade}   (e3^2 = -1)");

    let alg = Clifford::new(sig, Integers);
    for j in [vec![], vec![1], vec![1, 2], vec![1, 2, 3]] {
        let e = alg.blade(Blade::from_indices(&j))?;
        println!(
            "conj({}) = {}",
            alg.format(&e),
            alg.format(&alg.conjugate(&e))
        );
    }

    // e12 * conj(e12) = 1, while 3 + 2 e12 has norm 13.
    let g = alg.blade(e12)?;
    println!("e12 in Spin(Z): {}", alg.is_spin_element(&g)?);
    let h = alg.add(
        &alg.scalar(BigInt::from(3)),
        &alg.scale(&BigInt::from(2), &g),
    )?;
    println!("3 + 2 e12 in Spin(Z): {}", alg.is_spin_element(&h)?);

    let zalg = Clifford::new(sig, ZMod::pow2(3));
    let basis = zalg.lie_algebra_basis()?;
    println!("Lie(Spin)(Z/8) generators: {}", basis.len());
    for b in basis.iter().take(5) {
        println!("  {}", zalg.format(b));
    }
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
