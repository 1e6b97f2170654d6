// Orders of Spin(b_{m,n})(F_p), a brute-force count, Weyl ratios and the
// volume of the compact dual.
//
// ```bash
// cargo run --release --example finite_group_orders
// ```

use spinchi::ggroups::{
    so_order_bruteforce, spin_order_fp, vol_compact_dual, weyl_order, weyl_ratio, Series,
    SpinGroupDescriptor,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (m, n, p) in [(2, 1, 3), (2, 1, 5), (2, 1, 7), (2, 2, 3), (3, 1, 3)] {
        let desc = SpinGroupDescriptor::new(m, n)?;
        let artin = spin_order_fp(&desc, p)?;
        let count = so_order_bruteforce(&desc.form(), p)?;
        println!("|{desc}(F_{p})| = {artin}, brute force {count}");
        assert_eq!(artin, count.into());
    }
    println!(
        "|W(B_3)| = {}, |W(D_5)| = {}",
        weyl_order(Series::B, 3)?,
        weyl_order(Series::D, 5)?
    );
    for (m, n) in [(8, 2), (4, 6), (2, 2)] {
        println!(
            "Weyl ratio of Spin({m},{n}) = {}",
            weyl_ratio(&SpinGroupDescriptor::new(m, n)?)
        );
    }
    for d in 2..=6 {
        let v = vol_compact_dual(d)?;
        println!("vol(Spin({d})) = {v} ~ {:.6}", v.to_f64());
    }
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
