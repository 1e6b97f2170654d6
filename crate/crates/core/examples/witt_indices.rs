// Witt indices over Q_p, R and Q, and the rank data behind them.
//
// ```bash
// cargo run --example witt_indices
// ```

use spinchi::qforms::{
    anisotropic_dim, is_isotropic_rational, witt_index, witt_index_rational, DiagonalForm, Place,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (m, n) in [(4, 1), (2, 3), (8, 2), (4, 6), (3, 0)] {
        let f = DiagonalForm::standard(m, n)?;
        println!(
            "b({m},{n}): Q_2 {} (aniso {}), R {}, Q {}",
            witt_index(&f, Place::Finite(2))?,
            anisotropic_dim(&f, Place::Finite(2))?,
            witt_index(&f, Place::Infinite)?,
            witt_index_rational(&f)?,
        );
    }
    for form in ["1,1,-3", "1,1,-2", "1,-2", "2,-8", "1,1,1,-7"] {
        let f: DiagonalForm = form.parse()?;
        println!("{f} isotropic over Q: {}", is_isotropic_rational(&f)?);
    }
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
