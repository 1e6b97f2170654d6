// Hilbert symbols, Hasse invariants and local invariants of diagonal forms.
//
// ```bash
// cargo run --example hilbert_symbols
// ```

use spinchi::exactq::int;
use spinchi::qforms::{hasse_invariant, hilbert_symbol, local_invariants, DiagonalForm, Place};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let places = [
        Place::Infinite,
        Place::Finite(2),
        Place::Finite(3),
        Place::Finite(5),
        Place::Finite(7),
    ];
    for (a, b) in [(-1, -1), (2, 7), (3, 5), (-3, 6)] {
        let symbols: Vec<String> = places
            .iter()
            .map(|&v| Ok(format!("{v}:{:+}", hilbert_symbol(&int(a), &int(b), v)?)))
            .collect::<Result<_, spinchi::qforms::QformError>>()?;
        println!("({a}, {b})  {}", symbols.join("  "));
    }

    let f: DiagonalForm = "1,1,1,1,-1".parse()?;
    for v in places {
        println!(
            "{f} at {v}: hasse {:+}, {:?}",
            hasse_invariant(&f, v)?,
            local_invariants(&f, v)?.disc_class
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
