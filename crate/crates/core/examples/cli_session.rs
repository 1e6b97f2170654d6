// Driving the command-line interface in-process.
//
// ```bash
// cargo run --example cli_session
// ```

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let commands: [&[&str]; 6] = [
        &["chi", "8", "2", "--factored"],
        &["chi", "4", "6"],
        &["sign", "2", "1"],
        &["witt", "1,1,1,1,-1", "2"],
        &["table", "--d-max", "4", "--csv"],
        &["chi", "1", "1"],
    ];
    for args in commands {
        println!("$ spinchi {}", args.join(" "));
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = spinchi::cli::run(
            std::iter::once("spinchi").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        print!("{}{}", String::from_utf8(out)?, String::from_utf8(err)?);
        println!("[exit {code}]");
    }
    Ok(())
}

fn main() {
    run_example().expect("example failed");
}
