//! Every cargo example, run in-process.

#[allow(dead_code)]
mod adelic_assembly {
    include!("../examples/adelic_assembly.rs");
}

#[allow(dead_code)]
mod cli_session {
    include!("../examples/cli_session.rs");
}

#[allow(dead_code)]
mod clifford_algebra {
    include!("../examples/clifford_algebra.rs");
}

#[allow(dead_code)]
mod euler_characteristic {
    include!("../examples/euler_characteristic.rs");
}

#[allow(dead_code)]
mod exact_special_values {
    include!("../examples/exact_special_values.rs");
}

#[allow(dead_code)]
mod finite_group_orders {
    include!("../examples/finite_group_orders.rs");
}

#[allow(dead_code)]
mod genus_comparison {
    include!("../examples/genus_comparison.rs");
}

#[allow(dead_code)]
mod hilbert_symbols {
    include!("../examples/hilbert_symbols.rs");
}

#[allow(dead_code)]
mod l2_profile {
    include!("../examples/l2_profile.rs");
}

#[allow(dead_code)]
mod product_combinators {
    include!("../examples/product_combinators.rs");
}

#[allow(dead_code)]
mod profinite_commensurability {
    include!("../examples/profinite_commensurability.rs");
}

#[allow(dead_code)]
mod s_arithmetic_sign {
    include!("../examples/s_arithmetic_sign.rs");
}

#[allow(dead_code)]
mod sweeps {
    include!("../examples/sweeps.rs");
}

#[allow(dead_code)]
mod two_adic_exp_log {
    include!("../examples/two_adic_exp_log.rs");
}

#[allow(dead_code)]
mod witt_indices {
    include!("../examples/witt_indices.rs");
}

#[test]
fn example_adelic_assembly() {
    adelic_assembly::run_example().unwrap();
}

#[test]
fn example_cli_session() {
    cli_session::run_example().unwrap();
}

#[test]
fn example_clifford_algebra() {
    clifford_algebra::run_example().unwrap();
}

#[test]
fn example_euler_characteristic() {
    euler_characteristic::run_example().unwrap();
}

#[test]
fn example_exact_special_values() {
    exact_special_values::run_example().unwrap();
}

#[test]
fn example_finite_group_orders() {
    finite_group_orders::run_example().unwrap();
}

#[test]
fn example_genus_comparison() {
    genus_comparison::run_example().unwrap();
}

#[test]
fn example_hilbert_symbols() {
    hilbert_symbols::run_example().unwrap();
}

#[test]
fn example_l2_profile() {
    l2_profile::run_example().unwrap();
}

#[test]
fn example_product_combinators() {
    product_combinators::run_example().unwrap();
}

#[test]
fn example_profinite_commensurability() {
    profinite_commensurability::run_example().unwrap();
}

#[test]
fn example_s_arithmetic_sign() {
    s_arithmetic_sign::run_example().unwrap();
}

#[test]
fn example_sweeps() {
    sweeps::run_example().unwrap();
}

#[test]
fn example_two_adic_exp_log() {
    two_adic_exp_log::run_example().unwrap();
}

#[test]
fn example_witt_indices() {
    witt_indices::run_example().unwrap();
}
