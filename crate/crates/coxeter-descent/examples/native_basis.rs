//! Decide whether `Q[x_J]` has a native basis (a basis made of `x_L`'s) and
//! print the change of basis to powers of `x_J`.
//!
//! ```bash
//! cargo run -p coxeter-descent --example native_basis
//! ```

use coxeter_descent::coxeter::{CoxeterSystem, CoxeterType};
use coxeter_descent::subalgebra::{detect_native_basis, powers_in_x_basis};
use coxeter_descent::SubsetMask;

fn main() -> coxeter_descent::Result<()> {
    // The exceptional B3 case: J = {s1, s3} has a native basis, but the
    // change of basis needs genuine fractions.
    let b3 = CoxeterSystem::build(CoxeterType::parse("B3")?)?;
    let j = SubsetMask::from_indices(&[1, 3]);
    for (exponent, power) in powers_in_x_basis(&b3, j, 3)?.iter().enumerate() {
        println!("B3: x{{{j}}}^{exponent} = {power}");
    }
    let report = detect_native_basis(&b3, j)?;
    println!(
        "\nB3, J = {{{j}}}: dim {}, native basis: {}",
        report.dim, report.has_native_basis
    );
    for (l, row) in report.native_basis.iter().zip(&report.change_of_basis) {
        let terms: Vec<String> = row
            .iter()
            .enumerate()
            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
            .map(|(m, c)| format!("{c} x^{m}"))
            .collect();
        println!("  x{{{l}}} = {}", terms.join(" + "));
    }
    println!("  all integer: {}\n", report.all_integer);

    // The chain case: J = {s1, s2, s3} in A4 gives the full chain with
    // integer coefficients.
    let a4 = CoxeterSystem::build(CoxeterType::parse("A4")?)?;
    let chain = SubsetMask::chain(3);
    let report = detect_native_basis(&a4, chain)?;
    println!(
        "A4, J = {{{chain}}}: native basis {:?}, all integer: {}",
        report
            .native_basis
            .iter()
            .map(|l| format!("{l}"))
            .collect::<Vec<_>>(),
        report.all_integer
    );

    // And a failure: removing the middle node of A4 leaves nothing native.
    let j = a4.full_set().without(2);
    let report = detect_native_basis(&a4, j)?;
    println!(
        "A4, J = {{{j}}}: native basis exists: {} (dim {})",
        report.has_native_basis, report.dim
    );
    Ok(())
}
