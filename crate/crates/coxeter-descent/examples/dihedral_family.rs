//! The dihedral family I2(m): squares of the maximal basis elements and the
//! integrality boundary at m = 2k + l with k = 1.
//!
//! ```bash
//! cargo run -p coxeter-descent --example dihedral_family
//! ```

use coxeter_descent::coxeter::{CoxeterSystem, CoxeterType};
use coxeter_descent::subalgebra::{detect_native_basis, powers_in_x_basis};
use coxeter_descent::SubsetMask;

fn main() -> coxeter_descent::Result<()> {
    println!(" m | x_J^2 (J = {{s2}})          | native | integral");
    println!("---+---------------------------+--------+---------");
    for m in 3..=12 {
        let sys = CoxeterSystem::build(CoxeterType::i2(m)?)?;
        let j = SubsetMask::singleton(2);
        let square = &powers_in_x_basis(&sys, j, 2)?[2];
        let report = detect_native_basis(&sys, j)?;
        println!(
            "{m:>2} | {:<25} | {:<6} | {}",
            square.to_string(),
            report.has_native_basis,
            report.all_integer
        );
    }
    println!("\nWith m = 2k + l (l = 1 or 2), x_J^2 = l x_J + k x_{{}}; the base");
    println!("change divides by k, so it is integral exactly for m = 3 and m = 4");
    println!("— the dihedral groups that are also of classical type (A2, B2).");
    Ok(())
}
