//! Minimal polynomials of basis elements and the permutation-character
//! cross-check: `dim Q[x_J]` equals the number of distinct character values,
//! and the minimal polynomial splits over exactly those values.
//!
//! ```bash
//! cargo run -p coxeter-descent --example minimal_polynomials
//! ```

use coxeter_descent::coxeter::{CoxeterSystem, CoxeterType};
use coxeter_descent::subalgebra::{minimal_polynomial, permutation_character_values};
use coxeter_descent::SubsetMask;

fn main() -> coxeter_descent::Result<()> {
    for spec in ["A2", "B3", "H3"] {
        let sys = CoxeterSystem::build(CoxeterType::parse(spec)?)?;
        println!("{spec}:");
        for j in SubsetMask::all(sys.rank()) {
            let mu = minimal_polynomial(&sys, j)?;
            let values = permutation_character_values(&sys, j)?;
            println!(
                "  J = {j:>6}: mu(x) = {mu}   character values {:?}",
                values.iter().collect::<Vec<_>>()
            );
            assert_eq!(mu.degree(), Some(values.len()));
        }
        println!();
    }

    // E6 is too large for the coset action to be fun, but the linear-algebra
    // route needs only descent scans.
    let e6 = CoxeterSystem::build(CoxeterType::parse("E6")?)?;
    let j = e6.full_set().without(6);
    let mu = minimal_polynomial(&e6, j)?;
    println!("E6, J = S \\ {{s6}}: mu(x) = {mu}");
    Ok(())
}
