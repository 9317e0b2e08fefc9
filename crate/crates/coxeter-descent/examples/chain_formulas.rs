//! Closed formulas for the classical chain subalgebras: recurrences,
//! structure constants, Stirling base changes, falling-power quotient
//! models, and the D -> A isomorphism.
//!
//! ```bash
//! cargo run -p coxeter-descent --example chain_formulas
//! ```

use coxeter_descent::classical::{
    base_change, chain_as_polynomial, chain_recurrence, closed_form_product, phi_d_to_a,
    ChainElement, ChainQuotient, ClassicalFamily,
};
use coxeter_descent::coxeter::{CoxeterSystem, CoxeterType};
use coxeter_descent::descent::solomon_product;

fn main() -> coxeter_descent::Result<()> {
    // Chain products in B4, straight from the closed formula, checked
    // against the double-coset counting rule in the actual group.
    let family = ClassicalFamily::B;
    let n = 4;
    let b4 = CoxeterSystem::build(CoxeterType::parse("B4")?)?;
    println!("B4 chain products (x_j = x_{{s1..sj}}, x_1 here means the chain of length 1):");
    for j in 0..=n {
        for k in 0..=n {
            let closed = closed_form_product(family, n, j, k)?;
            let brute = solomon_product(
                &b4,
                family.chain_subset(n, j)?,
                family.chain_subset(n, k)?,
            )?;
            assert_eq!(closed, ChainElement::from_algebra(family, n, &brute)?);
            if j == k {
                println!("  x_{j} x_{k} = {closed}");
            }
        }
    }

    // The recurrence x_{n-1} x_{n-k} = 2k x_{n-k} + x_{n-k-1} with its
    // boundary fold at k = n.
    println!("\nB4 recurrences:");
    for k in 0..=n {
        println!("  k = {k}: x_3 x_{} = {}", n - k, chain_recurrence(family, n, k)?);
    }

    // Every chain element is an integer polynomial in x_{n-1}.
    println!("\nB4: x_(4-k) as a polynomial in x_3:");
    for k in 0..=n {
        println!("  x_{} = {}", n - k, chain_as_polynomial(family, n, k)?);
    }

    // Base change via Stirling numbers; the two matrices invert each other.
    let bc = base_change(family, n);
    println!("\nB4 base change (natives in powers): {:?}", bc.native_in_powers[2]);

    // The falling-power quotient model computes the same products.
    let quotient = ChainQuotient::new(family, n);
    let a = ChainElement::basis(family, n, 3)?;
    let product = quotient.multiply(&a, &a)?;
    println!("\nquotient model: image of x_3^2 has falling coefficients {:?}",
        product.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());

    // D_n chains are a rescaled copy of the A_{n-1} chains.
    let d_product = closed_form_product(ClassicalFamily::D, 5, 4, 4)?;
    println!("\nD5: x_4^2 = {d_product}");
    println!("    phi(x_4^2) = {} in the A4 chain algebra", phi_d_to_a(5, &d_product)?);
    Ok(())
}
