//! Multiply descent-algebra basis elements by the double-coset counting rule
//! and cross-check against genuine group-algebra convolution.
//!
//! ```bash
//! cargo run -p coxeter-descent --example solomon_products
//! ```

use coxeter_descent::descent::{
    algebra_to_group_vector, product_of_elements, solomon_product, x_of, AlgebraElement,
};
use coxeter_descent::coxeter::{CoxeterSystem, CoxeterType};
use coxeter_descent::SubsetMask;

fn main() -> coxeter_descent::Result<()> {
    let b3 = CoxeterSystem::build(CoxeterType::parse("B3")?)?;

    // x_J x_K expands over the basis with nonnegative integer coefficients,
    // supported on subsets of K.
    for (j, k) in [
        (SubsetMask::from_indices(&[1, 2]), SubsetMask::from_indices(&[1, 2])),
        (SubsetMask::from_indices(&[1, 3]), SubsetMask::from_indices(&[1, 3])),
        (SubsetMask::EMPTY, SubsetMask::from_indices(&[2, 3])),
    ] {
        let p = solomon_product(&b3, j, k)?;
        println!("x{{{j}}} * x{{{k}}} = {p}");
    }

    // Repeated products: powers of x_{s1} in A2.
    let a2 = CoxeterSystem::build(CoxeterType::parse("A2")?)?;
    let xj = AlgebraElement::basis(SubsetMask::singleton(1));
    let mut power = AlgebraElement::basis(a2.full_set());
    for exponent in 1..=4 {
        power = product_of_elements(&a2, &power, &xj)?;
        println!("A2: x{{1}}^{exponent} = {power}");
    }

    // The same arithmetic inside the group algebra: expand x_J as a sum of
    // group elements and convolve.
    let j = SubsetMask::singleton(1);
    let vj = x_of(&a2, j)?;
    let square_by_convolution = vj.convolve(&a2, &vj)?;
    let square_by_rule = solomon_product(&a2, j, j)?;
    println!(
        "A2: counting rule and convolution agree: {}",
        algebra_to_group_vector(&a2, &square_by_rule)? == square_by_convolution
    );
    Ok(())
}
