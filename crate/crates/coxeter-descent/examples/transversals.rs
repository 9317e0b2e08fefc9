//! Distinguished coset and double-coset transversals, and the factorization
//! `X_J = X_K X_J^(K)` for nested subsets.
//!
//! ```bash
//! cargo run -p coxeter-descent --example transversals
//! ```

use coxeter_descent::descent::{
    min_coset_reps, min_double_coset_reps, relative_coset_reps,
    verify_transversal_factorization,
};
use coxeter_descent::coxeter::{CoxeterSystem, CoxeterType};
use coxeter_descent::SubsetMask;

fn main() -> coxeter_descent::Result<()> {
    let b3 = CoxeterSystem::build(CoxeterType::parse("B3")?)?;

    // X_J: minimal-length representatives of the cosets w W_J.
    let j = SubsetMask::from_indices(&[1, 2]);
    let x_j = min_coset_reps(&b3, j)?;
    println!("B3, J = {{{j}}}: |X_J| = {} = |W| / |W_J|", x_j.len());
    for w in &x_j.elements {
        println!("  '{}'", b3.element_to_text(w));
    }

    // X_JK: the distinguished double-coset representatives. For the chain
    // J = K = {s1, s2} there are exactly three.
    let x_jj = min_double_coset_reps(&b3, j, j)?;
    println!("\nB3, double cosets W_J \\ W / W_J: {} representatives", x_jj.len());
    for w in &x_jj.elements {
        println!("  '{}' (length {})", b3.element_to_text(w), w.length());
    }

    // Relative transversal and the product factorization.
    let small = SubsetMask::singleton(1);
    let rel = relative_coset_reps(&b3, small, j)?;
    println!(
        "\nX_{{{small}}} ∩ W_{{{j}}} has {} elements; X_{{{small}}} = X_{{{j}}} · X_{{{small}}}^({j}): {}",
        rel.len(),
        verify_transversal_factorization(&b3, small, j).is_ok()
    );
    Ok(())
}
