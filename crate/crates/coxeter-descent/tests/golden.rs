//! Golden outputs: frozen chain structure-constant tables and the
//! double-coset counting behind the type-A closed form.

use coxeter_descent::classical::{chain_table_csv, closed_form_product, ClassicalFamily};
use coxeter_descent::coxeter::{CoxeterSystem, CoxeterType};
use coxeter_descent::descent::min_double_coset_reps;
use coxeter_descent::SubsetMask;

use num_bigint::BigInt;
use num_rational::BigRational;

#[test]
fn frozen_chain_tables() {
    let a3 = "\
j\\k,0,1,2,3
0,0:24,0:12,0:4,0:1
1,0:12,0:5;1:2,0:1;1:2,1:1
2,0:4,0:1;1:2,1:1;2:1,2:1
3,0:1,1:1,2:1,3:1
";
    assert_eq!(chain_table_csv(ClassicalFamily::A, 3).unwrap(), a3);

    let b3 = "\
j\\k,0,1,2,3
0,0:48,0:24,0:6,0:1
1,0:24,0:8;1:8,0:1;1:4,1:1
2,0:6,0:1;1:4,1:1;2:2,2:1
3,0:1,1:1,2:1,3:1
";
    assert_eq!(chain_table_csv(ClassicalFamily::B, 3).unwrap(), b3);

    let d4 = "\
j\\k,1,2,3,4
1,1:192,1:48,1:8,1:1
2,1:48,1:10;2:8,1:1;2:4,2:1
3,1:8,1:1;2:4,2:1;3:2,3:1
4,1:1,2:1,3:1,4:1
";
    assert_eq!(chain_table_csv(ClassicalFamily::D, 4).unwrap(), d4);
}

/// Counts, for each chain target, the double-coset representatives whose
/// conjugation lands there: the combinatorial reading of the type-A closed
/// form. Runs over the transversal elements directly, independent of the
/// cached product machinery.
#[test]
fn type_a_counting_identity() {
    for n in 1..=5 {
        let sys = CoxeterSystem::build(CoxeterType::a(n).unwrap()).unwrap();
        for j in 0..=n {
            for k in 0..=n {
                let j_mask = SubsetMask::chain(j);
                let k_mask = SubsetMask::chain(k);
                let reps = min_double_coset_reps(&sys, j_mask, k_mask).unwrap();
                let mut counts = vec![0i64; n + 1];
                for d in &reps.elements {
                    let image = sys.conjugate_subset(j_mask, d).intersection(k_mask);
                    // The image of a chain under a distinguished
                    // representative is again a chain in type A.
                    let l = (0..=n)
                        .find(|&l| SubsetMask::chain(l) == image)
                        .expect("image is a chain");
                    counts[l] += 1;
                }
                let closed = closed_form_product(ClassicalFamily::A, n, j, k).unwrap();
                for (l, &count) in counts.iter().enumerate() {
                    assert_eq!(
                        closed.coeff(l),
                        BigRational::from(BigInt::from(count)),
                        "A{n}: x_{j} x_{k} coefficient of x_{l}"
                    );
                }
            }
        }
    }
}
