//! The multiplication rule of the descent algebra.
//!
//! `x_J x_K = sum_{d in X_JK} x_{J^d ∩ K}`, so the structure constant
//! `a_JKL` counts representatives `d` with `J^d ∩ K = L`. Membership
//! `d ∈ X_JK` is decided by descent conditions alone (left ascents ⊇ J,
//! right ascents ⊇ K), and per-system results are memoized: iterated powers
//! reuse the same `(J, K)` pairs heavily.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::coxeter::CoxeterSystem;
use crate::{Result, SubsetMask};

use super::AlgebraElement;

/// The Solomon product `x_J · x_K` expanded over the `x` basis. Coefficients
/// are nonnegative integers by construction.
///
/// ```
/// use coxeter_descent::coxeter::{CoxeterSystem, CoxeterType};
/// use coxeter_descent::descent::solomon_product;
/// use coxeter_descent::SubsetMask;
///
/// let a2 = CoxeterSystem::build(CoxeterType::parse("A2")?)?;
/// let j = SubsetMask::singleton(1);
/// let square = solomon_product(&a2, j, j)?;
/// assert_eq!(square.to_string(), "x{-} + x{1}");
/// # Ok::<(), coxeter_descent::Error>(())
/// ```
pub fn solomon_product(
    sys: &CoxeterSystem,
    j: SubsetMask,
    k: SubsetMask,
) -> Result<AlgebraElement> {
    if let Some(hit) = sys.product_cache.lock().unwrap().get(&(j, k)) {
        return Ok(hit.clone());
    }
    let data = sys.enumeration()?;
    let mut counts: std::collections::BTreeMap<SubsetMask, u64> = Default::default();
    for idx in 0..data.elements.len() {
        if !j.is_subset_of(data.lmask[idx]) || !k.is_subset_of(data.rmask[idx]) {
            continue;
        }
        // L = J^d ∩ K via the cached simple-reflection conjugation map.
        let mut l = 0u16;
        let conj = &data.conj[idx];
        for s in j.indices() {
            let t = conj[s - 1];
            if t != 0xFF && k.contains(t as usize + 1) {
                l |= 1 << t;
            }
        }
        *counts.entry(SubsetMask::from_bits(l)).or_insert(0) += 1;
    }
    let mut out = AlgebraElement::zero();
    for (l, c) in counts {
        out.add_scaled(l, &BigRational::from(BigInt::from(c)));
    }
    sys.product_cache.lock().unwrap().insert((j, k), out.clone());
    Ok(out)
}

/// The structure constant `a_JKL`.
pub fn structure_constant(
    sys: &CoxeterSystem,
    j: SubsetMask,
    k: SubsetMask,
    l: SubsetMask,
) -> Result<BigRational> {
    Ok(solomon_product(sys, j, k)?.coeff(l))
}

/// Bilinear extension of the Solomon product to arbitrary algebra elements.
pub fn product_of_elements(
    sys: &CoxeterSystem,
    a: &AlgebraElement,
    b: &AlgebraElement,
) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero();
    for (j, cj) in a.iter() {
        for (k, ck) in b.iter() {
            let basis_product = solomon_product(sys, j, k)?;
            let c = cj * ck;
            for (l, cl) in basis_product.iter() {
                out.add_scaled(l, &(cl * &c));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterType;
    use crate::descent::{algebra_to_group_vector, x_of};
    use num_traits::Zero;

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn a2_square_of_x1() {
        // x_{s1}^2 = x_{s1} + x_{}.
        let sys = CoxeterSystem::build(CoxeterType::a(2).unwrap()).unwrap();
        let j = SubsetMask::singleton(1);
        let p = solomon_product(&sys, j, j).unwrap();
        let expected =
            AlgebraElement::from_integer_terms(&[(j, 1), (SubsetMask::EMPTY, 1)]);
        assert_eq!(p, expected);
    }

    #[test]
    fn b_chain_square() {
        // B_n: x_{n-1}^2 = 2 x_{n-1} + x_{n-2}.
        for n in 2..=5 {
            let sys = CoxeterSystem::build(CoxeterType::b(n).unwrap()).unwrap();
            let j = SubsetMask::chain(n - 1);
            let p = solomon_product(&sys, j, j).unwrap();
            let expected = AlgebraElement::from_integer_terms(&[
                (j, 2),
                (SubsetMask::chain(n - 2), 1),
            ]);
            assert_eq!(p, expected, "B{n}");
        }
    }

    #[test]
    fn x_s_is_identity() {
        let sys = CoxeterSystem::build(CoxeterType::b(3).unwrap()).unwrap();
        let s = sys.full_set();
        for k in SubsetMask::all(3) {
            assert_eq!(
                solomon_product(&sys, s, k).unwrap(),
                AlgebraElement::basis(k)
            );
            assert_eq!(
                solomon_product(&sys, k, s).unwrap(),
                AlgebraElement::basis(k)
            );
        }
    }

    #[test]
    fn support_stays_inside_second_factor() {
        // a_JKL = 0 unless L ⊆ K.
        for ctype in [CoxeterType::a(3).unwrap(), CoxeterType::b(3).unwrap(), CoxeterType::h3()] {
            let sys = CoxeterSystem::build(ctype).unwrap();
            for j in SubsetMask::all(sys.rank()) {
                for k in SubsetMask::all(sys.rank()) {
                    let p = solomon_product(&sys, j, k).unwrap();
                    for l in p.support() {
                        assert!(l.is_subset_of(k), "{ctype}: supp(x_J x_K) ⊆ P(K)");
                    }
                }
            }
        }
    }

    #[test]
    fn counting_identity() {
        // sum_L a_JKL |X_L| = |X_J| |X_K|.
        for ctype in [
            CoxeterType::a(3).unwrap(),
            CoxeterType::b(3).unwrap(),
            CoxeterType::d(4).unwrap(),
            CoxeterType::i2(8).unwrap(),
        ] {
            let sys = CoxeterSystem::build(ctype).unwrap();
            let sizes: Vec<usize> = SubsetMask::all(sys.rank())
                .map(|j| crate::descent::min_coset_reps(&sys, j).unwrap().len())
                .collect();
            for j in SubsetMask::all(sys.rank()) {
                for k in SubsetMask::all(sys.rank()) {
                    let p = solomon_product(&sys, j, k).unwrap();
                    let mut total = BigRational::zero();
                    for (l, c) in p.iter() {
                        total += c * rat(sizes[l.bits() as usize] as i64);
                    }
                    let expected = rat((sizes[j.bits() as usize] * sizes[k.bits() as usize]) as i64);
                    assert_eq!(total, expected, "{ctype} J={j} K={k}");
                }
            }
        }
    }

    #[test]
    fn power_example_in_a2() {
        // x_J^3 = x_J + 4 x_{} in A_2 (x_J^2 = x_J + x_{}, x_{} x_J = 3 x_{}).
        let sys = CoxeterSystem::build(CoxeterType::a(2).unwrap()).unwrap();
        let j = SubsetMask::singleton(1);
        let xj = AlgebraElement::basis(j);
        let x2 = product_of_elements(&sys, &xj, &xj).unwrap();
        let x3 = product_of_elements(&sys, &x2, &xj).unwrap();
        assert_eq!(
            solomon_product(&sys, SubsetMask::EMPTY, j).unwrap(),
            AlgebraElement::from_integer_terms(&[(SubsetMask::EMPTY, 3)])
        );
        assert_eq!(
            x3,
            AlgebraElement::from_integer_terms(&[(j, 1), (SubsetMask::EMPTY, 4)])
        );
        // Cross-check in the group algebra.
        let vj = x_of(&sys, j).unwrap();
        let v3 = vj
            .convolve(&sys, &vj)
            .unwrap()
            .convolve(&sys, &vj)
            .unwrap();
        assert_eq!(v3, algebra_to_group_vector(&sys, &x3).unwrap());
    }

    #[test]
    fn scalar_identity_action() {
        let sys = CoxeterSystem::build(CoxeterType::a(2).unwrap()).unwrap();
        let two_xs = AlgebraElement::basis(sys.full_set()).scale(&rat(2));
        let xj = AlgebraElement::basis(SubsetMask::singleton(1));
        assert_eq!(
            product_of_elements(&sys, &two_xs, &xj).unwrap(),
            xj.scale(&rat(2))
        );
    }

    #[test]
    fn concurrent_product_queries_agree_with_serial() {
        let sys = CoxeterSystem::build(CoxeterType::b(3).unwrap()).unwrap();
        let serial: Vec<AlgebraElement> = SubsetMask::all(3)
            .flat_map(|j| {
                SubsetMask::all(3).map(move |k| (j, k))
            })
            .map(|(j, k)| solomon_product(&sys, j, k).unwrap())
            .collect();
        let fresh = CoxeterSystem::build(CoxeterType::b(3).unwrap()).unwrap();
        std::thread::scope(|scope| {
            for offset in 0..4usize {
                let fresh = &fresh;
                let serial = &serial;
                scope.spawn(move || {
                    for (index, (j, k)) in SubsetMask::all(3)
                        .flat_map(|j| SubsetMask::all(3).map(move |k| (j, k)))
                        .enumerate()
                    {
                        if index % 4 == offset {
                            assert_eq!(solomon_product(fresh, j, k).unwrap(), serial[index]);
                        }
                    }
                });
            }
        });
    }

    #[test]
    fn associativity_on_small_types() {
        for ctype in [CoxeterType::a(3).unwrap(), CoxeterType::b(3).unwrap()] {
            let sys = CoxeterSystem::build(ctype).unwrap();
            for j in SubsetMask::all(3) {
                for k in SubsetMask::all(3) {
                    let jk = solomon_product(&sys, j, k).unwrap();
                    for l in SubsetMask::all(3) {
                        let kl = solomon_product(&sys, k, l).unwrap();
                        let left =
                            product_of_elements(&sys, &jk, &AlgebraElement::basis(l)).unwrap();
                        let right =
                            product_of_elements(&sys, &AlgebraElement::basis(j), &kl).unwrap();
                        assert_eq!(left, right, "{ctype}: ({j}·{k})·{l} = {j}·({k}·{l})");
                    }
                }
            }
        }
    }
}
