//! Distinguished transversals and the descent algebra of a finite Coxeter
//! group.
//!
//! `X_J = {w : l(ws) > l(w) for all s in J}` is the set of minimal-length
//! left coset representatives of `W_J`; `X_JK = X_J^{-1} ∩ X_K` represents
//! the `(W_J, W_K)` double cosets. The basis element `x_J` is the sum of
//! `X_J` inside the group algebra, and products multiply by counting double
//! coset representatives: `x_J x_K = sum_{d in X_JK} x_{J^d ∩ K}`.
//!
//! Two independent product routes are kept side by side: the counting rule
//! above (the primary path, see [`solomon_product`]) and genuine group
//! algebra convolution over enumerated elements (see [`x_of`] and
//! [`GroupVector::convolve`]), used as a cross-check oracle.

mod element;
mod product;

pub use element::AlgebraElement;
pub use product::{product_of_elements, solomon_product, structure_constant};

use num_rational::BigRational;
use num_traits::Zero;

use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::{Error, Result, SubsetMask};

/// Which distinguished transversal a [`Transversal`] holds.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TransversalKind {
    /// `X_J`: minimal left coset representatives of `W_J` in `W`.
    Left { j: SubsetMask },
    /// `X_J^{(K)} = X_J ∩ W_K`: representatives of `W_J` inside `W_K`.
    Relative { j: SubsetMask, k: SubsetMask },
    /// `X_JK = X_J^{-1} ∩ X_K`: double coset representatives.
    Double { j: SubsetMask, k: SubsetMask },
}

/// An ordered distinguished transversal; elements come in the deterministic
/// (length, payload) order.
pub struct Transversal {
    pub kind: TransversalKind,
    pub elements: Vec<GroupElement>,
}

impl Transversal {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// `X_J`, the minimal-length left coset representatives of `W_J`.
pub fn min_coset_reps(sys: &CoxeterSystem, j: SubsetMask) -> Result<Transversal> {
    let data = sys.enumeration()?;
    let elements = data
        .elements
        .iter()
        .zip(&data.rmask)
        .filter(|(_, &rmask)| j.is_subset_of(rmask))
        .map(|(w, _)| w.clone())
        .collect();
    Ok(Transversal {
        kind: TransversalKind::Left { j },
        elements,
    })
}

/// `X_JK = X_J^{-1} ∩ X_K`, the distinguished double coset representatives.
pub fn min_double_coset_reps(
    sys: &CoxeterSystem,
    j: SubsetMask,
    k: SubsetMask,
) -> Result<Transversal> {
    let data = sys.enumeration()?;
    let elements = data
        .elements
        .iter()
        .enumerate()
        .filter(|(idx, _)| {
            j.is_subset_of(data.lmask[*idx]) && k.is_subset_of(data.rmask[*idx])
        })
        .map(|(_, w)| w.clone())
        .collect();
    Ok(Transversal {
        kind: TransversalKind::Double { j, k },
        elements,
    })
}

/// `X_J^{(K)} = X_J ∩ W_K`; requires `J ⊆ K`.
pub fn relative_coset_reps(
    sys: &CoxeterSystem,
    j: SubsetMask,
    k: SubsetMask,
) -> Result<Transversal> {
    if !j.is_subset_of(k) {
        return Err(Error::NotContained {
            j: j.to_string(),
            k: k.to_string(),
        });
    }
    let elements = sys
        .parabolic_elements(k)?
        .into_iter()
        .filter(|w| j.indices().all(|s| w.has_right_ascent(s).expect("in range")))
        .collect();
    Ok(Transversal {
        kind: TransversalKind::Relative { j, k },
        elements,
    })
}

/// Checks the factorization `X_J = X_K · X_J^{(K)}` (each product appearing
/// exactly once) for `J ⊆ K`, which is the group-algebra identity
/// `x_J = x_K x_J^{(K)}`.
pub fn verify_transversal_factorization(
    sys: &CoxeterSystem,
    j: SubsetMask,
    k: SubsetMask,
) -> Result<()> {
    let x_j = min_coset_reps(sys, j)?;
    let x_k = min_coset_reps(sys, k)?;
    let x_rel = relative_coset_reps(sys, j, k)?;

    let mut seen = std::collections::HashMap::new();
    for v in &x_k.elements {
        for w in &x_rel.elements {
            let product = v.multiply(w)?;
            if let Some(count) = seen.get_mut(product.data()) {
                *count += 1;
                return Err(Error::Factorization {
                    witness: sys.element_to_text(&product),
                    reason: "product appears more than once".into(),
                });
            }
            seen.insert(product.data().clone(), 1usize);
        }
    }
    if seen.len() != x_j.len() {
        return Err(Error::Factorization {
            witness: String::new(),
            reason: format!(
                "product set has {} elements, X_J has {}",
                seen.len(),
                x_j.len()
            ),
        });
    }
    for w in &x_j.elements {
        if !seen.contains_key(w.data()) {
            return Err(Error::Factorization {
                witness: sys.element_to_text(w),
                reason: "element of X_J not produced by the factorization".into(),
            });
        }
    }
    Ok(())
}

/// A vector in the group algebra `Q[W]`, indexed by the deterministic
/// enumeration order of `W`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupVector {
    pub coeffs: Vec<BigRational>,
}

impl GroupVector {
    pub fn zero(sys: &CoxeterSystem) -> Result<GroupVector> {
        Ok(GroupVector {
            coeffs: vec![BigRational::zero(); sys.enumeration()?.elements.len()],
        })
    }

    /// Group-algebra convolution `self * rhs`.
    pub fn convolve(&self, sys: &CoxeterSystem, rhs: &GroupVector) -> Result<GroupVector> {
        let data = sys.enumeration()?;
        let mut out = vec![BigRational::zero(); self.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let product = data.elements[i].multiply(&data.elements[j])?;
                let k = data.index[product.data()];
                out[k] += a * b;
            }
        }
        Ok(GroupVector { coeffs: out })
    }
}

/// `x_J` as a group-algebra vector: the sum over `X_J`.
pub fn x_of(sys: &CoxeterSystem, j: SubsetMask) -> Result<GroupVector> {
    let data = sys.enumeration()?;
    let mut coeffs = vec![BigRational::zero(); data.elements.len()];
    for (idx, &rmask) in data.rmask.iter().enumerate() {
        if j.is_subset_of(rmask) {
            coeffs[idx] = BigRational::from_integer(1.into());
        }
    }
    Ok(GroupVector { coeffs })
}

/// Expands a descent-algebra element into the group algebra.
pub fn algebra_to_group_vector(
    sys: &CoxeterSystem,
    element: &AlgebraElement,
) -> Result<GroupVector> {
    let mut out = GroupVector::zero(sys)?;
    for (j, c) in element.iter() {
        let xj = x_of(sys, j)?;
        for (slot, a) in out.coeffs.iter_mut().zip(&xj.coeffs) {
            *slot += c * a;
        }
    }
    Ok(out)
}
