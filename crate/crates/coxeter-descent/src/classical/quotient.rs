//! Polynomial models of the chain subalgebras.
//!
//! The subalgebra generated by `x_{n-1}` is isomorphic to a quotient of
//! `Q[x]`: modulo `x^(n+1) - x^(n)` for type A (chain element `x_{n-k}`
//! mapping to `x^(k)`), modulo `x^(n+1)` for type B (mapping to
//! `2^k x^(k)`), and modulo `x^(n) - x^(n-1)` for type D (same scaling,
//! chain indices `1..=n`). Reduction is linear over the falling basis.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::falling::FallingPoly;
use super::{ChainElement, ClassicalFamily};
use crate::Result;

/// The quotient ring `Q[x]/I` modelling a chain subalgebra.
#[derive(Clone, Copy, Debug)]
pub struct ChainQuotient {
    pub family: ClassicalFamily,
    pub n: usize,
}

impl ChainQuotient {
    pub fn new(family: ClassicalFamily, n: usize) -> ChainQuotient {
        ChainQuotient { family, n }
    }

    /// Reduces a falling-basis polynomial modulo the defining ideal. Each
    /// falling power reduces independently: for type A, `x^(n+1) = x^(n)`
    /// and higher powers vanish; for type B everything above `x^(n)`
    /// vanishes; for type D, `x^(n) = x^(n-1)` and higher powers vanish.
    pub fn reduce(&self, p: &FallingPoly) -> FallingPoly {
        let n = self.n;
        let (fold_from, cutoff) = match self.family {
            ClassicalFamily::A => (Some(n + 1), n + 2),
            ClassicalFamily::B => (None, n + 1),
            ClassicalFamily::D => (Some(n), n + 1),
        };
        let mut coeffs = vec![BigRational::zero(); cutoff];
        for (k, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match fold_from {
                Some(fold) if k == fold => coeffs[fold - 1] += c,
                _ if k < cutoff => coeffs[k] += c,
                _ => {} // higher falling powers lie in the ideal
            }
        }
        FallingPoly::from_coeffs(coeffs)
    }

    /// Image of the chain element `x_j` in the quotient.
    pub fn image_of_chain(&self, j: isize) -> Result<FallingPoly> {
        let n = self.n;
        let (lo, _hi) = self.family.chain_range(n);
        // Allow the formal x_0 for type D: it folds to twice x_1.
        if self.family == ClassicalFamily::D && j == 0 {
            return Ok(self.image_of_chain(1)?.scale(&BigRational::from(BigInt::from(2))));
        }
        if j < lo as isize || j > n as isize {
            return Err(crate::Error::ChainIndex {
                family: self.family.letter(),
                rank: n,
                index: j,
            });
        }
        let k = n - j as usize;
        let base = FallingPoly::falling_power(k);
        Ok(match self.family {
            ClassicalFamily::A => base,
            ClassicalFamily::B | ClassicalFamily::D => {
                base.scale(&BigRational::from(BigInt::from(2).pow(k as u32)))
            }
        })
    }

    /// Image of a chain-coordinate element, extended linearly.
    pub fn image_of(&self, element: &ChainElement) -> Result<FallingPoly> {
        let mut out = FallingPoly::zero();
        for (j, c) in element.iter() {
            if !c.is_zero() {
                out = out.add(&self.image_of_chain(j as isize)?.scale(c));
            }
        }
        Ok(out)
    }

    /// Multiplies two chain elements inside the quotient model.
    pub fn multiply(&self, a: &ChainElement, b: &ChainElement) -> Result<FallingPoly> {
        let pa = self.image_of(a)?;
        let pb = self.image_of(b)?;
        Ok(self.reduce(&pa.mul(&pb)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::closed_form_product;

    #[test]
    fn reduction_kills_high_powers() {
        let q = ChainQuotient::new(ClassicalFamily::A, 3);
        // x^(4) = x^(3), x^(5) = 0 in Q[x]/(x^(4) - x^(3)).
        assert_eq!(
            q.reduce(&FallingPoly::falling_power(4)),
            FallingPoly::falling_power(3)
        );
        assert!(q.reduce(&FallingPoly::falling_power(5)).is_zero());
        let qb = ChainQuotient::new(ClassicalFamily::B, 3);
        assert!(qb.reduce(&FallingPoly::falling_power(4)).is_zero());
        let qd = ChainQuotient::new(ClassicalFamily::D, 3);
        assert_eq!(
            qd.reduce(&FallingPoly::falling_power(3)),
            FallingPoly::falling_power(2)
        );
    }

    #[test]
    fn quotient_multiplication_matches_closed_forms() {
        for family in [ClassicalFamily::A, ClassicalFamily::B, ClassicalFamily::D] {
            for n in family.min_rank()..=8 {
                let q = ChainQuotient::new(family, n);
                let (lo, hi) = family.chain_range(n);
                for j in lo..=hi {
                    for k in lo..=hi {
                        let xj = ChainElement::basis(family, n, j).unwrap();
                        let xk = ChainElement::basis(family, n, k).unwrap();
                        let in_quotient = q.multiply(&xj, &xk).unwrap();
                        let closed = closed_form_product(family, n, j, k).unwrap();
                        let image = q.image_of(&closed).unwrap();
                        assert_eq!(
                            in_quotient, image,
                            "{family:?} n={n}: x_{j} x_{k} in the quotient model"
                        );
                    }
                }
            }
        }
    }
}
