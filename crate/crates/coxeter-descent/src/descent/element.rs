//! Elements of the descent algebra as sparse rational combinations of the
//! basis `{x_J : J ⊆ S}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::SubsetMask;

/// A sparse exact-rational linear combination of basis elements `x_J`.
/// Zero coefficients are never stored; iteration order is bitmask-ascending.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AlgebraElement {
    coeffs: BTreeMap<SubsetMask, BigRational>,
}

impl AlgebraElement {
    pub fn zero() -> AlgebraElement {
        AlgebraElement::default()
    }

    /// The basis element `x_J`.
    pub fn basis(j: SubsetMask) -> AlgebraElement {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(j, BigRational::one());
        AlgebraElement { coeffs }
    }

    pub fn from_integer_terms(terms: &[(SubsetMask, i64)]) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for &(j, c) in terms {
            out.add_scaled(j, &BigRational::from(BigInt::from(c)));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, j: SubsetMask) -> BigRational {
        self.coeffs.get(&j).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Adds `c * x_J` in place.
    pub fn add_scaled(&mut self, j: SubsetMask, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(j).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&j);
        }
    }

    pub fn add(&self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (&j, c) in &rhs.coeffs {
            out.add_scaled(j, c);
        }
        out
    }

    pub fn sub(&self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (&j, c) in &rhs.coeffs {
            out.add_scaled(j, &-c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&j, a)| (j, a * c))
                .collect(),
        }
    }

    /// Support: subsets with nonzero coefficient, ascending by bitmask.
    pub fn support(&self) -> Vec<SubsetMask> {
        self.coeffs.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (SubsetMask, &BigRational)> {
        self.coeffs.iter().map(|(&j, c)| (j, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// Coordinates over the full subset lattice of the given rank.
    pub fn dense_coords(&self, rank: usize) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); 1 << rank];
        for (&j, c) in &self.coeffs {
            v[j.bits() as usize] = c.clone();
        }
        v
    }

    /// JSON object mapping subset strings to rational strings, with keys in
    /// bitmask-ascending order.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (&j, c) in &self.coeffs {
            map.insert(j.to_string(), serde_json::Value::String(c.to_string()));
        }
        serde_json::Value::Object(map)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&j, c) in &self.coeffs {
            if !first {
                write!(f, " {} ", if c < &BigRational::zero() { "-" } else { "+" })?;
            } else if c < &BigRational::zero() {
                write!(f, "-")?;
            }
            let abs = if c < &BigRational::zero() { -c.clone() } else { c.clone() };
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "x{{{j}}}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_zero_coefficients_stored() {
        let mut e = AlgebraElement::basis(SubsetMask::from_indices(&[1]));
        e.add_scaled(SubsetMask::from_indices(&[1]), &-BigRational::one());
        assert!(e.is_zero());
        assert_eq!(e.num_terms(), 0);
    }

    #[test]
    fn display_and_json_order() {
        let e = AlgebraElement::from_integer_terms(&[
            (SubsetMask::from_indices(&[1, 3]), 2),
            (SubsetMask::EMPTY, 1),
            (SubsetMask::from_indices(&[1]), -1),
        ]);
        assert_eq!(e.to_string(), "x{-} - x{1} + 2*x{1,3}");
        let json = serde_json::to_string(&e.to_json()).unwrap();
        assert_eq!(json, r#"{"-":"1","1":"-1","1,3":"2"}"#);
    }
}
