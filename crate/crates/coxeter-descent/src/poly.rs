//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A polynomial over Q, coefficients in ascending degree with no trailing
/// zero; the empty vector is the zero polynomial.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigRational>,
}

impl QPolynomial {
    pub fn zero() -> QPolynomial {
        QPolynomial { coeffs: vec![] }
    }

    pub fn one() -> QPolynomial {
        QPolynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> QPolynomial {
        let mut p = QPolynomial { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The monomial `x`.
    pub fn x() -> QPolynomial {
        QPolynomial {
            coeffs: vec![BigRational::zero(), BigRational::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> QPolynomial {
        let mut p = QPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_integers(coeffs: &[i64]) -> QPolynomial {
        QPolynomial::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .collect(),
        )
    }

    /// Monic product of `(x - a)` over the given roots.
    pub fn from_roots(roots: &[BigRational]) -> QPolynomial {
        let mut p = QPolynomial::one();
        for a in roots {
            let factor = QPolynomial::from_coeffs(vec![-a.clone(), BigRational::one()]);
            p = p.mul(&factor);
        }
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn add(&self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    pub fn sub(&self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }

    pub fn scale(&self, c: &BigRational) -> QPolynomial {
        QPolynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(out)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Coefficient strings in ascending degree, e.g. `["0", "-3/2", "1"]`.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let abs = c.abs();
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let p = QPolynomial::from_integers(&[0, -1, 1]); // x^2 - x
        let q = QPolynomial::x();
        assert_eq!(p.mul(&q), QPolynomial::from_integers(&[0, 0, -1, 1]));
        assert_eq!(p.to_string(), "x^2 - x");
        assert_eq!(QPolynomial::from_integers(&[3]).to_string(), "3");
        assert!(p.has_integer_coeffs());
    }

    #[test]
    fn roots_product() {
        let roots: Vec<BigRational> = [0i64, 1, 3]
            .iter()
            .map(|&r| BigRational::from(BigInt::from(r)))
            .collect();
        let p = QPolynomial::from_roots(&roots);
        // x(x-1)(x-3) = x^3 - 4x^2 + 3x
        assert_eq!(p, QPolynomial::from_integers(&[0, 3, -4, 1]));
        assert!(p.is_monic());
        for r in &roots {
            assert!(p.eval(r).is_zero());
        }
    }
}
