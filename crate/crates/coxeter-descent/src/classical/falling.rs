//! Stirling numbers and falling-factorial polynomial arithmetic.

use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::QPolynomial;

static STIRLING_FIRST: Mutex<Vec<Vec<BigUint>>> = Mutex::new(Vec::new());
static STIRLING_SECOND: Mutex<Vec<Vec<BigUint>>> = Mutex::new(Vec::new());

fn stirling_lookup(
    table: &Mutex<Vec<Vec<BigUint>>>,
    k: usize,
    m: usize,
    step: impl Fn(&BigUint, &BigUint, usize, usize) -> BigUint,
) -> BigUint {
    let mut rows = table.lock().unwrap();
    if rows.is_empty() {
        rows.push(vec![BigUint::one()]);
    }
    while rows.len() <= k {
        let prev = rows.last().unwrap().clone();
        let n = rows.len();
        let mut row = vec![BigUint::zero(); n + 1];
        for (m, slot) in row.iter_mut().enumerate() {
            let carry = if m > 0 { prev[m - 1].clone() } else { BigUint::zero() };
            let keep = if m < prev.len() { prev[m].clone() } else { BigUint::zero() };
            *slot = step(&carry, &keep, n, m);
        }
        rows.push(row);
    }
    rows[k].get(m).cloned().unwrap_or_else(BigUint::zero)
}

/// Unsigned Stirling number of the first kind: permutations of `k` elements
/// with `m` cycles. Recurrence `c(k, m) = c(k-1, m-1) + (k-1) c(k-1, m)`.
pub fn stirling_first(k: usize, m: usize) -> BigUint {
    stirling_lookup(&STIRLING_FIRST, k, m, |carry, keep, n, _| {
        carry + keep * BigUint::from(n - 1)
    })
}

/// Stirling number of the second kind: partitions of a `k`-element set into
/// `m` nonempty blocks. Recurrence `S(k, m) = S(k-1, m-1) + m S(k-1, m)`.
pub fn stirling_second(k: usize, m: usize) -> BigUint {
    stirling_lookup(&STIRLING_SECOND, k, m, |carry, keep, _, m| {
        carry + keep * BigUint::from(m)
    })
}

pub fn binomial(a: usize, b: usize) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let mut result = BigUint::one();
    for i in 0..b.min(a - b) {
        result = result * BigUint::from(a - i) / BigUint::from(i + 1);
    }
    result
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product::<BigUint>().max(BigUint::one())
}

/// A polynomial written over the falling-power basis `x^(k) = x (x-1) ...
/// (x-k+1)`; coefficients in ascending `k` with no trailing zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FallingPoly {
    coeffs: Vec<BigRational>,
}

impl FallingPoly {
    pub fn zero() -> FallingPoly {
        FallingPoly { coeffs: vec![] }
    }

    /// The single falling power `x^(k)`.
    pub fn falling_power(k: usize) -> FallingPoly {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = BigRational::one();
        FallingPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> FallingPoly {
        let mut p = FallingPoly { coeffs };
        while p.coeffs.last().is_some_and(Zero::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, rhs: &FallingPoly) -> FallingPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FallingPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    pub fn scale(&self, c: &BigRational) -> FallingPoly {
        FallingPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Product over the falling basis:
    /// `x^(a) x^(b) = sum_k C(a,k) C(b,k) k! x^(a+b-k)`.
    pub fn mul(&self, rhs: &FallingPoly) -> FallingPoly {
        let mut out = FallingPoly::zero();
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in rhs.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let c = ca * cb;
                out = out.add(&falling_product(a, b).scale(&c));
            }
        }
        out
    }

    /// Conversion to the monomial basis via signed Stirling numbers of the
    /// first kind.
    pub fn to_monomial(&self) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut mono = vec![BigRational::zero(); k + 1];
            for (m, slot) in mono.iter_mut().enumerate() {
                let s = BigInt::from(stirling_first(k, m));
                let signed = if (k - m) % 2 == 0 { s } else { -s };
                *slot = BigRational::from(signed) * c;
            }
            out = out.add(&QPolynomial::from_coeffs(mono));
        }
        out
    }

    /// Conversion from the monomial basis via Stirling numbers of the second
    /// kind.
    pub fn from_monomial(p: &QPolynomial) -> FallingPoly {
        let mut out = FallingPoly::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut coeffs = vec![BigRational::zero(); k + 1];
            for (m, slot) in coeffs.iter_mut().enumerate() {
                *slot = BigRational::from(BigInt::from(stirling_second(k, m))) * c;
            }
            out = out.add(&FallingPoly::from_coeffs(coeffs));
        }
        out
    }
}

/// `x^(a) * x^(b)` expanded over the falling basis. The coefficient
/// `C(a,k) C(b,k) k!` counts partial bijections matching `k` elements of an
/// `a`-set with `k` elements of a `b`-set.
pub fn falling_product(a: usize, b: usize) -> FallingPoly {
    let mut coeffs = vec![BigRational::zero(); a + b + 1];
    for k in 0..=a.min(b) {
        let c = binomial(a, k) * binomial(b, k) * factorial(k);
        coeffs[a + b - k] = BigRational::from(BigInt::from(c));
    }
    FallingPoly::from_coeffs(coeffs)
}
