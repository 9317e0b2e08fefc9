//! Closed-form layer for the classical chain subalgebras.
//!
//! For `W` of type `A_n`, `B_n` or `D_n`, `x_j` abbreviates the basis
//! element of the left chain `{s_1, .., s_j}`. These chain elements span a
//! commutative subalgebra with explicit structure constants:
//!
//! ```text
//! x_j x_k = sum_l C(n-j, k-l) C(n-k, j-l) (n-j-k+l)! * [2^(n-j-k+l)] x_l
//! ```
//!
//! (the 2-power only in types B and D). Each type has a boundary
//! convention — type A folds `x_{-1} := x_0`, type B sets `x_{-1} := 0`,
//! type D works with indices `1..=n` (chain index 1 stands for the empty
//! set, since the singleton `{s_1}` is excluded from the chain) and folds
//! the formal `x_0 := 2 x_1`. The folding is centralized in
//! [`ChainElement::add_folded`]; every recurrence, closed form, and
//! comparison goes through it.

mod falling;
mod quotient;

pub use falling::{
    binomial, factorial, falling_product, stirling_first, stirling_second, FallingPoly,
};
pub use quotient::ChainQuotient;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coxeter::Family;
use crate::descent::AlgebraElement;
use crate::poly::QPolynomial;
use crate::{Error, Result, SubsetMask};

/// The three classical families.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClassicalFamily {
    A,
    B,
    D,
}

impl ClassicalFamily {
    pub fn letter(self) -> &'static str {
        match self {
            ClassicalFamily::A => "A",
            ClassicalFamily::B => "B",
            ClassicalFamily::D => "D",
        }
    }

    pub fn from_family(family: Family) -> Option<ClassicalFamily> {
        match family {
            Family::A => Some(ClassicalFamily::A),
            Family::B => Some(ClassicalFamily::B),
            Family::D => Some(ClassicalFamily::D),
            _ => None,
        }
    }

    pub fn min_rank(self) -> usize {
        match self {
            ClassicalFamily::A => 1,
            ClassicalFamily::B => 2,
            ClassicalFamily::D => 3,
        }
    }

    /// Valid chain indices `(lo, hi)` at rank `n`: `0..=n` for A and B,
    /// `1..=n` for D.
    pub fn chain_range(self, n: usize) -> (usize, usize) {
        match self {
            ClassicalFamily::D => (1, n),
            _ => (0, n),
        }
    }

    /// The subset of `S` behind chain index `j`. For type D, index 1 is the
    /// empty set (the chain-convention aliasing); `{s_1}` itself is not a
    /// chain subset.
    pub fn chain_subset(self, n: usize, j: usize) -> Result<SubsetMask> {
        let (lo, hi) = self.chain_range(n);
        if j < lo || j > hi {
            return Err(Error::ChainIndex {
                family: self.letter(),
                rank: n,
                index: j as isize,
            });
        }
        Ok(match self {
            ClassicalFamily::D if j == 1 => SubsetMask::EMPTY,
            _ => SubsetMask::chain(j),
        })
    }

    /// Inverse of [`ClassicalFamily::chain_subset`]: the chain index of a
    /// raw subset, when it is one.
    pub fn chain_index(self, n: usize, subset: SubsetMask) -> Option<usize> {
        let (lo, hi) = self.chain_range(n);
        (lo..=hi).find(|&j| self.chain_subset(n, j) == Ok(subset))
    }

    /// The recurrence coefficient in `x_{n-1} x_{n-k} = c_k x_{n-k} +
    /// x_{n-k-1}`: `k` for type A and `2k` for types B and D.
    fn recurrence_coefficient(self, k: usize) -> i64 {
        match self {
            ClassicalFamily::A => k as i64,
            _ => 2 * k as i64,
        }
    }

    fn two_power_twist(self) -> bool {
        !matches!(self, ClassicalFamily::A)
    }
}

/// Whether a raw subset is a left chain under the labelling of the family.
/// For type D the chains are the empty set and `{s_1..s_j}` with `j >= 2`;
/// the singleton `{s_1}` is excluded.
pub fn is_left_connected(family: ClassicalFamily, rank: usize, subset: SubsetMask) -> bool {
    family.chain_index(rank, subset).is_some()
}

/// An exact-rational vector over the chain indices of one classical type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainElement {
    pub family: ClassicalFamily,
    pub n: usize,
    /// Coefficient of `x_j` at index `j`; slot 0 is unused for type D.
    coeffs: Vec<BigRational>,
}

impl ChainElement {
    pub fn zero(family: ClassicalFamily, n: usize) -> ChainElement {
        ChainElement {
            family,
            n,
            coeffs: vec![BigRational::zero(); n + 1],
        }
    }

    pub fn basis(family: ClassicalFamily, n: usize, j: usize) -> Result<ChainElement> {
        let (lo, hi) = family.chain_range(n);
        if j < lo || j > hi {
            return Err(Error::ChainIndex {
                family: family.letter(),
                rank: n,
                index: j as isize,
            });
        }
        let mut out = ChainElement::zero(family, n);
        out.coeffs[j] = BigRational::one();
        Ok(out)
    }

    /// Adds `c * x_j`, applying the boundary folding: type A folds index -1
    /// into index 0, type B drops index -1, type D folds index 0 as `2 x_1`.
    pub fn add_folded(&mut self, j: isize, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        match (self.family, j) {
            (ClassicalFamily::A, -1) => self.coeffs[0] += c,
            (ClassicalFamily::B, -1) => {}
            (ClassicalFamily::D, 0) => {
                self.coeffs[1] += c * BigRational::from(BigInt::from(2))
            }
            (_, j) => {
                let (lo, hi) = self.family.chain_range(self.n);
                assert!(
                    j >= lo as isize && j <= hi as isize,
                    "chain index {j} out of range for {}{}",
                    self.family.letter(),
                    self.n
                );
                self.coeffs[j as usize] += c;
            }
        }
    }

    pub fn coeff(&self, j: usize) -> BigRational {
        self.coeffs.get(j).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `(j, coefficient)` pairs over the valid chain range.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        let (lo, hi) = self.family.chain_range(self.n);
        self.coeffs[lo..=hi]
            .iter()
            .enumerate()
            .map(move |(off, c)| (lo + off, c))
    }

    pub fn scale(&self, c: &BigRational) -> ChainElement {
        ChainElement {
            family: self.family,
            n: self.n,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add(&self, rhs: &ChainElement) -> ChainElement {
        assert_eq!((self.family, self.n), (rhs.family, rhs.n));
        ChainElement {
            family: self.family,
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Converts to a descent-algebra element over raw subsets.
    pub fn to_algebra(&self) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero();
        for (j, c) in self.iter() {
            out.add_scaled(self.family.chain_subset(self.n, j)?, c);
        }
        Ok(out)
    }

    /// Reads a descent-algebra element supported on chain subsets back into
    /// chain coordinates; fails if any support subset is not a chain.
    pub fn from_algebra(
        family: ClassicalFamily,
        n: usize,
        element: &AlgebraElement,
    ) -> Result<ChainElement> {
        let mut out = ChainElement::zero(family, n);
        for (subset, c) in element.iter() {
            let j = family.chain_index(n, subset).ok_or(Error::Parse {
                what: "chain element",
                input: format!("support contains non-chain subset {subset}"),
            })?;
            out.coeffs[j] += c;
        }
        Ok(out)
    }
}

impl fmt::Display for ChainElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.iter() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{c}*x_{j}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The chain recurrence `x_{n-1} x_{n-k} = c x_{n-k} + x_{n-k-1}` with the
/// type-specific coefficient and boundary folding applied; valid for
/// `0 <= k <= n` (types A, B) or `0 <= k <= n-1` (type D).
pub fn chain_recurrence(family: ClassicalFamily, n: usize, k: usize) -> Result<ChainElement> {
    let max_k = match family {
        ClassicalFamily::D => n - 1,
        _ => n,
    };
    if k > max_k {
        return Err(Error::ChainIndex {
            family: family.letter(),
            rank: n,
            index: k as isize,
        });
    }
    let mut out = ChainElement::zero(family, n);
    let c = BigRational::from(BigInt::from(family.recurrence_coefficient(k)));
    out.add_folded((n - k) as isize, &c);
    out.add_folded(n as isize - k as isize - 1, &BigRational::one());
    Ok(out)
}

/// `x_{n-k}` as a polynomial in `x_{n-1}`: the product of `(x - i)` over
/// `i = 0, .., k-1` for type A, and `(x - 2i)` for types B and D. The
/// coefficients are integers.
pub fn chain_as_polynomial(family: ClassicalFamily, n: usize, k: usize) -> Result<QPolynomial> {
    let max_k = match family {
        ClassicalFamily::D => n - 1,
        _ => n,
    };
    if k > max_k {
        return Err(Error::ChainIndex {
            family: family.letter(),
            rank: n,
            index: k as isize,
        });
    }
    let step = if family.two_power_twist() { 2 } else { 1 };
    let roots: Vec<BigRational> = (0..k)
        .map(|i| BigRational::from(BigInt::from((step * i) as i64)))
        .collect();
    Ok(QPolynomial::from_roots(&roots))
}

/// Base-change matrices between the native chain basis and the powers of
/// `x_{n-1}`.
pub struct BaseChange {
    /// Row `k`: `x_{n-k}` expressed in powers `x_{n-1}^m`, entries
    /// `(-1)^{k-m} c(k,m)` times `2^{k-m}` for B and D.
    pub native_in_powers: Vec<Vec<BigInt>>,
    /// Row `k`: `x_{n-1}^k` expressed in natives `x_{n-m}`, entries
    /// `S(k,m)` times `2^{k-m}` for B and D.
    pub powers_in_native: Vec<Vec<BigInt>>,
}

/// Builds the two mutually inverse triangular base-change matrices. They are
/// `(n+1) x (n+1)` for types A and B, and `n x n` for type D (indices
/// `k = 0..n-1` against the basis `{x_1..x_n}`).
pub fn base_change(family: ClassicalFamily, n: usize) -> BaseChange {
    let size = match family {
        ClassicalFamily::D => n,
        _ => n + 1,
    };
    let twist = family.two_power_twist();
    let mut native_in_powers = vec![vec![BigInt::zero(); size]; size];
    let mut powers_in_native = vec![vec![BigInt::zero(); size]; size];
    for k in 0..size {
        for m in 0..=k {
            let pow2 = if twist {
                BigInt::from(2).pow((k - m) as u32)
            } else {
                BigInt::one()
            };
            let first = BigInt::from(stirling_first(k, m)) * &pow2;
            native_in_powers[k][m] = if (k - m) % 2 == 0 { first } else { -first };
            powers_in_native[k][m] = BigInt::from(stirling_second(k, m)) * pow2;
        }
    }
    BaseChange {
        native_in_powers,
        powers_in_native,
    }
}

/// The closed-form product of chain basis elements:
/// `x_j x_k = sum_l C(n-j,k-l) C(n-k,j-l) (n-j-k+l)! [2^{n-j-k+l}] x_l`,
/// boundary terms folded per type. All coefficients are nonnegative
/// integers.
///
/// ```
/// use coxeter_descent::classical::{closed_form_product, ClassicalFamily};
///
/// // B_4: x_3 x_3 = 2 x_3 + x_2.
/// let p = closed_form_product(ClassicalFamily::B, 4, 3, 3)?;
/// assert_eq!(p.to_string(), "1*x_2 + 2*x_3");
/// # Ok::<(), coxeter_descent::Error>(())
/// ```
pub fn closed_form_product(
    family: ClassicalFamily,
    n: usize,
    j: usize,
    k: usize,
) -> Result<ChainElement> {
    let (lo, hi) = family.chain_range(n);
    if j < lo || j > hi || k < lo || k > hi {
        return Err(Error::ChainIndex {
            family: family.letter(),
            rank: n,
            index: j.max(k) as isize,
        });
    }
    let mut out = ChainElement::zero(family, n);
    let low = match family {
        ClassicalFamily::A => -1isize,
        _ => 0,
    };
    for l in low..=j.min(k) as isize {
        let b1 = binomial(n - j, (k as isize - l) as usize);
        let b2 = binomial(n - k, (j as isize - l) as usize);
        if b1.is_zero() || b2.is_zero() {
            continue;
        }
        let residue = (n as isize + l - j as isize - k as isize) as usize;
        let mut c = b1 * b2 * factorial(residue);
        if family.two_power_twist() {
            c *= num_bigint::BigUint::from(2u32).pow(residue as u32);
        }
        out.add_folded(l, &BigRational::from(BigInt::from(c)));
    }
    Ok(out)
}

/// CSV table of the closed-form chain structure constants: rows `j`,
/// columns `k`, each cell the list `l:coeff;...` over nonzero terms. Used by
/// the golden tests.
pub fn chain_table_csv(family: ClassicalFamily, n: usize) -> Result<String> {
    let (lo, hi) = family.chain_range(n);
    let mut out = String::from("j\\k");
    for k in lo..=hi {
        out.push_str(&format!(",{k}"));
    }
    out.push('\n');
    for j in lo..=hi {
        out.push_str(&j.to_string());
        for k in lo..=hi {
            let product = closed_form_product(family, n, j, k)?;
            let cell: Vec<String> = product
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(l, c)| format!("{l}:{c}"))
                .collect();
            out.push_str(&format!(",{}", cell.join(";")));
        }
        out.push('\n');
    }
    Ok(out)
}

/// The algebra isomorphism from the type-D chain algebra at rank `n` to the
/// type-A chain algebra at rank `n-1`: `x_j -> 2^{n-j} x_{j-1}`, extended
/// linearly.
pub fn phi_d_to_a(n: usize, element: &ChainElement) -> Result<ChainElement> {
    if element.family != ClassicalFamily::D || element.n != n || n < 3 {
        return Err(Error::Parse {
            what: "type-D chain element",
            input: format!(
                "{}{} (expected D{n}, n >= 3)",
                element.family.letter(),
                element.n
            ),
        });
    }
    let mut out = ChainElement::zero(ClassicalFamily::A, n - 1);
    for (j, c) in element.iter() {
        if c.is_zero() {
            continue;
        }
        let scale = BigRational::from(BigInt::from(2).pow((n - j) as u32));
        out.add_folded((j - 1) as isize, &(c * scale));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(x: i64) -> BigRational {
        BigRational::from(BigInt::from(x))
    }

    #[test]
    fn chain_subset_aliasing_for_type_d() {
        let d = ClassicalFamily::D;
        assert_eq!(d.chain_subset(4, 1).unwrap(), SubsetMask::EMPTY);
        assert_eq!(d.chain_subset(4, 2).unwrap(), SubsetMask::chain(2));
        assert!(d.chain_subset(4, 0).is_err());
        assert_eq!(d.chain_index(4, SubsetMask::EMPTY), Some(1));
        assert_eq!(d.chain_index(4, SubsetMask::singleton(1)), None);
        assert_eq!(
            ClassicalFamily::A.chain_subset(4, 0).unwrap(),
            SubsetMask::EMPTY
        );
    }

    #[test]
    fn left_connected_subsets() {
        assert!(is_left_connected(ClassicalFamily::A, 4, SubsetMask::chain(2)));
        assert!(is_left_connected(ClassicalFamily::A, 4, SubsetMask::EMPTY));
        assert!(!is_left_connected(
            ClassicalFamily::A,
            4,
            SubsetMask::from_indices(&[1, 3])
        ));
        assert!(is_left_connected(ClassicalFamily::D, 4, SubsetMask::EMPTY));
        assert!(!is_left_connected(
            ClassicalFamily::D,
            4,
            SubsetMask::singleton(1)
        ));
        assert!(is_left_connected(ClassicalFamily::D, 4, SubsetMask::chain(2)));
    }

    #[test]
    fn recurrence_boundaries() {
        // A, n=4, k=0: x_3 x_4 = 0*x_4 + x_3.
        let r = chain_recurrence(ClassicalFamily::A, 4, 0).unwrap();
        assert_eq!(r.coeff(4), rat(0));
        assert_eq!(r.coeff(3), rat(1));
        // A, k=n: x_{n-1} x_0 = (n+1) x_0.
        for n in 1..=6 {
            let r = chain_recurrence(ClassicalFamily::A, n, n).unwrap();
            assert_eq!(r.coeff(0), rat(n as i64 + 1), "A{n}");
        }
        // B, k=n: x_{n-1} x_0 = 2n x_0.
        for n in 2..=6 {
            let r = chain_recurrence(ClassicalFamily::B, n, n).unwrap();
            assert_eq!(r.coeff(0), rat(2 * n as i64), "B{n}");
        }
        // D, k=n-1: x_{n-1} x_1 = 2n x_1.
        for n in 3..=6 {
            let r = chain_recurrence(ClassicalFamily::D, n, n - 1).unwrap();
            assert_eq!(r.coeff(1), rat(2 * n as i64), "D{n}");
            assert!(chain_recurrence(ClassicalFamily::D, n, n).is_err());
        }
    }

    #[test]
    fn chain_polynomials() {
        // A, k=2: x(x-1); B, k=2: x(x-2); k=0: constant 1.
        assert_eq!(
            chain_as_polynomial(ClassicalFamily::A, 4, 2).unwrap(),
            QPolynomial::from_integers(&[0, -1, 1])
        );
        assert_eq!(
            chain_as_polynomial(ClassicalFamily::B, 4, 2).unwrap(),
            QPolynomial::from_integers(&[0, -2, 1])
        );
        assert_eq!(
            chain_as_polynomial(ClassicalFamily::D, 4, 0).unwrap(),
            QPolynomial::one()
        );
    }

    #[test]
    fn base_change_matrices_are_mutually_inverse() {
        for family in [ClassicalFamily::A, ClassicalFamily::B, ClassicalFamily::D] {
            for n in family.min_rank()..=12 {
                let bc = base_change(family, n);
                let size = bc.native_in_powers.len();
                for r in 0..size {
                    for c in 0..size {
                        let mut sum = BigInt::zero();
                        for t in 0..size {
                            sum += &bc.native_in_powers[r][t] * &bc.powers_in_native[t][c];
                        }
                        let expected = if r == c { BigInt::one() } else { BigInt::zero() };
                        assert_eq!(sum, expected, "{family:?} n={n} ({r},{c})");
                        let mut sum = BigInt::zero();
                        for t in 0..size {
                            sum += &bc.powers_in_native[r][t] * &bc.native_in_powers[t][c];
                        }
                        assert_eq!(sum, expected);
                    }
                }
            }
        }
    }

    #[test]
    fn base_change_examples() {
        // A, n=2: x_0 = x_1^2 - x_1 (row k=2: [0, -1, 1]).
        let bc = base_change(ClassicalFamily::A, 2);
        assert_eq!(
            bc.native_in_powers[2],
            vec![BigInt::zero(), BigInt::from(-1), BigInt::one()]
        );
        // B, n=2: x_0 = x_1^2 - 2 x_1; row k=1 is the identity row.
        let bc = base_change(ClassicalFamily::B, 2);
        assert_eq!(
            bc.native_in_powers[2],
            vec![BigInt::zero(), BigInt::from(-2), BigInt::one()]
        );
        assert_eq!(
            bc.native_in_powers[1],
            vec![BigInt::zero(), BigInt::one(), BigInt::zero()]
        );
    }

    #[test]
    fn base_change_agrees_with_chain_polynomials() {
        // Row k of native_in_powers lists the coefficients of
        // chain_as_polynomial(k).
        for family in [ClassicalFamily::A, ClassicalFamily::B, ClassicalFamily::D] {
            for n in family.min_rank()..=8 {
                let bc = base_change(family, n);
                for (k, row) in bc.native_in_powers.iter().enumerate() {
                    let p = chain_as_polynomial(family, n, k).unwrap();
                    for (m, entry) in row.iter().enumerate() {
                        assert_eq!(
                            p.coeff(m),
                            BigRational::from(entry.clone()),
                            "{family:?} n={n} k={k} m={m}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn closed_form_small_cases() {
        // A, n=2, j=k=1: x_1^2 = x_0 + x_1.
        let p = closed_form_product(ClassicalFamily::A, 2, 1, 1).unwrap();
        assert_eq!(p.coeff(0), rat(1));
        assert_eq!(p.coeff(1), rat(1));
        // A, n=1, j=k=0: x_0^2 = 2 x_0 (the boundary fold).
        let p = closed_form_product(ClassicalFamily::A, 1, 0, 0).unwrap();
        assert_eq!(p.coeff(0), rat(2));
        // B, n=2, j=k=1: x_1^2 = 2 x_1 + x_0.
        let p = closed_form_product(ClassicalFamily::B, 2, 1, 1).unwrap();
        assert_eq!(p.coeff(1), rat(2));
        assert_eq!(p.coeff(0), rat(1));
        // D, n=4, j=3, k=1: x_3 x_1 = 8 x_1 = (4!/3!) 2^{4-3} x_1.
        let p = closed_form_product(ClassicalFamily::D, 4, 3, 1).unwrap();
        assert_eq!(p.coeff(1), rat(8));
        for j in 2..=4 {
            assert_eq!(p.coeff(j), rat(0));
        }
        // x_n = x_S is the identity.
        let p = closed_form_product(ClassicalFamily::B, 3, 3, 2).unwrap();
        assert_eq!(p.coeff(2), rat(1));
    }

    #[test]
    fn closed_form_matches_recurrence() {
        for family in [ClassicalFamily::A, ClassicalFamily::B, ClassicalFamily::D] {
            for n in family.min_rank()..=7 {
                let max_k = if family == ClassicalFamily::D { n - 1 } else { n };
                for k in 0..=max_k {
                    let closed = closed_form_product(family, n, n - 1, n - k).unwrap();
                    let rec = chain_recurrence(family, n, k).unwrap();
                    assert_eq!(closed, rec, "{family:?} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn d_chain_times_x1_scales() {
        // x_j x_1 = (n!/j!) 2^{n-j} x_1.
        for n in 3..=6 {
            for j in 1..=n {
                let p = closed_form_product(ClassicalFamily::D, n, j, 1).unwrap();
                let expected: i64 = ((j + 1)..=n).map(|t| t as i64).product::<i64>()
                    * 2i64.pow((n - j) as u32);
                assert_eq!(p.coeff(1), rat(expected), "D{n}, x_{j} x_1");
                for l in 2..=n {
                    assert_eq!(p.coeff(l), rat(0));
                }
            }
        }
    }

    #[test]
    fn phi_is_multiplicative_via_closed_forms() {
        for n in 3..=8 {
            for j in 1..=n {
                for k in 1..=n {
                    let product_d = closed_form_product(ClassicalFamily::D, n, j, k).unwrap();
                    let lhs = phi_d_to_a(n, &product_d).unwrap();
                    // phi(x_j) phi(x_k) = 2^{2n-j-k} x_{j-1} x_{k-1} in A_{n-1}.
                    let product_a =
                        closed_form_product(ClassicalFamily::A, n - 1, j - 1, k - 1).unwrap();
                    let scale = rat(2).pow((2 * n - j - k) as i32);
                    let rhs = product_a.scale(&scale);
                    assert_eq!(lhs, rhs, "D{n}: phi(x_{j} x_{k})");
                }
            }
        }
    }

    #[test]
    fn phi_basis_images() {
        // n=3: x_3 -> x_2 (unit to unit); n=4: x_1 -> 8 x_0.
        let x3 = ChainElement::basis(ClassicalFamily::D, 3, 3).unwrap();
        let image = phi_d_to_a(3, &x3).unwrap();
        assert_eq!(image.coeff(2), rat(1));
        let x1 = ChainElement::basis(ClassicalFamily::D, 4, 1).unwrap();
        let image = phi_d_to_a(4, &x1).unwrap();
        assert_eq!(image.coeff(0), rat(8));
    }
}
