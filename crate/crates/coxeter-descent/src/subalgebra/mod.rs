//! Analysis of the subalgebras `Q[x_J]` generated by one basis element.
//!
//! The dimension of `Q[x_J]` equals the number of distinct values of the
//! permutation character of `W` acting on `W/W_J`, and the minimal polynomial
//! of `x_J` splits into distinct linear factors over those values. Both
//! quantities are computed here along two independent routes: exact linear
//! algebra on power coordinates (the primary path, no coset action needed)
//! and the direct coset action (the cross-check).
//!
//! `Q[x_J]` is said to have a *native* basis when some subset of
//! `{x_L : L ⊆ S}` is a basis of it. [`detect_native_basis`] decides this
//! exactly: collect every `x_L` lying in the power span `V`; the candidates
//! are automatically independent, so a native basis exists precisely when
//! they span `V`, which happens exactly when every power of `x_J` is
//! supported on the candidate set.

mod witness;

pub use witness::{
    commutation_witness, extra_noncommutation_cases, verify_witness_case, witness_cases,
    CaseCheck, CaseReport, Witness, WitnessCase,
};

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coxeter::{CoxeterSystem, CoxeterType, Family};
use crate::descent::{product_of_elements, AlgebraElement};
use crate::linalg::{solve_rational, IntEchelon};
use crate::poly::QPolynomial;
use crate::{Error, Result, SubsetMask};

/// Full report on the subalgebra `Q[x_J]`.
#[derive(Clone, Debug)]
pub struct SubalgebraReport {
    pub ctype: CoxeterType,
    pub j: SubsetMask,
    /// `dim Q[x_J]`, the degree of the minimal polynomial.
    pub dim: usize,
    pub minimal_poly: QPolynomial,
    pub has_native_basis: bool,
    /// All `L` with `x_L` in the power span, ascending by bitmask. When
    /// `has_native_basis` holds these form the (unique maximal) native basis.
    pub native_basis: Vec<SubsetMask>,
    /// Row `r` expresses `x_{native_basis[r]}` in powers `x_J^0..x_J^{dim-1}`.
    /// Empty when no native basis exists.
    pub change_of_basis: Vec<Vec<BigRational>>,
    /// Whether every change-of-basis entry is an integer (false when no
    /// native basis exists).
    pub all_integer: bool,
}

impl SubalgebraReport {
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        map.insert("schema".into(), "1".into());
        map.insert("type".into(), self.ctype.to_string().into());
        map.insert("J".into(), self.j.to_string().into());
        map.insert("dim".into(), (self.dim as u64).into());
        map.insert(
            "minimal_poly".into(),
            self.minimal_poly
                .coeff_strings()
                .into_iter()
                .map(serde_json::Value::from)
                .collect::<Vec<_>>()
                .into(),
        );
        map.insert("native".into(), self.has_native_basis.into());
        map.insert(
            "native_basis".into(),
            self.native_basis
                .iter()
                .map(|l| serde_json::Value::from(l.to_string()))
                .collect::<Vec<_>>()
                .into(),
        );
        map.insert("integral".into(), self.all_integer.into());
        map.insert(
            "change_of_basis".into(),
            self.change_of_basis
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|c| serde_json::Value::from(c.to_string()))
                        .collect::<Vec<_>>()
                        .into()
                })
                .collect::<Vec<serde_json::Value>>()
                .into(),
        );
        serde_json::Value::Object(map)
    }
}

/// Powers `x_J^0 = x_S, x_J^1, ..., x_J^{up_to}` over the `x` basis.
pub fn powers_in_x_basis(
    sys: &CoxeterSystem,
    j: SubsetMask,
    up_to: usize,
) -> Result<Vec<AlgebraElement>> {
    let mut powers = vec![AlgebraElement::basis(sys.full_set())];
    let xj = AlgebraElement::basis(j);
    for _ in 0..up_to {
        let next = product_of_elements(sys, powers.last().unwrap(), &xj)?;
        powers.push(next);
    }
    Ok(powers)
}

fn integer_coords(element: &AlgebraElement, rank: usize) -> Vec<BigInt> {
    element
        .dense_coords(rank)
        .into_iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

/// Powers of `x_J` up to (and including) the first linearly dependent one,
/// together with the echelon basis of their span.
fn independent_powers(
    sys: &CoxeterSystem,
    j: SubsetMask,
) -> Result<(Vec<AlgebraElement>, IntEchelon)> {
    let rank = sys.rank();
    let mut echelon = IntEchelon::new(1 << rank);
    let mut powers = vec![AlgebraElement::basis(sys.full_set())];
    echelon.insert(&integer_coords(&powers[0], rank));
    let xj = AlgebraElement::basis(j);
    loop {
        let next = product_of_elements(sys, powers.last().unwrap(), &xj)?;
        let grew = echelon.insert(&integer_coords(&next, rank));
        powers.push(next);
        if !grew {
            return Ok((powers, echelon));
        }
        // The dimension is bounded by the number of subsets.
        assert!(powers.len() <= (1 << rank) + 1);
    }
}

/// Monic least-degree polynomial with `p(x_J) = 0` in the descent algebra,
/// found by exact elimination on power coordinates.
pub fn minimal_polynomial(sys: &CoxeterSystem, j: SubsetMask) -> Result<QPolynomial> {
    let (powers, _) = independent_powers(sys, j)?;
    let d = powers.len() - 1;
    let rank = sys.rank();
    let columns: Vec<Vec<BigRational>> = powers[..d]
        .iter()
        .map(|p| p.dense_coords(rank))
        .collect();
    let target = powers[d].dense_coords(rank);
    let dependence =
        solve_rational(&columns, &target).expect("dependent power must be solvable");
    let mut coeffs: Vec<BigRational> = dependence.into_iter().map(|c| -c).collect();
    coeffs.push(BigRational::one());
    Ok(QPolynomial::from_coeffs(coeffs))
}

/// Evaluates a polynomial at `x_J` inside the descent algebra (the constant
/// term acts as a multiple of the identity `x_S`).
pub fn evaluate_at_basis(
    sys: &CoxeterSystem,
    poly: &QPolynomial,
    j: SubsetMask,
) -> Result<AlgebraElement> {
    let xj = AlgebraElement::basis(j);
    let mut acc = AlgebraElement::zero();
    let coeffs = poly.coeffs();
    for c in coeffs.iter().rev() {
        acc = product_of_elements(sys, &acc, &xj)?;
        acc.add_scaled(sys.full_set(), c);
    }
    Ok(acc)
}

/// The set `{pi_J(w) : w in W}` of permutation-character values of the
/// action of `W` on the cosets `W/W_J`, by direct action on the coset list.
pub fn permutation_character_values(
    sys: &CoxeterSystem,
    j: SubsetMask,
) -> Result<BTreeSet<usize>> {
    let reps = crate::descent::min_coset_reps(sys, j)?.elements;
    let rep_index: std::collections::HashMap<_, _> = reps
        .iter()
        .enumerate()
        .map(|(i, w)| (w.data().clone(), i))
        .collect();
    // Canonicalizes w to its minimal coset representative by stripping right
    // descents in J.
    let canonical = |mut w: crate::coxeter::GroupElement| -> usize {
        'outer: loop {
            for s in j.indices() {
                if !w.has_right_ascent(s).expect("in range") {
                    w = w.multiply(sys.generator(s).expect("valid")).expect("same");
                    continue 'outer;
                }
            }
            return rep_index[w.data()];
        }
    };
    let mut values = BTreeSet::new();
    for w in sys.elements()? {
        let mut fixed = 0usize;
        for (i, d) in reps.iter().enumerate() {
            let moved = w.multiply(d)?;
            if canonical(moved) == i {
                fixed += 1;
            }
        }
        values.insert(fixed);
    }
    Ok(values)
}

/// Decides whether `Q[x_J]` has a native basis and computes the change of
/// basis to powers of `x_J` when it does.
///
/// ```
/// use coxeter_descent::coxeter::{CoxeterSystem, CoxeterType};
/// use coxeter_descent::subalgebra::detect_native_basis;
/// use coxeter_descent::SubsetMask;
///
/// let b3 = CoxeterSystem::build(CoxeterType::parse("B3")?)?;
/// let report = detect_native_basis(&b3, SubsetMask::from_indices(&[1, 3]))?;
/// assert!(report.has_native_basis);
/// assert_eq!(report.dim, 4);
/// assert!(!report.all_integer);
/// # Ok::<(), coxeter_descent::Error>(())
/// ```
pub fn detect_native_basis(sys: &CoxeterSystem, j: SubsetMask) -> Result<SubalgebraReport> {
    let rank = sys.rank();
    let (powers, echelon) = independent_powers(sys, j)?;
    let dim = powers.len() - 1;

    // Candidates: every L with x_L inside the power span V. Distinct basis
    // elements are linearly independent, so if these do not span V no subset
    // of the basis can.
    let mut candidates: Vec<SubsetMask> = Vec::new();
    for l in SubsetMask::all(rank) {
        let mut unit = vec![BigInt::zero(); 1 << rank];
        unit[l.bits() as usize] = BigInt::one();
        if echelon.contains(&unit) {
            candidates.push(l);
        }
    }

    // The candidates span V exactly when every power is supported on them;
    // by dimension count a spanning candidate set has exactly `dim` members.
    let candidate_set: BTreeSet<SubsetMask> = candidates.iter().copied().collect();
    let has_native_basis = powers[..dim]
        .iter()
        .all(|p| p.support().iter().all(|l| candidate_set.contains(l)));
    if has_native_basis {
        debug_assert_eq!(candidates.len(), dim);
    }

    let minimal_poly = {
        let columns: Vec<Vec<BigRational>> = powers[..dim]
            .iter()
            .map(|p| p.dense_coords(rank))
            .collect();
        let target = powers[dim].dense_coords(rank);
        let dependence =
            solve_rational(&columns, &target).expect("dependent power must be solvable");
        let mut coeffs: Vec<BigRational> = dependence.into_iter().map(|c| -c).collect();
        coeffs.push(BigRational::one());
        QPolynomial::from_coeffs(coeffs)
    };

    let mut change_of_basis = Vec::new();
    let mut all_integer = has_native_basis;
    if has_native_basis {
        let columns: Vec<Vec<BigRational>> = powers[..dim]
            .iter()
            .map(|p| p.dense_coords(rank))
            .collect();
        for &l in &candidates {
            let target = AlgebraElement::basis(l).dense_coords(rank);
            let row = solve_rational(&columns, &target)
                .expect("candidate lies in the power span");
            all_integer &= row.iter().all(|c| c.is_integer());
            change_of_basis.push(row);
        }
    }

    Ok(SubalgebraReport {
        ctype: sys.ctype(),
        j,
        dim,
        minimal_poly,
        has_native_basis,
        native_basis: candidates,
        change_of_basis,
        all_integer,
    })
}

/// One line of [`classify_all_maximal`].
#[derive(Clone, Debug)]
pub struct ClassificationRow {
    pub s: usize,
    pub j: SubsetMask,
    pub dim: usize,
    pub native: bool,
    pub integral: bool,
    pub expected_native: bool,
    pub expected_integral: bool,
    /// Human-readable reason for the expected verdict.
    pub reason: &'static str,
}

/// Expected classification of `Q[x_J]`, `J = S \ {s}`: whether a native
/// basis exists and whether it consists of integer polynomials in `x_J`.
///
/// A native basis exists exactly when `W_J` sits at the top of a chain of
/// standard parabolics of one fixed classical type (A, B or D, read up to
/// diagram symmetry: both ends of the A-chain qualify, rank-3 path groups
/// carry both the A3 and D3 structures, and triality makes all three outer
/// nodes of D4 equivalent), when `W` is dihedral, or in the single exception
/// `B3` with `J = {s1, s3}`. The basis consists of integer polynomials in
/// `x_J` in the classical chain cases only; dihedral groups `I2(m)` give an
/// integral basis exactly for `m <= 4`, which are the groups of type A2 and
/// B2 under another labelling.
pub fn expected_classification(ctype: CoxeterType, s: usize) -> (bool, bool, &'static str) {
    let n = ctype.rank();
    match ctype.family() {
        Family::A => {
            if s == 1 || s == n {
                (true, true, "chain of type A (up to the diagram flip)")
            } else if n == 3 && s == 2 {
                (true, true, "rank-3 coincidence: the D3 chain inside A3")
            } else {
                (false, false, "disconnected parabolic in type A")
            }
        }
        Family::B => {
            if n == 2 {
                (true, true, "B2 is dihedral with symmetric labels")
            } else if s == n {
                (true, true, "chain of type B")
            } else if n == 3 && s == 2 {
                (true, false, "the exceptional B3 case with W_J of type B1 x A1")
            } else {
                (false, false, "not the B-chain parabolic")
            }
        }
        Family::D => match n {
            3 => (
                true,
                true,
                "rank-3 path: every maximal subset is a classical chain",
            ),
            4 => {
                if s == 3 {
                    (false, false, "removing the central node of D4")
                } else {
                    (true, true, "chain of type D (up to triality)")
                }
            }
            _ => {
                if s == n {
                    (true, true, "chain of type D")
                } else {
                    (false, false, "not the D-chain parabolic")
                }
            }
        },
        Family::I2 => {
            let m = ctype.dihedral_m();
            if m <= 4 {
                (true, true, "dihedral group of type A2 or B2")
            } else {
                (true, false, "dihedral group with m >= 5")
            }
        }
        _ => (false, false, "exceptional type"),
    }
}

/// Runs [`detect_native_basis`] for every maximal subset `J = S \ {s}` and
/// checks the verdicts against [`expected_classification`]. A mismatch is a
/// hard failure.
pub fn classify_all_maximal(sys: &CoxeterSystem) -> Result<Vec<ClassificationRow>> {
    if !sys.is_enumerable() {
        return Err(Error::EnumerationCap {
            order: sys.group_order().to_string(),
            cap: sys.enumeration_cap(),
        });
    }
    let mut rows = Vec::new();
    for s in 1..=sys.rank() {
        let j = sys.full_set().without(s);
        let report = detect_native_basis(sys, j)?;
        let (expected_native, expected_integral, reason) =
            expected_classification(sys.ctype(), s);
        let row = ClassificationRow {
            s,
            j,
            dim: report.dim,
            native: report.has_native_basis,
            integral: report.all_integer,
            expected_native,
            expected_integral,
            reason,
        };
        if row.native != row.expected_native || row.integral != row.expected_integral {
            return Err(Error::Classification {
                system: sys.ctype().to_string(),
                generator: s,
                details: format!(
                    "computed (native={}, integral={}), expected (native={}, integral={})",
                    row.native, row.integral, row.expected_native, row.expected_integral
                ),
            });
        }
        rows.push(row);
    }
    Ok(rows)
}
