//! Finite Coxeter systems of every irreducible type.
//!
//! Construction validates the rank constraints (`A_n` for `n >= 1`, `B_n` for
//! `n >= 2`, `D_n` for `n >= 3`, `I2(m)` for `m >= 3`, and the fixed-rank
//! exceptional types), picks a faithful element model per type, and exposes
//! exact length/descent/conjugation queries. Systems are immutable after
//! construction and safe to share across threads; enumeration results and
//! longest-element computations are memoized behind locks.

mod element;
mod roots;
mod words;

pub use element::{ElementData, GroupElement};
pub use roots::Golden;
pub(crate) use roots::{unpack, RootTable};

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::One;

use crate::{Error, Result, SubsetMask};

pub(crate) use element::conjugate_generator;

/// Default ceiling on full group enumeration (element count).
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

const MAX_RANK: usize = 8;

/// The ten families of irreducible finite Coxeter systems.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
    I2,
    H3,
    H4,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub fn letter(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
            Family::I2 => "I2",
            Family::H3 => "H3",
            Family::H4 => "H4",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
        }
    }
}

/// Type label of a finite Coxeter system: family, rank, and the dihedral
/// bond order for `I2(m)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct CoxeterType {
    family: Family,
    rank: u8,
    m: u32,
}

impl CoxeterType {
    pub fn a(n: usize) -> Result<CoxeterType> {
        if !(1..=MAX_RANK).contains(&n) {
            return Err(Error::InvalidRank {
                family: "A",
                rank: n,
                constraint: "A_n requires 1 <= n <= 8",
            });
        }
        Ok(CoxeterType {
            family: Family::A,
            rank: n as u8,
            m: 0,
        })
    }

    pub fn b(n: usize) -> Result<CoxeterType> {
        if !(2..=MAX_RANK).contains(&n) {
            return Err(Error::InvalidRank {
                family: "B",
                rank: n,
                constraint: "B_n requires 2 <= n <= 8",
            });
        }
        Ok(CoxeterType {
            family: Family::B,
            rank: n as u8,
            m: 0,
        })
    }

    pub fn d(n: usize) -> Result<CoxeterType> {
        if !(3..=MAX_RANK).contains(&n) {
            return Err(Error::InvalidRank {
                family: "D",
                rank: n,
                constraint: "D_n requires 3 <= n <= 8",
            });
        }
        Ok(CoxeterType {
            family: Family::D,
            rank: n as u8,
            m: 0,
        })
    }

    pub fn i2(m: u32) -> Result<CoxeterType> {
        if m < 3 {
            return Err(Error::InvalidRank {
                family: "I2",
                rank: m as usize,
                constraint: "I2(m) requires m >= 3",
            });
        }
        Ok(CoxeterType {
            family: Family::I2,
            rank: 2,
            m,
        })
    }

    pub fn h3() -> CoxeterType {
        CoxeterType {
            family: Family::H3,
            rank: 3,
            m: 0,
        }
    }

    pub fn h4() -> CoxeterType {
        CoxeterType {
            family: Family::H4,
            rank: 4,
            m: 0,
        }
    }

    pub fn f4() -> CoxeterType {
        CoxeterType {
            family: Family::F4,
            rank: 4,
            m: 0,
        }
    }

    pub fn e(n: usize) -> Result<CoxeterType> {
        match n {
            6 => Ok(CoxeterType {
                family: Family::E6,
                rank: 6,
                m: 0,
            }),
            7 => Ok(CoxeterType {
                family: Family::E7,
                rank: 7,
                m: 0,
            }),
            8 => Ok(CoxeterType {
                family: Family::E8,
                rank: 8,
                m: 0,
            }),
            _ => Err(Error::InvalidRank {
                family: "E",
                rank: n,
                constraint: "E_n exists for n in {6, 7, 8}",
            }),
        }
    }

    /// Parses a type spec string: family letter plus rank (`"A5"`, `"B3"`,
    /// `"D4"`, `"H3"`, `"F4"`, `"E7"`) or `"I2:m"` for dihedral types.
    pub fn parse(spec: &str) -> Result<CoxeterType> {
        let s = spec.trim();
        let bad = || Error::Parse {
            what: "type spec",
            input: spec.to_string(),
        };
        if let Some(m) = s.strip_prefix("I2:") {
            let m: u32 = m.parse().map_err(|_| bad())?;
            return CoxeterType::i2(m);
        }
        let (family, digits) = s.split_at(1);
        let n: usize = digits.parse().map_err(|_| bad())?;
        match family {
            "A" | "a" => CoxeterType::a(n),
            "B" | "b" => CoxeterType::b(n),
            "D" | "d" => CoxeterType::d(n),
            "H" | "h" => match n {
                3 => Ok(CoxeterType::h3()),
                4 => Ok(CoxeterType::h4()),
                _ => Err(bad()),
            },
            "F" | "f" if n == 4 => Ok(CoxeterType::f4()),
            "E" | "e" => CoxeterType::e(n),
            _ => Err(bad()),
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank as usize
    }

    pub fn dihedral_m(self) -> u32 {
        debug_assert_eq!(self.family, Family::I2);
        self.m
    }

    pub fn is_classical(self) -> bool {
        matches!(self.family, Family::A | Family::B | Family::D)
    }

    /// Order of the corresponding Weyl/Coxeter group.
    pub fn group_order(self) -> BigUint {
        let n = self.rank();
        match self.family {
            Family::A => factorial(n + 1),
            Family::B => (BigUint::one() << n) * factorial(n),
            Family::D => (BigUint::one() << (n - 1)) * factorial(n),
            Family::I2 => BigUint::from(2 * self.m),
            Family::H3 => BigUint::from(120u32),
            Family::H4 => BigUint::from(14_400u32),
            Family::F4 => BigUint::from(1_152u32),
            Family::E6 => BigUint::from(51_840u32),
            Family::E7 => BigUint::from(2_903_040u32),
            Family::E8 => BigUint::from(696_729_600u32),
        }
    }

    fn default_model(self) -> ModelKind {
        match self.family {
            Family::A => ModelKind::Permutation,
            Family::B | Family::D => ModelKind::SignedPermutation,
            Family::I2 => ModelKind::Dihedral,
            _ => ModelKind::RootPermutation,
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A | Family::B | Family::D => {
                write!(f, "{}{}", self.family.letter(), self.rank)
            }
            Family::I2 => write!(f, "I2:{}", self.m),
            _ => write!(f, "{}", self.family.letter()),
        }
    }
}

/// Element-representation model backing a system.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModelKind {
    Permutation,
    SignedPermutation,
    Dihedral,
    RootPermutation,
}

/// Bond orders of the Coxeter diagram: `(i, j, m)` with 1-based `i < j` and
/// `m >= 3`; absent pairs commute.
fn bonds(ctype: CoxeterType) -> Vec<(usize, usize, u32)> {
    let n = ctype.rank();
    match ctype.family() {
        Family::A => (1..n).map(|i| (i, i + 1, 3)).collect(),
        Family::B => {
            let mut v = vec![(1, 2, 4)];
            v.extend((2..n).map(|i| (i, i + 1, 3)));
            v
        }
        Family::D => {
            let mut v = vec![(1, 3, 3), (2, 3, 3)];
            v.extend((3..n).map(|i| (i, i + 1, 3)));
            v
        }
        Family::I2 => vec![(1, 2, ctype.dihedral_m())],
        Family::H3 => vec![(1, 2, 5), (2, 3, 3)],
        Family::H4 => vec![(1, 2, 5), (2, 3, 3), (3, 4, 3)],
        Family::F4 => vec![(1, 2, 3), (2, 3, 4), (3, 4, 3)],
        Family::E6 | Family::E7 | Family::E8 => {
            let mut v = vec![(1, 3, 3), (2, 4, 3), (3, 4, 3)];
            v.extend((4..n).map(|i| (i, i + 1, 3)));
            v
        }
    }
}

/// The Coxeter matrix of `ctype`: `m_ii = 1`, `m_ij` the bond order.
pub fn coxeter_matrix(ctype: CoxeterType) -> Vec<Vec<u32>> {
    let n = ctype.rank();
    let mut matrix = vec![vec![2u32; n]; n];
    for (i, row) in matrix.iter_mut().enumerate() {
        row[i] = 1;
    }
    for (i, j, m) in bonds(ctype) {
        matrix[i - 1][j - 1] = m;
        matrix[j - 1][i - 1] = m;
    }
    matrix
}

/// Cartan-like pairing matrix `C[i][j] = 2<a_i,a_j>/<a_j,a_j>` used to build
/// the root table. Dihedral types deliberately have no root model.
pub(crate) fn cartan_matrix(ctype: CoxeterType) -> Result<Vec<Vec<Golden>>> {
    if ctype.family() == Family::I2 {
        return Err(Error::Parse {
            what: "root model",
            input: format!("{ctype} uses the combinatorial dihedral model"),
        });
    }
    let n = ctype.rank();
    let mut c = vec![vec![Golden::ZERO; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = Golden::int(2);
    }
    for (i, j, m) in bonds(ctype) {
        let (i, j) = (i - 1, j - 1);
        match m {
            3 => {
                c[i][j] = Golden::int(-1);
                c[j][i] = Golden::int(-1);
            }
            4 => {
                // One asymmetric bond; which side is short does not change
                // the labelled Coxeter system.
                match ctype.family() {
                    Family::B => {
                        // alpha_1 short: C[1][2] = -1, C[2][1] = -2.
                        c[i][j] = Golden::int(-1);
                        c[j][i] = Golden::int(-2);
                    }
                    _ => {
                        // F4: alpha_3, alpha_4 short.
                        c[i][j] = Golden::int(-2);
                        c[j][i] = Golden::int(-1);
                    }
                }
            }
            5 => {
                c[i][j] = Golden::phi(-1);
                c[j][i] = Golden::phi(-1);
            }
            _ => unreachable!("bond order {m} has no root model"),
        }
    }
    Ok(c)
}

/// Enumeration-derived per-element data used by descent-algebra scans.
pub(crate) struct EnumerationData {
    pub elements: Vec<GroupElement>,
    pub index: HashMap<ElementData, usize>,
    /// Left-ascent masks.
    pub lmask: Vec<SubsetMask>,
    /// Right-ascent masks.
    pub rmask: Vec<SubsetMask>,
    /// `conj[i][s-1] = t` (0xFF if none) when `w_i^{-1} s w_i = t`.
    pub conj: Vec<[u8; MAX_RANK]>,
}

/// A finite Coxeter system `(W, S)` with a fixed faithful element model.
///
/// ```
/// use coxeter_descent::coxeter::{CoxeterSystem, CoxeterType};
///
/// let sys = CoxeterSystem::build(CoxeterType::parse("B3")?)?;
/// assert_eq!(sys.group_order().to_string(), "48");
/// let w = sys.element_from_word(&[1, 2, 1])?;
/// assert_eq!(w.length(), 3);
/// assert!(!w.has_right_ascent(1)?);
/// # Ok::<(), coxeter_descent::Error>(())
/// ```
pub struct CoxeterSystem {
    ctype: CoxeterType,
    model: ModelKind,
    matrix: Vec<Vec<u32>>,
    order: BigUint,
    cap: u64,
    roots: Option<RootTable>,
    generators: Vec<GroupElement>,
    identity: GroupElement,
    enumeration: OnceLock<std::result::Result<EnumerationData, Error>>,
    longest_cache: Mutex<HashMap<SubsetMask, GroupElement>>,
    pub(crate) product_cache: Mutex<HashMap<(SubsetMask, SubsetMask), crate::descent::AlgebraElement>>,
}

impl CoxeterSystem {
    /// Builds the system in the default model for its type.
    pub fn build(ctype: CoxeterType) -> Result<CoxeterSystem> {
        Self::build_with_model(ctype, ctype.default_model())
    }

    /// Builds the system in a specific model. The root-permutation model is
    /// supported for every type except `I2(m)`; the permutation models only
    /// for their own families.
    pub fn build_with_model(ctype: CoxeterType, model: ModelKind) -> Result<CoxeterSystem> {
        let valid = match model {
            ModelKind::Permutation => ctype.family() == Family::A,
            ModelKind::SignedPermutation => {
                matches!(ctype.family(), Family::B | Family::D)
            }
            ModelKind::Dihedral => ctype.family() == Family::I2,
            ModelKind::RootPermutation => ctype.family() != Family::I2,
        };
        if !valid {
            return Err(Error::Parse {
                what: "model",
                input: format!("{model:?} for {ctype}"),
            });
        }

        let roots = if model == ModelKind::RootPermutation {
            Some(RootTable::from_cartan(&cartan_matrix(ctype)?))
        } else {
            None
        };

        let identity = GroupElement {
            ctype,
            data: element::identity_data(ctype, model, roots.as_ref()),
        };
        let generators: Vec<GroupElement> = (1..=ctype.rank())
            .map(|i| GroupElement {
                ctype,
                data: match (&roots, model) {
                    (Some(table), ModelKind::RootPermutation) => {
                        ElementData::RootPerm(table.action[i - 1].clone())
                    }
                    _ => element::generator_data(ctype, i),
                },
            })
            .collect();

        Ok(CoxeterSystem {
            ctype,
            model,
            matrix: coxeter_matrix(ctype),
            order: ctype.group_order(),
            cap: DEFAULT_ENUMERATION_CAP,
            roots,
            generators,
            identity,
            enumeration: OnceLock::new(),
            longest_cache: Mutex::new(HashMap::new()),
            product_cache: Mutex::new(HashMap::new()),
        })
    }

    /// Overrides the enumeration cap (element count).
    pub fn with_cap(mut self, cap: u64) -> CoxeterSystem {
        self.cap = cap;
        self
    }

    pub fn ctype(&self) -> CoxeterType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.ctype.rank()
    }

    pub fn model(&self) -> ModelKind {
        self.model
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    pub fn group_order(&self) -> &BigUint {
        &self.order
    }

    pub fn enumeration_cap(&self) -> u64 {
        self.cap
    }

    pub fn full_set(&self) -> SubsetMask {
        SubsetMask::full(self.rank())
    }

    pub fn identity(&self) -> GroupElement {
        self.identity.clone()
    }

    /// The simple reflection `s_i`, 1-based.
    pub fn generator(&self, index: usize) -> Result<&GroupElement> {
        self.generators
            .get(index.wrapping_sub(1))
            .ok_or(Error::GeneratorIndex {
                index,
                rank: self.rank(),
            })
    }

    /// Number of positive roots, when the system carries a root table.
    pub fn num_positive_roots(&self) -> Option<usize> {
        self.roots.as_ref().map(|t| t.num_positive())
    }

    /// Whether the full group may be enumerated under the configured cap.
    pub fn is_enumerable(&self) -> bool {
        self.order <= BigUint::from(self.cap)
    }

    fn enumeration_error(&self) -> Error {
        Error::EnumerationCap {
            order: self.order.to_string(),
            cap: self.cap,
        }
    }

    pub(crate) fn enumeration(&self) -> Result<&EnumerationData> {
        self.enumeration
            .get_or_init(|| self.enumerate_impl())
            .as_ref()
            .map_err(|e| e.clone())
    }

    fn enumerate_impl(&self) -> std::result::Result<EnumerationData, Error> {
        if !self.is_enumerable() {
            return Err(self.enumeration_error());
        }
        let mut seen: HashMap<ElementData, usize> = HashMap::new();
        let mut elements: Vec<GroupElement> = vec![self.identity()];
        seen.insert(self.identity.data.clone(), 0);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            head += 1;
            for g in &self.generators {
                let next = current.multiply(g).expect("same system");
                if !seen.contains_key(next.data()) {
                    seen.insert(next.data().clone(), elements.len());
                    elements.push(next);
                }
            }
        }
        assert_eq!(
            BigUint::from(elements.len() as u64),
            self.order,
            "enumeration must reproduce the group order"
        );

        // Deterministic order: length, then payload lexicographic.
        elements.sort_by_cached_key(|w| (w.length(), w.data().clone()));
        let index: HashMap<ElementData, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.data().clone(), i))
            .collect();

        let rank = self.rank();
        let mut lmask = Vec::with_capacity(elements.len());
        let mut rmask = Vec::with_capacity(elements.len());
        let mut conj = Vec::with_capacity(elements.len());
        for w in &elements {
            rmask.push(w.right_ascent_mask());
            let mut row = [0xFFu8; MAX_RANK];
            if let ElementData::RootPerm(v) = w.data() {
                let mut lbits = 0u16;
                for (r, &packed) in v.iter().enumerate() {
                    let (idx, neg) = unpack(packed);
                    if idx < rank {
                        // w(beta_r) = ±alpha_idx, so w^{-1}(alpha_idx) = ±beta_r.
                        if !neg {
                            lbits |= 1 << idx;
                        }
                        if r < rank {
                            row[idx] = r as u8;
                        }
                    }
                }
                lmask.push(SubsetMask::from_bits(lbits));
            } else {
                let winv = w.inverse();
                lmask.push(winv.right_ascent_mask());
                for s in 1..=rank {
                    let u = winv
                        .multiply(&self.generators[s - 1])
                        .and_then(|x| x.multiply(w))
                        .expect("same system");
                    if let Some(t) = (1..=rank).find(|&t| self.generators[t - 1].data() == u.data())
                    {
                        row[s - 1] = (t - 1) as u8;
                    }
                }
            }
            conj.push(row);
        }

        Ok(EnumerationData {
            elements,
            index,
            lmask,
            rmask,
            conj,
        })
    }

    /// All group elements in deterministic order (length, then payload).
    ///
    /// Fails with [`Error::EnumerationCap`] when the group order exceeds the
    /// configured cap; callers must then stay on enumeration-free paths.
    /// Groups under the cap but with large root models (E7) enumerate fine
    /// but hold every element in memory.
    pub fn elements(&self) -> Result<&[GroupElement]> {
        Ok(&self.enumeration()?.elements)
    }

    /// Elements of the standard parabolic subgroup `W_K`, sorted by
    /// (length, payload).
    pub fn parabolic_elements(&self, k: SubsetMask) -> Result<Vec<GroupElement>> {
        let gens: Vec<&GroupElement> = k
            .indices()
            .map(|i| self.generator(i))
            .collect::<Result<_>>()?;
        let mut seen: HashMap<ElementData, ()> = HashMap::new();
        let mut out = vec![self.identity()];
        seen.insert(self.identity.data.clone(), ());
        let mut head = 0;
        while head < out.len() {
            let current = out[head].clone();
            head += 1;
            for g in &gens {
                let next = current.multiply(g).expect("same system");
                if !seen.contains_key(next.data()) {
                    if out.len() as u64 >= self.cap {
                        return Err(self.enumeration_error());
                    }
                    seen.insert(next.data().clone(), ());
                    out.push(next);
                }
            }
        }
        out.sort_by_cached_key(|w| (w.length(), w.data().clone()));
        Ok(out)
    }

    /// The longest element `w_K` of the parabolic `W_K`, by greedy ascent.
    /// Enumeration-free, so this works for E8 as well.
    pub fn longest_element(&self, k: SubsetMask) -> GroupElement {
        if let Some(w) = self.longest_cache.lock().unwrap().get(&k) {
            return w.clone();
        }
        let mut w = self.identity();
        loop {
            let mut advanced = false;
            for i in k.indices() {
                if w.has_right_ascent(i).expect("index in range") {
                    w = w.multiply(&self.generators[i - 1]).expect("same system");
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
        self.longest_cache.lock().unwrap().insert(k, w.clone());
        w
    }

    /// The longest right coset representative `d_J^K = w_J w_K` of `W_J`
    /// in `W_K`; requires `J ⊆ K`.
    pub fn coset_rep_d(&self, j: SubsetMask, k: SubsetMask) -> Result<GroupElement> {
        if !j.is_subset_of(k) {
            return Err(Error::NotContained {
                j: j.to_string(),
                k: k.to_string(),
            });
        }
        self.longest_element(j).multiply(&self.longest_element(k))
    }

    /// Conjugates the subset `J` by `d`: `{t in S : d^{-1} s d = s_t, s in J}`.
    pub fn conjugate_subset(&self, j: SubsetMask, d: &GroupElement) -> SubsetMask {
        let mut out = SubsetMask::EMPTY;
        for s in j.indices() {
            if let Some(t) = conjugate_generator(self, d, s) {
                out = out.with(t);
            }
        }
        out
    }

    /// Builds an element from a word in generator indices (1-based).
    pub fn element_from_word(&self, word: &[usize]) -> Result<GroupElement> {
        let mut w = self.identity();
        for &i in word {
            w = w.multiply(self.generator(i)?)?;
        }
        Ok(w)
    }

    /// Canonical (lexicographically smallest) reduced word of `w`.
    pub fn reduced_word(&self, w: &GroupElement) -> Vec<usize> {
        words::reduced_word(self, w)
    }

    /// Parses the shared textual element format: space-separated 1-based
    /// generator indices; the empty string is the identity.
    pub fn element_from_text(&self, text: &str) -> Result<GroupElement> {
        words::parse_word_text(self, text)
    }

    /// Formats `w` in the shared textual element format.
    pub fn element_to_text(&self, w: &GroupElement) -> String {
        words::word_to_text(&self.reduced_word(w))
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product::<BigUint>().max(BigUint::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_match_known_formulas() {
        let cases: Vec<(CoxeterType, u64)> = vec![
            (CoxeterType::a(2).unwrap(), 6),
            (CoxeterType::a(5).unwrap(), 720),
            (CoxeterType::b(3).unwrap(), 48),
            (CoxeterType::d(4).unwrap(), 192),
            (CoxeterType::i2(7).unwrap(), 14),
            (CoxeterType::h3(), 120),
            (CoxeterType::h4(), 14_400),
            (CoxeterType::f4(), 1_152),
            (CoxeterType::e(6).unwrap(), 51_840),
            (CoxeterType::e(7).unwrap(), 2_903_040),
            (CoxeterType::e(8).unwrap(), 696_729_600),
        ];
        for (ctype, expected) in cases {
            assert_eq!(ctype.group_order(), BigUint::from(expected), "{ctype}");
        }
    }

    #[test]
    fn enumeration_counts() {
        for (ctype, expected) in [
            (CoxeterType::a(2).unwrap(), 6usize),
            (CoxeterType::a(3).unwrap(), 24),
            (CoxeterType::b(3).unwrap(), 48),
            (CoxeterType::d(3).unwrap(), 24),
            (CoxeterType::d(4).unwrap(), 192),
            (CoxeterType::i2(5).unwrap(), 10),
            (CoxeterType::h3(), 120),
            (CoxeterType::f4(), 1_152),
        ] {
            let sys = CoxeterSystem::build(ctype).unwrap();
            assert_eq!(sys.elements().unwrap().len(), expected, "{ctype}");
        }
    }

    #[test]
    fn e8_enumeration_refused_under_default_cap() {
        let sys = CoxeterSystem::build(CoxeterType::e(8).unwrap()).unwrap();
        match sys.elements() {
            Err(Error::EnumerationCap { .. }) => {}
            other => panic!("expected cap refusal, got {other:?}"),
        }
    }

    #[test]
    fn invalid_ranks_rejected() {
        assert!(CoxeterType::d(2).is_err());
        assert!(CoxeterType::b(1).is_err());
        assert!(CoxeterType::a(0).is_err());
        assert!(CoxeterType::i2(2).is_err());
        assert!(CoxeterType::e(5).is_err());
    }

    #[test]
    fn coxeter_matrix_of_b3() {
        let sys = CoxeterSystem::build(CoxeterType::b(3).unwrap()).unwrap();
        let m = sys.coxeter_matrix();
        assert_eq!(m[0][1], 4);
        assert_eq!(m[1][2], 3);
        assert_eq!(m[0][2], 2);
        assert_eq!(m[0][0], 1);
    }

    #[test]
    fn type_spec_roundtrip() {
        for spec in ["A5", "B3", "D4", "I2:7", "H3", "H4", "F4", "E6", "E7", "E8"] {
            let ctype = CoxeterType::parse(spec).unwrap();
            assert_eq!(ctype.to_string(), spec);
        }
        assert!(CoxeterType::parse("Q3").is_err());
        assert!(CoxeterType::parse("D2").is_err());
    }

    #[test]
    fn longest_element_examples() {
        // A2: w_S = s1 s2 s1, length 3.
        let a2 = CoxeterSystem::build(CoxeterType::a(2).unwrap()).unwrap();
        let w0 = a2.longest_element(a2.full_set());
        assert_eq!(w0.length(), 3);
        let expected = a2.element_from_word(&[1, 2, 1]).unwrap();
        assert_eq!(w0, expected);

        // B2: w_S = (s1 s2)^2, length 4.
        let b2 = CoxeterSystem::build(CoxeterType::b(2).unwrap()).unwrap();
        let w0 = b2.longest_element(b2.full_set());
        assert_eq!(w0.length(), 4);
        assert_eq!(w0, b2.element_from_word(&[1, 2, 1, 2]).unwrap());

        // A3, K = {s1, s3}: w_K = s1 s3, length 2.
        let a3 = CoxeterSystem::build(CoxeterType::a(3).unwrap()).unwrap();
        let wk = a3.longest_element(SubsetMask::from_indices(&[1, 3]));
        assert_eq!(wk.length(), 2);
        assert_eq!(wk, a3.element_from_word(&[1, 3]).unwrap());
    }

    #[test]
    fn longest_element_brute_force_oracle() {
        // Greedy ascent must agree with the maximum over the parabolic.
        let sys = CoxeterSystem::build(CoxeterType::b(3).unwrap()).unwrap();
        for k in SubsetMask::all(3) {
            let greedy = sys.longest_element(k);
            let max = sys
                .parabolic_elements(k)
                .unwrap()
                .into_iter()
                .max_by_key(|w| w.length())
                .unwrap();
            assert_eq!(greedy.length(), max.length());
            assert_eq!(greedy, max, "unique longest element of W_{k}");
        }
    }

    #[test]
    fn coset_rep_examples() {
        // A2, J={s1}, K=S: d = s1 * (s1 s2 s1) = s2 s1.
        let a2 = CoxeterSystem::build(CoxeterType::a(2).unwrap()).unwrap();
        let d = a2
            .coset_rep_d(SubsetMask::singleton(1), a2.full_set())
            .unwrap();
        assert_eq!(d, a2.element_from_word(&[2, 1]).unwrap());
        // J = K gives the identity.
        let d = a2
            .coset_rep_d(SubsetMask::singleton(1), SubsetMask::singleton(1))
            .unwrap();
        assert!(d.is_identity());
        // J not contained in K is an error.
        assert!(a2
            .coset_rep_d(SubsetMask::singleton(2), SubsetMask::singleton(1))
            .is_err());
    }

    #[test]
    fn longest_element_has_no_ascents_inside() {
        let sys = CoxeterSystem::build(CoxeterType::b(3).unwrap()).unwrap();
        let j = SubsetMask::from_indices(&[2, 3]);
        let d = sys.coset_rep_d(j, sys.full_set()).unwrap();
        // d_J^K is the longest coset representative: every s in K is a
        // descent of w_K, and w_J absorbs the J part.
        let wk = sys.longest_element(sys.full_set());
        for i in 1..=3 {
            assert!(!wk.has_right_ascent(i).unwrap());
        }
        assert_eq!(d.length(), wk.length() - sys.longest_element(j).length());
    }

    #[test]
    fn identity_is_unique_all_ascent_element() {
        for ctype in [
            CoxeterType::a(4).unwrap(),
            CoxeterType::b(3).unwrap(),
            CoxeterType::d(4).unwrap(),
            CoxeterType::i2(9).unwrap(),
            CoxeterType::h3(),
            CoxeterType::h4(),
            CoxeterType::f4(),
        ] {
            let sys = CoxeterSystem::build(ctype).unwrap();
            let full = sys.full_set();
            let count = sys
                .elements()
                .unwrap()
                .iter()
                .filter(|w| w.right_ascent_mask() == full)
                .count();
            assert_eq!(count, 1, "{ctype}: only the identity has all ascents");
        }
    }

    #[test]
    fn ascent_matches_length_comparison() {
        for ctype in [
            CoxeterType::a(3).unwrap(),
            CoxeterType::b(3).unwrap(),
            CoxeterType::d(4).unwrap(),
            CoxeterType::i2(6).unwrap(),
            CoxeterType::h3(),
        ] {
            let sys = CoxeterSystem::build(ctype).unwrap();
            for w in sys.elements().unwrap() {
                for i in 1..=sys.rank() {
                    let ws = w.multiply(sys.generator(i).unwrap()).unwrap();
                    assert_eq!(
                        w.has_right_ascent(i).unwrap(),
                        ws.length() > w.length(),
                        "{ctype}, w = {:?}, i = {i}",
                        w
                    );
                    let sw = sys.generator(i).unwrap().multiply(w).unwrap();
                    assert_eq!(w.has_left_ascent(i).unwrap(), sw.length() > w.length());
                }
            }
        }
    }

    #[test]
    fn longest_element_length_is_number_of_positive_roots() {
        let expected: Vec<(CoxeterType, usize)> = vec![
            (CoxeterType::a(4).unwrap(), 10),
            (CoxeterType::b(4).unwrap(), 16),
            (CoxeterType::d(4).unwrap(), 12),
            (CoxeterType::i2(7).unwrap(), 7),
            (CoxeterType::h3(), 15),
            (CoxeterType::h4(), 60),
            (CoxeterType::f4(), 24),
            (CoxeterType::e(8).unwrap(), 120),
        ];
        for (ctype, n_pos) in expected {
            let sys = CoxeterSystem::build(ctype).unwrap();
            let w0 = sys.longest_element(sys.full_set());
            assert_eq!(w0.length(), n_pos, "{ctype}");
            if let Some(count) = sys.num_positive_roots() {
                assert_eq!(count, n_pos, "{ctype}: root table size");
            }
            for i in 1..=sys.rank() {
                assert!(!w0.has_right_ascent(i).unwrap());
            }
        }
    }

    #[test]
    fn root_and_signed_models_agree_on_lengths() {
        for ctype in [
            CoxeterType::a(3).unwrap(),
            CoxeterType::a(4).unwrap(),
            CoxeterType::b(3).unwrap(),
            CoxeterType::b(4).unwrap(),
            CoxeterType::d(4).unwrap(),
        ] {
            let native = CoxeterSystem::build(ctype).unwrap();
            let rooted =
                CoxeterSystem::build_with_model(ctype, ModelKind::RootPermutation).unwrap();
            // Element-by-element: transport each element of the native
            // model into the root model along its reduced word.
            for wn in native.elements().unwrap() {
                let word = native.reduced_word(wn);
                let wr = rooted.element_from_word(&word).unwrap();
                assert_eq!(wn.length(), wr.length(), "{ctype} {word:?}");
                for i in 1..=ctype.rank() {
                    assert_eq!(
                        wn.has_right_ascent(i).unwrap(),
                        wr.has_right_ascent(i).unwrap(),
                        "{ctype} {word:?} ascent at {i}"
                    );
                }
            }
            assert_eq!(
                native.elements().unwrap().len(),
                rooted.elements().unwrap().len()
            );
        }
    }

    #[test]
    fn type_d_even_sign_parity_is_closed() {
        let sys = CoxeterSystem::build(CoxeterType::d(4).unwrap()).unwrap();
        for w in sys.elements().unwrap() {
            match w.data() {
                ElementData::Signed(v) => {
                    let negatives = v.iter().filter(|&&x| x < 0).count();
                    assert_eq!(negatives % 2, 0, "type D flips an even number of signs");
                }
                _ => panic!("expected signed model"),
            }
        }
    }

    #[test]
    fn large_dihedral_orders_stay_combinatorial() {
        // No geometric representation behind I2(m); any m works.
        let sys = CoxeterSystem::build(CoxeterType::i2(97).unwrap()).unwrap();
        assert_eq!(sys.elements().unwrap().len(), 194);
        let w0 = sys.longest_element(sys.full_set());
        assert_eq!(w0.length(), 97);
        let spin = sys.element_from_word(&[1, 2]).unwrap();
        let mut power = sys.identity();
        for _ in 0..97 {
            power = power.multiply(&spin).unwrap();
        }
        assert!(power.is_identity(), "(s1 s2)^m = e");
    }

    #[test]
    fn dihedral_length_matches_word_growth() {
        let sys = CoxeterSystem::build(CoxeterType::i2(7).unwrap()).unwrap();
        // Alternating words s1 s2 s1 ... of length l <= m are reduced.
        let mut w = sys.identity();
        for l in 0..7 {
            assert_eq!(w.length(), l);
            let next = if l % 2 == 0 { 1 } else { 2 };
            w = w.multiply(sys.generator(next).unwrap()).unwrap();
        }
        assert_eq!(w.length(), 7);
    }

    #[test]
    fn length_equals_word_distance_from_identity() {
        // Independent oracle: graph distance in the Cayley graph equals the
        // model length formula.
        for ctype in [
            CoxeterType::a(3).unwrap(),
            CoxeterType::b(3).unwrap(),
            CoxeterType::d(4).unwrap(),
            CoxeterType::i2(7).unwrap(),
            CoxeterType::h3(),
        ] {
            let sys = CoxeterSystem::build(ctype).unwrap();
            let mut distance: HashMap<ElementData, usize> = HashMap::new();
            let mut frontier = vec![sys.identity()];
            distance.insert(sys.identity().data().clone(), 0);
            let mut depth = 0;
            while !frontier.is_empty() {
                depth += 1;
                let mut next = Vec::new();
                for w in &frontier {
                    for i in 1..=sys.rank() {
                        let ws = w.multiply(sys.generator(i).unwrap()).unwrap();
                        if !distance.contains_key(ws.data()) {
                            distance.insert(ws.data().clone(), depth);
                            next.push(ws);
                        }
                    }
                }
                frontier = next;
            }
            for w in sys.elements().unwrap() {
                assert_eq!(w.length(), distance[w.data()], "{ctype}");
            }
        }
    }

    #[test]
    fn systems_and_elements_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<CoxeterSystem>();
        assert_send_sync::<GroupElement>();
        assert_send_sync::<crate::descent::AlgebraElement>();
    }
}
