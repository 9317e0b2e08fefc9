//! Group elements in the faithful model chosen per type.
//!
//! Type A uses one-line permutations of `{1..n+1}`, types B and D signed
//! permutations of `{±1..±n}`, dihedral types a (rotation, reflection) pair,
//! and the exceptional types act on the positive roots of their root system.
//! Reduced words are never the identity-defining payload; equality is payload
//! equality.

use crate::coxeter::{CoxeterSystem, CoxeterType, Family};
use crate::{Error, Result};

use super::roots::{pack, unpack, PackedRoot};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum ElementData {
    /// One-line notation: position `p` (0-based) holds `w(p+1)`, values `1..=n+1`.
    Perm(Vec<u32>),
    /// Signed one-line notation: position `p` holds `w(p+1)`, values `±1..=n`.
    Signed(Vec<i32>),
    /// `(rot, refl)` stands for `(s1 s2)^rot * s1^refl` in the dihedral group.
    Dihedral { rot: u32, refl: bool },
    /// Packed images of the positive roots.
    RootPerm(Vec<PackedRoot>),
}

/// An element of a finite Coxeter group.
///
/// Elements carry their [`CoxeterType`]; operations on elements from
/// different systems (or different models of the same system) fail with
/// [`Error::MixedSystems`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement {
    pub(crate) ctype: CoxeterType,
    pub(crate) data: ElementData,
}

impl GroupElement {
    pub fn ctype(&self) -> CoxeterType {
        self.ctype
    }

    pub(crate) fn data(&self) -> &ElementData {
        &self.data
    }

    pub fn is_identity(&self) -> bool {
        match &self.data {
            ElementData::Perm(v) => v.iter().enumerate().all(|(p, &x)| x as usize == p + 1),
            ElementData::Signed(v) => v.iter().enumerate().all(|(p, &x)| x == p as i32 + 1),
            ElementData::Dihedral { rot, refl } => *rot == 0 && !refl,
            ElementData::RootPerm(v) => v.iter().enumerate().all(|(r, &x)| x == pack(r, false)),
        }
    }

    /// Coxeter length: the number of positive roots sent to negative ones,
    /// computed by the model-specific combinatorial formula.
    pub fn length(&self) -> usize {
        match &self.data {
            ElementData::Perm(v) => inversions(v),
            ElementData::Signed(v) => {
                let inv = signed_inversions(v);
                let drop: usize = v
                    .iter()
                    .filter(|&&x| x < 0)
                    .map(|&x| {
                        if self.ctype.family() == Family::D {
                            (-x) as usize - 1
                        } else {
                            (-x) as usize
                        }
                    })
                    .sum();
                inv + drop
            }
            ElementData::Dihedral { rot, refl } => {
                let m = self.ctype.dihedral_m() as usize;
                let k = *rot as usize;
                if *refl {
                    (2 * k + 1).min(2 * (m - k) - 1)
                } else {
                    (2 * k).min(2 * (m - k))
                }
            }
            ElementData::RootPerm(v) => v.iter().filter(|&&x| x & 1 == 1).count(),
        }
    }

    pub fn multiply(&self, rhs: &GroupElement) -> Result<GroupElement> {
        if self.ctype != rhs.ctype {
            return Err(Error::MixedSystems);
        }
        match (&self.data, &rhs.data) {
            (ElementData::Perm(a), ElementData::Perm(b)) => Ok(GroupElement {
                ctype: self.ctype,
                data: ElementData::Perm(b.iter().map(|&x| a[x as usize - 1]).collect()),
            }),
            (ElementData::Signed(a), ElementData::Signed(b)) => Ok(GroupElement {
                ctype: self.ctype,
                data: ElementData::Signed(
                    b.iter()
                        .map(|&x| {
                            if x > 0 {
                                a[x as usize - 1]
                            } else {
                                -a[(-x) as usize - 1]
                            }
                        })
                        .collect(),
                ),
            }),
            (
                ElementData::Dihedral { rot: ka, refl: fa },
                ElementData::Dihedral { rot: kb, refl: fb },
            ) => {
                let m = self.ctype.dihedral_m();
                let rot = if *fa {
                    (ka + m - kb) % m
                } else {
                    (ka + kb) % m
                };
                Ok(GroupElement {
                    ctype: self.ctype,
                    data: ElementData::Dihedral {
                        rot,
                        refl: fa ^ fb,
                    },
                })
            }
            (ElementData::RootPerm(a), ElementData::RootPerm(b)) => {
                let data = b
                    .iter()
                    .map(|&x| {
                        let (q, flip) = unpack(x);
                        a[q] ^ (flip as u32)
                    })
                    .collect();
                Ok(GroupElement {
                    ctype: self.ctype,
                    data: ElementData::RootPerm(data),
                })
            }
            _ => Err(Error::MixedSystems),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        let data = match &self.data {
            ElementData::Perm(v) => {
                let mut out = vec![0u32; v.len()];
                for (p, &x) in v.iter().enumerate() {
                    out[x as usize - 1] = p as u32 + 1;
                }
                ElementData::Perm(out)
            }
            ElementData::Signed(v) => {
                let mut out = vec![0i32; v.len()];
                for (p, &x) in v.iter().enumerate() {
                    if x > 0 {
                        out[x as usize - 1] = p as i32 + 1;
                    } else {
                        out[(-x) as usize - 1] = -(p as i32 + 1);
                    }
                }
                ElementData::Signed(out)
            }
            ElementData::Dihedral { rot, refl } => {
                let m = self.ctype.dihedral_m();
                if *refl {
                    ElementData::Dihedral {
                        rot: *rot,
                        refl: true,
                    }
                } else {
                    ElementData::Dihedral {
                        rot: (m - rot) % m,
                        refl: false,
                    }
                }
            }
            ElementData::RootPerm(v) => {
                let mut out = vec![0u32; v.len()];
                for (r, &x) in v.iter().enumerate() {
                    let (q, flip) = unpack(x);
                    out[q] = pack(r, flip);
                }
                ElementData::RootPerm(out)
            }
        };
        GroupElement {
            ctype: self.ctype,
            data,
        }
    }

    /// `true` iff `l(w s_i) > l(w)`, decided by value comparison in the
    /// permutation models and by a root-sign test in the root model.
    pub fn has_right_ascent(&self, index: usize) -> Result<bool> {
        let rank = self.ctype.rank();
        if index == 0 || index > rank {
            return Err(Error::GeneratorIndex { index, rank });
        }
        Ok(match &self.data {
            ElementData::Perm(v) => v[index - 1] < v[index],
            ElementData::Signed(v) => match self.ctype.family() {
                Family::B => {
                    if index == 1 {
                        v[0] > 0
                    } else {
                        v[index - 2] < v[index - 1]
                    }
                }
                Family::D => {
                    if index == 1 {
                        v[0] + v[1] > 0
                    } else {
                        v[index - 2] < v[index - 1]
                    }
                }
                _ => unreachable!("signed model only for B and D"),
            },
            ElementData::Dihedral { .. } => {
                let s = generator_data(self.ctype, index);
                let product = GroupElement {
                    ctype: self.ctype,
                    data: s,
                };
                self.multiply(&product).expect("same system").length() > self.length()
            }
            ElementData::RootPerm(v) => v[index - 1] & 1 == 0,
        })
    }

    /// `true` iff `l(s_i w) > l(w)`.
    pub fn has_left_ascent(&self, index: usize) -> Result<bool> {
        self.inverse().has_right_ascent(index)
    }

    /// Bitmask of right ascents over all generators.
    pub fn right_ascent_mask(&self) -> crate::SubsetMask {
        let mut bits = 0u16;
        for i in 1..=self.ctype.rank() {
            if self.has_right_ascent(i).expect("index in range") {
                bits |= 1 << (i - 1);
            }
        }
        crate::SubsetMask::from_bits(bits)
    }

    pub fn left_ascent_mask(&self) -> crate::SubsetMask {
        self.inverse().right_ascent_mask()
    }
}

pub(crate) fn identity_data(
    ctype: CoxeterType,
    model: super::ModelKind,
    table: Option<&super::roots::RootTable>,
) -> ElementData {
    let rank = ctype.rank();
    match model {
        super::ModelKind::Permutation => ElementData::Perm((1..=rank as u32 + 1).collect()),
        super::ModelKind::SignedPermutation => {
            ElementData::Signed((1..=rank as i32).collect())
        }
        super::ModelKind::Dihedral => ElementData::Dihedral { rot: 0, refl: false },
        super::ModelKind::RootPermutation => {
            let n = table.expect("root table required").num_positive();
            ElementData::RootPerm((0..n).map(|r| pack(r, false)).collect())
        }
    }
}

/// Simple-reflection payload in the default model of `ctype` (non-root models
/// only; root-model generators come from the root table).
pub(crate) fn generator_data(ctype: CoxeterType, index: usize) -> ElementData {
    let rank = ctype.rank();
    debug_assert!((1..=rank).contains(&index));
    match ctype.family() {
        Family::A => {
            let mut v: Vec<u32> = (1..=rank as u32 + 1).collect();
            v.swap(index - 1, index);
            ElementData::Perm(v)
        }
        Family::B => {
            let mut v: Vec<i32> = (1..=rank as i32).collect();
            if index == 1 {
                v[0] = -1;
            } else {
                v.swap(index - 2, index - 1);
            }
            ElementData::Signed(v)
        }
        Family::D => {
            let mut v: Vec<i32> = (1..=rank as i32).collect();
            if index == 1 {
                v[0] = -2;
                v[1] = -1;
            } else {
                v.swap(index - 2, index - 1);
            }
            ElementData::Signed(v)
        }
        Family::I2 => {
            let m = ctype.dihedral_m();
            if index == 1 {
                ElementData::Dihedral { rot: 0, refl: true }
            } else {
                ElementData::Dihedral {
                    rot: m - 1,
                    refl: true,
                }
            }
        }
        _ => unreachable!("root-model generators are built from the root table"),
    }
}

fn inversions(v: &[u32]) -> usize {
    let mut count = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                count += 1;
            }
        }
    }
    count
}

fn signed_inversions(v: &[i32]) -> usize {
    let mut count = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                count += 1;
            }
        }
    }
    count
}

/// Conjugates generator `s` (1-based) by `w`, i.e. computes `w^{-1} s w`, and
/// returns `Some(t)` when the result is again a simple reflection `s_t`.
pub(crate) fn conjugate_generator(sys: &CoxeterSystem, w: &GroupElement, s: usize) -> Option<usize> {
    if let ElementData::RootPerm(v) = &w.data {
        // w^{-1} s_s w = s_t  iff  w(alpha_t) = ±alpha_s.
        for (t, &packed) in v.iter().enumerate().take(sys.rank()) {
            let (idx, _) = unpack(packed);
            if idx == s - 1 {
                return Some(t + 1);
            }
        }
        return None;
    }
    let winv = w.inverse();
    let u = winv
        .multiply(sys.generator(s).expect("valid index"))
        .and_then(|x| x.multiply(w))
        .expect("same system");
    (1..=sys.rank()).find(|&t| {
        sys.generator(t)
            .map(|g| g.data == u.data)
            .unwrap_or(false)
    })
}
