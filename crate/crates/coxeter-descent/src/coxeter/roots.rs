//! Root systems in simple-root coordinates.
//!
//! Elements of the exceptional types (and, for cross-checking, the classical
//! types) act as signed permutations of the positive roots. Roots are stored
//! as coefficient vectors over the simple roots, so no Euclidean embedding is
//! needed: the reflection `s_j` changes only coordinate `j`,
//!
//! ```text
//! s_j(sum_i c_i a_i) = sum_i c_i a_i - (sum_i c_i C[i][j]) a_j,
//! ```
//!
//! where `C[i][j] = 2<a_i, a_j> / <a_j, a_j>`. For the crystallographic types
//! the entries are plain integers; H3 and H4 need the golden ratio, so all
//! coordinates live in Z[phi] with `phi^2 = phi + 1`.

use std::collections::HashMap;
use std::fmt;

/// A golden-ratio integer `a + b*phi`, `phi = (1 + sqrt 5)/2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Golden {
    pub a: i64,
    pub b: i64,
}

impl Golden {
    pub const ZERO: Golden = Golden { a: 0, b: 0 };

    pub fn int(a: i64) -> Golden {
        Golden { a, b: 0 }
    }

    pub fn phi(b: i64) -> Golden {
        Golden { a: 0, b }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Exact sign of `a + b*phi`: compares `2a + b` with `-b*sqrt(5)`.
    pub fn sign(self) -> i32 {
        let p = 2 * self.a + self.b;
        let q = self.b;
        if p == 0 && q == 0 {
            return 0;
        }
        if p >= 0 && q >= 0 {
            return 1;
        }
        if p <= 0 && q <= 0 {
            return -1;
        }
        // p and q have strictly opposite signs; sqrt(5) is irrational so the
        // squared comparison cannot tie.
        if p > 0 {
            if p * p > 5 * q * q {
                1
            } else {
                -1
            }
        } else if 5 * q * q > p * p {
            1
        } else {
            -1
        }
    }

    pub fn is_positive(self) -> bool {
        self.sign() > 0
    }
}

impl std::ops::Add for Golden {
    type Output = Golden;
    fn add(self, rhs: Golden) -> Golden {
        Golden {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl std::ops::Sub for Golden {
    type Output = Golden;
    fn sub(self, rhs: Golden) -> Golden {
        Golden {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl std::ops::Neg for Golden {
    type Output = Golden;
    fn neg(self) -> Golden {
        Golden {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl std::ops::Mul for Golden {
    type Output = Golden;
    // (a + b phi)(c + d phi) = ac + (ad + bc) phi + bd (phi + 1)
    fn mul(self, rhs: Golden) -> Golden {
        Golden {
            a: self.a * rhs.a + self.b * rhs.b,
            b: self.a * rhs.b + self.b * rhs.a + self.b * rhs.b,
        }
    }
}

impl fmt::Debug for Golden {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}phi"),
            (a, b) => write!(f, "{a}{b:+}phi"),
        }
    }
}

/// Packed image of a positive root under a group element: root index shifted
/// left once, with the low bit recording a sign flip.
pub type PackedRoot = u32;

pub fn pack(index: usize, negative: bool) -> PackedRoot {
    ((index as u32) << 1) | (negative as u32)
}

pub fn unpack(packed: PackedRoot) -> (usize, bool) {
    ((packed >> 1) as usize, packed & 1 == 1)
}

/// Positive roots of a finite root system plus the simple-reflection action.
pub struct RootTable {
    /// Positive roots as coordinate vectors over the simple roots. The first
    /// `rank` entries are the simple roots themselves.
    pub positive: Vec<Vec<Golden>>,
    /// `action[s][r]` = packed image of positive root `r` under `s_{s+1}`.
    pub action: Vec<Vec<PackedRoot>>,
}

impl RootTable {
    /// Generates all positive roots from the Cartan matrix
    /// `cartan[i][j] = 2<a_i,a_j>/<a_j,a_j>` by closing the simple roots
    /// under all simple reflections.
    pub fn from_cartan(cartan: &[Vec<Golden>]) -> RootTable {
        let rank = cartan.len();
        let mut positive: Vec<Vec<Golden>> = Vec::new();
        let mut lookup: HashMap<Vec<Golden>, usize> = HashMap::new();
        for i in 0..rank {
            let mut coords = vec![Golden::ZERO; rank];
            coords[i] = Golden::int(1);
            lookup.insert(coords.clone(), i);
            positive.push(coords);
        }

        let mut queue: Vec<usize> = (0..rank).collect();
        while let Some(r) = queue.pop() {
            for j in 0..rank {
                let image = reflect(&positive[r], j, cartan);
                if is_negative(&image) {
                    continue;
                }
                if !lookup.contains_key(&image) {
                    lookup.insert(image.clone(), positive.len());
                    positive.push(image);
                    queue.push(positive.len() - 1);
                }
            }
        }

        // Deterministic root order: by height (coordinate sum), then by
        // coordinates; simple roots keep indices 0..rank.
        let mut order: Vec<usize> = (rank..positive.len()).collect();
        order.sort_by_key(|&r| sort_key(&positive[r]));
        let mut sorted: Vec<Vec<Golden>> = positive[..rank].to_vec();
        sorted.extend(order.iter().map(|&r| positive[r].clone()));
        let lookup: HashMap<Vec<Golden>, usize> = sorted
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();

        let n = sorted.len();
        let mut action = vec![vec![0u32; n]; rank];
        for (j, row) in action.iter_mut().enumerate() {
            for (r, slot) in row.iter_mut().enumerate() {
                let image = reflect(&sorted[r], j, cartan);
                *slot = if is_negative(&image) {
                    let neg: Vec<Golden> = image.iter().map(|&c| -c).collect();
                    pack(lookup[&neg], true)
                } else {
                    pack(lookup[&image], false)
                };
            }
        }

        RootTable {
            positive: sorted,
            action,
        }
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }
}

fn reflect(coords: &[Golden], j: usize, cartan: &[Vec<Golden>]) -> Vec<Golden> {
    let mut out = coords.to_vec();
    let mut pairing = Golden::ZERO;
    for (i, c) in coords.iter().enumerate() {
        if !c.is_zero() {
            pairing = pairing + *c * cartan[i][j];
        }
    }
    out[j] = out[j] - pairing;
    out
}

/// A root is negative exactly when every coordinate is `<= 0`; roots never
/// mix signs.
fn is_negative(coords: &[Golden]) -> bool {
    coords.iter().all(|c| c.sign() <= 0)
}

fn sort_key(coords: &[Golden]) -> (i64, i64, Vec<(i64, i64)>) {
    let mut ha = 0;
    let mut hb = 0;
    for c in coords {
        ha += c.a;
        hb += c.b;
    }
    (ha, hb, coords.iter().map(|c| (c.a, c.b)).collect())
}
