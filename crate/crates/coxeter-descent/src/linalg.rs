//! Exact linear algebra over the integers and rationals.
//!
//! Rank and membership questions run on integer vectors with fraction-free
//! (Bareiss-style) row reduction; coefficient extraction solves small dense
//! systems over arbitrary-precision rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

/// A row-echelon basis of an integer row space, maintained fraction-free.
pub struct IntEchelon {
    width: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl IntEchelon {
    pub fn new(width: usize) -> IntEchelon {
        IntEchelon {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows without denominators; the result
    /// is zero exactly when `v` lies in the rational row space.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.width);
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let a = row[p].clone();
            let b = out[p].clone();
            for (o, r) in out.iter_mut().zip(row) {
                *o = &*o * &a - r * &b;
            }
            normalize(&mut out);
        }
        out
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Inserts `v`; returns `true` when it enlarged the row space.
    pub fn insert(&mut self, v: &[BigInt]) -> bool {
        let reduced = self.reduce(v);
        match reduced.iter().position(|c| !c.is_zero()) {
            None => false,
            Some(p) => {
                self.rows.push(reduced);
                self.pivots.push(p);
                true
            }
        }
    }
}

fn normalize(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for c in v.iter() {
        g = g.gcd(c);
        if g == BigInt::from(1) {
            return;
        }
    }
    if g.is_zero() || g == BigInt::from(1) {
        return;
    }
    for c in v.iter_mut() {
        *c = &*c / &g;
    }
}

/// Solves `sum_i c_i * columns[i] = target` exactly. Returns `None` when the
/// system is inconsistent.
#[allow(clippy::needless_range_loop)]
pub fn solve_rational(
    columns: &[Vec<BigRational>],
    target: &[BigRational],
) -> Option<Vec<BigRational>> {
    let ncols = columns.len();
    let nrows = target.len();
    // Augmented matrix [columns | target], row-major.
    let mut m: Vec<Vec<BigRational>> = (0..nrows)
        .map(|r| {
            let mut row: Vec<BigRational> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();

    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut row = 0;
    for col in 0..ncols {
        let pivot = (row..nrows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(row, p);
        let inv = m[row][col].clone();
        for c in col..=ncols {
            let v = m[row][c].clone() / inv.clone();
            m[row][c] = v;
        }
        for r in 0..nrows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=ncols {
                    let v = m[r][c].clone() - f.clone() * m[row][c].clone();
                    m[r][c] = v;
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
    }
    // Inconsistent if a zero row has nonzero target.
    for r in row..nrows {
        if !m[r][ncols].is_zero() {
            return None;
        }
    }
    let mut solution = vec![BigRational::zero(); ncols];
    for (col, p) in pivot_of_col.iter().enumerate() {
        if let Some(r) = p {
            solution[col] = m[*r][ncols].clone();
        }
    }
    Some(solution)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn iv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn rv(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from(BigInt::from(x))).collect()
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = IntEchelon::new(3);
        assert!(e.insert(&iv(&[2, 4, 6])));
        assert!(!e.insert(&iv(&[1, 2, 3])), "scaled row adds nothing");
        assert!(e.insert(&iv(&[0, 1, 1])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&iv(&[2, 5, 7])));
        assert!(!e.contains(&iv(&[0, 0, 1])));
    }

    #[test]
    fn solve_simple_system() {
        // c0*(1,0) + c1*(1,1) = (3, 2) => c0 = 1, c1 = 2.
        let cols = vec![rv(&[1, 0]), rv(&[1, 1])];
        let sol = solve_rational(&cols, &rv(&[3, 2])).unwrap();
        assert_eq!(sol[0], BigRational::one());
        assert_eq!(sol[1], BigRational::from(BigInt::from(2)));
    }

    #[test]
    fn solve_detects_inconsistency() {
        let cols = vec![rv(&[1, 2])];
        assert!(solve_rational(&cols, &rv(&[1, 3])).is_none());
    }
}
