//! Exact dense linear algebra over the coefficient field: reduced row
//! echelon form, rank, kernel bases and incremental span maintenance.
//! Pivoting is leftmost-first-nonzero; determinism matters here, numerical
//! stability does not since all arithmetic is exact.

use crate::coeff::Coefficient;

#[derive(Debug, Clone, PartialEq)]
pub struct MatrixExact {
    rows: usize,
    cols: usize,
    data: Vec<Coefficient>,
}

impl MatrixExact {
    pub fn zero(rows: usize, cols: usize) -> Self {
        MatrixExact {
            rows,
            cols,
            data: vec![Coefficient::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = MatrixExact::zero(n, n);
        for i in 0..n {
            m.set(i, i, Coefficient::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Coefficient>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        MatrixExact {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Coefficient {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Coefficient) {
        self.data[r * self.cols + c] = v;
    }

    /// Reduced row echelon form together with the rank.
    pub fn rref(&self) -> (MatrixExact, usize) {
        let mut m = self.clone();
        let rank = m.reduce_in_place();
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce_in_place()
    }

    /// Rank computed by consuming the matrix, avoiding the working copy.
    pub fn into_rank(mut self) -> usize {
        self.reduce_in_place()
    }

    fn reduce_in_place(&mut self) -> usize {
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            // first nonzero entry at or below the current pivot row
            let Some(src) = (pivot_row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if src != pivot_row {
                for c in 0..self.cols {
                    let a = self.get(pivot_row, c);
                    let b = self.get(src, c);
                    self.set(pivot_row, c, b);
                    self.set(src, c, a);
                }
            }
            let inv = self
                .get(pivot_row, col)
                .inv()
                .expect("pivot is nonzero by construction");
            for c in col..self.cols {
                let v = self.get(pivot_row, c);
                if !v.is_zero() {
                    self.set(pivot_row, c, v * inv);
                }
            }
            for r in 0..self.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    let p = self.get(pivot_row, c);
                    if !p.is_zero() {
                        let v = self.get(r, c) - factor * p;
                        self.set(r, c, v);
                    }
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    /// Exact basis of the right null space; its length is cols - rank.
    pub fn kernel_basis(&self) -> Vec<Vec<Coefficient>> {
        let (rref, rank) = self.rref();
        let mut pivot_col_of_row = Vec::with_capacity(rank);
        let mut is_pivot_col = vec![false; self.cols];
        for r in 0..rank {
            let col = (0..self.cols)
                .find(|&c| !rref.get(r, c).is_zero())
                .expect("nonzero row above the rank");
            pivot_col_of_row.push(col);
            is_pivot_col[col] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - rank);
        for free in 0..self.cols {
            if is_pivot_col[free] {
                continue;
            }
            let mut v = vec![Coefficient::zero(); self.cols];
            v[free] = Coefficient::one();
            for r in 0..rank {
                let c = rref.get(r, free);
                if !c.is_zero() {
                    v[pivot_col_of_row[r]] = -c;
                }
            }
            basis.push(v);
        }
        basis
    }

    pub fn mat_vec(&self, v: &[Coefficient]) -> Vec<Coefficient> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Coefficient::zero();
                for c in 0..self.cols {
                    let a = self.get(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc += a * v[c];
                    }
                }
                acc
            })
            .collect()
    }
}

/// Incremental span of row vectors kept in echelon form: each basis vector
/// is normalized to a leading 1 and basis vectors are sorted by pivot column.
#[derive(Debug, Clone, Default)]
pub struct Span {
    basis: Vec<Vec<Coefficient>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new() -> Self {
        Span::default()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Coefficient>] {
        &self.basis
    }

    /// Reduce v against the span; insert the residue when nonzero.
    /// Returns whether the vector enlarged the span.
    pub fn insert(&mut self, mut v: Vec<Coefficient>) -> bool {
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = v[p];
            if c.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(b.iter()) {
                if !y.is_zero() {
                    *x -= c * *y;
                }
            }
        }
        let Some(pivot) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[pivot].inv().expect("pivot entry is nonzero");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= inv;
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.basis.insert(at, v);
        true
    }

    /// Coordinates of v in the span basis, when v lies in the span.
    pub fn coordinates(&self, v: &[Coefficient]) -> Option<Vec<Coefficient>> {
        let mut v = v.to_vec();
        let mut coords = vec![Coefficient::zero(); self.basis.len()];
        for (i, (b, &p)) in self.basis.iter().zip(&self.pivots).enumerate() {
            let c = v[p];
            if c.is_zero() {
                continue;
            }
            coords[i] = c;
            for (x, y) in v.iter_mut().zip(b.iter()) {
                if !y.is_zero() {
                    *x -= c * *y;
                }
            }
        }
        v.iter().all(|c| c.is_zero()).then_some(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, Coefficient};
    use proptest::prelude::*;

    fn c(n: i64) -> Coefficient {
        Coefficient::from_int(n)
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = MatrixExact::identity(3);
        let (r, rank) = id.rref();
        assert_eq!(r, id);
        assert_eq!(rank, 3);
        let z = MatrixExact::zero(2, 4);
        let (r, rank) = z.rref();
        assert_eq!(r, z);
        assert_eq!(rank, 0);
    }

    #[test]
    fn rank_one_complex_rows() {
        // second row is i times the first
        let i = Coefficient::i();
        let m = MatrixExact::from_rows(vec![
            vec![c(1), i],
            vec![i, -c(1)],
        ]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(MatrixExact::identity(3).kernel_basis().is_empty());
        let m = MatrixExact::from_rows(vec![vec![c(1), c(1)]]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 1);
        // (1, -1) up to scale
        let v = &basis[0];
        assert_eq!(v[0] * c(-1), v[1]);
        assert!(m.mat_vec(v).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn span_insert_examples() {
        let mut span = Span::new();
        assert!(span.insert(vec![c(0), c(2), c(1)]));
        assert!(!span.insert(vec![c(0), c(2), c(1)]));
        assert!(!span.insert(vec![c(0), c(2) * Coefficient::i(), Coefficient::i()]));
        assert!(span.insert(vec![c(1), c(0), c(0)]));
        assert_eq!(span.dim(), 2);
        let coords = span.coordinates(&[c(2), c(2), c(1)]).unwrap();
        assert_eq!(coords.len(), 2);
        assert!(span.coordinates(&[c(0), c(0), c(5)]).is_none());
    }

    // Bounds sized so every elimination intermediate provably stays inside
    // the checked 128-bit rational envelope (entries are ratios of minors;
    // 4x5 with |num| <= 5 and den <= 2 leaves a wide margin).
    fn arb_matrix() -> impl Strategy<Value = MatrixExact> {
        (1usize..=4, 1usize..=5).prop_flat_map(|(r, c)| {
            proptest::collection::vec((-5i64..=5, 1i64..=2), r * c).prop_map(move |entries| {
                let data = entries
                    .into_iter()
                    .map(|(n, d)| Coefficient::from_rat(rat(n, d)))
                    .collect();
                MatrixExact {
                    rows: r,
                    cols: c,
                    data,
                }
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let kernel = m.kernel_basis();
            prop_assert_eq!(m.rank() + kernel.len(), m.cols());
            for v in &kernel {
                prop_assert!(m.mat_vec(v).iter().all(|x| x.is_zero()));
            }
        }

        #[test]
        fn span_insert_idempotent(m in arb_matrix()) {
            let mut span = Span::new();
            let rows: Vec<Vec<Coefficient>> = (0..m.rows())
                .map(|r| (0..m.cols()).map(|c| m.get(r, c)).collect())
                .collect();
            for row in &rows {
                span.insert(row.clone());
            }
            let dim = span.dim();
            prop_assert_eq!(dim, m.rank());
            for row in &rows {
                prop_assert!(!span.insert(row.clone()));
            }
            prop_assert_eq!(span.dim(), dim);
        }
    }
}
