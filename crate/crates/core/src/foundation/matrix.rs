use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::scalar::Scalar;
use crate::Error;

/// Sparse matrix over the rationals. Zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

pub type Vector = Vec<Scalar>;

impl Matrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> Result<Self, Error> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Matrix::new(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone())?;
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) -> Result<(), Error> {
        if row >= self.rows || col >= self.cols {
            return Err(Error::Shape(format!(
                "index ({row}, {col}) outside {}x{}",
                self.rows, self.cols
            )));
        }
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
        Ok(())
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn nonzeros(&self) -> usize {
        self.entries.len()
    }

    pub fn mul_vector(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        let mut out = vec![Scalar::zero(); self.rows];
        for ((i, j), a) in &self.entries {
            out[*i] += a * &v[*j];
        }
        out
    }

    fn row_maps(&self) -> Vec<BTreeMap<usize, Scalar>> {
        let mut rows = vec![BTreeMap::new(); self.rows];
        for ((i, j), a) in &self.entries {
            rows[*i].insert(*j, a.clone());
        }
        rows
    }

    /// Reduced row echelon form; returns the nonzero rows and their pivot columns.
    ///
    /// Among candidate pivot rows for a column the one with the largest support
    /// is taken (lowest index on ties). The result does not depend on this
    /// choice since the reduced echelon form is unique.
    fn rref(&self) -> (Vec<BTreeMap<usize, Scalar>>, Vec<usize>) {
        let mut rows: Vec<_> = self
            .row_maps()
            .into_iter()
            .filter(|r| !r.is_empty())
            .collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let candidate = (rank..rows.len())
                .filter(|&i| rows[i].contains_key(&col))
                .max_by(|&a, &b| rows[a].len().cmp(&rows[b].len()).then(b.cmp(&a)));
            let Some(p) = candidate else { continue };
            rows.swap(rank, p);
            let inv = Scalar::one() / &rows[rank][&col];
            for v in rows[rank].values_mut() {
                *v *= &inv;
            }
            let pivot_row = rows[rank].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == rank {
                    continue;
                }
                let Some(f) = row.get(&col).cloned() else {
                    continue;
                };
                for (j, v) in &pivot_row {
                    let e = row.entry(*j).or_insert_with(Scalar::zero);
                    *e -= &f * v;
                    if e.is_zero() {
                        row.remove(j);
                    }
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rows.truncate(rank);
        (rows, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact basis of the right null space, one vector per free column.
    ///
    /// Each vector has a 1 in its free column, zeros in the other free columns,
    /// and the negated reduced-echelon entries in the pivot columns.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let (rows, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (row, &p) in rows.iter().zip(&pivots) {
                    if let Some(a) = row.get(&f) {
                        v[p] = -a;
                    }
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::scalar::{ratio, scalar};
    use proptest::prelude::*;

    fn dense(rows: &[&[i64]]) -> Matrix {
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| scalar(x)).collect())
            .collect();
        Matrix::from_dense(&rows).unwrap()
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let m = dense(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(m.kernel_basis().is_empty());
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let m = Matrix::new(2, 3);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 3);
        assert_eq!(k[1], vec![scalar(0), scalar(1), scalar(0)]);
    }

    #[test]
    fn rank_one_two_by_two() {
        let m = dense(&[&[1, 1], &[2, 2]]);
        assert_eq!(m.kernel_basis(), vec![vec![scalar(-1), scalar(1)]]);
    }

    #[test]
    fn rational_pivots() {
        let mut m = Matrix::new(2, 3);
        m.set(0, 0, ratio(1, 2)).unwrap();
        m.set(0, 2, ratio(1, 3)).unwrap();
        m.set(1, 1, scalar(3)).unwrap();
        m.set(1, 2, scalar(-1)).unwrap();
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![ratio(-2, 3), ratio(1, 3), scalar(1)]]);
    }

    #[test]
    fn out_of_range_rejected() {
        let mut m = Matrix::new(2, 2);
        assert!(m.set(2, 0, scalar(1)).is_err());
        m.set(0, 0, scalar(0)).unwrap();
        assert_eq!(m.nonzeros(), 0);
    }

    proptest! {
        #[test]
        fn kernel_is_annihilated_and_rank_nullity(
            rows in 1usize..5, cols in 1usize..6,
            vals in prop::collection::vec(-2i64..3, 30)
        ) {
            let mut m = Matrix::new(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, scalar(vals[i * cols + j])).unwrap();
                }
            }
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.len(), cols);
            for v in &k {
                prop_assert!(m.mul_vector(v).iter().all(|x| x.is_zero()));
            }
        }
    }
}
