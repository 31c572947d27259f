//! Dense matrices over a [`Field`]: reduced echelon forms, inverses, kernels,
//! determinants, and the structural predicates used by matrix-product code
//! theory (full row rank, non-singular by columns, quasi-orthogonality, and
//! the inverse-transpose scalar relation).
//!
//! Everything here is exact arithmetic on tiny matrices; there is no pivoting
//! strategy beyond "first nonzero entry in column order".

use crate::error::{Error, Result};
use crate::gf::{Felt, Field, Inner};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Felt>,
}

impl Mat {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Felt>>) -> Result<Mat> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::LengthMismatch("ragged matrix rows".into()));
        }
        Ok(Mat {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Build from integer entries via the prime subfield.
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Mat {
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| field.elem_int(v)))
            .collect();
        Mat {
            rows: rows.len(),
            cols: rows.first().map_or(0, |r| r.len()),
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Felt {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Felt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Felt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Felt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self, field: &Field) -> Mat {
        let mut out = Mat::zeros(field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn mul(&self, field: &Field, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Mat::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = field.add(out.get(i, j), field.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.cols && self.rows != 0 && other.rows != 0 {
            return Err(Error::LengthMismatch("vstack column mismatch".into()));
        }
        let cols = if self.rows == 0 { other.cols } else { self.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Mat {
            rows: self.rows + other.rows,
            cols,
            data,
        })
    }

    /// Columns selected by `idx`, in order, from the first `t` rows.
    fn minor(&self, field: &Field, t: usize, idx: &[usize]) -> Mat {
        let mut out = Mat::zeros(field, t, idx.len());
        for i in 0..t {
            for (jj, &j) in idx.iter().enumerate() {
                out.set(i, jj, self.get(i, j));
            }
        }
        out
    }

    /// Reduced row echelon form, rank and pivot columns. Row space preserved.
    pub fn rref(&self, field: &Field) -> (Mat, usize, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let tmp = m.get(r, j);
                    m.set(r, j, m.get(pr, j));
                    m.set(pr, j, tmp);
                }
            }
            let inv = field.inv(m.get(r, c)).expect("pivot nonzero");
            for j in 0..m.cols {
                m.set(r, j, field.mul(m.get(r, j), inv));
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c);
                    for j in 0..m.cols {
                        let v = field.sub(m.get(i, j), field.mul(f, m.get(r, j)));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, r, pivots)
    }

    pub fn rank(&self, field: &Field) -> usize {
        self.rref(field).1
    }

    /// Reduce a row vector against this matrix, which must be in RREF.
    /// Returns the residue; zero residue means the row lies in the row space.
    pub fn reduce_row(&self, field: &Field, row: &[Felt]) -> Vec<Felt> {
        assert_eq!(row.len(), self.cols);
        let mut v = row.to_vec();
        for i in 0..self.rows {
            let Some(c) = (0..self.cols).find(|&j| !self.get(i, j).is_zero()) else {
                continue;
            };
            let f = v[c];
            if !f.is_zero() {
                for (j, slot) in v.iter_mut().enumerate() {
                    *slot = field.sub(*slot, field.mul(f, self.get(i, j)));
                }
            }
        }
        v
    }

    pub fn det(&self, field: &Field) -> Result<Felt> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = field.one();
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(field.zero());
            };
            if pr != c {
                for j in 0..n {
                    let tmp = m.get(c, j);
                    m.set(c, j, m.get(pr, j));
                    m.set(pr, j, tmp);
                }
                det = field.neg(det);
            }
            let pivot = m.get(c, c);
            det = field.mul(det, pivot);
            let inv = field.inv(pivot)?;
            for i in c + 1..n {
                let f = field.mul(m.get(i, c), inv);
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = field.sub(m.get(i, j), field.mul(f, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self, field: &Field) -> Result<Mat> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        // [A | I] -> RREF -> [I | A^{-1}]
        let mut aug = Mat::zeros(field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, field.one());
        }
        let (r, rank, pivots) = aug.rref(field);
        if rank != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Err(Error::Singular);
        }
        let mut out = Mat::zeros(field, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j));
            }
        }
        Ok(out)
    }

    /// Basis of the right null space `{x : self * x = 0}`, one vector per row.
    pub fn kernel_basis(&self, field: &Field) -> Mat {
        let (r, rank, pivots) = self.rref(field);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zeros(field, self.cols - rank, self.cols);
        for (bi, &fc) in free.iter().enumerate() {
            out.set(bi, fc, field.one());
            for (ri, &pc) in pivots.iter().enumerate() {
                out.set(bi, pc, field.neg(r.get(ri, fc)));
            }
        }
        out
    }

    /// Full row rank predicate. Requires rows <= cols.
    pub fn is_full_row_rank(&self, field: &Field) -> Result<bool> {
        if self.rows > self.cols {
            return Err(Error::RowsExceedCols {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rank(field) == self.rows)
    }

    /// Non-singular by columns: every t x t minor taken from the first t rows
    /// and any t columns is nonsingular, for all 1 <= t <= rows.
    pub fn is_non_singular_by_columns(&self, field: &Field) -> Result<bool> {
        if self.rows > self.cols {
            return Err(Error::RowsExceedCols {
                rows: self.rows,
                cols: self.cols,
            });
        }
        for t in 1..=self.rows {
            let mut idx: Vec<usize> = (0..t).collect();
            loop {
                let minor = self.minor(field, t, &idx);
                if minor.det(field)?.is_zero() {
                    return Ok(false);
                }
                if !next_combination(&mut idx, self.cols) {
                    break;
                }
            }
        }
        Ok(true)
    }

    /// Entrywise `a -> a^l`; errors when the extension degree is odd.
    pub fn entrywise_frobenius(&self, field: &Field) -> Result<Mat> {
        let data: Result<Vec<Felt>> = self.data.iter().map(|&c| field.frobenius_l(c)).collect();
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: data?,
        })
    }

    /// If `A A^T` (Euclidean) or `A^(l) A^T` (Hermitian) is diagonal with all
    /// diagonal entries nonzero, return that diagonal.
    pub fn quasi_orthogonal_diagonal(
        &self,
        field: &Field,
        inner: Inner,
    ) -> Result<Option<Vec<Felt>>> {
        let left = match inner {
            Inner::Euclidean => self.clone(),
            Inner::Hermitian => self.entrywise_frobenius(field)?,
        };
        let prod = left.mul(field, &self.transpose(field));
        let mut diag = Vec::with_capacity(self.rows);
        for i in 0..prod.rows() {
            for j in 0..prod.cols() {
                let v = prod.get(i, j);
                if i == j {
                    if v.is_zero() {
                        return Ok(None);
                    }
                    diag.push(v);
                } else if !v.is_zero() {
                    return Ok(None);
                }
            }
        }
        Ok(Some(diag))
    }

    /// The scalar `a` with `(A^{-1})^T = a A` (Euclidean) or
    /// `((A^(l))^{-1})^T = a A` (Hermitian), when such a scalar exists.
    pub fn inverse_transpose_scalar(&self, field: &Field, inner: Inner) -> Result<Option<Felt>> {
        let base = match inner {
            Inner::Euclidean => self.clone(),
            Inner::Hermitian => self.entrywise_frobenius(field)?,
        };
        let t = base.inverse(field)?.transpose(field);
        // find first nonzero entry of A to fix the candidate scalar
        let Some(pos) = (0..self.data.len()).find(|&k| !self.data[k].is_zero()) else {
            return Ok(None);
        };
        let a = field.div(t.data[pos], self.data[pos])?;
        let matches = self
            .data
            .iter()
            .zip(&t.data)
            .all(|(&orig, &ti)| field.mul(a, orig) == ti);
        Ok(if matches && !a.is_zero() { Some(a) } else { None })
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self.get(i, j).is_zero()))
    }

    pub fn to_strings(&self, field: &Field) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&c| field.elem_to_string(c)).collect())
            .collect()
    }
}

/// Advance `idx` to the next t-combination of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let t = idx.len();
    let mut i = t;
    while i > 0 {
        i -= 1;
        if idx[i] < n - t + i {
            idx[i] += 1;
            for k in i + 1..t {
                idx[k] = idx[k - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Left multiplication of a row vector by a matrix: `v * M`.
pub fn vec_mat_mul(field: &Field, v: &[Felt], m: &Mat) -> Vec<Felt> {
    assert_eq!(v.len(), m.rows());
    let mut out = vec![field.zero(); m.cols()];
    for (i, &vi) in v.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        for (j, slot) in out.iter_mut().enumerate() {
            *slot = field.add(*slot, field.mul(vi, m.get(i, j)));
        }
    }
    out
}

pub fn weight(v: &[Felt]) -> usize {
    v.iter().filter(|c| !c.is_zero()).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f5() -> Field {
        Field::new(5, 1).unwrap()
    }

    fn random_mat(field: &Field, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Mat {
        let mut m = Mat::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, field.elem_at(rng.gen_range(0..field.q())));
            }
        }
        m
    }

    #[test]
    fn rref_rank_examples() {
        let f = f5();
        assert_eq!(Mat::identity(&f, 3).rank(&f), 3);
        let m = Mat::from_ints(&f, &[&[1, 1], &[2, 2]]);
        assert_eq!(m.rank(&f), 1);
    }

    #[test]
    fn rref_preserves_row_space() {
        let f = f5();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let m = random_mat(&f, rng.gen_range(1..5), rng.gen_range(1..7), &mut rng);
            let (r, rank, pivots) = m.rref(&f);
            assert_eq!(rank, pivots.len());
            for i in 0..m.rows() {
                let residue = r.reduce_row(&f, m.row(i));
                assert!(residue.iter().all(|c| c.is_zero()));
            }
        }
    }

    #[test]
    fn inverse_examples() {
        let f = f5();
        let id = Mat::identity(&f, 4);
        assert_eq!(id.inverse(&f).unwrap(), id);

        // (A^{-1})^T = 3 A for A = [[1,1],[1,4]]: 3 = inv(2) in F_5
        let a = Mat::from_ints(&f, &[&[1, 1], &[1, 4]]);
        let inv_t = a.inverse(&f).unwrap().transpose(&f);
        let mut scaled = a.clone();
        for i in 0..2 {
            for j in 0..2 {
                scaled.set(i, j, f.mul(f.elem_int(3), a.get(i, j)));
            }
        }
        assert_eq!(inv_t, scaled);
        assert_eq!(
            a.inverse_transpose_scalar(&f, Inner::Euclidean).unwrap(),
            Some(f.elem_int(3))
        );

        let f2 = Field::new(2, 1).unwrap();
        let u = Mat::from_ints(&f2, &[&[1, 1], &[0, 1]]);
        assert_eq!(u.mul(&f2, &u), Mat::identity(&f2, 2));
        assert_eq!(u.inverse(&f2).unwrap(), u);
        assert_eq!(u.inverse_transpose_scalar(&f2, Inner::Euclidean).unwrap(), None);

        let sing = Mat::from_ints(&f, &[&[1, 1], &[2, 2]]);
        assert!(sing.inverse(&f).is_err());
        assert!(Mat::from_ints(&f, &[&[1, 1]]).inverse(&f).is_err());
    }

    #[test]
    fn inverse_round_trip_random() {
        let f = f5();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut done = 0;
        while done < 30 {
            let n = rng.gen_range(1..5);
            let m = random_mat(&f, n, n, &mut rng);
            if m.rank(&f) < n {
                continue;
            }
            let inv = m.inverse(&f).unwrap();
            assert_eq!(m.mul(&f, &inv), Mat::identity(&f, n));
            assert_eq!(inv.mul(&f, &m), Mat::identity(&f, n));
            done += 1;
        }
    }

    #[test]
    fn kernel_examples() {
        let f = f5();
        let id = Mat::identity(&f, 4);
        assert_eq!(id.kernel_basis(&f).rows(), 0);

        let ones = Mat::from_ints(&f, &[&[1, 1, 1, 1]]);
        let k = ones.kernel_basis(&f);
        assert_eq!(k.rows(), 3);
        for i in 0..3 {
            let s = k.row(i).iter().fold(f.zero(), |acc, &c| f.add(acc, c));
            assert!(s.is_zero());
        }

        // rank-nullity on random matrices, and M * kernel row = 0
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..40 {
            let m = random_mat(&f, rng.gen_range(1..5), rng.gen_range(1..8), &mut rng);
            let k = m.kernel_basis(&f);
            assert_eq!(m.rank(&f) + k.rows(), m.cols());
            for i in 0..k.rows() {
                let prod = m.mul(&f, &Mat::from_rows(vec![k.row(i).to_vec()]).unwrap().transpose(&f));
                assert!((0..prod.rows()).all(|r| prod.get(r, 0).is_zero()));
            }
            assert_eq!(k.rank(&f), k.rows(), "kernel basis rows independent");
        }
    }

    #[test]
    fn frr_and_nsc_predicates() {
        let f = f5();
        assert!(Mat::from_ints(&f, &[&[1, 1], &[1, 4]]).is_full_row_rank(&f).unwrap());
        assert!(!Mat::from_ints(&f, &[&[1, 1], &[2, 2]]).is_full_row_rank(&f).unwrap());
        assert!(Mat::from_ints(&f, &[&[1, 1, 1, 1]]).is_full_row_rank(&f).unwrap());
        assert!(Mat::from_ints(&f, &[&[1], &[2]]).is_full_row_rank(&f).is_err());

        let f2 = Field::new(2, 1).unwrap();
        assert!(Mat::from_ints(&f2, &[&[1, 1], &[0, 1]])
            .is_non_singular_by_columns(&f2)
            .unwrap());
        // identity fails NSC: the first row contains a zero 1x1 minor
        assert!(!Mat::identity(&f, 2).is_non_singular_by_columns(&f).unwrap());
        // character-type matrix fails NSC: columns 1,2 of the first two rows
        let ch = Mat::from_ints(
            &f,
            &[&[1, 1, 1, 1], &[1, 1, -1, -1], &[1, -1, 1, -1], &[1, -1, -1, 1]],
        );
        assert!(!ch.is_non_singular_by_columns(&f).unwrap());

        // NSC implies FRR on random matrices that happen to be NSC
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..200 {
            let m = random_mat(&f, 2, rng.gen_range(2..5), &mut rng);
            if m.is_non_singular_by_columns(&f).unwrap() {
                assert!(m.is_full_row_rank(&f).unwrap());
            }
        }
    }

    #[test]
    fn quasi_orthogonal_examples() {
        let f = f5();
        assert_eq!(
            Mat::identity(&f, 3)
                .quasi_orthogonal_diagonal(&f, Inner::Euclidean)
                .unwrap(),
            Some(vec![f.one(); 3])
        );
        let a = Mat::from_ints(&f, &[&[1, 1], &[1, 4]]);
        assert_eq!(
            a.quasi_orthogonal_diagonal(&f, Inner::Euclidean).unwrap(),
            Some(vec![f.elem_int(2), f.elem_int(2)])
        );
        let f2 = Field::new(2, 1).unwrap();
        let u = Mat::from_ints(&f2, &[&[1, 1], &[0, 1]]);
        assert_eq!(u.quasi_orthogonal_diagonal(&f2, Inner::Euclidean).unwrap(), None);
    }

    #[test]
    fn entrywise_frobenius_examples() {
        let f4 = Field::new(2, 2).unwrap();
        let w = f4.primitive();
        let m = Mat::from_rows(vec![vec![w]]).unwrap();
        let fr = m.entrywise_frobenius(&f4).unwrap();
        assert_eq!(fr.get(0, 0), f4.add(w, f4.one()));
        assert_eq!(fr.entrywise_frobenius(&f4).unwrap(), m);

        // prime-subfield entries are fixed
        let sub = Mat::from_ints(&f4, &[&[1, 0], &[1, 1]]);
        assert_eq!(sub.entrywise_frobenius(&f4).unwrap(), sub);

        let f5 = f5();
        assert!(Mat::identity(&f5, 2).entrywise_frobenius(&f5).is_err());
    }

    #[test]
    fn hermitian_quasi_orthogonal() {
        let f4 = Field::new(2, 2).unwrap();
        // prime-subfield matrix: Hermitian check coincides with Euclidean
        let m = Mat::from_ints(&f4, &[&[1, 1], &[1, 1]]);
        assert_eq!(m.quasi_orthogonal_diagonal(&f4, Inner::Hermitian).unwrap(), None);
        let id = Mat::identity(&f4, 2);
        assert_eq!(
            id.quasi_orthogonal_diagonal(&f4, Inner::Hermitian).unwrap(),
            Some(vec![f4.one(); 2])
        );
        // odd extension degree errors
        let f5 = f5();
        assert!(Mat::identity(&f5, 2)
            .quasi_orthogonal_diagonal(&f5, Inner::Hermitian)
            .is_err());
    }
}
