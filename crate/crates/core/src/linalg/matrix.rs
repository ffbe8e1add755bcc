use num_traits::PrimInt;

use super::field::Field;
use super::LinalgError;

/// Dense row-major matrix over some field's element type.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, field.zero())
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// All rows must have length `cols`. An empty row list gives a `0 x cols` matrix.
    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::RaggedRow {
                    row: i,
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Result<&E, LinalgError> {
        self.check(r, c)?;
        Ok(&self.data[r * self.cols + c])
    }

    pub fn set(&mut self, r: usize, c: usize, value: E) -> Result<(), LinalgError> {
        self.check(r, c)?;
        self.data[r * self.cols + c] = value;
        Ok(())
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.data[r * self.cols + c].clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    fn check(&self, r: usize, c: usize) -> Result<(), LinalgError> {
        if r >= self.rows || c >= self.cols {
            return Err(LinalgError::OutOfRange {
                row: r,
                col: c,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }
}

/// Row-reduces `rows` in place (each of length `cols`) to reduced echelon form.
/// Pivots are the first nonzero entry in column order. Returns pivot columns.
fn reduce<F: Field + ?Sized>(
    field: &F,
    rows: &mut [Vec<F::Elem>],
    cols: usize,
    full: bool,
) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = field.inv(&rows[rank][col]);
        for x in rows[rank][col..].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let (head, tail) = rows.split_at_mut(rank);
        let (pivot_row, tail) = tail.split_first_mut().expect("pivot row");
        let clear = |row: &mut Vec<F::Elem>| {
            if field.is_zero(&row[col]) {
                return;
            }
            let factor = row[col].clone();
            for (a, b) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                field.sub_mul_assign(a, &factor, b);
            }
        };
        tail.iter_mut().for_each(clear);
        if full {
            head.iter_mut().for_each(clear);
        }
        pivots.push(col);
        rank += 1;
    }
    pivots
}

/// Rank by Gaussian elimination with first-nonzero pivoting.
pub fn generic_rank<F: Field + ?Sized>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut rows = m.row_vecs();
    reduce(field, &mut rows, m.cols(), false).len()
}

/// Rank over `Q` of an integer matrix by fraction-free (Bareiss) elimination,
/// first in `i64`, then in `i128`. `None` if both overflow. After `k` pivots each
/// entry is a `(k+1)`-minor of the input, so every division is exact.
pub fn integer_rank(rows: &[Vec<i64>], cols: usize) -> Option<usize> {
    bareiss_rank::<i64>(rows, cols).or_else(|| bareiss_rank::<i128>(rows, cols))
}

fn bareiss_rank<T: PrimInt + From<i64>>(rows: &[Vec<i64>], cols: usize) -> Option<usize> {
    let mut a: Vec<Vec<T>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| <T as From<i64>>::from(v)).collect())
        .collect();
    let mut rank = 0;
    let mut prev = T::one();
    for col in 0..cols {
        if rank == a.len() {
            break;
        }
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = pivot_row[col];
        for row in tail.iter_mut() {
            let factor = row[col];
            if factor.is_zero() && pivot == prev {
                continue;
            }
            for j in col..cols {
                let v = row[j]
                    .checked_mul(&pivot)?
                    .checked_sub(&factor.checked_mul(&pivot_row[j])?)?;
                row[j] = v / prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

/// Rank of `m` over `field` (bit-packed for `F_2`).
pub fn matrix_rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    field.rank(m)
}

/// Reduced row echelon form and its pivot columns.
pub fn rref<F: Field>(field: &F, m: &Matrix<F::Elem>) -> (Matrix<F::Elem>, Vec<usize>) {
    let mut rows = m.row_vecs();
    let pivots = reduce(field, &mut rows, m.cols(), true);
    let reduced = Matrix::from_rows(m.cols(), rows).expect("rows keep their length");
    (reduced, pivots)
}

/// Basis of `{x : m x = 0}`, one vector per free column, in column order.
pub fn null_space<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let (reduced, pivots) = rref(field, m);
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols())
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![field.zero(); m.cols()];
            v[free] = field.one();
            for (r, &p) in pivots.iter().enumerate() {
                let entry = reduced.get(r, free).expect("in range");
                if !field.is_zero(entry) {
                    v[p] = field.sub(&field.zero(), entry);
                }
            }
            v
        })
        .collect()
}

/// Rank of a list of coordinate vectors of common length `len`.
pub fn span_rank<F: Field>(
    field: &F,
    len: usize,
    vectors: &[Vec<F::Elem>],
) -> Result<usize, LinalgError> {
    let m = Matrix::from_rows(len, vectors.to_vec()).map_err(|e| match e {
        LinalgError::RaggedRow {
            expected, found, ..
        } => LinalgError::LengthMismatch { expected, found },
        other => other,
    })?;
    Ok(matrix_rank(field, &m))
}

/// `dim(span U ∩ span W) = rank U + rank W - rank (U ∪ W)`.
pub fn subspace_intersection_dim<F: Field>(
    field: &F,
    u: &[Vec<F::Elem>],
    w: &[Vec<F::Elem>],
) -> Result<usize, LinalgError> {
    let Some(len) = u.iter().chain(w).map(Vec::len).next() else {
        return Ok(0);
    };
    let ru = span_rank(field, len, u)?;
    let rw = span_rank(field, len, w)?;
    let both: Vec<Vec<F::Elem>> = u.iter().chain(w).cloned().collect();
    let ruw = span_rank(field, len, &both)?;
    Ok(ru + rw - ruw)
}
