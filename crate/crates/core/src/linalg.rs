//! Exact dense linear algebra: rank, kernel, solve, primitive vectors.
//!
//! Elimination is fraction-free (Bareiss): rows are first cleared to
//! integers, and every intermediate entry is then a minor of the input.

use std::fmt;

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("zero vector has no primitive form")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
}

/// Rectangular matrix stored by rows. The column count is explicit so that
/// matrices with no rows still know their width.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: Vec<Vec<T>>,
    cols: usize,
}

impl<T: Scalar> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Result<Self, LinalgError> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(LinalgError::DimensionMismatch { expected: cols, found: bad.len() });
        }
        Ok(Matrix { rows, cols })
    }

    /// Builds from a non-empty list of equal-length rows.
    ///
    /// Panics on ragged input; use [`Matrix::from_rows`] for untrusted data.
    pub fn new(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(rows, cols).expect("ragged matrix")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows: vec![vec![T::zero(); cols]; rows], cols }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = T::one();
        }
        m
    }

    pub fn from_cols(cols: &[Vec<T>], height: usize) -> Self {
        let mut m = Self::zeros(height, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), height, "column length");
            for (i, x) in c.iter().enumerate() {
                m.rows[i][j] = x.clone();
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: T) {
        self.rows[i][j] = x;
    }

    pub fn into_rows(self) -> Vec<Vec<T>> {
        self.rows
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                t.rows[j][i] = x.clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, LinalgError> {
        check_len(v, self.cols)?;
        Ok(self.rows.iter().map(|r| dot(r, v)).collect())
    }

    pub fn mul(&self, other: &Matrix<T>) -> Result<Matrix<T>, LinalgError> {
        if other.nrows() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.nrows() });
        }
        let ot = other.transpose();
        let rows = self
            .rows
            .iter()
            .map(|r| ot.rows.iter().map(|c| dot(r, c)).collect())
            .collect();
        Ok(Matrix { rows, cols: other.cols })
    }

    pub fn push_row(&mut self, row: Vec<T>) -> Result<(), LinalgError> {
        check_len(&row, self.cols)?;
        self.rows.push(row);
        Ok(())
    }

    pub fn stack(&self, other: &Matrix<T>) -> Result<Matrix<T>, LinalgError> {
        if other.cols != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.cols });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Matrix { rows, cols: self.cols })
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn kernel_basis(&self) -> Vec<Vec<T>> {
        kernel_basis(self)
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{}", fmt_vec(r))?;
        }
        Ok(())
    }
}

fn check_len<T>(v: &[T], n: usize) -> Result<(), LinalgError> {
    if v.len() == n {
        Ok(())
    } else {
        Err(LinalgError::DimensionMismatch { expected: n, found: v.len() })
    }
}

pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn scale<T: Scalar>(v: &[T], c: &T) -> Vec<T> {
    v.iter().map(|x| x.clone() * c.clone()).collect()
}

pub fn add<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

/// `acc += c * v`
pub fn axpy<T: Scalar>(acc: &mut [T], c: &T, v: &[T]) {
    for (a, x) in acc.iter_mut().zip(v) {
        *a = a.clone() + c.clone() * x.clone();
    }
}

/// Σ cᵢ·vᵢ over `dim`-dimensional vectors.
pub fn combination<'a, T: Scalar + 'a>(
    dim: usize,
    terms: impl IntoIterator<Item = (&'a T, &'a [T])>,
) -> Vec<T> {
    let mut acc = vec![T::zero(); dim];
    for (c, v) in terms {
        axpy(&mut acc, c, v);
    }
    acc
}

pub fn is_zero_vec<T: Scalar>(v: &[T]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn fmt_vec<T: Scalar>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Coprime integer vector positively proportional to `v`.
pub fn primitive<T: Scalar>(v: &[T]) -> Result<Vec<T>, LinalgError> {
    let f = T::primitive_factor(v).ok_or(LinalgError::ZeroVector)?;
    Ok(scale(v, &f))
}

/// Primitive form of the line through `v`: coprime integers with the first
/// nonzero entry positive. Used for unoriented data (equations, lineality).
pub fn primitive_unoriented<T: Scalar>(v: &[T]) -> Result<Vec<T>, LinalgError> {
    let mut p = primitive(v)?;
    if p.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        p = p.into_iter().map(|x| -x).collect();
    }
    Ok(p)
}

/// Row echelon form by fraction-free elimination. Returns the reduced rows
/// (only the first `pivots.len()` are nonzero) and the pivot columns.
fn echelon<T: Scalar>(m: &Matrix<T>) -> (Vec<Vec<T>>, Vec<usize>) {
    let mut a: Vec<Vec<T>> = m
        .rows
        .iter()
        .map(|r| match T::primitive_factor(r) {
            Some(f) => scale(r, &f),
            None => r.clone(),
        })
        .collect();
    let (nr, nc) = (a.len(), m.cols);
    let mut pivots = Vec::new();
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..nc {
        if r == nr {
            break;
        }
        let Some(p) = (r..nr).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..nr {
            let lead = a[i][c].clone();
            for j in c + 1..nc {
                let v = (a[r][c].clone() * a[i][j].clone() - lead.clone() * a[r][j].clone()) / prev.clone();
                a[i][j] = v;
            }
            a[i][c] = T::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<T: Scalar>(m: &Matrix<T>) -> usize {
    echelon(m).1.len()
}

/// Back substitution on an echelon form, with the free variables given.
fn back_substitute<T: Scalar>(e: &[Vec<T>], pivots: &[usize], x: &mut [T], rhs: Option<&[T]>) {
    for (k, &p) in pivots.iter().enumerate().rev() {
        let row = &e[k];
        let mut s = rhs.map_or_else(T::zero, |b| b[k].clone());
        for j in p + 1..x.len() {
            if !row[j].is_zero() {
                s = s - row[j].clone() * x[j].clone();
            }
        }
        x[p] = s / row[p].clone();
    }
}

/// A basis of the right kernel, each vector in unoriented primitive form.
pub fn kernel_basis<T: Scalar>(m: &Matrix<T>) -> Vec<Vec<T>> {
    let (e, pivots) = echelon(m);
    let n = m.cols;
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![T::zero(); n];
            x[f] = T::one();
            back_substitute(&e, &pivots, &mut x, None);
            primitive_unoriented(&x).expect("kernel vector has a unit entry")
        })
        .collect()
}

/// Some `x` with `m·x = target`, or `None` if the system is inconsistent.
pub fn solve<T: Scalar>(m: &Matrix<T>, target: &[T]) -> Result<Option<Vec<T>>, LinalgError> {
    check_len(target, m.nrows())?;
    let n = m.cols;
    let aug_rows = m
        .rows
        .iter()
        .zip(target)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let aug = Matrix { rows: aug_rows, cols: n + 1 };
    let (e, pivots) = echelon(&aug);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let rhs: Vec<T> = e.iter().take(pivots.len()).map(|r| r[n].clone()).collect();
    let trimmed: Vec<Vec<T>> = e.iter().take(pivots.len()).map(|r| r[..n].to_vec()).collect();
    let mut x = vec![T::zero(); n];
    back_substitute(&trimmed, &pivots, &mut x, Some(&rhs));
    Ok(Some(x))
}

pub fn inverse<T: Scalar>(m: &Matrix<T>) -> Result<Matrix<T>, LinalgError> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(LinalgError::NotSquare { rows: n, cols: m.ncols() });
    }
    if rank(m) < n {
        return Err(LinalgError::Singular);
    }
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![T::zero(); n];
        e[j] = T::one();
        cols.push(solve(m, &e)?.ok_or(LinalgError::Singular)?);
    }
    Ok(Matrix::from_cols(&cols, n))
}

/// Indices of a lexicographically-first maximal independent subset of rows.
pub fn independent_rows<T: Scalar>(rows: &[Vec<T>], dim: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut basis = Matrix::zeros(0, dim);
    for (i, r) in rows.iter().enumerate() {
        let mut trial = basis.clone();
        trial.rows.push(r.clone());
        if rank(&trial) > chosen.len() {
            basis = trial;
            chosen.push(i);
            if chosen.len() == dim {
                break;
            }
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qv, RatMatrix, Rational};
    use num_traits::Zero;

    #[test]
    fn rank_basics() {
        assert_eq!(RatMatrix::identity(2).rank(), 2);
        assert_eq!(RatMatrix::zeros(3, 4).rank(), 0);
        let m = RatMatrix::new(vec![qv(&[1, 2, 3]), qv(&[2, 4, 6]), qv(&[1, 0, 1])]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        assert!(RatMatrix::identity(3).kernel_basis().is_empty());
        let m = RatMatrix::new(vec![qv(&[1, -1])]);
        assert_eq!(m.kernel_basis(), vec![qv(&[1, 1])]);
        let m = RatMatrix::new(vec![qv(&[1, 2, 3]), qv(&[2, 4, 6])]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero_vec(&m.mul_vec(v).unwrap()));
        }
    }

    #[test]
    fn primitive_examples() {
        let v = vec![q(2, 3), q(4, 3)];
        assert_eq!(primitive(&v).unwrap(), qv(&[1, 2]));
        assert_eq!(primitive(&qv(&[5, 12, 6, 2])).unwrap(), qv(&[5, 12, 6, 2]));
        let w = vec![q(-1, 3), Rational::zero(), q(-4, 3)];
        assert_eq!(primitive(&w).unwrap(), qv(&[-1, 0, -4]));
        assert_eq!(primitive_unoriented(&w).unwrap(), qv(&[1, 0, 4]));
        assert_eq!(primitive(&qv(&[0, 0])), Err(LinalgError::ZeroVector));
    }

    #[test]
    fn solve_examples() {
        let id = RatMatrix::identity(3);
        let v = vec![q(1, 2), q(-3, 1), q(0, 1)];
        assert_eq!(solve(&id, &v).unwrap(), Some(v));
        // C = (1,6,5) over columns A=(1,1,0), B=(1,6,0), D=(1,6,20)
        let m = RatMatrix::from_cols(&[qv(&[1, 1, 0]), qv(&[1, 6, 0]), qv(&[1, 6, 20])], 3);
        assert_eq!(solve(&m, &qv(&[1, 6, 5])).unwrap(), Some(vec![q(0, 1), q(3, 4), q(1, 4)]));
        let over = RatMatrix::new(vec![qv(&[1]), qv(&[1])]);
        assert_eq!(solve(&over, &qv(&[1, 2])).unwrap(), None);
        assert!(solve(&over, &qv(&[1])).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = RatMatrix::new(vec![qv(&[2, 1]), qv(&[7, 4])]);
        let inv = inverse(&m).unwrap();
        assert_eq!(m.mul(&inv).unwrap(), RatMatrix::identity(2));
        assert_eq!(inverse(&RatMatrix::zeros(2, 2)), Err(LinalgError::Singular));
    }

    #[test]
    fn generic_over_machine_ratios() {
        use num_rational::Ratio;
        let m: Matrix<Ratio<i64>> = Matrix::new(vec![
            vec![Ratio::from_integer(1), Ratio::from_integer(2)],
            vec![Ratio::from_integer(2), Ratio::from_integer(4)],
        ]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel_basis(), vec![vec![Ratio::from_integer(2), Ratio::from_integer(-1)]]);
    }
}
