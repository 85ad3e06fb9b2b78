//! Dense linear algebra over `Q`.
//!
//! Every routine is exact. Matrices are small (a few hundred rows at most) in
//! this crate, so a plain row-major `Vec` with Gauss–Jordan elimination is
//! enough.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

/// A `rows × cols` matrix of rationals, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<_> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has length {} but the matrix has {cols} columns",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Ok(RationalMatrix {
            rows: nrows,
            cols,
            entries,
        })
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column {j} has length {} but the matrix has {rows} rows",
                    col.len()
                )));
            }
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    /// Convenience constructor from small integers (mostly for tests).
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| crate::rational::int(x)).collect())
            .collect();
        Self::from_rows(cols, rows).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(r, c)] += prod;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Stacks `other` to the right of `self`.
    pub fn hstack(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..other.cols {
                out[(r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }
}

impl core::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;

    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.entries[r * self.cols + c]
    }
}

impl core::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.entries[r * self.cols + c]
    }
}

/// A list of linearly independent vectors in `Q^ambient_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<Vec<Rational>>,
}

impl SubspaceBasis {
    pub fn empty(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: Vec::new(),
        }
    }

    /// Wraps `vectors`, checking lengths and linear independence.
    pub fn new(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in ambient dimension {ambient_dim}",
                v.len()
            )));
        }
        let m = RationalMatrix::from_rows(ambient_dim, vectors.clone())?;
        if m.rank() != vectors.len() {
            return Err(Error::DimensionMismatch(
                "subspace basis vectors are linearly dependent".into(),
            ));
        }
        Ok(SubspaceBasis {
            ambient_dim,
            vectors,
        })
    }

    /// Basis of the span of arbitrary vectors (the nonzero rows of their RREF).
    pub fn span_of(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        let m = RationalMatrix::from_rows(ambient_dim, vectors.to_vec())?;
        let (r, pivots) = rref(&m);
        Ok(SubspaceBasis {
            ambient_dim,
            vectors: (0..pivots.len()).map(|i| r.row(i).to_vec()).collect(),
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<Vec<Rational>> {
        self.vectors
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        let mut rows = self.vectors.clone();
        rows.push(v.to_vec());
        let m = RationalMatrix::from_rows(self.ambient_dim, rows).expect("lengths checked");
        m.rank() == self.vectors.len()
    }
}

/// Reduced row echelon form together with the (strictly increasing) pivot
/// columns.
pub fn rref(m: &RationalMatrix) -> (RationalMatrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut lead = 0;
    for c in 0..a.cols {
        if lead == a.rows {
            break;
        }
        let Some(p) = (lead..a.rows).find(|&r| !a[(r, c)].is_zero()) else {
            continue;
        };
        if p != lead {
            for k in 0..a.cols {
                a.entries.swap(p * a.cols + k, lead * a.cols + k);
            }
        }
        let inv = a[(lead, c)].recip();
        for k in c..a.cols {
            if !a[(lead, k)].is_zero() {
                a[(lead, k)] *= &inv;
            }
        }
        let pivot_row: Vec<(usize, Rational)> = (c..a.cols)
            .filter(|&k| !a[(lead, k)].is_zero())
            .map(|k| (k, a[(lead, k)].clone()))
            .collect();
        for r in 0..a.rows {
            if r == lead || a[(r, c)].is_zero() {
                continue;
            }
            let factor = a[(r, c)].clone();
            for (k, x) in &pivot_row {
                let delta = &factor * x;
                a[(r, *k)] -= delta;
            }
        }
        pivots.push(c);
        lead += 1;
    }
    (a, pivots)
}

/// Basis of `{v : m·v = 0}`, one vector per free column, read off the RREF.
pub fn kernel_basis(m: &RationalMatrix) -> SubspaceBasis {
    let (r, pivots) = rref(m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); m.cols];
            v[free] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, free)].clone();
            }
            v
        })
        .collect();
    SubspaceBasis {
        ambient_dim: m.cols,
        vectors,
    }
}

/// Some `x` with `m·x = b`, or `None` when `b` is outside the column space.
pub fn solve(m: &RationalMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if b.len() != m.rows {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} against {} rows",
            b.len(),
            m.rows
        )));
    }
    let rhs = RationalMatrix::from_columns(m.rows, &[b.to_vec()])?;
    let (r, pivots) = rref(&m.hstack(&rhs)?);
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); m.cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r[(i, m.cols)].clone();
    }
    Ok(Some(x))
}

/// Standard basis vectors at the non-pivot coordinates of `sub`, which
/// together with `sub` span the ambient space.
pub fn complement_basis(sub: &SubspaceBasis) -> SubspaceBasis {
    let n = sub.ambient_dim;
    let m = RationalMatrix::from_rows(n, sub.vectors.clone()).expect("lengths checked");
    let (_, pivots) = rref(&m);
    let vectors = (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|c| {
            let mut v = vec![Rational::zero(); n];
            v[c] = Rational::one();
            v
        })
        .collect();
    SubspaceBasis {
        ambient_dim: n,
        vectors,
    }
}

/// Splits `candidates` into those that extend the span of `base`, in order.
/// Returns the indices of the candidates kept.
pub fn extend_independent(
    ambient_dim: usize,
    base: &[Vec<Rational>],
    candidates: &[Vec<Rational>],
) -> Vec<usize> {
    let mut rows: Vec<Vec<Rational>> = base.to_vec();
    let mut rank = RationalMatrix::from_rows(ambient_dim, rows.clone())
        .expect("lengths checked")
        .rank();
    let mut kept = Vec::new();
    for (i, v) in candidates.iter().enumerate() {
        rows.push(v.clone());
        let r = RationalMatrix::from_rows(ambient_dim, rows.clone())
            .expect("lengths checked")
            .rank();
        if r > rank {
            rank = r;
            kept.push(i);
        } else {
            rows.pop();
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_i64(rows)
    }

    #[test]
    fn rref_examples() {
        let id = RationalMatrix::identity(2);
        assert_eq!(rref(&id), (id.clone(), vec![0, 1]));
        assert_eq!(rref(&m(&[&[1, 2], &[2, 4]])), (m(&[&[1, 2], &[0, 0]]), vec![0]));
        assert_eq!(rref(&m(&[&[0, 1], &[1, 0]])), (id, vec![0, 1]));
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&RationalMatrix::identity(3)).is_empty());
        assert_eq!(kernel_basis(&RationalMatrix::zeros(2, 3)).dim(), 3);
        let k = kernel_basis(&m(&[&[1, 1, 0]]));
        assert_eq!(k.dim(), 2);
        for v in k.vectors() {
            assert_eq!(m(&[&[1, 1, 0]]).mul_vec(v).unwrap(), vec![int(0)]);
        }
    }

    #[test]
    fn solve_examples() {
        let b = vec![int(3), int(-5)];
        assert_eq!(solve(&RationalMatrix::identity(2), &b).unwrap(), Some(b));
        assert_eq!(solve(&m(&[&[1, 2], &[2, 4]]), &[int(1), int(3)]).unwrap(), None);
        assert_eq!(solve(&m(&[&[2]]), &[int(1)]).unwrap(), Some(vec![ratio(1, 2)]));
        assert!(solve(&m(&[&[2]]), &[int(1), int(1)]).is_err());
    }

    #[test]
    fn complement_examples() {
        let full = SubspaceBasis::new(2, vec![vec![int(1), int(0)], vec![int(0), int(1)]]).unwrap();
        assert!(complement_basis(&full).is_empty());
        assert_eq!(complement_basis(&SubspaceBasis::empty(2)).dim(), 2);
        let diag = SubspaceBasis::new(2, vec![vec![int(1), int(1)]]).unwrap();
        let c = complement_basis(&diag);
        assert_eq!(c.dim(), 1);
        let both = SubspaceBasis::new(2, [diag.vectors(), c.vectors()].concat());
        assert!(both.is_ok());
    }

    #[test]
    fn dependent_basis_rejected() {
        assert!(SubspaceBasis::new(2, vec![vec![int(1), int(2)], vec![int(2), int(4)]]).is_err());
    }

    fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |xs| {
                let rows = xs.chunks(c).map(|ch| ch.iter().map(|&x| int(x)).collect()).collect();
                RationalMatrix::from_rows(c, rows).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent_and_kernel_is_annihilated(a in small_matrix()) {
            let (r, pivots) = rref(&a);
            prop_assert_eq!(rref(&r), (r.clone(), pivots.clone()));
            prop_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
            let k = kernel_basis(&a);
            prop_assert_eq!(k.dim() + pivots.len(), a.cols());
            for v in k.vectors() {
                prop_assert!(a.mul_vec(v).unwrap().iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn solve_recovers_images(a in small_matrix(), seed in proptest::collection::vec(-4i64..5, 4)) {
            let v: Vec<Rational> = (0..a.cols()).map(|i| int(seed[i % seed.len()])).collect();
            let b = a.mul_vec(&v).unwrap();
            let w = solve(&a, &b).unwrap().expect("b is in the column space");
            prop_assert_eq!(a.mul_vec(&w).unwrap(), b);
        }

        #[test]
        fn complement_spans(a in small_matrix()) {
            let sub = SubspaceBasis::span_of(a.cols(), &(0..a.rows()).map(|r| a.row(r).to_vec()).collect::<Vec<_>>()).unwrap();
            let c = complement_basis(&sub);
            prop_assert_eq!(sub.dim() + c.dim(), a.cols());
            let all = [sub.vectors(), c.vectors()].concat();
            prop_assert_eq!(RationalMatrix::from_rows(a.cols(), all).unwrap().rank(), a.cols());
        }
    }
}
