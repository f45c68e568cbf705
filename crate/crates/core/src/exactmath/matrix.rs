use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{clear_denominators, rational_to_string, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix over ℚ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let n = rows.len();
        Self::new(n, cols, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect();
        Self::from_rows(data).expect("ragged literal matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::Dimension("vstack with different column counts".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Self::new(self.rows + other.rows, self.cols, entries)
    }

    /// Integer rows obtained by clearing denominators row by row. Row scaling
    /// preserves rank and kernel; the returned multipliers let `det` undo it.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let rows = (0..self.rows)
            .map(|i| {
                let (ints, l) = clear_denominators(self.row(i));
                scale *= l;
                ints
            })
            .collect();
        (rows, scale)
    }

    /// Rank over ℚ by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let (mut a, _) = self.integer_rows();
        bareiss_echelon(&mut a, self.cols).0
    }

    /// Exact determinant by Bareiss elimination.
    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let (mut a, scale) = self.integer_rows();
        let (rank, swaps) = bareiss_echelon(&mut a, n);
        if rank < n {
            return Ok(Rational::zero());
        }
        let mut d = a[n - 1][n - 1].clone();
        if swaps % 2 == 1 {
            d = -d;
        }
        Ok(Rational::new(d, scale))
    }

    /// Basis of the right kernel. Each vector has first nonzero coordinate 1;
    /// the basis is empty iff the matrix has full column rank.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (rref, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(r);
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| is_pivot[c].is_none()) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -rref[(r, free)].clone();
            }
            normalize_leading(&mut v);
            basis.push(v);
        }
        basis
    }

    /// Reduced row echelon form over ℚ and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(p, r);
            let inv = a[(r, c)].recip();
            for j in c..self.cols {
                let x = &a[(r, j)] * &inv;
                a[(r, j)] = x;
            }
            for i in 0..self.rows {
                if i == r || a[(i, c)].is_zero() {
                    continue;
                }
                let f = a[(i, c)].clone();
                for j in c..self.cols {
                    if a[(r, j)].is_zero() {
                        continue;
                    }
                    let x = &f * &a[(r, j)];
                    a[(i, j)] -= x;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for c in 0..self.cols {
                self.entries.swap(i * self.cols + c, j * self.cols + c);
            }
        }
    }
}

/// Scales `v` so its first nonzero coordinate is 1.
pub(crate) fn normalize_leading(v: &mut [Rational]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        if !lead.is_one() {
            for x in v.iter_mut() {
                *x /= &lead;
            }
        }
    }
}

/// In-place fraction-free row echelon form. Returns the rank and the number
/// of row swaps. After step k every entry below the pivots is a
/// (k+1)-minor of the input, so the division by the previous pivot is exact.
fn bareiss_echelon(a: &mut [Vec<BigInt>], cols: usize) -> (usize, usize) {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut swaps = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            swaps += 1;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    (r, swaps)
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(rational_to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zeros(2, 2).rank(), 0);
        assert_eq!(Matrix::identity(3).rank(), 3);
        assert_eq!(Matrix::from_i64(&[&[1, 0], &[0, 1], &[0, 0]]).rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::from_i64(&[&[1, 1]]).kernel(), vec![vec![q(1), q(-1)]]);
        assert!(Matrix::identity(2).kernel().is_empty());
        let k = Matrix::from_i64(&[&[1, 2], &[2, 4]]).kernel();
        assert_eq!(k.len(), 1);
        // proportional to (2, -1)
        assert_eq!(&k[0][0] * q(-1), &k[0][1] * q(2));
    }

    #[test]
    fn det_examples() {
        assert_eq!(Matrix::from_i64(&[&[1, 2], &[3, 4]]).det().unwrap(), q(-2));
        assert_eq!(Matrix::from_i64(&[&[2, 0], &[0, 3]]).det().unwrap(), q(6));
        assert_eq!(Matrix::identity(3).det().unwrap(), q(1));
        assert!(matches!(Matrix::zeros(2, 3).det(), Err(Error::Dimension(_))));
    }

    #[test]
    fn det_with_fractions_and_swaps() {
        let m = Matrix::from_rows(vec![
            vec![q(0), Rational::new(1.into(), 2.into())],
            vec![Rational::new(2.into(), 3.into()), q(5)],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), Rational::new((-1).into(), 3.into()));
    }

    #[test]
    fn entry_count_checked() {
        assert!(Matrix::new(2, 2, vec![q(1)]).is_err());
    }

    /// Cofactor expansion along the first row; independent of elimination.
    fn cofactor_det(m: &Matrix) -> Rational {
        let n = m.rows();
        if n == 0 {
            return q(1);
        }
        let mut total = q(0);
        for j in 0..n {
            if m[(0, j)].is_zero() {
                continue;
            }
            let minor: Vec<Rational> = (1..n)
                .flat_map(|i| (0..n).filter(move |&c| c != j).map(move |c| (i, c)))
                .map(|idx| m[idx].clone())
                .collect();
            let sub = Matrix::new(n - 1, n - 1, minor).unwrap();
            let term = &m[(0, j)] * cofactor_det(&sub);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    fn small_matrix(max: usize) -> impl Strategy<Value = Matrix> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-2i64..=2, r * c)
                .prop_map(move |v| Matrix::new(r, c, v.into_iter().map(q).collect()).unwrap())
        })
    }

    fn small_square(max: usize) -> impl Strategy<Value = Matrix> {
        (1..=max).prop_flat_map(|n| {
            proptest::collection::vec(-2i64..=2, n * n)
                .prop_map(move |v| Matrix::new(n, n, v.into_iter().map(q).collect()).unwrap())
        })
    }

    proptest! {
        #[test]
        fn det_matches_cofactor_expansion(m in small_square(4)) {
            prop_assert_eq!(m.det().unwrap(), cofactor_det(&m));
        }

        #[test]
        fn det_nonzero_iff_full_rank(m in small_square(4)) {
            prop_assert_eq!(!m.det().unwrap().is_zero(), m.rank() == m.cols());
        }

        #[test]
        fn rank_nullity(m in small_matrix(5)) {
            let k = m.kernel();
            prop_assert_eq!(m.rank() + k.len(), m.cols());
            for v in &k {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
                let lead = v.iter().find(|x| !x.is_zero()).unwrap();
                prop_assert!(lead.is_one());
            }
        }
    }
}
