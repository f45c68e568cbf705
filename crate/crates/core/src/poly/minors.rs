use std::collections::HashMap;
use std::sync::Arc;

use super::Polynomial;
use crate::error::{Error, Result};
use crate::exactmath::{Matrix, Rational};

/// Dense row-major matrix of polynomials over one variable list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    vars: Arc<[String]>,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(
        rows: usize,
        cols: usize,
        vars: Arc<[String]>,
        entries: Vec<Polynomial>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} polynomial matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if entries.iter().any(|p| p.vars() != &vars) {
            return Err(Error::Input("entries over different variable lists".into()));
        }
        Ok(Self { rows, cols, vars, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        Self { rows: self.cols, cols: self.rows, vars: self.vars.clone(), entries }
    }

    /// Evaluates every entry at `point`.
    pub fn specialize(&self, point: &[Rational]) -> Result<Matrix> {
        let vals = self.entries.iter().map(|p| p.eval(point)).collect::<Result<Vec<_>>>()?;
        Matrix::new(self.rows, self.cols, vals)
    }

    /// Determinant of the submatrix on the given rows and columns, by
    /// Laplace expansion down the columns, memoized on the remaining rows.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        assert_eq!(rows.len(), cols.len());
        let mut memo: HashMap<u64, Polynomial> = HashMap::new();
        let full: u64 = (1u64 << rows.len()) - 1;
        self.laplace(rows, cols, 0, full, &mut memo)
    }

    fn laplace(
        &self,
        rows: &[usize],
        cols: &[usize],
        c: usize,
        mask: u64,
        memo: &mut HashMap<u64, Polynomial>,
    ) -> Polynomial {
        if c == cols.len() {
            return Polynomial::constant(self.vars.clone(), Rational::from_integer(1.into()));
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let mut total = Polynomial::zero(self.vars.clone());
        let mut pos = 0;
        for (r, &row) in rows.iter().enumerate() {
            if mask & (1 << r) == 0 {
                continue;
            }
            let entry = self.get(row, cols[c]);
            if !entry.is_zero() {
                let sub = self.laplace(rows, cols, c + 1, mask & !(1 << r), memo);
                if !sub.is_zero() {
                    let term = entry * &sub;
                    total = if pos % 2 == 0 { &total + &term } else { &total - &term };
                }
            }
            pos += 1;
        }
        memo.insert(mask, total.clone());
        total
    }
}

/// Lexicographically ordered `k`-subsets of `0..n`.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// All `k × k` minors, row subsets outer and column subsets inner, both in
/// lexicographic order.
pub fn minors(m: &PolyMatrix, k: usize) -> Result<Vec<Polynomial>> {
    let small = m.rows.min(m.cols);
    if k == 0 || k > small {
        return Err(Error::Input(format!(
            "minor size {k} for a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    if k > 63 {
        return Err(Error::Input("minor size too large".into()));
    }
    let col_sets = subsets(m.cols, k);
    Ok(subsets(m.rows, k)
        .iter()
        .flat_map(|rs| col_sets.iter().map(move |cs| m.minor(rs, cs)))
        .collect())
}

/// Maximal minors of a matrix of linear forms; `k` must equal
/// `min(rows, cols)`. Each minor is homogeneous of degree `k` or zero.
pub fn maximal_minors(m: &PolyMatrix, k: usize) -> Result<Vec<Polynomial>> {
    if k != m.rows.min(m.cols) {
        return Err(Error::Input(format!(
            "maximal minors of a {}x{} matrix have size {}, not {k}",
            m.rows,
            m.cols,
            m.rows.min(m.cols)
        )));
    }
    if let Some(p) = m.entries.iter().find(|p| !p.is_zero() && p.homogeneous_degree() != Some(1)) {
        return Err(Error::Input(format!("entry {p} is not a linear form")));
    }
    minors(m, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::variables;

    fn mat(vars: &Arc<[String]>, rows: usize, cols: usize, ss: &[&str]) -> PolyMatrix {
        let e = ss.iter().map(|s| Polynomial::parse(vars.clone(), s).unwrap()).collect();
        PolyMatrix::new(rows, cols, vars.clone(), e).unwrap()
    }

    fn strings(v: &[Polynomial]) -> Vec<String> {
        v.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn banded_three_by_two() {
        let a = variables("a", 2);
        let m = mat(&a, 3, 2, &["a0", "0", "a1", "a0", "0", "a1"]);
        // rows {0,1}: a0^2, rows {0,2}: a0*a1, rows {1,2}: a1^2
        assert_eq!(strings(&maximal_minors(&m, 2).unwrap()), vec!["a0^2", "a0*a1", "a1^2"]);
    }

    #[test]
    fn column_vector() {
        let v: Arc<[String]> = Arc::from(vec!["x".to_string(), "y".to_string()]);
        let m = mat(&v, 2, 1, &["x", "y"]);
        assert_eq!(strings(&maximal_minors(&m, 1).unwrap()), vec!["x", "y"]);
    }

    #[test]
    fn square() {
        let a = variables("a", 2);
        let m = mat(&a, 2, 2, &["a0", "a1", "a1", "a0"]);
        assert_eq!(strings(&maximal_minors(&m, 2).unwrap()), vec!["a0^2 - a1^2"]);
    }

    #[test]
    fn size_errors() {
        let a = variables("a", 2);
        let m = mat(&a, 2, 2, &["a0", "a1", "a1", "a0"]);
        assert!(maximal_minors(&m, 3).is_err());
        assert!(maximal_minors(&m, 1).is_err());
        assert!(minors(&m, 0).is_err());
        assert_eq!(minors(&m, 1).unwrap().len(), 4);
        let q = mat(&a, 1, 1, &["a0^2"]);
        assert!(maximal_minors(&q, 1).is_err());
    }

    #[test]
    fn subset_order() {
        assert_eq!(subsets(4, 2), vec![
            vec![0, 1],
            vec![0, 2],
            vec![0, 3],
            vec![1, 2],
            vec![1, 3],
            vec![2, 3]
        ]);
    }

    #[test]
    fn minor_matches_numeric_determinant() {
        let a = variables("a", 2);
        let m = mat(&a, 3, 3, &["a0", "2*a1", "0", "a1", "a0", "a1", "-a0", "0", "3*a0"]);
        let pt = [Rational::from_integer(2.into()), Rational::from_integer((-1).into())];
        let det = m.minor(&[0, 1, 2], &[0, 1, 2]).eval(&pt).unwrap();
        assert_eq!(det, m.specialize(&pt).unwrap().det().unwrap());
    }
}
