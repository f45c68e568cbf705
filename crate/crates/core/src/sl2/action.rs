use num_traits::Zero;

use super::ModuleSpec;
use crate::exactmath::{Matrix, Rational};

/// Matrices of the standard generators `E = x∂/∂y`, `F = y∂/∂x`,
/// `H = x∂/∂x − y∂/∂y` in the monomial basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionTriple {
    pub e: Matrix,
    pub f: Matrix,
    pub h: Matrix,
}

impl ActionTriple {
    /// `[H,E] = 2E`, `[H,F] = −2F`, `[E,F] = H`, exactly.
    pub fn satisfies_sl2_relations(&self) -> bool {
        let two = Rational::from_integer(2.into());
        let comm = |x: &Matrix, y: &Matrix| {
            let xy = x.mul(y).unwrap();
            let yx = y.mul(x).unwrap();
            let entries = xy.entries().iter().zip(yx.entries()).map(|(a, b)| a - b).collect();
            Matrix::new(x.rows(), x.cols(), entries).unwrap()
        };
        let scaled = |m: &Matrix, c: &Rational| {
            Matrix::new(m.rows(), m.cols(), m.entries().iter().map(|x| x * c).collect()).unwrap()
        };
        comm(&self.h, &self.e) == scaled(&self.e, &two)
            && comm(&self.h, &self.f) == scaled(&self.f, &-two.clone())
            && comm(&self.e, &self.f) == self.h
    }

    pub fn generators(&self) -> [&Matrix; 3] {
        [&self.e, &self.f, &self.h]
    }
}

/// Block-diagonal action on `spec`. On `x^{i-k} y^k`:
/// `E` gives `k x^{i-k+1} y^{k-1}`, `F` gives `(i-k) x^{i-k-1} y^{k+1}`,
/// `H` multiplies by the weight `i − 2k`.
pub fn action_matrices(spec: &ModuleSpec) -> ActionTriple {
    let n = spec.dim();
    let (mut e, mut f, mut h) = (Matrix::zeros(n, n), Matrix::zeros(n, n), Matrix::zeros(n, n));
    let int = |x: i64| Rational::from_integer(x.into());
    for block in spec.blocks() {
        let i = block.degree as i64;
        let o = block.offset;
        for k in 0..=block.degree {
            let kk = k as i64;
            if k > 0 {
                e[(o + k - 1, o + k)] = int(kk);
            }
            if k < block.degree {
                f[(o + k + 1, o + k)] = int(i - kk);
            }
            let w = int(i - 2 * kk);
            if !w.is_zero() {
                h[(o + k, o + k)] = w;
            }
        }
    }
    ActionTriple { e, f, h }
}
