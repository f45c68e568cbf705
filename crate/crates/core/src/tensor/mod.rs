//! Dense 3-tensors `φ: A ⊗ B → C*` and the exact nondegeneracy decision.
//!
//! Entries are stored as `T[i][j][s]`, meaning `φ(e_i ⊗ f_j) = Σ_s T[i][j][s] ε_s`
//! for bases `e` of A, `f` of B and `ε` of C*.

mod decide;
mod witness;

use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use decide::{
    decide, is_nondegenerate, kernel_pair_witness, slice_minor_ideal, tangency_witness,
    Certificate, DecideOptions, FieldHint, Verdict, VerdictKind, Witness,
};

use crate::error::{Error, Result};
use crate::exactmath::{serde_rational, Matrix, Rational};
use crate::poly::{variables, PolyMatrix, Polynomial};

/// Which factor of `A ⊗ B` a vector lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dim_a: usize,
    dim_b: usize,
    dim_c: usize,
    entries: Vec<Rational>,
}

impl Tensor3 {
    pub fn new(dim_a: usize, dim_b: usize, dim_c: usize, entries: Vec<Rational>) -> Result<Self> {
        if dim_a == 0 || dim_b == 0 || dim_c == 0 {
            return Err(Error::Dimension(format!(
                "tensor dimensions must be positive, got {dim_a}x{dim_b}x{dim_c}"
            )));
        }
        if entries.len() != dim_a * dim_b * dim_c {
            return Err(Error::Dimension(format!(
                "{dim_a}x{dim_b}x{dim_c} tensor needs {} entries, got {}",
                dim_a * dim_b * dim_c,
                entries.len()
            )));
        }
        Ok(Self { dim_a, dim_b, dim_c, entries })
    }

    pub fn zeros(dim_a: usize, dim_b: usize, dim_c: usize) -> Self {
        Self::new(dim_a, dim_b, dim_c, vec![Rational::zero(); dim_a * dim_b * dim_c])
            .expect("positive dimensions")
    }

    /// Builds a tensor from integer entries listed in `[i][j][s]` order.
    pub fn from_i64(dim_a: usize, dim_b: usize, dim_c: usize, entries: &[i64]) -> Result<Self> {
        let e = entries.iter().map(|&x| Rational::from_integer(x.into())).collect();
        Self::new(dim_a, dim_b, dim_c, e)
    }

    pub fn from_nested(nested: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let dim_a = nested.len();
        let dim_b = nested.first().map_or(0, Vec::len);
        let dim_c = nested.first().and_then(|r| r.first()).map_or(0, Vec::len);
        if nested.iter().any(|r| r.len() != dim_b || r.iter().any(|c| c.len() != dim_c)) {
            return Err(Error::Dimension("ragged entry array".into()));
        }
        Self::new(dim_a, dim_b, dim_c, nested.into_iter().flatten().flatten().collect())
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn dim_c(&self) -> usize {
        self.dim_c
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.dim_a, self.dim_b, self.dim_c)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    fn idx(&self, i: usize, j: usize, s: usize) -> usize {
        (i * self.dim_b + j) * self.dim_c + s
    }

    pub fn get(&self, i: usize, j: usize, s: usize) -> &Rational {
        &self.entries[self.idx(i, j, s)]
    }

    pub fn set(&mut self, i: usize, j: usize, s: usize, v: Rational) {
        let k = self.idx(i, j, s);
        self.entries[k] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// `dim C = dim A + dim B − 1`, the regime where nondegeneracy is the
    /// non-vanishing of the hyperdeterminant.
    pub fn is_boundary_format(&self) -> bool {
        self.dim_c == self.dim_a + self.dim_b - 1
    }

    /// `φ(a ⊗ b)` as a covector of length `dim C`.
    pub fn contract(&self, a: &[Rational], b: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(Side::A, a)?;
        self.check_len(Side::B, b)?;
        let mut out = vec![Rational::zero(); self.dim_c];
        for (i, ai) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let w = ai * bj;
                for (s, o) in out.iter_mut().enumerate() {
                    let t = self.get(i, j, s);
                    if !t.is_zero() {
                        *o += &w * t;
                    }
                }
            }
        }
        Ok(out)
    }

    fn check_len(&self, side: Side, v: &[Rational]) -> Result<()> {
        let want = match side {
            Side::A => self.dim_a,
            Side::B => self.dim_b,
        };
        if v.len() != want {
            return Err(Error::Dimension(format!(
                "vector of length {} on side {side:?} of dimension {want}",
                v.len()
            )));
        }
        Ok(())
    }

    /// Partial contraction. Side A gives the `dim C × dim B` matrix of
    /// `b ↦ φ(v ⊗ b)`; side B gives the `dim C × dim A` matrix of
    /// `a ↦ φ(a ⊗ v)`.
    pub fn slice_map(&self, side: Side, v: &[Rational]) -> Result<Matrix> {
        self.check_len(side, v)?;
        let cols = match side {
            Side::A => self.dim_b,
            Side::B => self.dim_a,
        };
        let mut m = Matrix::zeros(self.dim_c, cols);
        for (k, vk) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for col in 0..cols {
                let (i, j) = match side {
                    Side::A => (k, col),
                    Side::B => (col, k),
                };
                for s in 0..self.dim_c {
                    let t = self.get(i, j, s);
                    if !t.is_zero() {
                        m[(s, col)] += vk * t;
                    }
                }
            }
        }
        Ok(m)
    }

    /// The slice map with symbolic coordinates `a0..` (side A) or `b0..`
    /// (side B); specializing at `v` gives `slice_map(side, v)`.
    pub fn symbolic_slice(&self, side: Side) -> PolyMatrix {
        let (n, cols, prefix) = match side {
            Side::A => (self.dim_a, self.dim_b, "a"),
            Side::B => (self.dim_b, self.dim_a, "b"),
        };
        let vars: Arc<[String]> = variables(prefix, n);
        let mut entries = Vec::with_capacity(self.dim_c * cols);
        for s in 0..self.dim_c {
            for col in 0..cols {
                let coeffs: Vec<Rational> = (0..n)
                    .map(|k| match side {
                        Side::A => self.get(k, col, s).clone(),
                        Side::B => self.get(col, k, s).clone(),
                    })
                    .collect();
                entries.push(Polynomial::linear_form(vars.clone(), &coeffs));
            }
        }
        PolyMatrix::new(self.dim_c, cols, vars, entries).expect("consistent shape")
    }

    /// The `(dim A · dim B) × dim C` matrix of `φ` itself.
    pub fn flattening(&self) -> Matrix {
        Matrix::new(self.dim_a * self.dim_b, self.dim_c, self.entries.clone())
            .expect("consistent shape")
    }

    /// `φ` is surjective onto C* iff its flattening has rank `dim C`.
    pub fn is_surjective(&self) -> bool {
        self.flattening().rank() == self.dim_c
    }

    /// Exchanges the roles of A and B.
    pub fn swap_ab(&self) -> Self {
        let mut t = Self::zeros(self.dim_b, self.dim_a, self.dim_c);
        for i in 0..self.dim_a {
            for j in 0..self.dim_b {
                for s in 0..self.dim_c {
                    t.set(j, i, s, self.get(i, j, s).clone());
                }
            }
        }
        t
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Self { entries: self.entries.iter().map(|x| x * c).collect(), ..self.clone() }
    }

    /// Linear combination `Σ c_k φ_k` of tensors of one format.
    pub fn combination(coeffs: &[Rational], tensors: &[Tensor3]) -> Result<Self> {
        let first = tensors.first().ok_or_else(|| Error::Input("empty combination".into()))?;
        if coeffs.len() != tensors.len() {
            return Err(Error::Input(format!(
                "{} coefficients for {} tensors",
                coeffs.len(),
                tensors.len()
            )));
        }
        let mut out = Self::zeros(first.dim_a, first.dim_b, first.dim_c);
        for (c, t) in coeffs.iter().zip(tensors) {
            if t.dims() != first.dims() {
                return Err(Error::Dimension("combination of different formats".into()));
            }
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.entries.iter_mut().zip(&t.entries) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        Ok(out)
    }

    /// `φ'(e_i ⊗ f_j) = P_C · φ(P_A e_i ⊗ P_B f_j)`: the same tensor after a
    /// change of coordinates on each factor.
    pub fn change_basis(&self, pa: &Matrix, pb: &Matrix, pc: &Matrix) -> Result<Self> {
        let (da, db, dc) = self.dims();
        if pa.rows() != da || pa.cols() != da || pb.rows() != db || pb.cols() != db {
            return Err(Error::Dimension("change of basis matrices must be square".into()));
        }
        if pc.rows() != dc || pc.cols() != dc {
            return Err(Error::Dimension("change of basis matrices must be square".into()));
        }
        let mut out = Self::zeros(da, db, dc);
        for i in 0..da {
            let a: Vec<Rational> = (0..da).map(|r| pa[(r, i)].clone()).collect();
            for j in 0..db {
                let b: Vec<Rational> = (0..db).map(|r| pb[(r, j)].clone()).collect();
                let img = pc.mul_vec(&self.contract(&a, &b)?)?;
                for (s, x) in img.into_iter().enumerate() {
                    out.set(i, j, s, x);
                }
            }
        }
        Ok(out)
    }

    /// Whether `self = c · other` for some nonzero rational `c`.
    pub fn is_nonzero_multiple_of(&self, other: &Tensor3) -> bool {
        if self.dims() != other.dims() || self.is_zero() || other.is_zero() {
            return false;
        }
        let k = other.entries.iter().position(|x| !x.is_zero()).unwrap();
        let c = &self.entries[k] / &other.entries[k];
        !c.is_zero() && self.entries.iter().zip(&other.entries).all(|(x, y)| *x == &c * y)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tensor serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Deterministic pseudo-random tensor with integer entries in
/// `[-height, height]`, drawn in `[i][j][s]` order from a ChaCha8 stream.
pub fn random_tensor(
    dim_a: usize,
    dim_b: usize,
    dim_c: usize,
    seed: u64,
    height: u32,
) -> Result<Tensor3> {
    if height == 0 {
        return Err(Error::Input("height must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = height as i64;
    let entries = (0..dim_a * dim_b * dim_c)
        .map(|_| Rational::from_integer(rng.random_range(-h..=h).into()))
        .collect();
    Tensor3::new(dim_a, dim_b, dim_c, entries)
}

/// Standard basis vector `e_k` of length `n`.
pub fn basis_vector(n: usize, k: usize) -> Vec<Rational> {
    (0..n).map(|i| if i == k { Rational::one() } else { Rational::zero() }).collect()
}

#[derive(Serialize, Deserialize)]
struct RatStr(#[serde(with = "serde_rational")] Rational);

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct TensorJson {
    dim_a: usize,
    dim_b: usize,
    dim_c: usize,
    entries: Vec<Vec<Vec<RatStr>>>,
}

impl Serialize for Tensor3 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries = (0..self.dim_a)
            .map(|i| {
                (0..self.dim_b)
                    .map(|j| (0..self.dim_c).map(|k| RatStr(self.get(i, j, k).clone())).collect())
                    .collect()
            })
            .collect();
        TensorJson { dim_a: self.dim_a, dim_b: self.dim_b, dim_c: self.dim_c, entries }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tensor3 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = TensorJson::deserialize(d)?;
        let nested: Vec<Vec<Vec<Rational>>> = raw
            .entries
            .into_iter()
            .map(|r| r.into_iter().map(|c| c.into_iter().map(|x| x.0).collect()).collect())
            .collect();
        let t = Tensor3::from_nested(nested).map_err(D::Error::custom)?;
        if t.dims() != (raw.dim_a, raw.dim_b, raw.dim_c) {
            return Err(D::Error::custom(format!(
                "declared format {}x{}x{} but entries are {}x{}x{}",
                raw.dim_a, raw.dim_b, raw.dim_c, t.dim_a, t.dim_b, t.dim_c
            )));
        }
        Ok(t)
    }
}
