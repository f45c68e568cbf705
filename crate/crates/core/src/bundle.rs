//! Presentation matrices of the associated Steiner bundles and pointwise
//! fibers `{c ∈ C : φ(a ⊗ b)(c) = 0}`.
//!
//! Sheaves are represented only through these matrices: the presentation
//! on `P(A)` is the `dim B × dim C` matrix of linear forms in `a0..` whose
//! value at `a` is the transpose of `slice_map(A, a)`, and symmetrically on
//! `P(B)`. Rows are indexed by the basis dual to the chosen basis of B
//! (resp. A).

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactmath::{is_zero_vector, Matrix, Rational};
use crate::poly::{PolyMatrix, Polynomial};
use crate::tensor::{basis_vector, Side, Tensor3};

/// Matrix whose entries are linear forms (or zero) in one set of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFormMatrix(PolyMatrix);

impl LinearFormMatrix {
    pub fn new(m: PolyMatrix) -> Result<Self> {
        if let Some(p) = m.entries().iter().find(|p| !p.is_zero() && p.homogeneous_degree() != Some(1)) {
            return Err(Error::Input(format!("{p} is not a linear form")));
        }
        Ok(Self(m))
    }

    pub fn rows(&self) -> usize {
        self.0.rows()
    }

    pub fn cols(&self) -> usize {
        self.0.cols()
    }

    pub fn vars(&self) -> &Arc<[String]> {
        self.0.vars()
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        self.0.get(i, j)
    }

    pub fn as_poly_matrix(&self) -> &PolyMatrix {
        &self.0
    }

    pub fn specialize(&self, point: &[Rational]) -> Result<Matrix> {
        self.0.specialize(point)
    }

    /// Whether entry `(l, s)` depends only on `s − l`.
    pub fn is_toeplitz(&self) -> bool {
        (0..self.rows()).all(|l| {
            (0..self.cols()).all(|s| {
                l == 0 || s == 0 || self.get(l, s) == self.get(l - 1, s - 1)
            })
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LinearFormJson {
    rows: usize,
    cols: usize,
    variables: Vec<String>,
    entries: Vec<Vec<String>>,
}

impl Serialize for LinearFormMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LinearFormJson {
            rows: self.rows(),
            cols: self.cols(),
            variables: self.vars().to_vec(),
            entries: (0..self.rows())
                .map(|i| (0..self.cols()).map(|j| self.get(i, j).to_string()).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinearFormMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = LinearFormJson::deserialize(d)?;
        let vars: Arc<[String]> = raw.variables.into();
        if raw.entries.len() != raw.rows || raw.entries.iter().any(|r| r.len() != raw.cols) {
            return Err(D::Error::custom("entry array does not match rows/cols"));
        }
        let entries = raw
            .entries
            .iter()
            .flatten()
            .map(|s| Polynomial::parse(vars.clone(), s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        let m = PolyMatrix::new(raw.rows, raw.cols, vars, entries).map_err(D::Error::custom)?;
        LinearFormMatrix::new(m).map_err(D::Error::custom)
    }
}

/// Presentation matrix over `P(A)` (side A, `dim B × dim C` in `a0..`) or
/// over `P(B)` (side B, `dim A × dim C` in `b0..`).
pub fn steiner_presentation(phi: &Tensor3, side: Side) -> LinearFormMatrix {
    LinearFormMatrix(phi.symbolic_slice(side).transpose())
}

/// Basis of the fiber `{c ∈ C : φ(a ⊗ b)(c) = 0}`.
pub fn fiber_at(phi: &Tensor3, a: &[Rational], b: &[Rational]) -> Result<Vec<Vec<Rational>>> {
    let f = phi.contract(a, b)?;
    if is_zero_vector(a) || is_zero_vector(b) {
        return Err(Error::Input("fibers are taken at nonzero a and b".into()));
    }
    let row = Matrix::new(1, phi.dim_c(), f)?;
    Ok(row.kernel())
}

const SAMPLE_BOX: i64 = 3;

fn random_nonzero(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    loop {
        let v: Vec<i64> = (0..n).map(|_| rng.random_range(-SAMPLE_BOX..=SAMPLE_BOX)).collect();
        if v.iter().any(|&x| x != 0) {
            return v.into_iter().map(|x| Rational::from_integer(x.into())).collect();
        }
    }
}

/// The sample points used by [`constant_rank_check`]: the coordinate pairs
/// `(e_i, f_j)` first, then pairs with integer coordinates in `[-3, 3]`.
/// Sample `k` draws from stream `k` of the seeded generator.
pub fn sample_pairs(phi: &Tensor3, samples: usize, seed: u64) -> Vec<(Vec<Rational>, Vec<Rational>)> {
    let (da, db, _) = phi.dims();
    (0..samples)
        .map(|k| {
            if k < da * db {
                return (basis_vector(da, k / db), basis_vector(db, k % db));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k as u64);
            (random_nonzero(&mut rng, da), random_nonzero(&mut rng, db))
        })
        .collect()
}

/// Sampling proxy for the vector-bundle condition: every sampled fiber has
/// dimension `dim C − 1`. The exact answer comes from
/// [`crate::tensor::is_nondegenerate`].
pub fn constant_rank_check(phi: &Tensor3, samples: usize, seed: u64) -> bool {
    sample_pairs(phi, samples, seed)
        .iter()
        .all(|(a, b)| fiber_at(phi, a, b).map(|f| f.len() + 1 == phi.dim_c()).unwrap_or(false))
}
