use num_traits::Zero;

use super::{action_matrices, transvectant_map, ModuleSpec};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::tensor::{basis_vector, Tensor3};

/// Basis of the SL(2)-equivariant maps `A ⊗ B → C*`, with `C*` given
/// directly by `c`. One element per choice of an irreducible copy of `A`,
/// one of `B`, a transvectant index `r`, and a copy of `S_{i+j−2r}` in `c`;
/// the transvectant is placed in the corresponding block.
pub fn equivariant_basis(a: &ModuleSpec, b: &ModuleSpec, c: &ModuleSpec) -> Vec<Tensor3> {
    let c_blocks = c.blocks();
    let mut out = Vec::new();
    for ba in a.blocks() {
        for bb in b.blocks() {
            for r in 0..=ba.degree.min(bb.degree) {
                let l = ba.degree + bb.degree - 2 * r;
                let targets: Vec<_> = c_blocks.iter().filter(|bc| bc.degree == l).collect();
                if targets.is_empty() {
                    continue;
                }
                let tv = transvectant_map(ba.degree, bb.degree, r).expect("r in range");
                for bc in targets {
                    let mut t = Tensor3::zeros(a.dim(), b.dim(), c.dim());
                    for p in 0..=ba.degree {
                        for q in 0..=bb.degree {
                            for s in 0..=l {
                                let x = tv.get(p, q, s);
                                if !x.is_zero() {
                                    t.set(ba.offset + p, bb.offset + q, bc.offset + s, x.clone());
                                }
                            }
                        }
                    }
                    out.push(t);
                }
            }
        }
    }
    out
}

/// Infinitesimal equivariance: `φ(Xa ⊗ b) + φ(a ⊗ Xb) = X·φ(a ⊗ b)` for
/// `X ∈ {E, F, H}` on all basis vectors, with the action on the target
/// taken from `c` as given.
pub fn is_equivariant(phi: &Tensor3, a: &ModuleSpec, b: &ModuleSpec, c: &ModuleSpec) -> Result<bool> {
    if phi.dims() != (a.dim(), b.dim(), c.dim()) {
        return Err(Error::Dimension(format!(
            "tensor is {:?} but modules have dimensions ({}, {}, {})",
            phi.dims(),
            a.dim(),
            b.dim(),
            c.dim()
        )));
    }
    let (ta, tb, tc) = (action_matrices(a), action_matrices(b), action_matrices(c));
    let images: Vec<Vec<Vec<Rational>>> = (0..a.dim())
        .map(|p| {
            (0..b.dim())
                .map(|q| {
                    phi.contract(&basis_vector(a.dim(), p), &basis_vector(b.dim(), q))
                        .expect("dimensions checked")
                })
                .collect()
        })
        .collect();
    for ((xa, xb), xc) in ta.generators().into_iter().zip(tb.generators()).zip(tc.generators()) {
        for p in 0..a.dim() {
            for q in 0..b.dim() {
                let mut lhs = vec![Rational::zero(); c.dim()];
                for i in 0..a.dim() {
                    let w = &xa[(i, p)];
                    if !w.is_zero() {
                        for (l, x) in lhs.iter_mut().zip(&images[i][q]) {
                            *l += w * x;
                        }
                    }
                }
                for j in 0..b.dim() {
                    let w = &xb[(j, q)];
                    if !w.is_zero() {
                        for (l, x) in lhs.iter_mut().zip(&images[p][j]) {
                            *l += w * x;
                        }
                    }
                }
                let rhs = xc.mul_vec(&images[p][q])?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
