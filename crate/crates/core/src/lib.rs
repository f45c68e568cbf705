//! Exact decision procedures for boundary-format 3-tensors.
//!
//! A tensor `φ: A ⊗ B → C*` is *nondegenerate* when `φ(a ⊗ b) ≠ 0` for every
//! pair of nonzero vectors over the algebraic closure. In boundary format
//! (`dim C = dim A + dim B − 1`) this is the non-vanishing of the
//! hyperdeterminant. The crate decides it exactly over ℚ with Gröbner bases,
//! builds SL(2)-equivariant tensors from transvectants, and checks by
//! enumeration that the only nondegenerate equivariant tensor is the
//! multiplication of binary forms `S_n ⊗ S_m → S_{n+m}`.


pub mod bundle;
pub mod error;
pub mod exactmath;
pub mod poly;
pub mod sl2;
pub mod tensor;

pub use error::{Error, Result};
pub use exactmath::{Matrix, Rational};
pub use poly::{Ideal, MonomialOrder, Polynomial};
pub use sl2::ModuleSpec;
pub use tensor::{Side, Tensor3, Verdict, VerdictKind};
