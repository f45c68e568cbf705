use serde::{Serialize, Serializer};

use super::witness::{binary_witness, field_hint, scan_witness, witness_at};
use super::{basis_vector, Side, Tensor3};
use crate::error::{Error, Result};
use crate::exactmath::{is_zero_vector, serde_rational_vec, Matrix, Rational};
use crate::poly::{basis_certifies_empty, maximal_minors, Ideal, MonomialOrder, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum VerdictKind {
    /// No nonzero `a, b` over the algebraic closure with `φ(a ⊗ b) = 0`.
    Nondegenerate,
    Degenerate,
}

/// Nonzero `a, b` with `φ(a ⊗ b) = 0` exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(with = "serde_rational_vec")]
    pub a: Vec<Rational>,
    #[serde(with = "serde_rational_vec")]
    pub b: Vec<Rational>,
}

/// Reduced Gröbner basis of the ideal of maximal minors of the symbolic
/// slice `M(a)`. `empty` records whether it certifies an empty projective
/// zero set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub order: MonomialOrder,
    pub variables: Vec<String>,
    #[serde(serialize_with = "polys_as_strings")]
    pub basis: Vec<Polynomial>,
    pub empty: bool,
}

/// A kernel pair over a prime field. Suggestive only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldHint {
    pub prime: u64,
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub kind: VerdictKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hint: Option<FieldHint>,
}

impl Verdict {
    pub fn is_nondegenerate(&self) -> bool {
        self.kind == VerdictKind::Nondegenerate
    }
}

fn polys_as_strings<S: Serializer>(v: &[Polynomial], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecideOptions {
    /// Search for a rational witness after a degenerate decision.
    pub find_witness: bool,
    /// Coordinate bound for the integer point scan (`dim A ≥ 3`).
    pub scan_height: u32,
    /// Search `F_101` for a hint when no rational witness is found.
    pub field_hint: bool,
    pub hint_budget: usize,
}

impl Default for DecideOptions {
    fn default() -> Self {
        Self { find_witness: true, scan_height: 5, field_hint: true, hint_budget: 20_000 }
    }
}

const HINT_PRIME: u64 = 101;

/// Ideal of the maximal (`dim B`-sized) minors of `M(a)` in the variables
/// `a0..`. Its projective zero set is the set of `[a]` admitting a `b ≠ 0`
/// with `φ(a ⊗ b) = 0`. Requires `dim C ≥ dim B`.
pub fn slice_minor_ideal(phi: &Tensor3) -> Result<Ideal> {
    if phi.dim_c() < phi.dim_b() {
        return Err(Error::Input(format!(
            "dim C = {} < dim B = {}: every slice has a kernel",
            phi.dim_c(),
            phi.dim_b()
        )));
    }
    let m = phi.symbolic_slice(Side::A);
    let minors = maximal_minors(&m, phi.dim_b())?;
    Ideal::new(m.vars().clone(), minors)
}

pub fn is_nondegenerate(phi: &Tensor3) -> Verdict {
    decide(phi, &DecideOptions::default())
}

/// Exact decision: nondegenerate iff the minor ideal of `M(a)` has no
/// projective zero. Degenerate verdicts carry a verified rational witness
/// when one is found, otherwise the Gröbner certificate (and possibly a
/// non-certified finite-field hint).
pub fn decide(phi: &Tensor3, opts: &DecideOptions) -> Verdict {
    if phi.dim_c() < phi.dim_b() {
        // every slice map B → C* has a kernel
        let witness = witness_at(phi, &basis_vector(phi.dim_a(), 0));
        debug_assert!(witness.is_some());
        return Verdict { kind: VerdictKind::Degenerate, witness, certificate: None, hint: None };
    }
    let ideal = slice_minor_ideal(phi).expect("dim C >= dim B");
    let ord = MonomialOrder::default();
    let gb = ideal.groebner_basis(ord);
    let empty = basis_certifies_empty(gb.generators(), ord);
    let certificate = Certificate {
        order: ord,
        variables: ideal.vars().to_vec(),
        basis: gb.generators().to_vec(),
        empty,
    };
    if empty {
        return Verdict {
            kind: VerdictKind::Nondegenerate,
            witness: None,
            certificate: Some(certificate),
            hint: None,
        };
    }
    let witness = opts.find_witness.then(|| rational_witness(phi, &ideal, opts)).flatten();
    let hint = if witness.is_none() && opts.field_hint {
        field_hint(phi, HINT_PRIME, opts.hint_budget)
    } else {
        None
    };
    Verdict {
        kind: VerdictKind::Degenerate,
        certificate: witness.is_none().then_some(certificate),
        witness,
        hint,
    }
}

fn rational_witness(phi: &Tensor3, ideal: &Ideal, opts: &DecideOptions) -> Option<Witness> {
    if phi.dim_a() == 2 {
        if let Some(w) = binary_witness(phi, ideal.generators()) {
            return Some(w);
        }
    }
    scan_witness(phi, opts.scan_height)
}

/// A kernel pair `(a, b)` with rational coordinates, when the tensor is
/// degenerate and one is found.
pub fn kernel_pair_witness(phi: &Tensor3) -> Option<Witness> {
    let opts = DecideOptions { field_hint: false, ..DecideOptions::default() };
    decide(phi, &opts).witness
}

/// Given a kernel pair `(a, b)`, a nonzero `c ∈ C` with `φ(a' ⊗ b)(c) = 0`
/// for all `a'` and `φ(a ⊗ b')(c) = 0` for all `b'`. The stacked system has
/// at most `dim A + dim B − 2` independent rows, so a solution exists once
/// `dim C ≥ dim A + dim B − 1`.
pub fn tangency_witness(phi: &Tensor3, a: &[Rational], b: &[Rational]) -> Result<Vec<Rational>> {
    let (da, db, dc) = phi.dims();
    let f = phi.contract(a, b)?;
    if is_zero_vector(a) || is_zero_vector(b) {
        return Err(Error::Input("tangency witness needs nonzero a and b".into()));
    }
    if !is_zero_vector(&f) {
        return Err(Error::Input("φ(a ⊗ b) is not zero".into()));
    }
    if dc + 1 < da + db {
        return Err(Error::Input(format!(
            "dim C = {dc} is below dim A + dim B - 1 = {}",
            da + db - 1
        )));
    }
    // rows: φ(e_i ⊗ b) for each i, then φ(a ⊗ f_j) for each j
    let along_a: Matrix = phi.slice_map(Side::B, b)?.transpose();
    let along_b: Matrix = phi.slice_map(Side::A, a)?.transpose();
    let system = along_a.vstack(&along_b)?;
    system
        .kernel()
        .into_iter()
        .next()
        .ok_or_else(|| Error::Input("annihilator is trivial".into()))
}
