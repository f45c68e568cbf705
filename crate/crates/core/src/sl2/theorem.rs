//! Enumeration harness for the classification of nondegenerate equivariant
//! boundary-format tensors: among SL(2)-equivariant `φ: A ⊗ B → C*` with
//! `dim C = dim A + dim B − 1`, the nondegenerate ones are exactly the
//! nonzero multiples of `S_n ⊗ S_m → S_{n+m}`.
//!
//! Triples where SL(2) acts trivially on all of `A`, `B` and `C` lie outside
//! that statement (every tensor is equivariant there and a generic one is
//! nondegenerate). They are still evaluated and reported, flagged as out of
//! scope, and never counted as counterexamples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{equivariant_basis, multiplication_tensor, ModuleSpec};
use crate::exactmath::{serde_rational_vec, Rational};
use crate::tensor::{decide, tangency_witness, DecideOptions, Tensor3, Verdict, VerdictKind};

#[derive(Debug, Clone)]
pub struct TheoremOptions {
    pub max_dim_a: usize,
    pub max_dim_b: usize,
    /// Random combinations per case; when positive the all-ones combination
    /// is evaluated as well.
    pub samples: usize,
    pub seed: u64,
    pub decide: DecideOptions,
}

impl TheoremOptions {
    pub fn new(max_dim_a: usize, max_dim_b: usize, samples: usize, seed: u64) -> Self {
        Self { max_dim_a, max_dim_b, samples, seed, decide: DecideOptions::default() }
    }
}

/// A boundary-format module triple with a nonzero equivariant space.
#[derive(Debug, Clone)]
pub struct TheoremCase {
    pub index: usize,
    pub a: ModuleSpec,
    pub b: ModuleSpec,
    pub c: ModuleSpec,
    pub basis: Vec<Tensor3>,
}

impl TheoremCase {
    pub fn label(&self) -> String {
        format!("{};{};{}", self.a, self.b, self.c)
    }

    pub fn in_scope(&self) -> bool {
        !(self.a.is_trivial() && self.b.is_trivial() && self.c.is_trivial())
    }

    /// Degrees `(n, m)` when the triple is `(S_n, S_m, S_{n+m})`.
    pub fn multiplication_degrees(&self) -> Option<(usize, usize)> {
        let (n, m, l) =
            (self.a.as_irreducible()?, self.b.as_irreducible()?, self.c.as_irreducible()?);
        (l == n + m).then_some((n, m))
    }

    /// The classification's prediction for one tensor of this case.
    pub fn expected(&self, phi: &Tensor3) -> VerdictKind {
        match self.multiplication_degrees() {
            Some((n, m)) if phi.is_nonzero_multiple_of(&multiplication_tensor(n, m)) => {
                VerdictKind::Nondegenerate
            }
            _ => VerdictKind::Degenerate,
        }
    }
}

/// All triples with `2 ≤ dim A ≤ max_a`, `2 ≤ dim B ≤ max_b`,
/// `dim C = dim A + dim B − 1` and a nonzero equivariant space, in order of
/// `dim A`, `dim B`, then module enumeration order for A, B, C.
pub fn enumerate_cases(max_a: usize, max_b: usize) -> Vec<TheoremCase> {
    let mut out = Vec::new();
    for da in 2..=max_a {
        for db in 2..=max_b {
            for a in ModuleSpec::all_of_dim(da) {
                for b in ModuleSpec::all_of_dim(db) {
                    for c in ModuleSpec::all_of_dim(da + db - 1) {
                        let basis = equivariant_basis(&a, &b, &c);
                        if !basis.is_empty() {
                            let index = out.len();
                            out.push(TheoremCase { index, a: a.clone(), b: b.clone(), c, basis });
                        }
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TensorVerdict {
    pub label: String,
    #[serde(with = "serde_rational_vec")]
    pub coefficients: Vec<Rational>,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub expected: VerdictKind,
    pub conforms: bool,
    /// Solution of the tangency system at the witness, when there is one.
    #[serde(skip_serializing_if = "Option::is_none", with = "opt_rational_vec")]
    pub tangency: Option<Vec<Rational>>,
}

mod opt_rational_vec {
    use super::*;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &Option<Vec<Rational>>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => serde_rational_vec::serialize(v, s),
            None => s.serialize_none(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CaseReport {
    pub case: String,
    pub dims: [usize; 3],
    pub hom_dim: usize,
    pub in_scope: bool,
    pub verdicts: Vec<TensorVerdict>,
    /// Every in-scope verdict matched the prediction.
    pub conforms: bool,
}

impl CaseReport {
    pub fn counterexamples(&self) -> usize {
        if self.in_scope {
            self.verdicts.iter().filter(|v| !v.conforms).count()
        } else {
            0
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TheoremSummary {
    pub cases: usize,
    pub excluded_cases: usize,
    pub tensors: usize,
    pub nondegenerate: usize,
    pub degenerate: usize,
    pub with_witness: usize,
    pub counterexamples: usize,
    pub seed: u64,
    pub samples: usize,
}

impl TheoremSummary {
    fn absorb(&mut self, r: &CaseReport) {
        self.cases += 1;
        self.excluded_cases += usize::from(!r.in_scope);
        self.tensors += r.verdicts.len();
        for v in &r.verdicts {
            match v.verdict.kind {
                VerdictKind::Nondegenerate => self.nondegenerate += 1,
                VerdictKind::Degenerate => self.degenerate += 1,
            }
            self.with_witness += usize::from(v.verdict.witness.is_some());
        }
        self.counterexamples += r.counterexamples();
    }
}

fn random_coefficient(rng: &mut ChaCha8Rng) -> Rational {
    let num: i64 = rng.random_range(1..=5);
    let den: i64 = rng.random_range(1..=3);
    let sign = if rng.random_bool(0.5) { 1 } else { -1 };
    Rational::new((sign * num).into(), den.into())
}

/// Decides every basis element and the sampled combinations of one case.
/// Randomness comes from the stream `case.index` of the seeded generator,
/// so the result does not depend on evaluation order.
pub fn evaluate_case(case: &TheoremCase, opts: &TheoremOptions) -> CaseReport {
    let k = case.basis.len();
    let mut combos: Vec<(String, Vec<Rational>)> = (0..k)
        .map(|i| {
            let coeffs =
                (0..k).map(|j| Rational::from_integer(i64::from(i == j).into())).collect();
            (format!("basis{i}"), coeffs)
        })
        .collect();
    if opts.samples > 0 {
        combos.push(("ones".into(), vec![Rational::from_integer(1.into()); k]));
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        rng.set_stream(case.index as u64);
        for s in 0..opts.samples {
            let coeffs = (0..k).map(|_| random_coefficient(&mut rng)).collect();
            combos.push((format!("sample{s}"), coeffs));
        }
    }
    let verdicts: Vec<TensorVerdict> = combos
        .into_iter()
        .map(|(label, coefficients)| {
            let phi = Tensor3::combination(&coefficients, &case.basis).expect("same format");
            let verdict = decide(&phi, &opts.decide);
            let expected = case.expected(&phi);
            let tangency = verdict
                .witness
                .as_ref()
                .and_then(|w| tangency_witness(&phi, &w.a, &w.b).ok());
            TensorVerdict {
                label,
                coefficients,
                conforms: verdict.kind == expected,
                verdict,
                expected,
                tangency,
            }
        })
        .collect();
    let in_scope = case.in_scope();
    CaseReport {
        case: case.label(),
        dims: [case.a.dim(), case.b.dim(), case.c.dim()],
        hom_dim: k,
        in_scope,
        conforms: !in_scope || verdicts.iter().all(|v| v.conforms),
        verdicts,
    }
}

/// Evaluates all cases in parallel and hands the reports to `sink` in
/// enumeration order, a batch at a time.
pub fn verify_theorem_streaming(
    opts: &TheoremOptions,
    mut sink: impl FnMut(&CaseReport),
) -> TheoremSummary {
    let cases = enumerate_cases(opts.max_dim_a, opts.max_dim_b);
    let mut summary = TheoremSummary { seed: opts.seed, samples: opts.samples, ..Default::default() };
    let batch = (rayon::current_num_threads() * 4).max(1);
    for chunk in cases.chunks(batch) {
        let reports: Vec<CaseReport> = chunk.par_iter().map(|c| evaluate_case(c, opts)).collect();
        for r in &reports {
            summary.absorb(r);
            sink(r);
        }
    }
    summary
}

pub fn verify_theorem(opts: &TheoremOptions) -> (Vec<CaseReport>, TheoremSummary) {
    let mut reports = Vec::new();
    let summary = verify_theorem_streaming(opts, |r| reports.push(r.clone()));
    (reports, summary)
}
