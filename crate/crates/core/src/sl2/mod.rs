//! SL(2)-module calculus on binary forms.
//!
//! `S_i` is realized as binary forms of degree `i` with basis
//! `x^{i-k} y^k`, `k = 0..=i`. A [`ModuleSpec`] lists summands `S_i ⊗ U_i`
//! with `dim U_i = mult`; the basis of the whole module concatenates the
//! summands in order and, within a summand, the multiplicity copies.

mod action;
mod equivariant;
mod theorem;
mod transvectant;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use action::{action_matrices, ActionTriple};
pub use equivariant::{equivariant_basis, is_equivariant};
pub use theorem::{
    enumerate_cases, evaluate_case, verify_theorem, verify_theorem_streaming, CaseReport,
    TensorVerdict, TheoremCase, TheoremOptions, TheoremSummary,
};
pub use transvectant::{multiplication_tensor, transvectant_map};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Summand {
    pub degree: usize,
    pub mult: usize,
}

/// One irreducible copy inside a module: its degree and the index of its
/// first basis vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub degree: usize,
    pub offset: usize,
}

/// `⊕ S_i ⊗ U_i` with a fixed monomial basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleSpec {
    summands: Vec<Summand>,
}

impl ModuleSpec {
    pub fn new(summands: Vec<Summand>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::Input("a module needs at least one summand".into()));
        }
        if summands.iter().any(|s| s.mult == 0) {
            return Err(Error::Input("summand multiplicities must be positive".into()));
        }
        Ok(Self { summands })
    }

    /// The irreducible module `S_i`.
    pub fn irreducible(degree: usize) -> Self {
        Self { summands: vec![Summand { degree, mult: 1 }] }
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn dim(&self) -> usize {
        self.summands.iter().map(|s| (s.degree + 1) * s.mult).sum()
    }

    /// All irreducible copies in basis order.
    pub fn blocks(&self) -> Vec<Block> {
        let mut out = Vec::new();
        let mut offset = 0;
        for s in &self.summands {
            for _ in 0..s.mult {
                out.push(Block { degree: s.degree, offset });
                offset += s.degree + 1;
            }
        }
        out
    }

    /// `Some(i)` when the module is a single copy of `S_i`.
    pub fn as_irreducible(&self) -> Option<usize> {
        match self.summands.as_slice() {
            [Summand { degree, mult: 1 }] => Some(*degree),
            _ => None,
        }
    }

    /// SL(2) acts trivially (every summand is `S_0`).
    pub fn is_trivial(&self) -> bool {
        self.summands.iter().all(|s| s.degree == 0)
    }

    /// Every module of dimension `dim` up to reordering of summands, listed
    /// with degrees decreasing; enumeration order is by partition of `dim`
    /// into parts `degree + 1`, largest parts first.
    pub fn all_of_dim(dim: usize) -> Vec<ModuleSpec> {
        fn rec(rest: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest == 0 {
                out.push(cur.clone());
                return;
            }
            for part in (1..=max_part.min(rest)).rev() {
                cur.push(part);
                rec(rest - part, part, cur, out);
                cur.pop();
            }
        }
        let mut parts = Vec::new();
        rec(dim, dim, &mut Vec::new(), &mut parts);
        parts
            .into_iter()
            .map(|p| {
                let mut summands: Vec<Summand> = Vec::new();
                for part in p {
                    match summands.last_mut() {
                        Some(s) if s.degree + 1 == part => s.mult += 1,
                        _ => summands.push(Summand { degree: part - 1, mult: 1 }),
                    }
                }
                ModuleSpec { summands }
            })
            .collect()
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|s| match s.mult {
                1 => format!("S{}", s.degree),
                m => format!("S{}^{m}", s.degree),
            })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for ModuleSpec {
    type Err = Error;

    /// Parses `"S1+S0^2"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad module spec {s:?}, expected e.g. \"S1+S0^2\""));
        let summands = s
            .split('+')
            .map(|part| {
                let part = part.trim();
                let body = part.strip_prefix('S').ok_or_else(bad)?;
                let (deg, mult) = match body.split_once('^') {
                    Some((d, m)) => (d, m.parse::<usize>().map_err(|_| bad())?),
                    None => (body, 1),
                };
                let degree = deg.parse::<usize>().map_err(|_| bad())?;
                Ok(Summand { degree, mult })
            })
            .collect::<Result<Vec<_>>>()?;
        ModuleSpec::new(summands)
    }
}

impl Serialize for ModuleSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ModuleSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
