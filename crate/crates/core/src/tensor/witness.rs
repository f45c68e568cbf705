//! Best-effort rational witnesses and finite-field hints for degenerate
//! tensors. Every rational witness returned here is verified exactly.

use super::{FieldHint, Side, Tensor3, Witness};
use crate::exactmath::{is_zero_vector, modp, Rational};
use crate::poly::{binary_form_gcd, rational_projective_roots, Polynomial};

const FILTER_PRIME: u64 = 2_147_483_647;

/// Completes a point `a` to a witness `(a, b)` when `φ(a ⊗ ·)` has a kernel.
pub(super) fn witness_at(phi: &Tensor3, a: &[Rational]) -> Option<Witness> {
    if is_zero_vector(a) {
        return None;
    }
    let m = phi.slice_map(Side::A, a).ok()?;
    let b = m.kernel().into_iter().next()?;
    debug_assert!(is_zero_vector(&phi.contract(a, &b).unwrap()));
    Some(Witness { a: a.to_vec(), b })
}

/// For `dim A = 2`: the gcd of the maximal minors vanishes exactly at the
/// degenerate points, so its rational roots give witnesses.
pub(super) fn binary_witness(phi: &Tensor3, minors: &[Polynomial]) -> Option<Witness> {
    let nonzero: Vec<&Polynomial> = minors.iter().filter(|p| !p.is_zero()).collect();
    let Some((first, rest)) = nonzero.split_first() else {
        return witness_at(phi, &super::basis_vector(2, 0));
    };
    let mut g = (*first).clone();
    for p in rest {
        g = binary_form_gcd(&g, p).ok()?;
    }
    let roots = rational_projective_roots(&g).ok()??;
    roots.into_iter().find_map(|[x, y]| witness_at(phi, &[x, y]))
}

/// Integer vectors with `max |c_i| = h` and first nonzero coordinate
/// positive, lexicographic within each height, heights increasing.
fn height_points(n: usize, max_height: u32) -> impl Iterator<Item = Vec<i64>> {
    (1..=max_height as i64).flat_map(move |h| {
        let side = (2 * h + 1) as u64;
        let total = side.pow(n as u32);
        (0..total).filter_map(move |mut code| {
            let mut v = vec![0i64; n];
            for k in (0..n).rev() {
                v[k] = (code % side) as i64 - h;
                code /= side;
            }
            let first = v.iter().find(|&&x| x != 0)?;
            (*first > 0 && v.iter().any(|x| x.abs() == h)).then_some(v)
        })
    })
}

fn tensor_mod(phi: &Tensor3, p: u64) -> Option<Vec<u64>> {
    phi.entries().iter().map(|x| modp::reduce(x, p)).collect()
}

/// `M(a)` over `F_p` for an integer point `a`, row-major `dim C × dim B`.
fn slice_mod(phi: &Tensor3, t: &[u64], a: &[u64], p: u64) -> Vec<u64> {
    let (da, db, dc) = phi.dims();
    let mut m = vec![0u64; dc * db];
    for (i, &ai) in a.iter().enumerate().take(da) {
        if ai == 0 {
            continue;
        }
        for j in 0..db {
            for s in 0..dc {
                let x = t[(i * db + j) * dc + s];
                if x != 0 {
                    let cell = &mut m[s * db + j];
                    *cell = (*cell + ai * x) % p;
                }
            }
        }
    }
    m
}

/// Scans projective points with integer coordinates of height at most
/// `max_height`. Points whose slice has full rank modulo a large prime are
/// discarded without exact arithmetic (rank over ℚ is at least the rank mod
/// p); the rest are checked exactly.
pub(super) fn scan_witness(phi: &Tensor3, max_height: u32) -> Option<Witness> {
    let (da, db, dc) = phi.dims();
    let p = FILTER_PRIME;
    let t = tensor_mod(phi, p);
    height_points(da, max_height).find_map(|pt| {
        if let Some(t) = &t {
            let a: Vec<u64> = pt.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect();
            if modp::rank_mod(slice_mod(phi, t, &a, p), dc, db, p) == db {
                return None;
            }
        }
        let a: Vec<Rational> = pt.iter().map(|&x| Rational::from_integer(x.into())).collect();
        witness_at(phi, &a)
    })
}

/// Non-certified hint: a point of `P(A)` over `F_p` where the slice drops
/// rank, searching at most `budget` points (first nonzero coordinate 1).
pub(super) fn field_hint(phi: &Tensor3, p: u64, budget: usize) -> Option<FieldHint> {
    let (da, db, dc) = phi.dims();
    let t = tensor_mod(phi, p)?;
    let mut tried = 0usize;
    for lead in 0..da {
        let free = da - lead - 1;
        let count = p.checked_pow(free as u32)?;
        for mut code in 0..count {
            if tried >= budget {
                return None;
            }
            tried += 1;
            let mut a = vec![0u64; da];
            a[lead] = 1;
            for k in (lead + 1..da).rev() {
                a[k] = code % p;
                code /= p;
            }
            let m = slice_mod(phi, &t, &a, p);
            if modp::rank_mod(m.clone(), dc, db, p) < db {
                let b = modp::kernel_vector_mod(m, dc, db, p)?;
                return Some(FieldHint { prime: p, a, b, certified: false });
            }
        }
    }
    None
}
