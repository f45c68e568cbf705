//! Oracles computed from raw tensor entries, independent of the decision
//! procedure under test.

#![allow(dead_code)]

use hypdet::{Rational, Tensor3};
use num_traits::{One, Zero};

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn qs(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| q(x)).collect()
}

/// Univariate polynomial, coefficients from degree 0 up, no trailing zeros.
type Upoly = Vec<Rational>;

fn trim(mut p: Upoly) -> Upoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn add(p: &Upoly, r: &Upoly) -> Upoly {
    let n = p.len().max(r.len());
    trim((0..n)
        .map(|i| p.get(i).cloned().unwrap_or_else(Rational::zero) + r.get(i).cloned().unwrap_or_else(Rational::zero))
        .collect())
}

fn mul(p: &Upoly, r: &Upoly) -> Upoly {
    if p.is_empty() || r.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); p.len() + r.len() - 1];
    for (i, x) in p.iter().enumerate() {
        for (j, y) in r.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn rem(mut p: Upoly, d: &Upoly) -> Upoly {
    let lead = d.last().expect("nonzero divisor");
    while p.len() >= d.len() {
        let c = p.last().unwrap() / lead;
        let shift = p.len() - d.len();
        for (i, x) in d.iter().enumerate() {
            p[shift + i] -= &c * x;
        }
        p = trim(p);
    }
    p
}

fn gcd(mut p: Upoly, mut r: Upoly) -> Upoly {
    while !r.is_empty() {
        let t = rem(p, &r);
        p = r;
        r = t;
    }
    p
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    if n == 0 {
        return vec![(Vec::new(), true)];
    }
    let mut out = Vec::new();
    for (p, even) in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push((q, even == (n - 1 - pos).is_multiple_of(2)));
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    (k - 1..n)
        .flat_map(|last| {
            subsets(last, k - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}

/// For `dim A = 2`: the slice matrix at `a = (t, 1)` has a rank drop at some
/// `t` or at infinity iff the tensor is degenerate. Maximal minors are built
/// by the Leibniz formula and their univariate gcd decides the finite part.
pub fn binary_gcd_oracle(phi: &Tensor3) -> bool {
    let (da, db, dc) = phi.dims();
    assert_eq!(da, 2);
    if dc < db {
        return false;
    }
    let entry = |s: usize, j: usize| trim(vec![phi.get(1, j, s).clone(), phi.get(0, j, s).clone()]);
    let perms = permutations(db);
    let minors: Vec<Upoly> = subsets(dc, db)
        .into_iter()
        .map(|rows| {
            perms.iter().fold(Vec::new(), |acc, (p, even)| {
                let term = (0..db).fold(vec![Rational::one()], |t, j| mul(&t, &entry(rows[p[j]], j)));
                let term = if *even { term } else { term.into_iter().map(|x| -x).collect() };
                add(&acc, &term)
            })
        })
        .filter(|m| !m.is_empty())
        .collect();
    if minors.is_empty() || minors.iter().all(|m| m.len() <= db) {
        return false;
    }
    let g = minors.into_iter().reduce(gcd).unwrap();
    g.len() == 1
}

pub fn contract(phi: &Tensor3, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (da, db, dc) = phi.dims();
    (0..dc)
        .map(|s| {
            let mut acc = Rational::zero();
            for (i, x) in a.iter().enumerate().take(da) {
                for (j, y) in b.iter().enumerate().take(db) {
                    acc += x * y * phi.get(i, j, s);
                }
            }
            acc
        })
        .collect()
}

fn dot(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter().zip(y).map(|(u, v)| u * v).sum()
}

/// `c` kills `φ(a ⊗ B)` and `φ(A ⊗ b)`.
pub fn annihilates(phi: &Tensor3, a: &[Rational], b: &[Rational], c: &[Rational]) -> bool {
    let (da, db, _) = phi.dims();
    let e = |n: usize, k: usize| (0..n).map(|i| q(i64::from(i == k))).collect::<Vec<_>>();
    (0..db).all(|j| dot(&contract(phi, a, &e(db, j)), c).is_zero())
        && (0..da).all(|i| dot(&contract(phi, &e(da, i), b), c).is_zero())
}

pub fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// All points of `P^{n-1}(F_p)`, normalized with leading coordinate 1.
pub fn projective_points(n: usize, p: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for lead in 0..n {
        let free = n - lead - 1;
        for code in 0..p.pow(free as u32) {
            let mut v = vec![0; n];
            v[lead] = 1;
            let mut c = code;
            for x in v.iter_mut().skip(lead + 1) {
                *x = c % p;
                c /= p;
            }
            out.push(v);
        }
    }
    out
}
