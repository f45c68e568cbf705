//! Binary forms via dehomogenization to univariate polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Polynomial;
use crate::error::{Error, Result};
use crate::exactmath::{clear_denominators, Rational};

/// Dense univariate polynomial, ascending coefficients, no trailing zeros.
type Univ = Vec<Rational>;

fn trim(mut p: Univ) -> Univ {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn univ_rem(mut a: Univ, b: &Univ) -> Univ {
    let db = b.len() - 1;
    let lb = b[db].clone();
    while a.len() > db {
        let da = a.len() - 1;
        let q = &a[da] / &lb;
        for (i, c) in b.iter().enumerate() {
            let x = &q * c;
            a[da - db + i] -= x;
        }
        a = trim(a);
    }
    a
}

fn univ_monic(p: Univ) -> Univ {
    match p.last() {
        Some(l) if !l.is_one() => {
            let l = l.clone();
            p.into_iter().map(|c| c / &l).collect()
        }
        _ => p,
    }
}

fn univ_gcd(a: Univ, b: Univ) -> Univ {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = univ_rem(a, &b);
        a = b;
        b = r;
    }
    univ_monic(a)
}

fn check_binary(f: &Polynomial) -> Result<()> {
    if f.nvars() != 2 {
        return Err(Error::Input(format!("{f} is not a binary form")));
    }
    if !f.is_homogeneous() {
        return Err(Error::Input(format!("{f} is not homogeneous")));
    }
    Ok(())
}

/// Splits a nonzero binary form as `y^k · h` with `y ∤ h` and returns `k`
/// with `h(x, 1)`.
fn split(f: &Polynomial) -> (u32, Univ) {
    let k = f.terms().map(|(e, _)| e[1]).min().unwrap_or(0);
    let d = f.homogeneous_degree().unwrap_or(0);
    let mut u = vec![Rational::zero(); (d - k) as usize + 1];
    for (e, c) in f.terms() {
        u[e[0] as usize] = c.clone();
    }
    (k, trim(u))
}

/// Greatest common divisor of two binary forms, monic in the first variable
/// when it involves it, otherwise the monic power of the second variable;
/// constants normalize to 1.
pub fn binary_form_gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    check_binary(f)?;
    check_binary(g)?;
    if f.vars() != g.vars() {
        return Err(Error::Input("binary forms over different variables".into()));
    }
    if f.is_zero() && g.is_zero() {
        return Err(Error::Input("gcd of two zero forms".into()));
    }
    if f.is_zero() || g.is_zero() {
        let h = if f.is_zero() { g } else { f };
        let (k, u) = split(h);
        return Ok(homogenize(f.vars().clone(), k, &univ_monic(u)));
    }
    let (kf, uf) = split(f);
    let (kg, ug) = split(g);
    Ok(homogenize(f.vars().clone(), kf.min(kg), &univ_gcd(uf, ug)))
}

fn homogenize(vars: std::sync::Arc<[String]>, ypow: u32, u: &Univ) -> Polynomial {
    let d = (u.len() - 1) as u32;
    Polynomial::from_terms(
        vars,
        u.iter().enumerate().map(|(i, c)| (vec![i as u32, d - i as u32 + ypow], c.clone())),
    )
}

const DIVISOR_LIMIT: u64 = 1_000_000_000_000;

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > DIVISOR_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

fn univ_eval(u: &Univ, t: &Rational) -> Rational {
    u.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
}

/// Rational points of `P^1` where the binary form vanishes: `[1 : 0]` first
/// when `y` divides the form, then `[t : 1]` for the rational roots `t`
/// (rational root theorem) in increasing order. Returns `None` for the
/// zero form or when coefficients are too large to enumerate divisors.
pub fn rational_projective_roots(f: &Polynomial) -> Result<Option<Vec<[Rational; 2]>>> {
    check_binary(f)?;
    if f.is_zero() {
        return Ok(None);
    }
    let (k, u) = split(f);
    let mut roots: Vec<[Rational; 2]> = Vec::new();
    if k > 0 {
        roots.push([Rational::one(), Rational::zero()]);
    }
    // strip the root t = 0
    let zeros = u.iter().take_while(|c| c.is_zero()).count();
    let u: Univ = u[zeros..].to_vec();
    let mut affine: Vec<Rational> = Vec::new();
    if zeros > 0 {
        affine.push(Rational::zero());
    }
    if u.len() > 1 {
        let (ints, _) = clear_denominators(&u);
        let content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let ints: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
        let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
            return Ok(None);
        };
        for p in &ps {
            for q in &qs {
                if p.gcd(q) != 1 {
                    continue;
                }
                for sign in [1i64, -1] {
                    let t = Rational::new(BigInt::from(*p) * sign, BigInt::from(*q));
                    if univ_eval(&u, &t).is_zero() && !affine.contains(&t) {
                        affine.push(t);
                    }
                }
            }
        }
    }
    affine.sort();
    roots.extend(affine.into_iter().map(|t| [t, Rational::one()]));
    Ok(Some(roots))
}
