//! Rank over small prime fields. Used only as a fast filter and for
//! non-certified hints; every claim that reaches a verdict is rechecked over ℚ.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::Rational;

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn bigint_mod(x: &BigInt, p: u64) -> u64 {
    let m = x % BigInt::from(p);
    let m = if m < BigInt::zero() { m + BigInt::from(p) } else { m };
    m.to_u64().expect("residue fits in u64")
}

/// Image of `r` in `F_p`, or `None` when `p` divides the denominator.
pub fn reduce(r: &Rational, p: u64) -> Option<u64> {
    let d = bigint_mod(r.denom(), p);
    if d == 0 {
        return None;
    }
    Some(bigint_mod(r.numer(), p) * inv_mod(d, p) % p)
}

/// Rank of a row-major `rows × cols` matrix over `F_p`. `p` must be prime
/// and below 2^32.
pub fn rank_mod(mut a: Vec<u64>, rows: usize, cols: usize, p: u64) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !a[i * cols + c].is_multiple_of(p)) else {
            continue;
        };
        if piv != r {
            for j in 0..cols {
                a.swap(piv * cols + j, r * cols + j);
            }
        }
        let inv = inv_mod(a[r * cols + c], p);
        for i in r + 1..rows {
            let f = a[i * cols + c] * inv % p;
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let sub = f * a[r * cols + j] % p;
                a[i * cols + j] = (a[i * cols + j] + p - sub) % p;
            }
        }
        r += 1;
    }
    r
}

/// A nonzero vector in the right kernel over `F_p`, if there is one.
pub fn kernel_vector_mod(mut a: Vec<u64>, rows: usize, cols: usize, p: u64) -> Option<Vec<u64>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !a[i * cols + c].is_multiple_of(p)) else {
            continue;
        };
        for j in 0..cols {
            a.swap(piv * cols + j, r * cols + j);
        }
        let inv = inv_mod(a[r * cols + c], p);
        for j in 0..cols {
            a[r * cols + j] = a[r * cols + j] * inv % p;
        }
        for i in (0..rows).filter(|&i| i != r) {
            let f = a[i * cols + c] % p;
            if f == 0 {
                continue;
            }
            for j in 0..cols {
                let sub = f * a[r * cols + j] % p;
                a[i * cols + j] = (a[i * cols + j] + p - sub) % p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let mut v = vec![0u64; cols];
    v[free] = 1;
    for (row, &pc) in pivots.iter().enumerate() {
        v[pc] = (p - a[row * cols + free] % p) % p;
    }
    Some(v)
}
