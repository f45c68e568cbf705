use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::tensor::Tensor3;

/// `n (n-1) ... (n-k+1)`, zero when `k > n`.
fn falling(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    ((n - k + 1)..=n).fold(BigInt::one(), |acc, x| acc * x)
}

fn binomial(n: usize, k: usize) -> BigInt {
    falling(n, k) / falling(k, k)
}

/// The `r`-th transvectant `S_i ⊗ S_j → S_{i+j−2r}`,
/// `(f, g) ↦ Σ_k (−1)^k C(r,k) ∂^r f/∂x^{r−k}∂y^k · ∂^r g/∂x^k∂y^{r−k}`,
/// without normalizing factor. `r = 0` is multiplication.
///
/// On monomials `x^{i−p} y^p` and `x^{j−q} y^q` every summand is a multiple
/// of `x^{i+j−p−q−r} y^{p+q−r}`, so only the slot `s = p + q − r` is hit.
pub fn transvectant_map(i: usize, j: usize, r: usize) -> Result<Tensor3> {
    if r > i.min(j) {
        return Err(Error::Input(format!("transvectant index {r} exceeds min({i}, {j})")));
    }
    let target = i + j - 2 * r;
    let mut t = Tensor3::zeros(i + 1, j + 1, target + 1);
    for p in 0..=i {
        for q in 0..=j {
            if p + q < r || p + q - r > target {
                continue;
            }
            let mut c = BigInt::zero();
            for k in 0..=r {
                let df = falling(i - p, r - k) * falling(p, k);
                let dg = falling(j - q, k) * falling(q, r - k);
                let term = binomial(r, k) * df * dg;
                if k % 2 == 0 {
                    c += term;
                } else {
                    c -= term;
                }
            }
            if !c.is_zero() {
                t.set(p, q, p + q - r, Rational::from_integer(c));
            }
        }
    }
    Ok(t)
}

/// Multiplication of binary forms `S_n ⊗ S_m → S_{n+m}`:
/// `T[k][l][s] = 1` iff `s = k + l`.
pub fn multiplication_tensor(n: usize, m: usize) -> Tensor3 {
    let mut t = Tensor3::zeros(n + 1, m + 1, n + m + 1);
    for k in 0..=n {
        for l in 0..=m {
            t.set(k, l, k + l, Rational::one());
        }
    }
    t
}
