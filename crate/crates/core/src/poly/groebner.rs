//! Buchberger's algorithm with the normal selection strategy and both of
//! Buchberger's criteria.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{MonomialOrder, Polynomial};
use crate::exactmath::Rational;

type Mono = Vec<u32>;

/// Terms sorted ascending in the working order; the leading term is last.
#[derive(Clone, Debug)]
struct Sparse {
    terms: Vec<(Mono, Rational)>,
}

impl Sparse {
    fn from_poly(p: &Polynomial, ord: MonomialOrder) -> Self {
        let mut terms: Vec<(Mono, Rational)> =
            p.terms().map(|(e, c)| (e.to_vec(), c.clone())).collect();
        terms.sort_by(|a, b| ord.cmp(&a.0, &b.0));
        Sparse { terms }
    }

    fn to_poly(&self, vars: &Arc<[String]>) -> Polynomial {
        Polynomial::from_terms(vars.clone(), self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Mono {
        &self.terms.last().expect("leading monomial of zero").0
    }

    fn lc(&self) -> &Rational {
        &self.terms.last().expect("leading coefficient of zero").1
    }

    fn make_monic(&mut self) {
        let lc = self.lc().clone();
        if !lc.is_one() {
            for (_, c) in &mut self.terms {
                *c /= &lc;
            }
        }
    }

    /// `self - c * m * g`, merging two ascending term lists.
    fn sub_scaled(&self, c: &Rational, m: &[u32], g: &Sparse, ord: MonomialOrder) -> Sparse {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g
            .terms
            .iter()
            .map(|(e, x)| (mono_mul(e, m), x * c))
            .peekable();
        loop {
            let step = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => ord.cmp(&x.0, &y.0),
            };
            match step {
                Ordering::Less => out.push(a.next().unwrap().clone()),
                Ordering::Greater => {
                    let (e, x) = b.next().unwrap();
                    out.push((e, -x));
                }
                Ordering::Equal => {
                    let (e, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let d = x - y;
                    if !d.is_zero() {
                        out.push((e.clone(), d));
                    }
                }
            }
        }
        Sparse { terms: out }
    }
}

fn mono_mul(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn mono_div(b: &[u32], a: &[u32]) -> Mono {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

fn lcm(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Full reduction (every term, not only the leading one) of `f` by `basis`.
fn reduce_sparse(f: Sparse, basis: &[Sparse], ord: MonomialOrder) -> Sparse {
    let mut p = f;
    let mut rem: Vec<(Mono, Rational)> = Vec::new();
    while let Some((lm, lc)) = p.terms.last() {
        match basis.iter().find(|g| divides(g.lm(), lm)) {
            Some(g) => {
                let m = mono_div(lm, g.lm());
                let c = lc / g.lc();
                p = p.sub_scaled(&c, &m, g, ord);
            }
            None => rem.push(p.terms.pop().unwrap()),
        }
    }
    rem.reverse();
    Sparse { terms: rem }
}

fn s_poly_sparse(f: &Sparse, g: &Sparse, ord: MonomialOrder) -> Sparse {
    let l = lcm(f.lm(), g.lm());
    let mf = mono_div(&l, f.lm());
    let mg = mono_div(&l, g.lm());
    let zero = Sparse { terms: Vec::new() };
    let a = zero.sub_scaled(&-f.lc().recip(), &mf, f, ord);
    a.sub_scaled(&g.lc().recip(), &mg, g, ord)
}

/// Remainder of `f` on full reduction by `basis` (in the given order of
/// preference among divisors).
pub fn reduce(f: &Polynomial, basis: &[Polynomial], ord: MonomialOrder) -> Polynomial {
    let b: Vec<Sparse> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Sparse::from_poly(g, ord))
        .collect();
    reduce_sparse(Sparse::from_poly(f, ord), &b, ord).to_poly(f.vars())
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: MonomialOrder) -> Polynomial {
    s_poly_sparse(&Sparse::from_poly(f, ord), &Sparse::from_poly(g, ord), ord).to_poly(f.vars())
}

type PairQueue = BTreeSet<(u32, usize, usize)>;

/// Makes `r` monic and appends it with its new S-pairs. Returns false when
/// `r` is a constant, leaving `[1]` as the basis.
fn push_element(
    mut r: Sparse,
    basis: &mut Vec<Sparse>,
    queue: &mut PairQueue,
    pending: &mut HashSet<(usize, usize)>,
) -> bool {
    r.make_monic();
    if r.lm().iter().all(|&x| x == 0) {
        basis.clear();
        basis.push(r);
        return false;
    }
    let idx = basis.len();
    for (k, g) in basis.iter().enumerate() {
        let d = lcm(g.lm(), r.lm()).iter().sum();
        queue.insert((d, k, idx));
        pending.insert((k, idx));
    }
    basis.push(r);
    true
}

fn key(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

/// Reduced Gröbner basis of the ideal generated by `gens` (zero generators
/// are skipped). Elements are monic and sorted by ascending leading
/// monomial. S-pairs are processed smallest lcm degree first, ties broken by
/// generator indices, so the output is deterministic.
pub fn groebner_basis(gens: &[Polynomial], ord: MonomialOrder) -> Vec<Polynomial> {
    let Some(vars) = gens.iter().find(|g| !g.is_zero()).map(|g| g.vars().clone()) else {
        return Vec::new();
    };
    let mut basis: Vec<Sparse> = Vec::new();
    let mut queue: PairQueue = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    for g in gens.iter().filter(|g| !g.is_zero()) {
        let r = reduce_sparse(Sparse::from_poly(g, ord), &basis, ord);
        if !r.is_zero() && !push_element(r, &mut basis, &mut queue, &mut pending) {
            return vec![basis[0].to_poly(&vars)];
        }
    }

    while let Some((_, i, j)) = queue.pop_first() {
        pending.remove(&(i, j));
        let (li, lj) = (basis[i].lm(), basis[j].lm());
        if coprime(li, lj) {
            continue;
        }
        let l = lcm(li, lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(basis[k].lm(), &l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_poly_sparse(&basis[i], &basis[j], ord);
        let r = reduce_sparse(s, &basis, ord);
        if !r.is_zero() && !push_element(r, &mut basis, &mut queue, &mut pending) {
            return vec![basis[0].to_poly(&vars)];
        }
    }

    // minimal basis: drop elements whose leading monomial is divisible by
    // another's (for equal leading monomials keep the earliest)
    let n = basis.len();
    let keep: Vec<usize> = (0..n)
        .filter(|&i| {
            !(0..n).any(|j| {
                j != i
                    && divides(basis[j].lm(), basis[i].lm())
                    && (basis[j].lm() != basis[i].lm() || j < i)
            })
        })
        .collect();
    let minimal: Vec<Sparse> = keep.iter().map(|&i| basis[i].clone()).collect();
    let mut reduced: Vec<Sparse> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Sparse> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let mut r = reduce_sparse(minimal[i].clone(), &others, ord);
            r.make_monic();
            r
        })
        .collect();
    reduced.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    reduced.iter().map(|s| s.to_poly(&vars)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{variables, Ideal};
    use proptest::prelude::*;

    fn xy() -> Arc<[String]> {
        Arc::from(vec!["x".to_string(), "y".to_string()])
    }

    fn polys(vars: &Arc<[String]>, ss: &[&str]) -> Vec<Polynomial> {
        ss.iter().map(|s| Polynomial::parse(vars.clone(), s).unwrap()).collect()
    }

    fn as_set(v: Vec<Polynomial>) -> Vec<String> {
        let mut s: Vec<String> = v.iter().map(|p| p.to_string()).collect();
        s.sort();
        s
    }

    #[test]
    fn linear_change() {
        let v = xy();
        let gb = groebner_basis(&polys(&v, &["x + y", "x - y"]), MonomialOrder::Grevlex);
        assert_eq!(as_set(gb), vec!["x", "y"]);
    }

    #[test]
    fn redundant_generator_absorbed() {
        let v = xy();
        let gb = groebner_basis(&polys(&v, &["x - y", "x^2 - y^2"]), MonomialOrder::Grevlex);
        assert_eq!(as_set(gb), vec!["x - y"]);
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let v = xy();
        let gb = groebner_basis(&polys(&v, &["x^2", "x*y"]), MonomialOrder::Grevlex);
        assert_eq!(as_set(gb), vec!["x*y", "x^2"]);
    }

    #[test]
    fn unit_ideal() {
        let v = xy();
        let gb = groebner_basis(&polys(&v, &["x*y - 1", "x", "y"]), MonomialOrder::Lex);
        assert_eq!(as_set(gb), vec!["1"]);
    }

    #[test]
    fn lex_elimination() {
        // x^2 + y^2 - 1, x - y  ⇒ lex basis {x - y, y^2 - 1/2}
        let v = xy();
        let gb = groebner_basis(&polys(&v, &["x^2 + y^2 - 1", "x - y"]), MonomialOrder::Lex);
        assert_eq!(as_set(gb), vec!["x - y", "y^2 - 1/2"]);
    }

    /// Buchberger's criterion: every S-polynomial and every input reduces to 0.
    fn assert_is_groebner(gens: &[Polynomial], gb: &[Polynomial], ord: MonomialOrder) {
        for g in gens {
            assert!(reduce(g, gb, ord).is_zero(), "{g} does not reduce to 0");
        }
        for i in 0..gb.len() {
            for j in i + 1..gb.len() {
                let s = s_polynomial(&gb[i], &gb[j], ord);
                assert!(reduce(&s, gb, ord).is_zero(), "S({}, {}) != 0", gb[i], gb[j]);
            }
        }
    }

    fn homogeneous_quadrics() -> impl Strategy<Value = Vec<Polynomial>> {
        let vars = variables("a", 3);
        let monos: Vec<Vec<u32>> = vec![
            vec![2, 0, 0],
            vec![1, 1, 0],
            vec![1, 0, 1],
            vec![0, 2, 0],
            vec![0, 1, 1],
            vec![0, 0, 2],
        ];
        proptest::collection::vec(proptest::collection::vec(-2i64..=2, 6), 1..4).prop_map(
            move |rows| {
                rows.into_iter()
                    .map(|cs| {
                        Polynomial::from_terms(
                            vars.clone(),
                            monos
                                .iter()
                                .cloned()
                                .zip(cs.into_iter().map(|c| Rational::from_integer(c.into()))),
                        )
                    })
                    .collect()
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn output_satisfies_buchberger_criterion(gens in homogeneous_quadrics()) {
            for ord in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
                let gb = groebner_basis(&gens, ord);
                assert_is_groebner(&gens, &gb, ord);
                for g in &gb {
                    // and every basis element lies in the input ideal's span
                    // by construction; reduced means monic leading terms
                    prop_assert!(g.leading_term(ord).unwrap().1.is_one());
                }
            }
        }

        #[test]
        fn emptiness_is_order_independent(gens in homogeneous_quadrics()) {
            let vars = gens[0].vars().clone();
            let ideal = Ideal::new(vars, gens).unwrap();
            prop_assert_eq!(
                ideal.is_projective_empty_with(MonomialOrder::Grevlex).unwrap(),
                ideal.is_projective_empty_with(MonomialOrder::Lex).unwrap()
            );
        }
    }

    #[test]
    fn deterministic() {
        let v = variables("a", 3);
        let gens = polys(&v, &["a0^2 - a1*a2", "a1^2 - a0*a2", "a2^2 - a0*a1"]);
        let a = groebner_basis(&gens, MonomialOrder::Grevlex);
        let b = groebner_basis(&gens, MonomialOrder::Grevlex);
        assert_eq!(a, b);
        assert_is_groebner(&gens, &a, MonomialOrder::Grevlex);
    }
}
