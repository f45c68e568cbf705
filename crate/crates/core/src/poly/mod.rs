//! Multivariate polynomials over ℚ, Gröbner bases, and projective emptiness.

mod binary;
mod groebner;
mod minors;
mod order;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

pub use binary::{binary_form_gcd, rational_projective_roots};
pub use groebner::{groebner_basis, reduce, s_polynomial};
pub use minors::{maximal_minors, minors, PolyMatrix};
pub use order::MonomialOrder;

use crate::error::{Error, Result};
use crate::exactmath::{parse_rational, rational_to_string, Rational};

/// Variable names `{prefix}0 .. {prefix}{n-1}`.
pub fn variables(prefix: &str, n: usize) -> Arc<[String]> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Polynomial over ℚ in a fixed, ordered list of variables. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    vars: Arc<[String]>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Polynomial {
    pub fn zero(vars: Arc<[String]>) -> Self {
        Self { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Arc<[String]>, c: Rational) -> Self {
        let n = vars.len();
        Self::from_terms(vars, [(vec![0; n], c)])
    }

    /// The `i`-th variable as a polynomial.
    pub fn var(vars: Arc<[String]>, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::from_terms(vars, [(e, Rational::one())])
    }

    /// The linear form `Σ c_i x_i`.
    pub fn linear_form(vars: Arc<[String]>, coeffs: &[Rational]) -> Self {
        assert_eq!(vars.len(), coeffs.len(), "one coefficient per variable");
        let n = vars.len();
        let terms = coeffs.iter().enumerate().map(|(i, c)| {
            let mut e = vec![0; n];
            e[i] = 1;
            (e, c.clone())
        });
        Self::from_terms(vars, terms)
    }

    /// Sums like terms and drops zeros. Panics on exponent vectors of the
    /// wrong length.
    pub fn from_terms(
        vars: Arc<[String]>,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        assert_eq!(e.len(), self.vars.len(), "exponent vector length");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&x| x == 0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// The common degree of all terms; `None` for the zero polynomial or an
    /// inhomogeneous one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn leading_term(&self, ord: MonomialOrder) -> Option<(&[u32], &Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(a.0, b.0))
            .map(|(e, c)| (e.as_slice(), c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars.clone());
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars() {
            return Err(Error::Dimension(format!(
                "point of length {} for {} variables",
                point.len(),
                self.nvars()
            )));
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let terms = self.terms.iter().filter(|(e, _)| e[i] > 0).map(|(e, c)| {
            let mut e2 = e.clone();
            e2[i] -= 1;
            (e2, c * Rational::from_integer(e[i].into()))
        });
        Self::from_terms(self.vars.clone(), terms)
    }

    /// Same coefficients over another variable list of equal length.
    pub fn rename(&self, vars: Arc<[String]>) -> Self {
        assert_eq!(vars.len(), self.nvars());
        Self { vars, terms: self.terms.clone() }
    }

    pub fn parse(vars: Arc<[String]>, s: &str) -> Result<Self> {
        parse_polynomial(vars, s)
    }

    fn check_vars(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "polynomials over different variable lists"
        );
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

fn monomial_product(e1: &[u32], e2: &[u32]) -> Vec<u32> {
    e1.iter().zip(e2).map(|(a, b)| a + b).collect()
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_vars(rhs);
        let mut out = Polynomial::zero(self.vars.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(monomial_product(e1, e2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    /// Terms in descending grevlex order, explicit rational coefficients,
    /// e.g. `2/3*a0^2*a1 - a1^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| MonomialOrder::Grevlex.cmp(b.0, a.0));
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            let is_const = e.iter().all(|&x| x == 0);
            if !abs.is_one() || is_const {
                factors.push(rational_to_string(&abs));
            }
            for (name, &x) in self.vars.iter().zip(e.iter()) {
                match x {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{x}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

fn parse_polynomial(vars: Arc<[String]>, s: &str) -> Result<Polynomial> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut prev = None;
    for ch in compact.chars() {
        let signed = matches!(prev, Some('^' | '*' | '/'));
        let first = prev.is_none();
        prev = Some(ch);
        if (ch == '+' || ch == '-') && !signed {
            if !first {
                if cur.is_empty() {
                    return Err(Error::Parse(format!("dangling sign in {s:?}")));
                }
                pieces.push((neg, std::mem::take(&mut cur)));
            }
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err(Error::Parse(format!("dangling sign in {s:?}")));
    }
    pieces.push((neg, cur));

    let mut p = Polynomial::zero(vars.clone());
    for (neg, piece) in pieces {
        let mut coeff = Rational::one();
        let mut e = vec![0u32; vars.len()];
        for factor in piece.split('*') {
            let (base, exp) = match factor.split_once('^') {
                Some((b, x)) => {
                    let x = u32::from_str(x)
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
                    (b, x)
                }
                None => (factor, 1),
            };
            if let Some(idx) = vars.iter().position(|v| v == base) {
                e[idx] += exp;
            } else if base.starts_with(|c: char| c.is_ascii_digit()) {
                coeff *= num_traits::pow(parse_rational(base)?, exp as usize);
            } else {
                return Err(Error::Parse(format!("unknown variable {base:?}")));
            }
        }
        if neg {
            coeff = -coeff;
        }
        p.add_term(e, coeff);
    }
    Ok(p)
}

/// A list of generators over one variable list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    vars: Arc<[String]>,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(vars: Arc<[String]>, generators: Vec<Polynomial>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.vars() != &vars) {
            return Err(Error::Input(format!(
                "generator {g} is over {:?}, ideal over {:?}",
                g.vars(),
                vars
            )));
        }
        Ok(Self { vars, generators })
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Reduced Gröbner basis. Zero generators are ignored.
    pub fn groebner_basis(&self, ord: MonomialOrder) -> Ideal {
        let gens: Vec<Polynomial> =
            self.generators.iter().filter(|g| !g.is_zero()).cloned().collect();
        Ideal { vars: self.vars.clone(), generators: groebner_basis(&gens, ord) }
    }

    /// Whether the projective zero set over the algebraic closure is empty,
    /// using the default order.
    pub fn is_projective_empty(&self) -> Result<bool> {
        self.is_projective_empty_with(MonomialOrder::default())
    }

    pub fn is_projective_empty_with(&self, ord: MonomialOrder) -> Result<bool> {
        self.check_homogeneous()?;
        Ok(basis_certifies_empty(&self.groebner_basis(ord).generators, ord))
    }

    pub fn check_homogeneous(&self) -> Result<()> {
        match self.generators.iter().find(|g| !g.is_homogeneous()) {
            Some(g) => Err(Error::Input(format!("inhomogeneous generator {g}"))),
            None => Ok(()),
        }
    }

    pub fn leading_monomials(&self, ord: MonomialOrder) -> Vec<Vec<u32>> {
        self.generators
            .iter()
            .filter_map(|g| g.leading_term(ord).map(|(e, _)| e.to_vec()))
            .collect()
    }
}

/// Projective Nullstellensatz test on a Gröbner basis of a homogeneous
/// ideal: the quotient is finite-dimensional iff every variable has a pure
/// power among the leading monomials (a unit generator covers all of them).
pub fn basis_certifies_empty(basis: &[Polynomial], ord: MonomialOrder) -> bool {
    if basis.iter().any(Polynomial::is_unit) {
        return true;
    }
    let Some(n) = basis.first().map(Polynomial::nvars) else {
        return false;
    };
    let lms: Vec<&[u32]> = basis.iter().filter_map(|g| g.leading_term(ord)).map(|t| t.0).collect();
    (0..n).all(|i| {
        lms.iter().any(|e| e[i] > 0 && e.iter().enumerate().all(|(j, &x)| j == i || x == 0))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Arc<[String]> {
        Arc::from(vec!["x".to_string(), "y".to_string()])
    }

    fn p(vars: &Arc<[String]>, s: &str) -> Polynomial {
        Polynomial::parse(vars.clone(), s).unwrap()
    }

    #[test]
    fn display_and_parse() {
        let a = variables("a", 2);
        let f = p(&a, "2/3*a0^2*a1 - a1^3");
        assert_eq!(f.to_string(), "2/3*a0^2*a1 - a1^3");
        assert_eq!(p(&a, "-a1^3 + 2/3 * a1 * a0^2"), f);
        assert_eq!(p(&a, "3").to_string(), "3");
        assert_eq!(p(&a, "-1*a0").to_string(), "-a0");
        assert_eq!(Polynomial::zero(a.clone()).to_string(), "0");
        assert!(Polynomial::parse(a.clone(), "a0 + z").is_err());
        assert!(Polynomial::parse(a.clone(), "a0 +").is_err());
        assert!(Polynomial::parse(a.clone(), "é + a1").is_err());
        assert_eq!(Polynomial::parse(a.clone(), "-a0 - 2*a1^2").unwrap().to_string(), "-2*a1^2 - a0");
        assert!(Polynomial::parse(a, "").is_err());
    }

    #[test]
    fn arithmetic() {
        let v = xy();
        let f = p(&v, "x + y");
        let g = p(&v, "x - y");
        assert_eq!(&f * &g, p(&v, "x^2 - y^2"));
        assert_eq!(&f + &g, p(&v, "2*x"));
        assert!((&f - &f).is_zero());
        assert_eq!(p(&v, "x^2*y").derivative(0), p(&v, "2*x*y"));
        let pt = [Rational::from_integer(2.into()), Rational::from_integer(3.into())];
        assert_eq!(p(&v, "x^2 - y").eval(&pt).unwrap(), Rational::one());
    }

    #[test]
    fn homogeneity() {
        let v = xy();
        assert_eq!(p(&v, "x^2 + x*y").homogeneous_degree(), Some(2));
        assert_eq!(p(&v, "x^2 + y").homogeneous_degree(), None);
        assert!(Polynomial::zero(v).is_homogeneous());
    }

    #[test]
    fn projective_emptiness_examples() {
        let v = xy();
        let i = Ideal::new(v.clone(), vec![p(&v, "x"), p(&v, "y")]).unwrap();
        assert!(i.is_projective_empty().unwrap());
        let i = Ideal::new(v.clone(), vec![p(&v, "x^2")]).unwrap();
        assert!(!i.is_projective_empty().unwrap());
        let a = variables("a", 2);
        let i = Ideal::new(a.clone(), vec![p(&a, "a0^2"), p(&a, "a0*a1"), p(&a, "a1^2")]).unwrap();
        assert!(i.is_projective_empty().unwrap());
    }

    #[test]
    fn unit_ideal_is_empty_and_zero_ideal_is_not() {
        let v = xy();
        let i = Ideal::new(v.clone(), vec![p(&v, "5")]).unwrap();
        assert!(i.is_projective_empty().unwrap());
        let i = Ideal::new(v.clone(), vec![Polynomial::zero(v.clone())]).unwrap();
        assert!(!i.is_projective_empty().unwrap());
        let i = Ideal::new(v, vec![]).unwrap();
        assert!(!i.is_projective_empty().unwrap());
    }

    #[test]
    fn inhomogeneous_rejected() {
        let v = xy();
        let i = Ideal::new(v.clone(), vec![p(&v, "x^2 + y")]).unwrap();
        assert!(matches!(i.is_projective_empty(), Err(Error::Input(_))));
    }

    #[test]
    fn mismatched_variables_rejected() {
        let v = xy();
        let a = variables("a", 2);
        assert!(Ideal::new(v, vec![p(&a, "a0")]).is_err());
    }
}
