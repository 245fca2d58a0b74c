//! Degree-|G| polynomials in variables `X_g` under `g(X_h) = X_{h g^-1}`:
//! invariant dimension counts, orbit-product sections and orbit separation.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::group::FiniteGroup;

/// Largest group order accepted by the brute-force count.
pub const MAX_BRUTEFORCE_ORDER: usize = 10;
/// Number of hyperplanes tried by [`separates`].
pub const SEPARATION_CAP: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// `g` applied to the monomial: the exponent of `X_h` moves to `X_{h g^-1}`.
    pub fn act(&self, group: &FiniteGroup, g: usize) -> Monomial {
        let gi = group.inv(g);
        let mut e = vec![0; self.exponents.len()];
        for (h, &k) in self.exponents.iter().enumerate() {
            e[group.mul(h, gi)] = k;
        }
        Monomial { exponents: e }
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        self.exponents
            .iter()
            .zip(point)
            .fold(Rational::one(), |acc, (&k, x)| acc * num_traits::pow(x.clone(), k as usize))
    }
}

/// All exponent vectors of length `n` summing to `degree`, lexicographically.
fn monomials(n: usize, degree: u32) -> Vec<Monomial> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(Monomial::new(cur.clone()));
            cur.pop();
            return;
        }
        for k in (0..=left).rev() {
            cur.push(k);
            rec(n, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, degree, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// A homogeneous polynomial invariant under the group, stored as a sparse map.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantPolynomial {
    terms: BTreeMap<Monomial, Rational>,
    degree: u32,
}

type Terms = BTreeMap<Monomial, Rational>;

fn act_terms(terms: &Terms, group: &FiniteGroup, g: usize) -> Terms {
    terms.iter().map(|(m, c)| (m.act(group, g), c.clone())).collect()
}

fn mul_linear(terms: &Terms, form: &[Rational]) -> Terms {
    let mut out = Terms::new();
    for (m, c) in terms {
        for (h, a) in form.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut e = m.exponents.clone();
            e[h] += 1;
            let entry = out.entry(Monomial::new(e)).or_insert_with(Rational::zero);
            *entry += c * a;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

impl InvariantPolynomial {
    /// Checks invariance under every element of `group`.
    pub fn new(group: &FiniteGroup, terms: BTreeMap<Monomial, Rational>) -> Result<Self> {
        let n = group.order();
        let terms: Terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let mut degrees = terms.keys().map(|m| m.degree());
        let degree = degrees.next().unwrap_or(0);
        if degrees.any(|d| d != degree) || terms.keys().any(|m| m.exponents.len() != n) {
            return Err(Error::Dimension("polynomial is not homogeneous in |G| variables".into()));
        }
        let p = InvariantPolynomial { terms, degree };
        if !p.is_invariant(group) {
            return Err(Error::Group("polynomial is not invariant".into()));
        }
        Ok(p)
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_invariant(&self, group: &FiniteGroup) -> bool {
        group.elements().all(|g| act_terms(&self.terms, group, g) == self.terms)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        self.terms.iter().map(|(m, c)| c * m.evaluate(point)).sum()
    }
}

impl std::fmt::Display for InvariantPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", crate::exact::rational_to_string(c))?;
            for (h, &k) in m.exponents.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*X{h}")?,
                    _ => write!(f, "*X{h}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

/// Number of orbits of the group on degree-|G| monomials, by listing the
/// orbits themselves.
pub fn invariant_dimension_bruteforce(group: &FiniteGroup) -> Result<u64> {
    let n = group.order();
    if n > MAX_BRUTEFORCE_ORDER {
        return Err(Error::Scale(format!("brute-force count capped at |G| <= {MAX_BRUTEFORCE_ORDER}, got {n}")));
    }
    let all = monomials(n, n as u32);
    let reps: BTreeSet<Monomial> = all
        .par_iter()
        .map(|m| group.elements().map(|g| m.act(group, g)).min().expect("nonempty group"))
        .collect();
    Ok(reps.len() as u64)
}

/// `(1/|G|) sum_{d | |G|} o(|G|/d) binom(2d - 1, d)`, `o(k)` the number of
/// elements of order `k`.
pub fn invariant_dimension_formula(group: &FiniteGroup) -> Result<u64> {
    let n = group.order();
    let counts = group.order_counts();
    let mut total = BigInt::zero();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let o = counts.get(&(n / d)).copied().unwrap_or(0);
        total += BigInt::from(o) * binomial(BigInt::from(2 * d - 1), BigInt::from(d));
    }
    let n = BigInt::from(n);
    if &total % &n != BigInt::zero() {
        return Err(Error::InternalInvariant(format!("orbit count {total}/{n} is not integral")));
    }
    u64::try_from(total / n).map_err(|_| Error::Scale("count exceeds u64".into()))
}

/// `prod_g g(t)` for the linear form `t = sum_h a_h X_h`.
pub fn invariant_section(group: &FiniteGroup, linear_form: &[Rational]) -> Result<InvariantPolynomial> {
    let n = group.order();
    if linear_form.len() != n {
        return Err(Error::Dimension(format!("linear form has {} coefficients, expected {n}", linear_form.len())));
    }
    if linear_form.iter().all(Zero::is_zero) {
        return Err(Error::Zero("linear form is zero".into()));
    }
    let mut terms = Terms::new();
    terms.insert(Monomial::new(vec![0; n]), Rational::one());
    for g in group.elements() {
        terms = mul_linear(&terms, &translate_form(group, g, linear_form));
    }
    InvariantPolynomial::new(group, terms)
        .map_err(|e| Error::InternalInvariant(format!("orbit product failed its invariance check: {e}")))
}

/// Coefficients of `g(t)`: the coefficient of `X_h` moves to `X_{h g^-1}`.
fn translate_form(group: &FiniteGroup, g: usize, a: &[Rational]) -> Vec<Rational> {
    let gi = group.inv(g);
    let mut out = vec![Rational::zero(); a.len()];
    for (h, c) in a.iter().enumerate() {
        out[group.mul(h, gi)] = c.clone();
    }
    out
}

/// Translates of a point, one per group element: `(g P)_h = P_{h g}`.
pub fn orbit(group: &FiniteGroup, point: &[Rational]) -> Vec<Vec<Rational>> {
    group
        .elements()
        .map(|g| (0..point.len()).map(|h| point[group.mul(h, g)].clone()).collect())
        .collect()
}

fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    (0..a.len()).all(|i| (i..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
}

fn dot(a: &[i64], p: &[Rational]) -> Rational {
    a.iter().zip(p).map(|(&c, x)| Rational::from_integer(BigInt::from(c)) * x).sum()
}

/// Integer vectors of max-norm exactly `k`, lexicographic.
fn shell(n: usize, k: i64) -> impl Iterator<Item = Vec<i64>> {
    let side = (2 * k + 1) as u64;
    (0..side.pow(n as u32)).filter_map(move |mut idx| {
        let mut v = vec![0i64; n];
        for slot in v.iter_mut().rev() {
            *slot = (idx % side) as i64 - k;
            idx /= side;
        }
        v.iter().any(|x| x.abs() == k).then_some(v)
    })
}

/// A separating section for the orbits of `p` and `q`: it vanishes at `p`
/// and at no translate of `q`. The hyperplane is the first integer form
/// through `p` (by max-norm, then lexicographically) avoiding the orbit.
pub fn separates(group: &FiniteGroup, p: &[Rational], q: &[Rational]) -> Result<(bool, InvariantPolynomial)> {
    let n = group.order();
    if p.len() != n || q.len() != n {
        return Err(Error::Dimension(format!("points must have {n} coordinates")));
    }
    if p.iter().all(Zero::is_zero) || q.iter().all(Zero::is_zero) {
        return Err(Error::Zero("projective point with all coordinates zero".into()));
    }
    let q_orbit = orbit(group, q);
    if q_orbit.iter().any(|r| proportional(p, r)) {
        return Err(Error::SameOrbit);
    }
    let mut tried = 0usize;
    for k in 1.. {
        for a in shell(n, k) {
            tried += 1;
            if tried > SEPARATION_CAP {
                return Err(Error::SearchCap(SEPARATION_CAP));
            }
            if dot(&a, p).is_zero() && q_orbit.iter().all(|r| !dot(&a, r).is_zero()) {
                let form: Vec<Rational> = a.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect();
                let s = invariant_section(group, &form)?;
                if !s.evaluate(p).is_zero() || q_orbit.iter().any(|r| s.evaluate(r).is_zero()) {
                    return Err(Error::InternalInvariant("section does not separate the orbits".into()));
                }
                return Ok((true, s));
            }
        }
    }
    unreachable!("the shell loop only exits by returning")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn groups() -> Vec<(&'static str, FiniteGroup)> {
        vec![
            ("C2", FiniteGroup::cyclic(2)),
            ("C3", FiniteGroup::cyclic(3)),
            ("C4", FiniteGroup::cyclic(4)),
            ("V4", FiniteGroup::klein_four()),
            ("C5", FiniteGroup::cyclic(5)),
            ("S3", FiniteGroup::symmetric(3)),
            ("C6", FiniteGroup::cyclic(6)),
        ]
    }

    /// Burnside with fixed monomials counted one by one.
    fn burnside(group: &FiniteGroup) -> u64 {
        let all = monomials(group.order(), group.order() as u32);
        let fixed: usize = group
            .elements()
            .map(|g| all.iter().filter(|m| m.act(group, g) == **m).count())
            .sum();
        (fixed / group.order()) as u64
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(2, 2).len(), 3);
        assert_eq!(monomials(4, 4).len(), 35);
        assert!(monomials(3, 3).iter().all(|m| m.degree() == 3));
    }

    #[test]
    fn dimensions_agree() {
        let expected = [("C2", 2), ("C3", 4), ("C4", 10), ("V4", 11)];
        for (name, g) in groups() {
            let b = invariant_dimension_bruteforce(&g).unwrap();
            assert_eq!(b, invariant_dimension_formula(&g).unwrap(), "{name}");
            assert_eq!(b, burnside(&g), "{name}");
            if let Some(&(_, v)) = expected.iter().find(|e| e.0 == name) {
                assert_eq!(b, v, "{name}");
            }
        }
        let big = FiniteGroup::direct_product(&FiniteGroup::cyclic(3), &FiniteGroup::cyclic(4));
        assert!(matches!(invariant_dimension_bruteforce(&big), Err(Error::Scale(_))));
        assert!(invariant_dimension_formula(&big).is_ok());
    }

    #[test]
    fn sections() {
        let c2 = FiniteGroup::cyclic(2);
        let s = invariant_section(&c2, &[int(1), int(0)]).unwrap();
        assert_eq!(s.terms().len(), 1);
        assert_eq!(s.terms().get(&Monomial::new(vec![1, 1])), Some(&int(1)));
        assert_eq!(s.evaluate(&[int(1), int(1)]), int(1));
        let c3 = FiniteGroup::cyclic(3);
        let s = invariant_section(&c3, &[int(1), int(1), int(1)]).unwrap();
        // (X0 + X1 + X2)^3 at (1, 2, 3)
        assert_eq!(s.evaluate(&[int(1), int(2), int(3)]), int(216));
        assert!(matches!(invariant_section(&c3, &vec![int(0); 3]), Err(Error::Zero(_))));
        let s3 = FiniteGroup::symmetric(3);
        let s = invariant_section(&s3, &[int(2), int(-1), int(0), int(3), int(1), int(0)]).unwrap();
        assert!(s.is_invariant(&s3));
        assert_eq!(s.degree(), 6);
    }

    #[test]
    fn non_invariant_rejected() {
        let c2 = FiniteGroup::cyclic(2);
        let mut t = BTreeMap::new();
        t.insert(Monomial::new(vec![2, 0]), int(1));
        assert!(InvariantPolynomial::new(&c2, t).is_err());
    }

    #[test]
    fn separation() {
        let c2 = FiniteGroup::cyclic(2);
        let (ok, s) = separates(&c2, &[int(1), int(0)], &[int(1), int(1)]).unwrap();
        assert!(ok);
        assert!(s.evaluate(&[int(1), int(0)]).is_zero());
        assert!(!s.evaluate(&[int(1), int(1)]).is_zero());
        assert!(separates(&c2, &[int(1), int(1)], &[int(1), int(0)]).is_ok());
        assert!(matches!(separates(&c2, &[int(1), int(0)], &[int(0), int(3)]), Err(Error::SameOrbit)));
        let c3 = FiniteGroup::cyclic(3);
        assert!(separates(&c3, &[int(1), int(0), int(0)], &[int(1), int(1), int(1)]).unwrap().0);
        assert!(separates(&c3, &[int(1), int(1), int(1)], &[int(1), int(0), int(0)]).unwrap().0);
    }
}
