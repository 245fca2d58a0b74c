use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use super::{GAlgebra, Pair};
use crate::exact::Rational;
use crate::lattice::KLattice;

/// Candidates `m / q` with `|m_i| <= max_numerator` and `1 <= q <= max_denominator`,
/// optionally restricted to a lattice of the algebra (field algebras only).
#[derive(Clone, Debug)]
pub struct SearchBox {
    pub max_numerator: u32,
    pub max_denominator: u32,
    pub within: Option<KLattice>,
}

impl SearchBox {
    pub fn new(max_numerator: u32, max_denominator: u32) -> Self {
        SearchBox {
            max_numerator,
            max_denominator,
            within: None,
        }
    }

    pub fn within(mut self, lattice: KLattice) -> Self {
        self.within = Some(lattice);
        self
    }
}

fn vectors(n: i64, dim: usize) -> impl Iterator<Item = Vec<i64>> {
    let side = (2 * n + 1) as usize;
    let total = side.checked_pow(dim as u32).unwrap_or(0);
    (0..total).map(move |mut idx| {
        let mut v = vec![0i64; dim];
        for slot in v.iter_mut().rev() {
            *slot = (idx % side) as i64 - n;
            idx /= side;
        }
        v
    })
}

/// Every distinct vector in the box satisfying `keep`, sorted lexicographically.
/// Work is split by denominator and first coordinate; the result does not
/// depend on the thread count.
pub fn enumerate_box<F>(algebra: &GAlgebra, bx: &SearchBox, keep: F) -> Vec<Vec<Rational>>
where
    F: Fn(&[Rational]) -> bool + Sync,
{
    let dim = algebra.dim();
    if dim == 0 || bx.max_denominator == 0 {
        return Vec::new();
    }
    let n = bx.max_numerator as i64;
    let jobs: Vec<(i64, i64)> = (1..=bx.max_denominator as i64)
        .flat_map(|q| (-n..=n).map(move |m0| (q, m0)))
        .collect();
    let found: Vec<Vec<Vec<Rational>>> = jobs
        .par_iter()
        .map(|&(q, m0)| {
            let den = BigInt::from(q);
            let mut out = Vec::new();
            for rest in vectors(n, dim - 1) {
                // the reduced form will be reached at its own denominator
                let g = rest.iter().fold(m0.unsigned_abs(), |acc, &m| gcd(acc, m.unsigned_abs()));
                if q > 1 && gcd(g, q as u64) != 1 {
                    continue;
                }
                let mut x = Vec::with_capacity(dim);
                x.push(Rational::new(BigInt::from(m0), den.clone()));
                x.extend(rest.iter().map(|&m| Rational::new(BigInt::from(m), den.clone())));
                if let (Some(l), GAlgebra::Field(a)) = (&bx.within, algebra) {
                    let e = a.field().element(x.clone()).expect("length");
                    if !l.contains(&e) {
                        continue;
                    }
                }
                if keep(&x) {
                    out.push(x);
                }
            }
            out
        })
        .collect();
    let set: BTreeSet<Vec<Rational>> = found.into_iter().flatten().collect();
    set.into_iter().collect()
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Normal elements in the box, as pairs.
pub fn normal_search(algebra: &GAlgebra, bx: &SearchBox) -> Vec<Pair> {
    enumerate_box(algebra, bx, |x| algebra.trace(x).is_one() && algebra.is_normal(x))
        .into_iter()
        .map(|x| Pair::new(algebra.clone(), x).expect("filtered for normality"))
        .collect()
}

/// Self-dual normal elements in the box, exactly verified, in lexicographic order.
pub fn selfdual_search(algebra: &GAlgebra, bx: &SearchBox) -> Vec<Pair> {
    enumerate_box(algebra, bx, |x| {
        algebra.trace(x).is_one() && algebra.is_normal(x) && algebra.self_dual_unchecked(x)
    })
    .into_iter()
    .map(|x| Pair::new(algebra.clone(), x).expect("filtered for normality"))
    .collect()
}
