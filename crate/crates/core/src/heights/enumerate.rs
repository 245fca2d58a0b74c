use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{Ball, Rational};
use crate::group::{FiniteGroup, GroupAlgebraElement};
use crate::pairs::{GAlgebra, Pair};

/// Points of the split torsor with height at most `bound`, one per normal
/// element, with counts at `1, 2, 4, ...` below the bound and at the bound.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub group: Arc<FiniteGroup>,
    pub bound: Rational,
    pub points: Vec<SplitPoint>,
    pub checkpoints: Vec<(Rational, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPoint {
    /// Primitive integer vector with positive coordinate sum.
    pub primitive: Vec<i64>,
    /// `H^2 = (sum m_i^2)^|G|`.
    pub height_squared: BigInt,
}

impl SplitPoint {
    /// `x = m / sum(m)`.
    pub fn x(&self) -> Vec<Rational> {
        let s: i64 = self.primitive.iter().sum();
        self.primitive
            .iter()
            .map(|&m| Rational::new(BigInt::from(m), BigInt::from(s)))
            .collect()
    }

    pub fn norm_squared(&self) -> i64 {
        self.primitive.iter().map(|m| m * m).sum()
    }

    pub fn height(&self, bits: u32) -> Ball {
        let n = self.primitive.len() as u32;
        let s = Ball::exact(Rational::from_integer(BigInt::from(self.norm_squared())));
        if n % 2 == 0 {
            s.pow(n / 2)
        } else {
            s.sqrt(bits).pow(n)
        }
    }

    pub fn pair(&self, group: &Arc<FiniteGroup>) -> Result<Pair> {
        Pair::new(GAlgebra::split(group.clone()), self.x())
    }
}

impl Enumeration {
    /// Number of points with `H <= b`.
    pub fn count_up_to(&self, b: &Rational) -> usize {
        let b2 = b * b;
        self.points
            .iter()
            .take_while(|p| Rational::from_integer(p.height_squared.clone()) <= b2)
            .count()
    }
}

/// Largest `M` with `M^(2n) <= b2`.
fn coordinate_bound(b2: &Rational, n: u32) -> i64 {
    let mut m: i64 = 0;
    while Rational::from_integer(num_traits::pow(BigInt::from(m + 1), 2 * n as usize)) <= *b2 {
        m += 1;
    }
    m
}

const MAX_BOX: u128 = 50_000_000;

/// All normal points of the split algebra of `group` with `H <= bound`,
/// sorted by height and then by primitive vector. The result does not depend
/// on the thread count.
pub fn enumerate_split_points(group: Arc<FiniteGroup>, bound: &Rational) -> Result<Enumeration> {
    let n = group.order();
    if !bound.is_positive() {
        return Ok(Enumeration {
            group,
            bound: bound.clone(),
            points: Vec::new(),
            checkpoints: Vec::new(),
        });
    }
    let b2 = bound * bound;
    let m = coordinate_bound(&b2, n as u32);
    let side = (2 * m + 1) as u128;
    if side.checked_pow(n as u32).map_or(true, |v| v > MAX_BOX) {
        return Err(Error::Scale(format!("search box of side {side} in dimension {n} is too large")));
    }
    let rest_total = side.pow(n as u32 - 1) as u64;
    let found: Vec<Vec<SplitPoint>> = (-m..=m)
        .into_par_iter()
        .map(|m0| {
            let mut out = Vec::new();
            let mut v = vec![0i64; n];
            v[0] = m0;
            for mut idx in 0..rest_total {
                for slot in v[1..].iter_mut().rev() {
                    *slot = (idx % side as u64) as i64 - m;
                    idx /= side as u64;
                }
                let s: i64 = v.iter().sum();
                if s <= 0 {
                    continue;
                }
                let norm: i64 = v.iter().map(|a| a * a).sum();
                let h2 = num_traits::pow(BigInt::from(norm), n);
                if Rational::from_integer(h2.clone()) > b2 {
                    continue;
                }
                if v.iter().fold(0i64, |g, a| g.gcd(a)) != 1 {
                    continue;
                }
                let u = GroupAlgebraElement::new(
                    group.clone(),
                    v.iter().map(|&a| Rational::from_integer(BigInt::from(a))).collect(),
                )
                .expect("length");
                if crate::group::Scalar::is_zero(&u.group_determinant().expect("nonempty")) {
                    continue;
                }
                out.push(SplitPoint {
                    primitive: v.clone(),
                    height_squared: h2,
                });
            }
            out
        })
        .collect();
    let mut points: Vec<SplitPoint> = found.into_iter().flatten().collect();
    points.sort_by(|a, b| {
        a.height_squared
            .cmp(&b.height_squared)
            .then_with(|| a.primitive.cmp(&b.primitive))
    });
    let mut e = Enumeration {
        group,
        bound: bound.clone(),
        points,
        checkpoints: Vec::new(),
    };
    let mut marks = Vec::new();
    let mut c = Rational::one();
    while &c < bound {
        marks.push(c.clone());
        c *= Rational::from_integer(BigInt::from(2));
    }
    marks.push(bound.clone());
    e.checkpoints = marks.into_iter().map(|b| (b.clone(), e.count_up_to(&b))).collect();
    debug_assert!(e.points.iter().all(|p| !p.height_squared.is_zero()));
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn c2_counts() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let e = enumerate_split_points(g, &int(10)).unwrap();
        assert_eq!(e.count_up_to(&int(1)), 2);
        assert_eq!(e.count_up_to(&rat(3, 2)), 2);
        assert_eq!(e.count_up_to(&int(2)), 2);
        assert_eq!(e.count_up_to(&int(5)), 6);
        assert_eq!(e.count_up_to(&int(10)), 10);
        let marks: Vec<usize> = e.checkpoints.iter().map(|c| c.1).collect();
        assert_eq!(marks, vec![2, 2, 2, 6, 10]);
    }

    #[test]
    fn points_are_normal_with_matching_heights() {
        let g = Arc::new(FiniteGroup::cyclic(3));
        let e = enumerate_split_points(g.clone(), &int(200)).unwrap();
        assert!(!e.points.is_empty());
        let r = rat(1, 1 << 20);
        for p in e.points.iter().take(20) {
            let pair = p.pair(&g).unwrap();
            let h = crate::heights::height(&pair, &r).unwrap();
            assert!(h.height.overlaps(&p.height(40)));
        }
    }

    #[test]
    fn empty_and_too_large() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        assert!(enumerate_split_points(g.clone(), &int(0)).unwrap().points.is_empty());
        assert!(enumerate_split_points(g, &rat(1, 2)).unwrap().points.is_empty());
        let s3 = Arc::new(FiniteGroup::symmetric(3));
        assert!(matches!(enumerate_split_points(s3, &int(1_000_000_000)), Err(Error::Scale(_))));
    }
}
