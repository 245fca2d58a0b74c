mod common;

use std::sync::Arc;

use galois_heights::exact::{int, rat, Ball, HnfBasis, Rational};
use galois_heights::group::FiniteGroup;
use galois_heights::heights::{enumerate_split_points, finite_part_direct, finite_part_invariant, height};
use galois_heights::invariants::{invariant_section, separates};
use galois_heights::lattice::generalized_index;
use galois_heights::pairs::{GAlgebra, Pair};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn rows(dim: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec(rational(), dim), dim..dim + 3)
}

fn groups() -> Vec<FiniteGroup> {
    vec![
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(3),
        FiniteGroup::cyclic(4),
        FiniteGroup::klein_four(),
        FiniteGroup::symmetric(3),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hnf_is_canonical(r in rows(3)) {
        let Ok(h) = HnfBasis::from_rows(&r, 3) else { return Ok(()) };
        let b = h.basis();
        for i in 0..3 {
            prop_assert!(b[i][i].is_positive());
            for j in 0..i {
                prop_assert!(b[i][j].is_zero());
                prop_assert!(!b[j][i].is_negative() && b[j][i] < b[i][i]);
            }
        }
        let g = b.iter().flatten().fold(h.denominator().clone(), |a, v| num_integer::Integer::gcd(&a, v));
        prop_assert_eq!(g, BigInt::from(1));
        // the same lattice from its own basis, reordered
        let mut again = h.rational_rows();
        again.reverse();
        prop_assert_eq!(HnfBasis::from_rows(&again, 3).unwrap(), h.clone());
        for v in &r {
            prop_assert!(h.contains(v));
        }
    }

    #[test]
    fn ball_arithmetic_encloses(a in rational(), b in rational(), ra in 0i64..5, rb in 0i64..5, bits in 4u32..60) {
        let x = Ball::new(a.clone(), rat(ra, 100));
        let y = Ball::new(b.clone(), rat(rb, 100));
        prop_assert!(x.add(&y).contains(&(&a + &b)));
        prop_assert!(x.mul(&y).contains(&(&a * &b)));
        prop_assert!(x.sub(&y).round(bits).contains(&(&a - &b)));
        prop_assert!(x.pow(3).contains(&(&a * &a * &a)));
        let sq = Ball::exact(&a * &a).sqrt(bits);
        prop_assert!(sq.contains(&a.abs()));
        prop_assert!(!sq.rad.is_negative());
    }

    #[test]
    fn generalized_index_is_multiplicative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = zeta7_plus().field().clone();
        let a = random_lattice(&mut rng, &k, 5, 3);
        let b = random_lattice(&mut rng, &k, 5, 3);
        let c = random_lattice(&mut rng, &k, 5, 3);
        let ab = generalized_index(&a, &b).unwrap();
        let bc = generalized_index(&b, &c).unwrap();
        prop_assert_eq!(generalized_index(&a, &c).unwrap(), ab * bc);
        prop_assert_eq!(generalized_index(&a, &a).unwrap(), int(1));
    }

    #[test]
    fn finite_parts_agree_and_height_is_translate_invariant(gi in 0usize..5, seed in any::<u64>()) {
        let group = groups().swap_remove(gi);
        let alg = split(group);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_trace_one(&mut rng, alg.dim(), 6, 5);
        let Ok(p) = Pair::new(alg.clone(), x.clone()) else { return Ok(()) };
        let f = finite_part_invariant(&p).unwrap();
        prop_assert_eq!(&f, &finite_part_direct(&p).unwrap());
        let h = height(&p, &rat(1, 1 << 30)).unwrap().height;
        for g in alg.group().elements() {
            let q = Pair::new(alg.clone(), alg.translate(g, &x)).unwrap();
            prop_assert_eq!(&finite_part_invariant(&q).unwrap(), &f);
            prop_assert!(height(&q, &rat(1, 1 << 30)).unwrap().height.overlaps(&h));
        }
    }

    #[test]
    fn field_height_is_translate_invariant(seed in any::<u64>()) {
        let alg = GAlgebra::field(zeta7_plus());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_trace_one(&mut rng, alg.dim(), 4, 4);
        let Ok(p) = Pair::new(alg.clone(), x.clone()) else { return Ok(()) };
        let r = height(&p, &rat(1, 1 << 30)).unwrap();
        prop_assert!(r.finite_parts_agree());
        for g in alg.group().elements() {
            let q = Pair::new(alg.clone(), alg.translate(g, &x)).unwrap();
            prop_assert!(height(&q, &rat(1, 1 << 30)).unwrap().height.overlaps(&r.height));
        }
    }

    #[test]
    fn section_is_invariant(gi in 0usize..5, form in prop::collection::vec(-3i64..=3, 6)) {
        let group = groups().swap_remove(gi);
        let t: Vec<Rational> = form.iter().take(group.order()).map(|&c| int(c)).collect();
        if t.iter().all(Zero::is_zero) {
            return Ok(());
        }
        let s = invariant_section(&group, &t).unwrap();
        prop_assert!(s.is_invariant(&group));
        prop_assert_eq!(s.degree() as usize, group.order());
    }

    #[test]
    fn separation_matches_orbits(gi in 0usize..5, p in prop::collection::vec(-2i64..=2, 6), q in prop::collection::vec(-2i64..=2, 6)) {
        let group = groups().swap_remove(gi);
        let n = group.order();
        let p: Vec<Rational> = p[..n].iter().map(|&c| int(c)).collect();
        let q: Vec<Rational> = q[..n].iter().map(|&c| int(c)).collect();
        if p.iter().all(Zero::is_zero) || q.iter().all(Zero::is_zero) {
            prop_assert!(separates(&group, &p, &q).is_err());
            return Ok(());
        }
        let alg = GAlgebra::split(Arc::new(group.clone()));
        let same = group.elements().any(|g| {
            let r = alg.translate(g, &p);
            (0..n).all(|i| (0..n).all(|j| &r[i] * &q[j] == &r[j] * &q[i]))
        });
        match separates(&group, &p, &q) {
            Ok((true, f)) => {
                prop_assert!(!same);
                prop_assert!(f.is_invariant(&group));
                prop_assert_ne!(f.evaluate(&p), f.evaluate(&q));
            }
            Ok((false, _)) => prop_assert!(false, "separates returned false without error"),
            Err(_) => prop_assert!(same),
        }
    }
}

#[test]
fn enumeration_counts_are_monotone() {
    for group in groups().into_iter().take(3) {
        let e = enumerate_split_points(Arc::new(group), &int(20)).unwrap();
        let counts: Vec<usize> = e.checkpoints.iter().map(|(_, c)| *c).collect();
        assert!(counts.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(*counts.last().unwrap(), e.points.len());
        assert!(e.points.windows(2).all(|w| w[0].height_squared <= w[1].height_squared));
    }
}
