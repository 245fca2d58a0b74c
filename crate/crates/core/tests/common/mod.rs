#![allow(dead_code)]

use std::sync::Arc;

use galois_heights::exact::{rat, Rational};
use galois_heights::field::{GaloisAction, NumberField};
use galois_heights::group::FiniteGroup;
use galois_heights::lattice::{KLattice, Order};
use galois_heights::pairs::GAlgebra;
use num_bigint::BigInt;
use num_integer::Integer;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Q(sqrt 2) with the nontrivial automorphism.
pub fn sqrt2() -> GaloisAction {
    let k = NumberField::from_i64(&[-2, 0, 1]).unwrap();
    GaloisAction::from_generator_images(&k, Arc::new(FiniteGroup::cyclic(2)), &[(1, k.generator().neg())]).unwrap()
}

/// Q(sqrt -3) as Q[t]/(t^2 + 3).
pub fn sqrt_m3() -> GaloisAction {
    let k = NumberField::from_i64(&[3, 0, 1]).unwrap();
    GaloisAction::from_generator_images(&k, Arc::new(FiniteGroup::cyclic(2)), &[(1, k.generator().neg())]).unwrap()
}

/// The cubic subfield of the 7th cyclotomic field, t = zeta + zeta^-1.
pub fn zeta7_plus() -> GaloisAction {
    let k = NumberField::from_i64(&[-1, -2, 1, 1]).unwrap();
    let s = k.element_i64(&[-2, 0, 1]).unwrap();
    GaloisAction::from_generator_images(&k, Arc::new(FiniteGroup::cyclic(3)), &[(1, s)]).unwrap()
}

pub fn split(group: FiniteGroup) -> GAlgebra {
    GAlgebra::split(Arc::new(group))
}

pub fn random_rational(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    rat(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

/// Random vector with coordinate sum 1.
pub fn random_trace_one(rng: &mut ChaCha8Rng, n: usize, num: i64, den: i64) -> Vec<Rational> {
    let mut x: Vec<Rational> = (1..n).map(|_| random_rational(rng, num, den)).collect();
    let s: Rational = x.iter().sum();
    x.insert(0, Rational::from_integer(1.into()) - s);
    x
}

/// Random full-rank lattice with integer-over-small-denominator rows.
pub fn random_lattice(rng: &mut ChaCha8Rng, field: &NumberField, entry: i64, den: i64) -> KLattice {
    let d = field.degree();
    loop {
        let rows: Vec<Vec<Rational>> = (0..d)
            .map(|_| (0..d).map(|_| random_rational(rng, entry, den)).collect())
            .collect();
        if let Ok(l) = KLattice::from_rows(field, &rows) {
            return l;
        }
    }
}

/// Nonzero random element with integer coordinates.
pub fn random_integral(rng: &mut ChaCha8Rng, field: &NumberField, entry: i64) -> galois_heights::field::FieldElement {
    loop {
        let c: Vec<i64> = (0..field.degree()).map(|_| rng.gen_range(-entry..=entry)).collect();
        let x = field.element_i64(&c).unwrap();
        if !x.is_zero() {
            return x;
        }
    }
}

/// Non-maximal test orders, each with a label. Every one except `Z + 2 O`
/// in the cubic field is monogenic.
pub fn test_orders() -> Vec<(&'static str, Order, bool)> {
    let s2 = sqrt2();
    let m3 = sqrt_m3();
    let z7 = zeta7_plus();
    let k5 = NumberField::from_i64(&[-5, 0, 1]).unwrap();
    let k2 = s2.field().clone();
    let km3 = m3.field().clone();
    let kz = z7.field().clone();
    let o7 = Order::maximal(&kz).unwrap();
    let mut gens = vec![kz.one()];
    gens.extend(o7.lattice().basis_elements().iter().map(|b| b.scale(&rat(2, 1))));
    let z_plus_2o = Order::new(KLattice::span(&kz, &gens).unwrap()).unwrap();
    vec![
        ("Z[2 sqrt2]", Order::monogenic(&k2.element_i64(&[0, 2]).unwrap()).unwrap(), true),
        ("Z[3 sqrt2]", Order::monogenic(&k2.element_i64(&[0, 3]).unwrap()).unwrap(), true),
        ("Z[sqrt-3]", Order::equation_order(&km3), true),
        ("Z[2 sqrt-3]", Order::monogenic(&km3.element_i64(&[0, 2]).unwrap()).unwrap(), true),
        ("Z[sqrt5]", Order::equation_order(&k5), true),
        ("Z[2t] cubic", Order::monogenic(&kz.element_i64(&[0, 2, 0]).unwrap()).unwrap(), true),
        ("Z+2O cubic", z_plus_2o, false),
    ]
}

/// Content of a rational vector by gcd of numerators over lcm of denominators.
pub fn content(v: &[Rational]) -> Rational {
    let l = v.iter().fold(BigInt::from(1), |l, q| l.lcm(q.denom()));
    let h = v.iter().fold(BigInt::from(0), |h, q| h.gcd(&(q.numer() * (&l / q.denom()))));
    Rational::new(h, l)
}
