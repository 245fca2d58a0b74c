//! Anticanonical heights of pairs `(L, x)`.
//!
//! `H = S^(|G|/2) * F^(|G|/d)` where `S = sum_phi |phi(x)|^2` over complex
//! embeddings and `F` is the finite part, computed two independent ways:
//! from the lattice invariants as `1 / (N_T(Λ) dis(Λ))` with
//! `N_T(Λ)^2 = |disc Λ / disc T|`, and directly as `1 / N_O(O Λ)`.

mod enumerate;

pub use enumerate::{enumerate_split_points, Enumeration};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{rational_content, rational_to_string, require_sqrt, Ball, Rational};
use crate::lattice::generalized_index;
use crate::pairs::{GAlgebra, Pair, PairInvariants};

const MAX_REFINEMENTS: u32 = 12;

#[derive(Clone, Debug, PartialEq)]
pub struct HeightReport {
    pub archimedean_sum: Ball,
    pub finite_part_invariant: Rational,
    pub finite_part_direct: Rational,
    /// `|G| / 2`.
    pub archimedean_exponent: Rational,
    /// `|G| / d`.
    pub finite_exponent: Rational,
    pub height: Ball,
    pub invariants: PairInvariants,
}

fn bits_for(r: &Rational) -> u32 {
    let inv = (Rational::one() / r).ceil().to_integer();
    inv.bits() as u32
}

/// `sum_phi |phi(x)|^2`; exact for split pairs.
pub fn archimedean_sum(pair: &Pair, target_radius: &Rational) -> Result<Ball> {
    match pair.algebra() {
        GAlgebra::Split { .. } => Ok(Ball::exact(pair.x().iter().map(|q| q * q).sum())),
        GAlgebra::Field(a) => {
            let x = a.field().element(pair.x().to_vec())?;
            let d = Rational::from_integer(BigInt::from(a.field().degree()));
            let mut r = target_radius / (&d * Rational::from_integer(BigInt::from(4)));
            let step = Rational::new(BigInt::one(), BigInt::from(256));
            for _ in 0..=MAX_REFINEMENTS {
                let s = x
                    .embeddings(&r)?
                    .iter()
                    .fold(Ball::zero(), |acc, z| acc.add(&z.norm_sqr()));
                if &s.rad <= target_radius {
                    return Ok(s);
                }
                r *= &step;
            }
            Err(Error::Precision("archimedean sum did not reach the target radius".into()))
        }
    }
}

/// `1 / (N_T(Λ) dis(Λ))`, with `N_T(Λ)` taken as the exact square root of
/// `|disc Λ / disc T|` and cross-checked against the index.
pub fn finite_part_invariant(pair: &Pair) -> Result<Rational> {
    finite_part_from(&pair.invariants()?)
}

fn finite_part_from(inv: &PairInvariants) -> Result<Rational> {
    let ratio = (&inv.disc_lattice / &inv.disc_multiplier_ring).abs();
    let n = require_sqrt(&ratio, "|disc Λ / disc T|")?;
    let index = generalized_index(inv.multiplier_ring.lattice(), &inv.lattice)?;
    if n != index {
        return Err(Error::InternalInvariant(format!(
            "sqrt |disc Λ/disc T| = {n} but [T:Λ] = {index}"
        )));
    }
    Ok(Rational::one() / (n * &inv.discrepancy))
}

/// `1 / [O : O Λ]`, using only lattice products and indices.
pub fn finite_part_direct(pair: &Pair) -> Result<Rational> {
    let lattice = pair.conjugate_lattice();
    let o = crate::lattice::Order::maximal(pair.algebra().value_field())?;
    let ol = o.lattice().product(&lattice);
    Ok(Rational::one() / generalized_index(o.lattice(), &ol)?)
}

/// `b^(n/2)` for a nonnegative ball.
fn half_power(b: &Ball, n: u32, bits: u32) -> Ball {
    if n % 2 == 0 {
        b.pow(n / 2)
    } else {
        b.sqrt(bits).pow(n)
    }
}

/// The anticanonical height with both finite-part routes, which must agree.
pub fn height(pair: &Pair, target_radius: &Rational) -> Result<HeightReport> {
    if !target_radius.is_positive() {
        return Err(Error::Precision("target radius must be positive".into()));
    }
    let inv = pair.invariants()?;
    let invariant = finite_part_from(&inv)?;
    let direct = finite_part_direct(pair)?;
    if invariant != direct {
        return Err(Error::InternalInvariant(format!(
            "finite parts disagree: invariant {invariant}, direct {direct}"
        )));
    }
    let n = pair.algebra().dim() as u32;
    let d = inv.degree as u32;
    let fin = num_traits::pow(invariant.clone(), (n / d) as usize);
    let mut arch_target = target_radius.clone();
    let step = Rational::new(BigInt::one(), BigInt::from(1024));
    for _ in 0..=MAX_REFINEMENTS {
        let s = archimedean_sum(pair, &arch_target)?;
        let bits = bits_for(&arch_target) + 16;
        let h = half_power(&s, n, bits).scale(&fin);
        if &h.rad <= target_radius {
            return Ok(HeightReport {
                archimedean_sum: s,
                finite_part_invariant: invariant,
                finite_part_direct: direct,
                archimedean_exponent: Rational::new(BigInt::from(n), BigInt::from(2)),
                finite_exponent: Rational::new(BigInt::from(n), BigInt::from(d)),
                height: h,
                invariants: inv,
            });
        }
        arch_target *= &step;
    }
    Err(Error::Precision("height enclosure did not reach the target radius".into()))
}

/// `H_O(1)(x)^exponent` for the standard metric: after scaling to coprime
/// integers, `sqrt(sum x_i^2)` raised to `exponent`.
pub fn standard_projective_height(coords: &[Rational], exponent: u32, target_radius: &Rational) -> Result<Ball> {
    if coords.iter().all(Zero::is_zero) {
        return Err(Error::Zero("projective point with all coordinates zero".into()));
    }
    let c = rational_content(coords);
    let sq: Rational = coords.iter().map(|q| (q / &c) * (q / &c)).sum();
    let mut bits = bits_for(target_radius) + 8;
    for _ in 0..=MAX_REFINEMENTS {
        let h = half_power(&Ball::exact(sq.clone()), exponent, bits);
        if &h.rad <= target_radius {
            return Ok(h);
        }
        bits += 32;
    }
    Err(Error::Precision("projective height did not reach the target radius".into()))
}

fn ball_json(b: &Ball, digits: usize) -> Value {
    let (mid, rad) = b.to_decimal_strings(digits);
    json!({ "mid": mid, "rad": rad })
}

fn q(r: &Rational) -> Value {
    Value::String(rational_to_string(r))
}

impl HeightReport {
    pub fn finite_parts_agree(&self) -> bool {
        self.finite_part_invariant == self.finite_part_direct
    }

    /// JSON with exact rationals as `"p/q"` strings and enclosures as decimal
    /// midpoint/radius strings carrying `digits` fractional digits.
    pub fn to_json(&self, digits: usize) -> Value {
        let inv = &self.invariants;
        let (den, rows) = inv.lattice.to_integer_rows();
        let (tden, trows) = inv.multiplier_ring.lattice().to_integer_rows();
        let strs = |rows: &[Vec<BigInt>]| -> Vec<Vec<String>> {
            rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect()
        };
        json!({
            "height": ball_json(&self.height, digits),
            "archimedean_sum": ball_json(&self.archimedean_sum, digits),
            "finite_part_invariant": q(&self.finite_part_invariant),
            "finite_part_direct": q(&self.finite_part_direct),
            "finite_parts_agree": self.finite_parts_agree(),
            "archimedean_exponent": q(&self.archimedean_exponent),
            "finite_exponent": q(&self.finite_exponent),
            "invariants": {
                "degree": inv.degree,
                "lattice": { "denominator": den.to_string(), "basis": strs(&rows) },
                "multiplier_ring": { "denominator": tden.to_string(), "basis": strs(&trows) },
                "disc_lattice": q(&inv.disc_lattice),
                "disc_multiplier_ring": q(&inv.disc_multiplier_ring),
                "disc_maximal_order": q(&inv.maximal_order.disc()),
                "discrepancy": q(&inv.discrepancy),
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::field::{GaloisAction, NumberField};
    use crate::group::FiniteGroup;
    use std::sync::Arc;

    fn radius() -> Rational {
        Rational::new(BigInt::one(), BigInt::one() << 20)
    }

    fn split(n: usize, x: &[(i64, i64)]) -> Pair {
        let alg = GAlgebra::split(Arc::new(FiniteGroup::cyclic(n)));
        Pair::new(alg, x.iter().map(|&(a, b)| rat(a, b)).collect()).unwrap()
    }

    #[test]
    fn split_examples() {
        let p = split(2, &[(1, 1), (0, 1)]);
        let h = height(&p, &radius()).unwrap();
        assert_eq!(h.height, Ball::exact(int(1)));
        assert_eq!(h.finite_part_direct, int(1));
        let p = split(2, &[(2, 1), (-1, 1)]);
        assert_eq!(archimedean_sum(&p, &radius()).unwrap(), Ball::exact(int(5)));
        assert_eq!(finite_part_direct(&p).unwrap(), int(1));
        assert!(height(&p, &radius()).unwrap().height.contains(&int(5)));
        // self-dual with content 1/3: H = 3^3
        let p = split(3, &[(2, 3), (2, 3), (-1, 3)]);
        let h = height(&p, &radius()).unwrap();
        assert_eq!(h.finite_part_invariant, int(3));
        assert!(h.height.contains(&int(27)));
    }

    #[test]
    fn cubic_self_dual_height_is_seven() {
        let k = NumberField::from_i64(&[-1, -2, 1, 1]).unwrap();
        let s = k.element_i64(&[-2, 0, 1]).unwrap();
        let a = GaloisAction::from_generator_images(&k, Arc::new(FiniteGroup::cyclic(3)), &[(1, s)]).unwrap();
        let p = Pair::new(GAlgebra::field(a), vec![rat(-2, 7), rat(2, 7), rat(3, 7)]).unwrap();
        let h = height(&p, &radius()).unwrap();
        assert!(h.archimedean_sum.contains(&int(1)));
        assert_eq!(h.finite_part_invariant, int(7));
        assert!(h.height.contains(&int(7)));
        assert!(h.height.rad <= radius());
    }

    #[test]
    fn projective_heights() {
        assert_eq!(standard_projective_height(&[int(1), int(0), int(0)], 3, &radius()).unwrap(), Ball::exact(int(1)));
        assert!(standard_projective_height(&[int(3), int(4)], 1, &radius()).unwrap().contains(&int(5)));
        assert!(standard_projective_height(&[rat(3, 7), rat(4, 7)], 1, &radius()).unwrap().contains(&int(5)));
        assert!(matches!(standard_projective_height(&[int(0), int(0)], 1, &radius()), Err(Error::Zero(_))));
    }

    #[test]
    fn quadratic_field_pair() {
        let k = NumberField::from_i64(&[-2, 0, 1]).unwrap();
        let a = GaloisAction::from_generator_images(&k, Arc::new(FiniteGroup::cyclic(2)), &[(1, k.generator().neg())]).unwrap();
        let p = Pair::new(GAlgebra::field(a), vec![rat(1, 2), rat(3, 4)]).unwrap();
        let h = height(&p, &radius()).unwrap();
        assert!(h.finite_parts_agree());
        // S = Tr(x^2) = 2 (1/4 + 2 * 9/16) = 11/4 for a totally real field
        assert!(h.archimedean_sum.contains(&rat(11, 4)));
    }
}
