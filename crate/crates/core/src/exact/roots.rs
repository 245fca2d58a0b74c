//! Certified isolation of all complex roots of a squarefree polynomial.
//!
//! Approximations come from a floating-point Weierstrass (Durand–Kerner)
//! iteration and are refined by the same iteration carried out in exact
//! dyadic arithmetic. Certification uses Smith's inclusion theorem: with
//! Weierstrass corrections `W_i = f(z_i) / (lc * prod_{j != i} (z_i - z_j))`,
//! the disks `|z - z_i| <= n |W_i|` cover all roots and every connected
//! component holding `k` disks holds exactly `k` roots. Pairwise-disjoint
//! disks therefore isolate one root each. A disk centred on the real axis
//! isolates a real root, since the root set is closed under conjugation.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ball::{sqrt_upper, Ball, ComplexEnclosure};
use super::{Poly, Rational};
use crate::error::{Error, Result};

const START_BITS: u32 = 64;
const MAX_DOUBLINGS: u32 = 20;

type C = (Rational, Rational);

fn cmul(a: &C, b: &C) -> C {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

fn csub(a: &C, b: &C) -> C {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn cnorm(a: &C) -> Rational {
    &a.0 * &a.0 + &a.1 * &a.1
}

fn cdiv(a: &C, b: &C) -> C {
    let n = cnorm(b);
    let conj = (b.0.clone(), -&b.1);
    let p = cmul(a, &conj);
    (p.0 / &n, p.1 / n)
}

fn horner(coeffs: &[Rational], z: &C) -> C {
    let mut acc: C = (Rational::zero(), Rational::zero());
    for c in coeffs.iter().rev() {
        acc = cmul(&acc, z);
        acc.0 += c;
    }
    acc
}

fn round_to(q: &Rational, bits: u32) -> Rational {
    let scale = Rational::from_integer(BigInt::one() << bits);
    (q * &scale).round() / scale
}

/// Floating-point Durand–Kerner starting guesses.
fn float_guesses(coeffs: &[f64]) -> Vec<(f64, f64)> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let bound = 1.0
        + coeffs[..n]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0, f64::max);
    let mut z: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let a = 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            (bound * 0.9 * a.cos(), bound * 0.9 * a.sin())
        })
        .collect();
    let mul = |a: (f64, f64), b: (f64, f64)| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
    for _ in 0..500 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut num = (0.0, 0.0);
            for c in coeffs.iter().rev() {
                num = mul(num, z[i]);
                num.0 += c;
            }
            let mut den = (lead, 0.0);
            for j in 0..n {
                if j != i {
                    den = mul(den, (z[i].0 - z[j].0, z[i].1 - z[j].1));
                }
            }
            let dn = den.0 * den.0 + den.1 * den.1;
            if dn == 0.0 || !dn.is_finite() {
                continue;
            }
            let w = mul(num, (den.0 / dn, -den.1 / dn));
            if w.0.is_finite() && w.1.is_finite() {
                z[i] = (z[i].0 - w.0, z[i].1 - w.1);
                delta = delta.max(w.0.abs() + w.1.abs());
            }
        }
        if delta < 1e-15 {
            break;
        }
    }
    z
}

/// Weierstrass corrections for all current approximations.
fn corrections(coeffs: &[Rational], z: &[C]) -> Option<Vec<C>> {
    let lead = coeffs.last().unwrap();
    let mut out = Vec::with_capacity(z.len());
    for i in 0..z.len() {
        let mut den: C = (lead.clone(), Rational::zero());
        for j in 0..z.len() {
            if j != i {
                den = cmul(&den, &csub(&z[i], &z[j]));
            }
        }
        if den.0.is_zero() && den.1.is_zero() {
            return None;
        }
        out.push(cdiv(&horner(coeffs, &z[i]), &den));
    }
    Some(out)
}

fn certify(coeffs: &[Rational], z: &[C], target: &Rational, bits: u32) -> Option<Vec<ComplexEnclosure>> {
    let n = z.len();
    let w = corrections(coeffs, z)?;
    let n2 = Rational::from_integer(BigInt::from(n * n));
    let radii: Vec<Rational> = w
        .iter()
        .map(|wi| sqrt_upper(&(&n2 * cnorm(wi)), bits + 16))
        .collect();
    if radii.iter().any(|r| r > target) {
        return None;
    }
    let boxes: Vec<ComplexEnclosure> = z
        .iter()
        .zip(&radii)
        .map(|(zi, r)| {
            let re = Ball::new(zi.0.clone(), r.clone());
            if zi.1.is_zero() {
                ComplexEnclosure::real(re)
            } else {
                ComplexEnclosure::new(re, Ball::new(zi.1.clone(), r.clone()))
            }
        })
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            let sep = &radii[i] + &radii[j];
            let apart = (&z[i].0 - &z[j].0).abs() > sep || (&z[i].1 - &z[j].1).abs() > sep;
            if !apart {
                return None;
            }
        }
    }
    Some(boxes)
}

/// Isolate every complex root of a squarefree integer polynomial in a box of
/// radius at most `target_radius`. Real roots get a zero-width imaginary part.
/// Output order: real roots ascending, then the rest by real then imaginary part.
pub fn complex_roots(f: &Poly, target_radius: &Rational) -> Result<Vec<ComplexEnclosure>> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::Degree("root isolation needs a nonconstant polynomial".into())),
    };
    if !target_radius.is_positive() {
        return Err(Error::Precision("target radius must be positive".into()));
    }
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let coeffs = f.coeffs();
    if n == 1 {
        let r = -&coeffs[0] / &coeffs[1];
        return Ok(vec![ComplexEnclosure::real(Ball::exact(r))]);
    }
    let fl: Vec<f64> = coeffs.iter().map(super::ball::ratio_to_f64).collect();
    let mut z: Vec<C> = float_guesses(&fl)
        .into_iter()
        .map(|(a, b)| {
            let conv = |x: f64| Rational::from_float(if x.is_finite() { x } else { 0.0 }).unwrap();
            (conv(a), conv(b))
        })
        .collect();
    // Break any accidental coincidences before exact refinement.
    for i in 0..n {
        for j in 0..i {
            if z[i] == z[j] {
                z[i].1 += Rational::new(BigInt::from(i as i64 + 1), BigInt::from(1024));
            }
        }
    }

    let mut bits = START_BITS;
    for _ in 0..=MAX_DOUBLINGS {
        let tol = Rational::new(BigInt::one(), BigInt::one() << (2 * bits));
        for _ in 0..(bits / 4).max(32) {
            let Some(w) = corrections(coeffs, &z) else { break };
            let mut worst = Rational::zero();
            for (zi, wi) in z.iter_mut().zip(&w) {
                let next = csub(zi, wi);
                *zi = (round_to(&next.0, bits), round_to(&next.1, bits));
                worst = worst.max(cnorm(wi));
            }
            if worst < tol {
                break;
            }
        }
        let snap = Rational::new(BigInt::one(), BigInt::one() << (bits / 2));
        let mut snapped = z.clone();
        for zi in snapped.iter_mut() {
            if zi.1.abs() < snap {
                zi.1 = Rational::zero();
            }
        }
        if let Some(mut boxes) = certify(coeffs, &snapped, target_radius, bits) {
            boxes.sort_by(|a, b| {
                (!a.is_real())
                    .cmp(&!b.is_real())
                    .then(a.re.mid.cmp(&b.re.mid))
                    .then(a.im.mid.cmp(&b.im.mid))
            });
            return Ok(boxes);
        }
        bits *= 2;
    }
    Err(Error::Precision(format!(
        "root isolation did not certify after {MAX_DOUBLINGS} precision doublings"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn radius() -> Rational {
        Rational::new(BigInt::one(), BigInt::one() << 30)
    }

    #[test]
    fn gaussian_roots() {
        let roots = complex_roots(&Poly::from_i64(&[1, 0, 1]), &radius()).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].contains(&rat(0, 1), &rat(-1, 1)));
        assert!(roots[1].contains(&rat(0, 1), &rat(1, 1)));
        assert!(roots.iter().all(|r| r.radius() <= radius()));
    }

    #[test]
    fn sqrt_two_matches_bisection() {
        let roots = complex_roots(&Poly::from_i64(&[-2, 0, 1]), &radius()).unwrap();
        assert!(roots.iter().all(|r| r.is_real()));
        // bisection oracle on t^2 - 2 over [1, 2]
        let (mut lo, mut hi) = (rat(1, 1), rat(2, 1));
        for _ in 0..60 {
            let m = (&lo + &hi) / rat(2, 1);
            if &m * &m < rat(2, 1) {
                lo = m;
            } else {
                hi = m;
            }
        }
        let bracket = Ball::from_interval(lo, hi);
        assert!(roots[1].re.overlaps(&bracket));
        assert!(roots[0].re.overlaps(&bracket.neg()));
    }

    #[test]
    fn cubic_real_roots() {
        let f = Poly::from_i64(&[-1, -2, 1, 1]);
        let roots = complex_roots(&f, &radius()).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots.iter().all(|r| r.is_real()));
        let approx: Vec<f64> = roots.iter().map(|r| r.re.to_f64()).collect();
        for (got, want) in approx.iter().zip([-1.8019377, -0.4450419, 1.2469796]) {
            assert!((got - want).abs() < 1e-6);
        }
    }

    #[test]
    fn rejects_square_factors() {
        assert_eq!(
            complex_roots(&Poly::from_i64(&[1, 2, 1]), &radius()),
            Err(Error::NotSquarefree)
        );
    }

    #[test]
    fn root_sum_and_product_enclosed() {
        // t^4 + t^3 + t^2 + t + 1: sum of roots -1, product 1
        let f = Poly::from_i64(&[1, 1, 1, 1, 1]);
        let roots = complex_roots(&f, &radius()).unwrap();
        let sum = roots.iter().skip(1).fold(roots[0].clone(), |a, b| a.add(b));
        assert!(sum.contains(&rat(-1, 1), &rat(0, 1)));
        let prod = roots.iter().skip(1).fold(roots[0].clone(), |a, b| a.mul(b));
        assert!(prod.contains(&rat(1, 1), &rat(0, 1)));
    }
}
