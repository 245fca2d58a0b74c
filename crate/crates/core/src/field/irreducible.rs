use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{complex_roots, Ball, ComplexEnclosure, Poly, Rational};

const START_BITS: u32 = 32;
const MAX_BITS: u32 = 4096;

/// Irreducibility over Q of a monic squarefree integer polynomial.
///
/// Any monic factor over Z of degree `k <= d/2` is `prod (t - r)` over some
/// `k`-subset of the roots. Each subset product is enclosed from certified
/// root boxes; a subset survives only if every coefficient box contains an
/// integer, and survivors are confirmed by exact division.
pub fn is_irreducible(f: &Poly) -> Result<bool> {
    let d = f.degree().ok_or_else(|| Error::Degree("zero polynomial".into()))?;
    if d <= 1 {
        return Ok(d == 1);
    }
    if !f.is_squarefree() {
        return Ok(false);
    }
    let mut bits = START_BITS;
    loop {
        let radius = Rational::new(BigInt::one(), BigInt::one() << bits);
        let roots = complex_roots(f, &radius)?;
        match search(f, &roots, bits)? {
            Some(found) => return Ok(!found),
            None if bits < MAX_BITS => bits *= 2,
            None => {
                return Err(Error::Precision(
                    "factor coefficients not resolved at the precision cap".into(),
                ))
            }
        }
    }
}

/// `Some(true)` if a factor was found, `Some(false)` if none exists, `None`
/// if the enclosures were too wide to decide.
fn search(f: &Poly, roots: &[ComplexEnclosure], bits: u32) -> Result<Option<bool>> {
    let d = roots.len();
    let quarter = Rational::new(BigInt::one(), BigInt::from(4));
    for k in 1..=d / 2 {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mut coeffs = vec![ComplexEnclosure::exact(Rational::one(), Rational::zero())];
            for &i in &idx {
                coeffs = times_linear(&coeffs, &roots[i], bits);
            }
            if coeffs.iter().any(|c| c.radius() >= quarter) {
                return Ok(None);
            }
            if let Some(ints) = integer_candidate(&coeffs) {
                let g = Poly::from_ints(&ints);
                if f.rem(&g)?.is_zero() {
                    return Ok(Some(true));
                }
            }
            if !next_combination(&mut idx, d) {
                break;
            }
        }
    }
    Ok(Some(false))
}

/// Multiply a polynomial (ascending coefficient boxes) by `t - r`.
fn times_linear(p: &[ComplexEnclosure], r: &ComplexEnclosure, bits: u32) -> Vec<ComplexEnclosure> {
    let minus_one = -Rational::one();
    let neg_r = r.scale(&minus_one);
    let mut out = vec![ComplexEnclosure::exact(Rational::zero(), Rational::zero()); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i + 1] = out[i + 1].add(c);
        out[i] = out[i].add(&c.mul(&neg_r)).round(bits + 16);
    }
    out
}

fn integer_candidate(coeffs: &[ComplexEnclosure]) -> Option<Vec<BigInt>> {
    coeffs
        .iter()
        .map(|c| {
            if !c.im.contains(&Rational::zero()) {
                return None;
            }
            let n = c.re.mid.round();
            contains_integer(&c.re, &n).then(|| n.to_integer())
        })
        .collect()
}

fn contains_integer(b: &Ball, n: &Rational) -> bool {
    (n - &b.mid).abs() <= b.rad
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_cases() {
        assert!(is_irreducible(&Poly::from_i64(&[-2, 0, 1])).unwrap());
        assert!(!is_irreducible(&Poly::from_i64(&[-4, 0, 1])).unwrap());
        assert!(is_irreducible(&Poly::from_i64(&[1, 1, 1, 1, 1])).unwrap());
        assert!(is_irreducible(&Poly::from_i64(&[1, 0, -10, 0, 1])).unwrap());
        // (t^2 - 2)(t^2 - 3)
        assert!(!is_irreducible(&Poly::from_i64(&[6, 0, -5, 0, 1])).unwrap());
        // (t^3 - 2)(t^3 + t + 1)
        let p = Poly::from_i64(&[-2, 0, 0, 1]).mul(&Poly::from_i64(&[1, 1, 0, 1]));
        assert!(!is_irreducible(&p).unwrap());
        // cyclotomic Phi_9 = t^6 + t^3 + 1
        assert!(is_irreducible(&Poly::from_i64(&[1, 0, 0, 1, 0, 0, 1])).unwrap());
    }

    #[test]
    fn combinations_enumerate_all() {
        let mut idx = vec![0, 1];
        let mut n = 1;
        while next_combination(&mut idx, 5) {
            n += 1;
        }
        assert_eq!(n, 10);
    }
}
