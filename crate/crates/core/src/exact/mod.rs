//! Exact arithmetic substrate: rationals, dense rational matrices, Hermite
//! normal forms of lattices, univariate polynomials, and certified
//! midpoint-radius enclosures of real and complex numbers.
//!
//! Nothing in this module rounds except the enclosure types in [`ball`], whose
//! radii always absorb the rounding error of their midpoints.

pub mod ball;
pub mod hnf;
pub mod matrix;
pub mod poly;
pub mod roots;

pub use ball::{Ball, ComplexEnclosure};
pub use hnf::{generalized_index, hnf, HnfBasis};
pub use matrix::RationalMatrix;
pub use poly::{poly_discriminant, Poly};
pub use roots::complex_roots;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `n / d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Exact square root of a nonnegative rational, if it is a square.
pub fn exact_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(Rational::zero());
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Like [`exact_sqrt`] but reports a non-square radicand as an error.
pub fn require_sqrt(q: &Rational, what: &str) -> Result<Rational> {
    exact_sqrt(q).ok_or_else(|| {
        Error::InternalInvariant(format!("{what}: {q} is not the square of a rational"))
    })
}

/// Integer gcd of a slice, zero for an empty or all-zero slice.
pub fn content(values: &[BigInt]) -> BigInt {
    values.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v))
}

/// Rational gcd-content: the positive generator of the Z-module spanned by
/// `values` inside Q.
pub fn rational_content(values: &[Rational]) -> Rational {
    let den = lcm_of_denominators(values);
    let scaled: Vec<BigInt> = values
        .iter()
        .map(|q| (q * Rational::from_integer(den.clone())).to_integer())
        .collect();
    Rational::new(content(&scaled), den)
}

/// Render an exact rational as `"p/q"` (or `"p"` when integral).
pub fn rational_to_string(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Schema(format!("not a rational: {s:?}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Schema(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(parse_int(n)?, d))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

/// Trial division by every integer below `limit`; returns the prime powers
/// found and the remaining cofactor (1 or a number with no factor below `limit`).
pub fn trial_divide(n: &BigInt, limit: u64) -> (Vec<(BigInt, u32)>, BigInt) {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= limit && !n.is_zero() {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (out, n)
}

/// Complete factorization by trial division, refusing inputs whose cofactor
/// could still be composite.
pub fn factor_small(n: &BigInt, limit: u64) -> Result<Vec<(BigInt, u32)>> {
    if n.is_zero() {
        return Err(Error::Zero("cannot factor zero".into()));
    }
    let (mut out, rest) = trial_divide(n, limit);
    if !rest.is_one() {
        let lim = BigInt::from(limit);
        if rest > &lim * &lim {
            return Err(Error::Scale(format!(
                "cofactor {rest} exceeds trial-division reach {limit}^2"
            )));
        }
        out.push((rest, 1));
    }
    Ok(out)
}
