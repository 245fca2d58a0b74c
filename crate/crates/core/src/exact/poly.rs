use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{RationalMatrix, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lead = divisor.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() / &lead;
            for (j, dj) in divisor.coeffs.iter().enumerate() {
                r[k + j] -= &c * dj;
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Ok((Poly::new(q), Poly::new(r)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::constant(Rational::one()), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::constant(Rational::one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.leading().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `self(inner)`.
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            acc.mul(inner).add(&Poly::constant(c.clone()))
        })
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Integer coefficients if every coefficient is integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Resultant via the Sylvester determinant.
pub fn resultant(f: &Poly, g: &Poly) -> Result<Rational> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Ok(Rational::zero());
    };
    if m + n == 0 {
        return Ok(Rational::one());
    }
    let size = m + n;
    let mut s = RationalMatrix::zeros(size, size);
    // Rows hold coefficients in descending degree.
    for i in 0..n {
        for (j, c) in f.coeffs().iter().rev().enumerate() {
            s[(i, i + j)] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g.coeffs().iter().rev().enumerate() {
            s[(n + i, i + j)] = c.clone();
        }
    }
    s.determinant()
}

/// Discriminant `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn poly_discriminant(f: &Poly) -> Result<Rational> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::Degree("discriminant of a constant polynomial".into())),
    };
    if n == 1 {
        return Ok(Rational::one());
    }
    let r = resultant(f, &f.derivative())? / f.leading();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn discriminants() {
        assert_eq!(poly_discriminant(&Poly::from_i64(&[1, 0, 1])).unwrap(), rat(-4, 1));
        assert_eq!(poly_discriminant(&Poly::from_i64(&[-1, -1, 1])).unwrap(), rat(5, 1));
        assert_eq!(poly_discriminant(&Poly::from_i64(&[-1, -2, 1, 1])).unwrap(), rat(49, 1));
        assert!(matches!(
            poly_discriminant(&Poly::from_i64(&[3])),
            Err(Error::Degree(_))
        ));
    }

    #[test]
    fn discriminant_matches_root_product_oracle() {
        // (t-1)(t-2)(t-4): disc = prod_{i<j} (r_i - r_j)^2 = 1 * 9 * 4 = 36
        let f = Poly::from_i64(&[-8, 14, -7, 1]);
        assert_eq!(poly_discriminant(&f).unwrap(), rat(36, 1));
    }

    #[test]
    fn division_and_gcd() {
        let f = Poly::from_i64(&[-1, 0, 1]); // t^2 - 1
        let g = Poly::from_i64(&[1, 1]); // t + 1
        let (q, r) = f.div_rem(&g).unwrap();
        assert_eq!(q, Poly::from_i64(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(f.gcd(&Poly::from_i64(&[1, 2, 1])), g);
        assert!(f.is_squarefree());
        assert!(!Poly::from_i64(&[1, 2, 1]).is_squarefree());
    }

    #[test]
    fn xgcd_gives_inverse() {
        let f = Poly::from_i64(&[-2, 0, 1]);
        let x = Poly::from_i64(&[1, 1]);
        let (g, s, _) = x.xgcd(&f);
        assert_eq!(g, Poly::from_i64(&[1]));
        // (1+t)^{-1} = -1 + t mod t^2 - 2
        assert_eq!(s.rem(&f).unwrap(), Poly::from_i64(&[-1, 1]));
    }

    #[test]
    fn compose_substitutes() {
        let f = Poly::from_i64(&[-1, -2, 1, 1]);
        let s = Poly::from_i64(&[-2, 0, 1]); // t^2 - 2
        assert!(f.compose(&s).rem(&f).unwrap().is_zero());
    }
}
