//! Midpoint-radius enclosures with exact rational endpoints.
//!
//! A [`Ball`] `(mid, rad)` denotes the closed interval `[mid - rad, mid + rad]`.
//! Arithmetic is exact on the rationals; [`Ball::round`] trades exactness for
//! size by snapping the midpoint to a dyadic grid and widening the radius by
//! at least the displacement.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    pub mid: Rational,
    pub rad: Rational,
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

/// Nearest multiple of `2^-bits` to `q` (ties toward -inf).
fn round_dyadic(q: &Rational, bits: u32) -> Rational {
    let scale = Rational::from_integer(pow2(bits));
    let scaled = q * &scale;
    let n = (scaled + Rational::new(BigInt::one(), BigInt::from(2))).floor();
    n / scale
}

/// Smallest multiple of `2^-bits` that is `>= q`.
fn ceil_dyadic(q: &Rational, bits: u32) -> Rational {
    let scale = Rational::from_integer(pow2(bits));
    (q * &scale).ceil() / scale
}

/// Rational lower bound on `sqrt(q)` within `2^-bits`, for `q >= 0`.
pub fn sqrt_lower(q: &Rational, bits: u32) -> Rational {
    if !q.is_positive() {
        return Rational::zero();
    }
    let scale = pow2(2 * bits);
    let n = (q * Rational::from_integer(scale)).floor().to_integer();
    Rational::new(n.sqrt(), pow2(bits))
}

/// Rational upper bound on `sqrt(q)` within `2^-bits`, for `q >= 0`.
pub fn sqrt_upper(q: &Rational, bits: u32) -> Rational {
    if !q.is_positive() {
        return Rational::zero();
    }
    let scale = pow2(2 * bits);
    let n = (q * Rational::from_integer(scale)).ceil().to_integer();
    let r = n.sqrt();
    let r = if &r * &r == n { r } else { r + 1 };
    Rational::new(r, pow2(bits))
}

impl Ball {
    pub fn new(mid: Rational, rad: Rational) -> Self {
        debug_assert!(!rad.is_negative());
        Ball { mid, rad }
    }

    pub fn exact(q: Rational) -> Self {
        Ball {
            mid: q,
            rad: Rational::zero(),
        }
    }

    pub fn from_interval(lo: Rational, hi: Rational) -> Self {
        let two = Rational::from_integer(BigInt::from(2));
        Ball {
            mid: (&lo + &hi) / &two,
            rad: (hi - lo) / two,
        }
    }

    pub fn zero() -> Self {
        Self::exact(Rational::zero())
    }

    pub fn lower(&self) -> Rational {
        &self.mid - &self.rad
    }

    pub fn upper(&self) -> Rational {
        &self.mid + &self.rad
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    pub fn contains(&self, q: &Rational) -> bool {
        (q - &self.mid).abs() <= self.rad
    }

    pub fn overlaps(&self, other: &Ball) -> bool {
        (&self.mid - &other.mid).abs() <= &self.rad + &other.rad
    }

    pub fn abs_upper(&self) -> Rational {
        self.mid.abs() + &self.rad
    }

    pub fn add(&self, o: &Ball) -> Ball {
        Ball::new(&self.mid + &o.mid, &self.rad + &o.rad)
    }

    pub fn sub(&self, o: &Ball) -> Ball {
        Ball::new(&self.mid - &o.mid, &self.rad + &o.rad)
    }

    pub fn neg(&self) -> Ball {
        Ball::new(-&self.mid, self.rad.clone())
    }

    pub fn mul(&self, o: &Ball) -> Ball {
        let rad = self.mid.abs() * &o.rad + o.mid.abs() * &self.rad + &self.rad * &o.rad;
        Ball::new(&self.mid * &o.mid, rad)
    }

    pub fn scale(&self, c: &Rational) -> Ball {
        Ball::new(&self.mid * c, &self.rad * c.abs())
    }

    pub fn pow(&self, n: u32) -> Ball {
        let mut acc = Ball::exact(Rational::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Snap the midpoint to the `2^-bits` grid and round the radius up, only
    /// when that shortens the representation.
    pub fn round(&self, bits: u32) -> Ball {
        let limit = bits as u64 + 8;
        if self.mid.denom().bits() <= limit && self.rad.denom().bits() <= limit {
            return self.clone();
        }
        let mid = round_dyadic(&self.mid, bits);
        let shift = (&self.mid - &mid).abs();
        let rad = if self.rad.is_zero() && shift.is_zero() {
            Rational::zero()
        } else {
            ceil_dyadic(&(&self.rad + shift), bits)
        };
        Ball::new(mid, rad)
    }

    /// Enclosure of `sqrt` over the nonnegative part of the ball.
    pub fn sqrt(&self, bits: u32) -> Ball {
        let lo = self.lower().max(Rational::zero());
        let hi = self.upper().max(Rational::zero());
        if self.is_exact() {
            if let Some(r) = super::exact_sqrt(&self.mid) {
                return Ball::exact(r);
            }
        }
        Ball::from_interval(sqrt_lower(&lo, bits), sqrt_upper(&hi, bits))
    }

    pub fn to_f64(&self) -> f64 {
        ratio_to_f64(&self.mid)
    }

    /// Decimal midpoint with `digits` fractional digits, and a decimal radius
    /// rounded up so the printed ball still contains the exact one.
    pub fn to_decimal_strings(&self, digits: usize) -> (String, String) {
        let scale = num_traits::pow(BigInt::from(10), digits);
        let sc = Rational::from_integer(scale.clone());
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let mid_n = (&self.mid * &sc + half).floor().to_integer();
        let mid_dec = Rational::new(mid_n.clone(), scale.clone());
        let rad = &self.rad + (&self.mid - &mid_dec).abs();
        let rad_n = (rad * &sc).ceil().to_integer();
        (decimal(&mid_n, digits), decimal(&rad_n, digits))
    }
}

fn decimal(n: &BigInt, digits: usize) -> String {
    let neg = n.is_negative();
    let s = n.abs().to_string();
    let s = if s.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - s.len()), s)
    } else {
        s
    };
    let (ip, fp) = s.split_at(s.len() - digits);
    let body = if digits == 0 { ip.to_string() } else { format!("{ip}.{fp}") };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

pub fn ratio_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Axis-aligned complex box: real and imaginary balls.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexEnclosure {
    pub re: Ball,
    pub im: Ball,
}

impl ComplexEnclosure {
    pub fn new(re: Ball, im: Ball) -> Self {
        ComplexEnclosure { re, im }
    }

    pub fn real(re: Ball) -> Self {
        ComplexEnclosure {
            re,
            im: Ball::zero(),
        }
    }

    pub fn exact(re: Rational, im: Rational) -> Self {
        ComplexEnclosure::new(Ball::exact(re), Ball::exact(im))
    }

    /// Largest of the two radii.
    pub fn radius(&self) -> Rational {
        self.re.rad.clone().max(self.im.rad.clone())
    }

    pub fn is_real(&self) -> bool {
        self.im.mid.is_zero() && self.im.rad.is_zero()
    }

    pub fn contains(&self, re: &Rational, im: &Rational) -> bool {
        self.re.contains(re) && self.im.contains(im)
    }

    pub fn add(&self, o: &ComplexEnclosure) -> ComplexEnclosure {
        ComplexEnclosure::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn mul(&self, o: &ComplexEnclosure) -> ComplexEnclosure {
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        ComplexEnclosure::new(re, im)
    }

    pub fn scale(&self, c: &Rational) -> ComplexEnclosure {
        ComplexEnclosure::new(self.re.scale(c), self.im.scale(c))
    }

    /// `|z|^2` as a real ball.
    pub fn norm_sqr(&self) -> Ball {
        let sq = |b: &Ball| {
            // Tighter than b*b: the square of an interval straddling 0 starts at 0.
            let lo = b.lower();
            let hi = b.upper();
            let (a, c) = (&lo * &lo, &hi * &hi);
            let max = a.clone().max(c.clone());
            let min = if lo.is_negative() && hi.is_positive() {
                Rational::zero()
            } else {
                a.min(c)
            };
            Ball::from_interval(min, max)
        };
        sq(&self.re).add(&sq(&self.im))
    }

    pub fn round(&self, bits: u32) -> ComplexEnclosure {
        ComplexEnclosure::new(self.re.round(bits), self.im.round(bits))
    }

    /// Evaluate a rational-coefficient polynomial (ascending) at this box.
    pub fn eval_poly(&self, coeffs: &[Rational], bits: u32) -> ComplexEnclosure {
        let mut acc = ComplexEnclosure::exact(Rational::zero(), Rational::zero());
        for c in coeffs.iter().rev() {
            acc = acc.mul(self).add(&ComplexEnclosure::exact(c.clone(), Rational::zero()));
            acc = acc.round(bits);
        }
        acc
    }
}
