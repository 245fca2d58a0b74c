//! Number fields `Q[t]/(f)` given by a monic irreducible integer polynomial,
//! exact element arithmetic on the power basis, and Galois actions supplied
//! as images of `t`.

mod embed;
mod galois;
mod irreducible;

pub use embed::EmbeddingSet;
pub use galois::{verify_galois, GaloisAction};
pub use irreducible::is_irreducible;

use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{poly_discriminant, Poly, Rational, RationalMatrix};
use crate::lattice::Order;

struct Inner {
    min_poly: Poly,
    degree: usize,
    /// Coordinates of `t^k` for `k < 3d`.
    powers: Vec<Vec<Rational>>,
    /// `Tr(t^k)` for `k < 2d`.
    power_traces: Vec<Rational>,
    roots: Mutex<Option<(Rational, EmbeddingSet)>>,
    maximal_order: OnceLock<Order>,
}

/// `Q[t]/(f)`. Cheap to clone; clones share cached data.
#[derive(Clone)]
pub struct NumberField {
    inner: Arc<Inner>,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.min_poly == other.inner.min_poly
    }
}

impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField({:?})", self.inner.min_poly)
    }
}

impl NumberField {
    /// Validate `f` (monic, integral, squarefree, irreducible) and build the field.
    pub fn new(f: Poly) -> Result<Self> {
        let d = match f.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::Degree("defining polynomial must be nonconstant".into())),
        };
        if !f.leading().is_one() || f.to_integers().is_none() {
            return Err(Error::Degree("defining polynomial must be monic with integer coefficients".into()));
        }
        if !f.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if !is_irreducible(&f)? {
            return Err(Error::NotIrreducible(format!("{f:?}")));
        }
        Ok(Self::build(f, d))
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(Poly::from_i64(coeffs))
    }

    /// Q itself, presented as `Q[t]/(t)`.
    pub fn rationals() -> Self {
        Self::build(Poly::from_i64(&[0, 1]), 1)
    }

    fn build(f: Poly, d: usize) -> Self {
        let mut powers = Vec::with_capacity(3 * d);
        let mut cur = vec![Rational::zero(); d];
        cur[0] = Rational::one();
        let low: Vec<Rational> = f.coeffs()[..d].to_vec();
        for _ in 0..3 * d {
            powers.push(cur.clone());
            // multiply by t and reduce t^d = -sum low_i t^i
            let top = cur[d - 1].clone();
            let mut next = vec![Rational::zero(); d];
            for i in (1..d).rev() {
                next[i] = cur[i - 1].clone();
            }
            for (i, c) in low.iter().enumerate() {
                next[i] -= &top * c;
            }
            cur = next;
        }
        let power_traces = (0..2 * d)
            .map(|k| (0..d).map(|i| powers[i + k][i].clone()).sum())
            .collect();
        NumberField {
            inner: Arc::new(Inner {
                min_poly: f,
                degree: d,
                powers,
                power_traces,
                roots: Mutex::new(None),
                maximal_order: OnceLock::new(),
            }),
        }
    }

    pub fn min_poly(&self) -> &Poly {
        &self.inner.min_poly
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    /// Discriminant of the defining polynomial, i.e. of the equation order.
    pub fn poly_discriminant(&self) -> Rational {
        poly_discriminant(&self.inner.min_poly).expect("nonconstant polynomial")
    }

    /// `Tr(t^k)` for `k < 2d`.
    pub fn power_trace(&self, k: usize) -> &Rational {
        &self.inner.power_traces[k]
    }

    /// Gram matrix `Tr(t^i t^j)` of the power basis.
    pub fn trace_gram(&self) -> RationalMatrix {
        let d = self.degree();
        let rows: Vec<Vec<Rational>> = (0..d)
            .map(|i| (0..d).map(|j| self.inner.power_traces[i + j].clone()).collect())
            .collect();
        RationalMatrix::from_rows(&rows).expect("square")
    }

    pub fn element(&self, coords: Vec<Rational>) -> Result<FieldElement> {
        if coords.len() != self.degree() {
            return Err(Error::Dimension(format!(
                "{} coordinates in a degree {} field",
                coords.len(),
                self.degree()
            )));
        }
        Ok(FieldElement {
            field: self.clone(),
            coords,
        })
    }

    pub fn element_i64(&self, coords: &[i64]) -> Result<FieldElement> {
        self.element(coords.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// Reduce an arbitrary rational polynomial in `t`.
    pub fn from_poly(&self, p: &Poly) -> FieldElement {
        let mut out = vec![Rational::zero(); self.degree()];
        let r = p.rem(&self.inner.min_poly).expect("nonzero modulus");
        for (i, c) in r.coeffs().iter().enumerate() {
            out[i] += c;
        }
        FieldElement {
            field: self.clone(),
            coords: out,
        }
    }

    pub fn from_rational(&self, q: Rational) -> FieldElement {
        let mut coords = vec![Rational::zero(); self.degree()];
        coords[0] = q;
        FieldElement {
            field: self.clone(),
            coords,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_rational(Rational::zero())
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rational::one())
    }

    /// The class of `t`.
    pub fn generator(&self) -> FieldElement {
        self.from_poly(&Poly::from_i64(&[0, 1]))
    }

    /// `t^k` on the power basis, for `k < d`.
    pub fn basis_element(&self, k: usize) -> FieldElement {
        let mut coords = vec![Rational::zero(); self.degree()];
        coords[k] = Rational::one();
        FieldElement {
            field: self.clone(),
            coords,
        }
    }

    pub(crate) fn cached_maximal_order(&self) -> &OnceLock<Order> {
        &self.inner.maximal_order
    }

    pub(crate) fn root_cache(&self) -> &Mutex<Option<(Rational, EmbeddingSet)>> {
        &self.inner.roots
    }
}

/// An element of a number field in power-basis coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: NumberField,
    coords: Vec<Rational>,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(crate::exact::rational_to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl FieldElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    fn same_field(&self, other: &FieldElement) {
        assert!(self.field == other.field, "elements of different fields");
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.same_field(other);
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        FieldElement {
            field: self.field.clone(),
            coords,
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.same_field(other);
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        FieldElement {
            field: self.field.clone(),
            coords,
        }
    }

    pub fn neg(&self) -> FieldElement {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.same_field(other);
        let d = self.field.degree();
        let powers = &self.field.inner.powers;
        let mut out = vec![Rational::zero(); d];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                if i + j < d {
                    out[i + j] += ab;
                } else {
                    for (o, p) in out.iter_mut().zip(&powers[i + j]) {
                        if !p.is_zero() {
                            *o += &ab * p;
                        }
                    }
                }
            }
        }
        FieldElement {
            field: self.field.clone(),
            coords: out,
        }
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Inverse via the extended gcd of the coordinate polynomial with `f`.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = self.to_poly().xgcd(self.field.min_poly());
        debug_assert!(g.degree() == Some(0));
        Ok(self.field.from_poly(&s))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(&other.inv()?))
    }

    /// Matrix `M` with `coords(a * self) = coords(a) * M`.
    pub fn mul_matrix(&self) -> RationalMatrix {
        let d = self.field.degree();
        let rows: Vec<Vec<Rational>> = (0..d)
            .map(|i| self.field.basis_element(i).mul(self).coords)
            .collect();
        RationalMatrix::from_rows(&rows).expect("square")
    }

    pub fn trace(&self) -> Rational {
        self.coords
            .iter()
            .zip(&self.field.inner.power_traces)
            .map(|(c, p)| c * p)
            .sum()
    }

    pub fn norm(&self) -> Rational {
        self.mul_matrix().determinant().expect("square")
    }
}

impl crate::group::Scalar for FieldElement {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        FieldElement::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        FieldElement::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        FieldElement::mul(self, other)
    }
    fn inv(&self) -> Result<Self> {
        FieldElement::inv(self)
    }
    fn neg(&self) -> Self {
        FieldElement::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn sqrt2() -> NumberField {
        NumberField::from_i64(&[-2, 0, 1]).unwrap()
    }

    fn zeta7_plus() -> NumberField {
        NumberField::from_i64(&[-1, -2, 1, 1]).unwrap()
    }

    #[test]
    fn quadratic_arithmetic() {
        let k = sqrt2();
        let t = k.generator();
        assert_eq!(t.mul(&t), k.from_rational(int(2)));
        let x = k.element_i64(&[1, 1]).unwrap();
        assert_eq!(x.inv().unwrap(), k.element_i64(&[-1, 1]).unwrap());
        assert_eq!(x.mul(&x.inv().unwrap()), k.one());
        assert_eq!(k.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn traces_and_norms() {
        let k = zeta7_plus();
        assert_eq!(k.one().trace(), int(3));
        assert_eq!(k.generator().trace(), int(-1));
        assert_eq!(k.generator().norm(), int(1)); // (-1)^3 * f(0) = 1
        assert_eq!(k.basis_element(2).trace(), int(5));
        let s = sqrt2();
        assert_eq!(s.generator().norm(), int(-2));
        assert_eq!(s.element_i64(&[3, 1]).unwrap().norm(), int(7));
    }

    #[test]
    fn trace_matches_mul_matrix() {
        let k = zeta7_plus();
        let x = k.element(vec![rat(2, 3), rat(-1, 5), rat(7, 2)]).unwrap();
        assert_eq!(x.trace(), x.mul_matrix().trace());
    }

    #[test]
    fn rejects_bad_polynomials() {
        assert!(matches!(NumberField::from_i64(&[-4, 0, 1]), Err(Error::NotIrreducible(_))));
        assert_eq!(NumberField::from_i64(&[1, 2, 1]).unwrap_err(), Error::NotSquarefree);
        assert!(matches!(NumberField::from_i64(&[1, 0, 2]), Err(Error::Degree(_))));
        // (t^2 + 1)(t^2 + 2): reducible without rational roots
        assert!(matches!(
            NumberField::from_i64(&[2, 0, 3, 0, 1]),
            Err(Error::NotIrreducible(_))
        ));
    }

    #[test]
    fn field_discriminants() {
        assert_eq!(zeta7_plus().poly_discriminant(), int(49));
        assert_eq!(sqrt2().poly_discriminant(), int(8));
        assert_eq!(NumberField::rationals().degree(), 1);
    }

    fn zeta7_plus_cached() -> NumberField {
        static K: OnceLock<NumberField> = OnceLock::new();
        K.get_or_init(zeta7_plus).clone()
    }

    proptest::proptest! {
        #[test]
        fn field_axioms(a in proptest::collection::vec(-9i64..=9, 3),
                        b in proptest::collection::vec(-9i64..=9, 3),
                        c in proptest::collection::vec(-9i64..=9, 3)) {
            let k = zeta7_plus_cached();
            let (x, y, z) = (k.element_i64(&a).unwrap(), k.element_i64(&b).unwrap(), k.element_i64(&c).unwrap());
            proptest::prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            proptest::prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            proptest::prop_assert_eq!(x.mul(&y).norm(), x.norm() * y.norm());
            if !x.is_zero() {
                proptest::prop_assert_eq!(x.mul(&x.inv().unwrap()), k.one());
            }
        }
    }
}
