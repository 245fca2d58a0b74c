//! Full-rank Z-lattices inside a number field, orders and their fractional
//! ideals: colon quotients, trace duals, products, discriminants, conductors,
//! differents, ideal norms and the discrepancy.

mod maximal;
mod order;

pub use maximal::{maximal_order, verify_maximal_hint};
pub use order::{DvornicichRelation, FractionalIdeal, Order};

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{self, HnfBasis, Rational, RationalMatrix};
use crate::field::{FieldElement, NumberField};

/// A full-rank lattice in a number field, in canonical HNF over the power basis.
/// Equality is structural.
#[derive(Clone, PartialEq, Eq)]
pub struct KLattice {
    field: NumberField,
    basis: HnfBasis,
}

impl fmt::Debug for KLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KLattice(1/{} * {:?})", self.basis.denominator(), self.basis.basis())
    }
}

/// `[outer : inner]` for lattices of the same field.
pub fn generalized_index(outer: &KLattice, inner: &KLattice) -> Result<Rational> {
    if outer.field != inner.field {
        return Err(Error::Dimension("lattices in different fields".into()));
    }
    exact::generalized_index(&outer.basis, &inner.basis)
}

impl KLattice {
    pub fn from_hnf(field: &NumberField, basis: HnfBasis) -> Result<Self> {
        if basis.dim() != field.degree() {
            return Err(Error::Dimension(format!(
                "rank {} lattice in a degree {} field",
                basis.dim(),
                field.degree()
            )));
        }
        Ok(KLattice {
            field: field.clone(),
            basis,
        })
    }

    /// Z-span of rational coordinate rows over the power basis.
    pub fn from_rows(field: &NumberField, rows: &[Vec<Rational>]) -> Result<Self> {
        if rows.iter().any(|r| r.len() != field.degree()) {
            return Err(Error::Dimension("row length differs from the field degree".into()));
        }
        Self::from_hnf(field, HnfBasis::from_rows(rows, field.degree())?)
    }

    /// Z-span of field elements; full rank is required.
    pub fn span(field: &NumberField, generators: &[FieldElement]) -> Result<Self> {
        let rows: Vec<Vec<Rational>> = generators.iter().map(|x| x.coords().to_vec()).collect();
        Self::from_rows(field, &rows)
    }

    /// The equation order `Z[t]` as a lattice.
    pub fn power_basis(field: &NumberField) -> Self {
        KLattice {
            field: field.clone(),
            basis: HnfBasis::identity(field.degree()),
        }
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn hnf(&self) -> &HnfBasis {
        &self.basis
    }

    pub fn basis_elements(&self) -> Vec<FieldElement> {
        self.basis
            .rational_rows()
            .into_iter()
            .map(|r| self.field.element(r).expect("row length is the degree"))
            .collect()
    }

    pub fn contains(&self, x: &FieldElement) -> bool {
        self.basis.contains(x.coords())
    }

    pub fn contains_lattice(&self, other: &KLattice) -> bool {
        self.basis.contains_lattice(&other.basis)
    }

    /// Coordinates of `x` with respect to the HNF basis.
    pub fn coordinates(&self, x: &FieldElement) -> Vec<Rational> {
        self.basis.coordinates(x.coords())
    }

    pub fn scale(&self, c: &Rational) -> Result<Self> {
        Self::from_hnf(&self.field, self.basis.scale(c)?)
    }

    /// `x * self` for a nonzero field element.
    pub fn mul_element(&self, x: &FieldElement) -> Result<Self> {
        if x.is_zero() {
            return Err(Error::Zero("multiplying a lattice by zero".into()));
        }
        Self::from_hnf(&self.field, self.basis.transform(&x.mul_matrix())?)
    }

    pub fn sum(&self, other: &KLattice) -> KLattice {
        KLattice {
            field: self.field.clone(),
            basis: self.basis.sum(&other.basis),
        }
    }

    pub fn intersection(&self, other: &KLattice) -> KLattice {
        KLattice {
            field: self.field.clone(),
            basis: self.basis.intersection(&other.basis),
        }
    }

    /// Z-span of all products `a * b` of basis elements.
    pub fn product(&self, other: &KLattice) -> KLattice {
        let a = self.basis_elements();
        let b = other.basis_elements();
        let rows: Vec<Vec<Rational>> = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| x.mul(y).coords().to_vec()))
            .collect();
        Self::from_rows(&self.field, &rows).expect("product of full-rank lattices is full rank")
    }

    /// `(self : other) = {a : a * other ⊆ self}`.
    pub fn colon(&self, other: &KLattice) -> KLattice {
        let inv = self.basis.matrix().inverse().expect("full rank");
        // a ∈ colon iff coords(a) * M_b * inv is integral for every basis element b of `other`,
        // i.e. coords(a) pairs integrally with every column of M_b * inv.
        let mut rows = Vec::new();
        for b in other.basis_elements() {
            let c = &b.mul_matrix() * &inv;
            rows.extend(c.transpose().to_rows());
        }
        let cond = HnfBasis::from_rows(&rows, self.field.degree()).expect("full rank conditions");
        KLattice {
            field: self.field.clone(),
            basis: cond.dual(),
        }
    }

    /// `{a : Tr(a * self) ⊆ Z}`.
    pub fn trace_dual(&self) -> KLattice {
        let bg = &self.basis.matrix() * &self.field.trace_gram();
        let pairing = HnfBasis::from_rows(&bg.to_rows(), self.field.degree()).expect("nondegenerate trace form");
        KLattice {
            field: self.field.clone(),
            basis: pairing.dual(),
        }
    }

    /// Gram matrix `Tr(b_i b_j)` of the HNF basis.
    pub fn trace_gram(&self) -> RationalMatrix {
        let b = self.basis.matrix();
        &(&b * &self.field.trace_gram()) * &b.transpose()
    }

    /// `det(Tr(b_i b_j))`.
    pub fn disc(&self) -> Rational {
        self.trace_gram().determinant().expect("square")
    }

    /// `(self : self)`, always an order.
    pub fn multiplier_ring(&self) -> Order {
        Order::from_lattice_unchecked(self.colon(self))
    }

    /// Canonical integer representation `(denominator, rows)`.
    pub fn to_integer_rows(&self) -> (BigInt, Vec<Vec<BigInt>>) {
        (self.basis.denominator().clone(), self.basis.basis().to_vec())
    }

    pub fn from_integer_rows(field: &NumberField, denominator: BigInt, rows: &[Vec<BigInt>]) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::Zero("lattice denominator".into()));
        }
        Self::from_hnf(field, HnfBasis::from_integer_rows(rows, denominator, field.degree())?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn sqrt2() -> NumberField {
        NumberField::from_i64(&[-2, 0, 1]).unwrap()
    }

    #[test]
    fn span_and_index() {
        let k = sqrt2();
        let z = KLattice::power_basis(&k);
        let l = KLattice::span(&k, &[k.element_i64(&[2, 0]).unwrap(), k.element_i64(&[0, 2]).unwrap()]).unwrap();
        assert_eq!(generalized_index(&z, &l).unwrap(), int(4));
        assert_eq!(generalized_index(&l, &z).unwrap(), rat(1, 4));
        let deficient = KLattice::span(&k, &[k.one(), k.from_rational(int(3))]);
        assert!(matches!(deficient, Err(Error::Rank(_))));
    }

    #[test]
    fn trace_dual_of_sqrt2() {
        let k = sqrt2();
        let z = KLattice::power_basis(&k);
        assert_eq!(z.disc(), int(8));
        let d = z.trace_dual();
        // Z[sqrt2]^dual = (1/(2 sqrt2)) Z[sqrt2] = Z*1/2 + Z*sqrt2/4
        let expect = KLattice::span(&k, &[k.element(vec![rat(1, 2), int(0)]).unwrap(), k.element(vec![int(0), rat(1, 4)]).unwrap()]).unwrap();
        assert_eq!(d, expect);
        assert_eq!(d.trace_dual(), z);
        assert_eq!(generalized_index(&d, &z).unwrap(), int(8));
    }

    #[test]
    fn colon_matches_bruteforce() {
        // T = Z[sqrt -3], conductor 2O with O = Z[(1 + sqrt -3)/2]
        let k = NumberField::from_i64(&[3, 0, 1]).unwrap();
        let t = KLattice::power_basis(&k);
        let o = KLattice::span(&k, &[k.one(), k.element(vec![rat(1, 2), rat(1, 2)]).unwrap()]).unwrap();
        let f = t.colon(&o);
        assert_eq!(f, o.scale(&int(2)).unwrap());
        let c = t.colon(&f);
        // brute force: a = (p + q t)/8 with |p|,|q| <= 24, test a * f ⊆ T
        let fb = f.basis_elements();
        for p in -24..=24 {
            for q in -24..=24 {
                let a = k.element(vec![rat(p, 8), rat(q, 8)]).unwrap();
                let inside = fb.iter().all(|b| t.contains(&a.mul(b)));
                assert_eq!(inside, c.contains(&a), "a = ({p} + {q} t)/8");
            }
        }
    }

    #[test]
    fn products_and_scaling() {
        let k = NumberField::from_i64(&[-1, -2, 1, 1]).unwrap();
        let o = KLattice::power_basis(&k);
        let two = o.scale(&int(2)).unwrap();
        let three = o.scale(&int(3)).unwrap();
        assert_eq!(two.product(&three), o.scale(&int(6)).unwrap());
        assert_eq!(o.disc(), int(49));
        let l = two.scale(&rat(1, 3)).unwrap();
        assert_eq!(l.disc(), int(49) * rat(2, 3).pow(6));
    }
}
