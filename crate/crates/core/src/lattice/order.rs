use num_traits::One;

use super::{generalized_index, maximal_order, KLattice};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::field::{FieldElement, NumberField};

/// A subring of a number field that is a full-rank lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order {
    lattice: KLattice,
}

/// A finitely generated `T`-submodule of the field of full rank. The order is
/// carried explicitly and never inferred.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalIdeal {
    order: Order,
    lattice: KLattice,
}

/// One containment `left Z ⊆ right Z` of fractional Z-ideals in Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DvornicichRelation {
    pub left: Rational,
    pub right: Rational,
}

impl DvornicichRelation {
    pub fn holds(&self) -> bool {
        (&self.left / &self.right).is_integer()
    }

    pub fn is_equality(&self) -> bool {
        self.left == self.right
    }
}

fn stable_under(ring: &KLattice, m: &KLattice) -> bool {
    let a = ring.basis_elements();
    let b = m.basis_elements();
    a.iter().all(|x| b.iter().all(|y| m.contains(&x.mul(y))))
}

impl Order {
    /// Validate that the lattice contains 1 and is closed under multiplication.
    pub fn new(lattice: KLattice) -> Result<Self> {
        if !lattice.contains(&lattice.field().one()) {
            return Err(Error::NotOrder("lattice does not contain 1".into()));
        }
        if !stable_under(&lattice, &lattice) {
            return Err(Error::NotOrder("lattice is not closed under multiplication".into()));
        }
        Ok(Order { lattice })
    }

    pub(crate) fn from_lattice_unchecked(lattice: KLattice) -> Self {
        Order { lattice }
    }

    pub fn equation_order(field: &NumberField) -> Self {
        Order {
            lattice: KLattice::power_basis(field),
        }
    }

    /// The ring of integers, computed (and cached) on first use.
    pub fn maximal(field: &NumberField) -> Result<Self> {
        maximal_order(field, None)
    }

    /// `Z[a]` for an algebraic integer `a` generating the field.
    pub fn monogenic(a: &FieldElement) -> Result<Self> {
        let field = a.field();
        let mut gens = Vec::with_capacity(field.degree());
        let mut p = field.one();
        for _ in 0..field.degree() {
            gens.push(p.clone());
            p = p.mul(a);
        }
        Self::new(KLattice::span(field, &gens)?)
    }

    pub fn lattice(&self) -> &KLattice {
        &self.lattice
    }

    pub fn field(&self) -> &NumberField {
        self.lattice.field()
    }

    pub fn disc(&self) -> Rational {
        self.lattice.disc()
    }

    pub fn contains(&self, x: &FieldElement) -> bool {
        self.lattice.contains(x)
    }

    pub fn contains_order(&self, other: &Order) -> bool {
        self.lattice.contains_lattice(&other.lattice)
    }

    /// `[over : self]`; `over` must contain `self`.
    pub fn index_in(&self, over: &Order) -> Result<Rational> {
        if !over.contains_order(self) {
            return Err(Error::Containment("order is not contained in the larger order".into()));
        }
        generalized_index(&over.lattice, &self.lattice)
    }

    pub fn unit_ideal(&self) -> FractionalIdeal {
        FractionalIdeal {
            order: self.clone(),
            lattice: self.lattice.clone(),
        }
    }

    /// Validate that `lattice` is a `T`-module.
    pub fn ideal(&self, lattice: KLattice) -> Result<FractionalIdeal> {
        FractionalIdeal::new(self.clone(), lattice)
    }

    /// `T * lattice`, the smallest fractional ideal containing `lattice`.
    pub fn ideal_generated(&self, lattice: &KLattice) -> FractionalIdeal {
        FractionalIdeal {
            order: self.clone(),
            lattice: self.lattice.product(lattice),
        }
    }

    pub fn principal(&self, x: &FieldElement) -> Result<FractionalIdeal> {
        Ok(FractionalIdeal {
            order: self.clone(),
            lattice: self.lattice.mul_element(x)?,
        })
    }

    /// `f = (T : O)`, the largest O-ideal inside `T`, as a `T`-ideal.
    pub fn conductor(&self, maximal: &Order) -> Result<FractionalIdeal> {
        if !maximal.contains_order(self) {
            return Err(Error::Containment("order is not contained in the given maximal order".into()));
        }
        Ok(FractionalIdeal {
            order: self.clone(),
            lattice: self.lattice.colon(&maximal.lattice),
        })
    }

    /// `T^dual = {a : Tr(aT) ⊆ Z}`.
    pub fn trace_dual(&self) -> FractionalIdeal {
        FractionalIdeal {
            order: self.clone(),
            lattice: self.lattice.trace_dual(),
        }
    }

    /// `D_T = (T : T^dual)`.
    pub fn different(&self) -> FractionalIdeal {
        FractionalIdeal {
            order: self.clone(),
            lattice: self.lattice.colon(&self.lattice.trace_dual()),
        }
    }

    /// Gorenstein test: the different has trivial discrepancy.
    pub fn is_gorenstein(&self) -> Result<bool> {
        Ok(self.different().discrepancy()?.is_one())
    }
}

impl FractionalIdeal {
    /// Validate `T * lattice ⊆ lattice`.
    pub fn new(order: Order, lattice: KLattice) -> Result<Self> {
        if order.field() != lattice.field() {
            return Err(Error::OrderMismatch("ideal and order live in different fields".into()));
        }
        if !stable_under(&order.lattice, &lattice) {
            return Err(Error::OrderMismatch("lattice is not stable under the order".into()));
        }
        Ok(FractionalIdeal { order, lattice })
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn lattice(&self) -> &KLattice {
        &self.lattice
    }

    fn same_order(&self, other: &FractionalIdeal) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch("ideals over different orders".into()));
        }
        Ok(())
    }

    /// `N_T(I) = [T : I]`.
    pub fn norm(&self) -> Rational {
        generalized_index(&self.order.lattice, &self.lattice).expect("same field")
    }

    /// `O * I` as an ideal of the larger order `O`.
    pub fn extend(&self, over: &Order) -> Result<FractionalIdeal> {
        if !over.contains_order(&self.order) {
            return Err(Error::Containment("extension to an order not containing T".into()));
        }
        Ok(over.ideal_generated(&self.lattice))
    }

    /// `dis(I) = N_O(O I) / N_T(I)` against the maximal order of the field.
    pub fn discrepancy(&self) -> Result<Rational> {
        let o = Order::maximal(self.order.field())?;
        self.discrepancy_with(&o)
    }

    pub fn discrepancy_with(&self, maximal: &Order) -> Result<Rational> {
        Ok(self.extend(maximal)?.norm() / self.norm())
    }

    /// Upper bound `[O : T] * [O : f]` on the discrepancy of any `T`-ideal.
    pub fn discrepancy_bound(order: &Order, maximal: &Order) -> Result<Rational> {
        let f = order.conductor(maximal)?;
        Ok(order.index_in(maximal)? * generalized_index(&maximal.lattice, &f.lattice)?)
    }

    /// `I^-1 = (T : I)`, whether or not `I` is invertible.
    pub fn inverse(&self) -> FractionalIdeal {
        FractionalIdeal {
            order: self.order.clone(),
            lattice: self.order.lattice.colon(&self.lattice),
        }
    }

    pub fn mul(&self, other: &FractionalIdeal) -> Result<FractionalIdeal> {
        self.same_order(other)?;
        Ok(FractionalIdeal {
            order: self.order.clone(),
            lattice: self.lattice.product(&other.lattice),
        })
    }

    pub fn is_invertible(&self) -> bool {
        self.lattice.product(&self.inverse().lattice) == self.order.lattice
    }

    pub fn scale(&self, c: &Rational) -> Result<FractionalIdeal> {
        Ok(FractionalIdeal {
            order: self.order.clone(),
            lattice: self.lattice.scale(c)?,
        })
    }

    pub fn mul_element(&self, x: &FieldElement) -> Result<FractionalIdeal> {
        Ok(FractionalIdeal {
            order: self.order.clone(),
            lattice: self.lattice.mul_element(x)?,
        })
    }

    /// `(I : I)`.
    pub fn multiplier_ring(&self) -> Order {
        self.lattice.multiplier_ring()
    }

    /// The three index containments relating `I`, `I^-1`, `T` and `O`:
    /// `[O:OI] ⊆ [T:I]`, `[O:OI^-1] ⊆ [I:T]`, `[O:I^-1] ⊆ [OI:T]`.
    ///
    /// The third is taken with `T` on the right. With `O` there instead it is
    /// already strict for `I = T` whenever `T != O`, since `[O:T] ⊆ [O:O]`.
    pub fn dvornicich_relations(&self, maximal: &Order) -> Result<[DvornicichRelation; 3]> {
        let o = &maximal.lattice;
        let t = &self.order.lattice;
        let oi = self.extend(maximal)?.lattice;
        let inv = self.inverse().lattice;
        let oinv = maximal.ideal_generated(&inv).lattice;
        Ok([
            DvornicichRelation {
                left: generalized_index(o, &oi)?,
                right: generalized_index(t, &self.lattice)?,
            },
            DvornicichRelation {
                left: generalized_index(o, &oinv)?,
                right: generalized_index(&self.lattice, t)?,
            },
            DvornicichRelation {
                left: generalized_index(o, &inv)?,
                right: generalized_index(&oi, t)?,
            },
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use num_traits::Signed;

    fn eisenstein() -> (NumberField, Order, Order) {
        let k = NumberField::from_i64(&[3, 0, 1]).unwrap();
        let t = Order::equation_order(&k);
        let o = Order::maximal(&k).unwrap();
        (k, t, o)
    }

    #[test]
    fn order_validation() {
        let k = NumberField::from_i64(&[-2, 0, 1]).unwrap();
        let l = KLattice::span(&k, &[k.one(), k.element(vec![int(0), rat(1, 2)]).unwrap()]).unwrap();
        assert!(matches!(Order::new(l), Err(Error::NotOrder(_))));
        let l = KLattice::span(&k, &[k.from_rational(int(2)), k.generator()]).unwrap();
        assert!(matches!(Order::new(l), Err(Error::NotOrder(_))));
        let two_sqrt2 = Order::monogenic(&k.element_i64(&[0, 2]).unwrap()).unwrap();
        assert_eq!(two_sqrt2.index_in(&Order::equation_order(&k)).unwrap(), int(2));
    }

    #[test]
    fn eisenstein_conductor_and_discrepancy() {
        let (_, t, o) = eisenstein();
        assert_eq!(o.disc(), int(-3));
        assert_eq!(t.index_in(&o).unwrap(), int(2));
        let f = t.conductor(&o).unwrap();
        assert_eq!(f.lattice(), &o.lattice().scale(&int(2)).unwrap());
        assert_eq!(f.extend(&o).unwrap().norm(), int(4));
        assert_eq!(f.norm(), int(2));
        assert_eq!(f.discrepancy().unwrap(), int(2));
        assert_eq!(FractionalIdeal::discrepancy_bound(&t, &o).unwrap(), int(8));
        assert!(!f.is_invertible());
        assert_ne!(f.multiplier_ring(), t);
        assert!(t.is_gorenstein().unwrap());
    }

    #[test]
    fn maximal_order_facts() {
        let (_, _, o) = eisenstein();
        let one = o.unit_ideal();
        assert_eq!(one.discrepancy().unwrap(), int(1));
        assert_eq!(o.different().extend(&o).unwrap().norm(), int(3));
        assert!(o.is_gorenstein().unwrap());
    }

    #[test]
    fn different_of_sqrt2() {
        let k = NumberField::from_i64(&[-2, 0, 1]).unwrap();
        let o = Order::maximal(&k).unwrap();
        let d = o.different();
        let expect = o.principal(&k.element_i64(&[0, 2]).unwrap()).unwrap();
        assert_eq!(d, expect);
        assert_eq!(d.norm(), int(8));
    }

    #[test]
    fn principal_ideals() {
        let (k, t, _) = eisenstein();
        let x = k.element_i64(&[1, 1]).unwrap();
        let p = t.principal(&x).unwrap();
        assert_eq!(p.norm(), x.norm().abs());
        assert!(p.is_invertible());
        assert_eq!(p.discrepancy().unwrap(), int(1));
    }

    #[test]
    fn non_ideal_rejected() {
        let (k, t, _) = eisenstein();
        let l = KLattice::span(&k, &[k.one(), k.element_i64(&[0, 2]).unwrap()]).unwrap();
        assert!(matches!(t.ideal(l), Err(Error::OrderMismatch(_))));
    }

    #[test]
    fn subset_relations() {
        let (k, t, o) = eisenstein();
        let unit = t.unit_ideal().dvornicich_relations(&o).unwrap();
        assert!(unit.iter().all(|r| r.holds() && r.is_equality()));
        // with O in place of T on the right the third relation reads [O:T] vs 1
        assert_eq!(generalized_index(o.lattice(), t.lattice()).unwrap(), int(2));
        let p = t.principal(&k.element_i64(&[1, 1]).unwrap()).unwrap();
        assert!(p.dvornicich_relations(&o).unwrap().iter().all(|r| r.is_equality()));
        let f = t.conductor(&o).unwrap().dvornicich_relations(&o).unwrap();
        assert!(f.iter().all(|r| r.holds()));
        assert!(f.iter().all(|r| !r.is_equality()));
    }
}
