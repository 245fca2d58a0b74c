//! G-algebras over Q with a distinguished element: the split algebra of
//! functions `G -> Q` and Galois number fields. Normal and self-dual elements,
//! the conjugate lattice, fiber units and the action of the unit group.

mod search;

pub use search::{enumerate_box, normal_search, selfdual_search, SearchBox};

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Rational, RationalMatrix};
use crate::field::{FieldElement, GaloisAction, NumberField};
use crate::group::{FiniteGroup, GroupAlgebraElement};
use crate::lattice::{FractionalIdeal, KLattice, Order};

/// A G-algebra `L` over Q of dimension `|G|`.
#[derive(Clone, Debug)]
pub enum GAlgebra {
    /// Functions `G -> Q` with `(g x)(h) = x(hg)`. Values live in `K_L = Q`.
    Split {
        group: Arc<FiniteGroup>,
        rationals: NumberField,
    },
    /// A number field with a simply transitive action on its embeddings.
    Field(GaloisAction),
}

impl PartialEq for GAlgebra {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (GAlgebra::Split { group: a, .. }, GAlgebra::Split { group: b, .. }) => a == b,
            (GAlgebra::Field(a), GAlgebra::Field(b)) => {
                a.field() == b.field() && a.group() == b.group() && a.images() == b.images()
            }
            _ => false,
        }
    }
}

impl GAlgebra {
    pub fn split(group: Arc<FiniteGroup>) -> Self {
        GAlgebra::Split {
            group,
            rationals: NumberField::rationals(),
        }
    }

    pub fn field(action: GaloisAction) -> Self {
        GAlgebra::Field(action)
    }

    pub fn is_split(&self) -> bool {
        matches!(self, GAlgebra::Split { .. })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        match self {
            GAlgebra::Split { group, .. } => group,
            GAlgebra::Field(a) => a.group(),
        }
    }

    /// `dim_Q L = |G|`.
    pub fn dim(&self) -> usize {
        self.group().order()
    }

    /// The field `K_L` receiving every homomorphism out of `L`.
    pub fn value_field(&self) -> &NumberField {
        match self {
            GAlgebra::Split { rationals, .. } => rationals,
            GAlgebra::Field(a) => a.field(),
        }
    }

    fn check_len(&self, x: &[Rational]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::Dimension(format!(
                "element with {} coordinates in an algebra of dimension {}",
                x.len(),
                self.dim()
            )));
        }
        Ok(())
    }

    fn as_field_element(a: &GaloisAction, x: &[Rational]) -> FieldElement {
        a.field().element(x.to_vec()).expect("length checked")
    }

    pub fn one(&self) -> Vec<Rational> {
        match self {
            GAlgebra::Split { .. } => vec![Rational::one(); self.dim()],
            GAlgebra::Field(a) => a.field().one().coords().to_vec(),
        }
    }

    /// `g(x)`.
    pub fn translate(&self, g: usize, x: &[Rational]) -> Vec<Rational> {
        match self {
            GAlgebra::Split { group, .. } => group.elements().map(|h| x[group.mul(h, g)].clone()).collect(),
            GAlgebra::Field(a) => a.apply(g, &Self::as_field_element(a, x)).coords().to_vec(),
        }
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        match self {
            GAlgebra::Split { .. } => x.iter().zip(y).map(|(a, b)| a * b).collect(),
            GAlgebra::Field(a) => Self::as_field_element(a, x)
                .mul(&Self::as_field_element(a, y))
                .coords()
                .to_vec(),
        }
    }

    pub fn trace(&self, x: &[Rational]) -> Rational {
        match self {
            GAlgebra::Split { .. } => x.iter().sum(),
            GAlgebra::Field(a) => Self::as_field_element(a, x).trace(),
        }
    }

    /// The homomorphism `L -> K_L` labelled by `k`: evaluation at `k` for the
    /// split algebra, the automorphism `k` for a field.
    pub fn embed(&self, k: usize, x: &[Rational]) -> FieldElement {
        match self {
            GAlgebra::Split { rationals, .. } => rationals.from_rational(x[k].clone()),
            GAlgebra::Field(a) => a.apply(k, &Self::as_field_element(a, x)),
        }
    }

    /// Rows `g(x)` for `g` in `G`.
    pub fn conjugate_matrix(&self, x: &[Rational]) -> RationalMatrix {
        let rows: Vec<Vec<Rational>> = self.group().elements().map(|g| self.translate(g, x)).collect();
        RationalMatrix::from_rows(&rows).expect("square")
    }

    /// Trace one and conjugates forming a Q-basis.
    pub fn is_normal(&self, x: &[Rational]) -> bool {
        if x.len() != self.dim() || !self.trace(x).is_one() {
            return false;
        }
        match self {
            GAlgebra::Split { group, .. } => {
                let u = GroupAlgebraElement::new(group.clone(), x.to_vec()).expect("length");
                !crate::group::Scalar::is_zero(&u.group_determinant().expect("nonempty"))
            }
            GAlgebra::Field(_) => !self.conjugate_matrix(x).determinant().expect("square").is_zero(),
        }
    }

    /// `Tr(x g(x)) = [g = 1]` for every `g`; errors on non-normal input.
    pub fn is_self_dual(&self, x: &[Rational]) -> Result<bool> {
        self.check_len(x)?;
        if !self.is_normal(x) {
            return Err(Error::NotNormal("self-duality is only defined for normal elements".into()));
        }
        Ok(self.self_dual_unchecked(x))
    }

    pub(crate) fn self_dual_unchecked(&self, x: &[Rational]) -> bool {
        let e = self.group().identity();
        self.group().elements().all(|g| {
            let t = self.trace(&self.mul(x, &self.translate(g, x)));
            if g == e {
                t.is_one()
            } else {
                t.is_zero()
            }
        })
    }
}

/// A G-algebra with a normal element.
#[derive(Clone, Debug, PartialEq)]
pub struct Pair {
    algebra: GAlgebra,
    x: Vec<Rational>,
}

/// Lattice data attached to a pair.
#[derive(Clone, Debug, PartialEq)]
pub struct PairInvariants {
    /// `Λ_x`, the Z-span of the images of `x` in `K_L`.
    pub lattice: KLattice,
    /// `T_x = (Λ_x : Λ_x)`.
    pub multiplier_ring: Order,
    pub maximal_order: Order,
    pub disc_multiplier_ring: Rational,
    pub disc_lattice: Rational,
    pub discrepancy: Rational,
    /// Degree of `K_L` over Q.
    pub degree: usize,
}

impl Pair {
    pub fn new(algebra: GAlgebra, x: Vec<Rational>) -> Result<Self> {
        algebra.check_len(&x)?;
        if !algebra.is_normal(&x) {
            return Err(Error::NotNormal(format!("trace {} or dependent conjugates", algebra.trace(&x))));
        }
        Ok(Pair { algebra, x })
    }

    pub fn algebra(&self) -> &GAlgebra {
        &self.algebra
    }

    pub fn x(&self) -> &[Rational] {
        &self.x
    }

    pub fn is_self_dual(&self) -> bool {
        self.algebra.self_dual_unchecked(&self.x)
    }

    /// `Λ_x = sum_phi Z phi(x)` inside `K_L`.
    pub fn conjugate_lattice(&self) -> KLattice {
        let a = &self.algebra;
        let gens: Vec<FieldElement> = a.group().elements().map(|k| a.embed(k, &self.x)).collect();
        KLattice::span(a.value_field(), &gens).expect("normal elements span a full-rank lattice")
    }

    pub fn invariants(&self) -> Result<PairInvariants> {
        let lattice = self.conjugate_lattice();
        let t = lattice.multiplier_ring();
        let o = Order::maximal(self.algebra.value_field())?;
        let ideal = FractionalIdeal::new(t.clone(), lattice.clone())?;
        let discrepancy = ideal.discrepancy_with(&o)?;
        Ok(PairInvariants {
            disc_multiplier_ring: t.disc(),
            disc_lattice: lattice.disc(),
            degree: self.algebra.value_field().degree(),
            lattice,
            multiplier_ring: t,
            maximal_order: o,
            discrepancy,
        })
    }

    /// `u = sum_g phi(g x) [g^-1]` with `phi` the homomorphism labelled `phi`.
    pub fn fiber_unit(&self, phi: usize) -> Result<GroupAlgebraElement<FieldElement>> {
        let a = &self.algebra;
        let group = a.group();
        if phi >= group.order() {
            return Err(Error::Dimension(format!("no homomorphism labelled {phi}")));
        }
        let k = a.value_field();
        let mut coeffs = vec![k.zero(); group.order()];
        for g in group.elements() {
            coeffs[group.inv(g)] = a.embed(phi, &a.translate(g, &self.x));
        }
        GroupAlgebraElement::new(group.clone(), coeffs)
    }

    /// `u (L, x) = (L, sum_g a_g g(x))` for `u` in `U_G(Q)`.
    pub fn act(&self, u: &GroupAlgebraElement<Rational>) -> Result<Pair> {
        if u.group().as_ref() != self.algebra.group().as_ref() {
            return Err(Error::Group("unit and algebra have different groups".into()));
        }
        if !u.in_unit_group()? {
            return Err(Error::NotUnit);
        }
        let mut y = vec![Rational::zero(); self.x.len()];
        for g in self.algebra.group().elements() {
            let a = u.coeff(g);
            if a.is_zero() {
                continue;
            }
            for (yi, ti) in y.iter_mut().zip(self.algebra.translate(g, &self.x)) {
                *yi += a * ti;
            }
        }
        Pair::new(self.algebra.clone(), y)
    }

    /// The unique `u` with `act(u, self) = other`.
    pub fn solve_unit(&self, other: &Pair) -> Result<GroupAlgebraElement<Rational>> {
        if self.algebra != other.algebra {
            return Err(Error::Group("pairs over different algebras".into()));
        }
        let m = self.algebra.conjugate_matrix(&self.x);
        let a = m.solve_left(&other.x)?;
        let u = GroupAlgebraElement::new(self.algebra.group().clone(), a)?;
        if !u.in_unit_group()? {
            return Err(Error::InternalInvariant("solving unit is not in U_G".into()));
        }
        Ok(u)
    }
}
