use std::collections::VecDeque;
use std::sync::Arc;

use num_traits::One;

use super::{FieldElement, NumberField};
use crate::error::{Error, Result};
use crate::exact::{Rational, RationalMatrix};
use crate::group::FiniteGroup;

/// A left action of a finite group on a number field by automorphisms, stored
/// as the image of `t` under every group element.
#[derive(Clone, Debug)]
pub struct GaloisAction {
    field: NumberField,
    group: Arc<FiniteGroup>,
    images: Vec<FieldElement>,
    matrices: Vec<RationalMatrix>,
}

/// Matrix `A` with `coords(sigma(x)) = coords(x) * A` when `sigma(t) = image`.
fn substitution_matrix(image: &FieldElement) -> RationalMatrix {
    let field = image.field();
    let mut rows = Vec::with_capacity(field.degree());
    let mut p = field.one();
    for _ in 0..field.degree() {
        rows.push(p.coords().to_vec());
        p = p.mul(image);
    }
    RationalMatrix::from_rows(&rows).expect("square")
}

fn substitute(x: &FieldElement, a: &RationalMatrix) -> FieldElement {
    x.field()
        .element(a.left_apply(x.coords()))
        .expect("coordinate length preserved")
}

/// Check that `images[g]` (the image of `t` under `g`) defines a faithful
/// action of `group` realizing its table, with `|G| = d` and fixed field Q.
pub fn verify_galois(field: &NumberField, group: &FiniteGroup, images: &[FieldElement]) -> bool {
    let d = field.degree();
    if group.order() != d || images.len() != d || images.iter().any(|x| x.field() != field) {
        return false;
    }
    if images[group.identity()] != field.generator() {
        return false;
    }
    let f = field.min_poly();
    for x in images {
        let mut value = field.zero();
        for c in f.coeffs().iter().rev() {
            value = value.mul(x).add(&field.from_rational(c.clone()));
        }
        if !value.is_zero() {
            return false;
        }
    }
    for i in 0..d {
        for j in 0..i {
            if images[i] == images[j] {
                return false;
            }
        }
    }
    let matrices: Vec<RationalMatrix> = images.iter().map(substitution_matrix).collect();
    for s in group.elements() {
        for t in group.elements() {
            if substitute(&images[t], &matrices[s]) != images[group.mul(s, t)] {
                return false;
            }
        }
    }
    // Fixed field: {x : x A_s = x for all s} must be the rationals.
    let mut big = RationalMatrix::zeros(d, d * d);
    for (k, a) in matrices.iter().enumerate() {
        for r in 0..d {
            for c in 0..d {
                let mut v = a[(r, c)].clone();
                if r == c {
                    v -= Rational::one();
                }
                big[(r, k * d + c)] = v;
            }
        }
    }
    big.left_kernel().len() == 1
}

impl GaloisAction {
    /// Extend generator images along the group table and verify the result.
    pub fn from_generator_images(
        field: &NumberField,
        group: Arc<FiniteGroup>,
        generators: &[(usize, FieldElement)],
    ) -> Result<Self> {
        let n = group.order();
        if n != field.degree() {
            return Err(Error::Galois(format!(
                "group of order {n} cannot act simply transitively on the roots of a degree {} polynomial",
                field.degree()
            )));
        }
        let mut images: Vec<Option<FieldElement>> = vec![None; n];
        images[group.identity()] = Some(field.generator());
        let gen_mats: Vec<(usize, RationalMatrix)> = generators
            .iter()
            .map(|(g, x)| (*g, substitution_matrix(x)))
            .collect();
        for (g, x) in generators {
            if *g >= n || x.field() != field {
                return Err(Error::Galois("generator outside the group or field".into()));
            }
        }
        let mut queue = VecDeque::from([group.identity()]);
        while let Some(h) = queue.pop_front() {
            let img = images[h].clone().expect("queued elements have images");
            for (g, m) in &gen_mats {
                // (g h)(t) = g(h(t))
                let gh = group.mul(*g, h);
                let cand = substitute(&img, m);
                match &images[gh] {
                    Some(existing) if *existing != cand => {
                        return Err(Error::Galois(format!(
                            "generator images are inconsistent with the table at {}",
                            group.name(gh)
                        )))
                    }
                    Some(_) => {}
                    None => {
                        images[gh] = Some(cand);
                        queue.push_back(gh);
                    }
                }
            }
        }
        let images: Vec<FieldElement> = images
            .into_iter()
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Galois("generators do not generate the group".into()))?;
        if !verify_galois(field, &group, &images) {
            return Err(Error::Galois("images do not define a Galois action".into()));
        }
        let matrices = images.iter().map(substitution_matrix).collect();
        Ok(GaloisAction {
            field: field.clone(),
            group,
            images,
            matrices,
        })
    }

    /// The trivial group acting on Q.
    pub fn trivial(field: &NumberField) -> Result<Self> {
        Self::from_generator_images(field, Arc::new(FiniteGroup::cyclic(1)), &[])
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// `g(t)`.
    pub fn image(&self, g: usize) -> &FieldElement {
        &self.images[g]
    }

    pub fn images(&self) -> &[FieldElement] {
        &self.images
    }

    /// `g(x)`.
    pub fn apply(&self, g: usize, x: &FieldElement) -> FieldElement {
        substitute(x, &self.matrices[g])
    }

    /// Matrix of `g` acting on power-basis coordinates from the right.
    pub fn matrix(&self, g: usize) -> &RationalMatrix {
        &self.matrices[g]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn zeta7_plus() -> GaloisAction {
        let k = NumberField::from_i64(&[-1, -2, 1, 1]).unwrap();
        let s = k.element_i64(&[-2, 0, 1]).unwrap();
        GaloisAction::from_generator_images(&k, Arc::new(FiniteGroup::cyclic(3)), &[(1, s)]).unwrap()
    }

    #[test]
    fn cubic_action_is_cyclic() {
        let a = zeta7_plus();
        let k = a.field().clone();
        let t = k.generator();
        let s1 = a.apply(1, &t);
        let s3 = a.apply(1, &a.apply(1, &s1));
        assert_eq!(s3, t);
        assert!(verify_galois(&k, a.group(), a.images()));
    }

    #[test]
    fn wrong_order_rejected() {
        let k = NumberField::from_i64(&[-1, -2, 1, 1]).unwrap();
        let c2 = FiniteGroup::cyclic(2);
        let images = vec![k.generator(), k.element_i64(&[-2, 0, 1]).unwrap()];
        assert!(!verify_galois(&k, &c2, &images));
        let err = GaloisAction::from_generator_images(&k, Arc::new(c2), &[]).unwrap_err();
        assert!(matches!(err, Error::Galois(_)));
    }

    #[test]
    fn non_automorphism_rejected() {
        let k = NumberField::from_i64(&[-1, -2, 1, 1]).unwrap();
        let bogus = k.element_i64(&[1, 1, 0]).unwrap();
        let r = GaloisAction::from_generator_images(&k, Arc::new(FiniteGroup::cyclic(3)), &[(1, bogus)]);
        assert!(matches!(r, Err(Error::Galois(_))));
    }

    #[test]
    fn trivial_action_on_q() {
        let q = NumberField::rationals();
        let a = GaloisAction::trivial(&q).unwrap();
        assert_eq!(a.apply(0, &q.from_rational(rat(3, 4))), q.from_rational(rat(3, 4)));
    }

    #[test]
    fn klein_four_field() {
        // t^4 - 10 t^2 + 1, root sqrt2 + sqrt3
        let k = NumberField::from_i64(&[1, 0, -10, 0, 1]).unwrap();
        let v4 = Arc::new(FiniteGroup::klein_four());
        let s = k.element_i64(&[0, 10, 0, -1]).unwrap();
        let u = k.element_i64(&[0, -10, 0, 1]).unwrap();
        let a = GaloisAction::from_generator_images(&k, v4, &[(2, s), (1, u)]).unwrap();
        assert_eq!(a.image(3), &k.generator().neg());
        let x = k.element(vec![rat(1, 2), int(3), rat(-1, 7), int(2)]).unwrap();
        let sum = (0..4).fold(k.zero(), |acc, g| acc.add(&a.apply(g, &x)));
        assert_eq!(sum, k.from_rational(x.trace()));
    }

    proptest::proptest! {
        #[test]
        fn action_composes_and_preserves_trace(c in proptest::collection::vec(-20i64..=20, 3)) {
            static A: std::sync::OnceLock<GaloisAction> = std::sync::OnceLock::new();
            let a = A.get_or_init(zeta7_plus);
            let x = a.field().element_i64(&c).unwrap();
            let g = a.group().clone();
            for s in g.elements() {
                proptest::prop_assert_eq!(a.apply(s, &x).trace(), x.trace());
                proptest::prop_assert_eq!(a.apply(s, &x).norm(), x.norm());
                for t in g.elements() {
                    proptest::prop_assert_eq!(a.apply(g.mul(s, t), &x), a.apply(s, &a.apply(t, &x)));
                }
            }
        }
    }
}
