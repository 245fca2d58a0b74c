use num_bigint::BigInt;
use num_traits::One;

use super::{FieldElement, NumberField};
use crate::error::{Error, Result};
use crate::exact::{complex_roots, Ball, ComplexEnclosure, Rational};

const MAX_REFINEMENTS: u32 = 20;

/// Certified enclosures of the roots of `f`, one per complex embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingSet {
    roots: Vec<ComplexEnclosure>,
}

impl EmbeddingSet {
    pub fn roots(&self) -> &[ComplexEnclosure] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn real_count(&self) -> usize {
        self.roots.iter().filter(|r| r.is_real()).count()
    }

    pub fn is_totally_real(&self) -> bool {
        self.real_count() == self.roots.len()
    }
}

/// Smallest `b` with `2^-b <= r`.
pub(crate) fn bits_for(r: &Rational) -> u32 {
    let inv = (Rational::one() / r).ceil().to_integer();
    inv.bits() as u32
}

impl NumberField {
    /// Root enclosures of radius at most `target_radius`, cached per field.
    pub fn embedding_set(&self, target_radius: &Rational) -> Result<EmbeddingSet> {
        let mut cache = self.root_cache().lock().expect("root cache poisoned");
        if let Some((r, set)) = cache.as_ref() {
            if r <= target_radius {
                return Ok(set.clone());
            }
        }
        let roots = complex_roots(self.min_poly(), target_radius)?;
        let set = EmbeddingSet { roots };
        *cache = Some((target_radius.clone(), set.clone()));
        Ok(set)
    }

    pub fn is_totally_real(&self) -> Result<bool> {
        Ok(self.embedding_set(&Rational::new(BigInt::one(), BigInt::from(1024)))?.is_totally_real())
    }
}

impl FieldElement {
    /// `phi(self)` for every complex embedding `phi`, in the order of
    /// [`NumberField::embedding_set`], each with radius at most `target_radius`.
    pub fn embeddings(&self, target_radius: &Rational) -> Result<Vec<ComplexEnclosure>> {
        let field = self.field();
        if self.is_rational() {
            let n = field.degree();
            return Ok(vec![ComplexEnclosure::real(Ball::exact(self.coords()[0].clone())); n]);
        }
        let mut root_radius = target_radius.clone();
        let step = Rational::new(BigInt::one(), BigInt::one() << 16);
        for _ in 0..=MAX_REFINEMENTS {
            let roots = field.embedding_set(&root_radius)?;
            let bits = bits_for(target_radius) + 16;
            let values: Vec<ComplexEnclosure> = roots
                .roots()
                .iter()
                .map(|r| {
                    let v = r.eval_poly(self.coords(), bits);
                    if r.is_real() {
                        ComplexEnclosure::real(v.re)
                    } else {
                        v
                    }
                })
                .collect();
            if values.iter().all(|v| &v.radius() <= target_radius) {
                return Ok(values);
            }
            root_radius *= &step;
        }
        Err(Error::Precision(format!(
            "embeddings did not reach radius {target_radius} after {MAX_REFINEMENTS} refinements"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn radius() -> Rational {
        Rational::new(BigInt::one(), BigInt::one() << 20)
    }

    #[test]
    fn sqrt2_embeddings() {
        let k = NumberField::from_i64(&[-2, 0, 1]).unwrap();
        let v = k.generator().embeddings(&radius()).unwrap();
        assert_eq!(v.len(), 2);
        assert!(v.iter().all(|z| z.is_real()));
        let sq = v[0].re.mul(&v[0].re);
        assert!(sq.contains(&int(2)));
        assert!(v[0].re.upper() < int(0) && v[1].re.lower() > int(0));
    }

    #[test]
    fn constants_embed_exactly() {
        let k = NumberField::from_i64(&[1, 1, 1, 1, 1]).unwrap();
        let v = k.one().embeddings(&radius()).unwrap();
        assert_eq!(v.len(), 4);
        assert!(v.iter().all(|z| z.re.is_exact() && z.re.mid == int(1)));
    }

    #[test]
    fn embedding_sum_of_squares_matches_trace() {
        let k = NumberField::from_i64(&[-1, -2, 1, 1]).unwrap();
        assert!(k.is_totally_real().unwrap());
        let x = k.element(vec![rat(1, 3), rat(-2, 5), rat(3, 7)]).unwrap();
        let v = x.embeddings(&radius()).unwrap();
        let s = v.iter().fold(Ball::zero(), |acc, z| acc.add(&z.norm_sqr()));
        assert!(s.contains(&x.mul(&x).trace()));
        assert!(s.rad <= rat(3, 1 << 19));
    }

    #[test]
    fn complex_field_is_not_totally_real() {
        let k = NumberField::from_i64(&[1, 0, 1]).unwrap();
        assert!(!k.is_totally_real().unwrap());
        let v = k.generator().embeddings(&radius()).unwrap();
        let n = v.iter().fold(Ball::zero(), |acc, z| acc.add(&z.norm_sqr()));
        assert!(n.contains(&int(2)));
    }
}
