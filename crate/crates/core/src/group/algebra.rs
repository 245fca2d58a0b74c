use std::fmt::Debug;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Exact scalars the group algebra can be built over: Q itself, or a number
/// field. Elements carry their own context, so constants are produced from an
/// existing value.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Result<Self>;

    fn neg(&self) -> Self {
        self.zero_like().sub(self)
    }
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

/// Determinant of a square matrix over any exact scalar, by elimination.
pub fn determinant<S: Scalar>(mut m: Vec<Vec<S>>) -> Result<S> {
    let n = m.len();
    let Some(sample) = m.first().and_then(|r| r.first()).cloned() else {
        return Err(Error::Dimension("determinant of an empty matrix".into()));
    };
    let mut det = sample.one_like();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Ok(sample.zero_like());
        };
        if p != c {
            m.swap(p, c);
            det = det.neg();
        }
        let pivot_inv = m[c][c].inv()?;
        det = det.mul(&m[c][c]);
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].mul(&pivot_inv);
            for j in c..n {
                let v = m[c][j].mul(&f);
                m[i][j] = m[i][j].sub(&v);
            }
        }
    }
    Ok(det)
}

/// `sum_g a_g [g]` in the group algebra `S[G]`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupAlgebraElement<S: Scalar> {
    group: Arc<FiniteGroup>,
    coeffs: Vec<S>,
}

fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl<S: Scalar> GroupAlgebraElement<S> {
    pub fn new(group: Arc<FiniteGroup>, coeffs: Vec<S>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::Dimension(format!(
                "{} coefficients for a group of order {}",
                coeffs.len(),
                group.order()
            )));
        }
        Ok(GroupAlgebraElement { group, coeffs })
    }

    /// The basis element `[g]`; `unit` supplies the scalar context.
    pub fn basis(group: Arc<FiniteGroup>, g: usize, unit: &S) -> Self {
        let coeffs = (0..group.order())
            .map(|h| if h == g { unit.one_like() } else { unit.zero_like() })
            .collect();
        GroupAlgebraElement { group, coeffs }
    }

    pub fn one(group: Arc<FiniteGroup>, unit: &S) -> Self {
        let e = group.identity();
        Self::basis(group, e, unit)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> &S {
        &self.coeffs[g]
    }

    fn check_group(&self, other: &Self) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::Group("group algebra elements over different groups".into()))
        }
    }

    /// Convolution product: the coefficient of `k` is `sum_{gh = k} a_g b_h`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        let g = &self.group;
        let mut out: Vec<S> = self.coeffs.iter().map(|c| c.zero_like()).collect();
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let k = g.mul(a, b);
                out[k] = out[k].add(&ca.mul(cb));
            }
        }
        Ok(GroupAlgebraElement {
            group: self.group.clone(),
            coeffs: out,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(GroupAlgebraElement {
            group: self.group.clone(),
            coeffs,
        })
    }

    pub fn scale(&self, c: &S) -> Self {
        GroupAlgebraElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// `sum_g a_g`.
    pub fn augmentation(&self) -> S {
        self.coeffs
            .iter()
            .skip(1)
            .fold(self.coeffs[0].clone(), |acc, c| acc.add(c))
    }

    /// `sum_g a_g [g^-1]`.
    pub fn involution(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for g in self.group.elements() {
            coeffs[self.group.inv(g)] = self.coeffs[g].clone();
        }
        GroupAlgebraElement {
            group: self.group.clone(),
            coeffs,
        }
    }

    /// Group determinant `det(a_{g h^-1})_{g,h}`, the determinant of left
    /// multiplication by `self` on the regular representation. It differs from
    /// `det(a_{gh})` by the sign of `h -> h^-1`, so both vanish together, but
    /// only this normalisation is multiplicative.
    pub fn group_determinant(&self) -> Result<S> {
        let g = &self.group;
        let m = g
            .elements()
            .map(|a| {
                g.elements()
                    .map(|b| self.coeffs[g.mul(a, g.inv(b))].clone())
                    .collect()
            })
            .collect();
        determinant(m)
    }

    pub fn is_one(&self) -> bool {
        self.group.elements().all(|g| {
            let c = &self.coeffs[g];
            if g == self.group.identity() {
                *c == c.one_like()
            } else {
                c.is_zero()
            }
        })
    }

    /// Membership in `U_G`: augmentation one and nonzero group determinant.
    pub fn in_unit_group(&self) -> Result<bool> {
        let eps = self.augmentation();
        if eps != eps.one_like() {
            return Ok(false);
        }
        Ok(!self.group_determinant()?.is_zero())
    }

    /// Membership in `SU_G`: `u * conj(u) = 1`. Errors if `u` is not in `U_G`.
    pub fn in_special_unit_group(&self) -> Result<bool> {
        if !self.in_unit_group()? {
            return Err(Error::NotUnit);
        }
        Ok(self.multiply(&self.involution())?.is_one())
    }

    /// Apply `f` to every coefficient.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> GroupAlgebraElement<T> {
        GroupAlgebraElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}
