//! Canonical Hermite normal forms of full-rank lattices in `Q^d`.
//!
//! Every lattice is stored as `basis / denominator` where `basis` is an
//! integer matrix in row Hermite normal form (upper triangular, positive
//! diagonal, entries above a pivot reduced into `[0, pivot)`) and the
//! denominator is coprime to the content of `basis`. Two lattices are equal
//! exactly when their representations are equal.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{lcm_of_denominators, RationalMatrix, Rational};
use crate::error::{Error, Result};

/// Row Hermite normal form of an integer matrix whose rows span a lattice of
/// full rank `dim`. Zero rows are dropped; the result is `dim x dim`.
pub fn hnf(rows: &[Vec<BigInt>], dim: usize) -> Result<Vec<Vec<BigInt>>> {
    if rows.iter().any(|r| r.len() != dim) {
        return Err(Error::Dimension(format!("expected rows of length {dim}")));
    }
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .cloned()
        .collect();
    let m = a.len();
    for col in 0..dim {
        let r = col;
        loop {
            let pivot = (r..m)
                .filter(|&i| !a[i][col].is_zero())
                .min_by(|&i, &j| a[i][col].abs().cmp(&a[j][col].abs()));
            let Some(p) = pivot else {
                return Err(Error::Rank(format!("no pivot in column {col}")));
            };
            a.swap(r, p);
            let mut clean = true;
            for i in r + 1..m {
                if a[i][col].is_zero() {
                    continue;
                }
                let q = a[i][col].div_floor(&a[r][col]);
                sub_scaled(&mut a, i, r, &q, col);
                if !a[i][col].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if a[r][col].is_negative() {
            for v in a[r][col..].iter_mut() {
                *v = -&*v;
            }
        }
        for i in 0..r {
            let q = a[i][col].div_floor(&a[r][col]);
            if !q.is_zero() {
                sub_scaled(&mut a, i, r, &q, col);
            }
        }
    }
    a.truncate(dim);
    Ok(a)
}

fn sub_scaled(a: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt, from: usize) {
    let (t, s) = if target < source {
        let (lo, hi) = a.split_at_mut(source);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(target);
        (&mut hi[0], &lo[source])
    };
    for j in from..t.len() {
        if !s[j].is_zero() {
            t[j] -= q * &s[j];
        }
    }
}

/// A full-rank lattice in `Q^d` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HnfBasis {
    basis: Vec<Vec<BigInt>>,
    denominator: BigInt,
}

impl HnfBasis {
    /// Z-span of rational row vectors of length `dim`.
    pub fn from_rows(rows: &[Vec<Rational>], dim: usize) -> Result<Self> {
        let den = lcm_of_denominators(rows.iter().flatten());
        let d = Rational::from_integer(den.clone());
        let int_rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|q| (q * &d).to_integer()).collect())
            .collect();
        Self::from_integer_rows(&int_rows, den, dim)
    }

    /// Z-span of `rows / denominator`.
    pub fn from_integer_rows(rows: &[Vec<BigInt>], denominator: BigInt, dim: usize) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::Zero("lattice denominator".into()));
        }
        let mut basis = hnf(rows, dim)?;
        let mut den = denominator.abs();
        let g = basis.iter().flatten().fold(den.clone(), |acc, v| acc.gcd(v));
        if !g.is_one() {
            for v in basis.iter_mut().flatten() {
                *v /= &g;
            }
            den /= &g;
        }
        Ok(HnfBasis {
            basis,
            denominator: den,
        })
    }

    pub fn identity(dim: usize) -> Self {
        let basis = (0..dim)
            .map(|i| (0..dim).map(|j| BigInt::from((i == j) as u8)).collect())
            .collect();
        HnfBasis {
            basis,
            denominator: BigInt::one(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn rational_rows(&self) -> Vec<Vec<Rational>> {
        self.basis
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| Rational::new(v.clone(), self.denominator.clone()))
                    .collect()
            })
            .collect()
    }

    pub fn matrix(&self) -> RationalMatrix {
        RationalMatrix::from_rows(&self.rational_rows()).expect("square basis")
    }

    /// Covolume `|det(basis)|`, i.e. the index `[Z^d : L]` as a rational.
    pub fn volume(&self) -> Rational {
        let diag = (0..self.dim()).fold(BigInt::one(), |acc, i| acc * &self.basis[i][i]);
        Rational::new(diag, num_traits::pow(self.denominator.clone(), self.dim()))
    }

    /// Coordinates of `v` in this basis (always exists, rational in general).
    pub fn coordinates(&self, v: &[Rational]) -> Vec<Rational> {
        // Forward substitution against the upper-triangular basis.
        let n = self.dim();
        let den = Rational::from_integer(self.denominator.clone());
        let mut rest: Vec<Rational> = v.iter().map(|q| q * &den).collect();
        let mut coords = vec![Rational::zero(); n];
        for i in 0..n {
            let c = &rest[i] / Rational::from_integer(self.basis[i][i].clone());
            for j in i..n {
                if !self.basis[i][j].is_zero() {
                    rest[j] -= &c * Rational::from_integer(self.basis[i][j].clone());
                }
            }
            coords[i] = c;
        }
        coords
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).iter().all(|c| c.is_integer())
    }

    pub fn contains_lattice(&self, other: &HnfBasis) -> bool {
        other.rational_rows().iter().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &HnfBasis) -> HnfBasis {
        let mut rows = self.rational_rows();
        rows.extend(other.rational_rows());
        Self::from_rows(&rows, self.dim()).expect("sum of full-rank lattices is full rank")
    }

    /// The dual lattice `{y : <x, y> in Z for all x}` for the standard pairing.
    pub fn dual(&self) -> HnfBasis {
        let inv = self.matrix().inverse().expect("full-rank basis").transpose();
        Self::from_rows(&inv.to_rows(), self.dim()).expect("dual of full rank is full rank")
    }

    pub fn intersection(&self, other: &HnfBasis) -> HnfBasis {
        self.dual().sum(&other.dual()).dual()
    }

    pub fn scale(&self, c: &Rational) -> Result<HnfBasis> {
        if c.is_zero() {
            return Err(Error::Zero("scaling a lattice by zero".into()));
        }
        let rows: Vec<Vec<Rational>> = self
            .rational_rows()
            .into_iter()
            .map(|r| r.into_iter().map(|q| q * c).collect())
            .collect();
        Self::from_rows(&rows, self.dim())
    }

    /// Image of the lattice under the right action of an invertible matrix.
    pub fn transform(&self, m: &RationalMatrix) -> Result<HnfBasis> {
        let img = &self.matrix() * m;
        Self::from_rows(&img.to_rows(), m.ncols())
    }
}

/// Generalized index `[outer : inner] = [outer : C] / [inner : C]` with
/// `C = outer ∩ inner`, as an exact positive rational.
pub fn generalized_index(outer: &HnfBasis, inner: &HnfBasis) -> Result<Rational> {
    if outer.dim() != inner.dim() {
        return Err(Error::Dimension(format!(
            "lattices of rank {} and {}",
            outer.dim(),
            inner.dim()
        )));
    }
    Ok(inner.volume() / outer.volume())
}
