//! JSON input files.
//!
//! Rationals are written as integers or `"p/q"` strings. Any nested group,
//! field or algebra may be replaced by a string path, resolved relative to the
//! file that mentions it.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exact::{parse_rational, Poly, Rational};
use crate::field::{GaloisAction, NumberField};
use crate::group::FiniteGroup;
use crate::lattice::KLattice;

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Q {
    Int(i64),
    Text(String),
}

impl Q {
    pub fn to_rational(&self) -> Result<Rational> {
        match self {
            Q::Int(n) => Ok(Rational::from_integer((*n).into())),
            Q::Text(s) => parse_rational(s),
        }
    }
}

fn rationals(v: &[Q]) -> Result<Vec<Rational>> {
    v.iter().map(Q::to_rational).collect()
}

/// Inline value or path to a file holding one.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Ref<T> {
    Path(String),
    Inline(T),
}

impl<T: DeserializeOwned + Clone> Ref<T> {
    pub fn resolve(&self, base: &Path) -> Result<(T, PathBuf)> {
        match self {
            Ref::Inline(t) => Ok((t.clone(), base.to_path_buf())),
            Ref::Path(p) => {
                let path = base.join(p);
                let t = read_json(&path)?;
                let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
                Ok((t, dir))
            }
        }
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Schema(format!("{}: {e}", path.display())))
}

/// Directory used to resolve references inside `path`.
pub fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    /// `C<n>`, `D<n>` (order `2n`), `S<n>`, `V4`, or `A x B` of these.
    Builtin { builtin: String },
    Table {
        order: usize,
        table: Vec<Vec<usize>>,
        #[serde(default)]
        names: Option<Vec<String>>,
    },
}

fn builtin_group(name: &str) -> Result<FiniteGroup> {
    let name = name.trim();
    if let Some((a, b)) = name.split_once('x') {
        return Ok(FiniteGroup::direct_product(&builtin_group(a)?, &builtin_group(b)?));
    }
    let bad = || Error::Schema(format!("unknown builtin group {name:?}"));
    if name == "V4" {
        return Ok(FiniteGroup::klein_four());
    }
    let (kind, n) = name.split_at(1);
    let n: usize = n.parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(bad());
    }
    match kind {
        "C" => Ok(FiniteGroup::cyclic(n)),
        "D" if n >= 3 => Ok(FiniteGroup::dihedral(n)),
        "S" if n <= 5 => Ok(FiniteGroup::symmetric(n)),
        _ => Err(bad()),
    }
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Builtin { builtin } => builtin_group(builtin),
            GroupSpec::Table { order, table, names } => {
                if table.len() != *order {
                    return Err(Error::Schema(format!("order {order} but table has {} rows", table.len())));
                }
                FiniteGroup::from_table(table.clone(), names.clone())
            }
        }
    }

    /// Label for report rows.
    pub fn label(&self) -> String {
        match self {
            GroupSpec::Builtin { builtin } => builtin.clone(),
            GroupSpec::Table { order, .. } => format!("table{order}"),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeSpec {
    #[serde(default)]
    pub denominator: Option<Q>,
    /// Rows of power-basis coordinates; any spanning set is accepted.
    pub basis: Vec<Vec<Q>>,
}

impl LatticeSpec {
    pub fn build(&self, field: &NumberField) -> Result<KLattice> {
        let den = match &self.denominator {
            Some(d) => d.to_rational()?,
            None => Rational::from_integer(1.into()),
        };
        let rows = self
            .basis
            .iter()
            .map(|r| Ok(rationals(r)?.into_iter().map(|q| q / &den).collect()))
            .collect::<Result<Vec<Vec<Rational>>>>()?;
        if rows.iter().any(|r| r.len() != field.degree()) {
            return Err(Error::Schema(format!("lattice rows must have {} entries", field.degree())));
        }
        KLattice::from_rows(field, &rows)
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaloisSpec {
    /// Element (index or name) to the power-basis coordinates of its image of `t`.
    pub generator_images: BTreeMap<String, Vec<Q>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    /// Coefficients from the constant term up to the leading 1.
    pub min_poly: Vec<Q>,
    pub group: Ref<GroupSpec>,
    pub galois: GaloisSpec,
    #[serde(default)]
    pub maximal_order_hint: Option<LatticeSpec>,
}

/// A Galois field with its action and an optional maximal-order hint.
pub struct BuiltField {
    pub action: GaloisAction,
    pub hint: Option<KLattice>,
}

impl FieldSpec {
    pub fn build(&self, base: &Path) -> Result<BuiltField> {
        let (gspec, _) = self.group.resolve(base)?;
        let group = Arc::new(gspec.build()?);
        let field = NumberField::new(Poly::new(rationals(&self.min_poly)?))?;
        let mut gens = Vec::new();
        for (key, coords) in &self.galois.generator_images {
            let g = key
                .parse::<usize>()
                .ok()
                .filter(|&i| i < group.order())
                .or_else(|| group.index_of(key))
                .ok_or_else(|| Error::Schema(format!("unknown group element {key:?}")))?;
            let coords = rationals(coords)?;
            if coords.len() != field.degree() {
                return Err(Error::Schema(format!("image of {key} must have {} coordinates", field.degree())));
            }
            gens.push((g, field.element(coords)?));
        }
        let action = GaloisAction::from_generator_images(&field, group, &gens)?;
        let hint = self.maximal_order_hint.as_ref().map(|h| h.build(&field)).transpose()?;
        Ok(BuiltField { action, hint })
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum AlgebraSpec {
    Split { split: Ref<GroupSpec> },
    Field { field: Ref<FieldSpec> },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    pub algebra: Ref<AlgebraSpec>,
    pub x: Vec<Q>,
}

impl PairSpec {
    pub fn x(&self) -> Result<Vec<Rational>> {
        rationals(&self.x)
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum OrderKind {
    /// `"equation"` or `"maximal"`.
    Named(String),
    /// `Z[a]` for an integral generator `a`.
    Generator { generator: Vec<Q> },
    Lattice(LatticeSpec),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderSpec {
    pub field: Ref<FieldSpec>,
    pub order: OrderKind,
}

impl OrderKind {
    pub fn generator(&self) -> Option<Result<Vec<Rational>>> {
        match self {
            OrderKind::Generator { generator } => Some(rationals(generator)),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum IdealSpec {
    /// `"unit"`, `"conductor"` or `"different"`.
    Named { named: String },
    /// The ideal generated over the order by these elements.
    Generators { generators: Vec<Vec<Q>> },
    /// A lattice that must already be stable under the order.
    Lattice(LatticeSpec),
}

impl IdealSpec {
    pub fn generator_rows(&self) -> Option<Result<Vec<Vec<Rational>>>> {
        match self {
            IdealSpec::Generators { generators } => Some(generators.iter().map(|g| rationals(g)).collect()),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoxSpec {
    pub max_numerator: u32,
    pub max_denominator: u32,
}
