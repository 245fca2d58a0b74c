//! On-disk cache of maximal orders keyed by a hash of the field and action.
//! Cached bases only ever enter as hints, which are verified before use.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exact::rational_to_string;
use crate::field::GaloisAction;
use crate::lattice::{maximal_order, KLattice, Order};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StoredLattice {
    pub denominator: String,
    pub basis: Vec<Vec<String>>,
}

impl StoredLattice {
    pub fn from_lattice(l: &KLattice) -> Self {
        let (den, rows) = l.to_integer_rows();
        StoredLattice {
            denominator: den.to_string(),
            basis: rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect(),
        }
    }

    pub fn to_lattice(&self, action: &GaloisAction) -> Result<KLattice> {
        let bad = |_| Error::Schema("malformed cached lattice".into());
        let den = self.denominator.parse().map_err(bad)?;
        let rows = self
            .basis
            .iter()
            .map(|r| r.iter().map(|v| v.parse().map_err(bad)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        KLattice::from_integer_rows(action.field(), den, &rows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedFieldRecord {
    pub fingerprint: String,
    pub min_poly: Vec<String>,
    pub maximal_order: StoredLattice,
    pub disc: String,
    /// Conductor of the equation order in the maximal order.
    pub equation_order_conductor: StoredLattice,
}

impl CachedFieldRecord {
    pub fn compute(action: &GaloisAction, maximal: &Order) -> Result<Self> {
        let field = action.field();
        let f = Order::equation_order(field).conductor(maximal)?;
        Ok(CachedFieldRecord {
            fingerprint: fingerprint(action),
            min_poly: field.min_poly().coeffs().iter().map(rational_to_string).collect(),
            maximal_order: StoredLattice::from_lattice(maximal.lattice()),
            disc: rational_to_string(&maximal.disc()),
            equation_order_conductor: StoredLattice::from_lattice(f.lattice()),
        })
    }
}

/// SHA-256 over the minimal polynomial and the image of `t` under each element.
pub fn fingerprint(action: &GaloisAction) -> String {
    let mut h = Sha256::new();
    for c in action.field().min_poly().coeffs() {
        h.update(rational_to_string(c).as_bytes());
        h.update(b",");
    }
    h.update(b"|");
    for img in action.images() {
        for c in img.coords() {
            h.update(rational_to_string(c).as_bytes());
            h.update(b",");
        }
        h.update(b";");
    }
    hex::encode(h.finalize())
}

pub struct FieldCache {
    dir: PathBuf,
}

impl FieldCache {
    pub fn new(dir: &Path) -> Result<Self> {
        std::fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
        Ok(FieldCache { dir: dir.to_path_buf() })
    }

    fn path(&self, action: &GaloisAction) -> PathBuf {
        self.dir.join(format!("{}.json", fingerprint(action)))
    }

    pub fn load(&self, action: &GaloisAction) -> Option<CachedFieldRecord> {
        let text = std::fs::read_to_string(self.path(action)).ok()?;
        let rec: CachedFieldRecord = serde_json::from_str(&text).ok()?;
        (rec.fingerprint == fingerprint(action)).then_some(rec)
    }

    pub fn store(&self, record: &CachedFieldRecord) -> Result<()> {
        let path = self.dir.join(format!("{}.json", record.fingerprint));
        let text = serde_json::to_string_pretty(record).map_err(|e| Error::Io(e.to_string()))?;
        std::fs::write(&path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }

    /// Maximal order via an explicit hint, else a verified cached basis, else
    /// from scratch; fresh results are written back.
    pub fn maximal_order(&self, action: &GaloisAction, hint: Option<&KLattice>) -> Result<Order> {
        if let Some(h) = hint {
            return maximal_order(action.field(), Some(h));
        }
        if let Some(rec) = self.load(action) {
            if let Ok(l) = rec.maximal_order.to_lattice(action) {
                if let Ok(o) = maximal_order(action.field(), Some(&l)) {
                    return Ok(o);
                }
            }
        }
        let o = maximal_order(action.field(), None)?;
        self.store(&CachedFieldRecord::compute(action, &o)?)?;
        Ok(o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::NumberField;
    use crate::group::FiniteGroup;
    use std::sync::Arc;

    fn action() -> GaloisAction {
        let k = NumberField::from_i64(&[-12, 0, 1]).unwrap();
        GaloisAction::from_generator_images(&k, Arc::new(FiniteGroup::cyclic(2)), &[(1, k.generator().neg())]).unwrap()
    }

    #[test]
    fn round_trip_and_recompute() {
        let dir = tempfile::tempdir().unwrap();
        let cache = FieldCache::new(dir.path()).unwrap();
        let a = action();
        assert!(cache.load(&a).is_none());
        let o = cache.maximal_order(&a, None).unwrap();
        let rec = cache.load(&a).unwrap();
        // a fresh field recomputes every stored value
        let fresh = action();
        let o2 = maximal_order(fresh.field(), None).unwrap();
        assert_eq!(o2, o);
        assert_eq!(CachedFieldRecord::compute(&fresh, &o2).unwrap(), rec);
        assert_eq!(cache.maximal_order(&fresh, None).unwrap(), o);
    }

    #[test]
    fn corrupted_record_is_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let cache = FieldCache::new(dir.path()).unwrap();
        let a = action();
        let o = maximal_order(a.field(), None).unwrap();
        let mut rec = CachedFieldRecord::compute(&a, &o).unwrap();
        // Z[t] is not maximal for t^2 - 12
        rec.maximal_order = StoredLattice::from_lattice(&KLattice::power_basis(a.field()));
        cache.store(&rec).unwrap();
        let fresh = action();
        assert_eq!(cache.maximal_order(&fresh, None).unwrap(), o);
    }
}
