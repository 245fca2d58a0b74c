//! Finite groups given by multiplication tables, and their group algebras.

mod algebra;

pub use algebra::{determinant, GroupAlgebraElement, Scalar};

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};

/// A finite group stored as an exhaustively validated multiplication table.
/// Elements are indices `0..order`; `table[a][b]` is the index of `a * b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    names: Vec<String>,
}

impl FiniteGroup {
    /// Validate a multiplication table: closure, associativity (all triples),
    /// two-sided identity and two-sided inverses.
    pub fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Group("empty table".into()));
        }
        if table.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(Error::Group("table is not closed n x n".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::Group("no two-sided identity".into()))?;
        let mut inverses = vec![0; n];
        for a in 0..n {
            inverses[a] = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::Group(format!("element {a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::Group(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let names = match names {
            Some(names) if names.len() == n => names,
            Some(_) => return Err(Error::Group("names length differs from order".into())),
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        Ok(FiniteGroup {
            table,
            identity,
            inverses,
            names,
        })
    }

    /// Closure of a set of permutations of `0..degree` under composition,
    /// `(s * t)(i) = s(t(i))`. The identity gets index 0; the remaining
    /// elements follow in breadth-first order over the generators.
    pub fn from_permutations(generators: &[Vec<usize>], degree: usize) -> Result<Self> {
        let id: Vec<usize> = (0..degree).collect();
        let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let mut elems = vec![id.clone()];
        index.insert(id, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                if g.len() != degree {
                    return Err(Error::Group("generator of wrong degree".into()));
                }
                let p: Vec<usize> = (0..degree).map(|k| g[elems[i][k]]).collect();
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(p);
                }
            }
        }
        let table = elems
            .iter()
            .map(|s| {
                elems
                    .iter()
                    .map(|t| index[&(0..degree).map(|k| s[t[k]]).collect::<Vec<_>>()])
                    .collect()
            })
            .collect();
        Self::from_table(table, None)
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let names = (0..n).map(|k| if k == 0 { "1".into() } else { format!("r{k}") }).collect();
        Self::from_table(table, Some(names)).expect("cyclic table is a group")
    }

    /// Dihedral group of order `2n`, symmetries of an `n`-gon.
    pub fn dihedral(n: usize) -> Self {
        let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        Self::from_permutations(&[rot, refl], n).expect("dihedral group")
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push((0..n).map(|i| match i { 0 => 1, 1 => 0, _ => i }).collect());
            gens.push((0..n).map(|i| (i + 1) % n).collect());
        }
        Self::from_permutations(&gens, n.max(1)).expect("symmetric group")
    }

    /// `a x b` with element `(i, j)` at index `i * |b| + j`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (na, nb) = (a.order(), b.order());
        let table = (0..na * nb)
            .map(|x| {
                (0..na * nb)
                    .map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb))
                    .collect()
            })
            .collect();
        let names = (0..na * nb)
            .map(|x| format!("({},{})", a.name(x / nb), b.name(x % nb)))
            .collect();
        Self::from_table(table, Some(names)).expect("direct product of groups")
    }

    pub fn klein_four() -> Self {
        Self::direct_product(&Self::cyclic(2), &Self::cyclic(2))
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Number of elements of each exact order, indexed by order.
    pub fn order_counts(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for a in self.elements() {
            *counts.entry(self.element_order(a)).or_insert(0) += 1;
        }
        counts
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}
