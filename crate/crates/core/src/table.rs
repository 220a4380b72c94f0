//! Cayley tables and the po-semiring table type.
//!
//! Elements are indices `0..n`. Index `0` is the additive zero and index
//! `n - 1` is the multiplicative identity, which is also the top of the
//! order. The order is never stored: `x <= y` is read off the addition
//! table as `x + y == y`.

use std::collections::HashSet;

use serde::Serialize;

use crate::axioms::{verify_axioms, AxiomReport};
use crate::elemset::{Elem, ElemSet};
use crate::error::{StructureError, TableError};

/// A square operation table over `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    n: usize,
    cells: Vec<Elem>,
}

impl CayleyTable {
    pub fn from_fn(n: usize, mut f: impl FnMut(Elem, Elem) -> Elem) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                cells.push(f(x, y));
            }
        }
        CayleyTable { n, cells }
    }

    /// Checks shape and range; `table` names the table in diagnostics.
    pub fn from_rows(
        table: &'static str,
        n: usize,
        rows: &[Vec<Elem>],
    ) -> Result<Self, StructureError> {
        if rows.len() != n {
            return Err(StructureError::RowCount {
                table,
                expected: n,
                found: rows.len(),
            });
        }
        let mut cells = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(StructureError::RowLength {
                    table,
                    row,
                    expected: n,
                    found: r.len(),
                });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(StructureError::EntryOutOfRange {
                        table,
                        row,
                        col,
                        value,
                        order: n,
                    });
                }
                cells.push(value);
            }
        }
        Ok(CayleyTable { n, cells })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: Elem, y: Elem) -> Elem {
        self.cells[x * self.n + y]
    }

    pub fn row(&self, x: Elem) -> &[Elem] {
        &self.cells[x * self.n..(x + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        (0..self.n).map(|x| self.row(x).to_vec()).collect()
    }

    pub fn cells(&self) -> &[Elem] {
        &self.cells
    }

    /// First `(x, y)` in scan order with `x*y != y*x`.
    pub fn commutativity_witness(&self) -> Option<(Elem, Elem)> {
        (0..self.n)
            .flat_map(|x| (0..self.n).map(move |y| (x, y)))
            .find(|&(x, y)| self.get(x, y) != self.get(y, x))
    }
}

impl std::fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list()
            .entries((0..self.n).map(|x| self.row(x)))
            .finish()
    }
}

impl Serialize for CayleyTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq((0..self.n).map(|x| self.row(x)))
    }
}

/// An unvalidated candidate: names plus two tables given as rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTables {
    pub names: Vec<String>,
    pub add: Vec<Vec<Elem>>,
    pub mul: Vec<Vec<Elem>>,
}

impl RawTables {
    pub fn order(&self) -> usize {
        self.names.len()
    }

    /// Shape, range and label checks. Axioms are not evaluated here.
    pub fn check_structure(&self) -> Result<(CayleyTable, CayleyTable), StructureError> {
        let n = self.names.len();
        if n < 2 {
            return Err(StructureError::TooSmall(n));
        }
        check_names(&self.names, n)?;
        let add = CayleyTable::from_rows("add", n, &self.add)?;
        let mul = CayleyTable::from_rows("mul", n, &self.mul)?;
        Ok((add, mul))
    }
}

pub(crate) fn check_names(names: &[String], n: usize) -> Result<(), StructureError> {
    if names.len() != n {
        return Err(StructureError::NameCount {
            expected: n,
            found: names.len(),
        });
    }
    let mut seen = HashSet::new();
    for name in names {
        if name.is_empty() || name.chars().any(char::is_whitespace) || name.starts_with('#') {
            return Err(StructureError::BadName(name.clone()));
        }
        if !seen.insert(name.as_str()) {
            return Err(StructureError::DuplicateName(name.clone()));
        }
    }
    Ok(())
}

/// Labels `0, a, b, ..., 1` for an instance of order `n`.
pub fn default_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i == 0 {
                "0".to_string()
            } else if i == n - 1 {
                "1".to_string()
            } else if i <= 24 {
                ((b'a' + (i - 1) as u8) as char).to_string()
            } else {
                format!("e{i}")
            }
        })
        .collect()
}

/// A finite po-semiring given by its addition and multiplication tables.
///
/// Values of this type always satisfy the axioms checked by
/// [`verify_axioms`]; there is no unchecked constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PoSemiringTable {
    names: Vec<String>,
    add: CayleyTable,
    mul: CayleyTable,
}

impl PoSemiringTable {
    pub fn from_raw(raw: &RawTables) -> Result<Self, TableError> {
        let report = verify_axioms(raw)?;
        if !report.valid {
            return Err(TableError::Axioms(report));
        }
        let (add, mul) = raw.check_structure()?;
        Ok(PoSemiringTable {
            names: raw.names.clone(),
            add,
            mul,
        })
    }

    pub fn new(
        names: Vec<String>,
        add: Vec<Vec<Elem>>,
        mul: Vec<Vec<Elem>>,
    ) -> Result<Self, TableError> {
        Self::from_raw(&RawTables { names, add, mul })
    }

    /// Builds and validates tables from closures.
    pub fn from_fn(
        names: Vec<String>,
        add: impl FnMut(Elem, Elem) -> Elem,
        mul: impl FnMut(Elem, Elem) -> Elem,
    ) -> Result<Self, TableError> {
        let n = names.len();
        let add = CayleyTable::from_fn(n, add);
        let mul = CayleyTable::from_fn(n, mul);
        Self::from_tables(names, add, mul)
    }

    pub fn from_tables(
        names: Vec<String>,
        add: CayleyTable,
        mul: CayleyTable,
    ) -> Result<Self, TableError> {
        let n = names.len();
        if n < 2 {
            return Err(StructureError::TooSmall(n).into());
        }
        check_names(&names, n)?;
        if add.order() != n || mul.order() != n {
            return Err(StructureError::RowCount {
                table: if add.order() != n { "add" } else { "mul" },
                expected: n,
                found: if add.order() != n {
                    add.order()
                } else {
                    mul.order()
                },
            }
            .into());
        }
        let report = crate::axioms::check_tables(&add, &mul);
        if !report.valid {
            return Err(TableError::Axioms(report));
        }
        Ok(PoSemiringTable { names, add, mul })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        0
    }

    #[inline]
    pub fn one(&self) -> Elem {
        self.order() - 1
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: Elem) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|s| s == name)
    }

    pub fn add_table(&self) -> &CayleyTable {
        &self.add
    }

    pub fn mul_table(&self) -> &CayleyTable {
        &self.mul
    }

    pub fn to_raw(&self) -> RawTables {
        RawTables {
            names: self.names.clone(),
            add: self.add.rows(),
            mul: self.mul.rows(),
        }
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.add.get(x, y)
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul.get(x, y)
    }

    /// The derived order: `x <= y` iff `x + y == y`.
    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.add.get(x, y) == y
    }

    #[inline]
    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order()
    }

    /// `x^k` for `k >= 1`.
    pub fn pow(&self, x: Elem, k: usize) -> Elem {
        assert!(k >= 1);
        (1..k).fold(x, |acc, _| self.mul(acc, x))
    }

    pub fn is_idempotent(&self, x: Elem) -> bool {
        self.mul(x, x) == x
    }

    /// Sum of a finite family; the empty sum is zero.
    pub fn sum<I: IntoIterator<Item = Elem>>(&self, xs: I) -> Elem {
        xs.into_iter().fold(0, |acc, x| self.add(acc, x))
    }

    /// Product of a finite family; the empty product is one.
    pub fn product<I: IntoIterator<Item = Elem>>(&self, xs: I) -> Elem {
        xs.into_iter().fold(self.one(), |acc, x| self.mul(acc, x))
    }

    /// Relabels by `perm`, which sends each old index to its new index.
    /// Fails unless `perm` fixes zero and one.
    pub fn relabel(&self, perm: &[Elem]) -> Result<PoSemiringTable, TableError> {
        let n = self.order();
        assert_eq!(perm.len(), n, "permutation length mismatch");
        let mut inv = vec![usize::MAX; n];
        for (old, &new) in perm.iter().enumerate() {
            assert!(new < n && inv[new] == usize::MAX, "not a permutation");
            inv[new] = old;
        }
        let names = (0..n).map(|i| self.names[inv[i]].clone()).collect();
        PoSemiringTable::from_fn(
            names,
            |x, y| perm[self.add(inv[x], inv[y])],
            |x, y| perm[self.mul(inv[x], inv[y])],
        )
    }

    /// The sub-po-semiring on `members` whose identity is `top`.
    ///
    /// Returns the table together with the map from new to old indices:
    /// zero first, `top` last, the remaining members in increasing index
    /// order. Fails if the subset is not closed or `top` is not an identity
    /// and upper bound on it.
    pub fn restrict(
        &self,
        members: &ElemSet,
        top: Elem,
    ) -> Result<(PoSemiringTable, Vec<Elem>), TableError> {
        assert!(members.contains(0) && members.contains(top) && top != 0);
        let mut order: Vec<Elem> = vec![0];
        order.extend(members.iter().filter(|&x| x != 0 && x != top));
        order.push(top);
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &x) in order.iter().enumerate() {
            pos[x] = i;
        }
        let m = order.len();
        let names = order.iter().map(|&x| self.names[x].clone()).collect();
        // Entries that leave the subset become out-of-range values, which the
        // structural check turns into an error.
        let lookup = |v: Elem| if pos[v] == usize::MAX { m } else { pos[v] };
        let add: Vec<Vec<Elem>> = order
            .iter()
            .map(|&x| order.iter().map(|&y| lookup(self.add(x, y))).collect())
            .collect();
        let mul: Vec<Vec<Elem>> = order
            .iter()
            .map(|&x| order.iter().map(|&y| lookup(self.mul(x, y))).collect())
            .collect();
        let table = PoSemiringTable::new(names, add, mul)?;
        Ok((table, order))
    }
}

impl std::fmt::Debug for PoSemiringTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PoSemiringTable")
            .field("names", &self.names)
            .field("add", &self.add)
            .field("mul", &self.mul)
            .finish()
    }
}

impl Serialize for PoSemiringTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("PoSemiringTable", 4)?;
        s.serialize_field("add", &self.add)?;
        s.serialize_field("mul", &self.mul)?;
        s.serialize_field("names", &self.names)?;
        s.serialize_field("order", &self.order())?;
        s.end()
    }
}

/// Convenience for tests and doc examples: validated table from rows.
pub fn table_from_rows(
    names: &[&str],
    add: &[&[Elem]],
    mul: &[&[Elem]],
) -> Result<PoSemiringTable, TableError> {
    PoSemiringTable::new(
        names.iter().map(|s| s.to_string()).collect(),
        add.iter().map(|r| r.to_vec()).collect(),
        mul.iter().map(|r| r.to_vec()).collect(),
    )
}

/// Validation outcome for a raw candidate, bundled for callers that want
/// both the report and (when valid) the table.
pub fn validate(raw: &RawTables) -> Result<(AxiomReport, Option<PoSemiringTable>), StructureError> {
    let report = verify_axioms(raw)?;
    let table = if report.valid {
        let (add, mul) = raw.check_structure()?;
        Some(PoSemiringTable {
            names: raw.names.clone(),
            add,
            mul,
        })
    } else {
        None
    };
    Ok((report, table))
}
