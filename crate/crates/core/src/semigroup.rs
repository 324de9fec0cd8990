//! Finite semigroups given by Cayley tables.

use crate::error::{Error, Result};
use crate::extnat::ExtendedNat;
use crate::subset::CarrierSubset;

/// Largest carrier accepted by any constructor.
pub const MAX_ORDER: usize = 2048;

/// Structural tag used to pick fast paths; it never changes semantics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Structure {
    General,
    /// `(Z/mZ, +)` with index `k` standing for residue `k`.
    Cyclic(usize),
}

/// An immutable finite semigroup on the carrier `0..order`.
///
/// The table is validated on construction (shape, range, associativity) and
/// the structural facts below are computed once.
#[derive(Debug, Clone)]
pub struct FiniteSemigroup {
    name: Option<String>,
    order: usize,
    table: Vec<u16>,
    structure: Structure,
    identity: Option<usize>,
    inverses: Vec<Option<usize>>,
    units: CarrierSubset,
    cancellable: CarrierSubset,
    orders: Vec<u64>,
    commutative: bool,
    cancellative: bool,
}

impl PartialEq for FiniteSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteSemigroup {}

impl FiniteSemigroup {
    /// Validates `table` (row `i`, column `j` holds `i + j`) and computes the
    /// cached structure. Associativity is checked over all `n^3` triples.
    pub fn from_table(order: usize, table: &[Vec<usize>]) -> Result<Self> {
        let flat = flatten(order, table)?;
        if let Some((i, j, k)) = first_non_associative(order, &flat) {
            return Err(Error::NotAssociative(i, j, k));
        }
        Ok(Self::assemble(order, flat, Structure::General))
    }

    /// Flat row-major table already known to be associative.
    pub(crate) fn from_trusted(order: usize, flat: Vec<u16>, structure: Structure) -> Self {
        debug_assert_eq!(flat.len(), order * order);
        Self::assemble(order, flat, structure)
    }

    /// Flat row-major table, validated like [`FiniteSemigroup::from_table`].
    pub fn from_flat(order: usize, flat: Vec<u16>) -> Result<Self> {
        check_order(order)?;
        if flat.len() != order * order {
            return Err(Error::BadRowCount {
                order,
                rows: flat.len() / order.max(1),
            });
        }
        for (pos, &v) in flat.iter().enumerate() {
            if v as usize >= order {
                return Err(Error::BadEntry {
                    row: pos / order,
                    col: pos % order,
                    value: v as usize,
                    order,
                });
            }
        }
        if let Some((i, j, k)) = first_non_associative(order, &flat) {
            return Err(Error::NotAssociative(i, j, k));
        }
        Ok(Self::assemble(order, flat, Structure::General))
    }

    fn assemble(order: usize, table: Vec<u16>, structure: Structure) -> Self {
        let op = |i: usize, j: usize| table[i * order + j] as usize;
        // tables read from files that happen to be addition mod n keep the fast path
        let structure = match structure {
            Structure::General if (0..order).all(|i| (0..order).all(|j| op(i, j) == (i + j) % order)) => {
                Structure::Cyclic(order)
            }
            other => other,
        };

        let identity = (0..order).find(|&e| (0..order).all(|z| op(e, z) == z && op(z, e) == z));

        let mut inverses = vec![None; order];
        let mut units = CarrierSubset::empty(order);
        if let Some(e) = identity {
            for (z, inv) in inverses.iter_mut().enumerate() {
                *inv = (0..order).find(|&w| op(z, w) == e && op(w, z) == e);
                if inv.is_some() {
                    units.insert(z);
                }
            }
        }

        let mut cancellable = CarrierSubset::empty(order);
        let mut seen = vec![false; order];
        for z in 0..order {
            let injective = |f: &dyn Fn(usize) -> usize, seen: &mut Vec<bool>| {
                seen.iter_mut().for_each(|s| *s = false);
                (0..order).all(|x| !std::mem::replace(&mut seen[f(x)], true))
            };
            if injective(&|x| op(x, z), &mut seen) && injective(&|x| op(z, x), &mut seen) {
                cancellable.insert(z);
            }
        }
        let cancellative = cancellable.len() == order;

        let commutative = (0..order).all(|i| (i + 1..order).all(|j| op(i, j) == op(j, i)));

        let mut visited = vec![false; order];
        let orders: Vec<u64> = (0..order)
            .map(|z| {
                visited.iter_mut().for_each(|v| *v = false);
                let mut count = 0u64;
                let mut cur = z;
                while !visited[cur] {
                    visited[cur] = true;
                    count += 1;
                    cur = op(cur, z);
                }
                count
            })
            .collect();

        FiniteSemigroup {
            name: None,
            order,
            table,
            structure,
            identity,
            inverses,
            units,
            cancellable,
            orders,
            commutative,
            cancellative,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Name if set, otherwise a generic label with the order.
    pub fn label(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("semigroup(order={})", self.order))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn structure(&self) -> Structure {
        self.structure
    }

    pub fn cyclic_modulus(&self) -> Option<usize> {
        match self.structure {
            Structure::Cyclic(m) => Some(m),
            Structure::General => None,
        }
    }

    #[inline]
    pub fn op(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j] as usize
    }

    pub fn flat_table(&self) -> &[u16] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn is_monoid(&self) -> bool {
        self.identity.is_some()
    }

    pub fn is_group(&self) -> bool {
        self.identity.is_some() && self.units.len() == self.order
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn is_cancellative(&self) -> bool {
        self.cancellative
    }

    pub fn is_cancellable(&self, z: usize) -> bool {
        self.cancellable.contains(z)
    }

    pub fn units(&self) -> &CarrierSubset {
        &self.units
    }

    pub fn is_unit(&self, z: usize) -> bool {
        self.units.contains(z)
    }

    /// The two-sided inverse of `z`, absent when `z` is not a unit (in
    /// particular whenever the semigroup has no identity).
    pub fn inverse(&self, z: usize) -> Option<usize> {
        self.inverses.get(z).copied().flatten()
    }

    /// `|{z, 2z, 3z, ...}|`. Always finite on a finite carrier.
    pub fn element_order(&self, z: usize) -> ExtendedNat {
        ExtendedNat::Finite(self.orders[z])
    }

    pub(crate) fn order_of(&self, z: usize) -> u64 {
        self.orders[z]
    }

    pub fn full(&self) -> CarrierSubset {
        CarrierSubset::full(self.order)
    }

    pub fn subset<I: IntoIterator<Item = usize>>(&self, indices: I) -> Result<CarrierSubset> {
        CarrierSubset::from_indices(self.order, indices)
    }

    pub(crate) fn check_ambient(&self, x: &CarrierSubset) -> Result<()> {
        if x.ambient_order() != self.order {
            return Err(Error::AmbientMismatch {
                expected: self.order,
                found: x.ambient_order(),
            });
        }
        Ok(())
    }

    /// Smallest subsemigroup containing `generators`.
    pub fn generated_subsemigroup(&self, generators: &CarrierSubset) -> Result<CarrierSubset> {
        self.check_ambient(generators)?;
        if generators.is_empty() {
            return Err(Error::EmptyGenerator);
        }
        let mut closure = generators.clone();
        let mut frontier = generators.clone();
        while !frontier.is_empty() {
            let mut fresh = CarrierSubset::empty(self.order);
            for a in &frontier {
                for b in &closure {
                    fresh.insert(self.op(a, b));
                    fresh.insert(self.op(b, a));
                }
            }
            fresh.subtract(&closure);
            closure.union_with(&fresh);
            frontier = fresh;
        }
        Ok(closure)
    }

    /// True when all products of members of `x` commute.
    pub fn commutes_on(&self, x: &CarrierSubset) -> bool {
        let members = x.to_vec();
        members
            .iter()
            .enumerate()
            .all(|(k, &a)| members[k + 1..].iter().all(|&b| self.op(a, b) == self.op(b, a)))
    }

    /// The opposite semigroup, `i +op j = j + i`.
    pub fn opposite(&self) -> FiniteSemigroup {
        let n = self.order;
        let mut flat = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                flat[i * n + j] = self.table[j * n + i];
            }
        }
        let structure = if self.commutative {
            self.structure
        } else {
            Structure::General
        };
        let mut s = Self::from_trusted(n, flat, structure);
        s.name = self.name.as_ref().map(|nm| format!("opposite({nm})"));
        s
    }

    /// Conditional unitization: `self` when it already has an identity,
    /// otherwise `self` with a fresh two-sided identity at index `order`.
    pub fn unitize(&self) -> Result<FiniteSemigroup> {
        if self.identity.is_some() {
            return Ok(self.clone());
        }
        let n = self.order;
        check_order(n + 1)?;
        let m = n + 1;
        let mut flat = vec![0u16; m * m];
        for i in 0..m {
            for j in 0..m {
                flat[i * m + j] = if i == n {
                    j as u16
                } else if j == n {
                    i as u16
                } else {
                    self.table[i * n + j]
                };
            }
        }
        let mut s = Self::from_trusted(m, flat, Structure::General);
        s.name = self.name.as_ref().map(|nm| format!("unitize({nm})"));
        Ok(s)
    }
}

pub(crate) fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::EmptyCarrier);
    }
    if order > MAX_ORDER {
        return Err(Error::OrderTooLarge { order, max: MAX_ORDER });
    }
    Ok(())
}

fn flatten(order: usize, table: &[Vec<usize>]) -> Result<Vec<u16>> {
    check_order(order)?;
    if table.len() != order {
        return Err(Error::BadRowCount {
            order,
            rows: table.len(),
        });
    }
    let mut flat = Vec::with_capacity(order * order);
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != order {
            return Err(Error::BadShape {
                order,
                row,
                len: entries.len(),
            });
        }
        for (col, &value) in entries.iter().enumerate() {
            if value >= order {
                return Err(Error::BadEntry { row, col, value, order });
            }
            flat.push(value as u16);
        }
    }
    Ok(flat)
}

/// First triple (in lexicographic order) violating associativity.
pub(crate) fn first_non_associative(order: usize, flat: &[u16]) -> Option<(usize, usize, usize)> {
    let op = |i: usize, j: usize| flat[i * order + j] as usize;
    for i in 0..order {
        for j in 0..order {
            let ij = op(i, j);
            for k in 0..order {
                if op(ij, k) != op(i, op(j, k)) {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}
