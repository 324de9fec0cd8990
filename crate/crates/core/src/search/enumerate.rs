//! Backtracking enumeration of associative Cayley tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

use super::iso::{ClassIndex, Equivalence};

/// Largest order for unconstrained enumeration.
pub const MAX_ENUM_ORDER: usize = 5;
/// Largest order for Latin-square (cancellative) enumeration.
pub const MAX_CANCELLATIVE_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Filter {
    #[default]
    Any,
    Cancellative,
    Commutative,
    Monoid,
}

const EMPTY: u8 = u8::MAX;

struct Frame {
    cell: usize,
    next: u8,
    mark: usize,
}

/// Depth-first search over partial tables, yielding every associative table
/// satisfying the structural constraints of the filter.
///
/// Each placement propagates the entries associativity forces, so a branch
/// is cut as soon as some triple has no consistent completion left.
pub struct TableSearch {
    n: usize,
    latin: bool,
    symmetric: bool,
    monoid_only: bool,
    table: Vec<u8>,
    cells: Vec<(usize, usize)>,
    stack: Vec<Frame>,
    /// flat indices of placed entries, in placement order
    trail: Vec<usize>,
    row_used: Vec<u16>,
    col_used: Vec<u16>,
    started: bool,
    done: bool,
}

impl TableSearch {
    pub fn new(order: usize, filter: Filter) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyCarrier);
        }
        let max = if filter == Filter::Cancellative {
            MAX_CANCELLATIVE_ORDER
        } else {
            MAX_ENUM_ORDER
        };
        if order > max {
            return Err(Error::OrderTooLarge { order, max });
        }
        let symmetric = filter == Filter::Commutative;
        let cells: Vec<(usize, usize)> = (0..order)
            .flat_map(|i| (0..order).map(move |j| (i, j)))
            .filter(|&(i, j)| !symmetric || i <= j)
            .collect();
        Ok(TableSearch {
            n: order,
            latin: filter == Filter::Cancellative,
            symmetric,
            monoid_only: filter == Filter::Monoid,
            table: vec![EMPTY; order * order],
            cells,
            stack: Vec::new(),
            trail: Vec::new(),
            row_used: vec![0; order],
            col_used: vec![0; order],
            started: false,
            done: false,
        })
    }

    /// Restricts the search to tables in which index 0 is a two-sided identity.
    /// Every table with an identity is a relabelling of one of these.
    pub fn with_identity_at_zero(mut self) -> Self {
        assert!(!self.started, "search already running");
        for z in 0..self.n {
            if !self.assign(0, z, z) || !self.assign(z, 0, z) {
                self.done = true;
            }
        }
        self
    }

    fn get(&self, i: usize, j: usize) -> Option<usize> {
        let v = self.table[i * self.n + j];
        (v != EMPTY).then_some(v as usize)
    }

    fn place(&mut self, i: usize, j: usize, v: usize) {
        self.table[i * self.n + j] = v as u8;
        self.trail.push(i * self.n + j);
        if self.latin {
            self.row_used[i] |= 1 << v;
            self.col_used[j] |= 1 << v;
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let k = self.trail.pop().expect("non-empty trail");
            let v = self.table[k];
            self.table[k] = EMPTY;
            if self.latin {
                self.row_used[k / self.n] &= !(1 << v);
                self.col_used[k % self.n] &= !(1 << v);
            }
        }
    }

    fn fits_latin(&self, i: usize, j: usize, v: usize) -> bool {
        if !self.latin {
            return true;
        }
        let bit = 1u16 << v;
        let ok = self.row_used[i] & bit == 0 && self.col_used[j] & bit == 0;
        if self.symmetric && i != j {
            ok && self.row_used[j] & bit == 0 && self.col_used[i] & bit == 0
        } else {
            ok
        }
    }

    /// Looks at `(x+y)+z = x+(y+z)`: a conflict returns false, and when one
    /// side is missing its entry is queued.
    fn triple(&self, x: usize, y: usize, z: usize, queue: &mut Vec<(usize, usize, usize)>) -> bool {
        let (Some(p), Some(q)) = (self.get(x, y), self.get(y, z)) else {
            return true;
        };
        match (self.get(p, z), self.get(x, q)) {
            (Some(l), Some(r)) => l == r,
            (Some(l), None) => {
                queue.push((x, q, l));
                true
            }
            (None, Some(r)) => {
                queue.push((p, z, r));
                true
            }
            (None, None) => true,
        }
    }

    /// Every triple that reads cell `(a, b)` in one of its four lookups.
    fn propagate_at(&self, a: usize, b: usize, queue: &mut Vec<(usize, usize, usize)>) -> bool {
        let n = self.n;
        for t in 0..n {
            if !self.triple(a, b, t, queue) || !self.triple(t, a, b, queue) {
                return false;
            }
        }
        for x in 0..n {
            for y in 0..n {
                match self.get(x, y) {
                    // outer cell (a, b) read as (x+y)+b
                    Some(v) if v == a && !self.triple(x, y, b, queue) => return false,
                    _ => {}
                }
                match self.get(x, y) {
                    // outer cell (a, b) read as a+(x+y)
                    Some(v) if v == b && !self.triple(a, x, y, queue) => return false,
                    _ => {}
                }
            }
        }
        true
    }

    /// Places `v` at `(i, j)` and everything it forces. On failure the caller
    /// undoes the trail.
    fn assign(&mut self, i: usize, j: usize, v: usize) -> bool {
        let mut queue = vec![(i, j, v)];
        while let Some((a, b, v)) = queue.pop() {
            if let Some(w) = self.get(a, b) {
                if w != v {
                    return false;
                }
                continue;
            }
            if !self.fits_latin(a, b, v) {
                return false;
            }
            self.place(a, b, v);
            if self.symmetric && a != b {
                self.place(b, a, v);
            }
            if !self.propagate_at(a, b, &mut queue)
                || (self.symmetric && a != b && !self.propagate_at(b, a, &mut queue))
            {
                return false;
            }
        }
        true
    }

    fn has_identity(&self) -> bool {
        let n = self.n;
        (0..n).any(|e| (0..n).all(|z| self.get(e, z) == Some(z) && self.get(z, e) == Some(z)))
    }

    /// Advances to the next complete table, returning it in row-major order.
    pub fn next_table(&mut self) -> Option<Vec<u16>> {
        if self.done {
            return None;
        }
        // after a yielded table, resume by moving the deepest choice along
        let mut advance = self.started;
        self.started = true;
        loop {
            if !advance {
                let from = self.stack.last().map_or(0, |f| f.cell + 1);
                let open = (from..self.cells.len()).find(|&k| {
                    let (i, j) = self.cells[k];
                    self.get(i, j).is_none()
                });
                match open {
                    None => {
                        if self.monoid_only && !self.has_identity() {
                            advance = true;
                            continue;
                        }
                        return Some(self.table.iter().map(|&v| v as u16).collect());
                    }
                    Some(cell) => self.stack.push(Frame {
                        cell,
                        next: 0,
                        mark: self.trail.len(),
                    }),
                }
            }
            let Some(top) = self.stack.len().checked_sub(1) else {
                self.done = true;
                return None;
            };
            let (cell, mark) = (self.stack[top].cell, self.stack[top].mark);
            let (i, j) = self.cells[cell];
            let mut placed = false;
            while (self.stack[top].next as usize) < self.n {
                let v = self.stack[top].next as usize;
                self.stack[top].next += 1;
                self.undo_to(mark);
                if self.assign(i, j, v) {
                    placed = true;
                    break;
                }
            }
            if placed {
                advance = false;
            } else {
                self.undo_to(mark);
                self.stack.pop();
                advance = true;
            }
        }
    }
}

impl Iterator for TableSearch {
    type Item = Vec<u16>;

    fn next(&mut self) -> Option<Vec<u16>> {
        self.next_table()
    }
}

/// Every labelled associative table of `order` passing `filter`, without dedup.
pub fn raw_tables(order: usize, filter: Filter) -> Result<TableSearch> {
    TableSearch::new(order, filter)
}

/// Class representatives in order of first discovery.
pub struct Enumeration {
    search: TableSearch,
    classes: ClassIndex,
    filter: Filter,
    raw: u64,
}

impl Enumeration {
    /// Labelled tables visited so far.
    pub fn raw_count(&self) -> u64 {
        self.raw
    }
}

impl Iterator for Enumeration {
    type Item = FiniteSemigroup;

    fn next(&mut self) -> Option<FiniteSemigroup> {
        let n = self.search.n;
        while let Some(flat) = self.search.next_table() {
            self.raw += 1;
            if let Some(k) = self.classes.insert(n, &flat) {
                let s = FiniteSemigroup::from_trusted(n, flat, crate::semigroup::Structure::General);
                let tag = match self.filter {
                    Filter::Any => "semigroup",
                    Filter::Cancellative => "group",
                    Filter::Commutative => "commutative",
                    Filter::Monoid => "monoid",
                };
                return Some(s.with_name(format!("{tag}{n}#{k}")));
            }
        }
        None
    }
}

/// Every semigroup of `order` passing `filter`, one per class under
/// isomorphism or anti-isomorphism, in a fixed order.
pub fn enumerate_semigroups(order: usize, filter: Filter) -> Result<Enumeration> {
    enumerate_semigroups_with(order, filter, Equivalence::IsoOrAntiIso)
}

pub fn enumerate_semigroups_with(order: usize, filter: Filter, equivalence: Equivalence) -> Result<Enumeration> {
    let mut search = TableSearch::new(order, filter)?;
    // finite cancellative semigroups are groups, so both filters have an identity to pin
    if matches!(filter, Filter::Cancellative | Filter::Monoid) {
        search = search.with_identity_at_zero();
    }
    Ok(Enumeration {
        search,
        classes: ClassIndex::new(equivalence),
        filter,
        raw: 0,
    })
}
