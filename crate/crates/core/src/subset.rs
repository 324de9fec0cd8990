//! Dense bit-vector subsets of a carrier `0..n`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A subset of the carrier `0..ambient_order` of one particular semigroup.
///
/// Binary set operations between subsets of different ambient orders are a
/// programming error and panic; the fallible entry points live in
/// [`crate::setops`], which check ambient orders against the semigroup.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CarrierSubset {
    order: usize,
    words: Vec<u64>,
}

fn word_count(order: usize) -> usize {
    order.div_ceil(WORD)
}

impl CarrierSubset {
    pub fn empty(order: usize) -> Self {
        CarrierSubset {
            order,
            words: vec![0; word_count(order)],
        }
    }

    pub fn full(order: usize) -> Self {
        let mut s = Self::empty(order);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    pub fn singleton(order: usize, index: usize) -> Self {
        let mut s = Self::empty(order);
        s.insert(index);
        s
    }

    /// Builds a subset from indices, rejecting any index `>= order`.
    /// Duplicates are ignored.
    pub fn from_indices<I: IntoIterator<Item = usize>>(order: usize, indices: I) -> Result<Self> {
        let mut s = Self::empty(order);
        for i in indices {
            if i >= order {
                return Err(Error::IndexOutOfRange { index: i, order });
            }
            s.insert(i);
        }
        Ok(s)
    }

    /// Subset whose members are the set bits of `mask` (requires `order <= 64`
    /// or only low bits set).
    pub fn from_mask(order: usize, mask: u64) -> Self {
        let mut s = Self::empty(order);
        if !s.words.is_empty() {
            s.words[0] = mask;
        }
        s.trim();
        s
    }

    /// Low 64 bits of the membership vector.
    pub fn low_mask(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn ambient_order(&self) -> usize {
        self.order
    }

    fn trim(&mut self) {
        let rem = self.order % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.order && (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.order, "index {i} outside carrier of order {}", self.order);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < self.order {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.order, other.order, "subsets of carriers with different orders");
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn subtract(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !*b;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    pub fn complement(&self) -> Self {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        s.trim();
        s
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_same(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_same(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Cyclic rotation `{(i + k) mod n}` of the members.
    pub fn rotated(&self, k: usize) -> Self {
        let n = self.order;
        if n == 0 {
            return self.clone();
        }
        let k = k % n;
        if k == 0 {
            return self.clone();
        }
        if n <= WORD {
            let mask = if n == WORD { u64::MAX } else { (1u64 << n) - 1 };
            let w = self.words[0];
            let r = ((w << k) | (w >> (n - k))) & mask;
            return CarrierSubset {
                order: n,
                words: vec![r],
            };
        }
        let mut out = self.shifted_up(k);
        out.union_with(&self.shifted_down(n - k));
        out
    }

    /// `{i + k : i + k < n}`.
    fn shifted_up(&self, k: usize) -> Self {
        let mut out = Self::empty(self.order);
        let (ws, bs) = (k / WORD, k % WORD);
        for i in (0..self.words.len()).rev() {
            if i < ws {
                break;
            }
            let src = i - ws;
            let mut v = self.words[src] << bs;
            if bs != 0 && src > 0 {
                v |= self.words[src - 1] >> (WORD - bs);
            }
            out.words[i] = v;
        }
        out.trim();
        out
    }

    /// `{i - k : i >= k}`.
    fn shifted_down(&self, k: usize) -> Self {
        let mut out = Self::empty(self.order);
        let (ws, bs) = (k / WORD, k % WORD);
        let len = self.words.len();
        for i in 0..len {
            let src = i + ws;
            if src >= len {
                break;
            }
            let mut v = self.words[src] >> bs;
            if bs != 0 && src + 1 < len {
                v |= self.words[src + 1] << (WORD - bs);
            }
            out.words[i] = v;
        }
        out
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * WORD + bit);
            }
            self.word += 1;
            if self.word >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a CarrierSubset {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Debug for CarrierSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.order)
    }
}

/// Sorted index array, e.g. `[0,2,4]`.
impl fmt::Display for CarrierSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("]")
    }
}

impl Serialize for CarrierSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Parses a subset literal such as `[0,2,4]` against a carrier of `order`.
pub fn parse_subset(order: usize, literal: &str) -> Result<CarrierSubset> {
    let indices: Vec<usize> =
        serde_json::from_str(literal.trim()).map_err(|e| Error::Parse(format!("subset literal {literal:?}: {e}")))?;
    CarrierSubset::from_indices(order, indices)
}

/// Parses `;`-separated subset literals, e.g. `[0,1,2];[0,1]`.
pub fn parse_subset_list(order: usize, literal: &str) -> Result<Vec<CarrierSubset>> {
    literal
        .split(';')
        .filter(|part| !part.trim().is_empty())
        .map(|part| parse_subset(order, part))
        .collect()
}
