//! Set arithmetic relative to a fixed semigroup.

use crate::error::{Error, Result};
use crate::semigroup::{FiniteSemigroup, Structure};
use crate::subset::CarrierSubset;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `X + Y = {x + y : x ∈ X, y ∈ Y}`.
pub fn sumset(s: &FiniteSemigroup, x: &CarrierSubset, y: &CarrierSubset) -> Result<CarrierSubset> {
    s.check_ambient(x)?;
    s.check_ambient(y)?;
    Ok(sumset_unchecked(s, x, y))
}

pub(crate) fn sumset_unchecked(s: &FiniteSemigroup, x: &CarrierSubset, y: &CarrierSubset) -> CarrierSubset {
    let n = s.order();
    let mut out = CarrierSubset::empty(n);
    if x.is_empty() || y.is_empty() {
        return out;
    }
    match s.structure() {
        Structure::Cyclic(_) => {
            // x + Y is Y rotated by x
            for a in x {
                out.union_with(&y.rotated(a));
            }
        }
        Structure::General => {
            let ys = y.to_vec();
            for a in x {
                for &b in &ys {
                    out.insert(s.op(a, b));
                }
            }
        }
    }
    out
}

/// `X_1 + ... + X_n`, left to right.
pub fn sum_all(s: &FiniteSemigroup, sets: &[CarrierSubset]) -> Result<CarrierSubset> {
    let (first, rest) = sets.split_first().ok_or(Error::EmptyList)?;
    s.check_ambient(first)?;
    let mut acc = first.clone();
    for x in rest {
        s.check_ambient(x)?;
        acc = sumset_unchecked(s, &acc, x);
    }
    Ok(acc)
}

/// `nZ`, the n-fold sumset. `0Z` is `{0}` and needs an identity.
pub fn nsum(s: &FiniteSemigroup, z: &CarrierSubset, n: usize) -> Result<CarrierSubset> {
    s.check_ambient(z)?;
    if n == 0 {
        let e = s.identity().ok_or(Error::ZeroFoldWithoutIdentity)?;
        return Ok(CarrierSubset::singleton(s.order(), e));
    }
    let mut acc = z.clone();
    for _ in 1..n {
        acc = sumset_unchecked(s, &acc, z);
    }
    Ok(acc)
}

/// One-sided difference set removing `Y` from `X`.
///
/// * `Right`: `X - Y = {z : (z + Y) ∩ X ≠ ∅}`
/// * `Left`: `-Y + X = {z : (Y + z) ∩ X ≠ ∅}`
///
/// For a unit `y` these are `X + ỹ` and `ỹ + X` respectively.
pub fn difference(s: &FiniteSemigroup, x: &CarrierSubset, y: &CarrierSubset, side: Side) -> Result<CarrierSubset> {
    s.check_ambient(x)?;
    s.check_ambient(y)?;
    let ys = y.to_vec();
    let mut out = CarrierSubset::empty(s.order());
    for z in 0..s.order() {
        let hit = ys.iter().any(|&b| {
            let v = match side {
                Side::Right => s.op(z, b),
                Side::Left => s.op(b, z),
            };
            x.contains(v)
        });
        if hit {
            out.insert(z);
        }
    }
    Ok(out)
}

/// `z + X` (left) or `X + z` (right).
pub fn translate(s: &FiniteSemigroup, x: &CarrierSubset, z: usize, side: Side) -> Result<CarrierSubset> {
    s.check_ambient(x)?;
    if z >= s.order() {
        return Err(Error::IndexOutOfRange {
            index: z,
            order: s.order(),
        });
    }
    Ok(translate_unchecked(s, x, z, side))
}

pub(crate) fn translate_unchecked(s: &FiniteSemigroup, x: &CarrierSubset, z: usize, side: Side) -> CarrierSubset {
    if let Structure::Cyclic(_) = s.structure() {
        return x.rotated(z);
    }
    let mut out = CarrierSubset::empty(s.order());
    for a in x {
        out.insert(match side {
            Side::Left => s.op(z, a),
            Side::Right => s.op(a, z),
        });
    }
    out
}
