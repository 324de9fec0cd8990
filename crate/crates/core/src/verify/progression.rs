//! The progression pair `X = {mk : 0 <= k < p}`, `Y = {mk : 1 <= k <= p}` in
//! `Z/mpqZ`, compared against the closed forms `|X + Y| = 2p`,
//! `γ(X) = γ(Y) = pq`, `γ(X + Y) = q` and `𝔭 = ` least prime factor of `m`.

use serde::Serialize;

use crate::constants::{gamma, gamma_multi, p_min, PVariant};
use crate::error::{Error, Result};
use crate::extnat::ExtendedNat;
use crate::families::cyclic;
use crate::semigroup::FiniteSemigroup;
use crate::setops::sumset;
use crate::subset::CarrierSubset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Quantity {
    pub computed: ExtendedNat,
    pub formula: ExtendedNat,
}

impl Quantity {
    pub fn matches(&self) -> bool {
        self.computed == self.formula
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProgressionReport {
    pub m: usize,
    pub p: usize,
    pub q: usize,
    pub modulus: usize,
    pub x: CarrierSubset,
    pub y: CarrierSubset,
    pub sumset: CarrierSubset,
    pub sumset_size: Quantity,
    pub gamma_x: Quantity,
    pub gamma_y: Quantity,
    pub gamma_sumset: Quantity,
    pub gamma_pair: Quantity,
    pub p_min: Quantity,
    /// `𝔭 < γ(X + Y) < γ(X, Y)` on the computed values.
    pub strict_chain: bool,
    pub discrepancies: Vec<String>,
}

fn least_prime_factor(n: usize) -> usize {
    (2..=n).find(|d| n.is_multiple_of(*d)).unwrap_or(n)
}

fn is_prime(n: usize) -> bool {
    n >= 2 && least_prime_factor(n) == n
}

pub fn progression_sets(m: usize, p: usize, q: usize) -> Result<(FiniteSemigroup, CarrierSubset, CarrierSubset)> {
    if !(2 <= m && m < p && p < q && is_prime(p) && is_prime(q)) {
        return Err(Error::Config(format!(
            "need 2 <= m < p < q with p, q prime; got ({m}, {p}, {q})"
        )));
    }
    let n = m * p * q;
    let s = cyclic(n)?.with_name(format!("cyclic({n})"));
    let x = s.subset((0..p).map(|k| m * k % n))?;
    let y = s.subset((1..=p).map(|k| m * k % n))?;
    Ok((s, x, y))
}

pub fn progression_pair(m: usize, p: usize, q: usize) -> Result<ProgressionReport> {
    let (s, x, y) = progression_sets(m, p, q)?;
    let xy = sumset(&s, &x, &y)?;
    let fin = |v: usize| ExtendedNat::from(v);
    let sumset_size = Quantity {
        computed: fin(xy.len()),
        formula: fin(2 * p),
    };
    let gamma_x = Quantity {
        computed: gamma(&s, &x),
        formula: fin(p * q),
    };
    let gamma_y = Quantity {
        computed: gamma(&s, &y),
        formula: fin(p * q),
    };
    let gamma_sumset = Quantity {
        computed: gamma(&s, &xy),
        formula: fin(q),
    };
    let gamma_pair = Quantity {
        computed: gamma_multi(&s, &[x.clone(), y.clone()])?,
        formula: fin(p * q),
    };
    let p_min = Quantity {
        computed: p_min(&s, &s.full(), PVariant::Element)?,
        formula: fin(least_prime_factor(m)),
    };
    let strict_chain = p_min.computed < gamma_sumset.computed && gamma_sumset.computed < gamma_pair.computed;
    let mut discrepancies = Vec::new();
    for (name, qy) in [
        ("|X+Y|", &sumset_size),
        ("gamma(X)", &gamma_x),
        ("gamma(Y)", &gamma_y),
        ("gamma(X+Y)", &gamma_sumset),
        ("gamma(X,Y)", &gamma_pair),
        ("p(A)", &p_min),
    ] {
        if !qy.matches() {
            discrepancies.push(format!(
                "{name}: computed {} but the closed form gives {}",
                qy.computed, qy.formula
            ));
        }
    }
    if !strict_chain {
        discrepancies.push(format!(
            "strict chain p < gamma(X+Y) < gamma(X,Y) fails on computed values: {} < {} < {}",
            p_min.computed, gamma_sumset.computed, gamma_pair.computed
        ));
    }
    Ok(ProgressionReport {
        m,
        p,
        q,
        modulus: m * p * q,
        x,
        y,
        sumset: xy,
        sumset_size,
        gamma_x,
        gamma_y,
        gamma_sumset,
        gamma_pair,
        p_min,
        strict_chain,
        discrepancies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_instance() {
        let r = progression_pair(2, 3, 5).unwrap();
        assert_eq!(r.x.to_vec(), vec![0, 2, 4]);
        assert_eq!(r.y.to_vec(), vec![2, 4, 6]);
        assert_eq!(r.sumset.to_vec(), vec![2, 4, 6, 8, 10]);
        assert_eq!(r.sumset_size.computed, 5);
        assert_eq!(r.sumset_size.formula, 6);
        assert!(r.gamma_x.matches() && r.gamma_y.matches() && r.gamma_pair.matches() && r.p_min.matches());
        // brute force puts γ({2,...,10}) at 15, attained at the centre 6
        assert_eq!(r.gamma_sumset.computed, 15);
        assert!(!r.strict_chain);
        assert_eq!(r.discrepancies.len(), 3);
    }

    #[test]
    fn larger_instances_share_the_pattern() {
        for (m, p, q) in [(2, 5, 7), (3, 5, 7), (4, 5, 11)] {
            let r = progression_pair(m, p, q).unwrap();
            assert_eq!(r.sumset_size.computed, ExtendedNat::from(2 * p - 1));
            assert!(r.gamma_x.matches());
            assert!(r.p_min.matches());
        }
    }

    #[test]
    fn bad_parameters() {
        assert!(progression_pair(2, 4, 5).is_err());
        assert!(progression_pair(5, 3, 7).is_err());
    }
}
