//! Standard families of finite semigroups and a small expression language
//! naming them, e.g. `product(cyclic(2),dihedral(4))`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{check_order, FiniteSemigroup, Structure};

/// A family member, parseable from and printable to the expression syntax.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FamilySpec {
    Cyclic(usize),
    DirectProduct(Box<FamilySpec>, Box<FamilySpec>),
    LeftZero(usize),
    RightZero(usize),
    Unitize(Box<FamilySpec>),
    Opposite(Box<FamilySpec>),
    Dihedral(usize),
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    /// Disjoint union of two semigroups plus an absorbing element that every
    /// mixed product collapses to.
    ZeroJoin(Box<FamilySpec>, Box<FamilySpec>),
}

/// Builds the semigroup named by `spec`, labelled with its expression.
pub fn make_standard(spec: &FamilySpec) -> Result<FiniteSemigroup> {
    let s = match spec {
        FamilySpec::Cyclic(m) => cyclic(*m)?,
        FamilySpec::DirectProduct(a, b) => direct_product(&make_standard(a)?, &make_standard(b)?)?,
        FamilySpec::LeftZero(n) => left_zero(*n)?,
        FamilySpec::RightZero(n) => right_zero(*n)?,
        FamilySpec::Unitize(a) => make_standard(a)?.unitize()?,
        FamilySpec::Opposite(a) => make_standard(a)?.opposite(),
        FamilySpec::Dihedral(n) => dihedral(*n)?,
        FamilySpec::Dicyclic(n) => dicyclic(*n)?,
        FamilySpec::Symmetric(n) => symmetric(*n)?,
        FamilySpec::Alternating(n) => alternating(*n)?,
        FamilySpec::ZeroJoin(a, b) => zero_join(&make_standard(a)?, &make_standard(b)?)?,
    };
    Ok(s.with_name(spec.to_string()))
}

/// `(Z/mZ, +)`.
pub fn cyclic(m: usize) -> Result<FiniteSemigroup> {
    check_order(m)?;
    let mut flat = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            flat.push(((i + j) % m) as u16);
        }
    }
    Ok(FiniteSemigroup::from_trusted(m, flat, Structure::Cyclic(m)).with_name(FamilySpec::Cyclic(m).to_string()))
}

/// Pairs `(a, b)` indexed as `a * |T| + b`, multiplied componentwise.
pub fn direct_product(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Result<FiniteSemigroup> {
    let (p, q) = (s.order(), t.order());
    let n = p * q;
    check_order(n)?;
    let mut flat = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let (a1, a2) = (a / q, a % q);
            let (b1, b2) = (b / q, b % q);
            flat.push((s.op(a1, b1) * q + t.op(a2, b2)) as u16);
        }
    }
    Ok(FiniteSemigroup::from_trusted(n, flat, Structure::General))
}

/// `x + y = x`.
pub fn left_zero(n: usize) -> Result<FiniteSemigroup> {
    check_order(n)?;
    let flat = (0..n * n).map(|pos| (pos / n) as u16).collect();
    Ok(FiniteSemigroup::from_trusted(n, flat, Structure::General).with_name(FamilySpec::LeftZero(n).to_string()))
}

/// `x + y = y`.
pub fn right_zero(n: usize) -> Result<FiniteSemigroup> {
    check_order(n)?;
    let flat = (0..n * n).map(|pos| (pos % n) as u16).collect();
    Ok(FiniteSemigroup::from_trusted(n, flat, Structure::General).with_name(FamilySpec::RightZero(n).to_string()))
}

/// Symmetries of the regular n-gon, order `2n`. Rotation `r^k` is index `k`
/// and reflection `r^k s` is index `n + k`.
pub fn dihedral(n: usize) -> Result<FiniteSemigroup> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    let order = 2 * n;
    check_order(order)?;
    let decode = |x: usize| (x % n, x / n);
    let mut flat = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            let ((k, e), (l, f)) = (decode(a), decode(b));
            let rot = if e == 0 { (k + l) % n } else { (k + n - l) % n };
            flat.push((((e + f) % 2) * n + rot) as u16);
        }
    }
    FiniteSemigroup::from_flat(order, flat)
}

/// Dicyclic group of order `4n`: `<a, x | a^(2n) = 1, x^2 = a^n, x a x^-1 = a^-1>`.
/// `a^k x^e` is index `e * 2n + k`; `dicyclic(2)` is the quaternion group.
pub fn dicyclic(n: usize) -> Result<FiniteSemigroup> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    let m = 2 * n;
    let order = 2 * m;
    check_order(order)?;
    let decode = |x: usize| (x % m, x / m);
    let mut flat = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            let ((k, e), (l, f)) = (decode(a), decode(b));
            let (rot, ex) = match (e, f) {
                (0, f) => ((k + l) % m, f),
                (_, 0) => ((k + m - l) % m, 1),
                _ => ((k + m - l + n) % m, 0),
            };
            flat.push((ex * m + rot) as u16);
        }
    }
    FiniteSemigroup::from_flat(order, flat)
}

fn permutation_group(n: usize, even_only: bool) -> Result<FiniteSemigroup> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if n > 5 {
        return Err(Error::OrderTooLarge { order: n, max: 5 });
    }
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    permutations(&mut current, 0, &mut perms);
    perms.sort();
    if even_only {
        perms.retain(|p| is_even(p));
    }
    let index: HashMap<Vec<usize>, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let order = perms.len();
    let mut flat = Vec::with_capacity(order * order);
    for p in &perms {
        for q in &perms {
            // apply q first, then p
            let composed: Vec<usize> = (0..n).map(|i| p[q[i]]).collect();
            flat.push(index[&composed] as u16);
        }
    }
    FiniteSemigroup::from_flat(order, flat)
}

fn permutations(current: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == current.len() {
        out.push(current.clone());
        return;
    }
    for i in k..current.len() {
        current.swap(k, i);
        permutations(current, k + 1, out);
        current.swap(k, i);
    }
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

/// Symmetric group on `n <= 5` points; the identity permutation is index 0.
pub fn symmetric(n: usize) -> Result<FiniteSemigroup> {
    permutation_group(n, false)
}

/// Alternating group on `n <= 5` points.
pub fn alternating(n: usize) -> Result<FiniteSemigroup> {
    permutation_group(n, true)
}

/// `S ∪ T ∪ {0}` where products inside `S` or `T` are kept and every other
/// product is the absorbing element `0` (index `|S| + |T|`).
pub fn zero_join(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Result<FiniteSemigroup> {
    let (p, q) = (s.order(), t.order());
    let n = p + q + 1;
    check_order(n)?;
    let zero = p + q;
    let mut flat = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let v = if a < p && b < p {
                s.op(a, b)
            } else if (p..zero).contains(&a) && (p..zero).contains(&b) {
                p + t.op(a - p, b - p)
            } else {
                zero
            };
            flat.push(v as u16);
        }
    }
    Ok(FiniteSemigroup::from_trusted(n, flat, Structure::General))
}

/// One representative of every group of order `<= max_order` (at most 12),
/// built from the families above.
pub fn small_groups(max_order: usize) -> Result<Vec<FiniteSemigroup>> {
    if max_order > 12 {
        return Err(Error::OrderTooLarge {
            order: max_order,
            max: 12,
        });
    }
    small_group_specs()
        .into_iter()
        .map(|spec| make_standard(&spec))
        .filter(|g| g.as_ref().map(|g| g.order() <= max_order).unwrap_or(true))
        .collect()
}

/// Expressions for the groups of order 1..=12 up to isomorphism.
pub fn small_group_specs() -> Vec<FamilySpec> {
    let c = |m| FamilySpec::Cyclic(m);
    let prod = |a: FamilySpec, b: FamilySpec| FamilySpec::DirectProduct(Box::new(a), Box::new(b));
    vec![
        c(1),
        c(2),
        c(3),
        c(4),
        prod(c(2), c(2)),
        c(5),
        c(6),
        FamilySpec::Dihedral(3),
        c(7),
        c(8),
        prod(c(4), c(2)),
        prod(prod(c(2), c(2)), c(2)),
        FamilySpec::Dihedral(4),
        FamilySpec::Dicyclic(2),
        c(9),
        prod(c(3), c(3)),
        c(10),
        FamilySpec::Dihedral(5),
        c(11),
        c(12),
        prod(c(6), c(2)),
        FamilySpec::Dihedral(6),
        FamilySpec::Alternating(4),
        FamilySpec::Dicyclic(3),
    ]
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cyclic(m) => write!(f, "cyclic({m})"),
            FamilySpec::DirectProduct(a, b) => write!(f, "product({a},{b})"),
            FamilySpec::LeftZero(n) => write!(f, "left_zero({n})"),
            FamilySpec::RightZero(n) => write!(f, "right_zero({n})"),
            FamilySpec::Unitize(a) => write!(f, "unitize({a})"),
            FamilySpec::Opposite(a) => write!(f, "opposite({a})"),
            FamilySpec::Dihedral(n) => write!(f, "dihedral({n})"),
            FamilySpec::Dicyclic(n) => write!(f, "dicyclic({n})"),
            FamilySpec::Symmetric(n) => write!(f, "symmetric({n})"),
            FamilySpec::Alternating(n) => write!(f, "alternating({n})"),
            FamilySpec::ZeroJoin(a, b) => write!(f, "zero_join({a},{b})"),
        }
    }
}

impl From<FamilySpec> for String {
    fn from(spec: FamilySpec) -> String {
        spec.to_string()
    }
}

impl TryFrom<String> for FamilySpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let spec = parser.spec()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

enum Arg {
    Int(usize),
    Spec(FamilySpec),
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!(
            "family expression {:?}: {what} at offset {}",
            String::from_utf8_lossy(self.src),
            self.pos
        ))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a name"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn arg(&mut self) -> Result<Arg> {
        self.skip_ws();
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_digit() => {
                let word = self.ident()?;
                word.parse()
                    .map(Arg::Int)
                    .map_err(|_| self.error("expected an integer"))
            }
            _ => self.spec().map(Arg::Spec),
        }
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        let name = self.ident()?;
        if !self.eat(b'(') {
            return Err(self.error("expected `(`"));
        }
        let mut args = Vec::new();
        if !self.eat(b')') {
            loop {
                args.push(self.arg()?);
                if self.eat(b')') {
                    break;
                }
                if !self.eat(b',') {
                    return Err(self.error("expected `,` or `)`"));
                }
            }
        }
        let int = |args: &[Arg]| match args {
            [Arg::Int(n)] => Ok(*n),
            _ => Err(self.error(&format!("`{name}` takes one integer"))),
        };
        let one = |args: Vec<Arg>| match <[Arg; 1]>::try_from(args) {
            Ok([Arg::Spec(a)]) => Ok(Box::new(a)),
            _ => Err(self.error(&format!("`{name}` takes one family expression"))),
        };
        let two = |args: Vec<Arg>| match <[Arg; 2]>::try_from(args) {
            Ok([Arg::Spec(a), Arg::Spec(b)]) => Ok((Box::new(a), Box::new(b))),
            _ => Err(self.error(&format!("`{name}` takes two family expressions"))),
        };
        Ok(match name.as_str() {
            "cyclic" => FamilySpec::Cyclic(int(&args)?),
            "left_zero" => FamilySpec::LeftZero(int(&args)?),
            "right_zero" => FamilySpec::RightZero(int(&args)?),
            "dihedral" => FamilySpec::Dihedral(int(&args)?),
            "dicyclic" => FamilySpec::Dicyclic(int(&args)?),
            "symmetric" => FamilySpec::Symmetric(int(&args)?),
            "alternating" => FamilySpec::Alternating(int(&args)?),
            "unitize" => FamilySpec::Unitize(one(args)?),
            "opposite" => FamilySpec::Opposite(one(args)?),
            "product" | "direct_product" => {
                let (a, b) = two(args)?;
                FamilySpec::DirectProduct(a, b)
            }
            "zero_join" => {
                let (a, b) = two(args)?;
                FamilySpec::ZeroJoin(a, b)
            }
            other => return Err(self.error(&format!("unknown family `{other}`"))),
        })
    }
}
