//! Finite groups given by Cayley tables, their subsets, subgroups and
//! homomorphisms.
//!
//! Elements are referred to by index; labels are kept only for parsing and
//! display. Subsets are bitmasks, which caps the order of a group at
//! [`MAX_ORDER`].

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{parse_err, Error, Result};
use crate::text::split_top_level;

/// Largest group order representable with bitmask subsets.
pub const MAX_ORDER: usize = 64;

/// Default bound on `|G|` for exhaustive subgroup enumeration.
pub const DEFAULT_SUBGROUP_BOUND: usize = 12;

/// A subset of a finite carrier `{0, .., order-1}`, stored as a bitmask.
///
/// Ordered by cardinality first and numeric mask second, which is the
/// order used for every list this crate returns.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Subset {
    bits: u64,
    order: u8,
}

impl Subset {
    pub fn empty(order: usize) -> Self {
        assert!(order <= MAX_ORDER, "carrier too large for a bitmask subset");
        Subset { bits: 0, order: order as u8 }
    }

    pub fn full(order: usize) -> Self {
        let mut s = Self::empty(order);
        s.bits = full_mask(order);
        s
    }

    pub fn from_bits(order: usize, bits: u64) -> Self {
        let mut s = Self::empty(order);
        s.bits = bits & full_mask(order);
        s
    }

    pub fn singleton(order: usize, x: usize) -> Self {
        Self::from_indices(order, [x])
    }

    pub fn from_indices(order: usize, xs: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(order);
        for x in xs {
            s.insert(x);
        }
        s
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == full_mask(self.order())
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.order() && self.bits >> x & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        assert!(x < self.order(), "element {x} outside carrier of order {}", self.order);
        self.bits |= 1 << x;
    }

    pub fn remove(&mut self, x: usize) {
        self.bits &= !(1u64 << x);
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.same_carrier(other);
        Subset { bits: self.bits | other.bits, order: self.order }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        self.same_carrier(other);
        Subset { bits: self.bits & other.bits, order: self.order }
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        self.same_carrier(other);
        Subset { bits: self.bits & !other.bits, order: self.order }
    }

    pub fn symmetric_difference(&self, other: &Subset) -> Subset {
        self.same_carrier(other);
        Subset { bits: self.bits ^ other.bits, order: self.order }
    }

    pub fn complement(&self) -> Subset {
        Subset { bits: !self.bits & full_mask(self.order()), order: self.order }
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.same_carrier(other);
        self.bits & !other.bits == 0
    }

    pub fn is_proper_subset(&self, other: &Subset) -> bool {
        self.is_subset(other) && self.bits != other.bits
    }

    /// Element indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.order()).filter(move |&i| bits >> i & 1 == 1)
    }

    /// Every subset of a carrier of the given order, in mask order.
    pub fn all(order: usize) -> impl Iterator<Item = Subset> {
        assert!(order < 64, "cannot enumerate the power set of a 64-element carrier");
        (0..1u64 << order).map(move |bits| Subset::from_bits(order, bits))
    }

    /// Every subset of `self` (including `self` and the empty set).
    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        let top = self.bits;
        let order = self.order();
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == top { None } else { Some((cur.wrapping_sub(top)) & top) };
            Some(Subset::from_bits(order, cur))
        })
    }

    fn same_carrier(&self, other: &Subset) {
        debug_assert_eq!(self.order, other.order, "subsets over different carriers");
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then(self.bits.cmp(&other.bits))
            .then(self.order.cmp(&other.order))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Serialized as the ascending list of element indices.
impl Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let items: Vec<usize> = self.iter().collect();
        items.serialize(serializer)
    }
}

fn full_mask(order: usize) -> u64 {
    if order == 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    }
}

/// Which group axiom a table violates, with the witnessing elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "kebab-case")]
pub enum GroupAxiomFailure {
    Empty,
    NotSquare { row: usize, len: usize },
    Closure { a: usize, b: usize, value: usize },
    Identity,
    Inverse { element: usize },
    Associativity { a: usize, b: usize, c: usize },
}

impl fmt::Display for GroupAxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupAxiomFailure::Empty => write!(f, "empty table"),
            GroupAxiomFailure::NotSquare { row, len } => {
                write!(f, "row {row} has length {len}, table is not square")
            }
            GroupAxiomFailure::Closure { a, b, value } => {
                write!(f, "closure: {a}*{b} = {value} is not an element")
            }
            GroupAxiomFailure::Identity => write!(f, "identity: no two-sided neutral element"),
            GroupAxiomFailure::Inverse { element } => write!(f, "inverse: {element} has no inverse"),
            GroupAxiomFailure::Associativity { a, b, c } => {
                write!(f, "associativity: ({a}*{b})*{c} != {a}*({b}*{c})")
            }
        }
    }
}

/// Checks closure, identity, inverses and associativity, in that order.
/// Returns the first violated axiom.
pub fn verify_group(table: &[Vec<usize>]) -> std::result::Result<(), GroupAxiomFailure> {
    let n = table.len();
    if n == 0 {
        return Err(GroupAxiomFailure::Empty);
    }
    for (row, r) in table.iter().enumerate() {
        if r.len() != n {
            return Err(GroupAxiomFailure::NotSquare { row, len: r.len() });
        }
    }
    for a in 0..n {
        for b in 0..n {
            if table[a][b] >= n {
                return Err(GroupAxiomFailure::Closure { a, b, value: table[a][b] });
            }
        }
    }
    let e = find_identity(table).ok_or(GroupAxiomFailure::Identity)?;
    for x in 0..n {
        if !(0..n).any(|y| table[x][y] == e && table[y][x] == e) {
            return Err(GroupAxiomFailure::Inverse { element: x });
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = table[a][b];
            for c in 0..n {
                if table[ab][c] != table[a][table[b][c]] {
                    return Err(GroupAxiomFailure::Associativity { a, b, c });
                }
            }
        }
    }
    Ok(())
}

fn find_identity(table: &[Vec<usize>]) -> Option<usize> {
    let n = table.len();
    (0..n).find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
}

/// A verified finite group.
#[derive(Debug)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    cyclic: Vec<Subset>,
    subgroups: OnceLock<Vec<Subset>>,
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        FiniteGroup {
            name: self.name.clone(),
            labels: self.labels.clone(),
            table: self.table.clone(),
            identity: self.identity,
            inverses: self.inverses.clone(),
            cyclic: self.cyclic.clone(),
            subgroups: OnceLock::new(),
        }
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.table == other.table
    }
}

impl FiniteGroup {
    /// Builds a group from labels and a composition table, verifying every axiom.
    pub fn from_table(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n > MAX_ORDER {
            return Err(Error::BoundExceeded { what: "group order", limit: MAX_ORDER, got: n });
        }
        if labels.len() != n {
            return Err(Error::InvalidArgument(format!(
                "{} labels for a table of order {n}",
                labels.len()
            )));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::InvalidArgument(format!("duplicate element label `{l}`")));
            }
        }
        verify_group(&table).map_err(|f| Error::InvalidArgument(format!("not a group: {f}")))?;
        let identity = find_identity(&table).expect("verified table has an identity");
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let inverses = (0..n)
            .map(|x| (0..n).find(|&y| flat[x * n + y] == identity).expect("verified inverse"))
            .collect();
        let mut g = FiniteGroup {
            name: name.into(),
            labels,
            table: flat,
            identity,
            inverses,
            cyclic: Vec::new(),
            subgroups: OnceLock::new(),
        };
        g.cyclic = (0..n).map(|x| g.generate_cyclic(x)).collect();
        Ok(g)
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("cyclic group of order 0".into()));
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::from_table(format!("cyclic:{n}"), labels, table)
    }

    pub fn klein4() -> Self {
        let labels = ["e", "a", "b", "c"].iter().map(|s| s.to_string()).collect();
        // xor on two bits: e=00, a=01, b=10, c=11
        let table = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        Self::from_table("klein4", labels, table).expect("klein four-group table")
    }

    /// Symmetric group on `{1..n}`, composing as functions: `(s*t)(x) = s(t(x))`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("symmetric group on 0 points".into()));
        }
        if n > 4 {
            return Err(Error::BoundExceeded { what: "symmetric group degree", limit: 4, got: n });
        }
        let perms = permutations(n);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&(0..n).map(|x| s[t[x]]).collect()))
                    .collect()
            })
            .collect();
        let labels = perms.iter().map(|p| cycle_label(p)).collect();
        Self::from_table(format!("sym:{n}"), labels, table)
    }

    /// Direct product; labels are `(x,y)` pairs.
    pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> Result<Self> {
        let (n, m) = (a.order(), b.order());
        if n * m > MAX_ORDER {
            return Err(Error::BoundExceeded { what: "group order", limit: MAX_ORDER, got: n * m });
        }
        let labels = (0..n * m)
            .map(|k| format!("({},{})", a.labels[k / m], b.labels[k % m]))
            .collect();
        let table = (0..n * m)
            .map(|p| {
                (0..n * m)
                    .map(|q| a.compose(p / m, q / m) * m + b.compose(p % m, q % m))
                    .collect()
            })
            .collect();
        Self::from_table(format!("prod({},{})", a.name, b.name), labels, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn compose(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order() + y]
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverses[x]
    }

    /// `x^k` for any integer `k`.
    pub fn power(&self, x: usize, k: i64) -> usize {
        let base = if k < 0 { self.inverse(x) } else { x };
        let mut acc = self.identity;
        // x^|G| = e, so the exponent can be reduced mod |G|
        for _ in 0..k.unsigned_abs() % self.order() as u64 {
            acc = self.compose(acc, base);
        }
        acc
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order()).map(|r| r.to_vec()).collect()
    }

    pub fn element(&self, label: &str) -> Result<usize> {
        let label = label.trim();
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| parse_err(format!("`{label}` is not an element of {}", self.name)))
    }

    pub fn empty_subset(&self) -> Subset {
        Subset::empty(self.order())
    }

    pub fn full_subset(&self) -> Subset {
        Subset::full(self.order())
    }

    /// `<g>` = `{g^n : n in Z}`.
    pub fn cyclic_subgroup(&self, g: usize) -> Subset {
        self.cyclic[g]
    }

    fn generate_cyclic(&self, g: usize) -> Subset {
        let mut s = self.empty_subset();
        let mut x = self.identity;
        loop {
            s.insert(x);
            x = self.compose(x, g);
            if x == self.identity {
                return s;
            }
        }
    }

    pub fn element_order(&self, g: usize) -> usize {
        self.cyclic[g].len()
    }

    pub fn is_subgroup(&self, s: &Subset) -> bool {
        s.contains(self.identity)
            && s.iter().all(|x| {
                s.contains(self.inverse(x)) && s.iter().all(|y| s.contains(self.compose(x, y)))
            })
    }

    /// Every subgroup, ordered by size then mask. Fails when the group is
    /// larger than [`DEFAULT_SUBGROUP_BOUND`].
    pub fn all_subgroups(&self) -> Result<&[Subset]> {
        if self.order() > DEFAULT_SUBGROUP_BOUND {
            return Err(Error::BoundExceeded {
                what: "subgroup enumeration order",
                limit: DEFAULT_SUBGROUP_BOUND,
                got: self.order(),
            });
        }
        Ok(self.subgroups.get_or_init(|| self.scan_subgroups()))
    }

    /// As [`all_subgroups`](Self::all_subgroups) with a caller-chosen bound
    /// (at most 24, the exhaustive scan is exponential in `|G|`).
    pub fn all_subgroups_with_bound(&self, bound: usize) -> Result<Vec<Subset>> {
        let bound = bound.min(24);
        if self.order() > bound {
            return Err(Error::BoundExceeded { what: "subgroup enumeration order", limit: bound, got: self.order() });
        }
        Ok(self.subgroups.get_or_init(|| self.scan_subgroups()).clone())
    }

    fn scan_subgroups(&self) -> Vec<Subset> {
        let n = self.order();
        let e = self.identity;
        let mut out: Vec<Subset> = Subset::all(n)
            .filter(|s| n % s.len().max(1) == 0 && s.contains(e))
            .filter(|s| self.is_subgroup(s))
            .collect();
        out.sort();
        out
    }

    /// `G(g)`: all subgroups containing `g`, ordered by size then mask.
    pub fn subgroups_containing(&self, g: usize) -> Result<Vec<Subset>> {
        Ok(self.all_subgroups()?.iter().filter(|h| h.contains(g)).copied().collect())
    }

    /// Parses a subset literal such as `{e,a}` or `{}` against this group's labels.
    pub fn parse_subset(&self, text: &str) -> Result<Subset> {
        let inner = strip_braces(text)?;
        let mut s = self.empty_subset();
        for item in split_top_level(inner, ',') {
            let item = item.trim();
            if !item.is_empty() {
                s.insert(self.element(item)?);
            }
        }
        Ok(s)
    }

    pub fn format_subset(&self, s: &Subset) -> String {
        let items: Vec<&str> = s.iter().map(|x| self.label(x)).collect();
        format!("{{{}}}", items.join(","))
    }
}

pub(crate) fn strip_braces(text: &str) -> Result<&str> {
    let t = text.trim();
    t.strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| parse_err(format!("expected a braced set literal, got `{t}`")))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for x in 0..n {
            if !prefix.contains(&x) {
                prefix.push(x);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut label = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        label.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            label.push_str(&(x + 1).to_string());
            x = p[x];
        }
        label.push(')');
    }
    if label.is_empty() {
        "e".to_string()
    } else {
        label
    }
}

/// Parsed group-spec mini-language: `cyclic:4`, `klein4`, `sym:3`,
/// `prod(cyclic:2,cyclic:2)`. `cyclic(4)` and `sym(3)` are accepted too.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Klein4,
    Symmetric(usize),
    Product(Vec<GroupSpec>),
}

impl std::str::FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let lower = s.to_ascii_lowercase();
        if lower == "klein4" || lower == "k4" {
            return Ok(GroupSpec::Klein4);
        }
        if let Some(inner) = lower.strip_prefix("prod(").and_then(|r| r.strip_suffix(')')) {
            let parts = split_top_level(inner, ',')
                .into_iter()
                .map(|p| p.parse())
                .collect::<Result<Vec<_>>>()?;
            if parts.len() < 2 {
                return Err(parse_err("prod(...) needs at least two factors"));
            }
            return Ok(GroupSpec::Product(parts));
        }
        let (head, arg) = if let Some((h, a)) = lower.split_once(':') {
            (h.to_string(), a.to_string())
        } else if let Some(open) = lower.find('(') {
            let arg = lower[open + 1..]
                .strip_suffix(')')
                .ok_or_else(|| parse_err(format!("unbalanced group spec `{s}`")))?;
            (lower[..open].to_string(), arg.to_string())
        } else {
            return Err(parse_err(format!("unknown group spec `{s}`")));
        };
        let n: usize = arg
            .trim()
            .parse()
            .map_err(|_| parse_err(format!("bad order `{arg}` in group spec `{s}`")))?;
        match head.trim() {
            "cyclic" | "c" | "z" => Ok(GroupSpec::Cyclic(n)),
            "sym" | "s" => Ok(GroupSpec::Symmetric(n)),
            other => Err(parse_err(format!("unknown group family `{other}`"))),
        }
    }
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n),
            GroupSpec::Klein4 => Ok(FiniteGroup::klein4()),
            GroupSpec::Symmetric(n) => FiniteGroup::symmetric(*n),
            GroupSpec::Product(parts) => {
                let mut acc = parts[0].build()?;
                for p in &parts[1..] {
                    acc = FiniteGroup::product(&acc, &p.build()?)?;
                }
                Ok(acc)
            }
        }
    }
}

/// Parses and builds a group from the spec mini-language.
pub fn build_group(spec: &str) -> Result<FiniteGroup> {
    spec.parse::<GroupSpec>()?.build()
}

/// A verified homomorphism between finite groups.
#[derive(Clone, Debug)]
pub struct Homomorphism<'a> {
    domain: &'a FiniteGroup,
    codomain: &'a FiniteGroup,
    map: Vec<usize>,
}

impl<'a> Homomorphism<'a> {
    pub fn new(domain: &'a FiniteGroup, codomain: &'a FiniteGroup, map: Vec<usize>) -> Result<Self> {
        if map.len() != domain.order() {
            return Err(Error::NotHomomorphism(format!(
                "map has {} entries for a domain of order {}",
                map.len(),
                domain.order()
            )));
        }
        if let Some(x) = map.iter().position(|&y| y >= codomain.order()) {
            return Err(Error::NotHomomorphism(format!("image of {} is not in the codomain", domain.label(x))));
        }
        if map[domain.identity()] != codomain.identity() {
            return Err(Error::NotHomomorphism(format!(
                "identity {} maps to {}",
                domain.label(domain.identity()),
                codomain.label(map[domain.identity()])
            )));
        }
        for x in 0..domain.order() {
            for y in 0..domain.order() {
                if map[domain.compose(x, y)] != codomain.compose(map[x], map[y]) {
                    return Err(Error::NotHomomorphism(format!(
                        "f({x}*{y}) != f({x})*f({y})",
                        x = domain.label(x),
                        y = domain.label(y)
                    )));
                }
            }
        }
        Ok(Homomorphism { domain, codomain, map })
    }

    pub fn identity(g: &'a FiniteGroup) -> Self {
        Homomorphism { domain: g, codomain: g, map: (0..g.order()).collect() }
    }

    pub fn domain(&self) -> &'a FiniteGroup {
        self.domain
    }

    pub fn codomain(&self) -> &'a FiniteGroup {
        self.codomain
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = self.codomain.empty_subset();
        self.map.iter().all(|&y| {
            let fresh = !seen.contains(y);
            seen.insert(y);
            fresh
        })
    }

    /// `ker f = {x : f(x) = e'}`.
    pub fn kernel(&self) -> Subset {
        let e = self.codomain.identity();
        Subset::from_indices(self.domain.order(), (0..self.domain.order()).filter(|&x| self.map[x] == e))
    }

    pub fn image_subset(&self, a: &Subset) -> Subset {
        Subset::from_indices(self.codomain.order(), a.iter().map(|x| self.map[x]))
    }

    pub fn preimage_subset(&self, b: &Subset) -> Subset {
        Subset::from_indices(self.domain.order(), (0..self.domain.order()).filter(|&x| b.contains(self.map[x])))
    }
}

/// Every homomorphism `G -> H`, by backtracking over images with the
/// homomorphism property checked on each partial assignment.
pub fn homomorphisms<'a>(g: &'a FiniteGroup, h: &'a FiniteGroup) -> Vec<Homomorphism<'a>> {
    let n = g.order();
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    fn consistent(g: &FiniteGroup, h: &FiniteGroup, map: &[usize], upto: usize) -> bool {
        for x in 0..=upto {
            for y in 0..=upto {
                let xy = g.compose(x, y);
                if map[xy] != usize::MAX && map[xy] != h.compose(map[x], map[y]) {
                    return false;
                }
            }
        }
        true
    }
    fn go<'a>(
        g: &'a FiniteGroup,
        h: &'a FiniteGroup,
        map: &mut Vec<usize>,
        x: usize,
        out: &mut Vec<Homomorphism<'a>>,
    ) {
        if x == map.len() {
            out.push(Homomorphism { domain: g, codomain: h, map: map.clone() });
            return;
        }
        for y in 0..h.order() {
            map[x] = y;
            if consistent(g, h, map, x) {
                go(g, h, map, x + 1, out);
            }
        }
        map[x] = usize::MAX;
    }
    go(g, h, &mut map, 0, &mut out);
    out
}
