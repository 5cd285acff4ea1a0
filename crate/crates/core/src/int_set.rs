//! Eventually-periodic subsets of the integers.
//!
//! A [`SemilinearSet`] is a periodic set (a union of residue classes mod
//! `m`) corrected by finitely many exceptions. This universe contains every
//! finite set and every arithmetic progression and is closed under the
//! Boolean operations, so computations over `(Z, +)` stay exact.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num::integer::lcm;

use crate::error::{parse_err, Error, Result};
use crate::text::split_top_level;

/// Upper limit on the modulus of any intermediate set; Boolean operations
/// expand residues to the lcm of the operand moduli.
pub const MAX_MODULUS: u64 = 1 << 22;

/// `((union of r + mZ for r in residues) minus minus) union plus`, in
/// normal form:
///
/// * `modulus` is the least period of the periodic part (1 when it is empty),
/// * `plus` is disjoint from the periodic part,
/// * `minus` is contained in the periodic part.
///
/// Semantically equal sets have identical normal forms, so the derived
/// equality is set equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SemilinearSet {
    modulus: u64,
    residues: BTreeSet<u64>,
    plus: BTreeSet<i64>,
    minus: BTreeSet<i64>,
}

impl SemilinearSet {
    pub fn empty() -> Self {
        SemilinearSet { modulus: 1, residues: BTreeSet::new(), plus: BTreeSet::new(), minus: BTreeSet::new() }
    }

    /// All of `Z`.
    pub fn integers() -> Self {
        Self::from_parts(1, [0], [], [])
    }

    /// The residue class `r + mZ`.
    pub fn class(r: i64, m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("residue class modulus must be positive".into()));
        }
        Ok(Self::from_parts(m, [r.rem_euclid(m as i64) as u64], [], []))
    }

    pub fn finite(xs: impl IntoIterator<Item = i64>) -> Self {
        Self::from_parts(1, [], xs, [])
    }

    /// Builds `(P union plus) minus minus` where `P` is the union of the
    /// given residue classes mod `modulus`, and normalizes it.
    pub fn from_parts(
        modulus: u64,
        residues: impl IntoIterator<Item = u64>,
        plus: impl IntoIterator<Item = i64>,
        minus: impl IntoIterator<Item = i64>,
    ) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        assert!(modulus <= MAX_MODULUS, "modulus {modulus} exceeds {MAX_MODULUS}");
        let residues: BTreeSet<u64> = residues.into_iter().map(|r| r % modulus).collect();
        let (modulus, residues) = reduce_period(modulus, residues);
        let minus_raw: BTreeSet<i64> = minus.into_iter().collect();
        let periodic = |x: i64| residues.contains(&(x.rem_euclid(modulus as i64) as u64));
        let plus = plus.into_iter().filter(|&x| !periodic(x) && !minus_raw.contains(&x)).collect();
        let minus = minus_raw.iter().copied().filter(|&x| periodic(x)).collect();
        SemilinearSet { modulus, residues, plus, minus }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residues(&self) -> &BTreeSet<u64> {
        &self.residues
    }

    /// Finite elements outside the periodic part.
    pub fn plus(&self) -> &BTreeSet<i64> {
        &self.plus
    }

    /// Finite holes in the periodic part.
    pub fn minus(&self) -> &BTreeSet<i64> {
        &self.minus
    }

    pub fn contains(&self, n: i64) -> bool {
        if self.plus.contains(&n) {
            return true;
        }
        if self.minus.contains(&n) {
            return false;
        }
        self.in_periodic_part(n)
    }

    fn in_periodic_part(&self, n: i64) -> bool {
        self.residues.contains(&(n.rem_euclid(self.modulus as i64) as u64))
    }

    pub fn is_finite(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty() && self.plus.is_empty()
    }

    pub fn is_integers(&self) -> bool {
        self.modulus == 1 && !self.residues.is_empty() && self.minus.is_empty()
    }

    /// The elements of a finite set, ascending; `None` for infinite sets.
    pub fn elements(&self) -> Option<&BTreeSet<i64>> {
        self.is_finite().then_some(&self.plus)
    }

    /// Largest `|x|` over the finite exceptions (0 if there are none).
    /// Outside `[-bound, bound]` the set agrees with its periodic part.
    pub fn exception_bound(&self) -> i64 {
        self.plus.iter().chain(self.minus.iter()).map(|x| x.abs()).max().unwrap_or(0)
    }

    fn combine(&self, other: &Self, op: impl Fn(bool, bool) -> bool) -> Self {
        let l = lcm(self.modulus, other.modulus);
        assert!(l <= MAX_MODULUS, "lcm modulus {l} exceeds {MAX_MODULUS}");
        let residues: Vec<u64> = (0..l)
            .filter(|&r| op(self.in_periodic_part(r as i64), other.in_periodic_part(r as i64)))
            .collect();
        let candidates: BTreeSet<i64> =
            self.plus.iter().chain(&self.minus).chain(&other.plus).chain(&other.minus).copied().collect();
        let periodic = |x: i64| op(self.in_periodic_part(x), other.in_periodic_part(x));
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for x in candidates {
            let actual = op(self.contains(x), other.contains(x));
            match (actual, periodic(x)) {
                (true, false) => plus.push(x),
                (false, true) => minus.push(x),
                _ => {}
            }
        }
        Self::from_parts(l, residues, plus, minus)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a && !b)
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a != b)
    }

    pub fn complement(&self) -> Self {
        let residues = (0..self.modulus).filter(|r| !self.residues.contains(r));
        Self::from_parts(self.modulus, residues, self.minus.iter().copied(), self.plus.iter().copied())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    /// Image under `n -> k n`; `r + mZ` maps to `kr + |k|mZ`.
    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return if self.is_empty() { Self::empty() } else { Self::finite([0]) };
        }
        let m = self.modulus * k.unsigned_abs();
        let residues: Vec<u64> =
            self.residues.iter().map(|&r| (k * r as i64).rem_euclid(m as i64) as u64).collect();
        Self::from_parts(m, residues, self.plus.iter().map(|x| k * x), self.minus.iter().map(|x| k * x))
    }
}

/// The cyclic subgroup `<g>` of `Z`: `|g|Z`, or `{0}` for `g = 0`.
pub fn cyclic_subgroup(g: i64) -> SemilinearSet {
    if g == 0 {
        SemilinearSet::finite([0])
    } else {
        SemilinearSet::class(0, g.unsigned_abs()).expect("nonzero modulus")
    }
}

fn reduce_period(modulus: u64, residues: BTreeSet<u64>) -> (u64, BTreeSet<u64>) {
    if residues.is_empty() {
        return (1, residues);
    }
    for p in (1..=modulus).filter(|p| modulus % p == 0) {
        if residues.iter().all(|&r| residues.contains(&((r + p) % modulus))) {
            return (p, residues.into_iter().filter(|&r| r < p).collect());
        }
    }
    unreachable!("modulus itself is a period")
}

/// Evaluates an integer predicate that is periodic with `period` outside
/// `[-window, window]` and returns the set where it holds. The predicate is
/// sampled on the window and at one representative above the window for
/// each residue class.
pub fn stabilized_set(period: u64, window: i64, pred: impl Fn(i64) -> bool) -> SemilinearSet {
    assert!(period > 0);
    let p = period as i64;
    let first = window + 1;
    let residues: Vec<u64> = (0..p)
        .filter(|&c| {
            let rep = first + (c - first).rem_euclid(p);
            pred(rep)
        })
        .map(|c| c as u64)
        .collect();
    let (plus, minus): (Vec<i64>, Vec<i64>) = (-window..=window).partition(|&g| pred(g));
    SemilinearSet::from_parts(period, residues, plus, minus)
}

impl fmt::Display for SemilinearSet {
    /// `Z`, `2Z+1`, `Z\{0}`, `(3Z | 3Z+1)\{0} | {5}`, `{0,1}`, `{}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let finite = |xs: &BTreeSet<i64>| {
            let items: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
            format!("{{{}}}", items.join(","))
        };
        if self.is_finite() {
            return write!(f, "{}", finite(&self.plus));
        }
        let m = self.modulus;
        let classes: Vec<String> = self
            .residues
            .iter()
            .map(|&r| match (m, r) {
                (1, _) => "Z".to_string(),
                (_, 0) => format!("{m}Z"),
                _ => format!("{m}Z+{r}"),
            })
            .collect();
        let mut out = classes.join(" | ");
        if !self.minus.is_empty() {
            if classes.len() > 1 {
                out = format!("({out})");
            }
            out = format!("{out}\\{}", finite(&self.minus));
        }
        if !self.plus.is_empty() {
            out = format!("{out} | {}", finite(&self.plus));
        }
        write!(f, "{out}")
    }
}

impl FromStr for SemilinearSet {
    type Err = Error;

    /// Grammar: `expr := term ('|' term)*`, `term := atom ('\' atom)*`,
    /// `atom := 'Z' | kZ | kZ+r | kZ-r | {ints} | (expr)`.
    fn from_str(s: &str) -> Result<Self> {
        parse_expr(s.trim())
    }
}

fn parse_expr(s: &str) -> Result<SemilinearSet> {
    let terms = split_top_level(s, '|');
    if terms.is_empty() {
        return Err(parse_err("empty integer-set literal"));
    }
    let mut acc = SemilinearSet::empty();
    for t in terms {
        acc = acc.union(&parse_term(t.trim())?);
    }
    Ok(acc)
}

fn parse_term(s: &str) -> Result<SemilinearSet> {
    let parts = split_top_level(s, '\\');
    let mut it = parts.into_iter();
    let mut acc = parse_atom(it.next().unwrap_or("").trim())?;
    for p in it {
        acc = acc.difference(&parse_atom(p.trim())?);
    }
    Ok(acc)
}

fn parse_atom(s: &str) -> Result<SemilinearSet> {
    if s.is_empty() {
        return Err(parse_err("missing integer-set operand"));
    }
    if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        return parse_expr(inner);
    }
    if let Some(inner) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
        let xs = inner
            .split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty() && *x != "∅")
            .map(|x| x.parse::<i64>().map_err(|_| parse_err(format!("bad integer `{x}`"))))
            .collect::<Result<Vec<_>>>()?;
        return Ok(SemilinearSet::finite(xs));
    }
    let (head, offset) = match s.find(['+', '-']).filter(|&i| i > 0) {
        Some(i) => {
            let off: i64 = s[i..]
                .replace('+', "")
                .trim()
                .parse()
                .map_err(|_| parse_err(format!("bad offset in `{s}`")))?;
            (s[..i].trim(), off)
        }
        None => (s, 0),
    };
    let k = head
        .strip_suffix('Z')
        .ok_or_else(|| parse_err(format!("unrecognized integer-set literal `{s}`")))?
        .trim();
    let k: u64 = if k.is_empty() {
        1
    } else {
        k.parse().map_err(|_| parse_err(format!("bad modulus in `{s}`")))?
    };
    if k == 0 {
        return Ok(SemilinearSet::finite([offset]));
    }
    SemilinearSet::class(offset, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl(s: &str) -> SemilinearSet {
        s.parse().unwrap()
    }

    #[test]
    fn constructors() {
        let evens = SemilinearSet::class(0, 2).unwrap();
        assert!(evens.contains(-4) && evens.contains(0) && !evens.contains(3));
        let odds = SemilinearSet::class(1, 2).unwrap();
        assert!(odds.contains(-1) && !odds.contains(2));
        let f = SemilinearSet::finite([0, 1]);
        assert!(f.is_finite());
        assert_eq!(f.elements().unwrap().iter().copied().collect::<Vec<_>>(), vec![0, 1]);
        assert!(SemilinearSet::class(0, 0).is_err());
    }

    #[test]
    fn boolean_examples() {
        let evens = sl("2Z");
        let odds = sl("2Z+1");
        assert!(evens.intersection(&odds).is_empty());
        assert_eq!(sl("2Z").intersection(&sl("3Z")), sl("6Z"));
        let x = sl("3Z+1 | {0,2}");
        assert!(x.symmetric_difference(&x).is_empty());
        assert_eq!(evens.union(&odds), SemilinearSet::integers());
        assert_eq!(evens.complement(), odds);
    }

    #[test]
    fn finiteness_and_equality() {
        assert!(!sl("2Z").is_finite());
        assert!(sl("{0,1}").is_finite());
        assert_ne!(sl("2Z\\{0}"), sl("2Z"));
        assert_eq!(sl("4Z | 4Z+2"), sl("2Z"));
        assert_eq!(sl("(2Z\\{0}) | {0}"), sl("2Z"));
    }

    #[test]
    fn cyclic_subgroups() {
        assert_eq!(cyclic_subgroup(2), sl("2Z"));
        assert_eq!(cyclic_subgroup(0), sl("{0}"));
        assert_eq!(cyclic_subgroup(-3), sl("3Z"));
    }

    #[test]
    fn display_round_trip_examples() {
        for s in ["Z", "2Z", "2Z+1", "{0,1}", "{}", "Z\\{0}", "2Z\\{-2,0,2}", "6Z | 6Z+1 | {2}"] {
            assert_eq!(sl(s).to_string(), s, "printing {s}");
        }
        assert_eq!(sl("Z\\{-1,0,1}").to_string(), "Z\\{-1,0,1}");
        assert_eq!(sl("2Z-1").to_string(), "2Z+1");
        assert!("".parse::<SemilinearSet>().is_err());
        assert!("2Q".parse::<SemilinearSet>().is_err());
    }

    #[test]
    fn scaling() {
        assert_eq!(sl("2Z").scale(2), sl("4Z"));
        assert_eq!(sl("Z\\{0}").scale(2), sl("2Z\\{0}"));
        assert_eq!(sl("Z\\{-1,0,1}").scale(2), sl("2Z\\{-2,0,2}"));
        assert_eq!(sl("2Z+1").scale(-3), sl("6Z+3"));
        assert_eq!(sl("2Z").scale(0), sl("{0}"));
        assert_eq!(sl("{}").scale(0), sl("{}"));
    }

    #[test]
    fn stabilized_matches_predicate() {
        let s = stabilized_set(6, 5, |g| g != 0 && g % 3 != 0 || g == 3);
        for g in -50..50 {
            assert_eq!(s.contains(g), g != 0 && g % 3 != 0 || g == 3, "g = {g}");
        }
    }
}
