//! Anti-ideals on rings and the anti-local operator on groups.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{parse_err, Error, Result};
use crate::group::{FiniteGroup, Subset};
use crate::ideal::{parse_int_family, parse_subset_list, Ambient, AmbientSet, Family};
use crate::int_set::{cyclic_subgroup, stabilized_set, SemilinearSet, MAX_MODULUS};
use crate::ring::{
    build_ring_hom, parse_finite_elements, parse_function_elements, parse_int_elements, parse_powerset_elements,
    FiniteRing, PowersetRing, RingAdapter, RingHom, RingOps,
};

/// Whether condition (i) also ranges over `a = b`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairMode {
    #[default]
    IncludeEqual,
    StrictPairs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AntiCondition {
    /// `a - b ∉ A`
    Difference,
    /// `(a + b) + a·b ∉ A`
    Composite,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntiViolation {
    pub condition: AntiCondition,
    pub a: String,
    pub b: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntiVerdict {
    pub pass: bool,
    pub violation: Option<AntiViolation>,
}

impl AntiVerdict {
    fn ok() -> Self {
        AntiVerdict { pass: true, violation: None }
    }
}

impl fmt::Display for AntiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.condition {
            AntiCondition::Difference => format!("{} - {}", self.a, self.b),
            AntiCondition::Composite => format!("({0} + {1}) + {0}·{1}", self.a, self.b),
        };
        write!(f, "{op} = {} is a member", self.value)
    }
}

impl fmt::Display for AntiVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => f.write_str("passes"),
            Some(v) => write!(f, "fails: {v}"),
        }
    }
}

fn dedup<T: Clone + PartialEq>(xs: &[T]) -> Vec<T> {
    let mut out: Vec<T> = Vec::with_capacity(xs.len());
    for x in xs {
        if !out.contains(x) {
            out.push(x.clone());
        }
    }
    out
}

/// Checks both anti-ideal conditions. For noncommutative rings condition
/// (ii) is tested with `a·b` and `b·a`.
pub fn is_anti_ideal<R: RingOps>(r: &R, members: &[R::Elem], mode: PairMode) -> Result<AntiVerdict> {
    if let Some(bad) = members.iter().find(|x| !r.contains(x)) {
        return Err(Error::ElementOutsideRing(r.format(bad)));
    }
    let a = dedup(members);
    let member = |x: &R::Elem| a.contains(x);
    let fail = |condition, x: &R::Elem, y: &R::Elem, v: &R::Elem| AntiVerdict {
        pass: false,
        violation: Some(AntiViolation { condition, a: r.format(x), b: r.format(y), value: r.format(v) }),
    };
    for (i, x) in a.iter().enumerate() {
        for (j, y) in a.iter().enumerate() {
            if i == j && mode == PairMode::StrictPairs {
                continue;
            }
            let d = r.sub(x, y);
            if member(&d) {
                return Ok(fail(AntiCondition::Difference, x, y, &d));
            }
        }
    }
    let both_orders = !r.is_commutative();
    for (i, x) in a.iter().enumerate() {
        for (j, y) in a.iter().enumerate() {
            if i == j || (j < i && !both_orders) {
                continue;
            }
            let c = r.add(&r.add(x, y), &r.mul(x, y));
            if member(&c) {
                return Ok(fail(AntiCondition::Composite, x, y, &c));
            }
        }
    }
    Ok(AntiVerdict::ok())
}

/// A family of ring elements with its verdict, in display form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntiReport {
    pub ring: String,
    pub members: Vec<String>,
    pub mode: PairMode,
    pub verdict: AntiVerdict,
}

fn report<R: RingOps>(name: String, r: &R, members: &[R::Elem], mode: PairMode) -> Result<AntiReport> {
    let verdict = is_anti_ideal(r, members, mode)?;
    Ok(AntiReport { ring: name, members: dedup(members).iter().map(|x| r.format(x)).collect(), mode, verdict })
}

/// Parses an element list for the adapter's ring and checks it.
pub fn check_anti_ideal(ring: &RingAdapter, text: &str, mode: PairMode) -> Result<AntiReport> {
    let name = ring.name();
    match ring {
        RingAdapter::Finite(r) => report(name, r, &parse_finite_elements(r, text)?, mode),
        RingAdapter::Integer(r) => report(name, r, &parse_int_elements(text)?, mode),
        RingAdapter::Powerset(p) => report(name, p, &parse_powerset_elements(p, text)?, mode),
        RingAdapter::PwPoly(r) => report(name, r, &parse_function_elements(text)?, mode),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "kebab-case")]
pub enum CharViolation {
    /// `a ⊊ b` with both in the family.
    ProperSubset { a: String, b: String },
    /// `a ∪ b` in the family for distinct members.
    UnionMember { a: String, b: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharVerdict {
    pub pass: bool,
    pub violation: Option<CharViolation>,
}

impl fmt::Display for CharVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => f.write_str("passes"),
            Some(CharViolation::ProperSubset { a, b }) => write!(f, "fails: {a} ⊊ {b}"),
            Some(CharViolation::UnionMember { a, b }) => write!(f, "fails: {a} ∪ {b} is a member"),
        }
    }
}

/// The two-clause subset/union test over a family of subsets.
pub fn powerset_char(p: &PowersetRing, family: &[Subset]) -> CharVerdict {
    let fam = dedup(family);
    for a in &fam {
        for b in &fam {
            if a.is_proper_subset(b) {
                return CharVerdict {
                    pass: false,
                    violation: Some(CharViolation::ProperSubset { a: p.format(a), b: p.format(b) }),
                };
            }
        }
    }
    for (i, a) in fam.iter().enumerate() {
        for b in &fam[i + 1..] {
            if fam.contains(&a.union(b)) {
                return CharVerdict {
                    pass: false,
                    violation: Some(CharViolation::UnionMember { a: p.format(a), b: p.format(b) }),
                };
            }
        }
    }
    CharVerdict { pass: true, violation: None }
}

/// A family where the subset/union test and the anti-ideal test disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MismatchRecord {
    pub family: Vec<String>,
    pub anti_ideal: AntiVerdict,
    pub characterization: CharVerdict,
}

pub const SCAN_CARRIER_BOUND: usize = 3;
pub const SCAN_FAMILY_BOUND: usize = 4;

/// Every family of nonempty subsets of `{1..n}` with at most `max_family`
/// members, compared under both predicates in the power-set ring.
pub fn equivalence_scan(n: usize, max_family: usize, mode: PairMode) -> Result<Vec<MismatchRecord>> {
    if n > SCAN_CARRIER_BOUND {
        return Err(Error::BoundExceeded { what: "scan carrier size", limit: SCAN_CARRIER_BOUND, got: n });
    }
    if max_family > SCAN_FAMILY_BOUND {
        return Err(Error::BoundExceeded { what: "scan family size", limit: SCAN_FAMILY_BOUND, got: max_family });
    }
    let p = PowersetRing::numbered(n);
    let nonempty: Vec<Subset> = Subset::all(n).filter(|s| !s.is_empty()).collect();
    let mut out = Vec::new();
    for family in combinations(&nonempty, max_family) {
        let anti = is_anti_ideal(&p, &family, mode)?;
        let chr = powerset_char(&p, &family);
        if anti.pass != chr.pass {
            out.push(MismatchRecord {
                family: family.iter().map(|s| p.format(s)).collect(),
                anti_ideal: anti,
                characterization: chr,
            });
        }
    }
    Ok(out)
}

/// All sub-sequences of `items` of length `0..=max`, by length then
/// lexicographic index order.
fn combinations<T: Clone>(items: &[T], max: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    for k in 0..=max.min(items.len()) {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(idx.iter().map(|&i| items[i].clone()).collect());
            let Some(pos) = (0..k).rev().find(|&i| idx[i] < items.len() - k + i) else { break };
            idx[pos] += 1;
            for i in pos + 1..k {
                idx[i] = idx[i - 1] + 1;
            }
        }
    }
    out
}

pub const ENUMERATION_SIZE_BOUND: usize = 3;

/// Anti-ideals of a finite ring with at most `max_size` elements; the empty
/// family comes first.
pub fn enumerate_anti_ideals(r: &FiniteRing, max_size: usize) -> Result<Vec<Vec<usize>>> {
    if max_size > ENUMERATION_SIZE_BOUND {
        return Err(Error::BoundExceeded { what: "anti-ideal size", limit: ENUMERATION_SIZE_BOUND, got: max_size });
    }
    let elements: Vec<usize> = (0..r.order()).collect();
    let mut out = Vec::new();
    for c in combinations(&elements, max_size) {
        if is_anti_ideal(r, &c, PairMode::IncludeEqual)?.pass {
            out.push(c);
        }
    }
    Ok(out)
}

/// The image family of a map together with its verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transport {
    pub image: Vec<String>,
    pub isomorphism: bool,
    pub verdict: AntiVerdict,
}

/// `{f(a) : a ∈ A}` checked in the target ring, for any map.
pub fn transport_with<S: RingOps, E>(
    target: &S,
    members: &[E],
    f: impl Fn(&E) -> S::Elem,
    isomorphism: bool,
    mode: PairMode,
) -> Result<Transport> {
    let image = dedup(&members.iter().map(f).collect::<Vec<_>>());
    let verdict = is_anti_ideal(target, &image, mode)?;
    Ok(Transport { image: image.iter().map(|x| target.format(x)).collect(), isomorphism, verdict })
}

pub fn transport_anti_ideal(f: &RingHom<'_>, members: &[usize], mode: PairMode) -> Result<Transport> {
    if let Some(&bad) = members.iter().find(|&&x| x >= f.domain().order()) {
        return Err(Error::ElementOutsideRing(format!("#{bad}")));
    }
    transport_with(f.codomain(), members, |&x| f.apply(x), f.is_isomorphism(), mode)
}

/// The zero map `R -> R`, as a verified homomorphism on a finite ring.
pub fn zero_map(r: &FiniteRing) -> RingHom<'_> {
    build_ring_hom(r, r, vec![r.zero_index(); r.order()]).expect("the zero map is a ring homomorphism")
}

/// How `H ∈ G(g)` is read when evaluating the anti-local operator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AntiSemantics {
    /// Every subgroup containing `g`.
    #[default]
    Stated,
    /// Only `<g>`.
    Cyclic,
    /// `<g>` for `g ≠ e`, and the whole group for `g = e`.
    CyclicGlobalIdentity,
}

impl AntiSemantics {
    pub const ALL: [AntiSemantics; 3] =
        [AntiSemantics::Stated, AntiSemantics::Cyclic, AntiSemantics::CyclicGlobalIdentity];

    pub fn as_str(self) -> &'static str {
        match self {
            AntiSemantics::Stated => "stated",
            AntiSemantics::Cyclic => "cyclic",
            AntiSemantics::CyclicGlobalIdentity => "cyclic-global-identity",
        }
    }
}

impl fmt::Display for AntiSemantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AntiSemantics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AntiSemantics::ALL
            .into_iter()
            .find(|m| m.as_str() == s.trim())
            .ok_or_else(|| parse_err(format!("unknown semantics `{s}`")))
    }
}

/// `A^{a∝}` on a finite group. The stated reading enumerates subgroups and
/// so is subject to the subgroup bound.
pub fn anti_local_fn(g: &FiniteGroup, a: &Subset, family: &Family, semantics: AntiSemantics) -> Result<Subset> {
    if a.order() != g.order() || family.order() != g.order() {
        return Err(Error::AmbientMismatch("set and family must live over the group".into()));
    }
    let n = g.order();
    let e = g.identity();
    let keep: Vec<usize> = match semantics {
        AntiSemantics::Stated => {
            let subgroups = g.all_subgroups()?;
            (0..n)
                .filter(|&x| subgroups.iter().filter(|h| h.contains(x)).all(|h| family.contains(&h.intersection(a))))
                .collect()
        }
        AntiSemantics::Cyclic => (0..n).filter(|&x| family.contains(&g.cyclic_subgroup(x).intersection(a))).collect(),
        AntiSemantics::CyclicGlobalIdentity => (0..n)
            .filter(|&x| {
                let h = if x == e { g.full_subset() } else { g.cyclic_subgroup(x) };
                family.contains(&h.intersection(a))
            })
            .collect(),
    };
    Ok(Subset::from_indices(n, keep))
}

fn family_has(family: &BTreeSet<BTreeSet<i64>>, s: &SemilinearSet) -> bool {
    s.elements().is_some_and(|e| family.contains(e))
}

/// `A^{a∝}` on `(Z, +)` for a finite family of finite sets.
///
/// Under the cyclic readings `<g> ∩ A` is periodic in `g` outside the window
/// where the constants of `A` and the family live. Under the stated reading
/// `Z` itself contains every `g`, so the result is empty unless `A` is a
/// member; then `A` is finite and `dZ ∩ A = {0} ∩ A` for every `d` past
/// `max |a|`, which reduces the quantifier to the divisors up to that bound.
pub fn anti_local_int(
    a: &SemilinearSet,
    family: &BTreeSet<BTreeSet<i64>>,
    semantics: AntiSemantics,
) -> Result<SemilinearSet> {
    let family_bound = family.iter().flatten().map(|x| x.abs()).max().unwrap_or(0);
    let window = a.exception_bound().max(family_bound);
    match semantics {
        AntiSemantics::Cyclic => Ok(stabilized_set(a.modulus(), window, |g| {
            family_has(family, &cyclic_subgroup(g).intersection(a))
        })),
        AntiSemantics::CyclicGlobalIdentity => {
            let at_zero = family_has(family, a);
            Ok(stabilized_set(a.modulus(), window, |g| {
                if g == 0 {
                    at_zero
                } else {
                    family_has(family, &cyclic_subgroup(g).intersection(a))
                }
            }))
        }
        AntiSemantics::Stated => anti_local_int_stated(a, family),
    }
}

fn anti_local_int_stated(a: &SemilinearSet, family: &BTreeSet<BTreeSet<i64>>) -> Result<SemilinearSet> {
    let Some(elements) = a.elements().filter(|e| family.contains(*e)) else {
        return Ok(SemilinearSet::empty());
    };
    let k = elements.iter().map(|x| x.abs()).max().unwrap_or(0);
    let ok = |d: i64| family_has(family, &cyclic_subgroup(d).intersection(a));
    let past_bound = family_has(family, &SemilinearSet::finite([0]).intersection(a));
    let bad: Vec<i64> = (1..=k).filter(|&d| !ok(d)).collect();
    if !past_bound {
        // every g ≠ 0 has the divisor |g|; past k that forces {0} ∩ A
        let members = (1..=k).filter(|&m| (1..=m).filter(|d| m % d == 0).all(|d| !bad.contains(&d)));
        return Ok(SemilinearSet::finite(members.flat_map(|m| [m, -m])));
    }
    if bad.is_empty() {
        return Ok(SemilinearSet::integers());
    }
    let minimal: Vec<i64> = bad.iter().copied().filter(|&d| !bad.iter().any(|&c| c < d && d % c == 0)).collect();
    let mut lcm: u64 = 1;
    for &d in &minimal {
        lcm = num::integer::lcm(lcm, d as u64);
        if lcm > MAX_MODULUS {
            return Err(Error::BoundExceeded { what: "anti-local modulus", limit: MAX_MODULUS as usize, got: lcm as usize });
        }
    }
    let divisible = minimal
        .iter()
        .fold(SemilinearSet::empty(), |acc, &d| acc.union(&SemilinearSet::class(0, d as u64).expect("positive")));
    Ok(divisible.complement())
}

/// A finite family of subsets over either ambient.
#[derive(Clone, Debug, PartialEq)]
pub enum AntiFamily {
    Finite(Family),
    Integers(BTreeSet<BTreeSet<i64>>),
}

impl AntiFamily {
    /// `{ {0},{2} }`; on `Z` every member must be a finite list.
    pub fn parse(ambient: &Ambient, text: &str) -> Result<Self> {
        match ambient {
            Ambient::Finite(g) => Ok(AntiFamily::Finite(Family::new(g.order(), parse_subset_list(g, text)?))),
            Ambient::Integers => Ok(AntiFamily::Integers(parse_int_family(text)?.into_iter().collect())),
        }
    }

    pub fn format(&self, ambient: &Ambient) -> String {
        let items: Vec<String> = match (self, ambient) {
            (AntiFamily::Finite(f), Ambient::Finite(g)) => f.members().iter().map(|s| g.format_subset(s)).collect(),
            (AntiFamily::Finite(f), Ambient::Integers) => f.members().iter().map(|s| format!("{s:?}")).collect(),
            (AntiFamily::Integers(f), _) => f.iter().map(|s| SemilinearSet::finite(s.iter().copied()).to_string()).collect(),
        };
        format!("{{{}}}", items.join(","))
    }
}

pub fn anti_local_any(
    ambient: &Ambient,
    a: &AmbientSet,
    family: &AntiFamily,
    semantics: AntiSemantics,
) -> Result<AmbientSet> {
    match (ambient, a, family) {
        (Ambient::Finite(g), AmbientSet::Finite(s), AntiFamily::Finite(f)) => {
            Ok(AmbientSet::Finite(anti_local_fn(g, s, f, semantics)?))
        }
        (Ambient::Integers, AmbientSet::Integers(s), AntiFamily::Integers(f)) => {
            Ok(AmbientSet::Integers(anti_local_int(s, f, semantics)?))
        }
        _ => Err(Error::AmbientMismatch("group, set and family must share one ambient".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pwpoly::{PwPolyFn, Rational};
    use crate::ring::{IntegerRing, PwPolyRing};
    use num::BigInt;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn sl(s: &str) -> SemilinearSet {
        s.parse().unwrap()
    }

    fn zfam(members: &[&[i64]]) -> BTreeSet<BTreeSet<i64>> {
        members.iter().map(|m| m.iter().copied().collect()).collect()
    }

    #[test]
    fn integer_anti_ideals() {
        let z = IntegerRing;
        assert!(is_anti_ideal(&z, &ints(&[3, 5]), PairMode::IncludeEqual).unwrap().pass);
        assert!(is_anti_ideal(&z, &ints(&[3, 5, 7]), PairMode::IncludeEqual).unwrap().pass);
        for k in [-9, -1, 1, 2, 17, 1000] {
            assert!(is_anti_ideal(&z, &ints(&[k]), PairMode::IncludeEqual).unwrap().pass, "{k}");
        }
        let v = is_anti_ideal(&z, &ints(&[0]), PairMode::IncludeEqual).unwrap();
        assert_eq!(v.violation.unwrap().condition, AntiCondition::Difference);
        assert!(is_anti_ideal(&z, &ints(&[0]), PairMode::StrictPairs).unwrap().pass);
        // 2 + 3 + 6 = 11
        let v = is_anti_ideal(&z, &ints(&[2, 3, 11]), PairMode::IncludeEqual).unwrap();
        assert_eq!(v.violation.unwrap().condition, AntiCondition::Composite);
    }

    #[test]
    fn zero_excluded() {
        let r = FiniteRing::zn(6).unwrap();
        for fam in enumerate_anti_ideals(&r, 3).unwrap() {
            assert!(!fam.contains(&r.zero_index()));
        }
    }

    #[test]
    fn hinge_pairs() {
        for a in ["1/4", "1/2", "3/4"] {
            let a: Rational = crate::pwpoly::parse_rational(a).unwrap();
            let x = PwPolyFn::hinge_right(&a).unwrap();
            let y = PwPolyFn::hinge_left(&a).unwrap();
            assert!(x.mul(&y).is_zero());
            assert!(is_anti_ideal(&PwPolyRing, &[x, y], PairMode::IncludeEqual).unwrap().pass);
        }
    }

    #[test]
    fn characterization_examples() {
        let p = PowersetRing::numbered(3);
        let fam = |t: &str| parse_powerset_elements(&p, t).unwrap();
        assert!(powerset_char(&p, &fam("{ {1},{2} }")).pass);
        assert!(matches!(
            powerset_char(&p, &fam("{ {1},{1,2} }")).violation,
            Some(CharViolation::ProperSubset { .. })
        ));
        let triangle = fam("{ {1,2},{2,3},{1,3} }");
        assert!(powerset_char(&p, &triangle).pass);
        let v = is_anti_ideal(&p, &triangle, PairMode::IncludeEqual).unwrap();
        assert_eq!(v.violation.unwrap().condition, AntiCondition::Difference);
    }

    #[test]
    fn scan() {
        assert!(equivalence_scan(1, 4, PairMode::IncludeEqual).unwrap().is_empty());
        let records = equivalence_scan(3, 3, PairMode::IncludeEqual).unwrap();
        assert!(records.iter().any(|r| r.family == ["{1,2}", "{1,3}", "{2,3}"]
            || {
                let mut f = r.family.clone();
                f.sort();
                f == ["{1,2}", "{1,3}", "{2,3}"]
            }));
        assert!(records.iter().all(|r| r.family.len() >= 2));
        assert!(equivalence_scan(4, 2, PairMode::IncludeEqual).is_err());
        assert!(equivalence_scan(3, 5, PairMode::IncludeEqual).is_err());
    }

    #[test]
    fn enumeration() {
        let z4 = FiniteRing::zn(4).unwrap();
        let singles: Vec<Vec<usize>> = enumerate_anti_ideals(&z4, 1).unwrap();
        assert_eq!(singles, vec![vec![], vec![1], vec![2], vec![3]]);
        assert_eq!(enumerate_anti_ideals(&z4, 0).unwrap(), vec![Vec::<usize>::new()]);
        let p2 = FiniteRing::powerset(&PowersetRing::over_group(&FiniteGroup::cyclic(2).unwrap())).unwrap();
        assert_eq!(enumerate_anti_ideals(&p2, 1).unwrap(), vec![vec![], vec![1], vec![2], vec![3]]);
        assert!(enumerate_anti_ideals(&z4, 4).is_err());
    }

    #[test]
    fn transport() {
        let z4 = FiniteRing::zn(4).unwrap();
        let t = transport_anti_ideal(&zero_map(&z4), &[1, 3], PairMode::IncludeEqual).unwrap();
        assert_eq!(t.image, ["0"]);
        assert!(!t.verdict.pass && !t.isomorphism);
        let id = build_ring_hom(&z4, &z4, vec![0, 1, 2, 3]).unwrap();
        for fam in enumerate_anti_ideals(&z4, 3).unwrap() {
            assert!(transport_anti_ideal(&id, &fam, PairMode::IncludeEqual).unwrap().verdict.pass);
        }
        let hinge = PwPolyFn::hinge_right(&crate::pwpoly::parse_rational("1/2").unwrap()).unwrap();
        let t = transport_with(&PwPolyRing, &[hinge], |_| PwPolyFn::zero(), false, PairMode::IncludeEqual).unwrap();
        assert!(!t.verdict.pass);
    }

    #[test]
    fn z4_examples() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let fam = |t: &str| Family::new(4, parse_subset_list(&z4, t).unwrap());
        let s = |t: &str| z4.parse_subset(t).unwrap();
        for sem in AntiSemantics::ALL {
            assert!(anti_local_fn(&z4, &s("{1,2}"), &fam("{ {1} }"), sem).unwrap().is_empty(), "{sem}");
        }
        let f = fam("{ {0},{2} }");
        for sem in [AntiSemantics::Stated, AntiSemantics::CyclicGlobalIdentity] {
            assert_eq!(anti_local_fn(&z4, &s("{0}"), &f, sem).unwrap(), z4.full_subset());
            assert!(anti_local_fn(&z4, &s("{0,2}"), &f, sem).unwrap().is_empty());
        }
        assert_eq!(anti_local_fn(&z4, &s("{0,2}"), &f, AntiSemantics::Cyclic).unwrap(), s("{0}"));
    }

    #[test]
    fn integer_examples() {
        let cgi = AntiSemantics::CyclicGlobalIdentity;
        let zero = zfam(&[&[0]]);
        assert_eq!(anti_local_int(&sl("{0,1}"), &zero, cgi).unwrap(), sl("Z\\{-1,0,1}"));
        assert_eq!(anti_local_int(&sl("{0,1}"), &zero, AntiSemantics::Stated).unwrap(), sl("{}"));
        let pair = zfam(&[&[0, 1]]);
        assert!(anti_local_int(&sl("{0}"), &pair, cgi).unwrap().is_empty());
        assert!(anti_local_int(&sl("{1}"), &pair, cgi).unwrap().is_empty());
        assert_eq!(anti_local_int(&sl("{0,1}"), &pair, cgi).unwrap(), sl("{-1,0,1}"));
        assert_eq!(anti_local_int(&sl("{0}"), &zero, cgi).unwrap(), sl("Z"));
        assert!(anti_local_int(&sl("{2}"), &zero, cgi).unwrap().is_empty());
        assert_eq!(anti_local_int(&sl("{0,2}"), &zero, cgi).unwrap(), sl("Z\\{-2,-1,0,1,2}"));
        let two = zfam(&[&[0], &[2]]);
        assert_eq!(anti_local_int(&sl("{0,2}"), &two, cgi).unwrap(), sl("Z\\{-2,-1,0,1,2}"));
        assert_eq!(anti_local_int(&sl("{2}"), &two, cgi).unwrap(), sl("{-2,-1,0,1,2}"));
        assert_eq!(anti_local_int(&sl("{0}"), &zero, AntiSemantics::Stated).unwrap(), sl("Z"));
    }

    fn stated_pointwise(a: &BTreeSet<i64>, family: &BTreeSet<BTreeSet<i64>>, g: i64) -> bool {
        let meet = |d: i64| -> BTreeSet<i64> { a.iter().copied().filter(|x| x % d == 0).collect() };
        let zero: BTreeSet<i64> = a.iter().copied().filter(|&x| x == 0).collect();
        let bound = a.iter().map(|x| x.abs()).max().unwrap_or(0) + 1;
        if !family.contains(a) {
            return false;
        }
        if g == 0 {
            family.contains(&zero) && (1..=bound).all(|d| family.contains(&meet(d)))
        } else {
            (1..=g.abs()).filter(|d| g % d == 0).all(|d| family.contains(&meet(d)))
        }
    }

    #[test]
    fn stated_integer_matches_pointwise() {
        let families = [
            zfam(&[&[0]]),
            zfam(&[&[0], &[0, 2], &[0, 2, 3], &[0, 3]]),
            zfam(&[&[], &[2], &[2, 3], &[3]]),
            zfam(&[&[0, 4, 6], &[0], &[0, 4], &[0, 6]]),
            zfam(&[&[], &[0], &[5], &[0, 5]]),
        ];
        let sets = [&[0][..], &[0, 2], &[0, 2, 3], &[2, 3], &[0, 4, 6], &[5], &[0, 5], &[]];
        for family in &families {
            for a in sets {
                let a: BTreeSet<i64> = a.iter().copied().collect();
                let got = anti_local_int(&SemilinearSet::finite(a.iter().copied()), family, AntiSemantics::Stated).unwrap();
                for g in -80..=80 {
                    assert_eq!(got.contains(g), stated_pointwise(&a, family, g), "A={a:?} fam={family:?} g={g}");
                }
            }
        }
    }

    #[test]
    fn cyclic_integer_matches_pointwise() {
        let families = [zfam(&[&[0]]), zfam(&[&[0, 1]]), zfam(&[&[], &[3]]), zfam(&[&[0], &[2]])];
        let sets = ["{0,1}", "{0,2}", "2Z+1", "{3,4}", "Z", "{}"];
        for family in &families {
            for s in sets {
                let a = sl(s);
                for sem in [AntiSemantics::Cyclic, AntiSemantics::CyclicGlobalIdentity] {
                    let got = anti_local_int(&a, family, sem).unwrap();
                    for g in (-60..=60).chain([9_973, -10_010]) {
                        let h = if g == 0 && sem == AntiSemantics::CyclicGlobalIdentity {
                            SemilinearSet::integers()
                        } else {
                            cyclic_subgroup(g)
                        };
                        assert_eq!(got.contains(g), family_has(family, &h.intersection(&a)), "{s} {sem} {g}");
                    }
                }
            }
        }
    }

    #[test]
    fn monotone_in_family() {
        let k = FiniteGroup::klein4();
        let all: Vec<Subset> = Subset::all(4).collect();
        let small = Family::new(4, [all[1], all[3]]);
        let big = Family::new(4, [all[1], all[3], all[5], all[8]]);
        for a in Subset::all(4) {
            for sem in AntiSemantics::ALL {
                let lo = anti_local_fn(&k, &a, &small, sem).unwrap();
                let hi = anti_local_fn(&k, &a, &big, sem).unwrap();
                assert!(lo.is_subset(&hi));
            }
        }
    }

    #[test]
    fn semantics_parse() {
        for s in AntiSemantics::ALL {
            assert_eq!(s.as_str().parse::<AntiSemantics>().unwrap(), s);
        }
        assert!("global".parse::<AntiSemantics>().is_err());
    }

    #[test]
    fn adapter_dispatch() {
        let r = crate::ring::build_ring("int").unwrap();
        assert!(check_anti_ideal(&r, "{3,5,7}", PairMode::IncludeEqual).unwrap().verdict.pass);
        let p = crate::ring::build_ring("pwpoly").unwrap();
        assert!(check_anti_ideal(&p, "xa:1/2,ya:1/2", PairMode::IncludeEqual).unwrap().verdict.pass);
        let z = crate::ring::build_ring("zn:4").unwrap();
        assert!(matches!(check_anti_ideal(&z, "{5}", PairMode::IncludeEqual), Err(Error::Parse(_))));
    }
}
