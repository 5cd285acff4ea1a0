//! Ideals on the power-set ring `2^G`.
//!
//! An ideal of `(2^G, Δ, ∩)` is the same thing as a family of subsets of
//! `G` that contains `∅`, is closed under subsets and under finite unions.
//! Ideals are always stored as families of subsets of `G`.
//!
//! Finite groups admit explicit families; on `Z` only the named ideals
//! (finite sets, sets avoiding a point, `{∅}`, everything) plus explicit
//! families of finite sets are representable.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{parse_err, Error, Result};
use crate::group::{strip_braces, FiniteGroup, Homomorphism, Subset};
use crate::int_set::SemilinearSet;
use crate::text::split_top_level;

/// Largest `|G|` for which [`enumerate_ideals`] runs.
pub const ENUMERATION_BOUND: usize = 4;

/// A family of subsets of a finite carrier, kept sorted and deduplicated.
#[derive(Clone, Debug)]
pub struct Family {
    order: usize,
    members: Vec<Subset>,
    /// Membership bitset indexed by mask; empty above `DENSE_LOOKUP_ORDER`.
    dense: Vec<u64>,
}

const DENSE_LOOKUP_ORDER: usize = 16;

impl Family {
    pub fn new(order: usize, members: impl IntoIterator<Item = Subset>) -> Self {
        let mut members: Vec<Subset> = members.into_iter().collect();
        members.sort();
        members.dedup();
        let mut dense = Vec::new();
        if order <= DENSE_LOOKUP_ORDER {
            dense = vec![0u64; ((1usize << order) + 63) / 64];
            for m in &members {
                let b = m.bits() as usize;
                dense[b / 64] |= 1 << (b % 64);
            }
        }
        Family { order, members, dense }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &Subset) -> bool {
        if self.order <= DENSE_LOOKUP_ORDER {
            let b = s.bits() as usize;
            self.dense.get(b / 64).is_some_and(|w| w >> (b % 64) & 1 == 1)
        } else {
            self.members.binary_search(s).is_ok()
        }
    }

    pub fn is_subfamily(&self, other: &Family) -> bool {
        self.members.iter().all(|m| other.contains(m))
    }
}

impl PartialEq for Family {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.members == other.members
    }
}

impl Eq for Family {}

impl PartialOrd for Family {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Family {
    /// Family size first, then lexicographic on the sorted members.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members.len().cmp(&other.members.len()).then_with(|| self.members.cmp(&other.members))
    }
}

/// Why a family fails to be an ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "failure", rename_all = "kebab-case")]
pub enum IdealFailure {
    /// `∅` is not a member.
    MissingEmpty,
    /// `subset ⊆ member` but `subset` is not in the family.
    NotHereditary { member: Subset, subset: Subset },
    /// `a ∪ b` is not in the family.
    NotUnionClosed { a: Subset, b: Subset },
}

/// Checks `∅`-membership, heredity and union closure. Heredity is checked
/// on one-element removals, which implies it for all subsets.
pub fn verify_ideal(family: &Family) -> std::result::Result<(), IdealFailure> {
    if !family.contains(&Subset::empty(family.order)) {
        return Err(IdealFailure::MissingEmpty);
    }
    for b in family.members() {
        for x in b.iter() {
            let mut smaller = *b;
            smaller.remove(x);
            if !family.contains(&smaller) {
                return Err(IdealFailure::NotHereditary { member: *b, subset: smaller });
            }
        }
    }
    for (i, a) in family.members().iter().enumerate() {
        for b in &family.members()[i + 1..] {
            if !family.contains(&a.union(b)) {
                return Err(IdealFailure::NotUnionClosed { a: *a, b: *b });
            }
        }
    }
    Ok(())
}

/// Ideals on `2^G` for a finite group `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiniteIdeal {
    /// A verified explicit family.
    Explicit(Family),
    /// `{∅}`.
    EmptyOnly { order: usize },
    /// `{S : e ∉ S}` for a fixed element `e`.
    AvoidsElement { order: usize, element: usize },
    /// All of `2^G` (also what the finiteness ideal is on a finite group).
    All { order: usize },
}

impl FiniteIdeal {
    /// Wraps a family after checking the ideal axioms.
    pub fn explicit(family: Family) -> Result<Self> {
        verify_ideal(&family).map_err(|f| Error::InvalidArgument(format!("family is not an ideal: {f:?}")))?;
        Ok(FiniteIdeal::Explicit(family))
    }

    pub fn order(&self) -> usize {
        match self {
            FiniteIdeal::Explicit(f) => f.order(),
            FiniteIdeal::EmptyOnly { order }
            | FiniteIdeal::AvoidsElement { order, .. }
            | FiniteIdeal::All { order } => *order,
        }
    }

    pub fn contains(&self, s: &Subset) -> bool {
        match self {
            FiniteIdeal::Explicit(f) => f.contains(s),
            FiniteIdeal::EmptyOnly { .. } => s.is_empty(),
            FiniteIdeal::AvoidsElement { element, .. } => !s.contains(*element),
            FiniteIdeal::All { .. } => true,
        }
    }

    /// Materializes the family. Every ideal on a finite set is `2^U` for
    /// `U` the union of its members, so this is a scan of `2^G`.
    pub fn to_family(&self) -> Family {
        match self {
            FiniteIdeal::Explicit(f) => f.clone(),
            _ => Family::new(self.order(), Subset::all(self.order()).filter(|s| self.contains(s))),
        }
    }

    /// `self ⊆ other` as families.
    pub fn is_subideal(&self, other: &FiniteIdeal) -> bool {
        self.to_family().members().iter().all(|s| other.contains(s))
    }
}

/// Smallest ideal containing the generators. Closing under unions and then
/// subsets gives `2^U` for `U` the union of the generators.
pub fn generate_ideal(order: usize, generators: &[Subset]) -> FiniteIdeal {
    let top = generators.iter().fold(Subset::empty(order), |acc, g| acc.union(g));
    FiniteIdeal::Explicit(Family::new(order, top.subsets()))
}

/// `f(I) = {f(S) : S ∈ I}` as an ideal on the codomain.
pub fn image_ideal(f: &Homomorphism<'_>, ideal: &FiniteIdeal) -> FiniteIdeal {
    let members = ideal.to_family().members().iter().map(|s| f.image_subset(s)).collect::<Vec<_>>();
    FiniteIdeal::Explicit(Family::new(f.codomain().order(), members))
}

/// Every ideal on `2^G` for `|G| <= 4`, ordered by family size then members.
///
/// Searches downward-closed families, adding a subset only once all of its
/// one-element removals are present, then keeps the union-closed ones.
pub fn enumerate_ideals(order: usize) -> Result<Vec<FiniteIdeal>> {
    if order > ENUMERATION_BOUND {
        return Err(Error::BoundExceeded { what: "ideal enumeration order", limit: ENUMERATION_BOUND, got: order });
    }
    let mut candidates: Vec<Subset> = Subset::all(order).filter(|s| !s.is_empty()).collect();
    candidates.sort();
    let mut out = Vec::new();
    let mut chosen: Vec<Subset> = vec![Subset::empty(order)];
    search_downsets(order, &candidates, 0, &mut chosen, &mut out);
    out.sort();
    Ok(out.into_iter().map(FiniteIdeal::Explicit).collect())
}

fn search_downsets(order: usize, candidates: &[Subset], next: usize, chosen: &mut Vec<Subset>, out: &mut Vec<Family>) {
    if next == candidates.len() {
        let fam = Family::new(order, chosen.iter().copied());
        if verify_ideal(&fam).is_ok() {
            out.push(fam);
        }
        return;
    }
    let s = candidates[next];
    search_downsets(order, candidates, next + 1, chosen, out);
    // candidates are sorted by size, so all one-element removals of s were decided already
    let hereditary_ok = s.iter().all(|x| {
        let mut t = s;
        t.remove(x);
        chosen.contains(&t)
    });
    if hereditary_ok {
        chosen.push(s);
        search_downsets(order, candidates, next + 1, chosen, out);
        chosen.pop();
    }
}

/// Ideals on `2^Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntIdeal {
    /// `{∅}`.
    EmptyOnly,
    /// All finite subsets.
    Finite,
    /// `{S : a ∉ S}`.
    AvoidsElement(i64),
    /// All subsets.
    All,
    /// Finite subsets of a fixed set; image of the finiteness ideal under
    /// `n -> kn` is "finite subsets of `kZ`".
    FiniteWithin(SemilinearSet),
    /// A verified explicit family of finite sets.
    Explicit(BTreeSet<BTreeSet<i64>>),
}

impl IntIdeal {
    pub fn explicit(members: impl IntoIterator<Item = BTreeSet<i64>>) -> Result<Self> {
        let fam: BTreeSet<BTreeSet<i64>> = members.into_iter().collect();
        if !fam.contains(&BTreeSet::new()) {
            return Err(Error::InvalidArgument("family is not an ideal: missing the empty set".into()));
        }
        for b in &fam {
            for x in b {
                let mut smaller = b.clone();
                smaller.remove(x);
                if !fam.contains(&smaller) {
                    return Err(Error::InvalidArgument(format!("family is not an ideal: not hereditary at {b:?}")));
                }
            }
        }
        for a in &fam {
            for b in &fam {
                if !fam.contains(&a.union(b).copied().collect()) {
                    return Err(Error::InvalidArgument(format!(
                        "family is not an ideal: {a:?} ∪ {b:?} missing"
                    )));
                }
            }
        }
        Ok(IntIdeal::Explicit(fam))
    }

    pub fn contains(&self, s: &SemilinearSet) -> bool {
        match self {
            IntIdeal::EmptyOnly => s.is_empty(),
            IntIdeal::Finite => s.is_finite(),
            IntIdeal::AvoidsElement(a) => !s.contains(*a),
            IntIdeal::All => true,
            IntIdeal::FiniteWithin(u) => s.is_finite() && s.is_subset(u),
            IntIdeal::Explicit(fam) => s.elements().is_some_and(|xs| fam.contains(xs)),
        }
    }

    /// Largest magnitude of any integer the membership test depends on,
    /// apart from periodic structure.
    pub fn constant_bound(&self) -> i64 {
        match self {
            IntIdeal::AvoidsElement(a) => a.abs(),
            IntIdeal::FiniteWithin(u) => u.exception_bound(),
            IntIdeal::Explicit(fam) => fam.iter().flatten().map(|x| x.abs()).max().unwrap_or(0),
            _ => 0,
        }
    }

    /// Image of the ideal under `n -> kn`.
    pub fn scale(&self, k: i64) -> Result<IntIdeal> {
        match self {
            IntIdeal::EmptyOnly => Ok(IntIdeal::EmptyOnly),
            IntIdeal::Finite if k == 0 => IntIdeal::explicit([BTreeSet::new(), BTreeSet::from([0])]),
            IntIdeal::Finite => Ok(IntIdeal::FiniteWithin(SemilinearSet::class(0, k.unsigned_abs())?)),
            IntIdeal::Explicit(fam) => {
                IntIdeal::explicit(fam.iter().map(|s| s.iter().map(|x| k * x).collect()))
            }
            other => Err(Error::Unsupported(format!("image of the ideal {other} under n -> {k}n"))),
        }
    }
}

impl fmt::Display for IntIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntIdeal::EmptyOnly => write!(f, "empty"),
            IntIdeal::Finite => write!(f, "fin"),
            IntIdeal::AvoidsElement(a) => write!(f, "avoid:{a}"),
            IntIdeal::All => write!(f, "all"),
            IntIdeal::FiniteWithin(u) => write!(f, "fin-within:{u}"),
            IntIdeal::Explicit(fam) => {
                let items: Vec<String> = fam
                    .iter()
                    .map(|s| format!("{{{}}}", s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
                    .collect();
                write!(f, "fam:{{{}}}", items.join(","))
            }
        }
    }
}

/// An ideal on either ambient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetIdeal {
    Finite(FiniteIdeal),
    Integers(IntIdeal),
}

/// A subset of either ambient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AmbientSet {
    Finite(Subset),
    Integers(SemilinearSet),
}

/// The group an ideal or set lives over.
#[derive(Clone, Debug)]
pub enum Ambient {
    Finite(FiniteGroup),
    Integers,
}

impl Ambient {
    /// `Z` or a group spec.
    pub fn parse(spec: &str) -> Result<Self> {
        match spec.trim() {
            "Z" | "int" | "integers" => Ok(Ambient::Integers),
            other => Ok(Ambient::Finite(crate::group::build_group(other)?)),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Ambient::Finite(g) => g.name().to_string(),
            Ambient::Integers => "Z".to_string(),
        }
    }

    pub fn parse_set(&self, text: &str) -> Result<AmbientSet> {
        match self {
            Ambient::Finite(g) => Ok(AmbientSet::Finite(g.parse_subset(text)?)),
            Ambient::Integers => Ok(AmbientSet::Integers(text.parse()?)),
        }
    }

    pub fn format_set(&self, s: &AmbientSet) -> String {
        match (self, s) {
            (Ambient::Finite(g), AmbientSet::Finite(s)) => g.format_subset(s),
            (_, AmbientSet::Integers(s)) => s.to_string(),
            (Ambient::Integers, AmbientSet::Finite(s)) => format!("{:?}", s.iter().collect::<Vec<_>>()),
        }
    }

    /// Ideal literals: `fin`, `avoid:e`, `empty`, `all`,
    /// `fam:{ {},{c},{e},{e,c} }`, `gen:{ {e,c} }`.
    pub fn parse_ideal(&self, text: &str) -> Result<SetIdeal> {
        let t = text.trim();
        match self {
            Ambient::Finite(g) => {
                let order = g.order();
                let ideal = match t {
                    "fin" | "all" => FiniteIdeal::All { order },
                    "empty" => FiniteIdeal::EmptyOnly { order },
                    _ => {
                        if let Some(e) = t.strip_prefix("avoid:") {
                            FiniteIdeal::AvoidsElement { order, element: g.element(e)? }
                        } else if let Some(body) = t.strip_prefix("fam:") {
                            FiniteIdeal::explicit(Family::new(order, parse_subset_list(g, body)?))?
                        } else if let Some(body) = t.strip_prefix("gen:") {
                            generate_ideal(order, &parse_subset_list(g, body)?)
                        } else {
                            return Err(parse_err(format!("unknown ideal literal `{t}`")));
                        }
                    }
                };
                Ok(SetIdeal::Finite(ideal))
            }
            Ambient::Integers => {
                let ideal = match t {
                    "fin" => IntIdeal::Finite,
                    "all" => IntIdeal::All,
                    "empty" => IntIdeal::EmptyOnly,
                    _ => {
                        if let Some(a) = t.strip_prefix("avoid:") {
                            IntIdeal::AvoidsElement(
                                a.trim().parse().map_err(|_| parse_err(format!("bad integer `{a}`")))?,
                            )
                        } else if let Some(body) = t.strip_prefix("fam:") {
                            IntIdeal::explicit(parse_int_family(body)?)?
                        } else if let Some(body) = t.strip_prefix("gen:") {
                            let gens = parse_int_family(body)?;
                            IntIdeal::explicit(generate_int_family(&gens))?
                        } else {
                            return Err(parse_err(format!("unknown ideal literal `{t}`")));
                        }
                    }
                };
                Ok(SetIdeal::Integers(ideal))
            }
        }
    }
}

fn generate_int_family(gens: &[BTreeSet<i64>]) -> BTreeSet<BTreeSet<i64>> {
    // on Z the generated ideal of finitely many finite sets is 2^(union)
    let universe: Vec<i64> = gens.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();
    (0..1u64 << universe.len())
        .map(|mask| universe.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect())
        .collect()
}

/// Parses `{ {a,b},{c},{} }` into subsets of `g`.
pub fn parse_subset_list(g: &FiniteGroup, text: &str) -> Result<Vec<Subset>> {
    split_top_level(strip_braces(text)?, ',').into_iter().map(|item| g.parse_subset(item)).collect()
}

/// Parses `{ {0,1},{3} }` into finite integer sets.
pub fn parse_int_family(text: &str) -> Result<Vec<BTreeSet<i64>>> {
    split_top_level(strip_braces(text)?, ',')
        .into_iter()
        .map(|item| {
            strip_braces(item)?
                .split(',')
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<i64>().map_err(|_| parse_err(format!("bad integer `{x}`"))))
                .collect()
        })
        .collect()
}

/// Short form of a finite ideal: `empty`, `all`, `avoid:x` or the member list.
pub fn format_ideal(g: &FiniteGroup, ideal: &FiniteIdeal) -> String {
    match ideal {
        FiniteIdeal::EmptyOnly { .. } => "empty".into(),
        FiniteIdeal::All { .. } => "all".into(),
        FiniteIdeal::AvoidsElement { element, .. } => format!("avoid:{}", g.label(*element)),
        FiniteIdeal::Explicit(f) => {
            let items: Vec<String> = f.members().iter().map(|s| g.format_subset(s)).collect();
            format!("{{{}}}", items.join(","))
        }
    }
}

/// Membership test across ambients.
pub fn ideal_contains(ideal: &SetIdeal, s: &AmbientSet) -> Result<bool> {
    match (ideal, s) {
        (SetIdeal::Finite(i), AmbientSet::Finite(s)) if i.order() == s.order() => Ok(i.contains(s)),
        (SetIdeal::Integers(i), AmbientSet::Integers(s)) => Ok(i.contains(s)),
        _ => Err(Error::AmbientMismatch("ideal and set live over different groups".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> FiniteGroup {
        FiniteGroup::klein4()
    }

    fn fam(g: &FiniteGroup, text: &str) -> Family {
        Family::new(g.order(), parse_subset_list(g, text).unwrap())
    }

    #[test]
    fn verify_examples() {
        let g = k4();
        assert_eq!(verify_ideal(&fam(&g, "{ {},{c},{e},{e,c} }")), Ok(()));
        assert!(matches!(
            verify_ideal(&fam(&g, "{ {},{e},{c} }")),
            Err(IdealFailure::NotUnionClosed { .. })
        ));
        assert_eq!(verify_ideal(&fam(&g, "{ {e} }")), Err(IdealFailure::MissingEmpty));
        assert!(matches!(
            verify_ideal(&fam(&g, "{ {},{e,c} }")),
            Err(IdealFailure::NotHereditary { .. })
        ));
    }

    #[test]
    fn generation() {
        let g = k4();
        let i = generate_ideal(4, &parse_subset_list(&g, "{ {e,c} }").unwrap());
        assert_eq!(i.to_family(), fam(&g, "{ {},{e},{c},{e,c} }"));
        assert_eq!(generate_ideal(4, &[]).to_family(), fam(&g, "{ {} }"));
        assert_eq!(generate_ideal(4, &[g.full_subset()]).to_family().len(), 16);
        let ii = generate_ideal(4, i.to_family().members());
        assert_eq!(ii, i);
    }

    #[test]
    fn membership() {
        let g = k4();
        let avoid = FiniteIdeal::AvoidsElement { order: 4, element: g.identity() };
        assert!(avoid.contains(&g.parse_subset("{a,b}").unwrap()));
        assert!(!avoid.contains(&g.parse_subset("{e,a}").unwrap()));
        assert!(!IntIdeal::Finite.contains(&"2Z".parse().unwrap()));
        assert!(IntIdeal::Finite.contains(&"{0,1}".parse().unwrap()));
        assert!(IntIdeal::EmptyOnly.contains(&"{}".parse().unwrap()));
        let mixed = ideal_contains(&SetIdeal::Integers(IntIdeal::Finite), &AmbientSet::Finite(g.empty_subset()));
        assert!(matches!(mixed, Err(Error::AmbientMismatch(_))));
    }

    #[test]
    fn images() {
        let g = k4();
        let trivial = Homomorphism::new(&g, &g, vec![0; 4]).unwrap();
        for i in enumerate_ideals(4).unwrap() {
            let img = image_ideal(&trivial, &i).to_family();
            assert!(img == fam(&g, "{ {} }") || img == fam(&g, "{ {},{e} }"));
            assert_eq!(image_ideal(&Homomorphism::identity(&g), &i).to_family(), i.to_family());
        }
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let double = Homomorphism::new(&z4, &z4, vec![0, 2, 0, 2]).unwrap();
        let i = generate_ideal(4, &[z4.parse_subset("{1}").unwrap()]);
        assert_eq!(image_ideal(&double, &i).to_family(), fam(&z4, "{ {},{2} }"));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_ideals(1).unwrap().len(), 2);
        let two = enumerate_ideals(2).unwrap();
        assert_eq!(two.len(), 4);
        assert_eq!(two[0].to_family().len(), 1);
        assert!(matches!(enumerate_ideals(5), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn integer_literals() {
        let z = Ambient::Integers;
        assert_eq!(z.parse_ideal("fin").unwrap(), SetIdeal::Integers(IntIdeal::Finite));
        assert_eq!(z.parse_ideal("avoid:0").unwrap(), SetIdeal::Integers(IntIdeal::AvoidsElement(0)));
        let SetIdeal::Integers(i) = z.parse_ideal("gen:{ {0,1} }").unwrap() else { panic!() };
        assert!(i.contains(&"{1}".parse().unwrap()));
        assert!(!i.contains(&"{2}".parse().unwrap()));
        assert!(z.parse_ideal("fam:{ {0} }").is_err());
        assert_eq!(IntIdeal::Finite.scale(2).unwrap().to_string(), "fin-within:2Z");
    }

    #[test]
    fn finite_literals() {
        let k = Ambient::Finite(k4());
        let SetIdeal::Finite(i) = k.parse_ideal("fam:{ {},{c},{e},{e,c} }").unwrap() else { panic!() };
        assert_eq!(i.to_family().len(), 4);
        assert!(k.parse_ideal("fam:{ {},{e},{c} }").is_err());
        assert!(k.parse_ideal("avoid:z").is_err());
        assert!(k.parse_ideal("whatever").is_err());
    }
}
