//! The closure operator `ζ(A) = A ∪ A^∝` and the topology whose closed
//! sets are its fixed points.

use serde::Serialize;

use crate::group::{FiniteGroup, Subset};
use crate::ideal::{FiniteIdeal, IntIdeal};
use crate::int_set::SemilinearSet;
use crate::local::{local_fn, local_fn_int};

pub fn closure(g: &FiniteGroup, a: &Subset, ideal: &FiniteIdeal) -> Subset {
    a.union(&local_fn(g, a, ideal))
}

pub fn closure_int(a: &SemilinearSet, ideal: &IntIdeal) -> SemilinearSet {
    a.union(&local_fn_int(a, ideal))
}

/// A violated closure axiom with its witness sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "kebab-case")]
pub enum KuratowskiViolation {
    EmptyNotFixed { closure: Subset },
    NotExtensive { a: Subset, closure: Subset },
    NotIdempotent { a: Subset, closure: Subset, closure_twice: Subset },
    NotAdditive { a: Subset, b: Subset },
}

/// Checks `ζ(∅) = ∅`, `A ⊆ ζ(A)`, `ζζA = ζA` and `ζ(A∪B) = ζA ∪ ζB` over
/// every pair of subsets. Returns every violation found.
pub fn verify_kuratowski(g: &FiniteGroup, ideal: &FiniteIdeal) -> Vec<KuratowskiViolation> {
    let n = g.order();
    let zeta: Vec<Subset> = Subset::all(n).map(|a| closure(g, &a, ideal)).collect();
    let at = |s: &Subset| zeta[s.bits() as usize];
    let mut out = Vec::new();
    let empty = Subset::empty(n);
    if !at(&empty).is_empty() {
        out.push(KuratowskiViolation::EmptyNotFixed { closure: at(&empty) });
    }
    for a in Subset::all(n) {
        let za = at(&a);
        if !a.is_subset(&za) {
            out.push(KuratowskiViolation::NotExtensive { a, closure: za });
        }
        if at(&za) != za {
            out.push(KuratowskiViolation::NotIdempotent { a, closure: za, closure_twice: at(&za) });
        }
        for b in Subset::all(n).filter(|b| b.bits() > a.bits()) {
            if at(&a.union(&b)) != za.union(&at(&b)) {
                out.push(KuratowskiViolation::NotAdditive { a, b });
            }
        }
    }
    out
}

/// A family of open sets on a finite carrier, sorted by size then mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Topology {
    order: usize,
    opens: Vec<Subset>,
}

impl Topology {
    /// Wraps a family without checking it; see [`verify_topology`].
    pub fn from_opens(order: usize, opens: impl IntoIterator<Item = Subset>) -> Self {
        let mut opens: Vec<Subset> = opens.into_iter().collect();
        opens.sort();
        opens.dedup();
        Topology { order, opens }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn opens(&self) -> &[Subset] {
        &self.opens
    }

    pub fn is_open(&self, s: &Subset) -> bool {
        self.opens.binary_search(s).is_ok()
    }

    pub fn is_discrete(&self) -> bool {
        self.order < 64 && self.opens.len() == 1usize << self.order
    }
}

/// Opens are the complements of `ζ`-fixed sets.
pub fn topology_from_ideal(g: &FiniteGroup, ideal: &FiniteIdeal) -> Topology {
    let opens = Subset::all(g.order()).filter(|h| {
        let c = h.complement();
        closure(g, &c, ideal) == c
    });
    Topology::from_opens(g.order(), opens)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "failure", rename_all = "kebab-case")]
pub enum TopologyFailure {
    MissingEmpty,
    MissingWhole,
    NotUnionClosed { a: Subset, b: Subset },
    NotIntersectionClosed { a: Subset, b: Subset },
}

/// Pairwise closure suffices on a finite carrier.
pub fn verify_topology(t: &Topology) -> std::result::Result<(), TopologyFailure> {
    if !t.is_open(&Subset::empty(t.order)) {
        return Err(TopologyFailure::MissingEmpty);
    }
    if !t.is_open(&Subset::full(t.order)) {
        return Err(TopologyFailure::MissingWhole);
    }
    for (i, a) in t.opens.iter().enumerate() {
        for b in &t.opens[i + 1..] {
            if !t.is_open(&a.union(b)) {
                return Err(TopologyFailure::NotUnionClosed { a: *a, b: *b });
            }
            if !t.is_open(&a.intersection(b)) {
                return Err(TopologyFailure::NotIntersectionClosed { a: *a, b: *b });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{enumerate_ideals, parse_subset_list, Family};

    #[test]
    fn closure_examples() {
        let k = FiniteGroup::klein4();
        let i = FiniteIdeal::explicit(Family::new(4, parse_subset_list(&k, "{ {},{c},{e},{e,c} }").unwrap())).unwrap();
        assert!(closure(&k, &k.empty_subset(), &i).is_empty());
        let a = k.parse_subset("{e,a}").unwrap();
        assert_eq!(closure(&k, &a, &i), a);

        let z2 = FiniteGroup::cyclic(2).unwrap();
        let x = z2.parse_subset("{1}").unwrap();
        assert_eq!(closure(&z2, &x, &FiniteIdeal::EmptyOnly { order: 2 }), x);
    }

    #[test]
    fn kuratowski_small() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert!(verify_kuratowski(&z2, &FiniteIdeal::EmptyOnly { order: 2 }).is_empty());
        let k = FiniteGroup::klein4();
        assert!(verify_kuratowski(&k, &FiniteIdeal::All { order: 4 }).is_empty());
        for i in enumerate_ideals(4).unwrap() {
            assert!(verify_kuratowski(&k, &i).is_empty());
        }
    }

    #[test]
    fn z2_topology() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let t = topology_from_ideal(&z2, &FiniteIdeal::EmptyOnly { order: 2 });
        let expected: Vec<Subset> = ["{}", "{0}", "{0,1}"].iter().map(|s| z2.parse_subset(s).unwrap()).collect();
        assert_eq!(t.opens(), expected);
        assert_eq!(verify_topology(&t), Ok(()));
    }

    #[test]
    fn discrete_when_everything_is_small() {
        for spec in ["cyclic:3", "klein4", "sym:3"] {
            let g = crate::group::build_group(spec).unwrap();
            let t = topology_from_ideal(&g, &FiniteIdeal::All { order: g.order() });
            assert!(t.is_discrete(), "{spec}");
        }
    }

    #[test]
    fn klein_topology_contains_trivial_opens() {
        let k = FiniteGroup::klein4();
        let i = FiniteIdeal::explicit(Family::new(4, parse_subset_list(&k, "{ {},{c},{e},{e,c} }").unwrap())).unwrap();
        let t = topology_from_ideal(&k, &i);
        assert!(t.is_open(&k.empty_subset()) && t.is_open(&k.full_subset()));
        assert_eq!(verify_topology(&t), Ok(()));
    }

    #[test]
    fn topology_verdicts() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let s = |t: &str| z2.parse_subset(t).unwrap();
        assert_eq!(verify_topology(&Topology::from_opens(2, [s("{}"), s("{0,1}")])), Ok(()));
        assert_eq!(verify_topology(&Topology::from_opens(2, [s("{}"), s("{0}"), s("{0,1}")])), Ok(()));
        assert_eq!(
            verify_topology(&Topology::from_opens(2, [s("{}"), s("{0}"), s("{1}")])),
            Err(TopologyFailure::MissingWhole)
        );
        let k = FiniteGroup::klein4();
        let p = |t: &str| k.parse_subset(t).unwrap();
        let broken = Topology::from_opens(4, [p("{}"), p("{e}"), p("{a}"), p("{e,a,b,c}")]);
        assert!(matches!(verify_topology(&broken), Err(TopologyFailure::NotUnionClosed { .. })));
    }
}
