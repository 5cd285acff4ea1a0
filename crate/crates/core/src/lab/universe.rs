use std::sync::{Arc, Mutex};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Bounds;
use crate::anti::{enumerate_anti_ideals, AntiSemantics};
use crate::group::{FiniteGroup, Subset};
use crate::ideal::{enumerate_ideals, generate_ideal, Family, FiniteIdeal};
use crate::ring::{FiniteRing, PowersetRing};

/// Cyclic groups of every order up to the bound, then K4 and S3 when they fit.
pub fn test_groups(max_order: usize) -> Vec<FiniteGroup> {
    let mut out: Vec<FiniteGroup> = (1..=max_order).map(|n| FiniteGroup::cyclic(n).expect("positive order")).collect();
    if max_order >= 4 {
        out.push(FiniteGroup::klein4());
    }
    if max_order >= 6 {
        out.push(FiniteGroup::symmetric(3).expect("S3"));
    }
    out
}

/// All ideals for small groups. Larger groups get `{∅}`, the ideal of sets
/// avoiding `e`, `2^G`, and the distinct ideals among `ideal_samples` draws
/// generated from random subsets, drawn from a stream seeded by the bound
/// seed and the group.
pub fn test_ideals(g: &FiniteGroup, bounds: &Bounds) -> Vec<FiniteIdeal> {
    let n = g.order();
    if n <= bounds.full_ideal_order {
        return enumerate_ideals(n).expect("within enumeration bound");
    }
    let mut out = vec![
        FiniteIdeal::EmptyOnly { order: n },
        FiniteIdeal::AvoidsElement { order: n, element: g.identity() },
        FiniteIdeal::All { order: n },
    ];
    let tag = g.name().bytes().fold(n as u64, |h, b| h.wrapping_mul(31).wrapping_add(b as u64));
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed ^ tag);
    let mask = (1u64 << n) - 1;
    for _ in 0..bounds.ideal_samples {
        let k = rng.gen_range(1..=3);
        let gens: Vec<Subset> = (0..k).map(|_| Subset::from_bits(n, rng.gen::<u64>() & mask)).collect();
        let ideal = generate_ideal(n, &gens);
        if !out.iter().any(|o| o.to_family() == ideal.to_family()) {
            out.push(ideal);
        }
    }
    out
}

/// One-slot memo keyed by the bounds of the current run.
pub(crate) type Memo<T> = Mutex<Option<(Bounds, Arc<T>)>>;

pub(crate) fn memoized<T>(memo: &Memo<T>, bounds: &Bounds, build: impl FnOnce(&Bounds) -> T) -> Arc<T> {
    let mut slot = memo.lock().unwrap_or_else(|e| e.into_inner());
    if let Some((cached, value)) = slot.as_ref() {
        if cached == bounds {
            return Arc::clone(value);
        }
    }
    let value = Arc::new(build(bounds));
    *slot = Some((bounds.clone(), Arc::clone(&value)));
    value
}

/// `Z/nZ` for `n ≤ ring_order` and the power-set rings on 1..3 points.
pub fn test_rings(ring_order: usize) -> Vec<FiniteRing> {
    let mut out: Vec<FiniteRing> = (1..=ring_order).map(|n| FiniteRing::zn(n).expect("positive order")).collect();
    if ring_order > 0 {
        for n in 1..=3 {
            out.push(FiniteRing::powerset(&PowersetRing::numbered(n)).expect("small carrier"));
        }
    }
    out
}

/// Per-group tables for the anti-local sweeps: every anti-ideal of `2^G`
/// up to the size bound, and `A^{a∝}` for every semantics, family and `A`.
pub(crate) struct AntiUniverse {
    pub group: FiniteGroup,
    pub families: Vec<Family>,
    /// `tables[s][f][A.bits]` under `AntiSemantics::ALL[s]`.
    pub tables: Vec<Vec<Vec<Subset>>>,
}

impl AntiUniverse {
    pub fn table(&self, s: usize, f: usize, a: &Subset) -> Subset {
        self.tables[s][f][a.bits() as usize]
    }
}

pub(crate) fn anti_universes(bounds: &Bounds) -> Arc<Vec<AntiUniverse>> {
    static MEMO: Memo<Vec<AntiUniverse>> = Mutex::new(None);
    memoized(&MEMO, bounds, build_anti_universes)
}

fn build_anti_universes(bounds: &Bounds) -> Vec<AntiUniverse> {
    test_groups(bounds.max_order.min(bounds.anti_group_order))
        .into_iter()
        .map(|g| {
            let n = g.order();
            let ring = FiniteRing::powerset(&PowersetRing::over_group(&g)).expect("small carrier");
            let families: Vec<Family> = enumerate_anti_ideals(&ring, bounds.anti_family)
                .expect("within size bound")
                .into_iter()
                .map(|masks| Family::new(n, masks.into_iter().map(|m| Subset::from_bits(n, m as u64))))
                .collect();
            let tables = AntiSemantics::ALL
                .iter()
                .map(|&sem| {
                    families
                        .iter()
                        .map(|f| {
                            Subset::all(n)
                                .map(|a| crate::anti::anti_local_fn(&g, &a, f, sem).expect("small group"))
                                .collect()
                        })
                        .collect()
                })
                .collect();
            AntiUniverse { group: g, families, tables }
        })
        .collect()
}

pub(crate) fn format_family(g: &FiniteGroup, f: &Family) -> String {
    let items: Vec<String> = f.members().iter().map(|s| g.format_subset(s)).collect();
    format!("{{{}}}", items.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_shapes() {
        let names: Vec<String> = test_groups(6).iter().map(|g| g.name().to_string()).collect();
        assert_eq!(names.len(), 8);
        assert!(test_groups(2).iter().all(|g| g.order() <= 2));
        let b = Bounds::default();
        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(test_ideals(&z4, &b).len(), 16);
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let sampled = test_ideals(&z6, &b);
        assert!(sampled.len() <= 64);
        let mut fams: Vec<Family> = sampled.iter().map(|i| i.to_family()).collect();
        fams.sort();
        fams.dedup();
        assert_eq!(fams.len(), sampled.len());
        assert_eq!(sampled, test_ideals(&z6, &b));
        assert_eq!(test_rings(6).len(), 9);
    }
}
