use super::universe::{memoized, test_groups, test_ideals, Memo};
use super::{Bounds, Tally};
use std::sync::{Arc, Mutex};

use num::integer::gcd;

use crate::error::Result;
use crate::group::{homomorphisms, FiniteGroup, Homomorphism, Subset};
use crate::ideal::{format_ideal, image_ideal, verify_ideal, Family, FiniteIdeal, IntIdeal};
use crate::int_set::SemilinearSet;
use crate::local::{local_fn, local_fn_image_data_int, local_fn_int, local_fn_oracle, Inclusion};
use crate::topology::{topology_from_ideal, verify_kuratowski, verify_topology};

/// A test ideal with `A^∝` tabulated by subset mask.
struct Tabulated {
    ideal: FiniteIdeal,
    family: Family,
    local: Vec<Subset>,
}

impl Tabulated {
    fn at(&self, a: &Subset) -> Subset {
        self.local[a.bits() as usize]
    }
}

struct Context {
    group: FiniteGroup,
    ideals: Vec<Tabulated>,
}

impl Context {
    fn describe(&self, t: &Tabulated) -> String {
        format!("G={} I={}", self.group.name(), format_ideal(&self.group, &t.ideal))
    }

    fn set(&self, a: &Subset) -> String {
        self.group.format_subset(a)
    }

    fn subsets(&self) -> impl Iterator<Item = Subset> {
        Subset::all(self.group.order())
    }
}

/// Built once per bounds value and shared by every claim in a run.
fn contexts(bounds: &Bounds) -> Arc<Vec<Context>> {
    static MEMO: Memo<Vec<Context>> = Mutex::new(None);
    memoized(&MEMO, bounds, build_contexts)
}

fn build_contexts(bounds: &Bounds) -> Vec<Context> {
    test_groups(bounds.max_order)
        .into_iter()
        .map(|g| {
            let ideals = test_ideals(&g, bounds)
                .into_iter()
                .map(|ideal| {
                    let local = Subset::all(g.order()).map(|a| local_fn(&g, &a, &ideal)).collect();
                    Tabulated { family: ideal.to_family(), ideal, local }
                })
                .collect();
            Context { group: g, ideals }
        })
        .collect()
}

fn sl(text: &str) -> SemilinearSet {
    text.parse().expect("curated literal")
}

fn compare(t: &mut Tally, instance: &str, what: &str, got: &SemilinearSet, want: &SemilinearSet) {
    t.check(got == want, || instance.to_string(), || format!("{what}: got {got}, expected {want}"));
}

pub(super) fn ring_ideal_equivalence(b: &Bounds, t: &mut Tally) -> Result<()> {
    for n in 1..=b.max_order.min(3) {
        let all: Vec<Subset> = Subset::all(n).collect();
        for mask in 0u64..1 << all.len() {
            let members: Vec<Subset> = all.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, s)| *s).collect();
            let family = Family::new(n, members.iter().copied());
            let kuratowski = verify_ideal(&family).is_ok();
            let ring = !members.is_empty()
                && members.iter().all(|a| {
                    members.iter().all(|c| family.contains(&a.symmetric_difference(c)))
                        && all.iter().all(|s| family.contains(&a.intersection(s)))
                });
            t.check(
                kuratowski == ring,
                || format!("carrier size {n}, family mask {mask:#x}"),
                || format!("Kuratowski ideal: {kuratowski}, ring ideal: {ring}"),
            );
        }
    }
    Ok(())
}

pub(super) fn example_klein(_: &Bounds, t: &mut Tally) -> Result<()> {
    let k = FiniteGroup::klein4();
    let ideal = FiniteIdeal::explicit(Family::new(4, crate::ideal::parse_subset_list(&k, "{ {},{c},{e},{e,c} }")?))?;
    let a = k.parse_subset("{e,a}")?;
    let local = local_fn(&k, &a, &ideal);
    let inst = || "K4, I={{},{c},{e},{e,c}}, A={e,a}".to_string();
    t.check(local.contains(k.element("a")?), inst, || "a ∉ A^∝".into());
    t.check(!local.contains(k.identity()), inst, || "e ∈ A^∝".into());
    t.check(local == k.parse_subset("{a}")?, inst, || format!("A^∝ = {}", k.format_subset(&local)));
    t.check(local_fn_oracle(&k, &a, &ideal)? == local, inst, || "oracle disagrees".into());
    t.check(k.is_subgroup(&a) && !k.is_subgroup(&local), inst, || "subgroup status differs".into());
    Ok(())
}

pub(super) fn example_evens(_: &Bounds, t: &mut Tally) -> Result<()> {
    let local = local_fn_int(&sl("2Z"), &IntIdeal::Finite);
    compare(t, "Z, I_fin, A=2Z", "A^∝", &local, &sl("Z\\{0}"));
    t.check(!local.contains(0), || "Z, I_fin, A=2Z".into(), || "A^∝ contains 0".into());
    Ok(())
}

pub(super) fn example_finite(_: &Bounds, t: &mut Tally) -> Result<()> {
    let window: Vec<i64> = (-4..=4).collect();
    let (mut small, mut small_empty) = (0, 0);
    for mask in 1u32..1 << window.len() {
        let a = SemilinearSet::finite(window.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x));
        let local = local_fn_int(&a, &IntIdeal::Finite);
        if mask.count_ones() > 2 {
            t.check(local.is_empty(), || format!("Z, I_fin, A={a}"), || format!("A^∝ = {local}"));
        } else {
            small += 1;
            small_empty += local.is_empty() as usize;
        }
    }
    for text in ["{-7,3,12}", "{0,5,10,100}", "{-1000,0,1000}"] {
        let a = sl(text);
        compare(t, &format!("Z, I_fin, A={a}"), "A^∝", &local_fn_int(&a, &IntIdeal::Finite), &SemilinearSet::empty());
    }
    t.note(format!("sets with |A| ≤ 2 (checked separately): {small_empty} of {small} have A^∝ = ∅"));
    Ok(())
}

pub(super) fn cyclic_criterion(b: &Bounds, t: &mut Tally) -> Result<()> {
    for c in contexts(b).iter() {
        for ti in &c.ideals {
            for a in c.subsets() {
                let oracle = local_fn_oracle(&c.group, &a, &ti.ideal)?;
                t.check(
                    oracle == ti.at(&a),
                    || format!("{} A={}", c.describe(ti), c.set(&a)),
                    || format!("cyclic {} vs all subgroups {}", c.set(&ti.at(&a)), c.set(&oracle)),
                );
            }
        }
    }
    Ok(())
}

pub(super) fn power_closure(b: &Bounds, t: &mut Tally) -> Result<()> {
    let (mut zero, mut shared, mut coprime) = (0u64, 0u64, 0u64);
    for c in contexts(b).iter() {
        let g = &c.group;
        for ti in &c.ideals {
            for a in c.subsets() {
                let local = ti.at(&a);
                for x in local.iter() {
                    let ord = g.element_order(x) as i64;
                    for k in 0..ord {
                        let p = g.power(x, k);
                        let ok = local.contains(p);
                        if !ok {
                            match (k, gcd(k, ord)) {
                                (0, _) => zero += 1,
                                (_, 1) => coprime += 1,
                                _ => shared += 1,
                            }
                        }
                        t.check(
                            ok,
                            || format!("{} A={} g={}", c.describe(ti), c.set(&a), g.label(x)),
                            || format!("g^{k} = {} ∉ A^∝", g.label(p)),
                        );
                    }
                }
            }
        }
    }
    t.note(format!("failures by exponent: n = 0: {zero}, gcd(n, ord g) > 1: {shared}, gcd(n, ord g) = 1: {coprime}"));
    Ok(())
}

pub(super) fn monotone(b: &Bounds, t: &mut Tally) -> Result<()> {
    for c in contexts(b).iter() {
        for ti in &c.ideals {
            for big in c.subsets() {
                for small in big.subsets() {
                    t.check(
                        ti.at(&small).is_subset(&ti.at(&big)),
                        || format!("{} A={} B={}", c.describe(ti), c.set(&small), c.set(&big)),
                        || "A^∝ ⊄ B^∝".into(),
                    );
                }
            }
        }
    }
    Ok(())
}

pub(super) fn union_additive(b: &Bounds, t: &mut Tally) -> Result<()> {
    for c in contexts(b).iter() {
        for ti in &c.ideals {
            for a in c.subsets() {
                for bb in c.subsets().filter(|x| x.bits() >= a.bits()) {
                    let lhs = ti.at(&a.union(&bb));
                    let rhs = ti.at(&a).union(&ti.at(&bb));
                    t.check(
                        lhs == rhs,
                        || format!("{} A={} B={}", c.describe(ti), c.set(&a), c.set(&bb)),
                        || format!("(A∪B)^∝ = {}, A^∝ ∪ B^∝ = {}", c.set(&lhs), c.set(&rhs)),
                    );
                }
            }
        }
    }
    Ok(())
}

pub(super) fn ideal_order_reversing(b: &Bounds, t: &mut Tally) -> Result<()> {
    for c in contexts(b).iter() {
        for i in &c.ideals {
            for j in c.ideals.iter().filter(|j| i.family.is_subfamily(&j.family)) {
                for a in c.subsets() {
                    t.check(
                        j.at(&a).is_subset(&i.at(&a)),
                        || format!("{} J={} A={}", c.describe(i), format_ideal(&c.group, &j.ideal), c.set(&a)),
                        || "A^∝(J) ⊄ A^∝(I)".into(),
                    );
                }
            }
        }
    }
    Ok(())
}

pub(super) fn intersection_not_preserved(b: &Bounds, t: &mut Tally) -> Result<()> {
    let (evens, odds) = (sl("2Z"), sl("2Z+1"));
    let lhs = local_fn_int(&evens.intersection(&odds), &IntIdeal::Finite);
    let rhs = local_fn_int(&evens, &IntIdeal::Finite).intersection(&local_fn_int(&odds, &IntIdeal::Finite));
    t.check(lhs == rhs, || "Z, I_fin, A=2Z, B=2Z+1".into(), || format!("(A∩B)^∝ = {lhs}, A^∝ ∩ B^∝ = {rhs}"));
    for c in contexts(b).iter() {
        for ti in &c.ideals {
            for a in c.subsets() {
                for bb in c.subsets().filter(|x| x.bits() > a.bits()) {
                    let lhs = ti.at(&a.intersection(&bb));
                    let rhs = ti.at(&a).intersection(&ti.at(&bb));
                    t.check(
                        lhs == rhs,
                        || format!("{} A={} B={}", c.describe(ti), c.set(&a), c.set(&bb)),
                        || format!("(A∩B)^∝ = {}, A^∝ ∩ B^∝ = {}", c.set(&lhs), c.set(&rhs)),
                    );
                }
            }
        }
    }
    Ok(())
}

pub(super) fn example_evens_odds(_: &Bounds, t: &mut Tally) -> Result<()> {
    let (a, b) = (sl("2Z"), sl("2Z+1"));
    let la = local_fn_int(&a, &IntIdeal::Finite);
    let lb = local_fn_int(&b, &IntIdeal::Finite);
    let inst = "Z, I_fin, A=2Z, B=2Z+1";
    compare(t, inst, "A^∝", &la, &sl("Z\\{0}"));
    compare(t, inst, "B^∝", &lb, &sl("2Z+1"));
    compare(t, inst, "A^∝ ∩ B^∝", &la.intersection(&lb), &sl("2Z+1"));
    compare(t, inst, "(A∩B)^∝", &local_fn_int(&a.intersection(&b), &IntIdeal::Finite), &SemilinearSet::empty());
    Ok(())
}

pub(super) fn avoid_identity(b: &Bounds, t: &mut Tally) -> Result<()> {
    for g in test_groups(b.max_order) {
        let ideal = FiniteIdeal::AvoidsElement { order: g.order(), element: g.identity() };
        for a in Subset::all(g.order()) {
            let local = local_fn(&g, &a, &ideal);
            t.check(
                g.is_subgroup(&local) == local.is_full(),
                || format!("G={} I=avoid:e A={}", g.name(), g.format_subset(&a)),
                || format!("A^∝ = {}", g.format_subset(&local)),
            );
        }
    }
    Ok(())
}

pub(super) fn identity_membership(b: &Bounds, t: &mut Tally) -> Result<()> {
    for c in contexts(b).iter() {
        let g = &c.group;
        let e = g.identity();
        let singleton = Subset::singleton(g.order(), e);
        for ti in &c.ideals {
            let trivial = ti.family.len() == 1;
            let holds_e = ti.ideal.contains(&singleton);
            for a in c.subsets() {
                let local = ti.at(&a);
                if holds_e {
                    t.check(
                        !local.contains(e) && !g.is_subgroup(&local),
                        || format!("{} A={}", c.describe(ti), c.set(&a)),
                        || format!("{{e}} ∈ I but A^∝ = {}", c.set(&local)),
                    );
                }
                if trivial {
                    let ok = if a.contains(e) { local.is_full() } else { !local.contains(e) && !g.is_subgroup(&local) };
                    t.check(ok, || format!("{} A={}", c.describe(ti), c.set(&a)), || format!("A^∝ = {}", c.set(&local)));
                }
            }
        }
    }
    Ok(())
}

pub(super) fn image_ideal_claim(b: &Bounds, t: &mut Tally) -> Result<()> {
    for g in test_groups(b.max_order) {
        let endos = homomorphisms(&g, &g);
        for ideal in test_ideals(&g, b) {
            for f in &endos {
                let image = image_ideal(f, &ideal).to_family();
                let verdict = verify_ideal(&image);
                t.check(
                    verdict.is_ok(),
                    || format!("G={} I={} f={:?}", g.name(), format_ideal(&g, &ideal), f.map()),
                    || format!("{verdict:?}"),
                );
            }
        }
    }
    Ok(())
}

/// Both sides of the image comparison for every endomorphism in `maps`.
fn image_sweep(c: &Context, maps: &[Homomorphism<'_>], mut visit: impl FnMut(String, Inclusion, Subset, Subset)) {
    for f in maps {
        for ti in &c.ideals {
            let fi = image_ideal(f, &ti.ideal);
            for a in c.subsets() {
                let lhs = f.image_subset(&ti.at(&a));
                let rhs = local_fn(&c.group, &f.image_subset(&a), &fi);
                let rel = match (lhs.is_subset(&rhs), rhs.is_subset(&lhs)) {
                    (true, true) => Inclusion::Equal,
                    (true, false) => Inclusion::ProperSubset,
                    (false, true) => Inclusion::ProperSuperset,
                    (false, false) => Inclusion::Incomparable,
                };
                visit(format!("{} f={:?} A={}", c.describe(ti), f.map(), c.set(&a)), rel, lhs, rhs);
            }
        }
    }
}

const DOUBLING_SETS: [&str; 6] = ["2Z", "2Z+1", "{0,1}", "Z", "3Z", "Z\\{0}"];

pub(super) fn image_inclusion(b: &Bounds, t: &mut Tally) -> Result<()> {
    for c in contexts(b).iter() {
        let endos = homomorphisms(&c.group, &c.group);
        image_sweep(&c, &endos, |inst, rel, lhs, rhs| {
            t.check(rel.is_inclusion(), || inst, || format!("f(A^∝) = {}, f(A)^∝(f(I)) = {}", c.set(&lhs), c.set(&rhs)));
        });
    }
    for text in DOUBLING_SETS {
        let d = local_fn_image_data_int(2, &sl(text), &IntIdeal::Finite)?;
        t.check(
            d.relation.is_inclusion(),
            || format!("Z, f(n)=2n, I_fin, A={text}"),
            || format!("f(A^∝) = {}, f(A)^∝ = {}", d.image_of_local, d.local_of_image),
        );
    }
    Ok(())
}

pub(super) fn example_doubling(_: &Bounds, t: &mut Tally) -> Result<()> {
    let a = sl("2Z");
    let d = local_fn_image_data_int(2, &a, &IntIdeal::Finite)?;
    let inst = "Z, f(n)=2n, I_fin, A=2Z";
    compare(t, inst, "A^∝", &local_fn_int(&a, &IntIdeal::Finite), &sl("Z\\{0}"));
    compare(t, inst, "f(A)", &a.scale(2), &sl("4Z"));
    compare(t, inst, "f(A^∝)", &d.image_of_local, &sl("2Z\\{0}"));
    compare(t, inst, "f(A)^∝(f(I_fin))", &d.local_of_image, &sl("Z\\{0}"));
    t.check(d.relation == Inclusion::ProperSubset, || inst.into(), || format!("relation {:?}", d.relation));
    Ok(())
}

pub(super) fn injective_equality(b: &Bounds, t: &mut Tally) -> Result<()> {
    let (mut maps, mut finite_witnesses) = (0, 0u64);
    for c in contexts(b).iter() {
        let injective: Vec<Homomorphism<'_>> =
            homomorphisms(&c.group, &c.group).into_iter().filter(|f| f.is_injective()).collect();
        maps += injective.len();
        image_sweep(&c, &injective, |inst, rel, lhs, rhs| {
            finite_witnesses += (rel != Inclusion::Equal) as u64;
            t.check(rel == Inclusion::Equal, || inst, || format!("f(A^∝) = {}, f(A)^∝(f(I)) = {}", c.set(&lhs), c.set(&rhs)));
        });
    }
    t.note(format!("finite groups: {maps} injective endomorphisms, {finite_witnesses} witnesses"));
    for text in DOUBLING_SETS {
        let d = local_fn_image_data_int(2, &sl(text), &IntIdeal::Finite)?;
        t.check(
            d.relation == Inclusion::Equal,
            || format!("Z, f(n)=2n (injective, not onto), I_fin, A={text}"),
            || format!("f(A^∝) = {}, f(A)^∝ = {}", d.image_of_local, d.local_of_image),
        );
    }
    Ok(())
}

pub(super) fn kernel_local(b: &Bounds, t: &mut Tally) -> Result<()> {
    for c in contexts(b).iter() {
        let endos = homomorphisms(&c.group, &c.group);
        let e = Subset::singleton(c.group.order(), c.group.identity());
        for ti in c.ideals.iter().filter(|ti| !ti.ideal.contains(&e)) {
            for f in &endos {
                let kernel = f.kernel();
                let local = ti.at(&kernel);
                t.check(
                    local.is_full(),
                    || format!("{} f={:?}", c.describe(ti), f.map()),
                    || format!("(ker f)^∝ = {}", c.set(&local)),
                );
            }
        }
    }
    Ok(())
}

pub(super) fn absorption(b: &Bounds, t: &mut Tally) -> Result<()> {
    for c in contexts(b).iter() {
        for ti in &c.ideals {
            for a in c.subsets() {
                let base = ti.at(&a);
                for s in ti.family.members() {
                    let (with, without) = (ti.at(&a.union(s)), ti.at(&a.difference(s)));
                    t.check(
                        with == base && without == base,
                        || format!("{} A={} S={}", c.describe(ti), c.set(&a), c.set(s)),
                        || format!("A^∝ = {}, (A∪S)^∝ = {}, (A∖S)^∝ = {}", c.set(&base), c.set(&with), c.set(&without)),
                    );
                }
            }
        }
    }
    Ok(())
}

pub(super) fn contraction(b: &Bounds, t: &mut Tally) -> Result<()> {
    for c in contexts(b).iter() {
        for ti in &c.ideals {
            for a in c.subsets() {
                let once = ti.at(&a);
                let twice = ti.at(&once);
                t.check(
                    twice.is_subset(&once),
                    || format!("{} A={}", c.describe(ti), c.set(&a)),
                    || format!("(A^∝)^∝ = {} ⊄ A^∝ = {}", c.set(&twice), c.set(&once)),
                );
            }
        }
    }
    Ok(())
}

pub(super) fn kuratowski(b: &Bounds, t: &mut Tally) -> Result<()> {
    for g in test_groups(b.max_order) {
        for ideal in test_ideals(&g, b) {
            let violations = verify_kuratowski(&g, &ideal);
            t.check(
                violations.is_empty(),
                || format!("G={} I={}", g.name(), format_ideal(&g, &ideal)),
                || format!("{} violations, first {:?}", violations.len(), violations.first()),
            );
        }
    }
    Ok(())
}

pub(super) fn induced_topology(b: &Bounds, t: &mut Tally) -> Result<()> {
    for g in test_groups(b.max_order) {
        for ideal in test_ideals(&g, b) {
            let verdict = verify_topology(&topology_from_ideal(&g, &ideal));
            t.check(verdict.is_ok(), || format!("G={} I={}", g.name(), format_ideal(&g, &ideal)), || format!("{verdict:?}"));
        }
    }
    Ok(())
}
