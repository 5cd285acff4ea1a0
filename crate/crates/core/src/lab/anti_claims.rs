use std::collections::BTreeSet;

use num::BigInt;

use super::universe::{anti_universes, format_family, test_rings, AntiUniverse};
use super::{Bounds, Tally};
use crate::anti::{
    anti_local_fn, anti_local_int, enumerate_anti_ideals, equivalence_scan, is_anti_ideal, transport_anti_ideal,
    transport_with, zero_map, AntiSemantics, PairMode,
};
use crate::error::Result;
use crate::group::{homomorphisms, FiniteGroup, Subset};
use crate::ideal::{parse_subset_list, Family};
use crate::int_set::SemilinearSet;
use crate::pwpoly::{parse_rational, PwPolyFn};
use crate::ring::{ring_homomorphisms, ring_isomorphisms, FiniteRing, IntegerRing, PwPolyRing, RingOps};

const CGI: AntiSemantics = AntiSemantics::CyclicGlobalIdentity;

type IntFamily = BTreeSet<BTreeSet<i64>>;

fn zfam(members: &[&[i64]]) -> IntFamily {
    members.iter().map(|m| m.iter().copied().collect()).collect()
}

fn sl(text: &str) -> SemilinearSet {
    text.parse().expect("curated literal")
}

fn fmt_zfam(f: &IntFamily) -> String {
    let items: Vec<String> = f.iter().map(|s| SemilinearSet::finite(s.iter().copied()).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

pub(super) fn example_integers(_: &Bounds, t: &mut Tally) -> Result<()> {
    let z = IntegerRing;
    let ints = |xs: &[i64]| xs.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    let mut cases: Vec<Vec<i64>> = vec![vec![3, 5], vec![3, 5, 7]];
    cases.extend((-12..=12).filter(|&k| k != 0).map(|k| vec![k]));
    for case in cases {
        let v = is_anti_ideal(&z, &ints(&case), PairMode::IncludeEqual)?;
        t.check(v.pass, || format!("Z, A={case:?}"), || v.to_string());
    }
    let zero = is_anti_ideal(&z, &ints(&[0]), PairMode::IncludeEqual)?;
    t.check(!zero.pass, || "Z, A=[0]".into(), || "the zero singleton passed".into());
    Ok(())
}

pub(super) fn example_hinges(_: &Bounds, t: &mut Tally) -> Result<()> {
    for text in ["1/4", "1/3", "1/2", "2/3", "3/4"] {
        let a = parse_rational(text)?;
        let (x, y) = (PwPolyFn::hinge_right(&a)?, PwPolyFn::hinge_left(&a)?);
        t.check(x.mul(&y).is_zero(), || format!("a={text}"), || "x_a·y_a is not the zero function".into());
        let v = is_anti_ideal(&PwPolyRing, &[x, y], PairMode::IncludeEqual)?;
        t.check(v.pass, || format!("a={text}, A={{x_a, y_a}}"), || v.to_string());
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

pub(super) fn powerset_characterization(b: &Bounds, t: &mut Tally) -> Result<()> {
    let n = b.anti_universe;
    if n == 0 {
        return Ok(());
    }
    let nonempty = (1usize << n) - 1;
    for k in 0..=b.anti_family.min(nonempty) {
        for _ in 0..binomial(nonempty, k) {
            t.instance();
        }
    }
    let records = equivalence_scan(n, b.anti_family, PairMode::IncludeEqual)?;
    let triangle = ["{1,2}", "{1,3}", "{2,3}"];
    let has_triangle = records.iter().any(|r| {
        let mut f = r.family.clone();
        f.sort();
        f == triangle
    });
    for r in records {
        t.witness(
            format!("carrier {{1..{n}}}, family {{{}}}", r.family.join(",")),
            format!(
"anti-ideal test {}; subset/union test {}", r.anti_ideal, r.characterization),
        );
    }
    if n >= 3 && b.anti_family >= 3 {
        t.note(format!("family {{{{1,2}},{{2,3}},{{1,3}}}} among the mismatches: {has_triangle}"));
    }
    let strict = equivalence_scan(n, b.anti_family, PairMode::StrictPairs)?.len();
    t.note(format!("mismatches with a = b excluded from the difference condition: {strict}"));
    Ok(())
}

fn ring_label(r: &FiniteRing, xs: &[usize]) -> String {
    let items: Vec<String> = xs.iter().map(|&x| r.format(&x)).collect();
    format!("{{{}}}", items.join(","))
}

pub(super) fn homomorphic_image(b: &Bounds, t: &mut Tally) -> Result<()> {
    let rings = test_rings(b.ring_order);
    for r in &rings {
        let antis = enumerate_anti_ideals(r, b.anti_family)?;
        for s in &rings {
            for f in ring_homomorphisms(r, s) {
                for a in antis.iter().filter(|a| !a.is_empty()) {
                    let tr = transport_anti_ideal(&f, a, PairMode::IncludeEqual)?;
                    t.check(
                        tr.verdict.pass,
                        || format!("{} -> {}, f={:?}, aI={}", r.name(), s.name(), f.map(), ring_label(r, a)),
                        || format!("image {{{}}} {}", tr.image.join(","), tr.verdict),
                    );
                }
            }
        }
    }
    Ok(())
}

pub(super) fn example_zero_map(b: &Bounds, t: &mut Tally) -> Result<()> {
    let half = parse_rational("1/2")?;
    let hinges = [PwPolyFn::hinge_right(&half)?, PwPolyFn::hinge_left(&half)?];
    let tr = transport_with(&PwPolyRing, &hinges, |_| PwPolyFn::zero(), false, PairMode::IncludeEqual)?;
    t.check(
        tr.image.len() == 1 && !tr.verdict.pass,
        || "C[0,1], f = 0, aI={x_1/2, y_1/2}".into(),
        || format!("image {{{}}} {}", tr.image.join(","), tr.verdict),
    );
    for r in test_rings(b.ring_order) {
        let zero = zero_map(&r);
        for a in enumerate_anti_ideals(&r, b.anti_family)?.iter().filter(|a| !a.is_empty()) {
            let tr = transport_anti_ideal(&zero, a, PairMode::IncludeEqual)?;
            t.check(
                tr.image == [r.format(&r.zero_index())] && !tr.verdict.pass,
                || format!("{}, f = 0, aI={}", r.name(), ring_label(&r, a)),
                || format!("image {{{}}} {}", tr.image.join(","), tr.verdict),
            );
        }
    }
    Ok(())
}

pub(super) fn isomorphic_image(b: &Bounds, t: &mut Tally) -> Result<()> {
    let rings = test_rings(b.ring_order);
    let mut isos = 0;
    for r in &rings {
        let antis = enumerate_anti_ideals(r, b.anti_family)?;
        for s in rings.iter().filter(|s| s.order() == r.order()) {
            for f in ring_isomorphisms(r, s) {
                isos += 1;
                for a in &antis {
                    let tr = transport_anti_ideal(&f, a, PairMode::IncludeEqual)?;
                    t.check(
                        tr.verdict.pass && tr.isomorphism,
                        || format!("{} -> {}, f={:?}, aI={}", r.name(), s.name(), f.map(), ring_label(r, a)),
                        || format!("image {{{}}} {}", tr.image.join(","), tr.verdict),
                    );
                }
            }
        }
    }
    t.note(format!("isomorphisms between test rings: {isos}"));
    Ok(())
}

/// Checks a curated value on `Z` under the cyclic-global-identity reading
/// and notes what the other readings give.
fn golden_z(t: &mut Tally, family: &IntFamily, a: &str, want: &str) -> Result<SemilinearSet> {
    let set = sl(a);
    let got = anti_local_int(&set, family, CGI)?;
    let want = sl(want);
    let inst = format!("Z, aI={}, A={a}", fmt_zfam(family));
    t.check(got == want, || inst.clone(), || format!("{CGI}: got {got}, expected {want}"));
    let stated = anti_local_int(&set, family, AntiSemantics::Stated)?;
    let cyclic = anti_local_int(&set, family, AntiSemantics::Cyclic)?;
    t.note(format!("{inst}: stated {stated}, cyclic {cyclic}, cyclic-global-identity {got}"));
    Ok(got)
}

fn z4() -> FiniteGroup {
    FiniteGroup::cyclic(4).expect("Z4")
}

fn finite_family(g: &FiniteGroup, text: &str) -> Result<Family> {
    Ok(Family::new(g.order(), parse_subset_list(g, text)?))
}

pub(super) fn example_z4_empty(_: &Bounds, t: &mut Tally) -> Result<()> {
    let g = z4();
    let family = finite_family(&g, "{ {1} }")?;
    let a = g.parse_subset("{1,2}")?;
    for sem in AntiSemantics::ALL {
        let got = anti_local_fn(&g, &a, &family, sem)?;
        t.check(got.is_empty(), || format!("Z4, aI={{{{1}}}}, A={{1,2}}, {sem}"), || format!("got {}", g.format_subset(&got)));
    }
    Ok(())
}

pub(super) fn example_z_anti_local(_: &Bounds, t: &mut Tally) -> Result<()> {
    golden_z(t, &zfam(&[&[0]]), "{0,1}", "Z\\{-1,0,1}")?;
    let stated = anti_local_int(&sl("{0,1}"), &zfam(&[&[0]]), AntiSemantics::Stated)?;
    t.check(stated.is_empty(), || "Z, aI={{0}}, A={0,1}, stated".into(), || format!("got {stated}"));
    Ok(())
}

pub(super) fn family_monotone(b: &Bounds, t: &mut Tally) -> Result<()> {
    for u in anti_universes(b).iter() {
        let g = &u.group;
        for (i, small) in u.families.iter().enumerate() {
            for (j, big) in u.families.iter().enumerate().filter(|(_, big)| small.is_subfamily(big)) {
                for (s, sem) in AntiSemantics::ALL.iter().enumerate() {
                    for a in Subset::all(g.order()) {
                        let (lo, hi) = (u.table(s, i, &a), u.table(s, j, &a));
                        t.check(
                            lo.is_subset(&hi),
                            || {
                                format!(
                                    "G={} aI={} aJ={} A={} {sem}",
                                    g.name(),
                                    format_family(g, small),
                                    format_family(g, big),
                                    g.format_subset(&a)
                                )
                            },
                            || format!("{} ⊄ {}", g.format_subset(&lo), g.format_subset(&hi)),
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

/// Runs `visit(universe, semantics index, family index)` over every
/// anti-local table.
fn each_table(b: &Bounds, mut visit: impl FnMut(&AntiUniverse, usize, usize)) {
    for u in anti_universes(b).iter() {
        for s in 0..AntiSemantics::ALL.len() {
            for f in 0..u.families.len() {
                visit(&u, s, f);
            }
        }
    }
}

fn instance(u: &AntiUniverse, s: usize, f: usize, rest: String) -> String {
    format!("G={} aI={} {rest} {}", u.group.name(), format_family(&u.group, &u.families[f]), AntiSemantics::ALL[s])
}

pub(super) fn not_monotone(b: &Bounds, t: &mut Tally) -> Result<()> {
    for (family, small, big) in [(zfam(&[&[0], &[2]]), "{0}", "{0,2}"), (zfam(&[&[0]]), "{0}", "{0,1}")] {
        let (lo, hi) = (anti_local_int(&sl(small), &family, CGI)?, anti_local_int(&sl(big), &family, CGI)?);
        t.check(
            lo.is_subset(&hi),
            || format!("Z, aI={}, A={small}, B={big} {CGI}", fmt_zfam(&family)),
            || format!("A^{{a∝}} = {lo} ⊄ B^{{a∝}} = {hi}"),
        );
    }
    each_table(b, |u, s, f| {
        let g = &u.group;
        for big in Subset::all(g.order()) {
            for small in big.subsets() {
                let (lo, hi) = (u.table(s, f, &small), u.table(s, f, &big));
                t.check(
                    lo.is_subset(&hi),
                    || instance(u, s, f, format!("A={} B={}", g.format_subset(&small), g.format_subset(&big))),
                    || format!("{} ⊄ {}", g.format_subset(&lo), g.format_subset(&hi)),
                );
            }
        }
    });
    Ok(())
}

pub(super) fn example_z4_non_monotone(_: &Bounds, t: &mut Tally) -> Result<()> {
    let g = z4();
    let family = finite_family(&g, "{ {0},{2} }")?;
    let (a, bb) = (g.parse_subset("{0}")?, g.parse_subset("{0,2}")?);
    for sem in [AntiSemantics::Stated, CGI] {
        let (la, lb) = (anti_local_fn(&g, &a, &family, sem)?, anti_local_fn(&g, &bb, &family, sem)?);
        t.check(la.is_full(), || format!("Z4, aI={{{{0}},{{2}}}}, A={{0}}, {sem}"), || format!("got {}", g.format_subset(&la)));
        t.check(lb.is_empty(), || format!("Z4, aI={{{{0}},{{2}}}}, B={{0,2}}, {sem}"), || format!("got {}", g.format_subset(&lb)));
    }
    let (la, lb) = (
        anti_local_fn(&g, &a, &family, AntiSemantics::Cyclic)?,
        anti_local_fn(&g, &bb, &family, AntiSemantics::Cyclic)?,
    );
    t.note(format!("cyclic: A^{{a∝}} = {}, B^{{a∝}} = {}", g.format_subset(&la), g.format_subset(&lb)));
    Ok(())
}

fn z_union(t: &mut Tally, family: &IntFamily, a: &str, b: &str) -> Result<()> {
    let (sa, sb) = (sl(a), sl(b));
    let whole = anti_local_int(&sa.union(&sb), family, CGI)?;
    let parts = anti_local_int(&sa, family, CGI)?.union(&anti_local_int(&sb, family, CGI)?);
    t.check(
        whole == parts,
        || format!("Z, aI={}, A={a}, B={b} {CGI}", fmt_zfam(family)),
        || format!("(A∪B)^{{a∝}} = {whole}, A^{{a∝}} ∪ B^{{a∝}} = {parts}"),
    );
    Ok(())
}

pub(super) fn union_fails(b: &Bounds, t: &mut Tally) -> Result<()> {
    z_union(t, &zfam(&[&[0, 1]]), "{0}", "{1}")?;
    z_union(t, &zfam(&[&[0]]), "{0}", "{2}")?;
    each_table(b, |u, s, f| {
        let g = &u.group;
        for a in Subset::all(g.order()) {
            for bb in Subset::all(g.order()).filter(|x| x.bits() > a.bits()) {
                let whole = u.table(s, f, &a.union(&bb));
                let parts = u.table(s, f, &a).union(&u.table(s, f, &bb));
                t.check(
                    whole == parts,
                    || instance(u, s, f, format!("A={} B={}", g.format_subset(&a), g.format_subset(&bb))),
                    || format!("(A∪B)^{{a∝}} = {}, A^{{a∝}} ∪ B^{{a∝}} = {}", g.format_subset(&whole), g.format_subset(&parts)),
                );
            }
        }
    });
    Ok(())
}

pub(super) fn example_union(_: &Bounds, t: &mut Tally) -> Result<()> {
    let pair = zfam(&[&[0, 1]]);
    let a = golden_z(t, &pair, "{0}", "{}")?;
    let b = golden_z(t, &pair, "{1}", "{}")?;
    let ab = golden_z(t, &pair, "{0,1}", "{-1,0,1}")?;
    t.check(!ab.is_subset(&a.union(&b)), || "Z, aI={{0,1}}".into(), || "(A∪B)^{a∝} ⊆ A^{a∝} ∪ B^{a∝}".into());
    let zero = zfam(&[&[0]]);
    let a = golden_z(t, &zero, "{0}", "Z")?;
    let b = golden_z(t, &zero, "{2}", "{}")?;
    let ab = golden_z(t, &zero, "{0,2}", "Z\\{-2,-1,0,1,2}")?;
    t.check(!a.union(&b).is_subset(&ab), || "Z, aI={{0}}".into(), || "A^{a∝} ∪ B^{a∝} ⊆ (A∪B)^{a∝}".into());
    Ok(())
}

pub(super) fn intersection_fails(b: &Bounds, t: &mut Tally) -> Result<()> {
    let family = zfam(&[&[0]]);
    let (sa, sb) = (sl("{0,1}"), sl("{0,2}"));
    let whole = anti_local_int(&sa.intersection(&sb), &family, CGI)?;
    let parts = anti_local_int(&sa, &family, CGI)?.intersection(&anti_local_int(&sb, &family, CGI)?);
    t.check(
        whole == parts,
        || format!("Z, aI={{{{0}}}}, A={{0,1}}, B={{0,2}} {CGI}"),
        || format!("(A∩B)^{{a∝}} = {whole}, A^{{a∝}} ∩ B^{{a∝}} = {parts}"),
    );
    each_table(b, |u, s, f| {
        let g = &u.group;
        for a in Subset::all(g.order()) {
            for bb in Subset::all(g.order()).filter(|x| x.bits() > a.bits()) {
                let whole = u.table(s, f, &a.intersection(&bb));
                let parts = u.table(s, f, &a).intersection(&u.table(s, f, &bb));
                t.check(
                    whole == parts,
                    || instance(u, s, f, format!("A={} B={}", g.format_subset(&a), g.format_subset(&bb))),
                    || format!("(A∩B)^{{a∝}} = {}, A^{{a∝}} ∩ B^{{a∝}} = {}", g.format_subset(&whole), g.format_subset(&parts)),
                );
            }
        }
    });
    Ok(())
}

pub(super) fn example_intersection(_: &Bounds, t: &mut Tally) -> Result<()> {
    let zero = zfam(&[&[0]]);
    let a = golden_z(t, &zero, "{0,1}", "Z\\{-1,0,1}")?;
    let b = golden_z(t, &zero, "{0,2}", "Z\\{-2,-1,0,1,2}")?;
    let meet = a.intersection(&b);
    t.check(meet == sl("Z\\{-2,-1,0,1,2}"), || "Z, aI={{0}}".into(), || format!("A^{{a∝}} ∩ B^{{a∝}} = {meet}"));
    let ab = golden_z(t, &zero, "{0}", "Z")?;
    t.check(!ab.is_subset(&meet), || "Z, aI={{0}}".into(), || "(A∩B)^{a∝} ⊆ A^{a∝} ∩ B^{a∝}".into());
    Ok(())
}

pub(super) fn absorption_fails(b: &Bounds, t: &mut Tally) -> Result<()> {
    let family = zfam(&[&[0], &[2]]);
    for (a, s) in [("{0,2}", "{0}"), ("{2}", "{0}")] {
        let (sa, ss) = (sl(a), sl(s));
        let base = anti_local_int(&sa, &family, CGI)?;
        let without = anti_local_int(&sa.difference(&ss), &family, CGI)?;
        let with = anti_local_int(&sa.union(&ss), &family, CGI)?;
        t.check(
            base == without && base == with,
            || format!("Z, aI={{{{0}},{{2}}}}, A={a}, S={s} {CGI}"),
            || format!("A^{{a∝}} = {base}, (A∖S)^{{a∝}} = {without}, (A∪S)^{{a∝}} = {with}"),
        );
    }
    each_table(b, |u, s, f| {
        let g = &u.group;
        for a in Subset::all(g.order()) {
            let base = u.table(s, f, &a);
            for m in u.families[f].members() {
                let (without, with) = (u.table(s, f, &a.difference(m)), u.table(s, f, &a.union(m)));
                t.check(
                    base == without && base == with,
                    || instance(u, s, f, format!("A={} S={}", g.format_subset(&a), g.format_subset(m))),
                    || {
                        format!(
                            "A^{{a∝}} = {}, (A∖S)^{{a∝}} = {}, (A∪S)^{{a∝}} = {}",
                            g.format_subset(&base),
                            g.format_subset(&without),
                            g.format_subset(&with)
                        )
                    },
                );
            }
        }
    });
    Ok(())
}

pub(super) fn example_absorption(_: &Bounds, t: &mut Tally) -> Result<()> {
    let family = zfam(&[&[0], &[2]]);
    let a = golden_z(t, &family, "{0,2}", "Z\\{-2,-1,0,1,2}")?;
    let without = golden_z(t, &family, "{2}", "{-2,-1,0,1,2}")?;
    t.check(a != without, || "Z, aI={{0},{2}}, A={0,2}, S={0}".into(), || "A^{a∝} = (A∖S)^{a∝}".into());
    Ok(())
}

pub(super) fn image_fails(b: &Bounds, t: &mut Tally) -> Result<()> {
    let family = zfam(&[&[0]]);
    for text in ["{0,1}", "{0}", "{1,3}"] {
        let a = sl(text);
        let lhs = anti_local_int(&a, &family, CGI)?.scale(2);
        let rhs = anti_local_int(&a.scale(2), &family, CGI)?;
        t.check(
            lhs == rhs,
            || format!("Z, f(n)=2n, aI={{{{0}}}}, A={text} {CGI}"),
            || format!("f(A^{{a∝}}) = {lhs}, f(A)^{{a∝}} = {rhs}"),
        );
    }
    for u in anti_universes(b).iter() {
        let g = &u.group;
        for f in homomorphisms(g, g) {
            for s in 0..AntiSemantics::ALL.len() {
                for fi in 0..u.families.len() {
                    for a in Subset::all(g.order()) {
                        let lhs = f.image_subset(&u.table(s, fi, &a));
                        let rhs = u.table(s, fi, &f.image_subset(&a));
                        t.check(
                            lhs == rhs,
                            || instance(&u, s, fi, format!("f={:?} A={}", f.map(), g.format_subset(&a))),
                            || format!("f(A^{{a∝}}) = {}, f(A)^{{a∝}} = {}", g.format_subset(&lhs), g.format_subset(&rhs)),
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

pub(super) fn example_image(_: &Bounds, t: &mut Tally) -> Result<()> {
    let family = zfam(&[&[0]]);
    let local = golden_z(t, &family, "{0,1}", "Z\\{-1,0,1}")?;
    let image = local.scale(2);
    let want = sl("2Z\\{-2,0,2}");
    t.check(image == want, || "Z, f(n)=2n, aI={{0}}, A={0,1}".into(), || format!("f(A^{{a∝}}) = {image}"));
    let fa = sl("{0,1}").scale(2);
    t.check(fa == sl("{0,2}"), || "Z, f(n)=2n, A={0,1}".into(), || format!("f(A) = {fa}"));
    golden_z(t, &family, "{0,2}", "Z\\{-2,-1,0,1,2}")?;
    Ok(())
}
