//! Acceptance criteria. Prints one PASS/FAIL line per criterion and fails
//! the test if any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num::BigInt;

use idealtop_core::anti::{anti_local_fn, anti_local_int, equivalence_scan, is_anti_ideal, powerset_char, transport_with, AntiSemantics, PairMode};
use idealtop_core::ideal::{enumerate_ideals, Family, FiniteIdeal, IntIdeal};
use idealtop_core::lab::{self, test_groups, test_ideals, Bounds, Expected, Verdict};
use idealtop_core::local::{local_fn, local_fn_image_data_int, local_fn_int, local_fn_oracle, Inclusion};
use idealtop_core::pwpoly::{parse_rational, PwPolyFn, Rational};
use idealtop_core::ring::{IntegerRing, PowersetRing, PwPolyRing};
use idealtop_core::topology::{topology_from_ideal, verify_kuratowski, verify_topology};
use idealtop_core::{FiniteGroup, SemilinearSet, Subset};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("{what} took {took:?}, limit {limit:?}"))
}

fn sl(s: &str) -> SemilinearSet {
    s.parse().unwrap()
}

fn zfam(members: &[&[i64]]) -> BTreeSet<BTreeSet<i64>> {
    members.iter().map(|m| m.iter().copied().collect()).collect()
}

fn ints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn timed(limit: Duration, what: &str, body: impl FnOnce() -> Result<(), String>) -> Result<(), String> {
    let start = Instant::now();
    body()?;
    within(limit, start, what)
}

fn criterion_1() -> Outcome {
    let sec = Duration::from_secs(1);
    timed(sec, "klein four", || {
        let k = FiniteGroup::klein4();
        let ideal = FiniteIdeal::explicit(Family::new(4, idealtop_core::ideal::parse_subset_list(&k, "{ {},{c},{e},{e,c} }").unwrap())).unwrap();
        let local = local_fn(&k, &k.parse_subset("{e,a}").unwrap(), &ideal);
        ensure(local.contains(k.element("a").unwrap()) && !local.contains(k.identity()), || "a ∈, e ∉ failed".into())?;
        ensure(local == k.parse_subset("{a}").unwrap(), || format!("got {}", k.format_subset(&local)))
    })?;
    timed(sec, "evens", || {
        let got = local_fn_int(&sl("2Z"), &IntIdeal::Finite);
        ensure(got == sl("Z\\{0}"), || format!("(2Z)^∝ = {got}"))
    })?;
    timed(sec, "finite sets", || {
        for a in ["{1,2,3}", "{0,5,-7,9}", "{-4,-3,-2,-1,0,1,2,3,4}", "{2,4}", "{0}"] {
            let got = local_fn_int(&sl(a), &IntIdeal::Finite);
            ensure(got.is_empty(), || format!("{a}^∝ = {got}"))?;
        }
        Ok(())
    })?;
    timed(sec, "evens and odds", || {
        let (a, b) = (sl("2Z"), sl("2Z+1"));
        let meet = local_fn_int(&a, &IntIdeal::Finite).intersection(&local_fn_int(&b, &IntIdeal::Finite));
        let of_meet = local_fn_int(&a.intersection(&b), &IntIdeal::Finite);
        ensure(meet == sl("2Z+1") && of_meet.is_empty(), || format!("{meet} vs {of_meet}"))
    })?;
    timed(sec, "doubling map", || {
        let d = local_fn_image_data_int(2, &sl("2Z"), &IntIdeal::Finite).map_err(|e| e.to_string())?;
        ensure(
            d.image_of_local == sl("2Z\\{0}") && d.local_of_image == sl("Z\\{0}") && d.relation == Inclusion::ProperSubset,
            || format!("f(A^∝) = {}, (4Z)^∝ = {}", d.image_of_local, d.local_of_image),
        )
    })?;
    timed(sec, "integer anti-ideals", || {
        let mut cases = vec![vec![3, 5], vec![3, 5, 7]];
        cases.extend((1..=9).map(|k| vec![k]));
        for c in cases {
            let v = is_anti_ideal(&IntegerRing, &ints(&c), PairMode::IncludeEqual).unwrap();
            ensure(v.pass, || format!("{c:?}: {v}"))?;
        }
        Ok(())
    })?;
    timed(sec, "zero map", || {
        let half = parse_rational("1/2").unwrap();
        let xs = [PwPolyFn::hinge_right(&half).unwrap(), PwPolyFn::hinge_left(&half).unwrap()];
        let tr = transport_with(&PwPolyRing, &xs, |_| PwPolyFn::zero(), false, PairMode::IncludeEqual).unwrap();
        ensure(tr.image == ["zero"] && !tr.verdict.pass, || format!("image {:?} {}", tr.image, tr.verdict))
    })?;
    timed(sec, "Z4 anti-local", || {
        let g = FiniteGroup::cyclic(4).unwrap();
        let fam = |t: &str| Family::new(4, idealtop_core::ideal::parse_subset_list(&g, t).unwrap());
        let got = anti_local_fn(&g, &g.parse_subset("{1,2}").unwrap(), &fam("{ {1} }"), AntiSemantics::Stated).unwrap();
        ensure(got.is_empty(), || format!("{{1,2}}: {}", g.format_subset(&got)))?;
        let pair = fam("{ {0},{2} }");
        let a = anti_local_fn(&g, &g.parse_subset("{0}").unwrap(), &pair, AntiSemantics::Stated).unwrap();
        let b = anti_local_fn(&g, &g.parse_subset("{0,2}").unwrap(), &pair, AntiSemantics::Stated).unwrap();
        ensure(a.is_full() && b.is_empty(), || format!("{} / {}", g.format_subset(&a), g.format_subset(&b)))
    })?;
    let cgi = AntiSemantics::CyclicGlobalIdentity;
    let mut reported = Vec::new();
    timed(sec, "Z anti-local", || {
        let cases: [(&[&[i64]], &str, &str); 9] = [
            (&[&[0]], "{0,1}", "Z\\{-1,0,1}"),
            (&[&[0]], "{0}", "Z"),
            (&[&[0]], "{0,2}", "Z\\{-2,-1,0,1,2}"),
            (&[&[0]], "{2}", "{}"),
            (&[&[0, 1]], "{0}", "{}"),
            (&[&[0, 1]], "{1}", "{}"),
            (&[&[0, 1]], "{0,1}", "{-1,0,1}"),
            (&[&[0], &[2]], "{0,2}", "Z\\{-2,-1,0,1,2}"),
            (&[&[0], &[2]], "{2}", "{-2,-1,0,1,2}"),
        ];
        for (family, a, want) in cases {
            let f = zfam(family);
            let got = anti_local_int(&sl(a), &f, cgi).map_err(|e| e.to_string())?;
            ensure(got == sl(want), || format!("A={a}: got {got}, want {want}"))?;
            let stated = anti_local_int(&sl(a), &f, AntiSemantics::Stated).map_err(|e| e.to_string())?;
            reported.push(format!("A={a} stated={stated}"));
        }
        Ok(())
    })?;
    for id in lab::claims().iter().map(|c| c.id).filter(|id| id.starts_with("example-")) {
        let start = Instant::now();
        let r = lab::run_claim(id, &Bounds::default()).map_err(|e| e.to_string())?;
        ensure(r.verdict == Verdict::Holds && r.witness_count == 0, || format!("{id}: {:?}", r.witnesses))?;
        within(sec, start, id)?;
    }
    Ok(format!("examples exact; stated readings on Z: {}", reported.join(", ")))
}

fn criterion_2() -> Outcome {
    let bounds = Bounds::default();
    let names: Vec<String> = test_groups(bounds.max_order).iter().map(|g| g.name().to_string()).collect();
    ensure(names.iter().any(|n| n == "klein4") && names.iter().any(|n| n.starts_with("sym")), || format!("{names:?}"))?;
    ensure(bounds.full_ideal_order == 4 && bounds.ideal_samples >= 200, || format!("{bounds:?}"))?;
    let start = Instant::now();
    let reports = lab::run_suite(&bounds).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let mut holds = 0;
    for r in &reports {
        ensure(r.matches_expected, || format!("{} reported {:?}, first witness {:?}", r.id, r.verdict, r.witnesses.first()))?;
        if r.expected == Expected::Holds {
            holds += 1;
            ensure(r.witness_count == 0, || format!("{} has {} violations", r.id, r.witness_count))?;
        }
    }
    within(Duration::from_secs(60), start, "suite")?;
    Ok(format!("{} claims, {holds} laws with zero violations, {took:.2?}", reports.len()))
}

fn criterion_3() -> Outcome {
    let bounds = Bounds::default();
    let mut n = 0u64;
    for g in test_groups(bounds.max_order) {
        for ideal in test_ideals(&g, &bounds) {
            for a in Subset::all(g.order()) {
                n += 1;
                let (fast, slow) = (local_fn(&g, &a, &ideal), local_fn_oracle(&g, &a, &ideal).map_err(|e| e.to_string())?);
                ensure(fast == slow, || format!("{} A={}: {} vs {}", g.name(), g.format_subset(&a), g.format_subset(&fast), g.format_subset(&slow)))?;
            }
        }
    }
    Ok(format!("{n} instances agree"))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    for g in test_groups(4) {
        for ideal in enumerate_ideals(g.order()).map_err(|e| e.to_string())? {
            n += 1;
            let v = verify_kuratowski(&g, &ideal);
            ensure(v.is_empty(), || format!("{}: {:?}", g.name(), v.first()))?;
            let t = verify_topology(&topology_from_ideal(&g, &ideal));
            ensure(t.is_ok(), || format!("{}: {t:?}", g.name()))?;
        }
    }
    within(Duration::from_secs(10), start, "closure sweep")?;
    Ok(format!("{n} (G, I) pairs"))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mismatches = equivalence_scan(3, 3, PairMode::IncludeEqual).map_err(|e| e.to_string())?;
    ensure(!mismatches.is_empty(), || "no mismatch".into())?;
    let triangle: BTreeSet<&str> = ["{1,2}", "{2,3}", "{1,3}"].into();
    ensure(
        mismatches.iter().any(|m| m.family.iter().map(String::as_str).collect::<BTreeSet<_>>() == triangle),
        || "triangle family missing".into(),
    )?;
    // direct evaluation on bitmasks: Δ is xor, ∩ is and
    let fam = [0b011u8, 0b110, 0b101];
    let difference_hits = fam.iter().any(|a| fam.iter().any(|b| fam.contains(&(a ^ b))));
    let distinct = |f: &dyn Fn(u8, u8) -> bool| fam.iter().any(|&a| fam.iter().any(|&b| a != b && f(a, b)));
    let proper_subset = distinct(&|a, b| a & b == a);
    let union_member = distinct(&|a, b| fam.contains(&(a | b)));
    ensure(difference_hits && !proper_subset && !union_member, || "direct evaluation disagrees".into())?;
    let p = PowersetRing::numbered(3);
    let subsets: Vec<Subset> = fam.iter().map(|&m| Subset::from_bits(3, m as u64)).collect();
    ensure(powerset_char(&p, &subsets).pass, || "characterization rejects the triangle".into())?;
    ensure(!is_anti_ideal(&p, &subsets, PairMode::IncludeEqual).unwrap().pass, || "anti-ideal test accepts the triangle".into())?;
    within(Duration::from_secs(5), start, "scan")?;
    Ok(format!("{} mismatches including the triangle", mismatches.len()))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    for text in ["1/4", "1/2", "3/4"] {
        let a = parse_rational(text).unwrap();
        let (x, y) = (PwPolyFn::hinge_right(&a).unwrap(), PwPolyFn::hinge_left(&a).unwrap());
        let v = is_anti_ideal(&PwPolyRing, &[x.clone(), y.clone()], PairMode::IncludeEqual).unwrap();
        ensure(v.pass, || format!("a={text}: {v}"))?;
        let prod = x.mul(&y);
        ensure(prod.is_zero(), || format!("a={text}: x_a·y_a = {prod}"))?;
        for k in 0..=16 {
            let t = Rational::new(BigInt::from(k), BigInt::from(16));
            ensure(prod.eval(&t).unwrap() == Rational::from_integer(0.into()), || format!("nonzero at {t}"))?;
        }
    }
    within(Duration::from_secs(1), start, "function ring")?;
    Ok("a ∈ {1/4, 1/2, 3/4}".into())
}

fn criterion_7() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_idealtop")).args(["verify", "--json"]).env_remove("IDEALTOP_FORMAT").output().unwrap()
    };
    let (a, b) = (run(), run());
    ensure(a.status.success() && b.status.success(), || format!("exit {:?} / {:?}", a.status, b.status))?;
    ensure(a.stdout == b.stdout, || "outputs differ".into())?;
    Ok(format!("{} identical bytes", a.stdout.len()))
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("example goldens", criterion_1),
        ("claim suite", criterion_2),
        ("oracle equivalence", criterion_3),
        ("closure and topology", criterion_4),
        ("characterization falsified", criterion_5),
        ("function-ring anti-ideals", criterion_6),
        ("deterministic verify --json", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} {name}: {why}", i + 1);
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
