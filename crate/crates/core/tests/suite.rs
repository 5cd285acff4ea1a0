use idealtop_core::lab::{all_as_expected, claims, find_claim, run_claim, run_suite, Bounds, Expected, Verdict};

fn deviations(reports: &[idealtop_core::lab::Report]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| !r.matches_expected)
        .map(|r| format!("{}: expected {:?}, got {:?}, witnesses {:?}", r.id, r.expected, r.verdict, r.witnesses))
        .collect()
}

#[test]
fn default_suite_matches_expectations() {
    let reports = run_suite(&Bounds::default()).unwrap();
    assert_eq!(reports.len(), claims().len());
    for r in &reports {
        eprintln!("{:<32} {:>9} instances  {:?} ({:?})", r.id, r.instances, r.verdict, r.runtime);
    }
    assert!(all_as_expected(&reports), "{:#?}", deviations(&reports));
}

#[test]
fn reduced_space_keeps_statuses() {
    let small = Bounds { max_order: 2, ..Bounds::default() };
    let full = run_suite(&Bounds::default()).unwrap();
    let reduced = run_suite(&small).unwrap();
    for (a, b) in full.iter().zip(&reduced) {
        assert_eq!(a.id, b.id);
        assert_eq!(a.verdict, b.verdict, "{}", a.id);
        assert!(b.instances <= a.instances, "{}", a.id);
    }
}

#[test]
fn empty_bounds_run_nothing() {
    assert!(run_suite(&Bounds::empty()).unwrap().is_empty());
}

#[test]
fn registry_ids_are_unique() {
    let mut ids: Vec<&str> = claims().iter().map(|c| c.id).collect();
    ids.sort();
    let before = ids.len();
    ids.dedup();
    assert_eq!(before, ids.len());
}

#[test]
fn single_claims() {
    let b = Bounds::default();
    let union = run_claim("union-additive", &b).unwrap();
    assert_eq!(union.verdict, Verdict::Holds);
    assert_eq!(union.witness_count, 0);

    let meet = run_claim("intersection-not-preserved", &b).unwrap();
    assert_eq!(meet.expected, Expected::CounterexampleExpected);
    assert!(meet.witnesses.iter().any(|w| w.instance.contains("2Z+1")));

    let char = run_claim("powerset-characterization", &b).unwrap();
    assert!(char.witness_count >= 1);
    assert!(char.matches_expected);

    assert!(run_claim("no-such-claim", &b).is_err());
    assert!(find_claim("monotone").is_ok());
}

#[test]
fn over_limit_bounds_rejected() {
    let b = Bounds { max_order: 40, ..Bounds::default() };
    assert!(run_suite(&b).is_err());
}
