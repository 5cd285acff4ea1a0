//! Representation-vs-semantics checks for integer sets: membership in a
//! composed set must equal evaluating the set expression pointwise.

use idealtop_core::int_set::SemilinearSet;
use proptest::prelude::*;

#[derive(Clone, Debug)]
enum Expr {
    Class(i64, u64),
    Finite(Vec<i64>),
    Union(Box<Expr>, Box<Expr>),
    Inter(Box<Expr>, Box<Expr>),
    Diff(Box<Expr>, Box<Expr>),
    Sym(Box<Expr>, Box<Expr>),
    Compl(Box<Expr>),
}

impl Expr {
    fn build(&self) -> SemilinearSet {
        match self {
            Expr::Class(r, m) => SemilinearSet::class(*r, *m).unwrap(),
            Expr::Finite(xs) => SemilinearSet::finite(xs.iter().copied()),
            Expr::Union(a, b) => a.build().union(&b.build()),
            Expr::Inter(a, b) => a.build().intersection(&b.build()),
            Expr::Diff(a, b) => a.build().difference(&b.build()),
            Expr::Sym(a, b) => a.build().symmetric_difference(&b.build()),
            Expr::Compl(a) => a.build().complement(),
        }
    }

    fn eval(&self, n: i64) -> bool {
        match self {
            Expr::Class(r, m) => (n - r).rem_euclid(*m as i64) == 0,
            Expr::Finite(xs) => xs.contains(&n),
            Expr::Union(a, b) => a.eval(n) || b.eval(n),
            Expr::Inter(a, b) => a.eval(n) && b.eval(n),
            Expr::Diff(a, b) => a.eval(n) && !b.eval(n),
            Expr::Sym(a, b) => a.eval(n) != b.eval(n),
            Expr::Compl(a) => !a.eval(n),
        }
    }
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (-10i64..10, 1u64..7).prop_map(|(r, m)| Expr::Class(r, m)),
        prop::collection::vec(-15i64..15, 0..5).prop_map(Expr::Finite),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Union(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Inter(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Diff(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sym(Box::new(a), Box::new(b))),
            inner.prop_map(|a| Expr::Compl(Box::new(a))),
        ]
    })
}

fn sample_points(s: &SemilinearSet) -> Vec<i64> {
    let l = 3 * (s.modulus() as i64).max(1) * 60;
    let mut pts: Vec<i64> = (-l..=l).collect();
    pts.extend([1_000_000, -1_000_000, 999_999, -999_999]);
    pts
}

proptest! {
    #[test]
    fn membership_matches_expression(e in expr()) {
        let s = e.build();
        for n in sample_points(&s) {
            prop_assert_eq!(s.contains(n), e.eval(n), "n = {}, set = {}", n, s);
        }
    }

    #[test]
    fn normal_form_is_canonical(a in expr(), b in expr()) {
        // (a \ b) | (a & b) denotes a; evaluating it must give a's normal form
        let sa = a.build();
        let sb = b.build();
        let rebuilt = sa.difference(&sb).union(&sa.intersection(&sb));
        prop_assert_eq!(&rebuilt, &sa);
        prop_assert_eq!(sa.clone().complement().complement(), sa.clone());
        prop_assert_eq!(sa.is_finite(), sa.residues().is_empty());
    }

    #[test]
    fn display_parses_back(e in expr()) {
        let s = e.build();
        let reparsed: SemilinearSet = s.to_string().parse().unwrap();
        prop_assert_eq!(reparsed, s);
    }

    #[test]
    fn scaling_is_pointwise_image(e in expr(), k in -4i64..5) {
        let s = e.build();
        let img = s.scale(k);
        for n in -200i64..200 {
            let expected = if k == 0 { n == 0 && !s.is_empty() } else { n % k == 0 && s.contains(n / k) };
            prop_assert_eq!(img.contains(n), expected, "n = {}", n);
        }
    }
}
