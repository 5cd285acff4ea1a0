use serde::Serialize;

use idealtop_core::anti::{
    anti_local_any, check_anti_ideal, equivalence_scan, AntiFamily, AntiSemantics, MismatchRecord,
    PairMode,
};
use idealtop_core::error::{Error, Result};
use idealtop_core::ideal::{format_ideal, ideal_contains, Ambient, AmbientSet, SetIdeal};
use idealtop_core::lab::{self, Bounds, Report};
use idealtop_core::local::{local_fn_any, local_trace, TraceStep};
use idealtop_core::pwpoly::{describe, parse_function, parse_rational, PwPolyFn};
use idealtop_core::ring::build_ring;
use idealtop_core::topology::{closure, closure_int, topology_from_ideal, verify_kuratowski, verify_topology};
use idealtop_core::{build_group, FiniteGroup};

use crate::render::{emit, Format};
use crate::{AntiCommand, Command, PwpolyCommand};

/// Largest group for which `topology` scans all `2^|G|` subsets.
const TOPOLOGY_ORDER_LIMIT: usize = 16;
/// Largest group for which `topology` also checks the closure axioms.
const KURATOWSKI_ORDER_LIMIT: usize = 8;

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::UnknownClaim(_) => 2,
        _ => 1,
    }
}

/// Output text and exit code.
pub fn run(cmd: &Command, format: Format) -> Result<(String, u8)> {
    let out = match cmd {
        Command::Group(a) => emit(format, "group", &group(&a.group, a.table)?),
        Command::Ideal(a) => emit(format, "ideal", &ideal(&a.group, &a.ideal, a.set.as_deref())?),
        Command::Localfn(a) => emit(format, "localfn", &localfn(&a.group, &a.ideal, &a.set)?),
        Command::Closure(a) => emit(format, "closure", &closure_cmd(&a.group, &a.ideal, &a.set)?),
        Command::Topology(a) => emit(format, "topology", &topology(&a.group, &a.ideal)?),
        Command::Anti(AntiCommand::Check { ring, set, strict_pairs }) => {
            let r = build_ring(ring)?;
            emit(format, "anti-check", &check_anti_ideal(&r, set, mode(*strict_pairs))?)
        }
        Command::Anti(AntiCommand::Local { group, family, set, semantics }) => {
            emit(format, "anti-local", &anti_local(group, family, set, semantics)?)
        }
        Command::Anti(AntiCommand::Scan { universe, max_family, strict_pairs }) => {
            emit(format, "anti-scan", &scan(*universe, *max_family, mode(*strict_pairs))?)
        }
        Command::Pwpoly(PwpolyCommand::Eval { function, at }) => emit(format, "pwpoly-eval", &eval(function, at)?),
        Command::Pwpoly(PwpolyCommand::Dump { function, points }) => {
            emit(format, "pwpoly-dump", &dump(function, *points)?)
        }
        Command::Verify(a) => {
            if a.list {
                return Ok((emit(format, "verify-list", &list()), 0));
            }
            let mut bounds = Bounds::default();
            if let Some(n) = a.max_order {
                bounds.max_order = n;
            }
            if let Some(s) = a.seed {
                bounds.seed = s;
            }
            if let Some(s) = a.samples {
                bounds.ideal_samples = s;
            }
            if let Some(w) = a.max_witnesses {
                bounds.max_witnesses = w;
            }
            let v = verify(&a.claim, bounds)?;
            let code = if v.all_as_expected { 0 } else { 1 };
            return Ok((emit(format, "verify", &v), code));
        }
    };
    Ok((out, 0))
}

fn mode(strict: bool) -> PairMode {
    if strict {
        PairMode::StrictPairs
    } else {
        PairMode::IncludeEqual
    }
}

fn finite_only(ambient: &Ambient, what: &str) -> Result<FiniteGroup> {
    match ambient {
        Ambient::Finite(g) => Ok(g.clone()),
        Ambient::Integers => Err(Error::Unsupported(format!("{what} needs a finite group"))),
    }
}

fn ideal_text(ambient: &Ambient, ideal: &SetIdeal) -> String {
    match (ambient, ideal) {
        (Ambient::Finite(g), SetIdeal::Finite(i)) => format_ideal(g, i),
        (_, SetIdeal::Integers(i)) => i.to_string(),
        (Ambient::Integers, SetIdeal::Finite(_)) => unreachable!("parsed against the ambient"),
    }
}

#[derive(Serialize)]
struct ElementRow {
    element: String,
    order: usize,
    inverse: String,
}

#[derive(Serialize)]
struct GroupOut {
    group: String,
    order: usize,
    identity: String,
    elements: Vec<ElementRow>,
    /// `None` when the group is too large to enumerate.
    subgroups: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    table: Option<Vec<Vec<String>>>,
}

fn group(spec: &str, with_table: bool) -> Result<GroupOut> {
    let g = build_group(spec)?;
    let elements = (0..g.order())
        .map(|x| ElementRow {
            element: g.label(x).into(),
            order: g.element_order(x),
            inverse: g.label(g.inverse(x)).into(),
        })
        .collect();
    let subgroups = g.all_subgroups().ok().map(|hs| hs.iter().map(|h| g.format_subset(h)).collect());
    let table = with_table.then(|| {
        (0..g.order()).map(|x| (0..g.order()).map(|y| g.label(g.compose(x, y)).to_string()).collect()).collect()
    });
    Ok(GroupOut {
        group: g.name().into(),
        order: g.order(),
        identity: g.label(g.identity()).into(),
        elements,
        subgroups,
        table,
    })
}

#[derive(Serialize)]
struct IdealOut {
    group: String,
    ideal: String,
    /// Every member on a finite group; `None` on `Z`.
    members: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    set: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    contains: Option<bool>,
}

fn ideal(group: &str, text: &str, set: Option<&str>) -> Result<IdealOut> {
    let ambient = Ambient::parse(group)?;
    let ideal = ambient.parse_ideal(text)?;
    let members = match (&ambient, &ideal) {
        (Ambient::Finite(g), SetIdeal::Finite(i)) => {
            check_scan_order(g)?;
            Some(i.to_family().members().iter().map(|s| g.format_subset(s)).collect())
        }
        _ => None,
    };
    let (set, contains) = match set {
        Some(s) => {
            let parsed = ambient.parse_set(s)?;
            (Some(ambient.format_set(&parsed)), Some(ideal_contains(&ideal, &parsed)?))
        }
        None => (None, None),
    };
    Ok(IdealOut { group: ambient.name(), ideal: ideal_text(&ambient, &ideal), members, set, contains })
}

#[derive(Serialize)]
struct LocalOut {
    group: String,
    ideal: String,
    set: String,
    local: String,
    trace: Vec<TraceStep>,
}

fn localfn(group: &str, ideal: &str, set: &str) -> Result<LocalOut> {
    let ambient = Ambient::parse(group)?;
    let ideal = ambient.parse_ideal(ideal)?;
    let a = ambient.parse_set(set)?;
    let local = local_fn_any(&ambient, &a, &ideal)?;
    Ok(LocalOut {
        group: ambient.name(),
        ideal: ideal_text(&ambient, &ideal),
        set: ambient.format_set(&a),
        local: ambient.format_set(&local),
        trace: local_trace(&ambient, &a, &ideal)?,
    })
}

#[derive(Serialize)]
struct ClosureOut {
    group: String,
    ideal: String,
    set: String,
    local: String,
    closure: String,
    closed: bool,
}

fn closure_cmd(group: &str, ideal: &str, set: &str) -> Result<ClosureOut> {
    let ambient = Ambient::parse(group)?;
    let ideal = ambient.parse_ideal(ideal)?;
    let a = ambient.parse_set(set)?;
    let local = local_fn_any(&ambient, &a, &ideal)?;
    let zeta = match (&ambient, &a, &ideal) {
        (Ambient::Finite(g), AmbientSet::Finite(s), SetIdeal::Finite(i)) => AmbientSet::Finite(closure(g, s, i)),
        (Ambient::Integers, AmbientSet::Integers(s), SetIdeal::Integers(i)) => AmbientSet::Integers(closure_int(s, i)),
        _ => return Err(Error::AmbientMismatch("group, set and ideal must share one ambient".into())),
    };
    Ok(ClosureOut {
        group: ambient.name(),
        ideal: ideal_text(&ambient, &ideal),
        set: ambient.format_set(&a),
        local: ambient.format_set(&local),
        closed: zeta == a,
        closure: ambient.format_set(&zeta),
    })
}

fn check_scan_order(g: &FiniteGroup) -> Result<()> {
    if g.order() > TOPOLOGY_ORDER_LIMIT {
        return Err(Error::BoundExceeded { what: "subset scan order", limit: TOPOLOGY_ORDER_LIMIT, got: g.order() });
    }
    Ok(())
}

#[derive(Serialize)]
struct TopologyOut {
    group: String,
    ideal: String,
    open_count: usize,
    discrete: bool,
    is_topology: bool,
    /// Closure-axiom violations; `None` above the check limit.
    kuratowski_violations: Option<usize>,
    opens: Vec<String>,
}

fn topology(group: &str, ideal: &str) -> Result<TopologyOut> {
    let ambient = Ambient::parse(group)?;
    let g = finite_only(&ambient, "topology")?;
    check_scan_order(&g)?;
    let parsed = ambient.parse_ideal(ideal)?;
    let SetIdeal::Finite(i) = &parsed else { unreachable!("finite ambient") };
    let t = topology_from_ideal(&g, i);
    Ok(TopologyOut {
        group: g.name().into(),
        ideal: format_ideal(&g, i),
        open_count: t.opens().len(),
        discrete: t.is_discrete(),
        is_topology: verify_topology(&t).is_ok(),
        kuratowski_violations: (g.order() <= KURATOWSKI_ORDER_LIMIT).then(|| verify_kuratowski(&g, i).len()),
        opens: t.opens().iter().map(|s| g.format_subset(s)).collect(),
    })
}

#[derive(Serialize)]
struct SemanticsRow {
    semantics: &'static str,
    result: Option<String>,
    error: Option<String>,
}

#[derive(Serialize)]
struct AntiLocalOut {
    group: String,
    family: String,
    set: String,
    results: Vec<SemanticsRow>,
}

fn anti_local(group: &str, family: &str, set: &str, semantics: &str) -> Result<AntiLocalOut> {
    let ambient = Ambient::parse(group)?;
    let fam = AntiFamily::parse(&ambient, family)?;
    let a = ambient.parse_set(set)?;
    let chosen: Vec<AntiSemantics> =
        if semantics.trim() == "all" { AntiSemantics::ALL.to_vec() } else { vec![semantics.parse()?] };
    let results = chosen
        .into_iter()
        .map(|sem| match anti_local_any(&ambient, &a, &fam, sem) {
            Ok(r) => Ok(SemanticsRow { semantics: sem.as_str(), result: Some(ambient.format_set(&r)), error: None }),
            // a bound on one semantics should not hide the others
            Err(e @ Error::BoundExceeded { .. }) => {
                Ok(SemanticsRow { semantics: sem.as_str(), result: None, error: Some(e.to_string()) })
            }
            Err(e) => Err(e),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AntiLocalOut { group: ambient.name(), family: fam.format(&ambient), set: ambient.format_set(&a), results })
}

#[derive(Serialize)]
struct ScanOut {
    universe: usize,
    max_family: usize,
    mode: PairMode,
    mismatch_count: usize,
    mismatches: Vec<MismatchRecord>,
}

fn scan(universe: usize, max_family: usize, mode: PairMode) -> Result<ScanOut> {
    let mismatches = equivalence_scan(universe, max_family, mode)?;
    Ok(ScanOut { universe, max_family, mode, mismatch_count: mismatches.len(), mismatches })
}

/// `f*g*...` with each factor a function literal.
fn parse_product(text: &str) -> Result<PwPolyFn> {
    let mut factors = text.split('*').map(parse_function);
    let first = factors.next().expect("split yields at least one item")?;
    factors.try_fold(first, |acc, f| Ok(acc.mul(&f?)))
}

#[derive(Serialize)]
struct Sample {
    t: String,
    value: String,
}

#[derive(Serialize)]
struct EvalOut {
    function: String,
    values: Vec<Sample>,
}

fn eval(function: &str, at: &[String]) -> Result<EvalOut> {
    let f = parse_product(function)?;
    let values = at
        .iter()
        .map(|t| {
            let t = parse_rational(t)?;
            Ok(Sample { value: f.eval(&t)?.to_string(), t: t.to_string() })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EvalOut { function: describe(&f), values })
}

#[derive(Serialize)]
struct Piece {
    from: String,
    to: String,
    poly: String,
}

#[derive(Serialize)]
struct DumpOut {
    function: String,
    is_zero: bool,
    pieces: Vec<Piece>,
    samples: Vec<Sample>,
}

fn dump(function: &str, points: usize) -> Result<DumpOut> {
    let f = parse_product(function)?;
    let b = f.breakpoints();
    let pieces = f
        .pieces()
        .iter()
        .enumerate()
        .map(|(i, p)| Piece { from: b[i].to_string(), to: b[i + 1].to_string(), poly: p.to_string() })
        .collect();
    let samples =
        f.sample(points).into_iter().map(|(t, v)| Sample { t: t.to_string(), value: v.to_string() }).collect();
    Ok(DumpOut { function: describe(&f), is_zero: f.is_zero(), pieces, samples })
}

#[derive(Serialize)]
struct ClaimRow {
    id: &'static str,
    expected: lab::Expected,
    statement: &'static str,
}

#[derive(Serialize)]
struct ListOut {
    claims: Vec<ClaimRow>,
}

fn list() -> ListOut {
    ListOut {
        claims: lab::claims()
            .iter()
            .map(|c| ClaimRow { id: c.id, expected: c.expected, statement: c.statement })
            .collect(),
    }
}

#[derive(Serialize)]
struct VerifyOut {
    bounds: Bounds,
    claim_count: usize,
    as_expected: usize,
    all_as_expected: bool,
    claims: Vec<Report>,
}

fn verify(ids: &[String], bounds: Bounds) -> Result<VerifyOut> {
    bounds.validate()?;
    let reports = if ids.is_empty() {
        lab::run_suite(&bounds)?
    } else {
        ids.iter().map(|id| lab::run_claim(id, &bounds)).collect::<Result<Vec<_>>>()?
    };
    Ok(VerifyOut {
        claim_count: reports.len(),
        as_expected: reports.iter().filter(|r| r.matches_expected).count(),
        all_as_expected: lab::all_as_expected(&reports),
        bounds,
        claims: reports,
    })
}
