//! Registry of claims about local functions, closures and anti-ideals, each
//! bound to an exhaustive or sampled check over small instances.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};

mod anti_claims;
mod local_claims;
mod universe;

pub use universe::{test_groups, test_ideals, test_rings};

/// What the claim asserts: a law, or the existence of a counterexample.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expected {
    Holds,
    CounterexampleExpected,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    CounterexampleFound,
}

/// One instance where the checked property failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub instance: String,
    pub detail: String,
}

/// Instance-space limits for a run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Largest group order in the finite sweeps; 0 disables every claim.
    pub max_order: usize,
    /// Groups up to this order get every ideal; larger ones get samples.
    pub full_ideal_order: usize,
    pub ideal_samples: usize,
    pub seed: u64,
    /// Carrier size for the power-set characterization scan.
    pub anti_universe: usize,
    /// Largest anti-ideal (and scanned family) size.
    pub anti_family: usize,
    /// Largest group order for anti-local sweeps.
    pub anti_group_order: usize,
    /// Largest `n` for the `Z/nZ` test rings.
    pub ring_order: usize,
    pub max_witnesses: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_order: 6,
            full_ideal_order: 4,
            ideal_samples: 200,
            seed: 0x5eed,
            anti_universe: 3,
            anti_family: 3,
            anti_group_order: 4,
            ring_order: 6,
            max_witnesses: 5,
        }
    }
}

impl Bounds {
    /// Bounds under which no claim runs.
    pub fn empty() -> Self {
        Bounds {
            max_order: 0,
            full_ideal_order: 0,
            ideal_samples: 0,
            seed: 0,
            anti_universe: 0,
            anti_family: 0,
            anti_group_order: 0,
            ring_order: 0,
            max_witnesses: 0,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.max_order == 0
    }

    pub fn validate(&self) -> Result<()> {
        let checks: [(&'static str, usize, usize); 6] = [
            ("max order", self.max_order, crate::group::DEFAULT_SUBGROUP_BOUND),
            ("full ideal order", self.full_ideal_order, crate::ideal::ENUMERATION_BOUND),
            ("anti universe", self.anti_universe, crate::anti::SCAN_CARRIER_BOUND),
            ("anti family size", self.anti_family, crate::anti::ENUMERATION_SIZE_BOUND),
            ("anti group order", self.anti_group_order, 4),
            ("ring order", self.ring_order, 8),
        ];
        for (what, got, limit) in checks {
            if got > limit {
                return Err(Error::BoundExceeded { what, limit, got });
            }
        }
        Ok(())
    }
}

/// Collects instance counts, witnesses and notes while a check runs.
#[derive(Debug)]
pub struct Tally {
    instances: u64,
    witness_count: u64,
    witnesses: Vec<Witness>,
    notes: Vec<String>,
    limit: usize,
}

impl Tally {
    fn new(limit: usize) -> Self {
        Tally { instances: 0, witness_count: 0, witnesses: Vec::new(), notes: Vec::new(), limit }
    }

    pub(crate) fn instance(&mut self) {
        self.instances += 1;
    }

    /// Counts one instance and records a witness when `ok` is false.
    pub(crate) fn check(&mut self, ok: bool, instance: impl FnOnce() -> String, detail: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.witness(instance(), detail());
        }
    }

    pub(crate) fn witness(&mut self, instance: String, detail: String) {
        self.witness_count += 1;
        if self.witnesses.len() < self.limit {
            self.witnesses.push(Witness { instance, detail });
        }
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }
}

type Check = fn(&Bounds, &mut Tally) -> Result<()>;

/// A registered claim.
#[derive(Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    /// The claim in symbols.
    pub statement: &'static str,
    /// Which instances are swept.
    pub quantifier: &'static str,
    pub expected: Expected,
    check: Check,
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Claim").field("id", &self.id).field("expected", &self.expected).finish()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub id: &'static str,
    pub statement: &'static str,
    pub quantifier: &'static str,
    pub expected: Expected,
    pub verdict: Verdict,
    pub matches_expected: bool,
    pub instances: u64,
    pub witness_count: u64,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub runtime: Duration,
}

const fn claim(id: &'static str, statement: &'static str, quantifier: &'static str, expected: Expected, check: Check) -> Claim {
    Claim { id, statement, quantifier, expected, check }
}

use Expected::{CounterexampleExpected as Cex, Holds};

static REGISTRY: &[Claim] = &[
    claim("power-set-ring-ideals", "Kuratowski ideals on 2^G are exactly the ring ideals of (2^G, Δ, ∩)", "every family of subsets of a carrier of size ≤ 3", Holds, local_claims::ring_ideal_equivalence),
    claim("example-klein-local", "K4, I = {∅,{c},{e},{e,c}}, A = {e,a}: a ∈ A^∝, e ∉ A^∝, A^∝ = {a} is not a subgroup", "fixed instance", Holds, local_claims::example_klein),
    claim("example-evens-local", "Z, I_fin: (2Z)^∝ = Z∖{0}, not a subgroup", "fixed instance", Holds, local_claims::example_evens),
    claim("example-finite-sets-vanish", "Z, I_fin: finite A with |A| > 2 has A^∝ = ∅", "every A ⊆ [-4,4] with |A| > 2, plus curated sets; |A| ≤ 2 reported in notes", Holds, local_claims::example_finite),
    claim("cyclic-criterion", "g ∈ A^∝ iff <g> ∩ A ∉ I", "test groups, test ideals, all A", Holds, local_claims::cyclic_criterion),
    claim("power-closure", "g ∈ A^∝ implies g^n ∈ A^∝", "test groups, test ideals, all A, all g ∈ A^∝ and n", Cex, local_claims::power_closure),
    claim("monotone", "A ⊆ B implies A^∝ ⊆ B^∝", "test groups, test ideals, all A ⊆ B", Holds, local_claims::monotone),
    claim("union-additive", "(A ∪ B)^∝ = A^∝ ∪ B^∝", "test groups, test ideals, all A, B", Holds, local_claims::union_additive),
    claim("ideal-order-reversing", "I ⊆ J implies A^∝(J) ⊆ A^∝(I)", "test groups, pairs of test ideals, all A", Holds, local_claims::ideal_order_reversing),
    claim("intersection-not-preserved", "(A ∩ B)^∝ ≠ A^∝ ∩ B^∝ in general", "test groups, test ideals, all A, B; Z evens/odds", Cex, local_claims::intersection_not_preserved),
    claim("example-evens-odds", "Z, I_fin: (2Z)^∝ ∩ (2Z+1)^∝ = 2Z+1 while (2Z ∩ (2Z+1))^∝ = ∅", "fixed instance", Holds, local_claims::example_evens_odds),
    claim("avoid-identity-subgroup", "I = {S : e ∉ S}: A^∝ is a subgroup iff A^∝ = G", "test groups, all A", Holds, local_claims::avoid_identity),
    claim("identity-membership", "{e} ∈ I implies e ∉ A^∝; I = {∅}: e ∈ A implies A^∝ = G, e ∉ A implies e ∉ A^∝", "test groups, test ideals, all A", Holds, local_claims::identity_membership),
    claim("image-ideal", "f(I) = {f(S) : S ∈ I} is an ideal", "test groups, all endomorphisms f, test ideals", Holds, local_claims::image_ideal_claim),
    claim("image-inclusion", "f(A^∝(I)) ⊆ f(A)^∝(f(I))", "test groups, all endomorphisms f, test ideals, all A; Z with n ↦ 2n", Cex, local_claims::image_inclusion),
    claim("example-doubling-map", "Z, f(n) = 2n, A = 2Z, I_fin: f(A^∝) = 2Z∖{0} ⊊ (4Z)^∝(f(I_fin)) = Z∖{0}", "fixed instance", Holds, local_claims::example_doubling),
    claim("injective-image-equality", "f injective implies f(A^∝(I)) = f(A)^∝(f(I))", "test groups, injective endomorphisms, test ideals, all A; Z with n ↦ 2n", Cex, local_claims::injective_equality),
    claim("kernel-local", "{e} ∉ I implies (ker f)^∝ = G", "test groups, all endomorphisms f, test ideals", Holds, local_claims::kernel_local),
    claim("absorption", "(A ∪ S)^∝ = A^∝ = (A ∖ S)^∝ for S ∈ I", "test groups, test ideals, all A and S ∈ I", Holds, local_claims::absorption),
    claim("contraction", "(A^∝)^∝ ⊆ A^∝", "test groups, test ideals, all A", Holds, local_claims::contraction),
    claim("kuratowski-closure", "ζ(A) = A ∪ A^∝ satisfies the Kuratowski closure axioms", "test groups, test ideals, all A, B", Holds, local_claims::kuratowski),
    claim("induced-topology", "{H : ζ(G∖H) = G∖H} is a topology", "test groups, test ideals", Holds, local_claims::induced_topology),
    claim("example-integer-anti-ideals", "in Z: singletons, {3,5} and {3,5,7} are anti-ideals", "fixed instances, singletons {k} for 0 < |k| ≤ 12", Holds, anti_claims::example_integers),
    claim("example-hinge-anti-ideals", "in C[0,1]: {x_a, y_a} is an anti-ideal", "a ∈ {1/4, 1/3, 1/2, 2/3, 3/4}", Holds, anti_claims::example_hinges),
    claim("powerset-characterization", "A family is an anti-ideal of 2^G iff it has no proper inclusions and no member unions", "all families of nonempty subsets up to the scan bounds", Cex, anti_claims::powerset_characterization),
    claim("homomorphic-image-anti-ideal", "f(aI) need not be an anti-ideal for a ring homomorphism f", "all homomorphisms between test rings, enumerated anti-ideals", Cex, anti_claims::homomorphic_image),
    claim("example-zero-map", "the zero map sends every nonempty anti-ideal to {0}, which is not an anti-ideal", "C[0,1] hinges and every test ring", Holds, anti_claims::example_zero_map),
    claim("isomorphic-image-anti-ideal", "f(aI) is an anti-ideal for a ring isomorphism f", "all isomorphisms between test rings, enumerated anti-ideals", Holds, anti_claims::isomorphic_image),
    claim("example-z4-anti-local-empty", "Z4, aI = {{1}}, A = {1,2}: A^{a∝} = ∅", "fixed instance, every semantics", Holds, anti_claims::example_z4_empty),
    claim("example-z-anti-local", "Z, aI = {{0}}, A = {0,1}: A^{a∝} = Z∖{-1,0,1}", "fixed instance, cyclic-global-identity semantics", Holds, anti_claims::example_z_anti_local),
    claim("anti-local-family-monotone", "aI ⊆ aJ implies A^{a∝}(aI) ⊆ A^{a∝}(aJ)", "anti test groups, enumerated anti-ideals, all A, every semantics", Holds, anti_claims::family_monotone),
    claim("anti-local-not-monotone", "A ⊆ B need not give A^{a∝} ⊆ B^{a∝}", "anti test groups, enumerated anti-ideals, all A ⊆ B, every semantics; curated Z sets", Cex, anti_claims::not_monotone),
    claim("example-z4-non-monotone", "Z4, aI = {{0},{2}}: {0}^{a∝} = Z4 and {0,2}^{a∝} = ∅", "fixed instance, stated and cyclic-global-identity semantics", Holds, anti_claims::example_z4_non_monotone),
    claim("anti-local-union", "(A ∪ B)^{a∝} ≠ A^{a∝} ∪ B^{a∝} in general", "anti test groups, enumerated anti-ideals, all A, B, every semantics; curated Z sets", Cex, anti_claims::union_fails),
    claim("example-anti-local-union", "Z: {0,1}^{a∝}({{0,1}}) = {-1,0,1} and {0,2}^{a∝}({{0}}) = Z∖{-2,..,2}", "fixed instances, cyclic-global-identity semantics", Holds, anti_claims::example_union),
    claim("anti-local-intersection", "(A ∩ B)^{a∝} ≠ A^{a∝} ∩ B^{a∝} in general", "anti test groups, enumerated anti-ideals, all A, B, every semantics; curated Z sets", Cex, anti_claims::intersection_fails),
    claim("example-anti-local-intersection", "Z, aI = {{0}}: {0}^{a∝} = Z but {0,1}^{a∝} ∩ {0,2}^{a∝} = Z∖{-2,..,2}", "fixed instance, cyclic-global-identity semantics", Holds, anti_claims::example_intersection),
    claim("anti-local-absorption", "A^{a∝}, (A ∖ S)^{a∝}, (A ∪ S)^{a∝} differ in general for S ∈ aI", "anti test groups, enumerated anti-ideals, all A and members S, every semantics; curated Z sets", Cex, anti_claims::absorption_fails),
    claim("example-anti-local-absorption", "Z, aI = {{0},{2}}: {0,2}^{a∝} = Z∖{-2,..,2}, {2}^{a∝} = {-2,..,2}", "fixed instance, cyclic-global-identity semantics", Holds, anti_claims::example_absorption),
    claim("anti-local-image", "f(A^{a∝}(aI)) ≠ f(A)^{a∝}(aI) in general", "anti test groups, all endomorphisms, enumerated anti-ideals, all A, every semantics; Z with n ↦ 2n", Cex, anti_claims::image_fails),
    claim("example-anti-local-image", "Z, f(n) = 2n, aI = {{0}}, A = {0,1}: f(A^{a∝}) = 2Z∖{-2,0,2}, f(A)^{a∝} = Z∖{-2,..,2}", "fixed instance, cyclic-global-identity semantics", Holds, anti_claims::example_image),
];

/// Every registered claim in suite order.
pub fn claims() -> &'static [Claim] {
    REGISTRY
}

pub fn find_claim(id: &str) -> Result<&'static Claim> {
    REGISTRY.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

fn execute(c: &Claim, bounds: &Bounds) -> Result<Report> {
    let start = Instant::now();
    let mut tally = Tally::new(bounds.max_witnesses);
    (c.check)(bounds, &mut tally)?;
    let verdict = if tally.witness_count == 0 { Verdict::Holds } else { Verdict::CounterexampleFound };
    let matches_expected = matches!(
        (c.expected, verdict),
        (Expected::Holds, Verdict::Holds) | (Expected::CounterexampleExpected, Verdict::CounterexampleFound)
    );
    Ok(Report {
        id: c.id,
        statement: c.statement,
        quantifier: c.quantifier,
        expected: c.expected,
        verdict,
        matches_expected,
        instances: tally.instances,
        witness_count: tally.witness_count,
        witnesses: tally.witnesses,
        notes: tally.notes,
        runtime: start.elapsed(),
    })
}

pub fn run_claim(id: &str, bounds: &Bounds) -> Result<Report> {
    bounds.validate()?;
    execute(find_claim(id)?, bounds)
}

/// Runs every claim, in parallel, and returns the reports in registry order.
/// Empty bounds give no reports.
pub fn run_suite(bounds: &Bounds) -> Result<Vec<Report>> {
    bounds.validate()?;
    if bounds.is_empty() {
        return Ok(Vec::new());
    }
    let results: Vec<Result<Report>> = std::thread::scope(|s| {
        let handles: Vec<_> = REGISTRY.iter().map(|c| s.spawn(move || execute(c, bounds))).collect();
        handles.into_iter().map(|h| h.join().expect("claim check panicked")).collect()
    });
    results.into_iter().collect()
}

/// `true` when every report matches its expected status.
pub fn all_as_expected(reports: &[Report]) -> bool {
    reports.iter().all(|r| r.matches_expected)
}
