//! The local function `A^∝(I)`.
//!
//! `g ∈ A^∝` when every subgroup containing `g` meets `A` outside the
//! ideal. Because ideals are hereditary it is enough to test the smallest
//! such subgroup, `<g>`; [`local_fn`] does that, [`local_fn_oracle`] keeps
//! the quantifier over all subgroups for cross-checking.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Homomorphism, Subset};
use crate::ideal::{image_ideal, Ambient, AmbientSet, FiniteIdeal, IntIdeal, SetIdeal};
use crate::int_set::{cyclic_subgroup, stabilized_set, SemilinearSet};

/// `{g : <g> ∩ A ∉ I}`.
pub fn local_fn(g: &FiniteGroup, a: &Subset, ideal: &FiniteIdeal) -> Subset {
    Subset::from_indices(
        g.order(),
        (0..g.order()).filter(|&x| !ideal.contains(&g.cyclic_subgroup(x).intersection(a))),
    )
}

/// `{g : H ∩ A ∉ I for every subgroup H ∋ g}`, by enumerating subgroups.
pub fn local_fn_oracle(g: &FiniteGroup, a: &Subset, ideal: &FiniteIdeal) -> Result<Subset> {
    let subgroups = g.all_subgroups()?;
    Ok(Subset::from_indices(
        g.order(),
        (0..g.order()).filter(|&x| {
            subgroups.iter().filter(|h| h.contains(x)).all(|h| !ideal.contains(&h.intersection(a)))
        }),
    ))
}

/// The local function on `(Z, +)`.
///
/// For `|g|` beyond every constant that `A` and the ideal mention,
/// `<g> ∩ A` is either infinite or equal to `{0} ∩ A`, and which one
/// depends only on `gcd(g, m)` for `m` the modulus of `A`. So the answer is
/// periodic mod `m` outside a finite window, which is evaluated pointwise.
pub fn local_fn_int(a: &SemilinearSet, ideal: &IntIdeal) -> SemilinearSet {
    let window = a.exception_bound().max(ideal.constant_bound());
    stabilized_set(a.modulus(), window, |g| !ideal.contains(&cyclic_subgroup(g).intersection(a)))
}

pub fn local_fn_any(ambient: &Ambient, a: &AmbientSet, ideal: &SetIdeal) -> Result<AmbientSet> {
    match (ambient, a, ideal) {
        (Ambient::Finite(g), AmbientSet::Finite(s), SetIdeal::Finite(i))
            if s.order() == g.order() && i.order() == g.order() =>
        {
            Ok(AmbientSet::Finite(local_fn(g, s, i)))
        }
        (Ambient::Integers, AmbientSet::Integers(s), SetIdeal::Integers(i)) => {
            Ok(AmbientSet::Integers(local_fn_int(s, i)))
        }
        _ => Err(Error::AmbientMismatch("group, set and ideal must share one ambient".into())),
    }
}

/// One row of a local-function trace: the set `<g> ∩ A` and its ideal verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    /// An element, or on `Z` a residue-class description such as `|g|>3, g≡1 mod 2`.
    pub element: String,
    pub cyclic_meet: String,
    pub in_ideal: bool,
    pub in_local: bool,
}

/// Per-element trace on a finite group; on `Z` one row per window element
/// plus one row per residue class beyond the window.
pub fn local_trace(ambient: &Ambient, a: &AmbientSet, ideal: &SetIdeal) -> Result<Vec<TraceStep>> {
    match (ambient, a, ideal) {
        (Ambient::Finite(g), AmbientSet::Finite(s), SetIdeal::Finite(i)) if s.order() == g.order() => {
            Ok((0..g.order())
                .map(|x| {
                    let meet = g.cyclic_subgroup(x).intersection(s);
                    let in_ideal = i.contains(&meet);
                    TraceStep {
                        element: g.label(x).to_string(),
                        cyclic_meet: g.format_subset(&meet),
                        in_ideal,
                        in_local: !in_ideal,
                    }
                })
                .collect())
        }
        (Ambient::Integers, AmbientSet::Integers(s), SetIdeal::Integers(i)) => {
            let window = s.exception_bound().max(i.constant_bound());
            let row = |label: String, g: i64| {
                let meet = cyclic_subgroup(g).intersection(s);
                let in_ideal = i.contains(&meet);
                TraceStep { element: label, cyclic_meet: meet.to_string(), in_ideal, in_local: !in_ideal }
            };
            let m = s.modulus() as i64;
            let mut rows: Vec<TraceStep> = (-window..=window).map(|g| row(g.to_string(), g)).collect();
            for c in 0..m {
                let rep = window + 1 + (c - window - 1).rem_euclid(m);
                rows.push(row(format!("|g|>{window}, g≡{c} mod {m} (as g={rep})"), rep));
            }
            Ok(rows)
        }
        _ => Err(Error::AmbientMismatch("group, set and ideal must share one ambient".into())),
    }
}

/// How two sets compare under inclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Inclusion {
    Equal,
    /// Left side strictly contained in the right.
    ProperSubset,
    ProperSuperset,
    Incomparable,
}

impl Inclusion {
    fn of(left_in_right: bool, right_in_left: bool) -> Self {
        match (left_in_right, right_in_left) {
            (true, true) => Inclusion::Equal,
            (true, false) => Inclusion::ProperSubset,
            (false, true) => Inclusion::ProperSuperset,
            (false, false) => Inclusion::Incomparable,
        }
    }

    /// Left ⊆ right.
    pub fn is_inclusion(self) -> bool {
        matches!(self, Inclusion::Equal | Inclusion::ProperSubset)
    }
}

/// Both sides of the homomorphism comparison `f(A^∝(I))` vs `(f(A))^∝(f(I))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageData<S> {
    pub image_of_local: S,
    pub local_of_image: S,
    pub relation: Inclusion,
}

pub fn local_fn_image_data(f: &Homomorphism<'_>, a: &Subset, ideal: &FiniteIdeal) -> ImageData<Subset> {
    let lhs = f.image_subset(&local_fn(f.domain(), a, ideal));
    let rhs = local_fn(f.codomain(), &f.image_subset(a), &image_ideal(f, ideal));
    ImageData { relation: Inclusion::of(lhs.is_subset(&rhs), rhs.is_subset(&lhs)), image_of_local: lhs, local_of_image: rhs }
}

/// The comparison on `Z` for `f(n) = kn`. The image of the finiteness
/// ideal is taken to be the finite subsets of `kZ`.
pub fn local_fn_image_data_int(k: i64, a: &SemilinearSet, ideal: &IntIdeal) -> Result<ImageData<SemilinearSet>> {
    let image_ideal = ideal.scale(k)?;
    let lhs = local_fn_int(a, ideal).scale(k);
    let rhs = local_fn_int(&a.scale(k), &image_ideal);
    Ok(ImageData { relation: Inclusion::of(lhs.is_subset(&rhs), rhs.is_subset(&lhs)), image_of_local: lhs, local_of_image: rhs })
}
