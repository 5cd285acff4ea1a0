//! Rings hosting the anti-ideal machinery: finite rings given by tables,
//! the integers, power-set rings `(2^X, Δ, ∩)` and the piecewise-polynomial
//! model of `C[0,1]`.

use std::fmt;

use num::BigInt;
use serde::Serialize;

use crate::error::{parse_err, Error, Result};
use crate::group::{build_group, strip_braces, FiniteGroup, Subset};
use crate::pwpoly::{describe, parse_function, PwPolyFn};
use crate::text::split_top_level;

/// Exact ring arithmetic over some element type.
pub trait RingOps {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Whether the value is an element of this ring (e.g. an index in range).
    fn contains(&self, a: &Self::Elem) -> bool;

    /// `false` unless multiplication is known to commute.
    fn is_commutative(&self) -> bool {
        false
    }

    fn format(&self, a: &Self::Elem) -> String {
        format!("{a:?}")
    }
}

/// A finite ring given by addition and multiplication tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRing {
    name: String,
    labels: Vec<String>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    neg: Vec<usize>,
    commutative: bool,
}

/// A violated ring axiom with witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "kebab-case")]
pub enum RingAxiomFailure {
    Shape,
    Closure { a: usize, b: usize },
    AddAssociative { a: usize, b: usize, c: usize },
    AddCommutative { a: usize, b: usize },
    AddIdentity,
    AddInverse { a: usize },
    MulAssociative { a: usize, b: usize, c: usize },
    LeftDistributive { a: usize, b: usize, c: usize },
    RightDistributive { a: usize, b: usize, c: usize },
}

/// Checks that `add` makes an abelian group and that `mul` is associative
/// and distributes over `add` on both sides.
pub fn verify_ring(add: &[Vec<usize>], mul: &[Vec<usize>]) -> std::result::Result<usize, RingAxiomFailure> {
    let n = add.len();
    if n == 0 || mul.len() != n || add.iter().chain(mul).any(|r| r.len() != n) {
        return Err(RingAxiomFailure::Shape);
    }
    for a in 0..n {
        for b in 0..n {
            if add[a][b] >= n || mul[a][b] >= n {
                return Err(RingAxiomFailure::Closure { a, b });
            }
        }
    }
    let zero = (0..n).find(|&z| (0..n).all(|x| add[z][x] == x && add[x][z] == x)).ok_or(RingAxiomFailure::AddIdentity)?;
    for a in 0..n {
        if !(0..n).any(|b| add[a][b] == zero) {
            return Err(RingAxiomFailure::AddInverse { a });
        }
        for b in 0..n {
            if add[a][b] != add[b][a] {
                return Err(RingAxiomFailure::AddCommutative { a, b });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if add[add[a][b]][c] != add[a][add[b][c]] {
                    return Err(RingAxiomFailure::AddAssociative { a, b, c });
                }
                if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                    return Err(RingAxiomFailure::MulAssociative { a, b, c });
                }
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] {
                    return Err(RingAxiomFailure::LeftDistributive { a, b, c });
                }
                if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]] {
                    return Err(RingAxiomFailure::RightDistributive { a, b, c });
                }
            }
        }
    }
    Ok(zero)
}

impl FiniteRing {
    pub fn from_tables(name: impl Into<String>, labels: Vec<String>, add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>) -> Result<Self> {
        if labels.len() != add.len() {
            return Err(Error::InvalidArgument("one label per element required".into()));
        }
        let zero = verify_ring(&add, &mul).map_err(|f| Error::InvalidArgument(format!("not a ring: {f:?}")))?;
        let n = add.len();
        let neg = (0..n).map(|a| (0..n).find(|&b| add[a][b] == zero).expect("verified")).collect();
        let commutative = (0..n).all(|a| (0..n).all(|b| mul[a][b] == mul[b][a]));
        Ok(FiniteRing { name: name.into(), labels, add, mul, zero, neg, commutative })
    }

    /// `Z/nZ`.
    pub fn zn(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("Z/0Z is not finite".into()));
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        let add = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let mul = (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect();
        Self::from_tables(format!("zn:{n}"), labels, add, mul)
    }

    /// The power-set ring of a carrier as a table ring; element `i` is the
    /// subset with mask `i`.
    pub fn powerset(p: &PowersetRing) -> Result<Self> {
        let n = p.labels.len();
        if n > 4 {
            return Err(Error::BoundExceeded { what: "power-set ring table carrier", limit: 4, got: n });
        }
        let size = 1usize << n;
        let labels = (0..size).map(|m| p.format(&Subset::from_bits(n, m as u64))).collect();
        let add = (0..size).map(|a| (0..size).map(|b| a ^ b).collect()).collect();
        let mul = (0..size).map(|a| (0..size).map(|b| a & b).collect()).collect();
        Self::from_tables(format!("powerset({})", p.name), labels, add, mul)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn zero_index(&self) -> usize {
        self.zero
    }

    pub fn add_table(&self) -> &[Vec<usize>] {
        &self.add
    }

    pub fn mul_table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn element(&self, label: &str) -> Result<usize> {
        let label = label.trim();
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| parse_err(format!("`{label}` is not an element of {}", self.name)))
    }

    /// Characteristic 2 and every element idempotent.
    pub fn is_boolean(&self) -> bool {
        (0..self.order()).all(|x| self.add[x][x] == self.zero && self.mul[x][x] == x)
    }
}

impl RingOps for FiniteRing {
    type Elem = usize;

    fn zero(&self) -> usize {
        self.zero
    }

    fn add(&self, a: &usize, b: &usize) -> usize {
        self.add[*a][*b]
    }

    fn sub(&self, a: &usize, b: &usize) -> usize {
        self.add[*a][self.neg[*b]]
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.mul[*a][*b]
    }

    fn contains(&self, a: &usize) -> bool {
        *a < self.order()
    }

    fn is_commutative(&self) -> bool {
        self.commutative
    }

    fn format(&self, a: &usize) -> String {
        self.labels.get(*a).cloned().unwrap_or_else(|| format!("#{a}"))
    }
}

/// `(Z, +, ·)` with arbitrary-precision elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IntegerRing;

impl RingOps for IntegerRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::from(0)
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn contains(&self, _: &BigInt) -> bool {
        true
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn format(&self, a: &BigInt) -> String {
        a.to_string()
    }
}

/// `(2^X, Δ, ∩)` over a labelled finite carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowersetRing {
    name: String,
    labels: Vec<String>,
}

impl PowersetRing {
    pub fn over_group(g: &FiniteGroup) -> Self {
        PowersetRing { name: g.name().to_string(), labels: g.labels().to_vec() }
    }

    /// Carrier `{1, .., n}`.
    pub fn numbered(n: usize) -> Self {
        PowersetRing { name: format!("{{1..{n}}}"), labels: (1..=n).map(|i| i.to_string()).collect() }
    }

    pub fn carrier_size(&self) -> usize {
        self.labels.len()
    }

    pub fn parse_subset(&self, text: &str) -> Result<Subset> {
        let mut s = Subset::empty(self.labels.len());
        for item in split_top_level(strip_braces(text)?, ',') {
            let item = item.trim();
            if item.is_empty() {
                continue;
            }
            let i = self
                .labels
                .iter()
                .position(|l| l == item)
                .ok_or_else(|| parse_err(format!("`{item}` is not in the carrier")))?;
            s.insert(i);
        }
        Ok(s)
    }
}

impl RingOps for PowersetRing {
    type Elem = Subset;

    fn zero(&self) -> Subset {
        Subset::empty(self.labels.len())
    }

    fn add(&self, a: &Subset, b: &Subset) -> Subset {
        a.symmetric_difference(b)
    }

    fn sub(&self, a: &Subset, b: &Subset) -> Subset {
        a.symmetric_difference(b)
    }

    fn mul(&self, a: &Subset, b: &Subset) -> Subset {
        a.intersection(b)
    }

    fn contains(&self, a: &Subset) -> bool {
        a.order() == self.labels.len()
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn format(&self, a: &Subset) -> String {
        let items: Vec<&str> = a.iter().map(|i| self.labels[i].as_str()).collect();
        format!("{{{}}}", items.join(","))
    }
}

/// Piecewise-polynomial functions on `[0, 1]` under pointwise operations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PwPolyRing;

impl RingOps for PwPolyRing {
    type Elem = PwPolyFn;

    fn zero(&self) -> PwPolyFn {
        PwPolyFn::zero()
    }

    fn add(&self, a: &PwPolyFn, b: &PwPolyFn) -> PwPolyFn {
        a.add(b)
    }

    fn sub(&self, a: &PwPolyFn, b: &PwPolyFn) -> PwPolyFn {
        a.sub(b)
    }

    fn mul(&self, a: &PwPolyFn, b: &PwPolyFn) -> PwPolyFn {
        a.mul(b)
    }

    fn contains(&self, _: &PwPolyFn) -> bool {
        true
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn format(&self, a: &PwPolyFn) -> String {
        describe(a)
    }
}

/// Any of the supported rings, chosen by a spec string.
#[derive(Clone, Debug)]
pub enum RingAdapter {
    Finite(FiniteRing),
    Integer(IntegerRing),
    Powerset(PowersetRing),
    PwPoly(PwPolyRing),
}

impl RingAdapter {
    pub fn name(&self) -> String {
        match self {
            RingAdapter::Finite(r) => r.name().to_string(),
            RingAdapter::Integer(_) => "int".into(),
            RingAdapter::Powerset(p) => format!("powerset({})", p.name),
            RingAdapter::PwPoly(_) => "pwpoly".into(),
        }
    }
}

/// Ring specs: `zn:4`, `int`, `powerset(cyclic:2)`, `powerset:3` (carrier
/// `{1,2,3}`), `pwpoly`.
pub fn build_ring(spec: &str) -> Result<RingAdapter> {
    let s = spec.trim();
    if s == "int" || s == "Z" {
        return Ok(RingAdapter::Integer(IntegerRing));
    }
    if s == "pwpoly" {
        return Ok(RingAdapter::PwPoly(PwPolyRing));
    }
    if let Some(n) = s.strip_prefix("zn:") {
        let n = n.trim().parse().map_err(|_| parse_err(format!("bad ring order in `{s}`")))?;
        return Ok(RingAdapter::Finite(FiniteRing::zn(n)?));
    }
    if let Some(n) = s.strip_prefix("powerset:") {
        let n: usize = n.trim().parse().map_err(|_| parse_err(format!("bad carrier size in `{s}`")))?;
        if n == 0 || n > 63 {
            return Err(Error::InvalidArgument(format!("carrier size {n} out of range")));
        }
        return Ok(RingAdapter::Powerset(PowersetRing::numbered(n)));
    }
    if let Some(inner) = s.strip_prefix("powerset(").and_then(|r| r.strip_suffix(')')) {
        return Ok(RingAdapter::Powerset(PowersetRing::over_group(&build_group(inner)?)));
    }
    Err(parse_err(format!("unknown ring spec `{s}`")))
}

/// Parses a comma-separated element list for the given ring, e.g.
/// `{3,5,7}` for `int`, `{ {1},{2} }` for power sets, `xa:1/2,ya:1/2`.
pub fn parse_int_elements(text: &str) -> Result<Vec<BigInt>> {
    let t = text.trim();
    let inner = t.strip_prefix('{').and_then(|r| r.strip_suffix('}')).unwrap_or(t);
    inner
        .split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<BigInt>().map_err(|_| parse_err(format!("bad integer `{x}`"))))
        .collect()
}

pub fn parse_finite_elements(r: &FiniteRing, text: &str) -> Result<Vec<usize>> {
    let t = text.trim();
    let inner = t.strip_prefix('{').and_then(|r| r.strip_suffix('}')).unwrap_or(t);
    split_top_level(inner, ',').into_iter().map(|x| r.element(x)).collect()
}

pub fn parse_powerset_elements(p: &PowersetRing, text: &str) -> Result<Vec<Subset>> {
    split_top_level(strip_braces(text)?, ',').into_iter().map(|x| p.parse_subset(x)).collect()
}

pub fn parse_function_elements(text: &str) -> Result<Vec<PwPolyFn>> {
    let t = text.trim();
    let inner = t.strip_prefix('{').and_then(|r| r.strip_suffix('}')).unwrap_or(t);
    split_top_level(inner, ',').into_iter().map(parse_function).collect()
}

/// A verified homomorphism between finite rings.
#[derive(Clone, Debug)]
pub struct RingHom<'a> {
    domain: &'a FiniteRing,
    codomain: &'a FiniteRing,
    map: Vec<usize>,
    bijective: bool,
}

impl<'a> RingHom<'a> {
    pub fn domain(&self) -> &'a FiniteRing {
        self.domain
    }

    pub fn codomain(&self) -> &'a FiniteRing {
        self.codomain
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_isomorphism(&self) -> bool {
        self.bijective
    }
}

/// Checks additivity and multiplicativity; the map need not be unital.
pub fn build_ring_hom<'a>(domain: &'a FiniteRing, codomain: &'a FiniteRing, map: Vec<usize>) -> Result<RingHom<'a>> {
    if map.len() != domain.order() || map.iter().any(|&y| y >= codomain.order()) {
        return Err(Error::NotRingHomomorphism("map is not a total function into the codomain".into()));
    }
    for a in 0..domain.order() {
        for b in 0..domain.order() {
            if map[domain.add[a][b]] != codomain.add[map[a]][map[b]] {
                return Err(Error::NotRingHomomorphism(format!(
                    "not additive: f({a}+{b}) != f({a})+f({b})",
                    a = domain.label(a),
                    b = domain.label(b)
                )));
            }
            if map[domain.mul[a][b]] != codomain.mul[map[a]][map[b]] {
                return Err(Error::NotRingHomomorphism(format!(
                    "not multiplicative: f({a}*{b}) != f({a})*f({b})",
                    a = domain.label(a),
                    b = domain.label(b)
                )));
            }
        }
    }
    let bijective = domain.order() == codomain.order() && {
        let mut seen = vec![false; codomain.order()];
        map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    };
    Ok(RingHom { domain, codomain, map, bijective })
}

pub fn build_ring_iso<'a>(domain: &'a FiniteRing, codomain: &'a FiniteRing, map: Vec<usize>) -> Result<RingHom<'a>> {
    let hom = build_ring_hom(domain, codomain, map)?;
    if !hom.bijective {
        return Err(Error::NotBijective(format!("map {:?} is not a bijection", hom.map)));
    }
    Ok(hom)
}

/// Every ring homomorphism `R -> S` by backtracking over images.
pub fn ring_homomorphisms<'a>(r: &'a FiniteRing, s: &'a FiniteRing) -> Vec<RingHom<'a>> {
    homs_search(r, s, false)
}

/// Every ring isomorphism `R -> S`.
pub fn ring_isomorphisms<'a>(r: &'a FiniteRing, s: &'a FiniteRing) -> Vec<RingHom<'a>> {
    if r.order() != s.order() {
        return Vec::new();
    }
    homs_search(r, s, true)
}

fn homs_search<'a>(r: &'a FiniteRing, s: &'a FiniteRing, injective: bool) -> Vec<RingHom<'a>> {
    let n = r.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; s.order()];
    let mut out = Vec::new();
    fn ok(r: &FiniteRing, s: &FiniteRing, map: &[usize], x: usize) -> bool {
        for y in 0..=x {
            for (a, b) in [(x, y), (y, x)] {
                let sum = r.add[a][b];
                if map[sum] != usize::MAX && map[sum] != s.add[map[a]][map[b]] {
                    return false;
                }
                let prod = r.mul[a][b];
                if map[prod] != usize::MAX && map[prod] != s.mul[map[a]][map[b]] {
                    return false;
                }
            }
        }
        true
    }
    #[allow(clippy::too_many_arguments)]
    fn go<'a>(
        r: &'a FiniteRing,
        s: &'a FiniteRing,
        injective: bool,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        x: usize,
        out: &mut Vec<RingHom<'a>>,
    ) {
        if x == map.len() {
            // every pair was checked once both operands and the result were assigned
            if let Ok(h) = build_ring_hom(r, s, map.clone()) {
                out.push(h);
            }
            return;
        }
        for y in 0..s.order() {
            if injective && used[y] {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if ok(r, s, map, x) {
                go(r, s, injective, map, used, x + 1, out);
            }
            used[y] = false;
        }
        map[x] = usize::MAX;
    }
    go(r, s, injective, &mut map, &mut used, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs() {
        assert!(matches!(build_ring("zn:4").unwrap(), RingAdapter::Finite(r) if r.order() == 4));
        let RingAdapter::Powerset(p) = build_ring("powerset(cyclic:2)").unwrap() else { panic!() };
        let table = FiniteRing::powerset(&p).unwrap();
        assert_eq!(table.order(), 4);
        assert!(table.is_boolean());
        assert!(matches!(build_ring("int").unwrap(), RingAdapter::Integer(_)));
        assert!(build_ring("zn:0").is_err());
        assert!(build_ring("quaternions").is_err());
    }

    #[test]
    fn verify_examples() {
        let z4 = FiniteRing::zn(4).unwrap();
        assert_eq!(verify_ring(z4.add_table(), z4.mul_table()), Ok(0));
        let k4 = FiniteRing::powerset(&PowersetRing::over_group(&FiniteGroup::klein4())).unwrap();
        assert_eq!(verify_ring(k4.add_table(), k4.mul_table()), Ok(0));
        assert!((0..16).all(|x| k4.add(&x, &x) == k4.zero()));
        // mul = "always 1" on Z2 breaks distributivity
        let add = vec![vec![0, 1], vec![1, 0]];
        let mul = vec![vec![1, 1], vec![1, 1]];
        assert!(matches!(
            verify_ring(&add, &mul),
            Err(RingAxiomFailure::LeftDistributive { .. } | RingAxiomFailure::RightDistributive { .. })
        ));
    }

    #[test]
    fn powerset_identities() {
        let p = PowersetRing::numbered(3);
        for a in Subset::all(3) {
            for b in Subset::all(3) {
                assert_eq!(p.sub(&a, &b), a.symmetric_difference(&b));
                let composite = p.add(&p.add(&a, &b), &p.mul(&a, &b));
                assert_eq!(composite, a.union(&b));
            }
        }
    }

    #[test]
    fn isomorphism_examples() {
        let z4 = FiniteRing::zn(4).unwrap();
        assert!(build_ring_iso(&z4, &z4, vec![0, 1, 2, 3]).is_ok());
        let zero = build_ring_hom(&z4, &z4, vec![0; 4]).unwrap();
        assert!(!zero.is_isomorphism());
        assert!(matches!(build_ring_iso(&z4, &z4, vec![0; 4]), Err(Error::NotBijective(_))));

        let p2 = FiniteRing::powerset(&PowersetRing::over_group(&FiniteGroup::cyclic(2).unwrap())).unwrap();
        let complement: Vec<usize> = (0..4).map(|m| m ^ 0b11).collect();
        let err = build_ring_iso(&p2, &p2, complement).unwrap_err();
        assert!(matches!(err, Error::NotRingHomomorphism(ref m) if m.contains("additive")));
        // automorphisms of a Boolean ring are the carrier permutations
        assert_eq!(ring_isomorphisms(&p2, &p2).len(), 2);
        assert_eq!(ring_isomorphisms(&z4, &z4).len(), 1);
        let z2 = FiniteRing::zn(2).unwrap();
        let p1 = FiniteRing::powerset(&PowersetRing::numbered(1)).unwrap();
        assert_eq!(ring_isomorphisms(&z2, &p1).len(), 1);
    }

    #[test]
    fn element_parsing() {
        assert_eq!(parse_int_elements("{3,5,7}").unwrap().len(), 3);
        let p = PowersetRing::numbered(3);
        assert_eq!(parse_powerset_elements(&p, "{ {1,2},{3} }").unwrap().len(), 2);
        assert!(parse_powerset_elements(&p, "{ {4} }").is_err());
        assert_eq!(parse_function_elements("xa:1/2,ya:1/2").unwrap().len(), 2);
    }
}
