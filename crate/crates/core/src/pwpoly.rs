//! Exact continuous piecewise-polynomial functions on `[0, 1]`.
//!
//! Enough of `C[0,1]` to decide ring identities among the hinge functions
//! `x_a`, `y_a` and their sums and products without sampling.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{parse_err, Error, Result};

pub type Rational = BigRational;

/// Polynomial in `t` with ascending coefficients and no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly(Vec<Rational>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    fn zip_with(&self, other: &Poly, op: impl Fn(&Rational, &Rational) -> Rational) -> Poly {
        let n = self.0.len().max(other.0.len());
        let zero = Rational::zero();
        Poly::new(
            (0..n)
                .map(|i| op(self.0.get(i).unwrap_or(&zero), other.0.get(i).unwrap_or(&zero)))
                .collect(),
        )
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// A continuous function on `[0, 1]` given by polynomial pieces between
/// strictly increasing rational breakpoints `0 = b_0 < ... < b_k = 1`.
///
/// Adjacent pieces with equal polynomials are merged, so two functions are
/// equal exactly when their representations are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PwPolyFn {
    breaks: Vec<Rational>,
    pieces: Vec<Poly>,
}

impl PwPolyFn {
    /// Validates breakpoints and continuity, then canonicalizes.
    pub fn new(breaks: Vec<Rational>, pieces: Vec<Poly>) -> Result<Self> {
        if breaks.len() < 2 || pieces.len() != breaks.len() - 1 {
            return Err(Error::InvalidArgument("need k+1 breakpoints for k pieces".into()));
        }
        if !breaks[0].is_zero() || !breaks[breaks.len() - 1].is_one() {
            return Err(Error::InvalidArgument("breakpoints must start at 0 and end at 1".into()));
        }
        if breaks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument("breakpoints must be strictly increasing".into()));
        }
        for (i, b) in breaks.iter().enumerate().skip(1).take(pieces.len() - 1) {
            if pieces[i - 1].eval(b) != pieces[i].eval(b) {
                return Err(Error::InvalidArgument(format!("discontinuous at t = {b}")));
            }
        }
        Ok(Self::canonical(breaks, pieces))
    }

    fn canonical(breaks: Vec<Rational>, pieces: Vec<Poly>) -> Self {
        let mut out_breaks = vec![breaks[0].clone()];
        let mut out_pieces: Vec<Poly> = Vec::new();
        for (i, p) in pieces.into_iter().enumerate() {
            if out_pieces.last() == Some(&p) {
                *out_breaks.last_mut().expect("nonempty") = breaks[i + 1].clone();
            } else {
                out_pieces.push(p);
                out_breaks.push(breaks[i + 1].clone());
            }
        }
        PwPolyFn { breaks: out_breaks, pieces: out_pieces }
    }

    pub fn zero() -> Self {
        Self::constant(Rational::zero())
    }

    pub fn constant(c: Rational) -> Self {
        PwPolyFn { breaks: vec![Rational::zero(), Rational::one()], pieces: vec![Poly::new(vec![c])] }
    }

    /// `x_a(t) = 0` on `[0, a]`, `t - a` on `[a, 1]`.
    pub fn hinge_right(a: &Rational) -> Result<Self> {
        check_open_unit(a)?;
        Self::new(
            vec![Rational::zero(), a.clone(), Rational::one()],
            vec![Poly::zero(), Poly::new(vec![-a.clone(), Rational::one()])],
        )
    }

    /// `y_a(t) = a - t` on `[0, a]`, `0` on `[a, 1]`.
    pub fn hinge_left(a: &Rational) -> Result<Self> {
        check_open_unit(a)?;
        Self::new(
            vec![Rational::zero(), a.clone(), Rational::one()],
            vec![Poly::new(vec![a.clone(), -Rational::one()]), Poly::zero()],
        )
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breaks
    }

    pub fn pieces(&self) -> &[Poly] {
        &self.pieces
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.len() == 1 && self.pieces[0].is_zero()
    }

    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        if t.is_negative() || t > &Rational::one() {
            return Err(Error::InvalidArgument(format!("t = {t} is outside [0, 1]")));
        }
        let i = self.breaks[1..].iter().position(|b| t <= b).expect("t <= 1");
        Ok(self.pieces[i].eval(t))
    }

    fn piece_at(&self, lo: &Rational, hi: &Rational) -> &Poly {
        // the open interval (lo, hi) lies inside exactly one piece
        let i = self.breaks[1..].iter().position(|b| hi <= b).expect("hi <= 1");
        debug_assert!(&self.breaks[i] <= lo);
        &self.pieces[i]
    }

    fn combine(&self, other: &Self, op: impl Fn(&Poly, &Poly) -> Poly) -> Self {
        let mut breaks: Vec<Rational> = self.breaks.iter().chain(&other.breaks).cloned().collect();
        breaks.sort();
        breaks.dedup();
        let pieces = breaks
            .windows(2)
            .map(|w| op(self.piece_at(&w[0], &w[1]), other.piece_at(&w[0], &w[1])))
            .collect();
        Self::canonical(breaks, pieces)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, Poly::add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, Poly::sub)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.combine(other, Poly::mul)
    }

    pub fn neg(&self) -> Self {
        Self::zero().sub(self)
    }

    /// `(t, f(t))` at `points` equally spaced parameters `i / (points - 1)`.
    pub fn sample(&self, points: usize) -> Vec<(Rational, Rational)> {
        let denom = BigInt::from(points.saturating_sub(1).max(1));
        (0..points)
            .map(|i| {
                let t = Rational::new(BigInt::from(i), denom.clone());
                let v = self.eval(&t).expect("sample point in [0, 1]");
                (t, v)
            })
            .collect()
    }
}

fn check_open_unit(a: &Rational) -> Result<()> {
    if a.is_positive() && a < &Rational::one() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("parameter a = {a} must lie in (0, 1)")))
    }
}

impl fmt::Display for PwPolyFn {
    /// `[0,1/2]: 0; [1/2,1]: -1/2 + 1*t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pieces
            .iter()
            .enumerate()
            .map(|(i, p)| format!("[{},{}]: {}", self.breaks[i], self.breaks[i + 1], p))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let r = match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| parse_err(format!("bad rational `{s}`")))?;
            let d: BigInt = d.trim().parse().map_err(|_| parse_err(format!("bad rational `{s}`")))?;
            if d.is_zero() {
                return Err(parse_err(format!("zero denominator in `{s}`")));
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(s.parse().map_err(|_| parse_err(format!("bad rational `{s}`")))?),
    };
    Ok(r)
}

/// Function literals: `xa:1/2`, `ya:1/4`, `zero`, `const:3/2`.
pub fn parse_function(s: &str) -> Result<PwPolyFn> {
    let s = s.trim();
    if s == "zero" || s == "0" {
        return Ok(PwPolyFn::zero());
    }
    let (kind, arg) = s.split_once(':').ok_or_else(|| parse_err(format!("unknown function literal `{s}`")))?;
    let a = parse_rational(arg)?;
    match kind.trim() {
        "xa" | "x" => PwPolyFn::hinge_right(&a),
        "ya" | "y" => PwPolyFn::hinge_left(&a),
        "const" => Ok(PwPolyFn::constant(a)),
        other => Err(parse_err(format!("unknown function kind `{other}`"))),
    }
}

/// Short name for reports: the literal when recognizable, else the pieces.
pub fn describe(f: &PwPolyFn) -> String {
    if f.is_zero() {
        return "zero".into();
    }
    if f.pieces.len() == 2 {
        let a = &f.breaks[1];
        if PwPolyFn::hinge_right(a).is_ok_and(|x| &x == f) {
            return format!("xa:{a}");
        }
        if PwPolyFn::hinge_left(a).is_ok_and(|y| &y == f) {
            return format!("ya:{a}");
        }
    }
    f.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn hinge_values() {
        let half = q("1/2");
        let x = PwPolyFn::hinge_right(&half).unwrap();
        let y = PwPolyFn::hinge_left(&half).unwrap();
        assert_eq!(x.eval(&q("1")).unwrap(), half);
        assert_eq!(y.eval(&q("0")).unwrap(), half);
        for a in ["1/4", "1/2", "3/4"] {
            assert!(PwPolyFn::hinge_right(&q(a)).unwrap().eval(&q(a)).unwrap().is_zero());
            assert!(PwPolyFn::hinge_left(&q(a)).unwrap().eval(&q(a)).unwrap().is_zero());
        }
        assert!(PwPolyFn::hinge_right(&q("0")).is_err());
        assert!(PwPolyFn::hinge_left(&q("1")).is_err());
        assert!(x.eval(&q("3/2")).is_err());
    }

    #[test]
    fn arithmetic() {
        let half = q("1/2");
        let x = PwPolyFn::hinge_right(&half).unwrap();
        let y = PwPolyFn::hinge_left(&half).unwrap();
        assert!(x.mul(&y).is_zero());
        assert!(x.sub(&x).is_zero());
        let s = x.add(&y);
        assert_eq!(s.eval(&q("0")).unwrap(), half);
        assert_eq!(s.eval(&q("1")).unwrap(), half);
        assert!(s.eval(&half).unwrap().is_zero());
        // |t - 1/2| is not one of the hinges
        assert_ne!(s, x);
        assert_ne!(s, y);
        let sq = x.mul(&x);
        assert_eq!(sq.pieces()[1].degree(), Some(2));
        assert_eq!(sq.eval(&q("1")).unwrap(), q("1/4"));
    }

    #[test]
    fn canonical_merging() {
        let f = PwPolyFn::new(
            vec![q("0"), q("1/3"), q("1")],
            vec![Poly::new(vec![q("1")]), Poly::new(vec![q("1")])],
        )
        .unwrap();
        assert_eq!(f, PwPolyFn::constant(q("1")));
        let x = PwPolyFn::hinge_right(&q("1/3")).unwrap();
        let y = PwPolyFn::hinge_left(&q("1/3")).unwrap();
        // x - y = t - 1/3 everywhere
        assert_eq!(x.sub(&y).pieces().len(), 1);
    }

    #[test]
    fn construction_errors() {
        assert!(PwPolyFn::new(vec![q("0"), q("1")], vec![]).is_err());
        assert!(PwPolyFn::new(vec![q("0"), q("1/2"), q("1")], vec![Poly::zero(), Poly::new(vec![q("1")])]).is_err());
        assert!(PwPolyFn::new(vec![q("0"), q("1/2"), q("1/2"), q("1")], vec![Poly::zero(); 3]).is_err());
        assert!(PwPolyFn::new(vec![q("1/4"), q("1")], vec![Poly::zero()]).is_err());
    }

    #[test]
    fn literals() {
        assert_eq!(describe(&parse_function("xa:1/2").unwrap()), "xa:1/2");
        assert_eq!(describe(&parse_function("ya:3/4").unwrap()), "ya:3/4");
        assert_eq!(describe(&parse_function("zero").unwrap()), "zero");
        assert!(parse_function("za:1/2").is_err());
        assert!(parse_rational("1/0").is_err());
        let pts = parse_function("xa:1/2").unwrap().sample(3);
        assert_eq!(pts, vec![(q("0"), q("0")), (q("1/2"), q("0")), (q("1"), q("1/2"))]);
    }
}
