//! Quadratics `ax² + bx + c` seeded by a Pythagorean triple, and exact
//! analysis of any integer quadratic: roots, vertex, definite integrals.
//!
//! With a leg `a` and hypotenuse `ψ` the coefficients are `(a, 2aψ, a³)`.
//! The discriminant is then `(2a·other)²`, so both roots `-ψ ± other` are
//! integers.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{int_str, isqrt_exact, Int, Rat};
use crate::triples::is_pythagorean;

/// `y = ax² + bx + c` with integer coefficients and `a != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadPoly {
    #[serde(with = "int_str")]
    a: Int,
    #[serde(with = "int_str")]
    b: Int,
    #[serde(with = "int_str")]
    c: Int,
}

impl QuadPoly {
    pub fn new(a: Int, b: Int, c: Int) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        Ok(QuadPoly { a, b, c })
    }

    pub fn a(&self) -> &Int {
        &self.a
    }

    pub fn b(&self) -> &Int {
        &self.b
    }

    pub fn c(&self) -> &Int {
        &self.c
    }

    pub fn coefficients(&self) -> [&Int; 3] {
        [&self.a, &self.b, &self.c]
    }

    /// `-q(-x)`: negates the leading and constant coefficients.
    pub fn mirrored(&self) -> QuadPoly {
        QuadPoly {
            a: -&self.a,
            b: self.b.clone(),
            c: -&self.c,
        }
    }

    pub fn discriminant(&self) -> Int {
        &self.b * &self.b - Int::from(4) * &self.a * &self.c
    }
}

impl fmt::Display for QuadPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x^2 + {}x + {}", self.a, self.b, self.c)
    }
}

/// Sign convention for [`build_quadratic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// `(leg, 2·leg·hyp, leg³)`, opening upwards.
    Positive,
    /// The mirror `q̃(x) = -q(-x)`, i.e. `(-leg, 2·leg·hyp, -leg³)`.
    /// Roots, vertex and root-to-root integral all flip sign.
    Negative,
}

/// Builds the quadratic for a triple leg and its hypotenuse.
///
/// Requires `0 < leg < hyp` and `hyp² - leg²` a perfect square. Primitivity
/// is not required.
pub fn build_quadratic(leg: &Int, hyp: &Int, orientation: Orientation) -> Result<QuadPoly> {
    if !leg.is_positive() || !hyp.is_positive() {
        return Err(Error::NonPositiveSide {
            leg: leg.clone(),
            hyp: hyp.clone(),
        });
    }
    if leg >= hyp {
        return Err(Error::BadOrder {
            leg: leg.clone(),
            hyp: hyp.clone(),
        });
    }
    isqrt_exact(&(hyp * hyp - leg * leg)).map_err(|_| Error::NotATripleLeg {
        leg: leg.clone(),
        hyp: hyp.clone(),
    })?;
    let q = QuadPoly {
        a: leg.clone(),
        b: Int::from(2) * leg * hyp,
        c: leg * leg * leg,
    };
    Ok(match orientation {
        Orientation::Positive => q,
        Orientation::Negative => q.mirrored(),
    })
}

/// Exact roots of a quadratic.
///
/// For distinct roots `x1 = (-b + √D) / 2a` and `x2 = (-b - √D) / 2a`; when
/// `a > 0` that makes `x1` the right-hand root. Irrational and complex roots
/// are reported by kind only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RootPair {
    TwoDistinct { x1: Rat, x2: Rat },
    Double { x: Rat },
    IrrationalOrComplex,
}

impl RootPair {
    pub fn x1(&self) -> Option<&Rat> {
        match self {
            RootPair::TwoDistinct { x1, .. } => Some(x1),
            RootPair::Double { x } => Some(x),
            RootPair::IrrationalOrComplex => None,
        }
    }

    pub fn x2(&self) -> Option<&Rat> {
        match self {
            RootPair::TwoDistinct { x2, .. } => Some(x2),
            RootPair::Double { x } => Some(x),
            RootPair::IrrationalOrComplex => None,
        }
    }

    /// `(smaller, larger)` root, when rational.
    pub fn interval(&self) -> Option<(&Rat, &Rat)> {
        let (x1, x2) = (self.x1()?, self.x2()?);
        Some(if x1 <= x2 { (x1, x2) } else { (x2, x1) })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            RootPair::TwoDistinct { .. } => "two-distinct",
            RootPair::Double { .. } => "double",
            RootPair::IrrationalOrComplex => "irrational-or-complex",
        }
    }

    /// Both roots negated, as produced by the mirror `-q(-x)`.
    pub fn negated(&self) -> RootPair {
        match self {
            RootPair::TwoDistinct { x1, x2 } => RootPair::TwoDistinct { x1: -x1, x2: -x2 },
            RootPair::Double { x } => RootPair::Double { x: -x },
            RootPair::IrrationalOrComplex => RootPair::IrrationalOrComplex,
        }
    }

    /// Both roots as integers, if they are.
    pub fn as_ints(&self) -> Option<(Int, Int)> {
        Some((self.x1()?.to_int()?, self.x2()?.to_int()?))
    }
}

pub fn solve_quadratic(q: &QuadPoly) -> RootPair {
    let disc = q.discriminant();
    if disc.is_negative() {
        return RootPair::IrrationalOrComplex;
    }
    let Ok(s) = isqrt_exact(&disc) else {
        return RootPair::IrrationalOrComplex;
    };
    let two_a = Int::from(2) * &q.a;
    let root = |num: Int| Rat::new(num, two_a.clone()).expect("a != 0");
    if s.is_zero() {
        RootPair::Double { x: root(-&q.b) }
    } else {
        RootPair::TwoDistinct {
            x1: root(-&q.b + &s),
            x2: root(-&q.b - &s),
        }
    }
}

/// Roots `(-hyp + other, -hyp - other)` read straight off the triple.
pub fn roots_via_triple(leg: &Int, other: &Int, hyp: &Int) -> Result<RootPair> {
    if !is_pythagorean(leg, other, hyp) {
        return Err(Error::NotPythagorean {
            a: leg.clone(),
            b: other.clone(),
            c: hyp.clone(),
        });
    }
    Ok(RootPair::TwoDistinct {
        x1: Rat::from_int(other - hyp),
        x2: Rat::from_int(-hyp - other),
    })
}

/// `q'(x) = 2a·x + b`, as `(slope, intercept)`.
pub fn derivative(q: &QuadPoly) -> (Int, Int) {
    (Int::from(2) * &q.a, q.b.clone())
}

/// Critical point `(-b / 2a, q(-b / 2a))`.
pub fn vertex(q: &QuadPoly) -> (Rat, Rat) {
    let x = Rat::new(-&q.b, Int::from(2) * &q.a).expect("a != 0");
    let y = evaluate(q, &x);
    (x, y)
}

pub fn evaluate(q: &QuadPoly, x: &Rat) -> Rat {
    let a = Rat::from(&q.a);
    let b = Rat::from(&q.b);
    let c = Rat::from(&q.c);
    &(&(&a * x) + &b) * x + c
}

/// `∫_lo^hi q(x) dx` via the antiderivative `(a/3)x³ + (b/2)x² + cx`.
pub fn integrate(q: &QuadPoly, lo: &Rat, hi: &Rat) -> Rat {
    let a3 = Rat::new(q.a.clone(), Int::from(3)).expect("nonzero");
    let b2 = Rat::new(q.b.clone(), Int::from(2)).expect("nonzero");
    let c = Rat::from(&q.c);
    let antiderivative = |x: &Rat| &(&(&(&a3 * x) + &b2) * x + &c) * x;
    antiderivative(hi) - antiderivative(lo)
}

/// The definite integral split by term: quadratic, linear and constant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Breakdown {
    pub p1: Rat,
    pub p2: Rat,
    pub p3: Rat,
}

impl Breakdown {
    pub fn total(&self) -> Rat {
        &(&self.p1 + &self.p2) + &self.p3
    }

    pub fn all_integral(&self) -> bool {
        self.p1.is_integer() && self.p2.is_integer() && self.p3.is_integer()
    }
}

pub fn integral_breakdown(q: &QuadPoly, lo: &Rat, hi: &Rat) -> Breakdown {
    let p1 = Rat::new(q.a.clone(), Int::from(3)).expect("nonzero") * (hi.cube() - lo.cube());
    let p2 = Rat::new(q.b.clone(), Int::from(2)).expect("nonzero") * (hi.square() - lo.square());
    let p3 = Rat::from(&q.c) * (hi - lo);
    Breakdown { p1, p2, p3 }
}

/// Signed integral from the smaller root to the larger one, when both are rational.
pub fn root_to_root_integral(q: &QuadPoly) -> Option<Rat> {
    let roots = solve_quadratic(q);
    let (lo, hi) = roots.interval()?;
    Some(integrate(q, lo, hi))
}

/// Everything known about one quadratic.
///
/// The integral fields are `None` when the roots are not rational.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub poly: QuadPoly,
    pub roots: RootPair,
    pub vertex_x: Rat,
    pub vertex_y: Rat,
    #[serde(with = "int_str")]
    pub discriminant: Int,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub integral_signed: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub integral_abs: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub breakdown: Option<Breakdown>,
}

pub fn analyze(q: &QuadPoly) -> AnalysisReport {
    let roots = solve_quadratic(q);
    let (vertex_x, vertex_y) = vertex(q);
    let (integral_signed, breakdown) = match roots.interval() {
        Some((lo, hi)) => (Some(integrate(q, lo, hi)), Some(integral_breakdown(q, lo, hi))),
        None => (None, None),
    };
    AnalysisReport {
        poly: q.clone(),
        discriminant: q.discriminant(),
        integral_abs: integral_signed.as_ref().map(Rat::abs),
        integral_signed,
        breakdown,
        roots,
        vertex_x,
        vertex_y,
    }
}
