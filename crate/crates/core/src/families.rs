//! Quadratic families: the scaled `(3, 4, 5)` family indexed by `n >= 0`
//! and the Fibonacci-window families `f` and `g` indexed by `i >= 1`.
//!
//! For a window `F(i)..F(i+3)` with triple `(α, β, γ)`:
//!
//! * `f` uses leg `α = F(i)·F(i+3)`; its roots are
//!   `θ = (-(F(i+1) - F(i+2))², -(F(i+1) + F(i+2))²)`.
//! * `g` uses leg `β = 2·F(i+1)·F(i+2)`; its roots are `(-γ + α, -γ - α)`.
//!
//! Both root-to-root integrals equal `-(4/3)·leg·other³`, and 3 divides
//! `α·β` because every window holds a multiple of 3.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fibonacci::{fib_window, mod3_witness, FibWindow};
use crate::numeric::{int_str, Int, Rat};
use crate::oracle::{root_check, simpson_exact};
use crate::quadratic::{
    analyze, build_quadratic, derivative, integral_breakdown, integrate, solve_quadratic,
    Orientation, QuadPoly, RootPair,
};
use crate::report::{Counterexample, VerificationReport};
use crate::triples::{triple_from_window, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    F,
    G,
}

impl Flavor {
    pub const BOTH: [Flavor; 2] = [Flavor::F, Flavor::G];
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::F => "f",
            Flavor::G => "g",
        })
    }
}

impl FromStr for Flavor {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "f" => Ok(Flavor::F),
            "g" => Ok(Flavor::G),
            _ => Err(format!("unknown flavor {s:?}, expected f or g")),
        }
    }
}

/// A family member together with its closed-form roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyPoly {
    pub window: FibWindow,
    pub flavor: Flavor,
    pub poly: QuadPoly,
    pub closed_roots: RootPair,
}

impl FamilyPoly {
    /// The triple this member was built from, with the chosen leg first.
    pub fn triple(&self) -> Triple {
        let t = triple_from_window(&self.window).expect("window index >= 1");
        match self.flavor {
            Flavor::F => t,
            Flavor::G => t.swapped(),
        }
    }
}

fn checked_window(i: u64) -> Result<FibWindow> {
    if i == 0 {
        return Err(Error::DegenerateWindow);
    }
    Ok(fib_window(i))
}

/// Coefficients written directly in terms of the window.
fn window_poly(w: &FibWindow, flavor: Flavor) -> QuadPoly {
    let (f0, f1, f2, f3) = (w.term(0), w.term(1), w.term(2), w.term(3));
    let gamma = f1 * f1 + f2 * f2;
    let (a, b, c) = match flavor {
        Flavor::F => {
            let alpha = f0 * f3;
            let b = Int::from(2) * &alpha * &gamma;
            let c = alpha.pow(3);
            (alpha, b, c)
        }
        Flavor::G => {
            let prod = f1 * f2;
            let a = Int::from(2) * &prod;
            let b = Int::from(4) * &prod * &gamma;
            let c = Int::from(8) * prod.pow(3);
            (a, b, c)
        }
    };
    QuadPoly::new(a, b, c).expect("leading coefficient of a window poly is positive for i >= 1")
}

fn theta_of(w: &FibWindow) -> RootPair {
    let (f1, f2) = (w.term(1), w.term(2));
    let d = f1 - f2;
    let s = f1 + f2;
    RootPair::TwoDistinct {
        x1: Rat::from_int(-(&d * &d)),
        x2: Rat::from_int(-(&s * &s)),
    }
}

fn phi_of(w: &FibWindow) -> RootPair {
    let (f0, f1, f2, f3) = (w.term(0), w.term(1), w.term(2), w.term(3));
    let gamma = f1 * f1 + f2 * f2;
    let alpha = f0 * f3;
    RootPair::TwoDistinct {
        x1: Rat::from_int(&alpha - &gamma),
        x2: Rat::from_int(-gamma - alpha),
    }
}

/// Roots of `f` for window `i`.
pub fn theta_roots(i: u64) -> Result<RootPair> {
    Ok(theta_of(&checked_window(i)?))
}

/// Roots of `g` for window `i`. Named after the symbol used for them, not
/// the Fibonacci terms.
pub fn phi_roots(i: u64) -> Result<RootPair> {
    Ok(phi_of(&checked_window(i)?))
}

pub fn build_family(i: u64, flavor: Flavor) -> Result<FamilyPoly> {
    let window = checked_window(i)?;
    let poly = window_poly(&window, flavor);
    let closed_roots = match flavor {
        Flavor::F => theta_of(&window),
        Flavor::G => phi_of(&window),
    };
    Ok(FamilyPoly {
        window,
        flavor,
        poly,
        closed_roots,
    })
}

pub fn build_f(i: u64) -> Result<FamilyPoly> {
    build_family(i, Flavor::F)
}

pub fn build_g(i: u64) -> Result<FamilyPoly> {
    build_family(i, Flavor::G)
}

/// `-(4/3)·leg·other³`, the root-to-root integral of a triple quadratic.
pub fn closed_form_integral(leg: &Int, other: &Int) -> Rat {
    Rat::new(Int::from(-4) * leg * other.pow(3), Int::from(3)).expect("nonzero")
}

/// Which coefficient a [`Fault`] perturbs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coefficient {
    A,
    B,
    C,
}

/// A deliberate corruption of one family polynomial, used to prove the
/// claim sweeps can fail.
///
/// The fault adds `delta` to one coefficient of the `flavor` member at
/// `index` (window index `i` for the Fibonacci families, `n` for the scaled
/// `(3, 4, 5)` family).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fault {
    pub flavor: Flavor,
    pub index: u64,
    pub coefficient: Coefficient,
    pub delta: i64,
}

impl Fault {
    /// Returns `poly`, perturbed if this fault targets `(flavor, index)`.
    pub fn apply(&self, flavor: Flavor, index: u64, poly: QuadPoly) -> Result<QuadPoly> {
        if self.flavor != flavor || self.index != index {
            return Ok(poly);
        }
        let delta = Int::from(self.delta);
        let [a, b, c] = poly.coefficients().map(Clone::clone);
        match self.coefficient {
            Coefficient::A => QuadPoly::new(a + delta, b, c),
            Coefficient::B => QuadPoly::new(a, b + delta, c),
            Coefficient::C => QuadPoly::new(a, b, c + delta),
        }
    }
}

/// Parses `FLAVOR:INDEX:COEFF:DELTA`, e.g. `g:7:b:-1`.
impl FromStr for Fault {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [flavor, index, coeff, delta] = parts.as_slice() else {
            return Err(format!("fault {s:?} is not FLAVOR:INDEX:COEFF:DELTA"));
        };
        let coefficient = match *coeff {
            "a" => Coefficient::A,
            "b" => Coefficient::B,
            "c" => Coefficient::C,
            other => return Err(format!("unknown coefficient {other:?}")),
        };
        let delta: i64 = delta.parse().map_err(|e| format!("bad delta: {e}"))?;
        if delta == 0 {
            return Err("fault delta must be non-zero".into());
        }
        Ok(Fault {
            flavor: flavor.parse()?,
            index: index.parse().map_err(|e| format!("bad index: {e}"))?,
            coefficient,
            delta,
        })
    }
}

fn apply_fault(fault: Option<&Fault>, flavor: Flavor, index: u64, poly: QuadPoly) -> Result<QuadPoly> {
    match fault {
        Some(f) => f.apply(flavor, index, poly),
        None => Ok(poly),
    }
}

/// All checks for one Fibonacci family member.
fn check_member(i: u64, flavor: Flavor, fault: Option<&Fault>) -> Vec<Counterexample> {
    let ce = |reason: String| Counterexample::new(reason).with("i", i).with("flavor", flavor);
    let member = match build_family(i, flavor) {
        Ok(m) => m,
        Err(e) => return vec![ce(e.to_string())],
    };
    let poly = match apply_fault(fault, flavor, i, member.poly.clone()) {
        Ok(p) => p,
        Err(e) => return vec![ce(format!("mutated polynomial rejected: {e}"))],
    };
    let mut found = Vec::new();

    let triple = member.triple();
    let (leg, other, hyp) = (triple.leg_a(), triple.leg_b(), triple.hyp());
    match build_quadratic(leg, hyp, Orientation::Positive) {
        Ok(expected) if expected == poly => {}
        Ok(expected) => found.push(ce(format!("coefficients {poly} differ from {expected}"))),
        Err(e) => found.push(ce(format!("triple leg rejected: {e}"))),
    }

    let solved = solve_quadratic(&poly);
    if solved != member.closed_roots {
        found.push(ce(format!(
            "solver roots {solved:?} differ from closed form {:?}",
            member.closed_roots
        )));
    }
    for root in [member.closed_roots.x1(), member.closed_roots.x2()].into_iter().flatten() {
        if !root_check(&poly, root) {
            found.push(ce(format!("closed-form root {root} is not a root")));
        }
    }

    let Some((lo, hi)) = member.closed_roots.interval() else {
        return found;
    };
    let integral = integrate(&poly, lo, hi);
    if !integral.is_integer() {
        found.push(ce(format!("root-to-root integral {integral} is not an integer")));
    }
    let parts = integral_breakdown(&poly, lo, hi);
    for (name, p) in [("P1", &parts.p1), ("P2", &parts.p2), ("P3", &parts.p3)] {
        if !p.is_integer() {
            found.push(ce(format!("{name} = {p} is not an integer")));
        }
    }
    if parts.total() != integral {
        found.push(ce("P1 + P2 + P3 differs from the integral".into()));
    }
    let closed = closed_form_integral(leg, other);
    if integral != closed {
        found.push(ce(format!("integral {integral} differs from -(4/3)·leg·other³ = {closed}")));
    }
    let simpson = simpson_exact(&poly, lo, hi);
    if simpson != integral {
        found.push(ce(format!("Simpson oracle gives {simpson}, antiderivative gives {integral}")));
    }
    if let Err(e) = mod3_witness(&member.window) {
        found.push(ce(e.to_string()));
    }
    if !(leg * other % Int::from(3)).is_zero() {
        found.push(ce("3 does not divide leg·other".into()));
    }
    found
}

/// Sweeps `1 <= i <= i_max`: both root-to-root integrals are integers, each
/// of P1, P2, P3 is integral, and the closed-form roots match the solver.
pub fn verify_window_integrals(i_max: u64) -> VerificationReport {
    verify_window_integrals_with(i_max, None)
}

pub fn verify_window_integrals_with(i_max: u64, fault: Option<&Fault>) -> VerificationReport {
    VerificationReport::timed("theorem3", format!("i in 1..={i_max}"), || {
        (1..=i_max)
            .into_par_iter()
            .flat_map_iter(|i| Flavor::BOTH.into_iter().flat_map(move |fl| check_member(i, fl, fault)))
            .collect()
    })
}

/// One row of the scaled `(3k, 4k, 5k)` family table, `k = n + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyRow {
    pub n: u64,
    pub flavor: Flavor,
    #[serde(with = "int_str")]
    pub a: Int,
    #[serde(with = "int_str")]
    pub b: Int,
    #[serde(with = "int_str")]
    pub c: Int,
    pub x1: Rat,
    pub x2: Rat,
    pub vx: Rat,
    pub vy: Rat,
    pub integral_abs: Rat,
    /// `4⁴(n+1)⁴` for `f`, `12²(n+1)⁴` for `g`.
    #[serde(with = "int_str")]
    pub closed_form: Int,
    /// Roots, vertex and integral all equal their closed forms.
    pub matches: bool,
}

/// The scaled base-triple member: leg `3k` for `f`, `4k` for `g`, hypotenuse `5k`.
pub fn scaled_family_poly(n: u64, flavor: Flavor) -> QuadPoly {
    let k = Int::from(n + 1);
    let leg = match flavor {
        Flavor::F => Int::from(3) * &k,
        Flavor::G => Int::from(4) * &k,
    };
    build_quadratic(&leg, &(Int::from(5) * &k), Orientation::Positive)
        .expect("scaled (3, 4, 5) legs are valid")
}

/// Closed forms for the scaled family as `(x1, x2, vertex_y, |integral|)`.
fn scaled_closed_forms(n: u64, flavor: Flavor) -> (Int, Int, Int, Int) {
    let k = Int::from(n + 1);
    let k3 = k.pow(3);
    let k4 = k.pow(4);
    match flavor {
        Flavor::F => (-k.clone(), Int::from(-9) * &k, Int::from(-4 * 12) * k3, Int::from(4).pow(4) * k4),
        Flavor::G => (Int::from(-2) * &k, Int::from(-8) * &k, Int::from(-3 * 12) * k3, Int::from(12).pow(2) * k4),
    }
}

fn row_for(n: u64, flavor: Flavor, poly: QuadPoly) -> Option<FamilyRow> {
    let report = analyze(&poly);
    let (x1, x2) = (report.roots.x1()?.clone(), report.roots.x2()?.clone());
    let (cx1, cx2, cvy, cint) = scaled_closed_forms(n, flavor);
    let cvx = Int::from(-5) * (Int::from(n + 1));
    let integral_abs = report.integral_abs?;
    let matches = x1 == Rat::from(&cx1)
        && x2 == Rat::from(&cx2)
        && report.vertex_x == Rat::from(&cvx)
        && report.vertex_y == Rat::from(&cvy)
        && integral_abs == Rat::from(&cint);
    let [a, b, c] = poly.coefficients().map(Clone::clone);
    Some(FamilyRow {
        n,
        flavor,
        a,
        b,
        c,
        x1,
        x2,
        vx: report.vertex_x,
        vy: report.vertex_y,
        integral_abs,
        closed_form: cint,
        matches,
    })
}

pub fn family_row(n: u64, flavor: Flavor) -> FamilyRow {
    row_for(n, flavor, scaled_family_poly(n, flavor)).expect("family members have integer roots")
}

/// Sweeps the scaled family for `0 <= n <= n_max`, checking roots, the
/// derivative root `-5(n+1)`, vertex values and both integral closed forms.
pub fn verify_scaled_family(n_max: u64, fault: Option<&Fault>) -> VerificationReport {
    VerificationReport::timed("family", format!("n in 0..={n_max}"), || {
        (0..=n_max)
            .into_par_iter()
            .flat_map_iter(|n| {
                Flavor::BOTH.into_iter().filter_map(move |fl| {
                    let ce = |reason: String| Counterexample::new(reason).with("n", n).with("flavor", fl);
                    let poly = match apply_fault(fault, fl, n, scaled_family_poly(n, fl)) {
                        Ok(p) => p,
                        Err(e) => return Some(ce(format!("mutated polynomial rejected: {e}"))),
                    };
                    let (slope, intercept) = derivative(&poly);
                    let crit = Rat::new(-intercept, slope).expect("a != 0");
                    if crit != Rat::from(Int::from(-5) * (Int::from(n + 1))) {
                        return Some(ce(format!("derivative root {crit} is not -5(n+1)")));
                    }
                    match row_for(n, fl, poly) {
                        Some(row) if row.matches => None,
                        Some(row) => Some(ce(format!(
                            "row ({}, {}, {}, {}, {}) misses a closed form",
                            row.x1, row.x2, row.vx, row.vy, row.integral_abs
                        ))),
                        None => Some(ce("roots are not rational".into())),
                    }
                })
            })
            .collect()
    })
}
