//! Registry of verifiable claims and the sweep driver.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::families::{closed_form_integral, verify_scaled_family, verify_window_integrals_with, Fault};
use crate::fibonacci::{fib_mod, fib_window, mod3_witness, verify_fib4n_mod3};
use crate::numeric::{Int, Rat};
use crate::oracle::{enumerate_triples, root_check};
use crate::quadratic::{
    build_quadratic, roots_via_triple, root_to_root_integral, solve_quadratic, vertex, Orientation,
};
use crate::report::{Counterexample, VerificationReport};
use crate::triples::{is_pythagorean, primitivity, scale, triple_from_window, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClaimId {
    /// Fibonacci windows generate Pythagorean triples.
    #[serde(rename = "theorem1")]
    WindowTriples,
    /// Scaling a triple by `k` gives a triple with `k` times the gcd.
    #[serde(rename = "theorem2")]
    Scaling,
    /// Leg/hypotenuse quadratics have roots `-ψ ± other`.
    #[serde(rename = "formula2")]
    TripleRoots,
    /// Closed forms for the scaled `(3, 4, 5)` family.
    #[serde(rename = "family")]
    Family,
    /// `F(4n) ≡ 0 (mod 3)` and the per-window mod-3 witness.
    #[serde(rename = "mod3")]
    Mod3,
    /// Root-to-root integrals of the Fibonacci `f`/`g` families are integers.
    #[serde(rename = "theorem3")]
    WindowIntegrals,
}

impl ClaimId {
    pub const ALL: [ClaimId; 6] = [
        ClaimId::WindowTriples,
        ClaimId::Scaling,
        ClaimId::TripleRoots,
        ClaimId::Family,
        ClaimId::Mod3,
        ClaimId::WindowIntegrals,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::WindowTriples => "theorem1",
            ClaimId::Scaling => "theorem2",
            ClaimId::TripleRoots => "formula2",
            ClaimId::Family => "family",
            ClaimId::Mod3 => "mod3",
            ClaimId::WindowIntegrals => "theorem3",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown claim {s:?}"))
    }
}

/// Bounds for every sweep, plus an optional injected fault.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub window_triples_max: u64,
    /// Windows `1..=scale_windows` are scaled by every `k` in `1..=scale_max`.
    pub scale_windows: u64,
    pub scale_max: u64,
    pub triple_roots_hyp_max: u64,
    pub family_max: u64,
    pub mod3_max: u64,
    pub witness_max: u64,
    pub window_integrals_max: u64,
    pub fault: Option<Fault>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            window_triples_max: 200,
            scale_windows: 20,
            scale_max: 50,
            triple_roots_hyp_max: 1000,
            family_max: 1000,
            mod3_max: 10_000,
            witness_max: 500,
            window_integrals_max: 100,
            fault: None,
        }
    }
}

impl SweepConfig {
    /// Every bound set to `bound` (the triple scan never goes below hypotenuse 5).
    pub fn uniform(bound: u64) -> Self {
        SweepConfig {
            window_triples_max: bound,
            scale_windows: bound,
            scale_max: bound,
            triple_roots_hyp_max: bound.max(5),
            family_max: bound,
            mod3_max: bound,
            witness_max: bound,
            window_integrals_max: bound,
            fault: None,
        }
    }

    /// Sets the main bound of one claim.
    pub fn set_bound(&mut self, claim: ClaimId, bound: u64) {
        match claim {
            ClaimId::WindowTriples => self.window_triples_max = bound,
            ClaimId::Scaling => self.scale_max = bound,
            ClaimId::TripleRoots => self.triple_roots_hyp_max = bound,
            ClaimId::Family => self.family_max = bound,
            ClaimId::Mod3 => self.mod3_max = bound,
            ClaimId::WindowIntegrals => self.window_integrals_max = bound,
        }
    }

    pub fn with_fault(mut self, fault: Fault) -> Self {
        self.fault = Some(fault);
        self
    }
}

fn check_window_triples(i_max: u64) -> VerificationReport {
    VerificationReport::timed(ClaimId::WindowTriples.name(), format!("i in 1..={i_max}"), || {
        (1..=i_max)
            .into_par_iter()
            .filter_map(|i| {
                let ce = |r: String| Some(Counterexample::new(r).with("i", i));
                match triple_from_window(&fib_window(i)) {
                    Ok(t) if is_pythagorean(t.leg_a(), t.leg_b(), t.hyp()) => None,
                    Ok(t) => ce(format!("{t:?} fails the identity")),
                    Err(e) => ce(e.to_string()),
                }
            })
            .collect()
    })
}

fn check_scaling(windows: u64, k_max: u64) -> VerificationReport {
    let range = format!("windows 1..={windows} and triples with hyp <= 100, k in 1..={k_max}");
    VerificationReport::timed(ClaimId::Scaling.name(), range, || {
        let mut bases: Vec<Triple> = (1..=windows)
            .filter_map(|i| triple_from_window(&fib_window(i)).ok())
            .collect();
        bases.extend(enumerate_triples(100));
        bases
            .par_iter()
            .flat_map_iter(|t| {
                let (_, g) = primitivity(t);
                (1..=k_max).filter_map(move |k| {
                    let ce = |r: String| {
                        Some(
                            Counterexample::new(r)
                                .with("leg_a", t.leg_a())
                                .with("leg_b", t.leg_b())
                                .with("hyp", t.hyp())
                                .with("k", k),
                        )
                    };
                    let kk = Int::from(k);
                    let s = match scale(t, &kk) {
                        Ok(s) => s,
                        Err(e) => return ce(e.to_string()),
                    };
                    let (primitive, sg) = primitivity(&s);
                    if !is_pythagorean(s.leg_a(), s.leg_b(), s.hyp()) {
                        ce("scaled sides fail the identity".into())
                    } else if sg != &kk * &g {
                        ce(format!("gcd {sg} is not k·{g}"))
                    } else if s.hyp() * t.leg_a() != s.leg_a() * t.hyp() {
                        ce("side ratio changed".into())
                    } else if k >= 2 && primitive {
                        ce("scaled triple is primitive".into())
                    } else {
                        None
                    }
                })
            })
            .collect()
    })
}

fn check_triple_roots(hyp_max: u64) -> VerificationReport {
    VerificationReport::timed(ClaimId::TripleRoots.name(), format!("all triples with hyp <= {hyp_max}, both legs"), || {
        enumerate_triples(hyp_max)
            .par_iter()
            .flat_map_iter(|t| [t.clone(), t.swapped()])
            .flat_map_iter(|t| triple_root_failures(&t))
            .collect()
    })
}

fn triple_root_failures(t: &Triple) -> Vec<Counterexample> {
    let (leg, other, hyp) = (t.leg_a(), t.leg_b(), t.hyp());
    let ce = |r: String| {
        Counterexample::new(r)
            .with("leg", leg)
            .with("other", other)
            .with("hyp", hyp)
    };
    let (pos, neg) = match (
        build_quadratic(leg, hyp, Orientation::Positive),
        build_quadratic(leg, hyp, Orientation::Negative),
    ) {
        (Ok(p), Ok(n)) => (p, n),
        (Err(e), _) | (_, Err(e)) => return vec![ce(e.to_string())],
    };
    let mut found = Vec::new();
    let roots = solve_quadratic(&pos);
    match roots_via_triple(leg, other, hyp) {
        Ok(expected) if expected == roots => {}
        Ok(expected) => found.push(ce(format!("solver {roots:?} vs triple {expected:?}"))),
        Err(e) => found.push(ce(e.to_string())),
    }
    if roots.as_ints().is_none() {
        found.push(ce("roots are not integers".into()));
    }
    for r in [roots.x1(), roots.x2()].into_iter().flatten() {
        if !root_check(&pos, r) {
            found.push(ce(format!("{r} is not a root")));
        }
    }
    let two_leg_other = Int::from(2) * leg * other;
    if pos.discriminant() != &two_leg_other * &two_leg_other {
        found.push(ce("discriminant is not (2·leg·other)²".into()));
    }
    let expected_vertex = (Rat::from(-hyp.clone()), Rat::from(-(leg * other * other)));
    let v = vertex(&pos);
    if v != expected_vertex {
        found.push(ce(format!("vertex {v:?} is not (-hyp, -leg·other²)")));
    }
    let integral = root_to_root_integral(&pos);
    if integral.as_ref() != Some(&closed_form_integral(leg, other)) {
        found.push(ce(format!("integral {integral:?} misses -(4/3)·leg·other³")));
    }
    // mirror: every quantity flips sign
    if solve_quadratic(&neg) != roots.negated()
        || vertex(&neg) != (-&v.0, -&v.1)
        || root_to_root_integral(&neg) != integral.map(|x| -x)
    {
        found.push(ce("negative orientation is not the sign mirror".into()));
    }
    found
}

fn check_mod3(n_max: u64, window_max: u64) -> VerificationReport {
    let lemma = verify_fib4n_mod3(n_max);
    let range = format!("n in 1..={n_max}, windows 1..={window_max}");
    let extra = VerificationReport::timed(ClaimId::Mod3.name(), range, || {
        let three = Int::from(3);
        let mut found: Vec<Counterexample> = (1..=n_max)
            .into_par_iter()
            .filter_map(|n| match fib_mod(4 * n, &three) {
                Ok(r) if r.is_zero() => None,
                Ok(r) => Some(Counterexample::new(format!("fib_mod(4n, 3) = {r}")).with("n", n)),
                Err(e) => Some(Counterexample::new(e.to_string()).with("n", n)),
            })
            .collect();
        found.extend((1..=window_max).filter_map(|i| {
            mod3_witness(&fib_window(i))
                .err()
                .map(|e| Counterexample::new(e.to_string()).with("i", i))
        }));
        found
    });
    let mut counterexamples = lemma.counterexamples;
    counterexamples.extend(extra.counterexamples);
    VerificationReport::new(
        ClaimId::Mod3.name(),
        extra.range,
        counterexamples,
        lemma.elapsed_secs + extra.elapsed_secs,
    )
}

pub fn run_claim(claim: ClaimId, config: &SweepConfig) -> VerificationReport {
    let fault = config.fault.as_ref();
    match claim {
        ClaimId::WindowTriples => check_window_triples(config.window_triples_max),
        ClaimId::Scaling => check_scaling(config.scale_windows, config.scale_max),
        ClaimId::TripleRoots => check_triple_roots(config.triple_roots_hyp_max),
        ClaimId::Family => verify_scaled_family(config.family_max, fault),
        ClaimId::Mod3 => check_mod3(config.mod3_max, config.witness_max),
        ClaimId::WindowIntegrals => verify_window_integrals_with(config.window_integrals_max, fault),
    }
}

/// Runs `claims` concurrently; reports come back in the order given.
pub fn run_claims(claims: &[ClaimId], config: &SweepConfig) -> Vec<VerificationReport> {
    claims.par_iter().map(|c| run_claim(*c, config)).collect()
}

/// One report per registered claim, in registry order.
pub fn run_all_claims(config: &SweepConfig) -> Vec<VerificationReport> {
    run_claims(&ClaimId::ALL, config)
}
