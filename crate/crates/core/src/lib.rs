//! Integer-root quadratics built from Pythagorean triples.
//!
//! A triple leg `a` with hypotenuse `ψ` gives `ax² + 2aψx + a³`, whose roots
//! `-ψ ± other` are always integers. Triples generated from four consecutive
//! Fibonacci terms yield two families `f` and `g` whose root-to-root
//! integrals are integers. Everything is computed in exact arithmetic and
//! every closed form is checked against an independent oracle.

pub mod claims;
pub mod error;
pub mod families;
pub mod fibonacci;
pub mod numeric;
pub mod oracle;
pub mod quadratic;
pub mod report;
pub mod triples;

pub use error::{Error, Result};
pub use families::{build_f, build_g, phi_roots, theta_roots, FamilyPoly, Flavor};
pub use fibonacci::{fib, fib_mod, fib_window, FibWindow};
pub use numeric::{gcd, isqrt_exact, rat, Int, Rat};
pub use quadratic::{analyze, build_quadratic, solve_quadratic, AnalysisReport, Orientation, QuadPoly, RootPair};
pub use report::{Counterexample, Status, VerificationReport};
pub use triples::{primitivity, scale, triple_from_window, Triple};
