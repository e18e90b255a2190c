//! Second computational paths for the closed forms.
//!
//! Nothing here calls into the solver or the antiderivative code in
//! [`crate::quadratic`]; only the polynomial type is shared.

use crate::numeric::{Int, Rat};
use crate::quadratic::QuadPoly;
use crate::triples::Triple;

/// `a·x·x + b·x + c`, expanded rather than Horner.
fn value_at(q: &QuadPoly, x: &Rat) -> Rat {
    let a = Rat::from(q.a());
    let b = Rat::from(q.b());
    let c = Rat::from(q.c());
    let xx = x * x;
    &(&(&a * &xx) + &(&b * x)) + &c
}

/// Simpson's rule in exact arithmetic. Exact for any polynomial of degree <= 3.
pub fn simpson_exact(q: &QuadPoly, lo: &Rat, hi: &Rat) -> Rat {
    let two = Rat::from(2);
    let mid = &(lo + hi) / &two;
    let weighted = &(&value_at(q, lo) + &(Rat::from(4) * value_at(q, &mid))) + &value_at(q, hi);
    &(&(hi - lo) / &Rat::from(6)) * &weighted
}

/// True iff `q(r) = 0` exactly.
pub fn root_check(q: &QuadPoly, r: &Rat) -> bool {
    value_at(q, r).is_zero()
}

fn isqrt_u64(x: u64) -> u64 {
    let mut r = (x as f64).sqrt() as u64;
    while r.saturating_mul(r) > x {
        r -= 1;
    }
    while (r + 1).saturating_mul(r + 1) <= x {
        r += 1;
    }
    r
}

/// Every Pythagorean triple with hypotenuse at most `hyp_max`, by exhaustive
/// scan over `(leg_a, hyp)` with `leg_a < leg_b`. Sorted by hypotenuse, then
/// shorter leg.
pub fn enumerate_triples(hyp_max: u64) -> Vec<Triple> {
    let mut out = Vec::new();
    for c in 1..=hyp_max {
        let cc = c * c;
        for a in 1..c {
            let bb = cc - a * a;
            if bb <= a * a {
                break;
            }
            let b = isqrt_u64(bb);
            if b * b == bb {
                out.push(
                    Triple::new(Int::from(a), Int::from(b), Int::from(c))
                        .expect("scan only yields genuine triples"),
                );
            }
        }
    }
    out
}

/// Whether `t` (in either leg order) appears in `list`.
pub fn contains_triple(list: &[Triple], t: &Triple) -> bool {
    let swapped = t.swapped();
    list.iter().any(|x| x == t || *x == swapped)
}
