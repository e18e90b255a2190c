//! Pythagorean triples generated from Fibonacci windows.
//!
//! For a window `F(i)..F(i+3)` the triple is
//! `(F(i)·F(i+3), 2·F(i+1)·F(i+2), F(i+1)² + F(i+2)²)`.
//!
//! These triples are *not* always primitive: `i = 3` gives `(16, 30, 34)`
//! with gcd 2. [`primitivity`] reports the measured gcd instead of
//! assuming it is 1.

use num_traits::Signed;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fibonacci::FibWindow;
use crate::numeric::{gcd, Int};

/// A certified Pythagorean triple. Legs keep the order they were generated
/// in; `leg_a` is not necessarily the shorter one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triple {
    leg_a: Int,
    leg_b: Int,
    hyp: Int,
}

impl Triple {
    /// Fails with [`Error::NotPythagorean`] unless all sides are positive
    /// and `leg_a² + leg_b² = hyp²`.
    pub fn new(leg_a: Int, leg_b: Int, hyp: Int) -> Result<Self> {
        if !is_pythagorean(&leg_a, &leg_b, &hyp) {
            return Err(Error::NotPythagorean {
                a: leg_a,
                b: leg_b,
                c: hyp,
            });
        }
        Ok(Triple { leg_a, leg_b, hyp })
    }

    pub fn leg_a(&self) -> &Int {
        &self.leg_a
    }

    pub fn leg_b(&self) -> &Int {
        &self.leg_b
    }

    pub fn hyp(&self) -> &Int {
        &self.hyp
    }

    /// The same triple with the legs swapped.
    pub fn swapped(&self) -> Triple {
        Triple {
            leg_a: self.leg_b.clone(),
            leg_b: self.leg_a.clone(),
            hyp: self.hyp.clone(),
        }
    }
}

/// JSON: `{ leg_a, leg_b, hyp, gcd, primitive }` with decimal string integers.
impl Serialize for Triple {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (primitive, g) = primitivity(self);
        let mut st = s.serialize_struct("Triple", 5)?;
        st.serialize_field("leg_a", &self.leg_a.to_string())?;
        st.serialize_field("leg_b", &self.leg_b.to_string())?;
        st.serialize_field("hyp", &self.hyp.to_string())?;
        st.serialize_field("gcd", &g.to_string())?;
        st.serialize_field("primitive", &primitive)?;
        st.end()
    }
}

/// True iff `a, b, c > 0` and `a² + b² = c²`.
pub fn is_pythagorean(a: &Int, b: &Int, c: &Int) -> bool {
    a.is_positive() && b.is_positive() && c.is_positive() && a * a + b * b == c * c
}

/// Triple generated by the window starting at `w.index()`.
pub fn triple_from_window(w: &FibWindow) -> Result<Triple> {
    if w.index() == 0 {
        return Err(Error::DegenerateWindow);
    }
    let (f0, f1, f2, f3) = (w.term(0), w.term(1), w.term(2), w.term(3));
    let alpha = f0 * f3;
    let beta = Int::from(2) * f1 * f2;
    let gamma = f1 * f1 + f2 * f2;
    Triple::new(alpha, beta, gamma)
}

/// `(is_primitive, g)` where `g` is the gcd of the three sides.
pub fn primitivity(t: &Triple) -> (bool, Int) {
    let g = gcd(&gcd(&t.leg_a, &t.leg_b), &t.hyp);
    (g == Int::from(1), g)
}

/// Multiplies every side by `k >= 1`.
pub fn scale(t: &Triple, k: &Int) -> Result<Triple> {
    if *k < Int::from(1) {
        return Err(Error::BadScale(k.clone()));
    }
    Ok(Triple {
        leg_a: &t.leg_a * k,
        leg_b: &t.leg_b * k,
        hyp: &t.hyp * k,
    })
}
