//! Fibonacci terms, windows of four consecutive terms, and the mod-3 lemma.
//!
//! The sequence starts at `F(0) = 0, F(1) = 1`.

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{int_str_vec, Int};
use crate::report::{Counterexample, VerificationReport};

/// Largest index for which [`fib_binet_approx`] stays within 0.5 of the true term.
pub const BINET_MAX_INDEX: u64 = 70;

/// Returns `(F(n), F(n+1))` by fast doubling.
fn fib_pair(n: u64) -> (Int, Int) {
    let mut a = Int::zero();
    let mut b = Int::one();
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        // (a, b) = (F(k), F(k+1)) -> (F(2k), F(2k+1))
        let c = &a * (&b * 2u32 - &a);
        let d = &a * &a + &b * &b;
        if (n >> bit) & 1 == 1 {
            b = &c + &d;
            a = d;
        } else {
            a = c;
            b = d;
        }
    }
    (a, b)
}

/// The `n`-th Fibonacci number, using O(log n) big-integer multiplications.
pub fn fib(n: u64) -> Int {
    fib_pair(n).0
}

/// `F(n) mod m`, never materializing `F(n)`.
///
/// Runs the doubling recurrence with every intermediate reduced mod `m`.
pub fn fib_mod(n: u64, m: &Int) -> Result<Int> {
    if *m < Int::from(2) {
        return Err(Error::BadModulus(m.clone()));
    }
    let mut a = Int::zero();
    let mut b = Int::one();
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        let c = (&a * (&b * 2u32 + m - &a)).mod_floor(m);
        let d = (&a * &a + &b * &b).mod_floor(m);
        if (n >> bit) & 1 == 1 {
            b = (&c + &d).mod_floor(m);
            a = d;
        } else {
            a = c;
            b = d;
        }
    }
    Ok(a)
}

/// Four consecutive Fibonacci terms `F(i), F(i+1), F(i+2), F(i+3)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibWindow {
    index: u64,
    #[serde(with = "int_str_vec")]
    terms: Vec<Int>,
}

impl FibWindow {
    /// Index of the first term.
    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn terms(&self) -> &[Int] {
        &self.terms
    }

    /// Term at `offset` (0..=3) within the window, i.e. `F(index + offset)`.
    pub fn term(&self, offset: usize) -> &Int {
        &self.terms[offset]
    }

    /// Product of all four terms.
    pub fn product(&self) -> Int {
        self.terms.iter().product()
    }
}

pub fn fib_window(i: u64) -> FibWindow {
    let (f0, f1) = fib_pair(i);
    let f2 = &f0 + &f1;
    let f3 = &f1 + &f2;
    FibWindow {
        index: i,
        terms: vec![f0, f1, f2, f3],
    }
}

/// Position (0..=3) of the unique term of `w` divisible by 3.
///
/// Four consecutive indices always contain exactly one multiple of 4, and
/// those are the indices where the sequence vanishes mod 3.
pub fn mod3_witness(w: &FibWindow) -> Result<usize> {
    let three = Int::from(3);
    let positions: Vec<usize> = w
        .terms
        .iter()
        .enumerate()
        .filter(|(_, t)| t.is_multiple_of(&three))
        .map(|(k, _)| k)
        .collect();
    match positions.as_slice() {
        [] => Err(Error::NoWitness { index: w.index }),
        [k] => Ok(*k),
        _ => Err(Error::MultipleWitnesses {
            index: w.index,
            positions,
        }),
    }
}

/// Checks `F(4n) ≡ 0 (mod 3)` for every `1 <= n <= n_max`.
///
/// Walks the sequence mod 3 once, independently of [`fib_mod`].
pub fn verify_fib4n_mod3(n_max: u64) -> VerificationReport {
    VerificationReport::timed("mod3", format!("n in 1..={n_max}"), || {
        let mut found = Vec::new();
        let (mut a, mut b) = (0u8, 1u8);
        for k in 1..=4 * n_max {
            (a, b) = (b, (a + b) % 3);
            if k % 4 == 0 && a != 0 {
                found.push(
                    Counterexample::new(format!("F({k}) mod 3 = {a}"))
                        .with("n", k / 4)
                        .with("index", k),
                );
            }
        }
        found
    })
}

/// Floating point Binet evaluation, for a small-n cross-check only.
pub fn fib_binet_approx(n: u64) -> Result<f64> {
    if n > BINET_MAX_INDEX {
        return Err(Error::RangeExceeded {
            n,
            max: BINET_MAX_INDEX,
        });
    }
    let sqrt5 = 5f64.sqrt();
    let up = (1.0 + sqrt5) / 2.0;
    let down = (1.0 - sqrt5) / 2.0;
    let n = n as i32;
    Ok((up.powi(n) - down.powi(n)) / sqrt5)
}
