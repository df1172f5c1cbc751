//! Knot and link invariants of closed braids.

mod alexander;
mod bracket;

use std::fmt;

pub use alexander::{alexander, reduced_burau};
pub use bracket::{jones, jones_with, kauffman_bracket, kauffman_bracket_with, loop_value};

use crate::braid::{are_conjugate_with, BraidWord, Letter};
use crate::error::{Error, Result};
use crate::poly::LaurentPolynomial;
use crate::Limits;

/// Conjugacy classes of 2- and 3-braids with unknotted closure.
///
/// The three 3-strand representatives are `σ₁σ₂`, its mirror `σ₁⁻¹σ₂⁻¹`, and the
/// writhe-zero `σ₁σ₂⁻¹`; by Birman–Menasco every 3-braid with unknotted closure is
/// conjugate to one of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WLabel {
    Minus2,
    Plus2,
    Pos3,
    Neg3,
    Mixed3,
}

impl WLabel {
    pub const ALL: [WLabel; 5] = [
        WLabel::Minus2,
        WLabel::Plus2,
        WLabel::Pos3,
        WLabel::Neg3,
        WLabel::Mixed3,
    ];

    pub fn strands(self) -> usize {
        match self {
            WLabel::Minus2 | WLabel::Plus2 => 2,
            _ => 3,
        }
    }

    pub fn representative(self) -> BraidWord {
        let ints: &[i64] = match self {
            WLabel::Plus2 => &[1],
            WLabel::Minus2 => &[-1],
            WLabel::Pos3 => &[1, 2],
            WLabel::Neg3 => &[-1, -2],
            WLabel::Mixed3 => &[1, -2],
        };
        BraidWord::from_ints(self.strands(), ints).expect("valid representative")
    }

    /// Labels for a given strand count, in a fixed order.
    pub fn for_strands(strands: usize) -> &'static [WLabel] {
        match strands {
            2 => &[WLabel::Plus2, WLabel::Minus2],
            3 => &[WLabel::Pos3, WLabel::Neg3, WLabel::Mixed3],
            _ => &[],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WLabel::Minus2 => "Minus2",
            WLabel::Plus2 => "Plus2",
            WLabel::Pos3 => "Pos3",
            WLabel::Neg3 => "Neg3",
            WLabel::Mixed3 => "Mixed3",
        }
    }
}

impl fmt::Display for WLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WClass {
    pub strands: usize,
    pub representative: BraidWord,
    pub label: WLabel,
    /// `α` with `α⁻¹ · b · α` equal to the representative.
    pub witness: BraidWord,
}

pub fn w_class_of(b: &BraidWord) -> Result<Option<WClass>> {
    w_class_of_with(b, &Limits::default())
}

/// The unknotted class of a 2- or 3-strand braid, if it has one.
pub fn w_class_of_with(b: &BraidWord, limits: &Limits) -> Result<Option<WClass>> {
    let n = b.strands();
    if !(2..=3).contains(&n) {
        return Err(Error::UnsupportedStrands {
            strands: n,
            reason: "unknotted braid classes are only tabulated for 2 and 3 strands; there are infinitely many for more than 3",
        });
    }
    for &label in WLabel::for_strands(n) {
        let rep = label.representative();
        if rep.exponent_sum() != b.exponent_sum() {
            continue;
        }
        let r = are_conjugate_with(b, &rep, limits)?;
        if r.conjugate {
            return Ok(Some(WClass {
                strands: n,
                representative: rep,
                label,
                witness: r.witness.expect("conjugate result carries a witness"),
            }));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KnottingVerdict {
    Knotted,
    Unknotted,
    Unknown,
}

impl KnottingVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            KnottingVerdict::Knotted => "Knotted",
            KnottingVerdict::Unknotted => "Unknotted",
            KnottingVerdict::Unknown => "Unknown",
        }
    }
}

impl fmt::Display for KnottingVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Evidence behind a [`KnottingVerdict`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    NontrivialAlexander(LaurentPolynomial),
    NontrivialJones(LaurentPolynomial),
    /// The closure is a one-strand braid closure.
    TrivialBraid,
    /// Markov destabilization reaches the one-strand braid.
    DestabilizesToTrivial,
    /// After destabilizing to `reduced`, the braid is conjugate to an unknotted class.
    UnknottedClass {
        reduced: BraidWord,
        class: WLabel,
    },
    /// Nothing conclusive; the Jones polynomial may have been skipped at the crossing cap.
    Inconclusive {
        jones_skipped: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnottingOutcome {
    pub verdict: KnottingVerdict,
    pub certificate: Certificate,
}

pub fn knottedness_verdict(b: &BraidWord) -> Result<KnottingOutcome> {
    knottedness_verdict_with(b, &Limits::default())
}

/// Knotted if an invariant is nontrivial, Unknotted if a destabilized form is a known
/// unknotted class, Unknown otherwise.
pub fn knottedness_verdict_with(b: &BraidWord, limits: &Limits) -> Result<KnottingOutcome> {
    let perm = b.permutation();
    if !perm.is_full_cycle() {
        return Err(Error::NotAKnot {
            components: perm.cycle_count(),
        });
    }
    let outcome = |verdict, certificate| {
        Ok(KnottingOutcome {
            verdict,
            certificate,
        })
    };
    if b.strands() == 1 {
        return outcome(KnottingVerdict::Unknotted, Certificate::TrivialBraid);
    }
    let delta = alexander(b)?;
    if !delta.is_one() {
        return outcome(
            KnottingVerdict::Knotted,
            Certificate::NontrivialAlexander(delta),
        );
    }
    let mut jones_skipped = false;
    match jones_with(b, limits) {
        Ok(v) if !v.is_one() => {
            return outcome(KnottingVerdict::Knotted, Certificate::NontrivialJones(v));
        }
        Ok(_) => {}
        Err(e) if e.is_limit() => jones_skipped = true,
        Err(e) => return Err(e),
    }
    let reduced = destabilize(b);
    if reduced.strands() == 1 {
        return outcome(
            KnottingVerdict::Unknotted,
            Certificate::DestabilizesToTrivial,
        );
    }
    if reduced.strands() <= 3 {
        match w_class_of_with(&reduced, limits) {
            Ok(Some(class)) => {
                return outcome(
                    KnottingVerdict::Unknotted,
                    Certificate::UnknottedClass {
                        reduced,
                        class: class.label,
                    },
                );
            }
            Ok(None) => {}
            Err(e) if e.is_limit() => {}
            Err(e) => return Err(e),
        }
    }
    outcome(
        KnottingVerdict::Unknown,
        Certificate::Inconclusive { jones_skipped },
    )
}

/// Repeated Markov destabilization: while the top generator `σ_{n−1}` (or, after flipping
/// by `Δ`-conjugation, `σ₁`) occurs exactly once, rotate it to the end and drop it together
/// with the last strand.
pub fn destabilize(b: &BraidWord) -> BraidWord {
    let mut cur = b.free_reduce();
    loop {
        let n = cur.strands();
        if n == 1 {
            return cur;
        }
        if let Some(next) = drop_top(&cur) {
            cur = next;
            continue;
        }
        let flipped = flip(&cur);
        if let Some(next) = drop_top(&flipped) {
            cur = next;
            continue;
        }
        return cur;
    }
}

fn drop_top(b: &BraidWord) -> Option<BraidWord> {
    let n = b.strands();
    let top = n - 1;
    let positions: Vec<usize> = b
        .letters()
        .iter()
        .enumerate()
        .filter(|(_, l)| l.index == top)
        .map(|(k, _)| k)
        .collect();
    if positions.len() != 1 {
        return None;
    }
    let k = positions[0];
    let letters = b.letters();
    // conjugate so the single occurrence is last, then remove it
    let rotated: Vec<Letter> = letters[k + 1..]
        .iter()
        .chain(&letters[..k])
        .copied()
        .collect();
    Some(
        BraidWord::new(n - 1, rotated)
            .expect("no other letter uses the top generator")
            .free_reduce(),
    )
}

/// Conjugation by `Δ`: `σ_i ↦ σ_{n−i}`.
fn flip(b: &BraidWord) -> BraidWord {
    let n = b.strands();
    BraidWord::new(
        n,
        b.letters()
            .iter()
            .map(|l| Letter {
                index: n - l.index,
                sign: l.sign,
            })
            .collect(),
    )
    .expect("flip preserves index range")
}

/// Linking number of level-`n` and level-`j` centerlines when the level-0 cores link
/// `lk0` times: `lk0 · Π windings_a · Π windings_b`.
pub fn linking_scale(lk0: i64, windings_a: &[u64], windings_b: &[u64]) -> i128 {
    windings_a
        .iter()
        .chain(windings_b)
        .fold(lk0 as i128, |acc, &w| acc * w as i128)
}
