use super::word::{BraidWord, Letter};
use crate::error::{Error, Result};

/// Satellite braid: every strand of `outer` becomes a blackboard-framed ribbon of
/// `inner.strands()` parallel strands, and `inner` is inserted once on the first ribbon at
/// the closure cut.
///
/// The result lives on `outer.strands() * inner.strands()` strands and has exponent sum
/// `w₂² · e(outer) + e(inner)` where `w₂ = inner.strands()`.
pub fn cable_compose(outer: &BraidWord, inner: &BraidWord) -> Result<BraidWord> {
    if !outer.is_cyclic() {
        return Err(Error::NotCyclic);
    }
    let w = inner.strands();
    let strands = outer.strands() * w;
    let mut letters = Vec::with_capacity(outer.len() * w * w + inner.len());
    for l in outer.letters() {
        // ribbon at positions base+1..=base+w crosses the ribbon to its right; each strand of
        // the left ribbon, rightmost first, travels right across all w strands
        let base = (l.index - 1) * w;
        for a in (1..=w).rev() {
            for step in 0..w {
                letters.push(Letter {
                    index: base + a + step,
                    sign: l.sign,
                });
            }
        }
    }
    letters.extend(inner.letters().iter().copied());
    BraidWord::new(strands, letters)
}
