use std::fmt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::seq::EventuallyPeriodicSeq;

/// Winding numbers `(w₁, w₂, …)` of a solenoid, every entry at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SolenoidType(EventuallyPeriodicSeq<u64>);

impl SolenoidType {
    pub fn new(prefix: Vec<u64>, cycle: Vec<u64>) -> Result<Self> {
        if let Some(&w) = prefix.iter().chain(&cycle).find(|&&w| w < 2) {
            return Err(Error::InvalidSequence(format!(
                "winding numbers must be at least 2 (got {w})"
            )));
        }
        Ok(Self(EventuallyPeriodicSeq::new(prefix, cycle)?))
    }

    pub fn periodic(cycle: Vec<u64>) -> Result<Self> {
        Self::new(Vec::new(), cycle)
    }

    pub fn seq(&self) -> &EventuallyPeriodicSeq<u64> {
        &self.0
    }

    pub fn prefix(&self) -> &[u64] {
        self.0.prefix()
    }

    pub fn cycle(&self) -> &[u64] {
        self.0.cycle()
    }

    /// Winding number of stage `n` (1-based, as stages are numbered from the ambient level 0).
    pub fn winding(&self, n: usize) -> u64 {
        assert!(n >= 1, "stages are numbered from 1");
        *self.0.get(n - 1)
    }
}

impl fmt::Display for SolenoidType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A sequence of `±1`, the encoding of unknotted 2-adic defining sequences.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignSeq(EventuallyPeriodicSeq<i8>);

impl SignSeq {
    pub fn new(prefix: Vec<i8>, cycle: Vec<i8>) -> Result<Self> {
        if let Some(&s) = prefix.iter().chain(&cycle).find(|&&s| s != 1 && s != -1) {
            return Err(Error::InvalidSequence(format!(
                "signs must be ±1 (got {s})"
            )));
        }
        Ok(Self(EventuallyPeriodicSeq::new(prefix, cycle)?))
    }

    pub fn periodic(cycle: Vec<i8>) -> Result<Self> {
        Self::new(Vec::new(), cycle)
    }

    pub fn seq(&self) -> &EventuallyPeriodicSeq<i8> {
        &self.0
    }

    /// Every entry flipped: the mirror-image defining sequence.
    pub fn negate(&self) -> SignSeq {
        SignSeq(self.0.map(|s| -s))
    }
}

impl fmt::Display for SignSeq {
    /// `(+1, -1)^∞` style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.map(|&s| if s > 0 { "+1" } else { "-1" }).fmt(f)
    }
}

/// The braid presenting `N_n ⊂ N_{n−1}`: cyclic, on `w_n ≥ 2` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StageBraid(BraidWord);

impl StageBraid {
    pub fn new(braid: BraidWord) -> Result<Self> {
        if braid.strands() < 2 {
            return Err(Error::UnsupportedStrands {
                strands: braid.strands(),
                reason: "stage braids need at least 2 strands",
            });
        }
        if !braid.is_cyclic() {
            return Err(Error::NotCyclic);
        }
        Ok(Self(braid))
    }

    pub fn braid(&self) -> &BraidWord {
        &self.0
    }

    pub fn winding(&self) -> u64 {
        self.0.strands() as u64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AmbientKind {
    Unknot,
    ClosedBraidKnot(BraidWord),
}

/// The level-0 solid torus `N₀`: a neighborhood of the unknot or of a closed-braid knot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AmbientCompanion {
    kind: AmbientKind,
    strictly_achiral_known: bool,
}

impl AmbientCompanion {
    pub fn unknot() -> Self {
        Self {
            kind: AmbientKind::Unknot,
            strictly_achiral_known: true,
        }
    }

    /// A closed-braid knot companion. `strictly_achiral_known` records outside knowledge
    /// (for example, the figure-eight knot).
    pub fn closed_braid(braid: BraidWord, strictly_achiral_known: bool) -> Result<Self> {
        let perm = braid.permutation();
        if !perm.is_full_cycle() {
            return Err(Error::NotAKnot {
                components: perm.cycle_count(),
            });
        }
        Ok(Self {
            kind: AmbientKind::ClosedBraidKnot(braid),
            strictly_achiral_known,
        })
    }

    /// The figure-eight knot `(σ₁σ₂⁻¹)²`, flagged strictly achiral.
    pub fn figure_eight() -> Self {
        Self::closed_braid(
            BraidWord::from_ints(3, &[1, -2, 1, -2]).expect("valid word"),
            true,
        )
        .expect("figure-eight closure is a knot")
    }

    pub fn kind(&self) -> &AmbientKind {
        &self.kind
    }

    pub fn is_unknot(&self) -> bool {
        matches!(self.kind, AmbientKind::Unknot)
    }

    pub fn strictly_achiral_known(&self) -> bool {
        self.strictly_achiral_known
    }

    /// Braid whose closure is the ambient core; the 1-strand identity for the unknot.
    pub fn braid(&self) -> BraidWord {
        match &self.kind {
            AmbientKind::Unknot => BraidWord::identity(1),
            AmbientKind::ClosedBraidKnot(b) => b.clone(),
        }
    }
}

/// A combinatorially presented defining sequence `N₀ ⊃ N₁ ⊃ ⋯`: an ambient companion and an
/// eventually periodic sequence of stage braids, every stage blackboard framed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SolenoidSpec {
    pub ambient: AmbientCompanion,
    pub stages: EventuallyPeriodicSeq<StageBraid>,
}

impl SolenoidSpec {
    pub fn new(ambient: AmbientCompanion, stages: EventuallyPeriodicSeq<StageBraid>) -> Self {
        Self { ambient, stages }
    }

    /// Stage `n ≥ 1`.
    pub fn stage(&self, n: usize) -> &StageBraid {
        assert!(n >= 1, "stages are numbered from 1");
        self.stages.get(n - 1)
    }
}

/// Three-valued decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "Yes",
            Verdict::No => "No",
            Verdict::Unknown => "Unknown",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}
