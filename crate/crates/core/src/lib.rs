//! Computable pieces of the theory of tame solenoids in the 3-sphere.
//!
//! * [`braid`]: braid words, Garside normal form, conjugacy with witnesses, cabling.
//! * [`poly`]: exact Laurent polynomials with half-integer exponents.
//! * [`invariants`]: Kauffman bracket / Jones and Burau / Alexander polynomials of closed
//!   braids, unknotted 2- and 3-braid classes, knottedness verdicts.
//! * [`solenoid`]: eventually periodic defining sequences and the decisions built on them.

pub mod braid;
pub mod error;
pub mod invariants;
pub mod poly;
pub mod seq;
pub mod solenoid;

pub use braid::{BraidWord, ConjugacyResult, GarsideCanonical, Letter, Permutation};
pub use error::{Error, Result};
pub use invariants::{KnottingVerdict, WClass, WLabel};
pub use poly::{LaurentPolynomial, Variable};
pub use seq::EventuallyPeriodicSeq;
pub use solenoid::{AmbientCompanion, SignSeq, SolenoidSpec, SolenoidType, StageBraid, Verdict};

/// Resource caps shared by the search and state-sum engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest crossing count accepted by the Kauffman state sum.
    pub max_crossings: usize,
    /// Largest super-summit orbit explored by the conjugacy search.
    pub max_orbit: usize,
}

impl Limits {
    pub const DEFAULT_MAX_CROSSINGS: usize = 24;
    pub const DEFAULT_MAX_ORBIT: usize = 100_000;
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_crossings: Self::DEFAULT_MAX_CROSSINGS,
            max_orbit: Self::DEFAULT_MAX_ORBIT,
        }
    }
}
