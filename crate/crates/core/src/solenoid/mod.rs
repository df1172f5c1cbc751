//! Tame solenoid embeddings presented by eventually periodic defining sequences.

mod format;
mod ops;
mod types;

pub use format::{emit_spec, parse_spec};
pub use ops::{
    achiral_double, algebraically_linked, construct_strictly_achiral, core_braid,
    deletion_equivalent, encode_2adic, encode_2adic_with, infinite_primes, invariant_sequence,
    invariant_sequence_with, is_achiral_2adic, knotting_report, knotting_report_with,
    level_linking, signseq_equivalent, smale_construct, smale_enumerate, smale_enumerate_with,
    strictly_achiral_embeddable, supernatural_equal, type_of, verify_strict_achirality,
    verify_strict_achirality_with, Aggregate, InvariantKind, InvariantSequence, KnottingReport,
};
pub use types::{
    AmbientCompanion, AmbientKind, SignSeq, SolenoidSpec, SolenoidType, StageBraid, Verdict,
};
