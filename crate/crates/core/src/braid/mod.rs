//! Braid words and exact braid-group algorithms.

mod cable;
mod conjugacy;
mod garside;
mod permutation;
mod word;

pub use cable::cable_compose;
pub use conjugacy::{
    are_conjugate, are_conjugate_with, is_achiral_braid, is_achiral_braid_with,
    super_summit_representative, super_summit_set, ConjugacyResult, MAX_SEARCH_STRANDS,
};
pub use garside::{all_simples, is_left_weighted, GarsideCanonical};
pub use permutation::Permutation;
pub use word::{BraidWord, Letter};

pub(crate) use word::parse_word_at;

/// Left normal form of a braid word.
pub fn normal_form(b: &BraidWord) -> GarsideCanonical {
    GarsideCanonical::from_word(b)
}
