#![allow(dead_code)]

pub mod oracle;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use solenoid_core::BraidWord;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random word: `len` letters on `strands` strands.
pub fn random_word(rng: &mut impl Rng, strands: usize, len: usize) -> BraidWord {
    let ints: Vec<i64> = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..strands as i64);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::from_ints(strands, &ints).unwrap()
}

/// Random word whose permutation is a single cycle, by rejection sampling.
pub fn random_cyclic(rng: &mut impl Rng, strands: usize, max_len: usize) -> BraidWord {
    loop {
        let len = rng.gen_range(1..=max_len);
        let w = random_word(rng, strands, len);
        if w.is_cyclic() {
            return w;
        }
    }
}
