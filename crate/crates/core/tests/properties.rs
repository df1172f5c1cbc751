//! Randomized structural properties of the braid, invariant and sequence layers.

mod common;

use common::oracle::deletion_oracle;
use proptest::prelude::*;
use rand::Rng;
use solenoid_core::braid::{are_conjugate, cable_compose, normal_form};
use solenoid_core::invariants::{alexander, jones};
use solenoid_core::solenoid::signseq_equivalent;
use solenoid_core::{BraidWord, EventuallyPeriodicSeq, SignSeq};

fn word_strategy(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        let letter = (1..n as i64, any::<bool>()).prop_map(|(i, s)| if s { i } else { -i });
        prop::collection::vec(letter, 0..=max_len)
            .prop_map(move |ints| BraidWord::from_ints(n, &ints).unwrap())
    })
}

/// Rewrites one position with a braid relation, an inserted free pair, or a commutation.
fn rewrite(ints: &[i64], strands: usize, pos: usize, choice: u8) -> Vec<i64> {
    let mut out = ints.to_vec();
    let pos = pos % (ints.len() + 1);
    let n = strands as i64;
    match choice % 3 {
        0 => {
            // insert σ_i σ_i⁻¹
            let i = (pos as i64 % (n - 1)) + 1;
            out.splice(pos..pos, [i, -i]);
        }
        1 => {
            // insert σ_i σ_{i+1} σ_i (σ_{i+1} σ_i σ_{i+1})⁻¹
            if n >= 3 {
                let i = (pos as i64 % (n - 2)) + 1;
                out.splice(pos..pos, [i, i + 1, i, -(i + 1), -i, -(i + 1)]);
            }
        }
        _ => {
            // swap a far-commuting adjacent pair
            if pos + 1 < out.len() && (out[pos].abs() - out[pos + 1].abs()).abs() >= 2 {
                out.swap(pos, pos + 1);
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_form_respects_relations(
        b in word_strategy(6, 12),
        edits in prop::collection::vec((any::<usize>(), any::<u8>()), 1..6),
    ) {
        let mut ints = b.to_ints();
        for (pos, choice) in edits {
            ints = rewrite(&ints, b.strands(), pos, choice);
        }
        let rewritten = BraidWord::from_ints(b.strands(), &ints).unwrap();
        prop_assert_eq!(normal_form(&rewritten), normal_form(&b));
    }

    #[test]
    fn normal_form_round_trips_and_multiplies(a in word_strategy(5, 10), c in word_strategy(5, 10)) {
        let na = normal_form(&a);
        prop_assert_eq!(normal_form(&na.to_word()), na.clone());
        let c = c.with_strands(a.strands().max(c.strands())).unwrap();
        let a = a.with_strands(c.strands()).unwrap();
        prop_assert_eq!(
            normal_form(&a).multiply(&normal_form(&c)),
            normal_form(&a.compose(&c).unwrap())
        );
        prop_assert!(normal_form(&a.compose(&a.inverse()).unwrap()).is_identity());
    }

    #[test]
    fn mirror_laws(b in word_strategy(6, 12)) {
        prop_assert_eq!(b.mirror().mirror(), b.clone());
        prop_assert_eq!(b.mirror().permutation(), b.permutation());
        prop_assert_eq!(b.mirror().exponent_sum(), -b.exponent_sum());
    }

    #[test]
    fn conjugates_are_found(b in word_strategy(4, 6), c in word_strategy(4, 4)) {
        let c = c.with_strands(b.strands().max(c.strands())).unwrap();
        let b = b.with_strands(c.strands()).unwrap();
        let d = b.conjugate_by(&c).unwrap();
        let r = are_conjugate(&b, &d).unwrap();
        prop_assert!(r.conjugate);
        let alpha = r.witness.unwrap();
        prop_assert_eq!(normal_form(&b.conjugate_by(&alpha).unwrap()), normal_form(&d));
        let back = are_conjugate(&d, &b).unwrap();
        prop_assert!(back.conjugate);
    }
}

#[test]
fn jones_is_a_conjugacy_and_markov_invariant() {
    let mut rng = common::rng(21);
    for _ in 0..60 {
        let strands = rng.gen_range(2..=4);
        let len = rng.gen_range(1..=7);
        let b = common::random_word(&mut rng, strands, len);
        let j = jones(&b).unwrap();
        let c = common::random_word(&mut rng, strands, 2);
        assert_eq!(
            jones(&b.conjugate_by(&c).unwrap()).unwrap(),
            j,
            "{b} by {c}"
        );
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let stabilized = b
            .with_strands(strands + 1)
            .unwrap()
            .compose(&BraidWord::from_ints(strands + 1, &[sign * strands as i64]).unwrap())
            .unwrap();
        assert_eq!(jones(&stabilized).unwrap(), j, "{b} stabilized");
        assert_eq!(
            jones(&b.mirror()).unwrap(),
            j.invert_variable(),
            "{b} mirrored"
        );
    }
}

#[test]
fn alexander_is_a_markov_invariant() {
    let mut rng = common::rng(22);
    for _ in 0..40 {
        let strands = rng.gen_range(2..=4);
        let b = common::random_cyclic(&mut rng, strands, 7);
        let a = alexander(&b).unwrap();
        let stabilized = b
            .with_strands(strands + 1)
            .unwrap()
            .compose(&BraidWord::from_ints(strands + 1, &[-(strands as i64)]).unwrap())
            .unwrap();
        assert_eq!(alexander(&stabilized).unwrap(), a);
        assert_eq!(alexander(&b.mirror()).unwrap(), a);
    }
}

#[test]
fn cyclic_braids_on_even_strands_have_odd_writhe() {
    let mut rng = common::rng(23);
    for strands in [2, 4, 6] {
        for _ in 0..50 {
            let b = common::random_cyclic(&mut rng, strands, 12);
            assert_eq!(b.exponent_sum().rem_euclid(2), 1, "{b}");
        }
    }
}

/// Permutation of the cable from first principles: ribbon positions follow the outer
/// permutation, offsets are kept, and the inner permutation acts on the first ribbon last.
fn expected_cable_images(outer: &BraidWord, inner: &BraidWord) -> Vec<usize> {
    let w = inner.strands();
    let po = outer.permutation();
    let pi = inner.permutation();
    (0..outer.strands() * w)
        .map(|p| {
            let (ribbon, offset) = (p / w, p % w);
            let r = po.apply(ribbon);
            if r == 0 {
                pi.apply(offset)
            } else {
                r * w + offset
            }
        })
        .collect()
}

#[test]
fn cable_contract() {
    let mut rng = common::rng(24);
    for _ in 0..100 {
        let outer_strands = rng.gen_range(2..=4);
        let outer = common::random_cyclic(&mut rng, outer_strands, 6);
        let inner_strands = rng.gen_range(1..=4);
        let inner = if inner_strands == 1 {
            BraidWord::identity(1)
        } else {
            let len = rng.gen_range(0..=6);
            common::random_word(&mut rng, inner_strands, len)
        };
        let c = cable_compose(&outer, &inner).unwrap();
        let w = inner.strands() as i64;
        assert_eq!(c.strands(), outer.strands() * inner.strands());
        assert_eq!(
            c.exponent_sum(),
            w * w * outer.exponent_sum() + inner.exponent_sum()
        );
        let images: Vec<usize> = c.permutation().images().collect();
        assert_eq!(
            images,
            expected_cable_images(&outer, &inner),
            "{outer} ⊗ {inner}"
        );
    }
}

fn random_signseq(rng: &mut impl Rng) -> SignSeq {
    fn pick(rng: &mut impl Rng, n: usize) -> Vec<i8> {
        (0..n)
            .map(|_| if rng.gen_bool(0.5) { 1 } else { -1 })
            .collect()
    }
    let prefix_len = rng.gen_range(0..=2);
    let cycle_len = rng.gen_range(1..=3);
    let prefix = pick(rng, prefix_len);
    SignSeq::new(prefix, pick(rng, cycle_len)).unwrap()
}

#[test]
fn signseq_equivalence_matches_deletion_oracle() {
    let mut rng = common::rng(25);
    let mut positives = 0;
    for _ in 0..300 {
        let a = random_signseq(&mut rng);
        let b = if rng.gen_bool(0.3) {
            // shifted copy of a, to exercise the positive side
            let unrolled = a.seq().unroll(3);
            SignSeq::new(
                unrolled[..rng.gen_range(0..3)].to_vec(),
                a.seq().cycle().to_vec(),
            )
            .unwrap()
        } else {
            random_signseq(&mut rng)
        };
        let oracle = deletion_oracle(&a.seq().unroll(60), &b.seq().unroll(60), 8, 6, 40);
        if oracle {
            positives += 1;
        }
        assert_eq!(signseq_equivalent(&a, &b), oracle, "{a} vs {b}");
    }
    assert!(positives >= 30, "only {positives} equivalent pairs sampled");
}

#[test]
fn deletion_equivalence_on_generic_sequences() {
    let mut rng = common::rng(26);
    for _ in 0..200 {
        let gen = |rng: &mut rand_chacha::ChaCha8Rng| {
            let p: Vec<u8> = (0..rng.gen_range(0..=2))
                .map(|_| rng.gen_range(0..3))
                .collect();
            let c: Vec<u8> = (0..rng.gen_range(1..=3))
                .map(|_| rng.gen_range(0..3))
                .collect();
            EventuallyPeriodicSeq::new(p, c).unwrap()
        };
        let a = gen(&mut rng);
        let b = gen(&mut rng);
        let oracle = deletion_oracle(&a.unroll(60), &b.unroll(60), 8, 6, 40);
        assert_eq!(a.deletion_equivalent(&b), oracle, "{a} vs {b}");
    }
}
