use std::collections::BTreeSet;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::types::{AmbientCompanion, SignSeq, SolenoidSpec, SolenoidType, StageBraid, Verdict};
use crate::braid::{cable_compose, is_achiral_braid_with, BraidWord};
use crate::error::{Error, Result};
use crate::invariants::{
    alexander, jones_with, knottedness_verdict_with, linking_scale, w_class_of_with,
    KnottingOutcome, KnottingVerdict, WLabel,
};
use crate::poly::{LaurentPolynomial, Variable};
use crate::seq::EventuallyPeriodicSeq;
use crate::Limits;

/// Winding numbers of the stages, with the same prefix/cycle shape.
pub fn type_of(spec: &SolenoidSpec) -> SolenoidType {
    let seq = spec.stages.map(|s| s.winding());
    SolenoidType::new(seq.prefix().to_vec(), seq.cycle().to_vec())
        .expect("stage braids have at least 2 strands")
}

/// Common-tail equivalence of two eventually periodic sequences.
pub fn deletion_equivalent<T: Clone + Eq>(
    a: &EventuallyPeriodicSeq<T>,
    b: &EventuallyPeriodicSeq<T>,
) -> bool {
    a.deletion_equivalent(b)
}

fn prime_factors(mut n: u64, out: &mut BTreeSet<u64>) {
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            out.insert(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.insert(n);
    }
}

/// Primes dividing infinitely many winding numbers.
pub fn infinite_primes(t: &SolenoidType) -> BTreeSet<u64> {
    let mut primes = BTreeSet::new();
    for &w in t.cycle() {
        prime_factors(w, &mut primes);
    }
    primes
}

/// Equality of the supernatural numbers `Π w_n` up to finite factors.
///
/// Two solenoid types give homeomorphic solenoids iff this holds (the classical
/// classification of solenoids); for eventually periodic types it reduces to the primes
/// of the repeating part coinciding. This is strictly stronger than deletion equivalence.
pub fn supernatural_equal(a: &SolenoidType, b: &SolenoidType) -> bool {
    infinite_primes(a) == infinite_primes(b)
}

/// `±1` encoding of an unknotted 2-adic spec: `σ₁`-class stages map to `+1`, `σ₁⁻¹`-class to `−1`.
pub fn encode_2adic(spec: &SolenoidSpec) -> Result<SignSeq> {
    encode_2adic_with(spec, &Limits::default())
}

pub fn encode_2adic_with(spec: &SolenoidSpec, limits: &Limits) -> Result<SignSeq> {
    if !spec.ambient.is_unknot() {
        return Err(Error::AmbientNotUnknot);
    }
    let mut stage_no = 0;
    let signs = spec.stages.try_map(|s| {
        stage_no += 1;
        let b = s.braid();
        if b.strands() != 2 {
            return Err(Error::NotInW2 {
                stage: stage_no,
                reason: format!("{} strands", b.strands()),
            });
        }
        match w_class_of_with(b, limits)? {
            Some(c) if c.label == WLabel::Plus2 => Ok(1i8),
            Some(c) if c.label == WLabel::Minus2 => Ok(-1i8),
            _ => Err(Error::NotInW2 {
                stage: stage_no,
                reason: format!("closure of {b} is knotted in S³"),
            }),
        }
    })?;
    SignSeq::new(signs.prefix().to_vec(), signs.cycle().to_vec())
}

pub fn signseq_equivalent(a: &SignSeq, b: &SignSeq) -> bool {
    a.seq().deletion_equivalent(b.seq())
}

/// Is the unknotted 2-adic solenoid encoded by `s` equivalent to its mirror image?
pub fn is_achiral_2adic(s: &SignSeq) -> bool {
    signseq_equivalent(s, &s.negate())
}

/// All but finitely many winding numbers odd, i.e. every repeating entry odd.
pub fn strictly_achiral_embeddable(t: &SolenoidType) -> bool {
    t.cycle().iter().all(|w| w % 2 == 1)
}

/// `ββ*` for the standard cycle `β = σ₁⋯σ_{w−1}`.
pub fn achiral_double(w: usize) -> BraidWord {
    let beta = BraidWord::standard_cycle(w);
    let mut letters = beta.letters().to_vec();
    letters.extend(beta.mirror().letters().iter().copied());
    BraidWord::new(w, letters).expect("indices in range")
}

/// A strictly achiral defining sequence of the given type: every stage is `β_nβ_n*` with
/// `β_n = σ₁⋯σ_{w_n−1}`, inside the unknot or (when `knotted`) the figure-eight knot.
///
/// Even winding numbers in the prefix cannot carry such a stage and are dropped; the
/// resulting type is deletion equivalent to `t`.
pub fn construct_strictly_achiral(t: &SolenoidType, knotted: bool) -> Result<SolenoidSpec> {
    if let Some(&w) = t.cycle().iter().find(|w| *w % 2 == 0) {
        return Err(Error::ParityViolation { entry: w });
    }
    let stage =
        |&w: &u64| StageBraid::new(achiral_double(w as usize)).expect("odd w gives cyclic ββ*");
    let prefix = t
        .prefix()
        .iter()
        .filter(|w| *w % 2 == 1)
        .map(stage)
        .collect();
    let cycle = t.cycle().iter().map(stage).collect();
    let ambient = if knotted {
        AmbientCompanion::figure_eight()
    } else {
        AmbientCompanion::unknot()
    };
    Ok(SolenoidSpec::new(
        ambient,
        EventuallyPeriodicSeq::new(prefix, cycle).expect("cycle nonempty"),
    ))
}

pub fn verify_strict_achirality(spec: &SolenoidSpec) -> Verdict {
    verify_strict_achirality_with(spec, &Limits::default())
}

/// `No` when a repeating stage has even winding number (its writhe is then odd at
/// infinitely many levels); `Yes` when the ambient is known strictly achiral and every stage
/// has writhe zero and is conjugate to its mirror; `Unknown` otherwise.
pub fn verify_strict_achirality_with(spec: &SolenoidSpec, limits: &Limits) -> Verdict {
    if spec.stages.cycle().iter().any(|s| s.winding() % 2 == 0) {
        return Verdict::No;
    }
    if !spec.ambient.strictly_achiral_known() {
        return Verdict::Unknown;
    }
    let all_achiral = spec.stages.entries().all(|s| {
        s.braid().exponent_sum() == 0
            && matches!(is_achiral_braid_with(s.braid(), limits), Ok(r) if r.conjugate)
    });
    if all_achiral {
        Verdict::Yes
    } else {
        Verdict::Unknown
    }
}

/// Braid whose closure is the core of `N_n` in S³: the ambient braid cabled by stages
/// `1..=n` in turn.
pub fn core_braid(spec: &SolenoidSpec, n: usize) -> BraidWord {
    (1..=n).fold(spec.ambient.braid(), |acc, k| {
        cable_compose(&acc, spec.stage(k).braid()).expect("core braids are cyclic")
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InvariantKind {
    Jones,
    Alexander,
    Writhe,
}

impl InvariantKind {
    pub fn name(self) -> &'static str {
        match self {
            InvariantKind::Jones => "jones",
            InvariantKind::Alexander => "alexander",
            InvariantKind::Writhe => "writhe",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantSequence {
    /// `(level, I(N_level))` for every computed level, in order.
    pub levels: Vec<(usize, LaurentPolynomial)>,
    /// Coefficient of `x^n` in `Σ g(n)·I(N_n)·x^n`, for computed levels.
    pub series: Vec<LaurentPolynomial>,
    /// First level that could not be computed, with the reason.
    pub truncated: Option<(usize, Error)>,
}

pub fn invariant_sequence(
    spec: &SolenoidSpec,
    depth: usize,
    which: InvariantKind,
    weights: &[i64],
) -> Result<InvariantSequence> {
    invariant_sequence_with(spec, depth, which, weights, &Limits::default())
}

/// Invariants of the core knots of `N₀, …, N_depth` and the weighted formal series.
/// Levels are computed in parallel; output is ordered by level and stops at the first
/// level that fails.
pub fn invariant_sequence_with(
    spec: &SolenoidSpec,
    depth: usize,
    which: InvariantKind,
    weights: &[i64],
    limits: &Limits,
) -> Result<InvariantSequence> {
    if weights.len() < depth + 1 {
        return Err(Error::InvalidArgument(format!(
            "need {} weights for depth {depth}, got {}",
            depth + 1,
            weights.len()
        )));
    }
    let cores: Vec<BraidWord> = {
        let mut v = vec![spec.ambient.braid()];
        for k in 1..=depth {
            let next = cable_compose(&v[k - 1], spec.stage(k).braid())?;
            v.push(next);
        }
        v
    };
    let results: Vec<Result<LaurentPolynomial>> = cores
        .par_iter()
        .map(|b| level_invariant(b, which, limits))
        .collect();
    let mut levels = Vec::new();
    let mut series = Vec::new();
    let mut truncated = None;
    for (level, r) in results.into_iter().enumerate() {
        match r {
            Ok(p) => {
                series.push(p.scale(&BigInt::from(weights[level])));
                levels.push((level, p));
            }
            Err(e) => {
                truncated = Some((level, e));
                break;
            }
        }
    }
    Ok(InvariantSequence {
        levels,
        series,
        truncated,
    })
}

fn level_invariant(
    b: &BraidWord,
    which: InvariantKind,
    limits: &Limits,
) -> Result<LaurentPolynomial> {
    match which {
        InvariantKind::Jones => jones_with(b, limits),
        InvariantKind::Alexander => alexander(b),
        InvariantKind::Writhe => Ok(LaurentPolynomial::constant(Variable::T, b.exponent_sum())),
    }
}

/// Smale realization: unknotted ambient, stage `n` the standard cycle `σ₁⋯σ_{w_n−1}`.
pub fn smale_construct(t: &SolenoidType) -> Result<SolenoidSpec> {
    if !t.prefix().is_empty() {
        return Err(Error::NonemptyPrefix);
    }
    let cycle = t
        .cycle()
        .iter()
        .map(|&w| StageBraid::new(BraidWord::standard_cycle(w as usize)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SolenoidSpec::new(
        AmbientCompanion::unknot(),
        EventuallyPeriodicSeq::periodic(cycle)?,
    ))
}

pub fn smale_enumerate(t: &SolenoidType) -> Result<Vec<SolenoidSpec>> {
    smale_enumerate_with(t, &Limits::default())
}

/// Every assignment of an unknotted class to each repeating position, up to rotation of the
/// period. Only defined when every winding number is 2 or 3.
pub fn smale_enumerate_with(t: &SolenoidType, limits: &Limits) -> Result<Vec<SolenoidSpec>> {
    if !t.prefix().is_empty() {
        return Err(Error::NonemptyPrefix);
    }
    if let Some(&w) = t.cycle().iter().find(|&&w| w > 3) {
        return Err(Error::CountablyInfinite { entry: w });
    }
    let choices: Vec<&[WLabel]> = t
        .cycle()
        .iter()
        .map(|&w| WLabel::for_strands(w as usize))
        .collect();
    let total: usize = choices.iter().map(|c| c.len()).product();
    let mut kept: Vec<EventuallyPeriodicSeq<WLabel>> = Vec::new();
    for index in 0..total {
        // mixed radix, first position most significant
        let mut rest = index;
        let mut labels = vec![WLabel::Plus2; choices.len()];
        for (slot, c) in labels.iter_mut().zip(&choices).rev() {
            *slot = c[rest % c.len()];
            rest /= c.len();
        }
        let seq = EventuallyPeriodicSeq::periodic(labels)?;
        if !kept.iter().any(|k| k.deletion_equivalent(&seq)) {
            kept.push(seq);
        }
    }
    let specs: Vec<SolenoidSpec> = kept
        .iter()
        .map(|labels| {
            SolenoidSpec::new(
                AmbientCompanion::unknot(),
                labels.map(|l| {
                    StageBraid::new(l.representative()).expect("representatives are cyclic")
                }),
            )
        })
        .collect();
    if t.cycle().iter().all(|&w| w == 2) {
        let encoded = specs
            .iter()
            .map(|s| encode_2adic_with(s, limits))
            .collect::<Result<Vec<_>>>()?;
        for (i, a) in encoded.iter().enumerate() {
            for b in &encoded[i + 1..] {
                assert!(
                    !signseq_equivalent(a, b),
                    "enumerated 2-adic specs must be inequivalent"
                );
            }
        }
    }
    Ok(specs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Aggregate {
    Knotted,
    UnknottedThrough(usize),
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnottingReport {
    pub levels: Vec<KnottingOutcome>,
    pub aggregate: Aggregate,
    pub truncated: Option<(usize, Error)>,
}

pub fn knotting_report(spec: &SolenoidSpec, depth: usize) -> KnottingReport {
    knotting_report_with(spec, depth, &Limits::default())
}

/// Knottedness of `N₀, …, N_depth` in S³.
pub fn knotting_report_with(spec: &SolenoidSpec, depth: usize, limits: &Limits) -> KnottingReport {
    let mut levels = Vec::new();
    let mut truncated = None;
    for n in 0..=depth {
        match knottedness_verdict_with(&core_braid(spec, n), limits) {
            Ok(o) => levels.push(o),
            Err(e) => {
                truncated = Some((n, e));
                break;
            }
        }
    }
    let aggregate = if levels.iter().any(|o| o.verdict == KnottingVerdict::Knotted) {
        Aggregate::Knotted
    } else if truncated.is_none()
        && levels
            .iter()
            .all(|o| o.verdict == KnottingVerdict::Unknotted)
    {
        Aggregate::UnknottedThrough(depth)
    } else {
        Aggregate::Unknown
    };
    KnottingReport {
        levels,
        aggregate,
        truncated,
    }
}

/// Some (in fact every) pair of levels has nonzero linking iff the ambient cores link.
pub fn algebraically_linked(_a: &SolenoidSpec, _b: &SolenoidSpec, lk0: i64) -> bool {
    lk0 != 0
}

/// Linking number of `N_n` (of `a`) with `N'_j` (of `b`).
pub fn level_linking(a: &SolenoidSpec, n: usize, b: &SolenoidSpec, j: usize, lk0: i64) -> i128 {
    let wa: Vec<u64> = (1..=n).map(|k| a.stage(k).winding()).collect();
    let wb: Vec<u64> = (1..=j).map(|k| b.stage(k).winding()).collect();
    linking_scale(lk0, &wa, &wb)
}
