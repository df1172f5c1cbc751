//! Conjugacy decision with witnesses via super summit sets.
//!
//! Both braids are moved into their super summit sets by iterated cycling (raises `inf`)
//! and decycling (lowers `sup`). The super summit set of the first is then explored
//! breadth-first under conjugation by simple elements; it is connected under such
//! conjugations, so the second braid's representative is found iff the two are conjugate.

use std::collections::{HashMap, HashSet, VecDeque};

use super::garside::{all_simples, simple_word, GarsideCanonical};
use super::permutation::Permutation;
use super::word::BraidWord;
use crate::error::{Error, Result};
use crate::Limits;

/// Outcome of a conjugacy test. When `conjugate` is true, `witness` is some `α` with
/// `α⁻¹ · a · α = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyResult {
    pub conjugate: bool,
    pub witness: Option<BraidWord>,
}

impl ConjugacyResult {
    fn no() -> Self {
        Self {
            conjugate: false,
            witness: None,
        }
    }
}

/// Largest strand count for which the simple-element orbit search runs (`n!` conjugators
/// per orbit element).
pub const MAX_SEARCH_STRANDS: usize = 8;

pub fn are_conjugate(a: &BraidWord, b: &BraidWord) -> Result<ConjugacyResult> {
    are_conjugate_with(a, b, &Limits::default())
}

pub fn are_conjugate_with(
    a: &BraidWord,
    b: &BraidWord,
    limits: &Limits,
) -> Result<ConjugacyResult> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    let n = a.strands();
    let ga = GarsideCanonical::from_word(a);
    let gb = GarsideCanonical::from_word(b);
    if ga == gb {
        return Ok(ConjugacyResult {
            conjugate: true,
            witness: Some(BraidWord::identity(n)),
        });
    }
    if a.exponent_sum() != b.exponent_sum()
        || a.permutation().cycle_type() != b.permutation().cycle_type()
    {
        return Ok(ConjugacyResult::no());
    }
    if n > MAX_SEARCH_STRANDS {
        return Err(Error::Limit {
            what: "strand count for conjugacy search",
            limit: MAX_SEARCH_STRANDS,
            actual: n,
        });
    }

    let (sa, ca) = super_summit_representative(&ga);
    let (sb, cb) = super_summit_representative(&gb);
    if sa.inf() != sb.inf() || sa.sup() != sb.sup() {
        return Ok(ConjugacyResult::no());
    }

    let Some(path) = search_orbit(&sa, &sb, limits.max_orbit)? else {
        return Ok(ConjugacyResult::no());
    };

    // sa = ca⁻¹ a ca, sb = cb⁻¹ b cb, sb = p⁻¹ sa p  =>  (ca p cb⁻¹)⁻¹ a (ca p cb⁻¹) = b
    let mut witness = ca;
    for s in &path {
        witness = witness.multiply(&simple_canonical(s));
    }
    witness = witness.multiply(&invert(&cb));
    let witness = witness.to_word();

    let check = GarsideCanonical::from_word(&a.conjugate_by(&witness)?);
    assert_eq!(check, gb, "conjugacy witness failed verification");
    Ok(ConjugacyResult {
        conjugate: true,
        witness: Some(witness),
    })
}

/// Conjugacy of `b` with its mirror image.
pub fn is_achiral_braid(b: &BraidWord) -> Result<ConjugacyResult> {
    is_achiral_braid_with(b, &Limits::default())
}

pub fn is_achiral_braid_with(b: &BraidWord, limits: &Limits) -> Result<ConjugacyResult> {
    are_conjugate_with(b, &b.mirror(), limits)
}

/// Moves `x` into its super summit set. Returns the representative and the accumulated
/// conjugator `c` with `c⁻¹ x c` equal to the representative.
pub fn super_summit_representative(x: &GarsideCanonical) -> (GarsideCanonical, GarsideCanonical) {
    let n = x.strands();
    let bound = n * (n - 1) / 2 + 1;
    let mut current = x.clone();
    let mut conj = GarsideCanonical::identity(n);

    // maximize inf by cycling
    'raise: loop {
        let mut y = current.clone();
        let mut acc = GarsideCanonical::identity(n);
        for _ in 0..bound {
            let Some((next, c)) = y.cycle() else {
                break 'raise;
            };
            acc = acc.multiply(&simple_canonical(&c));
            y = next;
            if y.inf() > current.inf() {
                current = y;
                conj = conj.multiply(&acc);
                continue 'raise;
            }
        }
        break;
    }

    // minimize sup by decycling
    'lower: loop {
        let mut y = current.clone();
        let mut acc = GarsideCanonical::identity(n);
        for _ in 0..bound {
            let Some((next, last)) = y.decycle() else {
                break 'lower;
            };
            acc = acc.multiply(&invert(&simple_canonical(&last)));
            y = next;
            if y.sup() < current.sup() {
                current = y;
                conj = conj.multiply(&acc);
                continue 'lower;
            }
        }
        break;
    }
    (current, conj)
}

/// The super summit set containing `x` (which must already be a super summit element).
pub fn super_summit_set(x: &GarsideCanonical, limits: &Limits) -> Result<Vec<GarsideCanonical>> {
    let simples = nontrivial_simples(x.strands());
    let mut seen: HashSet<GarsideCanonical> = HashSet::new();
    let mut order = vec![x.clone()];
    seen.insert(x.clone());
    let mut head = 0;
    while head < order.len() {
        let y = order[head].clone();
        head += 1;
        for s in &simples {
            let z = y.conjugate_by_simple(s);
            if z.inf() == x.inf() && z.sup() == x.sup() && !seen.contains(&z) {
                seen.insert(z.clone());
                order.push(z);
                if order.len() > limits.max_orbit {
                    return Err(orbit_limit(limits, order.len()));
                }
            }
        }
    }
    Ok(order)
}

/// Breadth-first search from `start` to `target` inside the super summit set. Returns the
/// sequence of simple conjugators, or `None` if the orbit closes without reaching `target`.
fn search_orbit(
    start: &GarsideCanonical,
    target: &GarsideCanonical,
    max_orbit: usize,
) -> Result<Option<Vec<Permutation>>> {
    if start == target {
        return Ok(Some(Vec::new()));
    }
    let simples = nontrivial_simples(start.strands());
    // parent: element -> (predecessor index, conjugator index)
    let mut index: HashMap<GarsideCanonical, usize> = HashMap::new();
    let mut nodes: Vec<(GarsideCanonical, Option<(usize, usize)>)> = vec![(start.clone(), None)];
    index.insert(start.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(cur) = queue.pop_front() {
        let y = nodes[cur].0.clone();
        for (si, s) in simples.iter().enumerate() {
            let z = y.conjugate_by_simple(s);
            if z.inf() != start.inf() || z.sup() != start.sup() || index.contains_key(&z) {
                continue;
            }
            let id = nodes.len();
            let found = &z == target;
            index.insert(z.clone(), id);
            nodes.push((z, Some((cur, si))));
            if found {
                let mut path = Vec::new();
                let mut at = id;
                while let Some((prev, si)) = nodes[at].1 {
                    path.push(simples[si].clone());
                    at = prev;
                }
                path.reverse();
                return Ok(Some(path));
            }
            if nodes.len() > max_orbit {
                return Err(Error::Limit {
                    what: "summit orbit size",
                    limit: max_orbit,
                    actual: nodes.len(),
                });
            }
            queue.push_back(id);
        }
    }
    Ok(None)
}

fn orbit_limit(limits: &Limits, actual: usize) -> Error {
    Error::Limit {
        what: "summit orbit size",
        limit: limits.max_orbit,
        actual,
    }
}

fn nontrivial_simples(n: usize) -> Vec<Permutation> {
    all_simples(n)
        .into_iter()
        .filter(|p| !p.is_identity())
        .collect()
}

fn simple_canonical(s: &Permutation) -> GarsideCanonical {
    let n = s.size();
    GarsideCanonical::from_word(&BraidWord::from_letters_unchecked(n, simple_word(s)))
}

fn invert(x: &GarsideCanonical) -> GarsideCanonical {
    GarsideCanonical::from_word(&x.to_word().inverse())
}
