//! Kauffman bracket of closed-braid diagrams by state sum, and the Jones polynomial.
//!
//! The closure of a braid with `c` letters has `c` crossings joined by `2c` arcs (plus one
//! free loop per strand position that no letter touches). A state picks a smoothing at each
//! crossing; its loops are the components of the arc graph after joining the arcs each
//! smoothing pairs up. States are enumerated depth-first with a rollback union-find, and the
//! top few crossings are split across threads. Only `(#A-smoothings, #loops)` counts are
//! accumulated, so the parallel sum is exact and order-independent.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::poly::{LaurentPolynomial, Variable};
use crate::Limits;

/// Number of leading crossings whose smoothings are fixed per parallel task.
const SPLIT_DEPTH: usize = 8;

struct Diagram {
    crossings: usize,
    /// Arc entering crossing `k` from below on its left / right position.
    in_arc: Vec<[usize; 2]>,
    /// Whether the A-smoothing of crossing `k` is the vertical (oriented) one.
    a_vertical: Vec<bool>,
    free_loops: usize,
}

impl Diagram {
    fn new(b: &BraidWord) -> Self {
        let n = b.strands();
        let c = b.len();
        // arc 2k+s starts at the top of crossing k on side s
        let mut touching: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (k, l) in b.letters().iter().enumerate() {
            touching[l.index - 1].push((k, 0));
            touching[l.index].push((k, 1));
        }
        let mut in_arc = vec![[0usize; 2]; c];
        let mut free_loops = 0;
        for list in &touching {
            if list.is_empty() {
                free_loops += 1;
                continue;
            }
            for (j, &(k, s)) in list.iter().enumerate() {
                let (pk, ps) = list[(j + list.len() - 1) % list.len()];
                in_arc[k][s] = 2 * pk + ps;
            }
        }
        let a_vertical = b.letters().iter().map(|l| l.is_positive()).collect();
        Self {
            crossings: c,
            in_arc,
            a_vertical,
            free_loops,
        }
    }
}

struct RollbackUnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
    components: usize,
    history: Vec<Option<(usize, usize, bool)>>,
}

impl RollbackUnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
            components: n,
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.history.push(None);
            return;
        }
        if self.rank[ra] < self.rank[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        let bumped = self.rank[ra] == self.rank[rb];
        self.parent[rb] = ra;
        if bumped {
            self.rank[ra] += 1;
        }
        self.components -= 1;
        self.history.push(Some((ra, rb, bumped)));
    }

    fn rollback(&mut self) {
        if let Some((ra, rb, bumped)) = self.history.pop().expect("rollback without union") {
            self.parent[rb] = rb;
            if bumped {
                self.rank[ra] -= 1;
            }
            self.components += 1;
        }
    }
}

/// `counts[a][loops]`: number of states with `a` A-smoothings and `loops` loops.
type Counts = Vec<Vec<u64>>;

fn smooth(d: &Diagram, uf: &mut RollbackUnionFind, k: usize, a_smoothing: bool) {
    let vertical = a_smoothing == d.a_vertical[k];
    let [in_l, in_r] = d.in_arc[k];
    let (out_l, out_r) = (2 * k, 2 * k + 1);
    if vertical {
        uf.union(in_l, out_l);
        uf.union(in_r, out_r);
    } else {
        uf.union(in_l, in_r);
        uf.union(out_l, out_r);
    }
}

fn unsmooth(uf: &mut RollbackUnionFind) {
    uf.rollback();
    uf.rollback();
}

fn descend(d: &Diagram, uf: &mut RollbackUnionFind, k: usize, a_count: usize, counts: &mut Counts) {
    if k == d.crossings {
        counts[a_count][uf.components + d.free_loops] += 1;
        return;
    }
    for a_smoothing in [true, false] {
        smooth(d, uf, k, a_smoothing);
        descend(d, uf, k + 1, a_count + a_smoothing as usize, counts);
        unsmooth(uf);
    }
}

fn state_counts(d: &Diagram) -> Counts {
    let c = d.crossings;
    let max_loops = 2 * c + d.free_loops + 1;
    let empty = || vec![vec![0u64; max_loops + 1]; c + 1];
    let split = c.min(SPLIT_DEPTH);
    (0u64..1 << split)
        .into_par_iter()
        .map(|prefix| {
            let mut uf = RollbackUnionFind::new(2 * c);
            let mut a_count = 0;
            for k in 0..split {
                let a = prefix >> k & 1 == 1;
                smooth(d, &mut uf, k, a);
                a_count += a as usize;
            }
            let mut counts = empty();
            descend(d, &mut uf, split, a_count, &mut counts);
            counts
        })
        .reduce(empty, |mut acc, part| {
            for (row, prow) in acc.iter_mut().zip(part) {
                for (x, y) in row.iter_mut().zip(prow) {
                    *x += y;
                }
            }
            acc
        })
}

/// `δ = −A² − A⁻²`.
pub fn loop_value() -> LaurentPolynomial {
    LaurentPolynomial::from_terms(Variable::A, [(2, -1), (-2, -1)])
}

pub fn kauffman_bracket(b: &BraidWord) -> Result<LaurentPolynomial> {
    kauffman_bracket_with(b, &Limits::default())
}

/// Bracket of the closure diagram of `b`, normalized so the crossingless unknot is `1`.
pub fn kauffman_bracket_with(b: &BraidWord, limits: &Limits) -> Result<LaurentPolynomial> {
    if b.len() > limits.max_crossings {
        return Err(Error::Limit {
            what: "crossing count",
            limit: limits.max_crossings,
            actual: b.len(),
        });
    }
    let d = Diagram::new(b);
    let c = d.crossings;
    let counts = state_counts(&d);
    let delta = loop_value();
    let max_loops = counts.iter().map(|r| r.len()).max().unwrap_or(0);
    let delta_pows: Vec<LaurentPolynomial> =
        std::iter::successors(Some(LaurentPolynomial::one(Variable::A)), |p| {
            Some(p * &delta)
        })
        .take(max_loops.max(1))
        .collect();
    let mut total = LaurentPolynomial::zero(Variable::A);
    for (a, row) in counts.iter().enumerate() {
        let a_exp = 2 * a as i64 - c as i64;
        for (loops, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let term = delta_pows[loops - 1]
                .shift_doubled(2 * a_exp)
                .scale(&BigInt::from(count));
            total = &total + &term;
        }
    }
    Ok(total)
}

pub fn jones(b: &BraidWord) -> Result<LaurentPolynomial> {
    jones_with(b, &Limits::default())
}

/// Jones polynomial `V(t) = (−A)^{−3w} ⟨b⟩` at `A = t^{−1/4}`.
pub fn jones_with(b: &BraidWord, limits: &Limits) -> Result<LaurentPolynomial> {
    let bracket = kauffman_bracket_with(b, limits)?;
    let w = b.exponent_sum();
    let sign = if w.rem_euclid(2) == 1 { -1 } else { 1 };
    let normalized = bracket.shift_doubled(-6 * w).scale(&BigInt::from(sign));
    Ok(normalized
        .substitute_power(Variable::T, -1, 4)
        .expect("closed-braid bracket exponents are even after writhe normalization"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(strands: usize, ints: &[i64]) -> BraidWord {
        BraidWord::from_ints(strands, ints).unwrap()
    }

    fn a(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(Variable::A, terms.iter().copied())
    }

    #[test]
    fn crossingless() {
        assert!(kauffman_bracket(&BraidWord::identity(1)).unwrap().is_one());
        assert_eq!(
            kauffman_bracket(&BraidWord::identity(2)).unwrap(),
            loop_value()
        );
        assert_eq!(
            kauffman_bracket(&BraidWord::identity(3)).unwrap(),
            loop_value().pow(2)
        );
    }

    #[test]
    fn one_crossing_kink() {
        assert_eq!(kauffman_bracket(&w(2, &[1])).unwrap(), a(&[(3, -1)]));
        assert_eq!(kauffman_bracket(&w(2, &[-1])).unwrap(), a(&[(-3, -1)]));
    }

    #[test]
    fn unknot_jones() {
        assert!(jones(&BraidWord::identity(1)).unwrap().is_one());
        assert!(jones(&w(3, &[1, -2])).unwrap().is_one());
        assert!(jones(&w(2, &[1])).unwrap().is_one());
    }

    #[test]
    fn hopf_link_has_half_integer_exponents() {
        let v = jones(&w(2, &[1, 1])).unwrap();
        assert!(v.terms().all(|(e, _)| e % 2 != 0));
    }

    #[test]
    fn crossing_cap() {
        let limits = Limits {
            max_crossings: 3,
            ..Limits::default()
        };
        let err = kauffman_bracket_with(&w(2, &[1, 1, 1, 1]), &limits).unwrap_err();
        assert!(err.is_limit());
    }

    #[test]
    fn rollback_union_find_restores() {
        let mut uf = RollbackUnionFind::new(4);
        uf.union(0, 1);
        uf.union(1, 2);
        uf.union(0, 2);
        assert_eq!(uf.components, 2);
        uf.rollback();
        uf.rollback();
        assert_eq!(uf.components, 3);
        uf.rollback();
        assert_eq!(uf.components, 4);
        assert!((0..4).all(|i| uf.find(i) == i));
    }
}
