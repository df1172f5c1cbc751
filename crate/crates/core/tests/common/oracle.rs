//! Brute-force oracles, independent of the library's engines.
//!
//! * `bracket_oracle`: Kauffman bracket by explicit state enumeration on the full
//!   level-by-level point graph, with polynomials as `BTreeMap<A-exponent, i64>`.
//! * `alexander_oracle_value`: Fox calculus on the Artin action, evaluated at rational
//!   points with exact arithmetic.
//! * `deletion_oracle`: tries every deletion pattern of bounded size on finite unrollings.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial in `A` with integer exponents.
pub type APoly = BTreeMap<i64, i64>;

fn add_into(p: &mut APoly, e: i64, c: i64) {
    let v = p.entry(e).or_insert(0);
    *v += c;
    if *v == 0 {
        p.remove(&e);
    }
}

fn mul(a: &APoly, b: &APoly) -> APoly {
    let mut out = APoly::new();
    for (&ea, &ca) in a {
        for (&eb, &cb) in b {
            add_into(&mut out, ea + eb, ca * cb);
        }
    }
    out
}

/// Closed-braid diagram given as signed 1-based generator indices.
pub fn bracket_oracle(strands: usize, word: &[i64]) -> APoly {
    let c = word.len();
    let levels = c + 1;
    let id = |p: usize, t: usize| -> usize { (t % levels) * strands + p };
    let delta: APoly = [(2, -1), (-2, -1)].into_iter().collect();
    let mut total = APoly::new();
    for state in 0u64..(1u64 << c) {
        // adjacency list on the points (p, t), t = 0..=c, plus closure edges (p, c) -- (p, 0)
        let nodes = strands * levels;
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nodes];
        let mut link = |a: usize, b: usize| {
            adj[a].push(b);
            adj[b].push(a);
        };
        for p in 0..strands {
            link(id(p, c), id(p, 0));
        }
        let mut a_count = 0i64;
        for (t, &g) in word.iter().enumerate() {
            let i = g.unsigned_abs() as usize - 1;
            let positive = g > 0;
            let a_smoothing = state >> t & 1 == 1;
            if a_smoothing {
                a_count += 1;
            }
            for p in 0..strands {
                if p != i && p != i + 1 {
                    link(id(p, t), id(p, t + 1));
                }
            }
            // A-smoothing of a positive crossing joins the strands vertically
            if a_smoothing == positive {
                link(id(i, t), id(i, t + 1));
                link(id(i + 1, t), id(i + 1, t + 1));
            } else {
                link(id(i, t), id(i + 1, t));
                link(id(i, t + 1), id(i + 1, t + 1));
            }
        }
        // count components by depth-first search
        let mut seen = vec![false; nodes];
        let mut loops = 0;
        for start in 0..nodes {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        let b_count = c as i64 - a_count;
        let mut term: APoly = [(a_count - b_count, 1)].into_iter().collect();
        for _ in 1..loops {
            term = mul(&term, &delta);
        }
        for (e, v) in term {
            add_into(&mut total, e, v);
        }
    }
    total
}

/// Jones polynomial from the oracle bracket, as `(4·t-exponent, coefficient)` pairs so that
/// half-integer exponents stay integral: key `k` stands for `t^{k/4}`.
pub fn jones_oracle_quarter(strands: usize, word: &[i64]) -> BTreeMap<i64, i64> {
    let w: i64 = word.iter().map(|g| g.signum()).sum();
    let bracket = bracket_oracle(strands, word);
    let sign = if w.rem_euclid(2) == 1 { -1 } else { 1 };
    // (-A)^{-3w} <D>, then A^k = t^{-k/4}
    bracket
        .into_iter()
        .map(|(e, c)| (-(e - 3 * w), sign * c))
        .collect()
}

/// Jones polynomial of a knot as `(t-exponent, coefficient)` pairs.
pub fn jones_oracle_knot(strands: usize, word: &[i64]) -> BTreeMap<i64, i64> {
    jones_oracle_quarter(strands, word)
        .into_iter()
        .map(|(k, c)| {
            assert_eq!(k % 4, 0, "knot Jones polynomial has integer exponents");
            (k / 4, c)
        })
        .collect()
}

type FreeWord = Vec<(usize, i8)>;

fn free_reduce(w: FreeWord) -> FreeWord {
    let mut out: FreeWord = Vec::with_capacity(w.len());
    for l in w {
        if let Some(&last) = out.last() {
            if last.0 == l.0 && last.1 == -l.1 {
                out.pop();
                continue;
            }
        }
        out.push(l);
    }
    out
}

fn invert(w: &FreeWord) -> FreeWord {
    w.iter().rev().map(|&(g, s)| (g, -s)).collect()
}

/// Images of the free generators under the Artin action of the braid word.
fn artin_images(strands: usize, word: &[i64]) -> Vec<FreeWord> {
    let mut images: Vec<FreeWord> = (0..strands).map(|j| vec![(j, 1)]).collect();
    for &g in word {
        let i = g.unsigned_abs() as usize - 1;
        let (xi, xj) = (images[i].clone(), images[i + 1].clone());
        if g > 0 {
            // x_i -> x_i x_{i+1} x_i⁻¹, x_{i+1} -> x_i
            let mut new_i = xi.clone();
            new_i.extend(xj.iter().copied());
            new_i.extend(invert(&xi));
            images[i] = free_reduce(new_i);
            images[i + 1] = xi;
        } else {
            // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}⁻¹ x_i x_{i+1}
            let mut new_j = invert(&xj);
            new_j.extend(xi.iter().copied());
            new_j.extend(xj.iter().copied());
            images[i] = xj;
            images[i + 1] = free_reduce(new_j);
        }
    }
    images
}

fn rational_pow(t: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num_traits::pow(t.clone(), e as usize)
    } else {
        num_traits::pow(t.recip(), (-e) as usize)
    }
}

/// Abelianized Fox derivative `∂w/∂x_j` evaluated at `t`.
fn fox(w: &FreeWord, j: usize, t: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    let mut prefix = 0i64;
    for &(g, s) in w {
        if s > 0 {
            if g == j {
                acc += rational_pow(t, prefix);
            }
            prefix += 1;
        } else {
            prefix -= 1;
            if g == j {
                acc -= rational_pow(t, prefix);
            }
        }
    }
    acc
}

fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut result = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            m.swap(p, k);
            result = -result;
        }
        let pivot = m[k][k].clone();
        result *= pivot.clone();
        for r in k + 1..n {
            let factor = &m[r][k] / &pivot;
            let (upper, lower) = m.split_at_mut(r);
            for (x, y) in lower[0][k..].iter_mut().zip(&upper[k][k..]) {
                *x -= &factor * y;
            }
        }
    }
    result
}

/// `Δ(t)` up to a unit `±t^k`, at the given rational point: the minor of the Fox
/// Jacobian of `x_i = β(x_i)` with the last row and column deleted.
pub fn alexander_oracle_value(strands: usize, word: &[i64], t: &BigRational) -> BigRational {
    let images = artin_images(strands, word);
    let m = strands - 1;
    let matrix: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let d = fox(&images[i], j, t);
                    if i == j {
                        d - BigRational::one()
                    } else {
                        d
                    }
                })
                .collect()
        })
        .collect();
    det(matrix)
}

/// Does `candidate(t) = ±t^k · oracle(t)` hold at every sample point with one `k` and sign?
pub fn agrees_up_to_unit(samples: &[(BigRational, BigRational, BigRational)]) -> bool {
    // samples: (t, candidate value, oracle value)
    for k in -60i64..=60 {
        for sign in [1, -1] {
            let s = BigRational::from_integer(BigInt::from(sign));
            if samples
                .iter()
                .all(|(t, cand, orc)| cand == &(&s * rational_pow(t, k) * orc))
            {
                return true;
            }
        }
    }
    false
}

pub fn sample_points() -> Vec<BigRational> {
    [(2, 1), (3, 1), (-2, 1), (5, 3), (-7, 2)]
        .into_iter()
        .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
        .collect()
}

/// Evaluates `Σ c·t^{k/2}` (doubled exponents) at a rational point; all exponents must be
/// integral.
pub fn eval_doubled(terms: impl Iterator<Item = (i64, BigInt)>, t: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for (e, c) in terms {
        assert_eq!(e % 2, 0, "integral exponent expected");
        acc += BigRational::from_integer(c) * rational_pow(t, e / 2);
    }
    acc
}

/// Deletion-pattern oracle: deletes up to `max_deletions` terms in total from the first
/// `window` terms of the two `len`-term unrollings and compares the first `compare` terms
/// of what remains.
pub fn deletion_oracle<T: PartialEq>(
    a: &[T],
    b: &[T],
    window: usize,
    max_deletions: u32,
    compare: usize,
) -> bool {
    assert!(window <= 16 && a.len() >= compare + max_deletions as usize);
    let keep = |seq: &[T], mask: u32| -> Vec<usize> {
        (0..seq.len())
            .filter(|&i| i >= window || mask >> i & 1 == 0)
            .take(compare)
            .collect()
    };
    for mask_a in 0u32..1 << window {
        let da = mask_a.count_ones();
        if da > max_deletions {
            continue;
        }
        let ia = keep(a, mask_a);
        for mask_b in 0u32..1 << window {
            if da + mask_b.count_ones() > max_deletions {
                continue;
            }
            let ib = keep(b, mask_b);
            if ia.iter().zip(&ib).all(|(&x, &y)| a[x] == b[y]) {
                return true;
            }
        }
    }
    false
}

pub fn is_abs_one(x: &BigInt) -> bool {
    x.abs().is_one()
}
