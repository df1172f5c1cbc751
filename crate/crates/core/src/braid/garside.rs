//! Left normal form `Δ^inf · A₁ ⋯ A_r` for braids.
//!
//! Simple elements (positive braids in which each pair of strands crosses at most once) are
//! stored as their strand permutations. For a simple `s` with permutation `π`:
//!
//! * `s` starts with `σ_i` iff `π(i) > π(i+1)` (left descent),
//! * `s` ends with `σ_i` iff `π⁻¹(i) > π⁻¹(i+1)` (right descent),
//! * a pair `(s, t)` is left-weighted iff every left descent of `t` is a right descent of `s`.

use std::fmt;

use super::permutation::Permutation;
use super::word::{BraidWord, Letter};

/// Canonical left-greedy form of a braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GarsideCanonical {
    strands: usize,
    inf: i64,
    factors: Vec<Permutation>,
}

impl GarsideCanonical {
    pub fn identity(strands: usize) -> Self {
        Self {
            strands,
            inf: 0,
            factors: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Exponent of the half twist `Δ`.
    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    /// Canonical length: number of non-trivial, non-`Δ` simple factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// Normal form of a braid word.
    pub fn from_word(word: &BraidWord) -> Self {
        let n = word.strands();
        if n == 1 {
            return Self::identity(1);
        }
        // Each negative letter σ_i⁻¹ = Δ⁻¹·(Δσ_i⁻¹); moving Δ⁻¹ to the front applies τ to the
        // factors before it. Record the Δ-exponent at push time and apply τ once at the end if the
        // number of Δ⁻¹ passed is odd.
        let mut inf = 0i64;
        let mut pushed: Vec<(Permutation, i64)> = Vec::with_capacity(word.len());
        for l in word.letters() {
            let i = l.index - 1;
            if l.is_positive() {
                pushed.push((Permutation::adjacent_transposition(n, i), inf));
            } else {
                inf -= 1;
                pushed.push((delta_over_generator(n, i), inf));
            }
        }
        let factors = pushed
            .into_iter()
            .map(|(p, at)| if (at - inf) % 2 != 0 { tau(&p) } else { p })
            .collect();
        normalize(n, inf, factors)
    }

    /// Re-serializes to a braid word: `Δ^inf` followed by a positive word for each factor.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let mut letters = Vec::new();
        if n > 1 {
            let delta = simple_word(&Permutation::reversal(n));
            if self.inf >= 0 {
                for _ in 0..self.inf {
                    letters.extend_from_slice(&delta);
                }
            } else {
                let inv: Vec<Letter> = delta.iter().rev().map(|l| l.inverse()).collect();
                for _ in 0..-self.inf {
                    letters.extend_from_slice(&inv);
                }
            }
            for f in &self.factors {
                letters.extend(simple_word(f));
            }
        }
        BraidWord::from_letters_unchecked(n, letters)
    }

    /// Product `self · other` in normal form.
    pub fn multiply(&self, other: &GarsideCanonical) -> GarsideCanonical {
        assert_eq!(self.strands, other.strands);
        if self.strands == 1 {
            return self.clone();
        }
        // Δ^p A · Δ^q B = Δ^{p+q} τ^q(A) B
        let mut factors: Vec<Permutation> =
            self.factors.iter().map(|a| tau_pow(a, other.inf)).collect();
        factors.extend(other.factors.iter().cloned());
        normalize(self.strands, self.inf + other.inf, factors)
    }

    /// Conjugate `s⁻¹ · self · s` by a simple element `s`.
    pub fn conjugate_by_simple(&self, s: &Permutation) -> GarsideCanonical {
        let n = self.strands;
        // s⁻¹ = Δ⁻¹ τ(∂s), so s⁻¹ Δ^p A s = Δ^{p-1} τ^{p+1}(∂s) A s
        let head = tau_pow(&complement(s), self.inf + 1);
        let mut factors = Vec::with_capacity(self.factors.len() + 2);
        factors.push(head);
        factors.extend(self.factors.iter().cloned());
        factors.push(s.clone());
        normalize(n, self.inf - 1, factors)
    }

    /// Cycling: conjugation by `τ^inf(A₁)`. Returns the conjugate and the conjugating simple.
    pub fn cycle(&self) -> Option<(GarsideCanonical, Permutation)> {
        let first = self.factors.first()?;
        let conj = tau_pow(first, self.inf);
        let mut factors: Vec<Permutation> = self.factors[1..].to_vec();
        factors.push(conj.clone());
        Some((normalize(self.strands, self.inf, factors), conj))
    }

    /// Decycling: conjugation by `A_r⁻¹`. Returns the conjugate and `A_r`.
    pub fn decycle(&self) -> Option<(GarsideCanonical, Permutation)> {
        let last = self.factors.last()?.clone();
        let mut factors = Vec::with_capacity(self.factors.len());
        factors.push(tau_pow(&last, self.inf));
        factors.extend(self.factors[..self.factors.len() - 1].iter().cloned());
        Some((normalize(self.strands, self.inf, factors), last))
    }
}

impl fmt::Display for GarsideCanonical {
    /// `Δ^inf · [perm] · [perm] …` with 1-based one-line permutations.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.inf)?;
        for p in &self.factors {
            write!(f, " · {p}")?;
        }
        Ok(())
    }
}

/// `Δ·σ_i⁻¹` as a simple element: `x -> τ_i(n-1-x)`.
fn delta_over_generator(n: usize, i: usize) -> Permutation {
    let mut p = Permutation::reversal(n);
    // post-compose with the transposition (i i+1): swap the *values* i and i+1
    swap_values(&mut p, i);
    p
}

fn swap_values(p: &mut Permutation, i: usize) {
    let a = (0..p.size()).position(|x| p.apply(x) == i).unwrap();
    let b = (0..p.size()).position(|x| p.apply(x) == i + 1).unwrap();
    let mut images: Vec<usize> = p.images().collect();
    images[a] = i + 1;
    images[b] = i;
    *p = Permutation::from_images(images).unwrap();
}

/// Conjugation by `Δ`: `σ_i ↦ σ_{n-i}`.
pub(crate) fn tau(p: &Permutation) -> Permutation {
    let n = p.size();
    Permutation::from_images((0..n).map(|x| n - 1 - p.apply(n - 1 - x)).collect()).unwrap()
}

pub(crate) fn tau_pow(p: &Permutation, k: i64) -> Permutation {
    if k.rem_euclid(2) == 1 {
        tau(p)
    } else {
        p.clone()
    }
}

/// Right complement `∂s = s⁻¹Δ`.
pub(crate) fn complement(s: &Permutation) -> Permutation {
    let n = s.size();
    s.inverse().then(&Permutation::reversal(n))
}

fn is_delta(p: &Permutation) -> bool {
    let n = p.size();
    p.images().enumerate().all(|(i, j)| j == n - 1 - i)
}

#[inline]
fn left_descent(p: &Permutation, i: usize) -> bool {
    p.apply(i) > p.apply(i + 1)
}

#[inline]
fn right_descent(inv: &Permutation, i: usize) -> bool {
    inv.apply(i) > inv.apply(i + 1)
}

/// Is `(s, t)` a left-weighted pair?
pub fn is_left_weighted(s: &Permutation, t: &Permutation) -> bool {
    let inv = s.inverse();
    (0..s.size().saturating_sub(1)).all(|i| !left_descent(t, i) || right_descent(&inv, i))
}

/// Moves generators from the front of `t` to the back of `s` until the pair is left-weighted.
/// Returns whether anything moved.
fn make_left_weighted(s: &mut Permutation, t: &mut Permutation) -> bool {
    let n = s.size();
    let mut changed = false;
    loop {
        let inv = s.inverse();
        let Some(i) = (0..n - 1).find(|&i| left_descent(t, i) && !right_descent(&inv, i)) else {
            return changed;
        };
        // s <- s·σ_i ; t <- σ_i⁻¹·t
        swap_values(s, i);
        t.swap_images(i);
        changed = true;
    }
}

/// Normal form of `Δ^inf · f₁ ⋯ f_m` for arbitrary simple factors.
fn normalize(n: usize, mut inf: i64, mut factors: Vec<Permutation>) -> GarsideCanonical {
    factors.retain(|f| !f.is_identity());
    // Insertion from the right: after appending f_j, push left-weighting leftwards until a
    // pair is unchanged. Repeat whole passes until stable.
    loop {
        let mut changed = false;
        for j in 1..factors.len() {
            let mut k = j;
            while k > 0 {
                let (left, right) = factors.split_at_mut(k);
                if make_left_weighted(&mut left[k - 1], &mut right[0]) {
                    changed = true;
                    k -= 1;
                } else {
                    break;
                }
            }
        }
        if !changed {
            break;
        }
    }
    // Δ factors sit at the front, trivial factors at the back.
    let leading = factors.iter().take_while(|f| is_delta(f)).count();
    if leading > 0 {
        // Δ^inf Δ^k B = Δ^{inf+k} B
        factors.drain(..leading);
        inf += leading as i64;
    }
    factors.retain(|f| !f.is_identity());
    GarsideCanonical {
        strands: n,
        inf,
        factors,
    }
}

/// A positive word for a simple element, reading off left descents greedily.
pub(crate) fn simple_word(p: &Permutation) -> Vec<Letter> {
    let n = p.size();
    let mut p = p.clone();
    let mut out = Vec::with_capacity(p.inversions());
    while let Some(i) = (0..n.saturating_sub(1)).find(|&i| left_descent(&p, i)) {
        out.push(Letter::pos(i + 1));
        p.swap_images(i);
    }
    out
}

/// Every permutation of `n` points, in lexicographic order of image lists.
pub fn all_simples(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation::from_images(current.clone()).unwrap());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| current[i] < current[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}
