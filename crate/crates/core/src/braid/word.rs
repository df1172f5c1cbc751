use std::fmt;
use std::str::FromStr;

use super::permutation::Permutation;
use crate::error::{Error, Result};

/// One Artin generator `σ_index^sign`. Indices are 1-based; `sign` is `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub sign: i8,
}

impl Letter {
    pub fn pos(index: usize) -> Self {
        Self { index, sign: 1 }
    }

    pub fn neg(index: usize) -> Self {
        Self { index, sign: -1 }
    }

    /// Signed integer form: `k` for `σ_k`, `-k` for `σ_k⁻¹`.
    pub fn to_int(self) -> i64 {
        self.index as i64 * self.sign as i64
    }

    pub fn from_int(k: i64) -> Option<Self> {
        match k {
            0 => None,
            k if k > 0 => Some(Self::pos(k as usize)),
            k => Some(Self::neg(k.unsigned_abs() as usize)),
        }
    }

    pub fn inverse(self) -> Self {
        Self {
            index: self.index,
            sign: -self.sign,
        }
    }

    pub fn is_positive(self) -> bool {
        self.sign > 0
    }
}

/// A word in the Artin generators of the braid group on `strands` strands.
///
/// The empty word is the identity braid. Letter `σ_i` with sign `+1` takes the strand at
/// position `i` over the strand at position `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        for l in &letters {
            if l.index == 0 || l.index >= strands || (l.sign != 1 && l.sign != -1) {
                return Err(Error::GeneratorOutOfRange {
                    index: l.index,
                    strands,
                });
            }
        }
        Ok(Self { strands, letters })
    }

    /// Builds a word from the signed-integer syntax (`1 -2` = `σ₁σ₂⁻¹`).
    pub fn from_ints(strands: usize, ints: &[i64]) -> Result<Self> {
        let letters = ints
            .iter()
            .map(|&k| Letter::from_int(k).ok_or(Error::GeneratorOutOfRange { index: 0, strands }))
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub(crate) fn from_letters_unchecked(strands: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.index >= 1 && l.index < strands));
        Self { strands, letters }
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1, "braid needs at least one strand");
        Self {
            strands,
            letters: Vec::new(),
        }
    }

    /// `σ_i` on `strands` strands.
    pub fn generator(strands: usize, i: usize) -> Result<Self> {
        Self::new(strands, vec![Letter::pos(i)])
    }

    /// The standard cycle `σ₁σ₂⋯σ_{w−1}` on `w` strands.
    pub fn standard_cycle(w: usize) -> Self {
        assert!(w >= 1);
        Self {
            strands: w,
            letters: (1..w).map(Letter::pos).collect(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_ints(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.to_int()).collect()
    }

    fn check_strands(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    /// Group product `self · other` with adjacent inverse pairs cancelled.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_strands(other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        push_reduced(&mut letters, self.letters.iter().copied());
        push_reduced(&mut letters, other.letters.iter().copied());
        Ok(Self::from_letters_unchecked(self.strands, letters))
    }

    /// Composes a sequence of words; all must share a strand count.
    pub fn compose_all<'a>(words: impl IntoIterator<Item = &'a BraidWord>) -> Result<BraidWord> {
        let mut iter = words.into_iter();
        let first = iter
            .next()
            .ok_or_else(|| Error::InvalidArgument("compose_all needs at least one word".into()))?;
        iter.try_fold(first.clone(), |acc, w| acc.compose(w))
    }

    /// Free reduction: cancels every adjacent `σ_iσ_i⁻¹` pair.
    pub fn free_reduce(&self) -> BraidWord {
        let mut letters = Vec::with_capacity(self.len());
        push_reduced(&mut letters, self.letters.iter().copied());
        Self::from_letters_unchecked(self.strands, letters)
    }

    pub fn inverse(&self) -> BraidWord {
        Self::from_letters_unchecked(
            self.strands,
            self.letters.iter().rev().map(|l| l.inverse()).collect(),
        )
    }

    /// Mirror image: every crossing sign flipped, letter order kept.
    pub fn mirror(&self) -> BraidWord {
        Self::from_letters_unchecked(
            self.strands,
            self.letters.iter().map(|l| l.inverse()).collect(),
        )
    }

    /// `k`-fold product; negative `k` uses the inverse.
    pub fn power(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            push_reduced(&mut letters, base.letters.iter().copied());
        }
        Self::from_letters_unchecked(self.strands, letters)
    }

    /// Conjugate `witness⁻¹ · self · witness`.
    pub fn conjugate_by(&self, witness: &BraidWord) -> Result<BraidWord> {
        witness.inverse().compose(self)?.compose(witness)
    }

    /// The permutation of strand endpoints: position `i` at the start ends at `permutation(i)`.
    pub fn permutation(&self) -> Permutation {
        // track which strand occupies each position; invert at the end
        let mut at = Permutation::identity(self.strands);
        for l in &self.letters {
            at.swap_images(l.index - 1);
        }
        at.inverse()
    }

    /// True iff the closure is connected, i.e. the permutation is one `strands`-cycle.
    pub fn is_cyclic(&self) -> bool {
        self.permutation().is_full_cycle()
    }

    /// Sum of letter signs; equals the writhe of the closed-braid diagram.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign as i64).sum()
    }

    /// Same letters on `strands` strands (must not be fewer than needed).
    pub fn with_strands(&self, strands: usize) -> Result<BraidWord> {
        Self::new(strands, self.letters.clone())
    }

    /// Indices shifted up by `offset` and strand count set to `strands`.
    pub fn shifted(&self, offset: usize, strands: usize) -> Result<BraidWord> {
        Self::new(
            strands,
            self.letters
                .iter()
                .map(|l| Letter {
                    index: l.index + offset,
                    sign: l.sign,
                })
                .collect(),
        )
    }

    /// Parses the text syntax `strands: <n>` followed by signed integers.
    pub fn parse_text(text: &str) -> Result<BraidWord> {
        let mut strands = None;
        let mut ints = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("strands:") {
                if strands.is_some() {
                    return Err(parse_err(lineno + 1, "duplicate strands header"));
                }
                strands = Some(
                    rest.trim()
                        .parse::<usize>()
                        .map_err(|e| parse_err(lineno + 1, format!("bad strand count: {e}")))?,
                );
                continue;
            }
            if strands.is_none() {
                return Err(parse_err(lineno + 1, "expected `strands: <n>` header"));
            }
            for tok in line.split_whitespace() {
                let k: i64 = tok
                    .parse()
                    .map_err(|_| parse_err(lineno + 1, format!("bad generator `{tok}`")))?;
                ints.push((k, lineno + 1));
            }
        }
        let strands = strands.ok_or_else(|| parse_err(1, "missing `strands: <n>` header"))?;
        if strands == 0 {
            return Err(parse_err(1, "strand count must be at least 1"));
        }
        let mut letters = Vec::with_capacity(ints.len());
        for (k, line) in ints {
            match Letter::from_int(k) {
                Some(l) if l.index < strands => letters.push(l),
                _ => {
                    return Err(parse_err(
                        line,
                        format!("generator {k} out of range for {strands} strands"),
                    ))
                }
            }
        }
        Ok(Self::from_letters_unchecked(strands, letters))
    }

    /// Parses a bare word such as `1 -2` on a given strand count. Errors report line 1.
    pub fn parse_word(strands: usize, word: &str) -> Result<BraidWord> {
        parse_word_at(strands, word, 1)
    }

    /// Text syntax form: `strands: n\n<ints>\n`.
    pub fn to_text(&self) -> String {
        format!("strands: {}\n{}\n", self.strands, self.word_string())
    }

    /// Space-separated signed integers; empty string for the identity.
    pub fn word_string(&self) -> String {
        self.letters
            .iter()
            .map(|l| l.to_int().to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub(crate) fn parse_word_at(strands: usize, word: &str, line: usize) -> Result<BraidWord> {
    if strands == 0 {
        return Err(parse_err(line, "strand count must be at least 1"));
    }
    let mut letters = Vec::new();
    for tok in word.split_whitespace() {
        let k: i64 = tok
            .parse()
            .map_err(|_| parse_err(line, format!("bad generator `{tok}`")))?;
        match Letter::from_int(k) {
            Some(l) if l.index < strands => letters.push(l),
            _ => {
                return Err(parse_err(
                    line,
                    format!("generator {k} out of range for {strands} strands"),
                ))
            }
        }
    }
    Ok(BraidWord::from_letters_unchecked(strands, letters))
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn push_reduced(out: &mut Vec<Letter>, letters: impl Iterator<Item = Letter>) {
    for l in letters {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
}

impl fmt::Display for BraidWord {
    /// Unicode rendering such as `σ₁σ₂⁻¹`; `e` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for l in &self.letters {
            write!(f, "σ{}", subscript(l.index))?;
            if l.sign < 0 {
                write!(f, "⁻¹")?;
            }
        }
        Ok(())
    }
}

fn subscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_text(s)
    }
}
