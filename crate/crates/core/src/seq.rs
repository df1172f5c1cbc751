//! Eventually periodic sequences: a finite prefix followed by a repeating cycle.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EventuallyPeriodicSeq<T> {
    prefix: Vec<T>,
    cycle: Vec<T>,
}

impl<T: Clone> EventuallyPeriodicSeq<T> {
    pub fn new(prefix: Vec<T>, cycle: Vec<T>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::InvalidSequence("cycle must be nonempty".into()));
        }
        Ok(Self { prefix, cycle })
    }

    pub fn periodic(cycle: Vec<T>) -> Result<Self> {
        Self::new(Vec::new(), cycle)
    }

    pub fn constant(x: T) -> Self {
        Self {
            prefix: Vec::new(),
            cycle: vec![x],
        }
    }

    pub fn prefix(&self) -> &[T] {
        &self.prefix
    }

    pub fn cycle(&self) -> &[T] {
        &self.cycle
    }

    /// Element `n` (0-based).
    pub fn get(&self, n: usize) -> &T {
        if n < self.prefix.len() {
            &self.prefix[n]
        } else {
            &self.cycle[(n - self.prefix.len()) % self.cycle.len()]
        }
    }

    /// The first `len` terms.
    pub fn unroll(&self, len: usize) -> Vec<T> {
        (0..len).map(|n| self.get(n).clone()).collect()
    }

    /// Entrywise image with the same prefix/cycle shape.
    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> EventuallyPeriodicSeq<U> {
        EventuallyPeriodicSeq {
            prefix: self.prefix.iter().map(&mut f).collect(),
            cycle: self.cycle.iter().map(&mut f).collect(),
        }
    }

    pub fn try_map<U: Clone, E>(
        &self,
        mut f: impl FnMut(&T) -> std::result::Result<U, E>,
    ) -> std::result::Result<EventuallyPeriodicSeq<U>, E> {
        Ok(EventuallyPeriodicSeq {
            prefix: self
                .prefix
                .iter()
                .map(&mut f)
                .collect::<std::result::Result<_, _>>()?,
            cycle: self
                .cycle
                .iter()
                .map(&mut f)
                .collect::<std::result::Result<_, _>>()?,
        })
    }

    /// Every term, prefix first, then one copy of the cycle.
    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.prefix.iter().chain(self.cycle.iter())
    }
}

impl<T: Clone + Eq> EventuallyPeriodicSeq<T> {
    /// Shortest presentation of the same infinite sequence: the cycle reduced to its
    /// primitive root and the prefix absorbed into it as far as possible.
    pub fn canonical(&self) -> Self {
        let cycle = primitive_root(&self.cycle);
        let mut prefix = self.prefix.clone();
        let mut cycle = cycle.to_vec();
        while let Some(last) = prefix.last() {
            if last == cycle.last().unwrap() {
                prefix.pop();
                cycle.rotate_right(1);
            } else {
                break;
            }
        }
        Self { prefix, cycle }
    }

    /// Do the sequences agree after deleting finitely many terms from each?
    ///
    /// Deleting finitely many terms leaves a shift of the original tail, so this is
    /// common-tail equivalence: the primitive cycles must be rotations of each other.
    pub fn deletion_equivalent(&self, other: &Self) -> bool {
        let a = primitive_root(&self.cycle);
        let b = primitive_root(&other.cycle);
        is_rotation(a, b)
    }

    /// Same infinite sequence, possibly presented differently.
    pub fn same_sequence(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

/// Shortest `r` with `cycle = r^k`.
fn primitive_root<T: Eq>(cycle: &[T]) -> &[T] {
    let n = cycle.len();
    for p in 1..=n {
        if n.is_multiple_of(p) && (p..n).all(|i| cycle[i] == cycle[i - p]) {
            return &cycle[..p];
        }
    }
    cycle
}

fn is_rotation<T: Eq>(a: &[T], b: &[T]) -> bool {
    a.len() == b.len() && (0..a.len()).any(|r| (0..a.len()).all(|i| a[(i + r) % a.len()] == b[i]))
}

impl<T: fmt::Display> fmt::Display for EventuallyPeriodicSeq<T> {
    /// `(a, b)(c, d)^∞`, with the prefix group omitted when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[T]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        if !self.prefix.is_empty() {
            write!(f, "({})", join(&self.prefix))?;
        }
        write!(f, "({})^∞", join(&self.cycle))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(prefix: &[i64], cycle: &[i64]) -> EventuallyPeriodicSeq<i64> {
        EventuallyPeriodicSeq::new(prefix.to_vec(), cycle.to_vec()).unwrap()
    }

    #[test]
    fn empty_cycle_rejected() {
        assert!(EventuallyPeriodicSeq::<i64>::new(vec![1], vec![]).is_err());
    }

    #[test]
    fn indexing() {
        let s = seq(&[7, 8], &[1, 2, 3]);
        assert_eq!(s.unroll(8), vec![7, 8, 1, 2, 3, 1, 2, 3]);
    }

    #[test]
    fn deletion_examples() {
        assert!(seq(&[], &[2, 3]).deletion_equivalent(&seq(&[], &[3, 2])));
        assert!(!seq(&[], &[1, -1]).deletion_equivalent(&seq(&[], &[1, 1, -1, -1])));
        assert!(!seq(&[], &[2]).deletion_equivalent(&seq(&[], &[4])));
        assert!(seq(&[-1, -1], &[1]).deletion_equivalent(&seq(&[], &[1])));
        assert!(seq(&[], &[1, -1, 1, -1]).deletion_equivalent(&seq(&[5], &[-1, 1])));
    }

    #[test]
    fn canonical_form() {
        let s = seq(&[3, 1, 2], &[1, 2, 1, 2]);
        let c = s.canonical();
        assert_eq!(c.prefix(), &[3]);
        assert_eq!(c.cycle(), &[1, 2]);
        assert!(s.same_sequence(&c));
        assert_eq!(s.unroll(30), c.unroll(30));
    }

    #[test]
    fn display() {
        assert_eq!(seq(&[2, 4], &[5, 7]).to_string(), "(2, 4)(5, 7)^∞");
        assert_eq!(seq(&[], &[3]).to_string(), "(3)^∞");
    }

    fn arb_seq() -> impl Strategy<Value = EventuallyPeriodicSeq<i64>> {
        (
            proptest::collection::vec(0i64..3, 0..4),
            proptest::collection::vec(0i64..3, 1..5),
        )
            .prop_map(|(p, c)| EventuallyPeriodicSeq::new(p, c).unwrap())
    }

    proptest! {
        #[test]
        fn equivalence_relation(a in arb_seq(), b in arb_seq(), c in arb_seq()) {
            prop_assert!(a.deletion_equivalent(&a));
            prop_assert_eq!(a.deletion_equivalent(&b), b.deletion_equivalent(&a));
            if a.deletion_equivalent(&b) && b.deletion_equivalent(&c) {
                prop_assert!(a.deletion_equivalent(&c));
            }
        }

        #[test]
        fn canonical_preserves_terms(a in arb_seq()) {
            prop_assert_eq!(a.unroll(40), a.canonical().unroll(40));
        }
    }
}
