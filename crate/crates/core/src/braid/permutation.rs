use std::fmt;

/// A permutation of `{1..size}`, stored 0-based: `images[i]` is where position `i` goes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Self {
            images: (0..size as u16).collect(),
        }
    }

    /// Builds a permutation from 0-based images. Returns `None` unless `images` is a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Self {
            images: images.into_iter().map(|i| i as u16).collect(),
        })
    }

    /// The transposition of positions `i` and `i + 1` (0-based `i`).
    pub fn adjacent_transposition(size: usize, i: usize) -> Self {
        let mut p = Self::identity(size);
        p.images.swap(i, i + 1);
        p
    }

    /// Position reversal `i -> size - 1 - i`.
    pub fn reversal(size: usize) -> Self {
        Self {
            images: (0..size as u16).rev().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based position `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    /// `self` followed by `other`: `i -> other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.size()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| i == j as usize)
    }

    /// Swap the values at positions `i` and `i + 1` of the image list.
    pub(crate) fn swap_images(&mut self, i: usize) {
        self.images.swap(i, i + 1);
    }

    /// Cycle lengths, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn cycle_count(&self) -> usize {
        self.cycle_type().len()
    }

    /// True iff the permutation is a single cycle through every point.
    pub fn is_full_cycle(&self) -> bool {
        self.cycle_count() == 1
    }

    pub fn inversions(&self) -> usize {
        let n = self.size();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i32 {
        // parity of (n - #cycles)
        if (self.size() - self.cycle_count()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Permutation {
    /// One-line notation, 1-based: `[2 3 1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.images().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0]).is_none());
        assert!(Permutation::from_images(vec![0, 2]).is_none());
        assert!(Permutation::from_images(vec![1, 0]).is_some());
    }

    #[test]
    fn composition_and_inverse() {
        let p = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let q = Permutation::from_images(vec![0, 2, 1]).unwrap();
        let pq = p.then(&q);
        assert_eq!(pq.images().collect::<Vec<_>>(), vec![2, 1, 0]);
        assert!(p.then(&p.inverse()).is_identity());
        assert!(p.is_full_cycle());
        assert!(!q.is_full_cycle());
        assert_eq!(q.cycle_type(), vec![2, 1]);
        assert_eq!(p.sign(), 1);
        assert_eq!(q.sign(), -1);
    }

    #[test]
    fn display_is_one_based() {
        let p = Permutation::from_images(vec![1, 2, 0]).unwrap();
        assert_eq!(p.to_string(), "[2 3 1]");
    }
}
