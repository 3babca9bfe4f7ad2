use std::fmt;

use serde::Serialize;

/// A bijection of `{1..n}`, stored zero-based.
///
/// For a braid word, `image[p]` is the final position of the strand that
/// starts in position `p`; letters act left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Builds from a zero-based image array; `None` if it is not a bijection.
    pub fn from_image(image: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; image.len()];
        for &p in &image {
            if p >= image.len() || std::mem::replace(&mut seen[p], true) {
                return None;
            }
        }
        Some(Permutation { image })
    }

    pub fn size(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, p: usize) -> usize {
        self.image[p]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "permutation sizes differ");
        Permutation {
            image: self.image.iter().map(|&p| other.image[p]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (p, &q) in self.image.iter().enumerate() {
            inv[q] = p;
        }
        Permutation { image: inv }
    }

    /// Cycles ordered by their smallest element, each starting there.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.image[p];
            }
            out.push(cycle);
        }
        out
    }

    /// Sorted cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable();
        lens
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            let parts: Vec<String> = cycle.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_and_display() {
        let p = Permutation::from_image(vec![1, 2, 0, 3]).unwrap();
        assert_eq!(p.cycles(), vec![vec![0, 1, 2], vec![3]]);
        assert_eq!(p.to_string(), "(1 2 3)(4)");
        assert_eq!(p.cycle_type(), vec![1, 3]);
        assert_eq!(p.then(&p.inverse()), Permutation::identity(4));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_image(vec![0, 0]).is_none());
        assert!(Permutation::from_image(vec![2, 0]).is_none());
    }
}
