use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::BraidError;
use crate::permutation::Permutation;
use crate::word::{BraidWord, Letter};

/// Component count, writhe and self-linking number of a braid closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClosureSummary {
    pub components: usize,
    pub exponent_sum: i64,
    pub self_linking: i64,
}

impl BraidWord {
    pub fn permutation(&self) -> Permutation {
        // content[pos] = starting position of the strand currently at pos
        let mut content: Vec<usize> = (0..self.strands()).collect();
        for &g in self.letters() {
            let i = g.unsigned_abs() as usize;
            content.swap(i - 1, i);
        }
        let mut image = vec![0; self.strands()];
        for (pos, &start) in content.iter().enumerate() {
            image[start] = pos;
        }
        Permutation::from_image(image).expect("braid permutations are bijections")
    }

    pub fn closure_summary(&self) -> ClosureSummary {
        let e = self.exponent_sum();
        ClosureSummary {
            components: self.permutation().cycles().len(),
            exponent_sum: e,
            self_linking: e - self.strands() as i64,
        }
    }

    /// Markov stabilization: adds a strand and appends `σ_n^{±1}`.
    pub fn stabilize(&self, positive: bool) -> BraidWord {
        let n = self.strands();
        let mut letters = self.letters().to_vec();
        letters.push(if positive { n as Letter } else { -(n as Letter) });
        BraidWord::from_parts_unchecked(n + 1, letters)
    }

    /// Conjugation by `u`, which leaves the closure unchanged.
    pub fn conjugate_closure(&self, u: &BraidWord) -> Result<BraidWord, BraidError> {
        self.conjugate(u)
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> BraidWord {
        let mut letters = self.letters().to_vec();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord::from_parts_unchecked(self.strands(), letters)
    }

    /// Removes the closure components with the given ids (indices into
    /// `self.permutation().cycles()`).
    ///
    /// Crossings involving a deleted strand are dropped; surviving strands
    /// keep their relative order and their crossings keep their signs.
    pub fn delete_strands(&self, components: &BTreeSet<usize>) -> Result<BraidWord, BraidError> {
        let cycles = self.permutation().cycles();
        let mut dead = vec![false; self.strands()];
        for &id in components {
            let cycle = cycles.get(id).ok_or(BraidError::InvalidComponent {
                id,
                count: cycles.len(),
            })?;
            for &p in cycle {
                dead[p] = true;
            }
        }
        let alive = dead.iter().filter(|d| !**d).count();
        if alive == 0 {
            return Err(BraidError::NothingLeft);
        }
        let mut content: Vec<usize> = (0..self.strands()).collect();
        let mut letters = Vec::new();
        for &g in self.letters() {
            let i = g.unsigned_abs() as usize;
            let (a, b) = (content[i - 1], content[i]);
            if !dead[a] && !dead[b] {
                let below = content[..i - 1].iter().filter(|&&s| !dead[s]).count();
                letters.push(g.signum() * (below + 1) as Letter);
            }
            content.swap(i - 1, i);
        }
        Ok(BraidWord::from_parts_unchecked(alive, letters))
    }

    /// Index of the closure component containing the strand that starts at
    /// zero-based position `pos`.
    pub fn component_of(&self, pos: usize) -> Option<usize> {
        self.permutation()
            .cycles()
            .iter()
            .position(|c| c.contains(&pos))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[Letter]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn identity_has_n_components() {
        let id = BraidWord::identity(3).unwrap();
        assert_eq!(id.permutation(), Permutation::identity(3));
        assert_eq!(id.closure_summary().components, 3);
    }

    #[test]
    fn unknot_summary() {
        let s = w(2, &[1]).closure_summary();
        assert_eq!(s, ClosureSummary { components: 1, exponent_sum: 1, self_linking: -1 });
    }

    #[test]
    fn stabilization() {
        let t = w(2, &[1, 1, 1]).stabilize(true);
        assert_eq!(t, w(3, &[1, 1, 1, 2]));
        assert_eq!(BraidWord::identity(1).unwrap().stabilize(true), w(2, &[1]));
        let s = w(3, &[1, -2]);
        assert_eq!(s.stabilize(true).closure_summary().self_linking, s.closure_summary().self_linking);
    }

    #[test]
    fn deletion() {
        assert_eq!(w(3, &[1, 1, 1, 2]).closure_summary().components, 1);
        let split = w(3, &[1, 1, 1]);
        let id = split.component_of(2).unwrap();
        assert_eq!(split.delete_strands(&BTreeSet::from([id])).unwrap(), w(2, &[1, 1, 1]));

        let id3 = BraidWord::identity(3).unwrap();
        let keep_one = id3.delete_strands(&BTreeSet::from([0, 2])).unwrap();
        assert_eq!(keep_one, BraidWord::identity(1).unwrap());
        assert!(matches!(
            id3.delete_strands(&BTreeSet::from([0, 1, 2])),
            Err(BraidError::NothingLeft)
        ));
        assert!(matches!(
            id3.delete_strands(&BTreeSet::from([5])),
            Err(BraidError::InvalidComponent { id: 5, count: 3 })
        ));
    }

    #[test]
    fn deletion_reindexes_through_crossings() {
        let word = w(3, &[2, 1, 1, -2]);
        assert_eq!(word.closure_summary().components, 3);
        let middle = word.component_of(1).unwrap();
        assert_eq!(word.delete_strands(&BTreeSet::from([middle])).unwrap(), w(2, &[1, 1]));
        let last = word.component_of(2).unwrap();
        assert!(word.delete_strands(&BTreeSet::from([last])).unwrap().is_empty());
    }
}
