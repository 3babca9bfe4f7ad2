//! Dehornoy handle reduction.
//!
//! A `σ_i`-handle is a factor `σ_i^e v σ_i^{-e}` where `v` has no letter
//! `σ_j^{±1}` with `j ≤ i`. The handle whose right end is leftmost contains
//! no smaller handle, so it is always permitted. Reducing it deletes its
//! ends and replaces each `σ_{i+1}^d` in `v` by `σ_{i+1}^{-e} σ_i^d σ_{i+1}^e`.
//! Iterating terminates in the empty word exactly when the braid is trivial.

use crate::error::BraidError;
use crate::word::{BraidWord, Letter};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HandleReducer {
    /// Maximum number of handle reductions before giving up.
    pub budget: u64,
}

impl Default for HandleReducer {
    fn default() -> Self {
        HandleReducer {
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Leftmost-ending handle at or after `from`, as `(start, end)` inclusive.
fn find_handle(w: &[Letter], from: usize) -> Option<(usize, usize)> {
    for end in from..w.len() {
        let g = w[end].abs();
        let mut a = end;
        while a > 0 {
            a -= 1;
            let h = w[a].abs();
            if h < g {
                break;
            }
            if h == g {
                if w[a] == -w[end] {
                    return Some((a, end));
                }
                break;
            }
        }
    }
    None
}

fn reduce_at(w: &mut Vec<Letter>, start: usize, end: usize) {
    let e = w[start].signum();
    let i = w[start].abs();
    let mut middle = Vec::with_capacity(end - start);
    for &x in &w[start + 1..end] {
        if x.abs() == i + 1 {
            let d = x.signum();
            middle.extend_from_slice(&[-e * (i + 1), d * i, e * (i + 1)]);
        } else {
            middle.push(x);
        }
    }
    w.splice(start..=end, middle);
}

impl HandleReducer {
    pub fn new(budget: u64) -> Self {
        HandleReducer { budget }
    }

    /// Fully handle-reduced form of `w`.
    pub fn reduce(&self, w: &BraidWord) -> Result<BraidWord, BraidError> {
        let mut letters = w.letters().to_vec();
        let mut steps = 0u64;
        let mut from = 0;
        while let Some((start, end)) = find_handle(&letters, from) {
            if steps == self.budget {
                return Err(BraidError::BudgetExceeded {
                    budget: self.budget,
                });
            }
            steps += 1;
            reduce_at(&mut letters, start, end);
            from = start;
        }
        Ok(BraidWord::from_parts_unchecked(w.strands(), letters))
    }

    pub fn is_trivial(&self, w: &BraidWord) -> Result<bool, BraidError> {
        Ok(self.reduce(w)?.is_empty())
    }

    /// Whether `u` and `v` represent the same braid.
    pub fn equal(&self, u: &BraidWord, v: &BraidWord) -> Result<bool, BraidError> {
        self.is_trivial(&u.concat(&v.inverse())?)
    }
}

impl BraidWord {
    /// Word-problem check with the default step budget.
    pub fn is_trivial_braid(&self) -> Result<bool, BraidError> {
        HandleReducer::default().is_trivial(self)
    }

    pub fn braid_equal(&self, other: &BraidWord) -> Result<bool, BraidError> {
        HandleReducer::default().equal(self, other)
    }
}
