use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::BraidError;

/// A signed generator: `g > 0` is `σ_g`, `g < 0` is `σ_{|g|}^{-1}`.
pub type Letter = i32;

/// A braid word on a fixed number of strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawWord")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

#[derive(Deserialize)]
struct RawWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl TryFrom<RawWord> for BraidWord {
    type Error = BraidError;

    fn try_from(raw: RawWord) -> Result<Self, Self::Error> {
        BraidWord::new(raw.strands, raw.letters)
    }
}

pub(crate) fn check_letter(letter: Letter, strands: usize) -> Result<(), BraidError> {
    let g = letter.unsigned_abs() as usize;
    if letter == 0 || g >= strands {
        return Err(BraidError::LetterOutOfRange { letter, strands });
    }
    Ok(())
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for &g in &letters {
            check_letter(g, strands)?;
        }
        Ok(BraidWord { strands, letters })
    }

    /// The empty word on `strands` strands.
    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        BraidWord::new(strands, Vec::new())
    }

    pub(crate) fn from_parts_unchecked(strands: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&g| check_letter(g, strands).is_ok()));
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of the letter signs; the writhe of the closure diagram.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&g| g.signum() as i64).sum()
    }

    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|&g| -g).collect();
        BraidWord::from_parts_unchecked(self.strands, letters)
    }

    fn same_strands(&self, other: &BraidWord) -> Result<(), BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        self.same_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord::from_parts_unchecked(self.strands, letters))
    }

    /// `u · self · u^{-1}`.
    pub fn conjugate(&self, u: &BraidWord) -> Result<BraidWord, BraidError> {
        u.concat(self)?.concat(&u.inverse())
    }

    pub fn pow(&self, k: i32) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord::from_parts_unchecked(self.strands, letters)
    }

    /// Cancels adjacent `g, -g` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if out.last() == Some(&-g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        BraidWord::from_parts_unchecked(self.strands, out)
    }

    /// The same letters viewed on more strands.
    pub fn widen(&self, strands: usize) -> Result<BraidWord, BraidError> {
        if strands < self.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: strands,
            });
        }
        Ok(BraidWord::from_parts_unchecked(strands, self.letters.clone()))
    }

    /// Space-separated letters, the inverse of [`crate::parse_word`] on plain input.
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        for (idx, g) in self.letters.iter().enumerate() {
            if idx > 0 {
                s.push(' ');
            }
            s.push_str(&g.to_string());
        }
        s
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

/// Expansion of the band generator `σ_{i,j}`:
/// `(σ_i ⋯ σ_{j-2}) σ_{j-1} (σ_i ⋯ σ_{j-2})^{-1}`.
pub fn band_generator(i: usize, j: usize, strands: usize) -> Result<BraidWord, BraidError> {
    if i == 0 || i >= j || j > strands {
        return Err(BraidError::BandOutOfRange { i, j, strands });
    }
    let prefix: Vec<Letter> = (i..j - 1).map(|g| g as Letter).collect();
    let mut letters = prefix.clone();
    letters.push((j - 1) as Letter);
    letters.extend(prefix.iter().rev().map(|&g| -g));
    Ok(BraidWord::from_parts_unchecked(strands, letters))
}
