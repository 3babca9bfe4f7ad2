use std::fmt;

use braid_core::{BraidError, BraidWord, Letter};
use serde::{Deserialize, Serialize};

use crate::error::SurfaceError;
use crate::ToBraidWord;

/// The band `w σ_k w^{-1}` with conjugator `w` and core index `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Band {
    pub conjugator: Vec<Letter>,
    pub index: usize,
}

impl Band {
    pub fn new(conjugator: Vec<Letter>, index: usize) -> Self {
        Band { conjugator, index }
    }

    /// `w σ_k w^{-1}` on `n` strands.
    pub fn expand(&self, n: usize) -> Result<BraidWord, SurfaceError> {
        if self.index == 0 || self.index >= n {
            return Err(SurfaceError::CoreOutOfRange {
                index: self.index,
                strands: n,
            });
        }
        let w = BraidWord::new(n, self.conjugator.clone())?;
        let core = BraidWord::new(n, vec![self.index as Letter])?;
        Ok(core.conjugate(&w)?)
    }
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (idx, g) in self.conjugator.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, " | {})", self.index)
    }
}

/// A product of conjugated positive generators on `n` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawQP")]
pub struct QPBandWord {
    strands: usize,
    bands: Vec<Band>,
}

#[derive(Deserialize)]
struct RawQP {
    strands: usize,
    bands: Vec<Band>,
}

impl TryFrom<RawQP> for QPBandWord {
    type Error = SurfaceError;

    fn try_from(raw: RawQP) -> Result<Self, Self::Error> {
        QPBandWord::new(raw.strands, raw.bands)
    }
}

impl QPBandWord {
    pub fn new(strands: usize, bands: Vec<Band>) -> Result<Self, SurfaceError> {
        if strands == 0 {
            return Err(BraidError::NoStrands.into());
        }
        for b in &bands {
            b.expand(strands)?;
        }
        Ok(QPBandWord { strands, bands })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn bands(&self) -> &[Band] {
        &self.bands
    }

    /// The band count `c`.
    pub fn band_count(&self) -> usize {
        self.bands.len()
    }

    /// Expansion of band `b` alone.
    pub fn band_word(&self, b: usize) -> Option<BraidWord> {
        self.bands
            .get(b)
            .map(|band| band.expand(self.strands).expect("bands are validated"))
    }
}

impl ToBraidWord for QPBandWord {
    fn to_braid_word(&self) -> BraidWord {
        let mut letters = Vec::new();
        for b in 0..self.bands.len() {
            letters.extend(self.band_word(b).unwrap().into_letters());
        }
        BraidWord::new(self.strands, letters).expect("expansions stay in range")
    }
}

impl fmt::Display for QPBandWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, b) in self.bands.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}
