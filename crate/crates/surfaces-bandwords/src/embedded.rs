use std::fmt;

use braid_core::{band_generator, tokenize, BraidError, BraidWord, TokenKind};
use serde::{Deserialize, Serialize};

use crate::error::SurfaceError;
use crate::ToBraidWord;

/// `σ_{i,j}` expanded into standard generators; `σ_i` when `j = i + 1`.
pub fn expand_band_generator(i: usize, j: usize, n: usize) -> Result<BraidWord, SurfaceError> {
    Ok(band_generator(i, j, n)?)
}

/// One letter `σ_{i,j}^{sign}` of an embedded bandword.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "(usize, usize, i8)", try_from = "(usize, usize, i8)")]
pub struct BandLetter {
    pub i: usize,
    pub j: usize,
    pub sign: i8,
}

impl BandLetter {
    pub fn positive(i: usize, j: usize) -> Self {
        BandLetter { i, j, sign: 1 }
    }

    pub fn negative(i: usize, j: usize) -> Self {
        BandLetter { i, j, sign: -1 }
    }

    pub fn is_positive(&self) -> bool {
        self.sign > 0
    }

    pub fn inverse(self) -> Self {
        BandLetter {
            sign: -self.sign,
            ..self
        }
    }

    pub fn expand(&self, n: usize) -> Result<BraidWord, SurfaceError> {
        let w = expand_band_generator(self.i, self.j, n)?;
        Ok(if self.sign > 0 { w } else { w.inverse() })
    }
}

impl From<BandLetter> for (usize, usize, i8) {
    fn from(l: BandLetter) -> Self {
        (l.i, l.j, l.sign)
    }
}

impl TryFrom<(usize, usize, i8)> for BandLetter {
    type Error = SurfaceError;

    fn try_from((i, j, sign): (usize, usize, i8)) -> Result<Self, Self::Error> {
        if sign != 1 && sign != -1 {
            return Err(SurfaceError::BadSign(sign as i64));
        }
        Ok(BandLetter { i, j, sign })
    }
}

impl fmt::Display for BandLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.j == self.i + 1 {
            write!(f, "{}", self.sign as i64 * self.i as i64)
        } else if self.sign > 0 {
            write!(f, "B({},{})", self.i, self.j)
        } else {
            write!(f, "B({},{})^-1", self.i, self.j)
        }
    }
}

/// A word in band generators on `n` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawEmbedded")]
pub struct EmbeddedBandWord {
    strands: usize,
    letters: Vec<BandLetter>,
}

#[derive(Deserialize)]
struct RawEmbedded {
    strands: usize,
    letters: Vec<BandLetter>,
}

impl TryFrom<RawEmbedded> for EmbeddedBandWord {
    type Error = SurfaceError;

    fn try_from(raw: RawEmbedded) -> Result<Self, Self::Error> {
        EmbeddedBandWord::new(raw.strands, raw.letters)
    }
}

impl EmbeddedBandWord {
    pub fn new(strands: usize, letters: Vec<BandLetter>) -> Result<Self, SurfaceError> {
        if strands == 0 {
            return Err(BraidError::NoStrands.into());
        }
        for l in &letters {
            if l.i == 0 || l.i >= l.j || l.j > strands {
                return Err(BraidError::BandOutOfRange {
                    i: l.i,
                    j: l.j,
                    strands,
                }
                .into());
            }
        }
        Ok(EmbeddedBandWord { strands, letters })
    }

    /// Parses the braid-word grammar, reading `g` as `σ_{|g|,|g|+1}^{±1}`
    /// and `B(i,j)^k` as `|k|` copies of `σ_{i,j}^{sign k}`.
    pub fn parse(text: &str, strands: usize) -> Result<Self, SurfaceError> {
        let mut letters = Vec::new();
        for token in tokenize(text)? {
            let base = match token.kind {
                TokenKind::Generator(g) => {
                    let i = g.unsigned_abs() as usize;
                    BandLetter {
                        i,
                        j: i + 1,
                        sign: g.signum() as i8,
                    }
                }
                TokenKind::Band(i, j) => BandLetter::positive(i, j),
            };
            let letter = if token.power < 0 { base.inverse() } else { base };
            letters.extend(std::iter::repeat_n(letter, token.power.unsigned_abs() as usize));
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BandLetter] {
        &self.letters
    }

    /// `|w|`, the number of bands of the Bennequin surface.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// All letters positive: the closure is strongly quasipositive.
    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(BandLetter::is_positive)
    }

    /// `n − |w|`.
    pub fn euler_characteristic(&self) -> i64 {
        self.strands as i64 - self.letters.len() as i64
    }
}

impl ToBraidWord for EmbeddedBandWord {
    fn to_braid_word(&self) -> BraidWord {
        let mut letters = Vec::new();
        for l in &self.letters {
            let w = l.expand(self.strands).expect("letters are validated");
            letters.extend_from_slice(w.letters());
        }
        BraidWord::new(self.strands, letters).expect("expansions stay in range")
    }
}

impl fmt::Display for EmbeddedBandWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, l) in self.letters.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
