//! The four-strand families `β_n` and `γ_n`.
//!
//! `β_n = σ_{1,4} σ_2 (σ_1^n σ_{1,3}^{-1} σ_1^{-n}) σ_{2,4} (σ_1^n σ_{1,3} σ_1^{-n})`
//! is quasipositive with Bennequin genus `2n+1`, while the strongly
//! quasipositive `γ_n = σ_{1,4} σ_2 σ_{2,4} σ_1^n σ_{1,3} σ_2^{n+1}` has genus
//! `n+1` and is reached from `β_n` by `2n+2` positive band surgeries.

use braid_core::{BraidError, HandleReducer, Letter};
use serde::Serialize;
use surfaces_bandwords::{Band, BandLetter, EmbeddedBandWord, QPBandWord, ToBraidWord};

use crate::error::ConstructionError;

fn repeat(letter: BandLetter, n: usize) -> impl Iterator<Item = BandLetter> {
    std::iter::repeat_n(letter, n)
}

fn s1(n: usize) -> impl Iterator<Item = BandLetter> {
    repeat(BandLetter::positive(1, 2), n)
}

fn s1_inv(n: usize) -> impl Iterator<Item = BandLetter> {
    repeat(BandLetter::negative(1, 2), n)
}

/// `β_n` as an embedded bandword, `5 + 4n` letters on 4 strands.
pub fn make_beta_n(n: usize) -> EmbeddedBandWord {
    let letters = [BandLetter::positive(1, 4), BandLetter::positive(2, 3)]
        .into_iter()
        .chain(s1(n))
        .chain([BandLetter::negative(1, 3)])
        .chain(s1_inv(n))
        .chain([BandLetter::positive(2, 4)])
        .chain(s1(n))
        .chain([BandLetter::positive(1, 3)])
        .chain(s1_inv(n))
        .collect();
    EmbeddedBandWord::new(4, letters).expect("indices fit in B_4")
}

/// `β_n` regrouped as three positive bands: `σ_{1,4}`, `σ_2` and
/// `u^{-1} σ_{2,4} u` with `u = σ_1^n σ_{1,3} σ_1^{-n}`.
pub fn make_beta_n_qp(n: usize) -> QPBandWord {
    let mut third: Vec<Letter> = vec![1; n];
    third.extend([1, -2, -1]);
    third.extend(std::iter::repeat_n(-1, n));
    // σ_{2,4} = σ_2 σ_3 σ_2^{-1}
    third.push(2);
    let bands = vec![Band::new(vec![1, 2], 3), Band::new(vec![], 2), Band::new(third, 3)];
    QPBandWord::new(4, bands).expect("indices fit in B_4")
}

/// `γ_n`, all-positive with `2n + 5` letters on 4 strands.
pub fn make_gamma_n(n: usize) -> EmbeddedBandWord {
    let letters = [
        BandLetter::positive(1, 4),
        BandLetter::positive(2, 3),
        BandLetter::positive(2, 4),
    ]
    .into_iter()
    .chain(s1(n))
    .chain([BandLetter::positive(1, 3)])
    .chain(repeat(BandLetter::positive(2, 3), n + 1))
    .collect();
    EmbeddedBandWord::new(4, letters).expect("indices fit in B_4")
}

/// One inserted positive band.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Insertion {
    /// Index of the new letter in the word after the insertion.
    pub position: usize,
    pub letter: BandLetter,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BandSurgeryReport {
    pub n: usize,
    pub insertions: Vec<Insertion>,
    pub result: EmbeddedBandWord,
    /// The result and `γ_n` are the same element of `B_4`.
    pub equals_gamma: bool,
}

impl BandSurgeryReport {
    pub fn passed(&self) -> bool {
        self.equals_gamma
            && self.insertions.len() == 2 * self.n + 2
            && self.insertions.iter().all(|i| i.letter.is_positive())
    }
}

/// Inserts `σ_{1,3}` between `σ_{1,3}^{-1}` and `σ_1^{-n}` in the first
/// conjugated term, then appends `σ_1^n` and `σ_2^{n+1}`, and certifies that
/// the outcome equals `γ_n` by handle reduction.
pub fn verify_band_surgery_sequence(
    n: usize,
    reducer: &HandleReducer,
) -> Result<BandSurgeryReport, BraidError> {
    let mut letters = make_beta_n(n).letters().to_vec();
    let mut insertions = Vec::new();
    let middle = 3 + n;
    letters.insert(middle, BandLetter::positive(1, 3));
    insertions.push(Insertion {
        position: middle,
        letter: BandLetter::positive(1, 3),
    });
    for letter in s1(n).chain(repeat(BandLetter::positive(2, 3), n + 1)) {
        insertions.push(Insertion {
            position: letters.len(),
            letter,
        });
        letters.push(letter);
    }
    let result = EmbeddedBandWord::new(4, letters).expect("indices fit in B_4");
    let equals_gamma =
        reducer.equal(&result.to_braid_word(), &make_gamma_n(n).to_braid_word())?;
    Ok(BandSurgeryReport {
        n,
        insertions,
        result,
        equals_gamma,
    })
}

/// Plumbs a Hopf band of sign `sign` across the `σ_1^{sign}` letter at
/// `position`, doubling it.
pub fn hopf_plumb_rewrite(
    w: &EmbeddedBandWord,
    position: usize,
    sign: i8,
) -> Result<EmbeddedBandWord, ConstructionError> {
    let target = BandLetter { i: 1, j: 2, sign };
    if w.letters().get(position) != Some(&target) {
        return Err(ConstructionError::NotPlumbable { position, sign });
    }
    let mut letters = w.letters().to_vec();
    letters.insert(position, target);
    Ok(EmbeddedBandWord::new(w.strands(), letters)?)
}

/// The four plumbings taking `β_{n-1}` to `β_n`, as `(position, sign)` in
/// `β_{n-1}`, rightmost first so that earlier positions stay valid. Each
/// doubles the first letter of one `σ_1^{±(n-1)}` block.
pub fn beta_plumbing_sites(n: usize) -> Vec<(usize, i8)> {
    let m = n.saturating_sub(1);
    vec![(5 + 3 * m, -1), (4 + 2 * m, 1), (3 + m, -1), (2, 1)]
}

/// Applies the four canonical plumbings to `β_{n-1}`.
pub fn plumb_beta(n: usize) -> Result<EmbeddedBandWord, ConstructionError> {
    let mut w = make_beta_n(n.saturating_sub(1));
    for (position, sign) in beta_plumbing_sites(n) {
        w = hopf_plumb_rewrite(&w, position, sign)?;
    }
    Ok(w)
}
