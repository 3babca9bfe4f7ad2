//! The mirrored `8_20` knot as a two-band quasipositive 3-braid, and the
//! reference 5-braid words for its unknotting embedding.

use braid_core::{band_generator, BraidWord, Letter};
use surfaces_bandwords::{Band, QPBandWord};

use crate::theorem_a::TransformSite;

/// `(σ2σ1²) σ2 (σ2σ1²)^{-1} · σ1 σ2 σ1^{-1}`.
pub fn m8_20_bandword() -> QPBandWord {
    QPBandWord::new(3, vec![Band::new(vec![2, 1, 1], 2), Band::new(vec![1], 2)])
        .expect("valid 3-braid bands")
}

/// The `σ1²` twist in the first conjugator; the strand entering the core
/// passes through it twice, so one site covers both ribbon intersections.
pub fn m8_20_sites() -> Vec<TransformSite> {
    vec![TransformSite {
        band: 0,
        pos: 1,
        k: 1,
        sign: 1,
    }]
}

/// `w = σ4^{-1}σ3²σ4^{-2}σ3^{-1}σ2^{-1}σ1²σ2^{-2}σ1^{-1}σ1σ2`.
pub fn reference_w() -> Vec<Letter> {
    vec![-4, 3, 3, -4, -4, -3, -2, 1, 1, -2, -2, -1, 1, 2]
}

/// `w` with `σ3² → σ3σ4σ3` and `σ1² → σ1σ2σ1`.
pub fn reference_w_prime() -> Vec<Letter> {
    vec![-4, 3, 4, 3, -4, -4, -3, -2, 1, 2, 1, -2, -2, -1, 1, 2]
}

fn assemble(left: &[Letter], right: &[Letter]) -> BraidWord {
    let mut letters = left.to_vec();
    letters.push(2);
    letters.extend(right.iter().rev().map(|&g| -g));
    letters.extend(band_generator(1, 5, 5).expect("σ_{1,5} fits").into_letters());
    BraidWord::new(5, letters).expect("letters fit in B_5")
}

/// `β′ = w σ2 w^{-1} σ_{1,5}`.
pub fn reference_beta_prime() -> BraidWord {
    assemble(&reference_w(), &reference_w())
}

/// `γ = w′ σ2 w^{-1} σ_{1,5}`, read verbatim.
pub fn reference_gamma() -> BraidWord {
    assemble(&reference_w_prime(), &reference_w())
}

/// `γ = w′ σ2 w′^{-1} σ_{1,5}`, the symmetric reading.
pub fn reference_gamma_symmetric() -> BraidWord {
    assemble(&reference_w_prime(), &reference_w_prime())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_words() {
        assert_eq!(reference_beta_prime().len(), 14 + 1 + 14 + 7);
        assert_eq!(reference_gamma().exponent_sum(), reference_beta_prime().exponent_sum() + 2);
        // σ1^{-1}σ1 cancels, then σ2^{-1}σ2
        assert_eq!(BraidWord::new(5, reference_w()).unwrap().free_reduce().len(), 10);
        assert_eq!(reference_beta_prime().permutation().cycles().len(), 3);
    }
}
