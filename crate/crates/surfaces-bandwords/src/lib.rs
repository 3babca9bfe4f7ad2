//! Bandwords and the surfaces they carry.
//!
//! An [`EmbeddedBandWord`] is a word in the band generators `σ_{i,j}^{±1}`;
//! gluing one twisted band per letter to `n` disks gives its Bennequin
//! surface, with `χ = n − |w|`. A [`QPBandWord`] is a product of conjugated
//! positive generators `w σ_k w^{-1}`, each contributing one band of a ribbon
//! surface in the four-ball.

mod embedded;
mod error;
mod quasipositive;
mod summary;

pub use embedded::{expand_band_generator, BandLetter, EmbeddedBandWord};
pub use error::SurfaceError;
pub use quasipositive::{Band, QPBandWord};
pub use summary::{bennequin_summary, qp_ribbon_summary, SurfaceKind, SurfaceSummary};

use braid_core::BraidWord;

/// Expansion into standard generators.
pub trait ToBraidWord {
    /// Concatenated expansions, letter for letter.
    fn to_braid_word(&self) -> BraidWord;

    fn to_reduced_braid_word(&self) -> BraidWord {
        self.to_braid_word().free_reduce()
    }
}
