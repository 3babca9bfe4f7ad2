//! Exact Laurent polynomial arithmetic and polynomial invariants of braid
//! closures: the Alexander polynomial through the reduced Burau
//! representation and the Jones polynomial through Temperley-Lieb transfer.

mod alexander;
mod burau;
mod error;
mod jones;
mod matrix;
mod poly;

pub use alexander::{alexander_genus_bound, alexander_polynomial, normalize_alexander};
pub use burau::reduced_burau;
pub use error::InvariantError;
pub use jones::{
    jones_polynomial, jones_polynomial_with, jones_state_sum, JonesOptions, JonesPolynomial,
    DEFAULT_MAX_STRANDS,
};
pub use matrix::LaurentMatrix;
pub use poly::LaurentPoly;
