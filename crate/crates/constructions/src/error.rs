use braid_core::BraidError;
use laurent_invariants::InvariantError;
use surfaces_bandwords::SurfaceError;
use thiserror::Error;

use crate::theorem_a::TheoremAOutput;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("site {site}: {reason}")]
    PatternMismatch { site: usize, reason: String },
    #[error("sites {first} and {second} overlap")]
    OverlappingSites { first: usize, second: usize },
    #[error("letter {position} is not σ1^{sign}, so no Hopf band of that sign can be plumbed there")]
    NotPlumbable { position: usize, sign: i8 },
    #[error("certificate failed: {}", .0.certificate.failures().join("; "))]
    CertificateFailed(Box<TheoremAOutput>),
}
