use braid_core::BraidError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error("band sign must be +1 or -1, got {0}")]
    BadSign(i64),
    #[error("band core σ{index} is out of range for {strands} strands")]
    CoreOutOfRange { index: usize, strands: usize },
    #[error("surface bookkeeping is inconsistent: χ = {chi} with {components} boundary components")]
    Inconsistent { chi: i64, components: usize },
}
