//! Braid words on `n` strands and the closure bookkeeping built on top of them.
//!
//! A letter `g > 0` stands for the generator `σ_g` and `g < 0` for `σ_{|g|}^{-1}`.
//! Positive generators are positive crossings: the strand in position `g`
//! passes over the strand in position `g + 1`.

mod closure;
mod error;
mod half;
mod handle;
mod parse;
mod permutation;
mod word;

pub use closure::ClosureSummary;
pub use error::BraidError;
pub use half::HalfInteger;
pub use handle::{HandleReducer, DEFAULT_BUDGET};
pub use parse::{parse_word, tokenize, Token, TokenKind};
pub use permutation::Permutation;
pub use word::{band_generator, BraidWord, Letter};
