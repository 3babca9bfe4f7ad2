use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("braid needs at least one strand")]
    NoStrands,
    #[error("letter {letter} is out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("band generator ({i},{j}) is invalid for {strands} strands")]
    BandOutOfRange { i: usize, j: usize, strands: usize },
    #[error("closure component {id} does not exist (word has {count})")]
    InvalidComponent { id: usize, count: usize },
    #[error("deleting every component leaves no strands")]
    NothingLeft,
    #[error("handle reduction exceeded its budget of {budget} steps")]
    BudgetExceeded { budget: u64 },
}
