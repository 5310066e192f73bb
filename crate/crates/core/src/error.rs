use alloc::string::String;

/// Errors produced by the analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,

    #[error("alphabet holds more than {max} symbols")]
    AlphabetTooLarge { max: usize },

    #[error("symbol {symbol:?} appears twice in the alphabet")]
    DuplicateSymbol { symbol: char },

    #[error("character {character:?} at position {position} is not in the alphabet")]
    UnknownCharacter { character: char, position: usize },

    #[error("symbol rank {rank} is outside an alphabet of size {sigma}")]
    SymbolOutOfRange { rank: usize, sigma: usize },

    #[error("words are over different alphabets")]
    AlphabetMismatch,

    #[error("{what} {value} is outside the valid range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("{what} would produce {required} items, above the guard of {guard}{hint}")]
    GuardExceeded {
        what: &'static str,
        required: String,
        guard: u64,
        hint: &'static str,
    },
}

pub type Result<T> = core::result::Result<T, Error>;
