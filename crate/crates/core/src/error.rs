use crate::alphabet::Alphabet;

/// Errors produced by ring arithmetic, matrix algebra, code analysis and the
/// search driver.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: Alphabet, right: Alphabet },

    #[error("symbol {sym} is not an element of {alphabet}")]
    SymbolOutOfRange { alphabet: Alphabet, sym: u8 },

    #[error("illegal character {ch:?} at position {pos} in symbol string")]
    IllegalCharacter { ch: char, pos: usize },

    #[error("Gray map is only defined over F2+uF2 and F4, got {0}")]
    NoGrayMap(Alphabet),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid composite spec: {0}")]
    InvalidComposite(String),

    #[error("vector length {got} does not match construction {construction} (expects {expected})")]
    WrongLength {
        construction: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("unknown construction {0:?} (expected one of 20.1, 20.2, 42.1, 42.2, 24.1, 24.2, 24.3)")]
    UnknownConstruction(String),

    #[error("unknown alphabet {0:?} (expected f2, f2u or f4)")]
    UnknownAlphabet(String),

    #[error("coordinates {0} do not form an information set")]
    NotInformationSet(&'static str),

    #[error("census to weight {max_weight} needs {needed} enumerations, budget is {budget}")]
    BudgetExceeded {
        max_weight: usize,
        needed: u128,
        budget: u128,
    },

    #[error("census to weight {have} is too shallow, need weight {need}")]
    CensusTooShallow { have: usize, need: usize },

    #[error("no codeword of weight <= {radius} found, cannot certify distance {claimed}")]
    CoverageInsufficient { claimed: usize, radius: usize },

    #[error("code is not self-dual")]
    NotSelfDual,

    #[error("block conditions fail for construction {0}")]
    ConditionsFail(&'static str),

    #[error("no weight enumerator family fits: {0}")]
    NoFamilyFits(String),

    #[error("malformed record: {0}")]
    Format(String),

    #[error("record mismatch: {0}")]
    RecordMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
