use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("alphabet symbols must be nonempty")]
    EmptySymbol,
    #[error("duplicate alphabet symbol {0:?}")]
    DuplicateSymbol(String),
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(String),
    #[error("symbol index {0} is outside the alphabet")]
    SymbolOutOfRange(u32),
    #[error("words must have equal length to shuffle (got {left} and {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("word has odd length {0}")]
    OddLength(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BorderError {
    #[error("the empty word has no border array")]
    EmptyWord,
    #[error("length must be at least 1")]
    ZeroLength,
    #[error("alphabet size must be at least 1")]
    ZeroAlphabet,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PalstarError {
    #[error("word is not unbordered")]
    NotUnbordered,
    #[error("word is not an even-length palindromic palstar")]
    NotPalindromicPalstar,
    #[error("word length {len} exceeds the oracle bound {bound}")]
    OracleBoundExceeded { len: usize, bound: usize },
    #[error("half-length must be at least 1")]
    ZeroLength,
    #[error("half-length {requested} exceeds the supported maximum {max}")]
    TooLarge { requested: usize, max: usize },
}

#[derive(Debug, Error)]
pub enum AutomatonError {
    #[error("alphabet mismatch between automata")]
    AlphabetMismatch,
    #[error("language is not closed under star; witness {witness:?}")]
    NotClosed {
        /// Shortest word (lexicographically least among the shortest) in
        /// the symmetric difference of L and L*, rendered over the alphabet.
        witness: String,
    },
    #[error("unknown state {0:?}")]
    UnknownState(String),
    #[error("duplicate state {0:?}")]
    DuplicateState(String),
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("automaton has no states")]
    NoStates,
    #[error("DFA start must name exactly one state")]
    BadStart,
    #[error("DFA has no transition from {state:?} on {symbol:?}")]
    MissingTransition { state: String, symbol: String },
    #[error("DFA has two transitions from {state:?} on {symbol:?}")]
    Nondeterministic { state: String, symbol: String },
    #[error("epsilon transitions are only allowed in NFAs")]
    EpsilonInDfa,
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("malformed automaton file: {0}")]
    Json(#[from] serde_json::Error),
}
