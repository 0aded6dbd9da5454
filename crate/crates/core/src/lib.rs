//! # bifix-core
//!
//! Combinatorics on words around borders and palindromes, plus enough
//! regular-language algebra to compute star roots.
//!
//! * [`words`]: alphabets, words, reversal and perfect shuffle.
//! * [`borders`]: border arrays, unbordered words and their exact count.
//! * [`palstars`]: products of even palindromes, their unique prime
//!   factorization, and the correspondence between prime palstars and
//!   unbordered words.
//! * [`automata`]: NFAs, DFAs, closedness under star and inverse star.
//! * [`oracle`] and [`crosscheck`]: brute-force references.
//!
//! ```
//! use bifix_core::{palstars, Alphabet};
//!
//! let a = Alphabet::parse("no").unwrap();
//! let z = a.parse_word("no").unwrap();
//! let w = palstars::prime_palstar_of(&z).unwrap();
//! assert_eq!(a.render(&w).unwrap(), "noon");
//! assert!(palstars::is_prime_palstar(&w));
//! ```

pub mod automata;
pub mod borders;
pub mod crosscheck;
mod error;
pub mod oracle;
pub mod palstars;
pub mod words;

pub use automata::{Automaton, Dfa, Nfa};
pub use borders::{BorderArray, CkEstimate, CountTable};
pub use error::{AutomatonError, BorderError, PalstarError, WordError};
pub use palstars::PalstarFactorization;
pub use words::{Alphabet, Symbol, Word};
