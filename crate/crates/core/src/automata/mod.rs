//! Finite automata and the regular-language operations needed for star
//! roots.
//!
//! A language `L` is closed when `L = L*`. Its star root `L^{-*}` is the
//! least generator of `L` and is computed here as `L⁺ − L⁺·L⁺` with
//! `L⁺ = L − {ε}`; for regular `L` it is again regular.

mod dfa;
mod file;
mod nfa;
mod ops;

pub use dfa::Dfa;
pub use file::{Automaton, AutomatonFile, StartField, TransitionEntry};
pub use nfa::Nfa;
pub use ops::{
    closure_witness, complement, concat, determinize, difference, distinguishing_word, equivalent,
    intersect, inverse_star, is_closed, minimize, star, union, verify_star_root,
};
