//! Brute-force reference implementations.
//!
//! Everything here follows the definitions directly and shares no code with
//! the fast paths it is used to check. Inputs are capped by an explicit
//! length bound since the costs are polynomial of high degree or worse.

use crate::error::PalstarError;
use crate::words::{Symbol, Word};

/// Default cap on word length for the oracles.
pub const DEFAULT_ORACLE_BOUND: usize = 16;

fn check_bound(w: &[Symbol], bound: usize) -> Result<(), PalstarError> {
    if w.len() > bound {
        return Err(PalstarError::OracleBoundExceeded {
            len: w.len(),
            bound,
        });
    }
    Ok(())
}

fn is_pal(s: &[Symbol]) -> bool {
    s.len() >= 2
        && s.len().is_multiple_of(2)
        && (0..s.len() / 2).all(|i| s[i] == s[s.len() - 1 - i])
}

fn reachable(s: &[Symbol]) -> bool {
    let mut reach = vec![false; s.len() + 1];
    reach[0] = true;
    for i in 1..=s.len() {
        reach[i] = (0..i).any(|j| reach[j] && is_pal(&s[j..i]));
    }
    reach[s.len()]
}

/// Palstar membership by dynamic programming over prefixes:
/// `reach[i]` holds iff some `j < i` has `reach[j]` and `w[j..i]` an even
/// palindrome.
pub fn oracle_is_palstar(w: &Word, bound: usize) -> Result<bool, PalstarError> {
    check_bound(w.symbols(), bound)?;
    Ok(reachable(w.symbols()))
}

/// Membership in `L⁺ − L⁺·L⁺` where `L⁺ = L − {ε}`, given a membership
/// test for `L`: `w` is nonempty, in `L`, and has no split `w = uv` with
/// `u`, `v` both nonempty members of `L`.
pub fn in_star_root<F>(w: &[Symbol], mut member: F) -> bool
where
    F: FnMut(&[Symbol]) -> bool,
{
    !w.is_empty() && member(w) && !(1..w.len()).any(|i| member(&w[..i]) && member(&w[i..]))
}

/// Prime palstar by definition: a nonempty palstar with no split into two
/// nonempty palstars.
pub fn oracle_is_prime_palstar(w: &Word, bound: usize) -> Result<bool, PalstarError> {
    check_bound(w.symbols(), bound)?;
    Ok(in_star_root(w.symbols(), reachable))
}

/// Every way of cutting `w` into prime palstars, by exhaustive search.
pub fn prime_segmentations(w: &Word, bound: usize) -> Result<Vec<Vec<Word>>, PalstarError> {
    check_bound(w.symbols(), bound)?;
    let s = w.symbols();
    let mut out = Vec::new();
    let mut current = Vec::new();
    segment(s, 0, &mut current, &mut out);
    Ok(out)
}

fn segment(s: &[Symbol], start: usize, current: &mut Vec<Word>, out: &mut Vec<Vec<Word>>) {
    if start == s.len() {
        out.push(current.clone());
        return;
    }
    for end in start + 1..=s.len() {
        let piece = &s[start..end];
        if in_star_root(piece, reachable) {
            current.push(Word::from(piece));
            segment(s, end, current, out);
            current.pop();
        }
    }
}
