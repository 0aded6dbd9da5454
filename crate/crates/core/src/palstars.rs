//! Palstars and their prime factorization.
//!
//! `PAL` is the set of nonempty even-length palindromes and a palstar is any
//! product of them (including the empty product). A prime palstar is a
//! nonempty palstar that is not the product of two nonempty palstars.
//!
//! The prime palstars form a prefix code, which makes factorization greedy:
//! the shortest nonempty even palindromic prefix of a palstar is its first
//! prime factor. That prefix needs no primality check of its own, since a
//! composite one would have a shorter even palindromic prefix.
//!
//! Prime palstars of length `2n` are exactly the perfect shuffles
//! `z ⧢ z^R` of unbordered words `z` of length `n`, which gives a second,
//! independent primality test and an enumeration.

use crate::borders::{enumerate_unbordered, is_unbordered, UnborderedWords};
use crate::error::PalstarError;
use crate::words::{perfect_shuffle, reverse, unshuffle, Alphabet, Symbol, Word};

/// Unique factorization of a palstar into prime palstars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PalstarFactorization {
    word: Word,
    factors: Vec<Word>,
}

impl PalstarFactorization {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn factors(&self) -> &[Word] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<Word> {
        self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// True iff `x_i = x_{n+1-i}` for every factor.
    pub fn is_symmetric(&self) -> bool {
        self.factors.iter().eq(self.factors.iter().rev())
    }
}

/// True iff `|w| ≥ 2`, `|w|` is even and `w = w^R`.
pub fn is_even_palindrome(w: &Word) -> bool {
    let s = w.symbols();
    !s.is_empty() && s.len().is_multiple_of(2) && s.iter().eq(s.iter().rev())
}

/// Even palindrome radii: entry `c` is the largest `h` with
/// `s[c-h..c+h]` a palindrome. Linear time (Manacher).
fn even_radii(s: &[Symbol]) -> Vec<usize> {
    let n = s.len();
    let mut rad = vec![0usize; n + 1];
    // [lo, hi) is the rightmost-reaching even palindrome seen so far
    let (mut lo, mut hi) = (0usize, 0usize);
    for c in 1..n {
        let mut h = if c < hi {
            rad[lo + hi - c].min(hi - c)
        } else {
            0
        };
        while h < c && c + h < n && s[c - h - 1] == s[c + h] {
            h += 1;
        }
        rad[c] = h;
        if c + h > hi {
            lo = c - h;
            hi = c + h;
        }
    }
    rad
}

/// Lengths `L` (ascending) for which the prefix of length `L` is a
/// nonempty even palindrome.
pub fn palindromic_even_prefix_lengths(w: &Word) -> Vec<usize> {
    let rad = even_radii(w.symbols());
    (1..=w.len() / 2)
        .filter(|&h| rad[h] >= h)
        .map(|h| 2 * h)
        .collect()
}

/// Quadratic reference for [`palindromic_even_prefix_lengths`].
pub fn palindromic_even_prefix_lengths_naive(w: &Word) -> Vec<usize> {
    (2..=w.len())
        .step_by(2)
        .filter(|&l| is_even_palindrome(&w.slice(0..l)))
        .collect()
}

/// Factors `w` into prime palstars, or returns `None` if `w` is not a
/// palstar. The empty word factors as the empty product.
///
/// Runs in linear time: one radius sweep, then each greedy step scans
/// centers only up to the end of the factor it finds.
pub fn factor_palstar(w: &Word) -> Option<PalstarFactorization> {
    let s = w.symbols();
    let rad = even_radii(s);
    let mut factors = Vec::new();
    let mut start = 0;
    while start < s.len() {
        let remaining = s.len() - start;
        let half = (1..=remaining / 2).find(|&h| rad[start + h] >= h)?;
        factors.push(Word::from(&s[start..start + 2 * half]));
        start += 2 * half;
    }
    Some(PalstarFactorization {
        word: w.clone(),
        factors,
    })
}

pub fn is_palstar(w: &Word) -> bool {
    factor_palstar(w).is_some()
}

/// Primality via factorization: a palstar with exactly one prime factor.
pub fn is_prime_palstar(w: &Word) -> bool {
    factor_palstar(w).is_some_and(|f| f.len() == 1)
}

/// Primality via the shuffle characterization: `w = z ⧢ z^R` with `z`
/// unbordered.
pub fn is_prime_palstar_by_shuffle(w: &Word) -> bool {
    unbordered_root_of(w).is_some()
}

/// `z ⧢ z^R` for an unbordered `z`; always a prime palstar of length `2|z|`.
pub fn prime_palstar_of(z: &Word) -> Result<Word, PalstarError> {
    if !is_unbordered(z).unwrap_or(false) {
        return Err(PalstarError::NotUnbordered);
    }
    Ok(shuffle_with_reverse(z))
}

fn shuffle_with_reverse(z: &Word) -> Word {
    perfect_shuffle(z, &reverse(z)).expect("a word and its reverse have equal length")
}

/// The unbordered `z` with `w = z ⧢ z^R`, if `w` is a prime palstar.
pub fn unbordered_root_of(w: &Word) -> Option<Word> {
    if w.is_empty() {
        return None;
    }
    let (z, y) = unshuffle(w).ok()?;
    if y != reverse(&z) {
        return None;
    }
    is_unbordered(&z).ok()?.then_some(z)
}

/// Prime palstars of length `2n` over `alphabet`, one per unbordered word
/// of length `n`.
///
/// Words come out in lexicographic order of their unbordered roots, which
/// is not the lexicographic order of the palstars themselves.
pub fn enumerate_prime_palstars(
    alphabet: &Alphabet,
    half_length: usize,
) -> Result<PrimePalstars, PalstarError> {
    let roots =
        enumerate_unbordered(alphabet, half_length).map_err(|_| PalstarError::ZeroLength)?;
    Ok(PrimePalstars { roots })
}

/// Iterator returned by [`enumerate_prime_palstars`].
#[derive(Clone, Debug)]
pub struct PrimePalstars {
    roots: UnborderedWords,
}

impl Iterator for PrimePalstars {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        self.roots.next().map(|z| shuffle_with_reverse(&z))
    }
}

/// Checks that the factorization of an even palindromic palstar reads the
/// same forwards and backwards. This always holds; the function exists as a
/// runtime check.
pub fn check_symmetric_factorization(w: &Word) -> Result<bool, PalstarError> {
    if !is_even_palindrome(w) {
        return Err(PalstarError::NotPalindromicPalstar);
    }
    let f = factor_palstar(w).ok_or(PalstarError::NotPalindromicPalstar)?;
    Ok(f.is_symmetric())
}
