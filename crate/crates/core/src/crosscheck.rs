//! Bounded-length check that the prime palstars are the star root of the
//! palstars, computed three ways over binary words.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::borders::{count_unbordered, enumerate_unbordered};
use crate::error::PalstarError;
use crate::oracle::{in_star_root, oracle_is_palstar};
use crate::palstars::{is_prime_palstar, prime_palstar_of};
use crate::words::{words_of_length, Alphabet, Word};

/// Largest half-length accepted by [`crosscheck`].
pub const MAX_CROSSCHECK_HALF_LENGTH: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub max_half_length: usize,
    /// `PALSTAR⁺ − PALSTAR⁺·PALSTAR⁺` by exhaustive search.
    pub star_root: BTreeSet<Word>,
    /// Words accepted by [`is_prime_palstar`].
    pub recognized: BTreeSet<Word>,
    /// `z ⧢ z^R` over unbordered `z`.
    pub from_unbordered: BTreeSet<Word>,
    /// Prime palstars of length `2n`, for `n = 1..=max_half_length`.
    pub b: Vec<usize>,
    /// Unbordered-word counts from the recurrence.
    pub a: Vec<BigUint>,
}

impl CrosscheckReport {
    pub fn sets_agree(&self) -> bool {
        self.star_root == self.recognized && self.star_root == self.from_unbordered
    }

    pub fn counts_agree(&self) -> bool {
        self.b.len() == self.a.len()
            && self
                .b
                .iter()
                .zip(&self.a)
                .all(|(&b, a)| BigUint::from(b) == *a)
    }

    pub fn agrees(&self) -> bool {
        self.sets_agree() && self.counts_agree()
    }
}

/// Runs the check over all binary words of length `1..=2n`.
pub fn crosscheck(max_half_length: usize) -> Result<CrosscheckReport, PalstarError> {
    let n = max_half_length;
    if n == 0 {
        return Err(PalstarError::ZeroLength);
    }
    if n > MAX_CROSSCHECK_HALF_LENGTH {
        return Err(PalstarError::TooLarge {
            requested: n,
            max: MAX_CROSSCHECK_HALF_LENGTH,
        });
    }
    let bound = 2 * n;
    let palstar = |s: &[u32]| oracle_is_palstar(&Word::from(s), bound).expect("within bound");

    let mut star_root = BTreeSet::new();
    let mut recognized = BTreeSet::new();
    for len in 1..=bound {
        for w in words_of_length(2, len) {
            if in_star_root(w.symbols(), palstar) {
                star_root.insert(w.clone());
            }
            if is_prime_palstar(&w) {
                recognized.insert(w);
            }
        }
    }

    let binary = Alphabet::binary();
    let mut from_unbordered = BTreeSet::new();
    for half in 1..=n {
        for z in enumerate_unbordered(&binary, half).expect("half ≥ 1") {
            from_unbordered.insert(prime_palstar_of(&z).expect("z is unbordered"));
        }
    }

    let b = (1..=n)
        .map(|half| star_root.iter().filter(|w| w.len() == 2 * half).count())
        .collect();
    let a = count_unbordered(2, n).expect("n ≥ 1").values().to_vec();
    Ok(CrosscheckReport {
        max_half_length: n,
        star_root,
        recognized,
        from_unbordered,
        b,
        a,
    })
}
