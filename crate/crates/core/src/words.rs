//! Alphabets and words.
//!
//! A [`Word`] is a sequence of symbol indices into an [`Alphabet`]. Text is
//! only involved when parsing or rendering through an alphabet, so alphabets
//! larger than ten symbols or with multi-character symbols work the same as
//! the binary one.

use std::fmt;

use crate::error::WordError;

/// Index of a symbol within its alphabet.
pub type Symbol = u32;

/// An ordered list of distinct symbol names.
///
/// The order is the enumeration order: word streams produced by this crate
/// are lexicographic with respect to it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(WordError::EmptyAlphabet);
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() {
                return Err(WordError::EmptySymbol);
            }
            if symbols[..i].contains(s) {
                return Err(WordError::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// The alphabet `{0, 1}`.
    pub fn binary() -> Self {
        Alphabet {
            symbols: vec!["0".into(), "1".into()],
        }
    }

    /// Parses an alphabet declaration such as `01`, `abc` or `x,y,zz`.
    ///
    /// Without a comma each character is one symbol; with commas the
    /// declaration is split on them.
    pub fn parse(decl: &str) -> Result<Self, WordError> {
        if decl.contains(',') {
            Alphabet::new(decl.split(',').map(str::trim))
        } else {
            Alphabet::new(decl.chars().map(String::from))
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn index_of(&self, name: &str) -> Option<Symbol> {
        self.symbols
            .iter()
            .position(|s| s == name)
            .map(|i| i as Symbol)
    }

    pub fn name(&self, symbol: Symbol) -> Option<&str> {
        self.symbols.get(symbol as usize).map(String::as_str)
    }

    /// True when every symbol is a single character, in which case words
    /// are written without separators.
    pub fn is_single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Parses a word written over this alphabet.
    ///
    /// Single-character alphabets read one symbol per character unless the
    /// text contains commas; otherwise symbols are comma-separated. The
    /// empty string is the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word, WordError> {
        if text.is_empty() {
            return Ok(Word::empty());
        }
        let lookup = |tok: &str| {
            self.index_of(tok)
                .ok_or_else(|| WordError::UnknownSymbol(tok.to_string()))
        };
        let comma_separated =
            !self.is_single_char() || (text.contains(',') && self.index_of(",").is_none());
        let symbols = if !comma_separated {
            let mut buf = [0u8; 4];
            text.chars()
                .map(|c| lookup(c.encode_utf8(&mut buf)))
                .collect::<Result<Vec<_>, _>>()?
        } else {
            text.split(',')
                .map(|t| lookup(t.trim()))
                .collect::<Result<Vec<_>, _>>()?
        };
        Ok(Word { symbols })
    }

    /// Renders a word; the inverse of [`Alphabet::parse_word`].
    pub fn render(&self, word: &Word) -> Result<String, WordError> {
        let names = word
            .symbols
            .iter()
            .map(|&s| self.name(s).ok_or(WordError::SymbolOutOfRange(s)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(if self.is_single_char() {
            names.concat()
        } else {
            names.join(",")
        })
    }

    /// Checks that every symbol of `word` belongs to this alphabet.
    pub fn contains(&self, word: &Word) -> bool {
        word.symbols.iter().all(|&s| (s as usize) < self.len())
    }
}

/// A finite word, stored as symbol indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    symbols: Vec<Symbol>,
}

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word { symbols }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    /// Builds a word from ASCII digits, `"0110"` → `[0, 1, 1, 0]`.
    ///
    /// Convenience for tests and examples over alphabets of size ≤ 10.
    ///
    /// # Panics
    ///
    /// Panics on a non-digit character.
    pub fn from_digits(digits: &str) -> Self {
        Word {
            symbols: digits
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .expect("word must be written in decimal digits")
                })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.symbols);
        symbols.extend_from_slice(&other.symbols);
        Word { symbols }
    }

    /// The factor occupying `range` (0-based, half-open).
    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word::new(self.symbols[range].to_vec())
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(symbols: Vec<Symbol>) -> Self {
        Word { symbols }
    }
}

impl From<&[Symbol]> for Word {
    fn from(symbols: &[Symbol]) -> Self {
        Word {
            symbols: symbols.to_vec(),
        }
    }
}

impl AsRef<[Symbol]> for Word {
    fn as_ref(&self) -> &[Symbol] {
        &self.symbols
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word {
            symbols: iter.into_iter().collect(),
        }
    }
}

/// Digit rendering, meaningful for alphabets of size ≤ 10. Use
/// [`Alphabet::render`] for anything else.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            match char::from_digit(s, 36) {
                Some(c) => write!(f, "{c}")?,
                None => write!(f, "<{s}>")?,
            }
        }
        Ok(())
    }
}

/// The reversal `w^R`.
pub fn reverse(w: &Word) -> Word {
    w.symbols.iter().rev().copied().collect()
}

/// The perfect shuffle `a_1 b_1 a_2 b_2 ⋯ a_n b_n` of two words of equal
/// length.
pub fn perfect_shuffle(x: &Word, y: &Word) -> Result<Word, WordError> {
    if x.len() != y.len() {
        return Err(WordError::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.symbols
        .iter()
        .zip(&y.symbols)
        .flat_map(|(&a, &b)| [a, b])
        .collect())
}

/// Splits an even-length word into its odd-indexed and even-indexed
/// letters (1-based), so that `perfect_shuffle(x, y) == w`.
pub fn unshuffle(w: &Word) -> Result<(Word, Word), WordError> {
    if !w.len().is_multiple_of(2) {
        return Err(WordError::OddLength(w.len()));
    }
    let x = w.symbols.iter().step_by(2).copied().collect();
    let y = w.symbols.iter().skip(1).step_by(2).copied().collect();
    Ok((x, y))
}

/// The odd-indexed letters (1-based) of an even-length word.
///
/// Over `{0, 1}` this is the composite of decoding pairs `00, 01, 10, 11`
/// into four letters and projecting the first two to `0` and the last two
/// to `1`; the pair decoding is never materialized.
pub fn odd_index_extract(w: &Word) -> Result<Word, WordError> {
    if !w.len().is_multiple_of(2) {
        return Err(WordError::OddLength(w.len()));
    }
    Ok(w.symbols.chunks_exact(2).map(|pair| pair[0]).collect())
}

/// All words of length `n` over `k` symbols, in lexicographic order.
pub fn words_of_length(k: usize, n: usize) -> WordsOfLength {
    WordsOfLength {
        k: k as Symbol,
        current: if k == 0 && n > 0 {
            None
        } else {
            Some(vec![0; n])
        },
    }
}

/// Iterator returned by [`words_of_length`].
#[derive(Clone, Debug)]
pub struct WordsOfLength {
    k: Symbol,
    current: Option<Vec<Symbol>>,
}

impl Iterator for WordsOfLength {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        // odometer increment from the right
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] + 1 < self.k {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
        Some(Word::new(out))
    }
}

/// All words of length `0..=max_len` over `k` symbols, shortest first.
pub fn words_up_to(k: usize, max_len: usize) -> impl Iterator<Item = Word> {
    (0..=max_len).flat_map(move |n| words_of_length(k, n))
}
