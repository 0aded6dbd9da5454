//! Borders, unbordered words and their exact count.
//!
//! A border of `w` is a nonempty prefix of `w` that is also a suffix and is
//! strictly shorter than `w`. A single letter therefore has no border.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Pow, ToPrimitive, Zero};

use crate::error::BorderError;
use crate::words::{words_of_length, Alphabet, Symbol, Word};

/// Longest-border lengths of every nonempty prefix of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderArray {
    word: Word,
    // longest[i] is the longest border of the prefix of length i + 1
    longest: Vec<usize>,
}

impl BorderArray {
    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Longest border of the prefix of length `prefix_len` (1-based).
    pub fn get(&self, prefix_len: usize) -> Option<usize> {
        prefix_len
            .checked_sub(1)
            .and_then(|i| self.longest.get(i).copied())
    }

    /// Entries for prefix lengths `1..=|w|`.
    pub fn as_slice(&self) -> &[usize] {
        &self.longest
    }

    /// Longest border of the whole word.
    pub fn longest_border(&self) -> usize {
        *self.longest.last().expect("border arrays are never empty")
    }

    /// Every border length of the whole word, longest first.
    pub fn border_lengths(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut b = self.longest_border();
        while b > 0 {
            out.push(b);
            b = self.longest[b - 1];
        }
        out
    }
}

/// Extends a failure table by one symbol. `prefix` is the word before the
/// new symbol and `table` its border array.
fn extend_border(prefix: &[Symbol], table: &[usize], next: Symbol) -> usize {
    if prefix.is_empty() {
        return 0;
    }
    let mut b = table[prefix.len() - 1];
    loop {
        if prefix[b] == next {
            return b + 1;
        }
        if b == 0 {
            return 0;
        }
        b = table[b - 1];
    }
}

/// Computes the border array of a nonempty word in linear time.
pub fn border_array(w: &Word) -> Result<BorderArray, BorderError> {
    if w.is_empty() {
        return Err(BorderError::EmptyWord);
    }
    let s = w.symbols();
    let mut longest = Vec::with_capacity(s.len());
    for i in 0..s.len() {
        let b = extend_border(&s[..i], &longest, s[i]);
        longest.push(b);
    }
    Ok(BorderArray {
        word: w.clone(),
        longest,
    })
}

/// True iff `w` cannot be written as `xyx` with `x` nonempty.
pub fn is_unbordered(w: &Word) -> Result<bool, BorderError> {
    Ok(border_array(w)?.longest_border() == 0)
}

/// Unbordered words of length `n`, in lexicographic order.
///
/// Words are grown depth-first with the border array maintained
/// incrementally. The only pruning is on the final letter, which must
/// differ from the first (otherwise a border of length 1 exists); bordered
/// prefixes can still extend to unbordered words, so nothing else is cut.
pub fn enumerate_unbordered(alphabet: &Alphabet, n: usize) -> Result<UnborderedWords, BorderError> {
    UnborderedWords::new(alphabet.len(), n)
}

/// Generate-and-filter baseline for [`enumerate_unbordered`].
pub fn enumerate_unbordered_by_filter(
    alphabet: &Alphabet,
    n: usize,
) -> Result<impl Iterator<Item = Word>, BorderError> {
    if n == 0 {
        return Err(BorderError::ZeroLength);
    }
    Ok(words_of_length(alphabet.len(), n).filter(|w| is_unbordered(w).unwrap_or(false)))
}

/// Iterator returned by [`enumerate_unbordered`].
#[derive(Clone, Debug)]
pub struct UnborderedWords {
    k: Symbol,
    n: usize,
    word: Vec<Symbol>,
    table: Vec<usize>,
    done: bool,
}

impl UnborderedWords {
    fn new(k: usize, n: usize) -> Result<Self, BorderError> {
        if n == 0 {
            return Err(BorderError::ZeroLength);
        }
        Ok(UnborderedWords {
            k: k as Symbol,
            n,
            word: Vec::with_capacity(n),
            table: Vec::with_capacity(n),
            done: k == 0,
        })
    }

    fn allowed(&self, depth: usize, sym: Symbol) -> bool {
        !(self.n >= 2 && depth == self.n - 1 && sym == self.word[0])
    }

    fn first_allowed(&self, depth: usize, from: Symbol) -> Option<Symbol> {
        (from..self.k).find(|&s| self.allowed(depth, s))
    }

    fn push(&mut self, sym: Symbol) {
        let b = extend_border(&self.word, &self.table, sym);
        self.table.push(b);
        self.word.push(sym);
    }

    /// Moves to the next sibling of the deepest node that has one.
    fn backtrack(&mut self) -> bool {
        while let Some(s) = self.word.pop() {
            self.table.pop();
            if let Some(t) = self.first_allowed(self.word.len(), s + 1) {
                self.push(t);
                return true;
            }
        }
        false
    }
}

impl Iterator for UnborderedWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        while !self.done {
            if self.word.len() < self.n {
                match self.first_allowed(self.word.len(), 0) {
                    Some(s) => self.push(s),
                    None => self.done = !self.backtrack(),
                }
                continue;
            }
            let hit = (self.table[self.n - 1] == 0).then(|| Word::new(self.word.clone()));
            self.done = !self.backtrack();
            if hit.is_some() {
                return hit;
            }
        }
        None
    }
}

/// Exact counts `a_1..a_N` of unbordered words over `k` letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    alphabet_size: usize,
    values: Vec<BigUint>,
}

impl CountTable {
    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    /// `a_n`, for `1 ≤ n ≤ N`.
    pub fn get(&self, n: usize) -> Option<&BigUint> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn max_n(&self) -> usize {
        self.values.len()
    }

    /// `(n, a_n)` pairs in increasing `n`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.values.iter().enumerate().map(|(i, v)| (i + 1, v))
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }
}

/// Nielsen's recurrence: `a_1 = k`, `a_n = k·a_{n-1} − a_{n/2}` for even
/// `n`, `a_n = k·a_{n-1}` for odd `n > 1`.
///
/// `k = 1` is accepted and yields `1, 0, 0, …`.
pub fn count_unbordered(alphabet_size: usize, max_n: usize) -> Result<CountTable, BorderError> {
    if alphabet_size == 0 {
        return Err(BorderError::ZeroAlphabet);
    }
    if max_n == 0 {
        return Err(BorderError::ZeroLength);
    }
    let k = BigUint::from(alphabet_size);
    let mut values: Vec<BigUint> = Vec::with_capacity(max_n);
    values.push(k.clone());
    for n in 2..=max_n {
        let mut a = &k * &values[n - 2];
        if n.is_even() {
            // k·a_{n-1} ≥ a_{n/2} whenever k ≥ 1, since a_{n-1} ≥ a_{n/2} along the recurrence
            a -= &values[n / 2 - 1];
        }
        values.push(a);
    }
    Ok(CountTable {
        alphabet_size,
        values,
    })
}

/// The ratio `a_n / k^n`, which tends to the constant `c_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CkEstimate {
    pub alphabet_size: usize,
    pub n: usize,
    pub ratio: BigRational,
}

impl CkEstimate {
    /// Decimal expansion rounded half-up to `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        render_decimal(&self.ratio, digits)
    }

    pub fn to_f64(&self) -> f64 {
        self.ratio.to_f64().unwrap_or(f64::NAN)
    }
}

pub fn estimate_ck(alphabet_size: usize, n: usize) -> Result<CkEstimate, BorderError> {
    let table = count_unbordered(alphabet_size, n)?;
    let a_n = table.values[n - 1].clone();
    let k_n: BigUint = Pow::pow(BigUint::from(alphabet_size), n);
    Ok(CkEstimate {
        alphabet_size,
        n,
        ratio: BigRational::new(a_n.into(), k_n.into()),
    })
}

/// Renders a nonnegative rational in fixed-point decimal.
pub fn render_decimal(value: &BigRational, digits: usize) -> String {
    let num = value.numer().magnitude();
    let den = value.denom().magnitude();
    let scale: BigUint = Pow::pow(BigUint::from(10u32), digits);
    let (mut q, r) = (num * &scale).div_rem(den);
    if r * 2u32 >= *den {
        q += 1u32;
    }
    let (int_part, frac_part) = q.div_rem(&scale);
    let sign = if value.numer().sign() == num_bigint::Sign::Minus
        && !(int_part.is_zero() && frac_part.is_zero())
    {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        return format!("{sign}{int_part}");
    }
    let frac = frac_part.to_string();
    let pad = "0".repeat(digits - frac.len());
    format!("{sign}{int_part}.{pad}{frac}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::words_up_to;

    fn w(s: &str) -> Word {
        Word::from_digits(s)
    }

    /// Quadratic reference: compare every prefix/suffix pair directly.
    fn has_border_naive(w: &Word) -> bool {
        let s = w.symbols();
        (1..s.len()).any(|b| s[..b] == s[s.len() - b..])
    }

    fn longest_border_naive(s: &[Symbol]) -> usize {
        (1..s.len())
            .rev()
            .find(|&b| s[..b] == s[s.len() - b..])
            .unwrap_or(0)
    }

    #[test]
    fn border_array_examples() {
        let a = Alphabet::parse("entaglm").unwrap();
        let word = a.parse_word("entanglement").unwrap();
        let arr = border_array(&word).unwrap();
        assert_eq!(arr.longest_border(), 3);
        assert_eq!(border_array(&w("0")).unwrap().as_slice(), &[0]);
        assert_eq!(border_array(&w("0110")).unwrap().longest_border(), 1);
        assert_eq!(border_array(&Word::empty()), Err(BorderError::EmptyWord));
    }

    #[test]
    fn border_array_matches_reference() {
        let word = w("0010010001001");
        let arr = border_array(&word).unwrap();
        for len in 1..=word.len() {
            assert_eq!(
                arr.get(len),
                Some(longest_border_naive(&word.symbols()[..len]))
            );
        }
        assert_eq!(arr.border_lengths(), vec![6, 3]);
    }

    #[test]
    fn unbordered_examples() {
        let a = Alphabet::parse("no").unwrap();
        assert!(is_unbordered(&a.parse_word("no").unwrap()).unwrap());
        assert!(!is_unbordered(&w("00")).unwrap());
        assert!(is_unbordered(&w("0001")).unwrap());
        assert_eq!(is_unbordered(&Word::empty()), Err(BorderError::EmptyWord));
    }

    #[test]
    fn unbordered_agrees_with_naive_check() {
        for word in words_up_to(2, 14).skip(1) {
            assert_eq!(
                is_unbordered(&word).unwrap(),
                !has_border_naive(&word),
                "{word}"
            );
        }
    }

    #[test]
    fn border_array_invariants_hold() {
        for word in words_up_to(3, 8).skip(1) {
            let arr = border_array(&word).unwrap();
            let t = arr.as_slice();
            assert_eq!(t[0], 0);
            for (i, &b) in t.iter().enumerate() {
                assert!(b < i + 1);
                if i + 1 < t.len() {
                    assert!(t[i + 1] <= b + 1);
                }
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let bin = Alphabet::binary();
        let got: Vec<Word> = enumerate_unbordered(&bin, 1).unwrap().collect();
        assert_eq!(got, vec![w("0"), w("1")]);
        let got: Vec<Word> = enumerate_unbordered(&bin, 2).unwrap().collect();
        assert_eq!(got, vec![w("01"), w("10")]);
        let got: Vec<String> = enumerate_unbordered(&bin, 4)
            .unwrap()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(got, ["0001", "0011", "0111", "1000", "1100", "1110"]);
        assert_eq!(
            enumerate_unbordered(&bin, 0).err(),
            Some(BorderError::ZeroLength)
        );
    }

    #[test]
    fn pruned_enumeration_matches_filter() {
        for k in 1..=3 {
            let a = Alphabet::new((0..k).map(|i| i.to_string())).unwrap();
            for n in 1..=8 {
                let fast: Vec<Word> = enumerate_unbordered(&a, n).unwrap().collect();
                let slow: Vec<Word> = enumerate_unbordered_by_filter(&a, n).unwrap().collect();
                assert_eq!(fast, slow, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn enumeration_counts_match_recurrence() {
        let bin = Alphabet::binary();
        let table = count_unbordered(2, 12).unwrap();
        for n in 1..=12 {
            let count = enumerate_unbordered(&bin, n).unwrap().count();
            assert_eq!(BigUint::from(count), *table.get(n).unwrap(), "n={n}");
        }
        let tern = Alphabet::parse("012").unwrap();
        let table = count_unbordered(3, 8).unwrap();
        for n in 1..=8 {
            let count = enumerate_unbordered(&tern, n).unwrap().count();
            assert_eq!(BigUint::from(count), *table.get(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn count_examples() {
        // frozen from exhaustive enumeration
        let binary: Vec<u64> = vec![2, 2, 4, 6, 12, 20, 40, 74, 148, 284, 568, 1116, 2232, 4424];
        let table = count_unbordered(2, 14).unwrap();
        let got: Vec<u64> = table.values().iter().map(|v| v.to_u64().unwrap()).collect();
        assert_eq!(got, binary);

        let ternary: Vec<u64> = vec![3, 6, 18, 48, 144, 414, 1242, 3678];
        let table = count_unbordered(3, 8).unwrap();
        let got: Vec<u64> = table.values().iter().map(|v| v.to_u64().unwrap()).collect();
        assert_eq!(got, ternary);

        let unary = count_unbordered(1, 5).unwrap();
        let got: Vec<u64> = unary.values().iter().map(|v| v.to_u64().unwrap()).collect();
        assert_eq!(got, vec![1, 0, 0, 0, 0]);

        assert_eq!(count_unbordered(0, 3), Err(BorderError::ZeroAlphabet));
        assert_eq!(count_unbordered(2, 0), Err(BorderError::ZeroLength));
    }

    #[test]
    fn count_is_exact_past_u64() {
        let table = count_unbordered(2, 200).unwrap();
        assert_eq!(
            table.get(200).unwrap().to_string(),
            "430316861298029451586007013866688997952321398930030456445000"
        );
        assert_eq!(table.get(50).unwrap().to_u64(), Some(301_501_187_441_384));
    }

    #[test]
    fn ck_examples() {
        let est = estimate_ck(2, 50).unwrap();
        assert!((est.to_f64() - 0.2677868).abs() <= 5e-7);
        assert_eq!(est.to_decimal(7), "0.2677868");
        assert_eq!(estimate_ck(2, 1).unwrap().to_decimal(1), "1.0");
        let e8 = estimate_ck(2, 8).unwrap();
        assert_eq!(e8.ratio, BigRational::new(74.into(), 256.into()));
        assert_eq!(e8.to_decimal(7), "0.2890625");
    }

    #[test]
    fn ck_ratio_is_non_increasing() {
        let mut prev = estimate_ck(2, 1).unwrap().ratio;
        for n in 2..=60 {
            let cur = estimate_ck(2, n).unwrap().ratio;
            assert!(cur <= prev, "n={n}");
            prev = cur;
        }
    }

    #[test]
    fn decimal_rendering_rounds_half_up() {
        let r = |p: i64, q: i64| BigRational::new(p.into(), q.into());
        assert_eq!(render_decimal(&r(1, 8), 2), "0.13");
        assert_eq!(render_decimal(&r(1, 3), 4), "0.3333");
        assert_eq!(render_decimal(&r(2, 3), 0), "1");
        assert_eq!(render_decimal(&r(1, 1000), 2), "0.00");
        assert_eq!(render_decimal(&r(7, 2), 3), "3.500");
    }
}
