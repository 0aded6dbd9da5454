//! Language-level operations and the inverse star.

use crate::automata::{Dfa, Nfa};
use crate::error::AutomatonError;
use crate::words::{Symbol, Word};

pub fn determinize(n: &Nfa) -> Dfa {
    n.determinize()
}

pub fn minimize(d: &Dfa) -> Dfa {
    d.minimize()
}

pub fn complement(d: &Dfa) -> Dfa {
    d.complement()
}

pub fn intersect(a: &Dfa, b: &Dfa) -> Result<Dfa, AutomatonError> {
    a.product(b, |x, y| x && y)
}

pub fn union(a: &Dfa, b: &Dfa) -> Result<Dfa, AutomatonError> {
    a.product(b, |x, y| x || y)
}

/// `L(a) − L(b)`, i.e. `intersect(a, complement(b))`.
pub fn difference(a: &Dfa, b: &Dfa) -> Result<Dfa, AutomatonError> {
    intersect(a, &complement(b))
}

/// Copies `d` into `nfa` at offset `nfa.num_states()`, returning the offset.
fn embed(nfa: &mut Nfa, d: &Dfa) -> usize {
    let base = nfa.num_states();
    for _ in 0..d.num_states() {
        nfa.add_state();
    }
    for q in 0..d.num_states() {
        for s in 0..d.alphabet().len() as Symbol {
            nfa.add_transition(base + q, s, base + d.next(q, s));
        }
    }
    base
}

/// `L(a)·L(b)`: ε-moves from the accepting states of `a` to the start of `b`.
pub fn concat(a: &Dfa, b: &Dfa) -> Result<Nfa, AutomatonError> {
    if a.alphabet() != b.alphabet() {
        return Err(AutomatonError::AlphabetMismatch);
    }
    let mut nfa = Nfa::new(a.alphabet().clone(), 0);
    let left = embed(&mut nfa, a);
    let right = embed(&mut nfa, b);
    nfa.add_start(left + a.start());
    for q in 0..a.num_states() {
        if a.is_accepting(q) {
            nfa.add_epsilon(left + q, right + b.start());
        }
    }
    for q in 0..b.num_states() {
        if b.is_accepting(q) {
            nfa.add_accepting(right + q);
        }
    }
    Ok(nfa)
}

/// `L(a)*`: a fresh accepting start state with an ε-move into `a`, and
/// ε-moves from every accepting state of `a` back to its start.
pub fn star(a: &Dfa) -> Nfa {
    let mut nfa = Nfa::new(a.alphabet().clone(), 1);
    let base = embed(&mut nfa, a);
    nfa.add_start(0);
    nfa.add_accepting(0);
    nfa.add_epsilon(0, base + a.start());
    for q in 0..a.num_states() {
        if a.is_accepting(q) {
            nfa.add_accepting(base + q);
            nfa.add_epsilon(base + q, base + a.start());
        }
    }
    nfa
}

/// Shortest word in the symmetric difference, lexicographically least
/// among the shortest, or `None` if the languages are equal.
pub fn distinguishing_word(a: &Dfa, b: &Dfa) -> Result<Option<Word>, AutomatonError> {
    Ok(a.product(b, |x, y| x != y)?.shortest_accepted())
}

pub fn equivalent(a: &Dfa, b: &Dfa) -> Result<bool, AutomatonError> {
    Ok(distinguishing_word(a, b)?.is_none())
}

/// A word in `L* △ L` if `L` is not closed under star.
pub fn closure_witness(d: &Dfa) -> Option<Word> {
    let starred = star(d).determinize();
    distinguishing_word(d, &starred).expect("star preserves the alphabet")
}

/// True iff `L = L*`.
pub fn is_closed(d: &Dfa) -> bool {
    closure_witness(d).is_none()
}

fn require_closed(d: &Dfa) -> Result<(), AutomatonError> {
    match closure_witness(d) {
        None => Ok(()),
        Some(w) => Err(AutomatonError::NotClosed {
            witness: d.alphabet().render(&w)?,
        }),
    }
}

/// The smallest generator of a closed language: `L⁺ − L⁺·L⁺` with
/// `L⁺ = L − {ε}`, returned minimized.
///
/// Every closed language contains ε, so the literal `L − L²` would always be
/// empty; removing ε first yields the nonempty words of `L` that do not
/// split into two nonempty words of `L`.
pub fn inverse_star(d: &Dfa) -> Result<Dfa, AutomatonError> {
    require_closed(d)?;
    let plus = difference(d, &Dfa::epsilon(d.alphabet().clone()))?.minimize();
    let squared = concat(&plus, &plus)?.determinize();
    Ok(difference(&plus, &squared)?.minimize())
}

/// Checks `(L^{-*})* = L` for a closed `L`.
pub fn verify_star_root(d: &Dfa) -> Result<bool, AutomatonError> {
    let root = inverse_star(d)?;
    equivalent(&star(&root).determinize(), d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{words_up_to, Alphabet};

    fn w(s: &str) -> Word {
        Word::from_digits(s)
    }

    fn finite(words: &[&str]) -> Dfa {
        let ws: Vec<Word> = words.iter().map(|s| w(s)).collect();
        Dfa::from_words(Alphabet::binary(), &ws)
    }

    fn sigma_star() -> Dfa {
        Dfa::universal(Alphabet::binary())
    }

    /// Hand-built minimal DFA for (00+11)*: accept at 0, pending 0 at 1,
    /// pending 1 at 2, dead at 3.
    fn pairs_star_by_hand() -> Dfa {
        Dfa::new(
            Alphabet::binary(),
            vec![vec![1, 2], vec![0, 3], vec![3, 0], vec![3, 3]],
            0,
            vec![true, false, false, false],
        )
        .unwrap()
    }

    fn language(d: &Dfa, max_len: usize) -> Vec<Word> {
        words_up_to(d.alphabet().len(), max_len)
            .filter(|x| d.accepts(x))
            .collect()
    }

    #[test]
    fn determinize_examples() {
        // NFA for {00, 11} with separate branches
        let mut nfa = Nfa::new(Alphabet::binary(), 5);
        nfa.add_start(0);
        nfa.add_transition(0, 0, 1);
        nfa.add_transition(1, 0, 2);
        nfa.add_transition(0, 1, 3);
        nfa.add_transition(3, 1, 4);
        nfa.add_accepting(2);
        nfa.add_accepting(4);
        let d = nfa.determinize();
        assert_eq!(d.num_states(), 6); // five subsets plus the empty one
        assert_eq!(language(&d, 5), vec![w("00"), w("11")]);

        let mut dead = Nfa::new(Alphabet::binary(), 2);
        dead.add_start(0);
        dead.add_transition(0, 1, 1);
        assert!(dead.determinize().is_empty_language());

        let pairs = pairs_star_by_hand();
        assert!(equivalent(&pairs.to_nfa().determinize(), &pairs).unwrap());
    }

    #[test]
    fn minimize_examples() {
        let empty5 = Dfa::new(
            Alphabet::binary(),
            vec![vec![1, 2], vec![3, 4], vec![0, 0], vec![4, 4], vec![1, 3]],
            0,
            vec![false; 5],
        )
        .unwrap();
        let m = empty5.minimize();
        assert_eq!(m.num_states(), 1);
        assert!(!m.is_accepting(0));

        let all3 = Dfa::new(
            Alphabet::binary(),
            vec![vec![1, 2], vec![2, 0], vec![0, 1]],
            0,
            vec![true; 3],
        )
        .unwrap();
        assert_eq!(all3.minimize(), sigma_star());

        let pairs = finite(&["00", "11"]);
        let starred = star(&pairs).determinize().minimize();
        assert_eq!(starred.num_states(), 4);
        assert_eq!(starred, pairs_star_by_hand().minimize());
    }

    #[test]
    fn set_operation_examples() {
        assert!(difference(&sigma_star(), &sigma_star())
            .unwrap()
            .is_empty_language());
        let diff = difference(&finite(&["00", "11", "0011"]), &finite(&["0011"])).unwrap();
        assert_eq!(language(&diff, 4), vec![w("00"), w("11")]);

        // even length ∩ starts with 1
        let even = Dfa::new(
            Alphabet::binary(),
            vec![vec![1, 1], vec![0, 0]],
            0,
            vec![true, false],
        )
        .unwrap();
        let starts1 = Dfa::new(
            Alphabet::binary(),
            vec![vec![2, 1], vec![1, 1], vec![2, 2]],
            0,
            vec![false, true, false],
        )
        .unwrap();
        let both = intersect(&even, &starts1).unwrap();
        for x in words_up_to(2, 6) {
            let expected = x.len() % 2 == 0 && x.symbols().first() == Some(&1);
            assert_eq!(both.accepts(&x), expected, "{x}");
        }
        let either = union(&even, &starts1).unwrap();
        for x in words_up_to(2, 6) {
            assert_eq!(either.accepts(&x), even.accepts(&x) || starts1.accepts(&x));
        }
    }

    #[test]
    fn alphabet_mismatch_is_rejected() {
        let other = Dfa::universal(Alphabet::parse("ab").unwrap());
        assert!(matches!(
            intersect(&sigma_star(), &other),
            Err(AutomatonError::AlphabetMismatch)
        ));
        assert!(matches!(
            concat(&sigma_star(), &other),
            Err(AutomatonError::AlphabetMismatch)
        ));
        assert!(matches!(
            equivalent(&sigma_star(), &other),
            Err(AutomatonError::AlphabetMismatch)
        ));
    }

    #[test]
    fn concat_and_star_examples() {
        let empty = Dfa::empty(Alphabet::binary());
        let eps = Dfa::epsilon(Alphabet::binary());
        assert!(equivalent(&star(&empty).determinize(), &eps).unwrap());

        let cat = concat(&finite(&["0"]), &finite(&["1"]))
            .unwrap()
            .determinize();
        assert_eq!(language(&cat, 4), vec![w("01")]);

        let starred = star(&finite(&["00", "11"])).determinize();
        assert!(equivalent(&starred, &pairs_star_by_hand()).unwrap());
        assert!(star(&finite(&["0"])).accepts(&Word::empty()));
    }

    #[test]
    fn equivalence_examples() {
        let empty = Dfa::empty(Alphabet::binary());
        assert!(equivalent(&sigma_star(), &complement(&empty)).unwrap());
        let pairs = finite(&["00", "11"]);
        assert!(!equivalent(&pairs, &pairs_star_by_hand()).unwrap());
        assert_eq!(
            distinguishing_word(&pairs, &pairs_star_by_hand()).unwrap(),
            Some(Word::empty())
        );
        let canonical = star(&pairs).determinize().minimize();
        assert!(equivalent(&canonical, &pairs_star_by_hand()).unwrap());
    }

    #[test]
    fn closedness_examples() {
        assert!(is_closed(&pairs_star_by_hand()));
        assert!(!is_closed(&finite(&["0"])));
        assert!(is_closed(&sigma_star()));
        assert!(is_closed(&Dfa::epsilon(Alphabet::binary())));
        // {0}* ∪ ... witness is ε for {0}
        assert_eq!(closure_witness(&finite(&["0"])), Some(Word::empty()));
        // contains ε but not closed under concatenation
        assert_eq!(closure_witness(&finite(&["", "0"])), Some(w("00")));
    }

    #[test]
    fn inverse_star_examples() {
        let root = inverse_star(&pairs_star_by_hand()).unwrap();
        assert!(equivalent(&root, &finite(&["00", "11"])).unwrap());

        let root = inverse_star(&sigma_star()).unwrap();
        assert!(equivalent(&root, &finite(&["0", "1"])).unwrap());

        let root = inverse_star(&Dfa::epsilon(Alphabet::binary())).unwrap();
        assert!(root.is_empty_language());

        match inverse_star(&finite(&["0"])) {
            Err(AutomatonError::NotClosed { witness }) => assert_eq!(witness, ""),
            other => panic!("expected NotClosed, got {other:?}"),
        }
        match inverse_star(&finite(&["", "1"])) {
            Err(AutomatonError::NotClosed { witness }) => assert_eq!(witness, "11"),
            other => panic!("expected NotClosed, got {other:?}"),
        }
    }

    #[test]
    fn verify_root_examples() {
        assert!(verify_star_root(&pairs_star_by_hand()).unwrap());
        assert!(verify_star_root(&sigma_star()).unwrap());
        assert!(verify_star_root(&Dfa::epsilon(Alphabet::binary())).unwrap());
        assert!(verify_star_root(&finite(&["0"])).is_err());
    }

    #[test]
    fn root_of_infinite_closed_language() {
        // (0 + 01*0)*: root is 0 + 01*0 minus words that split
        let gen = Dfa::new(
            Alphabet::binary(),
            vec![vec![1, 3], vec![4, 2], vec![4, 2], vec![3, 3], vec![3, 3]],
            0,
            vec![false, true, false, false, true],
        )
        .unwrap();
        let closed = star(&gen).determinize().minimize();
        let root = inverse_star(&closed).unwrap();
        for x in words_up_to(2, 8) {
            let expected = crate::oracle::in_star_root(x.symbols(), |s| closed.accepts_symbols(s));
            assert_eq!(root.accepts(&x), expected, "{x}");
        }
        assert!(verify_star_root(&closed).unwrap());
    }
}
