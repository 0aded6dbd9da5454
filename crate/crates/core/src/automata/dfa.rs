use std::collections::{HashMap, VecDeque};

use crate::automata::Nfa;
use crate::error::AutomatonError;
use crate::words::{Alphabet, Symbol, Word};

/// A complete deterministic automaton. States are `0..num_states()` and
/// every state has a transition on every symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    delta: Vec<Vec<usize>>,
    start: usize,
    accepting: Vec<bool>,
}

impl Dfa {
    /// Builds a DFA from a transition table indexed `[state][symbol]`.
    pub fn new(
        alphabet: Alphabet,
        delta: Vec<Vec<usize>>,
        start: usize,
        accepting: Vec<bool>,
    ) -> Result<Self, AutomatonError> {
        let n = delta.len();
        if n == 0 {
            return Err(AutomatonError::NoStates);
        }
        if start >= n {
            return Err(AutomatonError::UnknownState(start.to_string()));
        }
        if accepting.len() != n {
            return Err(AutomatonError::UnknownState(accepting.len().to_string()));
        }
        for (q, row) in delta.iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(AutomatonError::MissingTransition {
                    state: q.to_string(),
                    symbol: alphabet.symbols()[row.len().min(alphabet.len() - 1)].clone(),
                });
            }
            if let Some(&bad) = row.iter().find(|&&t| t >= n) {
                return Err(AutomatonError::UnknownState(bad.to_string()));
            }
        }
        Ok(Dfa {
            alphabet,
            delta,
            start,
            accepting,
        })
    }

    pub(crate) fn from_parts(
        alphabet: Alphabet,
        delta: Vec<Vec<usize>>,
        start: usize,
        accepting: Vec<bool>,
    ) -> Self {
        debug_assert!(delta.iter().all(|r| r.len() == alphabet.len()));
        Dfa {
            alphabet,
            delta,
            start,
            accepting,
        }
    }

    /// The empty language.
    pub fn empty(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Dfa::from_parts(alphabet, vec![vec![0; k]], 0, vec![false])
    }

    /// Every word over the alphabet.
    pub fn universal(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Dfa::from_parts(alphabet, vec![vec![0; k]], 0, vec![true])
    }

    /// The language `{ε}`.
    pub fn epsilon(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Dfa::from_parts(alphabet, vec![vec![1; k], vec![1; k]], 0, vec![true, false])
    }

    /// A finite language.
    pub fn from_words<'a, I>(alphabet: Alphabet, words: I) -> Self
    where
        I: IntoIterator<Item = &'a Word>,
    {
        // trie; state 0 is the root
        let mut nfa = Nfa::new(alphabet, 1);
        nfa.add_start(0);
        let mut children: HashMap<(usize, Symbol), usize> = HashMap::new();
        for w in words {
            let mut q = 0;
            for &s in w.symbols() {
                q = match children.get(&(q, s)) {
                    Some(&next) => next,
                    None => {
                        let next = nfa.add_state();
                        nfa.add_transition(q, s, next);
                        children.insert((q, s), next);
                        next
                    }
                };
            }
            nfa.add_accepting(q);
        }
        nfa.determinize().minimize()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn next(&self, state: usize, symbol: Symbol) -> usize {
        self.delta[state][symbol as usize]
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn run(&self, symbols: &[Symbol]) -> Option<usize> {
        let mut q = self.start;
        for &s in symbols {
            q = *self.delta[q].get(s as usize)?;
        }
        Some(q)
    }

    pub fn accepts(&self, word: &Word) -> bool {
        self.accepts_symbols(word.symbols())
    }

    pub fn accepts_symbols(&self, symbols: &[Symbol]) -> bool {
        self.run(symbols).is_some_and(|q| self.accepting[q])
    }

    /// The same automaton with ε-free nondeterministic representation.
    pub fn to_nfa(&self) -> Nfa {
        let mut nfa = Nfa::new(self.alphabet.clone(), self.num_states());
        nfa.add_start(self.start);
        for (q, row) in self.delta.iter().enumerate() {
            for (s, &t) in row.iter().enumerate() {
                nfa.add_transition(q, s as Symbol, t);
            }
            if self.accepting[q] {
                nfa.add_accepting(q);
            }
        }
        nfa
    }

    /// Same language with the acceptance flipped; the alphabet is unchanged.
    pub fn complement(&self) -> Dfa {
        Dfa {
            accepting: self.accepting.iter().map(|a| !a).collect(),
            ..self.clone()
        }
    }

    /// Reachable product automaton, accepting where `accept(a, b)` holds.
    pub(crate) fn product<F>(&self, other: &Dfa, accept: F) -> Result<Dfa, AutomatonError>
    where
        F: Fn(bool, bool) -> bool,
    {
        if self.alphabet != other.alphabet {
            return Err(AutomatonError::AlphabetMismatch);
        }
        let k = self.alphabet.len();
        let mut index = HashMap::new();
        let mut pairs = vec![(self.start, other.start)];
        index.insert((self.start, other.start), 0usize);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            let row = (0..k)
                .map(|s| {
                    let next = (self.delta[p][s], other.delta[q][s]);
                    *index.entry(next).or_insert_with(|| {
                        pairs.push(next);
                        pairs.len() - 1
                    })
                })
                .collect();
            delta.push(row);
            i += 1;
        }
        let accepting = pairs
            .iter()
            .map(|&(p, q)| accept(self.accepting[p], other.accepting[q]))
            .collect();
        Ok(Dfa::from_parts(self.alphabet.clone(), delta, 0, accepting))
    }

    /// Shortest accepted word, lexicographically least among the shortest.
    pub fn shortest_accepted(&self) -> Option<Word> {
        let n = self.num_states();
        let mut parent: Vec<Option<(usize, Symbol)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[self.start] = true;
        let mut queue = VecDeque::from([self.start]);
        while let Some(q) = queue.pop_front() {
            if self.accepting[q] {
                let mut symbols = Vec::new();
                let mut cur = q;
                while let Some((p, s)) = parent[cur] {
                    symbols.push(s);
                    cur = p;
                }
                symbols.reverse();
                return Some(Word::new(symbols));
            }
            for (s, &t) in self.delta[q].iter().enumerate() {
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((q, s as Symbol));
                    queue.push_back(t);
                }
            }
        }
        None
    }

    pub fn is_empty_language(&self) -> bool {
        self.shortest_accepted().is_none()
    }

    fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        seen[self.start] = true;
        let mut stack = vec![self.start];
        while let Some(q) = stack.pop() {
            for &t in &self.delta[q] {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    /// Minimal complete DFA in canonical form.
    ///
    /// Unreachable states are dropped, equivalent states merged by
    /// partition refinement, and the survivors renumbered in breadth-first
    /// order from the start state (symbols in alphabet order). Two DFAs
    /// accept the same language iff their minimized forms are equal.
    pub fn minimize(&self) -> Dfa {
        let reachable = self.reachable();
        let live: Vec<usize> = (0..self.num_states()).filter(|&q| reachable[q]).collect();

        // Moore refinement: split blocks by (block, successor blocks) until stable
        let mut block = vec![usize::MAX; self.num_states()];
        for &q in &live {
            block[q] = usize::from(self.accepting[q]);
        }
        let mut count = 0;
        loop {
            let mut signatures: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
            let mut next = vec![usize::MAX; self.num_states()];
            for &q in &live {
                let sig = (block[q], self.delta[q].iter().map(|&t| block[t]).collect());
                let fresh = signatures.len();
                next[q] = *signatures.entry(sig).or_insert(fresh);
            }
            let new_count = signatures.len();
            block = next;
            if new_count == count {
                break;
            }
            count = new_count;
        }

        // canonical renumbering
        let mut order = vec![usize::MAX; count];
        let mut representative = Vec::with_capacity(count);
        order[block[self.start]] = 0;
        representative.push(self.start);
        let mut i = 0;
        while i < representative.len() {
            let q = representative[i];
            for &t in &self.delta[q] {
                if order[block[t]] == usize::MAX {
                    order[block[t]] = representative.len();
                    representative.push(t);
                }
            }
            i += 1;
        }
        let delta = representative
            .iter()
            .map(|&q| self.delta[q].iter().map(|&t| order[block[t]]).collect())
            .collect();
        let accepting = representative.iter().map(|&q| self.accepting[q]).collect();
        Dfa::from_parts(self.alphabet.clone(), delta, 0, accepting)
    }
}
