use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::automata::Dfa;
use crate::words::{Alphabet, Symbol, Word};

/// A nondeterministic automaton with epsilon moves.
///
/// States are `0..num_states()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    // delta[state][symbol]
    delta: Vec<Vec<BTreeSet<usize>>>,
    epsilon: Vec<BTreeSet<usize>>,
    start: BTreeSet<usize>,
    accepting: BTreeSet<usize>,
}

impl Nfa {
    /// An automaton with `num_states` states and no transitions, start or
    /// accepting states.
    pub fn new(alphabet: Alphabet, num_states: usize) -> Self {
        let k = alphabet.len();
        Nfa {
            alphabet,
            delta: vec![vec![BTreeSet::new(); k]; num_states],
            epsilon: vec![BTreeSet::new(); num_states],
            start: BTreeSet::new(),
            accepting: BTreeSet::new(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    /// Appends a fresh state and returns its index.
    pub fn add_state(&mut self) -> usize {
        self.delta.push(vec![BTreeSet::new(); self.alphabet.len()]);
        self.epsilon.push(BTreeSet::new());
        self.delta.len() - 1
    }

    /// # Panics
    ///
    /// Panics if a state or the symbol is out of range.
    pub fn add_transition(&mut self, from: usize, symbol: Symbol, to: usize) {
        assert!(to < self.num_states(), "target state {to} out of range");
        self.delta[from][symbol as usize].insert(to);
    }

    pub fn add_epsilon(&mut self, from: usize, to: usize) {
        assert!(to < self.num_states(), "target state {to} out of range");
        self.epsilon[from].insert(to);
    }

    pub fn add_start(&mut self, state: usize) {
        assert!(state < self.num_states());
        self.start.insert(state);
    }

    pub fn add_accepting(&mut self, state: usize) {
        assert!(state < self.num_states());
        self.accepting.insert(state);
    }

    pub fn start(&self) -> &BTreeSet<usize> {
        &self.start
    }

    pub fn accepting(&self) -> &BTreeSet<usize> {
        &self.accepting
    }

    pub fn targets(&self, from: usize, symbol: Symbol) -> &BTreeSet<usize> {
        &self.delta[from][symbol as usize]
    }

    pub fn epsilon_targets(&self, from: usize) -> &BTreeSet<usize> {
        &self.epsilon[from]
    }

    pub fn has_epsilon(&self) -> bool {
        self.epsilon.iter().any(|e| !e.is_empty())
    }

    fn closure(&self, states: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = states.iter().copied().collect();
        while let Some(q) = stack.pop() {
            for &r in &self.epsilon[q] {
                if states.insert(r) {
                    stack.push(r);
                }
            }
        }
    }

    fn step(&self, from: &BTreeSet<usize>, symbol: Symbol) -> BTreeSet<usize> {
        let mut next: BTreeSet<usize> = from
            .iter()
            .flat_map(|&q| self.delta[q][symbol as usize].iter().copied())
            .collect();
        self.closure(&mut next);
        next
    }

    pub fn accepts(&self, word: &Word) -> bool {
        let mut current = self.start.clone();
        self.closure(&mut current);
        for &s in word.symbols() {
            if s as usize >= self.alphabet.len() {
                return false;
            }
            current = self.step(&current, s);
            if current.is_empty() {
                return false;
            }
        }
        current.iter().any(|q| self.accepting.contains(q))
    }

    /// Subset construction. The result is total: the empty subset becomes
    /// an explicit dead state when it is reachable. States are numbered in
    /// breadth-first discovery order.
    pub fn determinize(&self) -> Dfa {
        let k = self.alphabet.len();
        let mut first = self.start.clone();
        self.closure(&mut first);

        let mut index: HashMap<BTreeSet<usize>, usize> = HashMap::new();
        let mut subsets = vec![first.clone()];
        index.insert(first, 0);
        let mut delta: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let mut row = Vec::with_capacity(k);
            for s in 0..k as Symbol {
                let next = self.step(&subsets[i], s);
                let j = *index.entry(next.clone()).or_insert_with(|| {
                    subsets.push(next);
                    queue.push_back(subsets.len() - 1);
                    subsets.len() - 1
                });
                row.push(j);
            }
            if delta.len() <= i {
                delta.resize(i + 1, Vec::new());
            }
            delta[i] = row;
        }
        let accepting = subsets
            .iter()
            .map(|set| set.iter().any(|q| self.accepting.contains(q)))
            .collect();
        Dfa::from_parts(self.alphabet.clone(), delta, 0, accepting)
    }
}
