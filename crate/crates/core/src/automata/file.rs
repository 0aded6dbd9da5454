//! JSON interchange format for automata.
//!
//! ```json
//! {
//!   "alphabet": ["0", "1"],
//!   "states": ["a", "b"],
//!   "start": "a",
//!   "accept": ["a"],
//!   "transitions": [{"from": "a", "symbol": "0", "to": "b"}, ...]
//! }
//! ```
//!
//! A string `start` denotes a DFA, whose transition relation must be total
//! and deterministic. An array `start` denotes an NFA, where the symbol
//! `""` marks an epsilon move.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::automata::{Dfa, Nfa};
use crate::error::AutomatonError;
use crate::words::{Alphabet, Symbol};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StartField {
    Single(String),
    Set(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionEntry {
    pub from: String,
    pub symbol: String,
    pub to: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomatonFile {
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    pub start: StartField,
    pub accept: Vec<String>,
    pub transitions: Vec<TransitionEntry>,
}

/// A parsed automaton file.
#[derive(Clone, Debug)]
pub enum Automaton {
    Dfa(Dfa),
    Nfa(Nfa),
}

impl Automaton {
    pub fn from_json(text: &str) -> Result<Self, AutomatonError> {
        let file: AutomatonFile = serde_json::from_str(text)?;
        file.try_into()
    }

    /// The DFA itself, or the subset construction of an NFA.
    pub fn into_dfa(self) -> Dfa {
        match self {
            Automaton::Dfa(d) => d,
            Automaton::Nfa(n) => n.determinize(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        match self {
            Automaton::Dfa(d) => d.alphabet(),
            Automaton::Nfa(n) => n.alphabet(),
        }
    }
}

struct Names {
    states: HashMap<String, usize>,
}

impl Names {
    fn new(states: &[String]) -> Result<Self, AutomatonError> {
        if states.is_empty() {
            return Err(AutomatonError::NoStates);
        }
        let mut map = HashMap::new();
        for (i, s) in states.iter().enumerate() {
            if map.insert(s.clone(), i).is_some() {
                return Err(AutomatonError::DuplicateState(s.clone()));
            }
        }
        Ok(Names { states: map })
    }

    fn state(&self, name: &str) -> Result<usize, AutomatonError> {
        self.states
            .get(name)
            .copied()
            .ok_or_else(|| AutomatonError::UnknownState(name.to_string()))
    }
}

fn symbol(alphabet: &Alphabet, name: &str) -> Result<Symbol, AutomatonError> {
    alphabet
        .index_of(name)
        .ok_or_else(|| AutomatonError::UnknownSymbol(name.to_string()))
}

impl TryFrom<AutomatonFile> for Automaton {
    type Error = AutomatonError;

    fn try_from(file: AutomatonFile) -> Result<Self, Self::Error> {
        let alphabet = Alphabet::new(file.alphabet.iter().cloned())?;
        let names = Names::new(&file.states)?;
        let n = file.states.len();
        let k = alphabet.len();
        match &file.start {
            StartField::Single(start) => {
                let start = names.state(start)?;
                let mut delta: Vec<Vec<Option<usize>>> = vec![vec![None; k]; n];
                for t in &file.transitions {
                    if t.symbol.is_empty() {
                        return Err(AutomatonError::EpsilonInDfa);
                    }
                    let (from, s, to) = (
                        names.state(&t.from)?,
                        symbol(&alphabet, &t.symbol)?,
                        names.state(&t.to)?,
                    );
                    let slot = &mut delta[from][s as usize];
                    if slot.is_some_and(|old| old != to) {
                        return Err(AutomatonError::Nondeterministic {
                            state: t.from.clone(),
                            symbol: t.symbol.clone(),
                        });
                    }
                    *slot = Some(to);
                }
                let delta = delta
                    .into_iter()
                    .enumerate()
                    .map(|(q, row)| {
                        row.into_iter()
                            .enumerate()
                            .map(|(s, t)| {
                                t.ok_or_else(|| AutomatonError::MissingTransition {
                                    state: file.states[q].clone(),
                                    symbol: alphabet.symbols()[s].clone(),
                                })
                            })
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let mut accepting = vec![false; n];
                for a in &file.accept {
                    accepting[names.state(a)?] = true;
                }
                Ok(Automaton::Dfa(Dfa::new(alphabet, delta, start, accepting)?))
            }
            StartField::Set(starts) => {
                let mut nfa = Nfa::new(alphabet.clone(), n);
                for s in starts {
                    nfa.add_start(names.state(s)?);
                }
                for a in &file.accept {
                    nfa.add_accepting(names.state(a)?);
                }
                for t in &file.transitions {
                    let (from, to) = (names.state(&t.from)?, names.state(&t.to)?);
                    if t.symbol.is_empty() {
                        nfa.add_epsilon(from, to);
                    } else {
                        nfa.add_transition(from, symbol(&alphabet, &t.symbol)?, to);
                    }
                }
                Ok(Automaton::Nfa(nfa))
            }
        }
    }
}

fn state_name(q: usize) -> String {
    format!("q{q}")
}

impl From<&Dfa> for AutomatonFile {
    fn from(d: &Dfa) -> Self {
        let alphabet = d.alphabet().symbols().to_vec();
        let mut transitions = Vec::new();
        for q in 0..d.num_states() {
            for (s, name) in alphabet.iter().enumerate() {
                transitions.push(TransitionEntry {
                    from: state_name(q),
                    symbol: name.clone(),
                    to: state_name(d.next(q, s as Symbol)),
                });
            }
        }
        AutomatonFile {
            states: (0..d.num_states()).map(state_name).collect(),
            start: StartField::Single(state_name(d.start())),
            accept: (0..d.num_states())
                .filter(|&q| d.is_accepting(q))
                .map(state_name)
                .collect(),
            alphabet,
            transitions,
        }
    }
}

impl From<&Nfa> for AutomatonFile {
    fn from(n: &Nfa) -> Self {
        let alphabet = n.alphabet().symbols().to_vec();
        let mut transitions = Vec::new();
        for q in 0..n.num_states() {
            for &t in n.epsilon_targets(q) {
                transitions.push(TransitionEntry {
                    from: state_name(q),
                    symbol: String::new(),
                    to: state_name(t),
                });
            }
            for (s, name) in alphabet.iter().enumerate() {
                for &t in n.targets(q, s as Symbol) {
                    transitions.push(TransitionEntry {
                        from: state_name(q),
                        symbol: name.clone(),
                        to: state_name(t),
                    });
                }
            }
        }
        AutomatonFile {
            states: (0..n.num_states()).map(state_name).collect(),
            start: StartField::Set(n.start().iter().map(|&q| state_name(q)).collect()),
            accept: n.accepting().iter().map(|&q| state_name(q)).collect(),
            alphabet,
            transitions,
        }
    }
}

impl Dfa {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&AutomatonFile::from(self))
            .expect("automaton files always serialize")
    }
}

impl Nfa {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&AutomatonFile::from(self))
            .expect("automaton files always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{equivalent, star};
    use crate::words::Word;

    const PAIRS_STAR: &str = r#"{
        "alphabet": ["0", "1"],
        "states": ["s", "z", "o", "dead"],
        "start": "s",
        "accept": ["s"],
        "transitions": [
            {"from": "s", "symbol": "0", "to": "z"},
            {"from": "s", "symbol": "1", "to": "o"},
            {"from": "z", "symbol": "0", "to": "s"},
            {"from": "z", "symbol": "1", "to": "dead"},
            {"from": "o", "symbol": "0", "to": "dead"},
            {"from": "o", "symbol": "1", "to": "s"},
            {"from": "dead", "symbol": "0", "to": "dead"},
            {"from": "dead", "symbol": "1", "to": "dead"}
        ]
    }"#;

    #[test]
    fn reads_dfa() {
        let a = Automaton::from_json(PAIRS_STAR).unwrap();
        let Automaton::Dfa(d) = a else {
            panic!("expected DFA")
        };
        assert_eq!(d.num_states(), 4);
        assert!(d.accepts(&Word::from_digits("0011")));
        assert!(!d.accepts(&Word::from_digits("01")));
    }

    #[test]
    fn dfa_roundtrip_preserves_language() {
        let d = Automaton::from_json(PAIRS_STAR).unwrap().into_dfa();
        let back = Automaton::from_json(&d.to_json()).unwrap().into_dfa();
        assert_eq!(back, d);
    }

    #[test]
    fn nfa_roundtrip_preserves_language() {
        let d = Automaton::from_json(PAIRS_STAR).unwrap().into_dfa();
        let n = star(&d);
        let text = n.to_json();
        assert!(text.contains("\"symbol\": \"\""));
        let Automaton::Nfa(back) = Automaton::from_json(&text).unwrap() else {
            panic!("expected NFA")
        };
        assert!(equivalent(&back.determinize(), &n.determinize()).unwrap());
    }

    #[test]
    fn rejects_malformed_dfas() {
        let missing = PAIRS_STAR
            .replace(r#"{"from": "dead", "symbol": "1", "to": "dead"}"#, "")
            .replace(
                r#""dead"},
            "#,
                r#""dead"}"#,
            );
        assert!(matches!(
            Automaton::from_json(&missing),
            Err(AutomatonError::MissingTransition { .. }) | Err(AutomatonError::Json(_))
        ));
        let eps = PAIRS_STAR.replace(
            r#""from": "s", "symbol": "0""#,
            r#""from": "s", "symbol": """#,
        );
        assert!(matches!(
            Automaton::from_json(&eps),
            Err(AutomatonError::EpsilonInDfa)
        ));
        let unknown = PAIRS_STAR.replace(r#""to": "z""#, r#""to": "nowhere""#);
        assert!(
            matches!(Automaton::from_json(&unknown), Err(AutomatonError::UnknownState(s)) if s == "nowhere")
        );
        let dup = PAIRS_STAR.replace(
            r#"{"from": "z", "symbol": "1", "to": "dead"}"#,
            r#"{"from": "z", "symbol": "0", "to": "dead"}"#,
        );
        assert!(matches!(
            Automaton::from_json(&dup),
            Err(AutomatonError::Nondeterministic { .. })
        ));
        let badsym =
            PAIRS_STAR.replace(r#""symbol": "1", "to": "o""#, r#""symbol": "2", "to": "o""#);
        assert!(matches!(
            Automaton::from_json(&badsym),
            Err(AutomatonError::UnknownSymbol(_))
        ));
        assert!(matches!(
            Automaton::from_json("{"),
            Err(AutomatonError::Json(_))
        ));
    }

    #[test]
    fn multi_character_symbols() {
        let text = r#"{
            "alphabet": ["ab", "c"],
            "states": ["p", "q"],
            "start": ["p"],
            "accept": ["q"],
            "transitions": [{"from": "p", "symbol": "ab", "to": "q"}, {"from": "q", "symbol": "", "to": "p"}]
        }"#;
        let a = Automaton::from_json(text).unwrap();
        let alphabet = a.alphabet().clone();
        let d = a.into_dfa();
        assert!(d.accepts(&alphabet.parse_word("ab,ab").unwrap()));
        assert!(!d.accepts(&alphabet.parse_word("ab,c").unwrap()));
    }
}
