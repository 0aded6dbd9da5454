#![allow(dead_code)]

use bifix_core::automata::star;
use bifix_core::{Alphabet, Dfa, Nfa};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A random binary NFA with 3 to 6 states.
pub fn random_nfa(rng: &mut impl Rng) -> Nfa {
    let n = rng.gen_range(3..=6);
    let mut nfa = Nfa::new(Alphabet::binary(), n);
    nfa.add_start(0);
    if rng.gen_bool(0.2) {
        nfa.add_start(rng.gen_range(1..n));
    }
    for q in 0..n {
        for s in 0..2 {
            for t in 0..n {
                if rng.gen_bool(0.15) {
                    nfa.add_transition(q, s, t);
                }
            }
        }
        for t in 0..n {
            if t != q && rng.gen_bool(0.05) {
                nfa.add_epsilon(q, t);
            }
        }
        if rng.gen_bool(0.3) {
            nfa.add_accepting(q);
        }
    }
    nfa
}

/// Closed languages: random NFAs, starred, determinized and minimized.
/// The two trivial closed languages, `{ε}` and `Σ*`, are skipped.
pub fn closed_corpus(count: usize, seed: u64) -> Vec<Dfa> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trivial = [
        Dfa::epsilon(Alphabet::binary()).minimize(),
        Dfa::universal(Alphabet::binary()),
    ];
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let base = random_nfa(&mut rng).determinize();
        let closed = star(&base).determinize().minimize();
        if !trivial.contains(&closed) {
            out.push(closed);
        }
    }
    out
}

pub fn nfa_corpus(count: usize, seed: u64) -> Vec<Nfa> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_nfa(&mut rng)).collect()
}
