use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::algebra::{Alphabet, Word};
use crate::normal_words::CountTable;

use super::pattern::{Atom, FactorPattern};
use super::AutomatonError;

/// Complete deterministic automaton over ranks `0..alphabet_size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet_size: usize,
    /// `transitions[state * alphabet_size + letter]`.
    transitions: Vec<usize>,
    start: usize,
    accepting: Vec<bool>,
    dead: Option<usize>,
}

impl Dfa {
    pub fn new(
        alphabet_size: usize,
        transitions: Vec<usize>,
        start: usize,
        accepting: Vec<bool>,
    ) -> Result<Self, AutomatonError> {
        let n = accepting.len();
        if alphabet_size == 0 {
            return Err(AutomatonError::EmptyAlphabet);
        }
        if transitions.len() != n * alphabet_size || start >= n || transitions.iter().any(|&t| t >= n) {
            return Err(AutomatonError::MalformedDfa);
        }
        let mut dfa = Dfa {
            alphabet_size,
            transitions,
            start,
            accepting,
            dead: None,
        };
        dfa.dead = (0..n).find(|&s| {
            !dfa.accepting[s] && (0..alphabet_size).all(|l| dfa.transitions[s * alphabet_size + l] == s)
        });
        Ok(dfa)
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn dead(&self) -> Option<usize> {
        self.dead
    }

    pub fn step(&self, state: usize, letter: u8) -> usize {
        self.transitions[state * self.alphabet_size + letter as usize]
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn accepts(&self, w: &Word) -> bool {
        let end = w.letters().iter().fold(self.start, |s, &l| self.step(s, l));
        self.accepting[end]
    }

    /// States that are reachable from the start and can reach acceptance.
    pub fn live_states(&self) -> Vec<usize> {
        let n = self.num_states();
        let mut reach = vec![false; n];
        let mut stack = vec![self.start];
        reach[self.start] = true;
        while let Some(s) = stack.pop() {
            for l in 0..self.alphabet_size {
                let t = self.transitions[s * self.alphabet_size + l];
                if !reach[t] {
                    reach[t] = true;
                    stack.push(t);
                }
            }
        }
        let mut co = self.accepting.clone();
        loop {
            let mut changed = false;
            for s in 0..n {
                if !co[s] && (0..self.alphabet_size).any(|l| co[self.transitions[s * self.alphabet_size + l]]) {
                    co[s] = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        (0..n).filter(|&s| reach[s] && co[s]).collect()
    }

    /// Drops unreachable states, keeping state numbering in discovery order.
    pub fn trim(&self) -> Dfa {
        let mut index = vec![usize::MAX; self.num_states()];
        let mut order = vec![self.start];
        index[self.start] = 0;
        let mut i = 0;
        while i < order.len() {
            let s = order[i];
            for l in 0..self.alphabet_size {
                let t = self.transitions[s * self.alphabet_size + l];
                if index[t] == usize::MAX {
                    index[t] = order.len();
                    order.push(t);
                }
            }
            i += 1;
        }
        let transitions = order
            .iter()
            .flat_map(|&s| (0..self.alphabet_size).map(move |l| (s, l)))
            .map(|(s, l)| index[self.transitions[s * self.alphabet_size + l]])
            .collect();
        let accepting = order.iter().map(|&s| self.accepting[s]).collect();
        Dfa::new(self.alphabet_size, transitions, 0, accepting).expect("trimmed automaton is well formed")
    }
}

/// Nondeterministic "contains a pattern instance" automaton. State 0 loops
/// on every letter; state 1 is the absorbing found state.
struct Nfa {
    letter_edges: Vec<Vec<(u8, usize)>>,
    epsilon: Vec<Vec<usize>>,
}

const FOUND: usize = 1;

impl Nfa {
    fn add_state(&mut self) -> usize {
        self.letter_edges.push(Vec::new());
        self.epsilon.push(Vec::new());
        self.letter_edges.len() - 1
    }

    fn build(patterns: &[FactorPattern], alphabet_size: usize) -> Nfa {
        let mut nfa = Nfa {
            letter_edges: Vec::new(),
            epsilon: Vec::new(),
        };
        let start = nfa.add_state();
        let found = nfa.add_state();
        for l in 0..alphabet_size as u8 {
            nfa.letter_edges[start].push((l, start));
            nfa.letter_edges[found].push((l, found));
        }
        for p in patterns {
            let mut cur = start;
            let atoms = p.atoms();
            for (i, atom) in atoms.iter().enumerate() {
                let last = i + 1 == atoms.len();
                match atom {
                    Atom::Letter(l) => {
                        let next = if last { found } else { nfa.add_state() };
                        nfa.letter_edges[cur].push((*l, next));
                        cur = next;
                    }
                    Atom::Star(w) => {
                        let hub = nfa.add_state();
                        nfa.epsilon[cur].push(hub);
                        let mut s = hub;
                        for (k, &l) in w.iter().enumerate() {
                            let next = if k + 1 == w.len() { hub } else { nfa.add_state() };
                            nfa.letter_edges[s].push((l, next));
                            s = next;
                        }
                        cur = hub;
                        if last {
                            nfa.epsilon[hub].push(found);
                        }
                    }
                }
            }
        }
        nfa
    }

    fn closure(&self, set: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(s) = stack.pop() {
            for &t in &self.epsilon[s] {
                if set.insert(t) {
                    stack.push(t);
                }
            }
        }
    }
}

/// Automaton accepting exactly the words with no factor matching any of the
/// patterns. Subset construction; every subset containing the found state is
/// merged into one rejecting sink.
pub fn compile_forbidden(patterns: &[FactorPattern], alphabet: &Alphabet) -> Result<Dfa, AutomatonError> {
    compile_forbidden_ranks(patterns, alphabet.len())
}

pub fn compile_forbidden_ranks(patterns: &[FactorPattern], alphabet_size: usize) -> Result<Dfa, AutomatonError> {
    if alphabet_size == 0 {
        return Err(AutomatonError::EmptyAlphabet);
    }
    if let Some(l) = patterns.iter().filter_map(FactorPattern::max_letter).max() {
        if l as usize >= alphabet_size {
            return Err(AutomatonError::UnknownLetter(format!("rank {l}")));
        }
    }
    let nfa = Nfa::build(patterns, alphabet_size);
    let mut start = BTreeSet::from([0]);
    nfa.closure(&mut start);

    let sink_key: BTreeSet<usize> = BTreeSet::from([FOUND]);
    let mut ids: HashMap<BTreeSet<usize>, usize> = HashMap::new();
    let mut sets: Vec<BTreeSet<usize>> = Vec::new();
    let mut intern = |set: BTreeSet<usize>, sets: &mut Vec<BTreeSet<usize>>| -> usize {
        let key = if set.contains(&FOUND) { sink_key.clone() } else { set };
        *ids.entry(key.clone()).or_insert_with(|| {
            sets.push(key);
            sets.len() - 1
        })
    };
    let start_id = intern(start, &mut sets);
    let mut transitions = Vec::new();
    let mut i = 0;
    while i < sets.len() {
        let current = sets[i].clone();
        for l in 0..alphabet_size as u8 {
            let mut next = BTreeSet::new();
            for &s in &current {
                next.extend(nfa.letter_edges[s].iter().filter(|e| e.0 == l).map(|e| e.1));
            }
            nfa.closure(&mut next);
            transitions.push(intern(next, &mut sets));
        }
        i += 1;
    }
    let accepting = sets.iter().map(|s| !s.contains(&FOUND)).collect();
    Dfa::new(alphabet_size, transitions, start_id, accepting)
}

/// Number of accepted words of each length `0..=n`, by iterating the state
/// count vector.
pub fn count_by_degree(dfa: &Dfa, n: usize) -> CountTable {
    let states = dfa.num_states();
    let mut v = vec![BigUint::zero(); states];
    v[dfa.start] = BigUint::from(1u32);
    let mut a = Vec::with_capacity(n + 1);
    for step in 0..=n {
        let total = (0..states)
            .filter(|&s| dfa.accepting[s])
            .fold(BigUint::zero(), |acc, s| acc + &v[s]);
        a.push(total);
        if step == n {
            break;
        }
        let mut next = vec![BigUint::zero(); states];
        for (s, c) in v.iter().enumerate() {
            if c.is_zero() || Some(s) == dfa.dead {
                continue;
            }
            for l in 0..dfa.alphabet_size {
                next[dfa.transitions[s * dfa.alphabet_size + l]] += c;
            }
        }
        v = next;
    }
    CountTable::new(a, n)
}
