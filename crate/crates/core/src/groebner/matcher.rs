//! Aho-Corasick automaton over letter ranks.
//!
//! The complete goto table doubles as the factor-avoidance DFA used for
//! counting normal words: a state is terminal when some pattern ends there.

use std::collections::VecDeque;

use crate::algebra::Word;

#[derive(Clone, Debug)]
pub struct FactorMatcher {
    alphabet_size: usize,
    goto: Vec<u32>,
    fail: Vec<u32>,
    depth: Vec<u32>,
    /// Pattern ids ending exactly at this node.
    ends: Vec<Vec<u32>>,
    /// Nearest proper suffix state on the fail chain that ends a pattern.
    dict: Vec<Option<u32>>,
    terminal: Vec<bool>,
}

const ROOT: u32 = 0;
const NONE: u32 = u32::MAX;

impl FactorMatcher {
    pub fn new<'a, I>(alphabet_size: usize, patterns: I) -> Self
    where
        I: IntoIterator<Item = &'a Word>,
    {
        let g = alphabet_size;
        let mut goto = vec![NONE; g];
        let mut depth = vec![0u32];
        let mut ends: Vec<Vec<u32>> = vec![Vec::new()];
        for (id, pat) in patterns.into_iter().enumerate() {
            let mut s = ROOT as usize;
            for &c in pat.letters() {
                let slot = s * g + c as usize;
                if goto[slot] == NONE {
                    let next = depth.len() as u32;
                    goto[slot] = next;
                    goto.extend(std::iter::repeat_n(NONE, g));
                    depth.push(depth[s] + 1);
                    ends.push(Vec::new());
                }
                s = goto[slot] as usize;
            }
            ends[s].push(id as u32);
        }

        let n = depth.len();
        let mut fail = vec![ROOT; n];
        let mut dict = vec![None; n];
        let mut terminal: Vec<bool> = ends.iter().map(|e| !e.is_empty()).collect();
        let mut queue = VecDeque::new();
        for c in 0..g {
            let t = goto[c];
            if t == NONE {
                goto[c] = ROOT;
            } else {
                fail[t as usize] = ROOT;
                queue.push_back(t);
            }
        }
        while let Some(s) = queue.pop_front() {
            let s = s as usize;
            let f = fail[s] as usize;
            dict[s] = if !ends[f].is_empty() { Some(f as u32) } else { dict[f] };
            terminal[s] |= terminal[f];
            for c in 0..g {
                let slot = s * g + c;
                let t = goto[slot];
                if t == NONE {
                    goto[slot] = goto[f * g + c];
                } else {
                    fail[t as usize] = goto[f * g + c];
                    queue.push_back(t);
                }
            }
        }
        FactorMatcher {
            alphabet_size: g,
            goto,
            fail,
            depth,
            ends,
            dict,
            terminal,
        }
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn num_states(&self) -> usize {
        self.depth.len()
    }

    pub fn start(&self) -> usize {
        ROOT as usize
    }

    #[inline]
    pub fn step(&self, state: usize, letter: u8) -> usize {
        self.goto[state * self.alphabet_size + letter as usize] as usize
    }

    /// True when some pattern occurs as a suffix of the text read so far.
    #[inline]
    pub fn is_terminal(&self, state: usize) -> bool {
        self.terminal[state]
    }

    pub fn depth(&self, state: usize) -> usize {
        self.depth[state] as usize
    }

    pub fn fail(&self, state: usize) -> usize {
        self.fail[state] as usize
    }

    /// All occurrences as `(start position, pattern id)`.
    pub fn find_all(&self, text: &Word) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut s = self.start();
        for (i, &c) in text.letters().iter().enumerate() {
            s = self.step(s, c);
            if !self.terminal[s] {
                continue;
            }
            let mut node = if self.ends[s].is_empty() {
                self.dict[s].map(|d| d as usize)
            } else {
                Some(s)
            };
            while let Some(v) = node {
                let start = i + 1 - self.depth[v] as usize;
                out.extend(self.ends[v].iter().map(|&id| (start, id as usize)));
                node = self.dict[v].map(|d| d as usize);
            }
        }
        out
    }

    pub fn contains_any(&self, text: &Word) -> bool {
        let mut s = self.start();
        for &c in text.letters() {
            s = self.step(s, c);
            if self.terminal[s] {
                return true;
            }
        }
        false
    }
}
