use crate::algebra::{Polynomial, Word};

use super::RewriteSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OverlapKind {
    /// A proper suffix of the left leading word is a prefix of the right one.
    SuffixPrefix,
    /// The right leading word is a factor of the left one.
    Inclusion,
}

/// An ambiguity between two rules.
///
/// The left leading word occurs in `word` at `left_offset`, the right one at
/// `right_offset`. The derived order is the processing order: ambiguity
/// word (degree first, then deglex), then element indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Overlap {
    pub word: Word,
    pub left: usize,
    pub right: usize,
    pub left_offset: usize,
    pub right_offset: usize,
    pub kind: OverlapKind,
}

impl Overlap {
    pub fn degree(&self) -> usize {
        self.word.degree()
    }

    /// `u·f·v − u'·g·v'`; both rules are monic, so the ambiguity word cancels.
    pub fn s_polynomial(&self, rs: &RewriteSet) -> Polynomial {
        let f = &rs.elements()[self.left];
        let g = &rs.elements()[self.right];
        let w = self.word.letters();
        let (fl, gl) = (f.leading_word().degree(), g.leading_word().degree());
        let left = f.sandwich(&w[..self.left_offset], &w[self.left_offset + fl..]);
        let right = g.sandwich(&w[..self.right_offset], &w[self.right_offset + gl..]);
        left.sub(&right).expect("same field")
    }

    /// An ambiguity of two monomial rules always resolves.
    pub fn is_trivial(&self, rs: &RewriteSet) -> bool {
        rs.elements()[self.left].is_monomial() && rs.elements()[self.right].is_monomial()
    }
}

fn suffix_prefix(a: &Word, b: &Word, left: usize, right: usize, out: &mut Vec<Overlap>) {
    let (al, bl) = (a.letters(), b.letters());
    let max = al.len().min(bl.len());
    for k in 1..max {
        if al[al.len() - k..] == bl[..k] {
            out.push(Overlap {
                word: Word::new([al, &bl[k..]].concat()),
                left,
                right,
                left_offset: 0,
                right_offset: al.len() - k,
                kind: OverlapKind::SuffixPrefix,
            });
        }
    }
}

fn inclusion(a: &Word, b: &Word, left: usize, right: usize, out: &mut Vec<Overlap>) {
    if b.degree() > a.degree() || (left == right) {
        return;
    }
    for pos in a.occurrences(b) {
        out.push(Overlap {
            word: a.clone(),
            left,
            right,
            left_offset: 0,
            right_offset: pos,
            kind: OverlapKind::Inclusion,
        });
    }
}

/// All proper ambiguities between element `new_index` and every element of
/// `rs`, itself included. The result is sorted and duplicate-free.
pub fn find_overlaps(rs: &RewriteSet, new_index: usize) -> Vec<Overlap> {
    let mut out = Vec::new();
    let a = rs.elements()[new_index].leading_word();
    for (j, g) in rs.elements().iter().enumerate() {
        let b = g.leading_word();
        suffix_prefix(a, b, new_index, j, &mut out);
        if j != new_index {
            suffix_prefix(b, a, j, new_index, &mut out);
        }
        inclusion(a, b, new_index, j, &mut out);
        inclusion(b, a, j, new_index, &mut out);
    }
    out.sort();
    out.dedup();
    out
}

/// Every ambiguity among the elements of `rs`.
pub fn all_overlaps(rs: &RewriteSet) -> Vec<Overlap> {
    let mut out = Vec::new();
    let words: Vec<&Word> = rs.elements().iter().map(Polynomial::leading_word).collect();
    for (i, a) in words.iter().enumerate() {
        for (j, b) in words.iter().enumerate() {
            suffix_prefix(a, b, i, j, &mut out);
            inclusion(a, b, i, j, &mut out);
        }
    }
    out.sort();
    out.dedup();
    out
}
