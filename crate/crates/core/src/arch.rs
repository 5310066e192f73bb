//! Arch factorization and the distinct-letter jump function.
//!
//! An arch is a factor containing the whole alphabet whose last letter occurs
//! nowhere else in it. Greedily cutting arches from the left yields
//! `w = ar_1 ⋯ ar_ι · r` with a rest `r` that misses at least one letter.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::word::{LetterSet, Word};

/// The arch factorization of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArchFactorization {
    word: Word,
    /// 1-based end position of every arch, increasing.
    arch_ends: Vec<usize>,
}

impl ArchFactorization {
    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Universality index: the number of arches.
    pub fn iota(&self) -> usize {
        self.arch_ends.len()
    }

    /// 1-based inclusive interval of arch `i` (`1 ≤ i ≤ ι`).
    pub fn arch_range(&self, i: usize) -> Result<(usize, usize)> {
        self.check_arch_index(i)?;
        let start = if i == 1 { 1 } else { self.arch_ends[i - 2] + 1 };
        Ok((start, self.arch_ends[i - 1]))
    }

    pub fn arch_ranges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.iota()).map(move |i| self.arch_range(i).expect("index in range"))
    }

    /// Interval covered by the rest; empty (`start > end`) when the word ends on an arch.
    pub fn rest_range(&self) -> (usize, usize) {
        let start = self.arch_ends.last().map_or(1, |&e| e + 1);
        (start, self.word.len())
    }

    pub fn arch(&self, i: usize) -> Result<Word> {
        let (start, end) = self.arch_range(i)?;
        self.word.factor(start, end)
    }

    pub fn arches(&self) -> Vec<Word> {
        self.arch_ranges()
            .map(|(s, e)| self.word.factor(s, e).expect("arch inside word"))
            .collect()
    }

    pub fn rest(&self) -> Word {
        let (s, e) = self.rest_range();
        self.word.factor(s, e).expect("rest inside word")
    }

    /// The last letter of every arch, concatenated.
    pub fn modus(&self) -> Word {
        let s = self.word.symbols();
        self.word
            .with_symbols(self.arch_ends.iter().map(|&e| s[e - 1]).collect())
    }

    /// Arch `i` without its last letter.
    pub fn inner(&self, i: usize) -> Result<Word> {
        let (start, end) = self.arch_range(i)?;
        self.word.factor(start, end - 1)
    }

    fn check_arch_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.iota() {
            return Err(Error::OutOfRange {
                what: "arch index",
                value: i,
                min: 1,
                max: self.iota(),
            });
        }
        Ok(())
    }
}

/// Parenthesis notation, e.g. `(aab)(bba)a`.
impl fmt::Display for ArchFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alphabet = self.word.alphabet();
        let s = self.word.symbols();
        for (start, end) in self.arch_ranges() {
            write!(f, "(")?;
            for &a in &s[start - 1..end] {
                write!(f, "{}", alphabet.char_of(a))?;
            }
            write!(f, ")")?;
        }
        let (start, end) = self.rest_range();
        for &a in &s[start - 1..end] {
            write!(f, "{}", alphabet.char_of(a))?;
        }
        Ok(())
    }
}

pub fn arch_factorize(w: &Word) -> ArchFactorization {
    let sigma = w.sigma();
    let mut arch_ends = Vec::new();
    let mut seen = LetterSet::new();
    let mut distinct = 0;
    for (i, &a) in w.symbols().iter().enumerate() {
        if seen.insert(a) {
            distinct += 1;
            if distinct == sigma {
                arch_ends.push(i + 1);
                seen.clear();
                distinct = 0;
            }
        }
    }
    ArchFactorization {
        word: w.clone(),
        arch_ends,
    }
}

/// `ι(w)`, the largest `k` such that every word of length `k` is a scattered factor of `w`.
pub fn universality_index(w: &Word) -> usize {
    let sigma = w.sigma();
    let mut seen = LetterSet::new();
    let mut distinct = 0;
    let mut iota = 0;
    for &a in w.symbols() {
        if seen.insert(a) {
            distinct += 1;
            if distinct == sigma {
                iota += 1;
                seen.clear();
                distinct = 0;
            }
        }
    }
    iota
}

/// `ι(w) = k` and the rest is empty.
pub fn is_perfect_universal(w: &Word, k: usize) -> bool {
    let f = arch_factorize(w);
    f.iota() == k && f.rest().is_empty()
}

/// Perfect `k`-universal with every arch a permutation of the alphabet.
pub fn is_min_perfect_universal(w: &Word, k: usize) -> bool {
    is_perfect_universal(w, k) && w.len() == k * w.sigma()
}

/// Least position `j > i` such that `w[i+1..j]` holds exactly `s` distinct
/// letters, or `None` when the suffix after `i` has fewer than `s`.
///
/// `i = 0` means "before the first letter".
pub fn next_alph_pos(w: &Word, i: usize, s: usize) -> Result<Option<usize>> {
    check_jump_args(w, i, s)?;
    let mut seen = LetterSet::new();
    let mut distinct = 0;
    for (offset, &a) in w.symbols()[i..].iter().enumerate() {
        if seen.insert(a) {
            distinct += 1;
            if distinct == s {
                return Ok(Some(i + offset + 1));
            }
        }
    }
    Ok(None)
}

fn check_jump_args(w: &Word, i: usize, s: usize) -> Result<()> {
    if s == 0 || s > w.sigma() {
        return Err(Error::OutOfRange {
            what: "distinct-letter count",
            value: s,
            min: 1,
            max: w.sigma(),
        });
    }
    if i > w.len() {
        return Err(Error::OutOfRange {
            what: "position",
            value: i,
            min: 0,
            max: w.len(),
        });
    }
    Ok(())
}

/// Precomputed [`next_alph_pos`] for every `(i, s)`.
///
/// Row `i` lists the next occurrence of each letter after `i`, sorted; the
/// `s`-th smallest of them is where the `s`-th distinct letter appears.
#[derive(Clone, Debug)]
pub struct NextAlphTable {
    sigma: usize,
    len: usize,
    // 0 encodes None; positions are 1-based.
    rows: Vec<u32>,
}

impl NextAlphTable {
    pub fn new(w: &Word) -> Self {
        let sigma = w.sigma();
        let n = w.len();
        let mut rows = alloc::vec![0u32; (n + 1) * sigma];
        let mut next = alloc::vec![0u32; sigma];
        let mut row = Vec::with_capacity(sigma);
        for i in (0..=n).rev() {
            row.clear();
            row.extend(next.iter().copied().filter(|&p| p != 0));
            row.sort_unstable();
            rows[i * sigma..i * sigma + row.len()].copy_from_slice(&row);
            if i > 0 {
                next[w.symbols()[i - 1] as usize] = i as u32;
            }
        }
        NextAlphTable {
            sigma,
            len: n,
            rows,
        }
    }

    pub fn get(&self, i: usize, s: usize) -> Option<usize> {
        if s == 0 || s > self.sigma || i > self.len {
            return None;
        }
        match self.rows[i * self.sigma + s - 1] {
            0 => None,
            p => Some(p as usize),
        }
    }

    pub fn word_len(&self) -> usize {
        self.len
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{parse_word, Alphabet};
    use alloc::string::ToString;
    use alloc::sync::Arc;

    fn w(s: &str) -> Word {
        parse_word(s, None).unwrap()
    }

    #[test]
    fn factorization_with_rest() {
        let f = arch_factorize(&w("aabbbaa"));
        assert_eq!(f.to_string(), "(aab)(bba)a");
        assert_eq!(f.iota(), 2);
        assert_eq!(f.modus().to_string(), "ba");
        assert_eq!(f.inner(1).unwrap().to_string(), "aa");
        assert_eq!(f.inner(2).unwrap().to_string(), "bb");
        assert_eq!(f.rest().to_string(), "a");
        assert!(f.inner(3).is_err());
        assert!(f.inner(0).is_err());

        let g = arch_factorize(&w("aabbba"));
        assert_eq!(g.to_string(), "(aab)(bba)");
        assert!(g.rest().is_empty());
    }

    #[test]
    fn factorization_without_rest() {
        let f = arch_factorize(&w("tomatoatm"));
        let arches: Vec<_> = f.arches().iter().map(|a| a.to_string()).collect();
        assert_eq!(arches, ["toma", "toatm"]);
        assert!(f.rest().is_empty());
        assert_eq!(universality_index(&w("tomatoatm")), 2);
    }

    #[test]
    fn empty_word() {
        let ab = Arc::new(Alphabet::from_chars("ab").unwrap());
        let e = Word::empty(ab);
        let f = arch_factorize(&e);
        assert_eq!(f.iota(), 0);
        assert!(f.rest().is_empty());
        assert_eq!(f.to_string(), "");
    }

    #[test]
    fn perfect_predicates() {
        assert!(is_perfect_universal(&w("abab"), 2));
        assert!(is_min_perfect_universal(&w("abab"), 2));
        assert!(!is_perfect_universal(&w("aabb"), 1));
        assert!(is_min_perfect_universal(&w("abba"), 2));
        assert!(is_perfect_universal(&w("aabba"), 2));
        assert!(!is_min_perfect_universal(&w("aabba"), 2));
    }

    #[test]
    fn jump_examples() {
        let x = w("abcddcbaabcd");
        assert_eq!(next_alph_pos(&x, 2, 2).unwrap(), Some(4));
        assert_eq!(next_alph_pos(&x, 3, 2).unwrap(), Some(6));
        assert_eq!(next_alph_pos(&x, 10, 3).unwrap(), None);
        assert_eq!(next_alph_pos(&x, 0, 4).unwrap(), Some(4));
        assert_eq!(next_alph_pos(&x, 12, 1).unwrap(), None);
        assert!(next_alph_pos(&x, 0, 5).is_err());
        assert!(next_alph_pos(&x, 0, 0).is_err());
        assert!(next_alph_pos(&x, 13, 1).is_err());
    }

    #[test]
    fn table_matches_scan() {
        for text in [
            "abcddcbaabcd",
            "aabbba",
            "tomatoatm",
            "a",
            "abacabadabacaba",
        ] {
            let x = w(text);
            let t = NextAlphTable::new(&x);
            for i in 0..=x.len() {
                for s in 1..=x.sigma() {
                    assert_eq!(
                        t.get(i, s),
                        next_alph_pos(&x, i, s).unwrap(),
                        "{text} {i} {s}"
                    );
                }
            }
        }
    }
}
