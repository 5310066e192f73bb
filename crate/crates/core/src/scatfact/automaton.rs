use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::word::{Symbol, Word};

/// Next-occurrence table of a word.
///
/// State `i` (`0 ≤ i ≤ |w|`) stands for the prefix `w[1..i]`; reading `a`
/// moves to the first position after `i` holding `a`. Walks from state 0
/// spell exactly the distinct scattered factors of the word.
#[derive(Clone, Debug)]
pub struct SubsequenceAutomaton {
    word: Word,
    // (|w| + 1) × σ, row-major; 0 encodes None.
    next: Vec<u32>,
}

impl SubsequenceAutomaton {
    pub fn new(word: &Word) -> Self {
        let sigma = word.sigma();
        let n = word.len();
        let mut next = vec![0u32; (n + 1) * sigma];
        for i in (0..n).rev() {
            let (row, below) = next.split_at_mut((i + 1) * sigma);
            let row = &mut row[i * sigma..];
            row.copy_from_slice(&below[..sigma]);
            row[word.symbols()[i] as usize] = (i + 1) as u32;
        }
        SubsequenceAutomaton {
            word: word.clone(),
            next,
        }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn sigma(&self) -> usize {
        self.word.sigma()
    }

    /// Number of states, `|w| + 1`.
    pub fn num_states(&self) -> usize {
        self.word.len() + 1
    }

    /// `next(i, a) = min { j > i : w[j] = a }`.
    #[inline]
    pub fn next(&self, state: usize, a: Symbol) -> Option<usize> {
        match self.next[state * self.sigma() + a as usize] {
            0 => None,
            j => Some(j as usize),
        }
    }

    /// Runs the greedy walk for `u` from `state`; the final state on success.
    pub fn run_from(&self, state: usize, u: &[Symbol]) -> Option<usize> {
        u.iter().try_fold(state, |s, &a| self.next(s, a))
    }

    pub fn accepts(&self, u: &[Symbol]) -> bool {
        self.run_from(0, u).is_some()
    }
}

pub fn build_automaton(w: &Word) -> SubsequenceAutomaton {
    SubsequenceAutomaton::new(w)
}

/// Whether `u` is a scattered factor (subsequence) of `w`.
pub fn is_scattered_factor(w: &Word, u: &Word) -> Result<bool> {
    w.check_same_alphabet(u)?;
    Ok(SubsequenceAutomaton::new(w).accepts(u.symbols()))
}
