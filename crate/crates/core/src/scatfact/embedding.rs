use alloc::sync::Arc;
use alloc::vec::Vec;

use super::automaton::SubsequenceAutomaton;
use crate::arch::{next_alph_pos, NextAlphTable};
use crate::error::{Error, Result};
use crate::word::{Alphabet, LetterSet, Word};

/// The leftmost embedding of a scattered factor, together with the number
/// of distinct letters in each gap `w[j_i + 1..j_{i+1}]`.
///
/// Replaying the gap sizes with [`next_alph_pos`] from `j_1` reproduces the
/// positions, which is what makes the embedding transferable to other words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalEmbedding {
    alphabet: Arc<Alphabet>,
    positions: Vec<usize>,
    gaps: Vec<usize>,
}

impl CanonicalEmbedding {
    /// 1-based positions `j_1 < … < j_k`.
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// `s_i = |letters(w[j_i + 1..j_{i+1}])|` for `i < k`.
    pub fn gap_alphabet_sizes(&self) -> &[usize] {
        &self.gaps
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    fn replay<F>(&self, target: &Word, mut jump: F) -> Result<Option<Word>>
    where
        F: FnMut(usize, usize) -> Option<usize>,
    {
        if !Arc::ptr_eq(&self.alphabet, target.alphabet()) && *self.alphabet != **target.alphabet()
        {
            return Err(Error::AlphabetMismatch);
        }
        let Some(&first) = self.positions.first() else {
            return Ok(Some(target.with_symbols(Vec::new())));
        };
        if first > target.len() {
            return Ok(None);
        }
        let mut j = first;
        let mut out = Vec::with_capacity(self.len());
        out.push(target.symbols()[j - 1]);
        for &s in &self.gaps {
            match jump(j, s) {
                Some(next) => j = next,
                None => return Ok(None),
            }
            out.push(target.symbols()[j - 1]);
        }
        Ok(Some(target.with_symbols(out)))
    }

    /// Replays the embedding in `target`; see [`transfer_embedding`].
    pub fn transfer_with_table(
        &self,
        target: &Word,
        table: &NextAlphTable,
    ) -> Result<Option<Word>> {
        if table.word_len() != target.len() || table.sigma() != target.sigma() {
            return Err(Error::InvalidParams(alloc::string::String::from(
                "jump table was built for a different word",
            )));
        }
        self.replay(target, |j, s| table.get(j, s))
    }
}

/// Leftmost embedding of `u` in `w`, or `None` if `u` is not a scattered factor.
pub fn canonical_embedding(w: &Word, u: &Word) -> Result<Option<CanonicalEmbedding>> {
    w.check_same_alphabet(u)?;
    let automaton = SubsequenceAutomaton::new(w);
    let mut positions = Vec::with_capacity(u.len());
    let mut state = 0;
    for &a in u.symbols() {
        match automaton.next(state, a) {
            Some(j) => {
                positions.push(j);
                state = j;
            }
            None => return Ok(None),
        }
    }
    let gaps = positions
        .windows(2)
        .map(|pair| {
            w.symbols()[pair[0]..pair[1]]
                .iter()
                .copied()
                .collect::<LetterSet>()
                .len()
        })
        .collect();
    Ok(Some(CanonicalEmbedding {
        alphabet: Arc::clone(w.alphabet()),
        positions,
        gaps,
    }))
}

/// Replays an embedding in `target`: `j'_1 = j_1` and
/// `j'_{i+1} = next_alph_pos(target, j'_i, s_i)`. Returns the letters read,
/// or `None` if a step runs off the end.
pub fn transfer_embedding(e: &CanonicalEmbedding, target: &Word) -> Result<Option<Word>> {
    e.replay(target, |j, s| {
        next_alph_pos(target, j, s).expect("gap sizes lie within 1..=σ")
    })
}
