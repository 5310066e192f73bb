//! Brute-force references and exhaustive small-instance verification.
//!
//! Everything here is computed from first principles (index subsets,
//! two-pointer subsequence tests, incremental fixed-width counting), so it
//! can serve as ground truth for the automaton-based routines in
//! `scatfact-core`.

mod claims;
mod report;
mod sweep;

use std::collections::BTreeSet;
use std::sync::Arc;

use scatfact_core::arch::universality_index;
use scatfact_core::{Alphabet, Error, Result, Symbol, Word};

pub use claims::{
    verify_always_absent, verify_injection, verify_max_absent_extremality,
    verify_min_absent_extremality, Guards,
};
pub use report::{Status, VerificationReport, Witness};
pub use sweep::{max_count_search, MaxSearch};

/// Default cap on candidate words enumerated by a sweep.
pub const DEFAULT_CANDIDATE_GUARD: u64 = 20_000_000;
/// Default cap on `C(|w|, k)` index subsets per brute-force set.
pub const DEFAULT_SUBSET_GUARD: u64 = 1_000_000;

/// All words over the first `sigma` letters with length `≤ max_len`,
/// shortest first and lexicographic within a length. With `iota_filter`,
/// only words with that universality index are yielded.
pub fn enumerate_words(
    sigma: usize,
    max_len: usize,
    iota_filter: Option<usize>,
    guard: u64,
) -> Result<WordStream> {
    let alphabet = Arc::new(Alphabet::first(sigma)?);
    let total = (0..=max_len)
        .try_fold(0u64, |acc, l| {
            (sigma as u64)
                .checked_pow(l as u32)
                .and_then(|p| acc.checked_add(p))
        })
        .unwrap_or(u64::MAX);
    if total > guard {
        return Err(Error::GuardExceeded {
            what: "word enumeration",
            required: total.to_string(),
            guard,
            hint: "",
        });
    }
    Ok(WordStream {
        alphabet,
        max_len,
        iota_filter,
        current: Some(Vec::new()),
    })
}

/// Iterator returned by [`enumerate_words`].
#[derive(Clone, Debug)]
pub struct WordStream {
    alphabet: Arc<Alphabet>,
    max_len: usize,
    iota_filter: Option<usize>,
    current: Option<Vec<Symbol>>,
}

impl WordStream {
    fn advance(&mut self) {
        let Some(cur) = self.current.as_mut() else {
            return;
        };
        let sigma = self.alphabet.size() as Symbol;
        for i in (0..cur.len()).rev() {
            if cur[i] + 1 < sigma {
                cur[i] += 1;
                return;
            }
            cur[i] = 0;
        }
        // Wrapped: move to the next length.
        if cur.len() == self.max_len {
            self.current = None;
        } else {
            cur.push(0);
            cur.iter_mut().for_each(|a| *a = 0);
        }
    }
}

impl Iterator for WordStream {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        loop {
            let symbols = self.current.clone()?;
            self.advance();
            let w = Word::new(Arc::clone(&self.alphabet), symbols).expect("symbols in range");
            if self.iota_filter.is_none_or(|i| universality_index(&w) == i) {
                return Some(w);
            }
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `ScatFact_k(w)` by enumerating every index subset `i_1 < … < i_k`.
pub fn brute_scatfact_set(w: &Word, k: usize, guard: u64) -> Result<BTreeSet<Word>> {
    let n = w.len();
    let subsets = binomial(n, k);
    if subsets > guard as u128 {
        return Err(Error::GuardExceeded {
            what: "index subsets",
            required: subsets.to_string(),
            guard,
            hint: "",
        });
    }
    let alphabet = w.alphabet();
    let s = w.symbols();
    let mut out = BTreeSet::new();
    if k > n {
        return Ok(out);
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let symbols = idx.iter().map(|&i| s[i]).collect();
        out.insert(Word::new(Arc::clone(alphabet), symbols)?);
        // Next combination in lexicographic order.
        let Some(pos) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return Ok(out);
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Two-pointer subsequence test.
pub fn naive_is_subsequence(w: &[Symbol], u: &[Symbol]) -> bool {
    let mut rest = w.iter();
    u.iter().all(|a| rest.any(|b| b == a))
}
