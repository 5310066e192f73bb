//! Brute-force references used only by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use scatfact_core::{Alphabet, Symbol, Word};

pub fn alphabet(sigma: usize) -> Arc<Alphabet> {
    Arc::new(Alphabet::first(sigma).unwrap())
}

pub fn word(alphabet: &Arc<Alphabet>, symbols: &[Symbol]) -> Word {
    Word::new(Arc::clone(alphabet), symbols.to_vec()).unwrap()
}

/// Every subsequence of length `k`, via index subsets.
pub fn subsequences(w: &[Symbol], k: usize) -> BTreeSet<Vec<Symbol>> {
    fn go(
        w: &[Symbol],
        start: usize,
        k: usize,
        cur: &mut Vec<Symbol>,
        out: &mut BTreeSet<Vec<Symbol>>,
    ) {
        if cur.len() == k {
            out.insert(cur.clone());
            return;
        }
        let need = k - cur.len();
        for i in start..w.len() {
            if w.len() - i < need {
                break;
            }
            cur.push(w[i]);
            go(w, i + 1, k, cur, out);
            cur.pop();
        }
    }
    let mut out = BTreeSet::new();
    go(w, 0, k, &mut Vec::new(), &mut out);
    out
}

/// Two-pointer subsequence test.
pub fn is_subsequence(w: &[Symbol], u: &[Symbol]) -> bool {
    let mut it = w.iter();
    u.iter().all(|a| it.any(|b| b == a))
}

/// All index tuples embedding `u` into `w`.
pub fn embeddings(w: &[Symbol], u: &[Symbol]) -> Vec<Vec<usize>> {
    fn go(
        w: &[Symbol],
        u: &[Symbol],
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == u.len() {
            out.push(cur.clone());
            return;
        }
        for i in start..w.len() {
            if w[i] == u[cur.len()] {
                cur.push(i + 1);
                go(w, u, i + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(w, u, 0, &mut Vec::new(), &mut out);
    out
}

/// Every word of length exactly `len` over `0..sigma`, lexicographically.
pub fn all_words(sigma: usize, len: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..sigma as Symbol).map(move |a| {
                    let mut x = w.clone();
                    x.push(a);
                    x
                })
            })
            .collect();
    }
    out
}

pub fn distinct(w: &[Symbol]) -> usize {
    w.iter().collect::<BTreeSet<_>>().len()
}

/// Largest number of consecutive factors covering `w`, each holding every letter.
pub fn max_universal_cover(w: &[Symbol], sigma: usize) -> usize {
    // best[i]: most full-alphabet factors that split w[..i] exactly; the last
    // factor may run to the end, so answer is max over i of best[i] where the
    // tail counts toward the last factor.
    let n = w.len();
    let mut best = vec![None; n + 1];
    best[0] = Some(0usize);
    for end in 1..=n {
        for start in 0..end {
            if let Some(b) = best[start] {
                if distinct(&w[start..end]) == sigma {
                    best[end] = Some(best[end].map_or(b + 1, |x: usize| x.max(b + 1)));
                }
            }
        }
    }
    best.iter().flatten().copied().max().unwrap_or(0)
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
