use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::automaton::SubsequenceAutomaton;
use crate::error::Result;
use crate::word::Word;

#[derive(Clone, Copy)]
enum Edge {
    /// Neither word can read the symbol.
    Dead,
    /// Exactly one word can read it.
    Split,
    To(usize),
}

/// Simon `k`-congruence: `ScatFact_ℓ(w) = ScatFact_ℓ(v)` for all `ℓ ≤ k`.
///
/// Runs a depth-bounded bisimulation over the pairs of automaton states
/// reachable from `(0, 0)` by a common word. A pair is equivalent up to depth
/// `d` if, for every symbol, both sides are stuck, or both move to a pair
/// equivalent up to depth `d − 1`. The table is refined level by level and
/// stops early at a fixpoint.
pub fn simon_congruent(w: &Word, v: &Word, k: usize) -> Result<bool> {
    w.check_same_alphabet(v)?;
    let aw = SubsequenceAutomaton::new(w);
    let av = SubsequenceAutomaton::new(v);
    let sigma = w.sigma();

    let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut pairs = vec![(0usize, 0usize)];
    index.insert((0, 0), 0);
    let mut edges: Vec<Edge> = Vec::new();
    let mut cursor = 0;
    while cursor < pairs.len() {
        let (i, j) = pairs[cursor];
        for a in 0..sigma as u8 {
            let edge = match (aw.next(i, a), av.next(j, a)) {
                (None, None) => Edge::Dead,
                (Some(x), Some(y)) => {
                    let next_id = pairs.len();
                    let id = *index.entry((x, y)).or_insert(next_id);
                    if id == next_id {
                        pairs.push((x, y));
                    }
                    Edge::To(id)
                }
                _ => Edge::Split,
            };
            edges.push(edge);
        }
        cursor += 1;
    }

    let mut equal = vec![true; pairs.len()];
    let mut refined = vec![true; pairs.len()];
    for _ in 0..k {
        let mut changed = false;
        for p in 0..pairs.len() {
            let ok = edges[p * sigma..(p + 1) * sigma].iter().all(|e| match *e {
                Edge::Dead => true,
                Edge::Split => false,
                Edge::To(q) => equal[q],
            });
            refined[p] = ok;
            changed |= ok != equal[p];
        }
        core::mem::swap(&mut equal, &mut refined);
        if !changed || !equal[0] {
            break;
        }
    }
    Ok(equal[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn pair(a: &str, b: &str) -> (Word, Word) {
        let w = parse_word(a, None).unwrap();
        let v = parse_word(b, Some(w.alphabet())).unwrap();
        (w, v)
    }

    #[test]
    fn two_but_not_three() {
        let (w, v) = pair("aaba", "abaa");
        assert!(simon_congruent(&w, &v, 2).unwrap());
        assert!(!simon_congruent(&w, &v, 3).unwrap());
    }

    #[test]
    fn reflexive_and_depth_zero() {
        let (w, v) = pair("abcab", "c");
        assert!(simon_congruent(&w, &w, 10).unwrap());
        assert!(simon_congruent(&w, &v, 0).unwrap());
        assert!(!simon_congruent(&w, &v, 1).unwrap());
    }

    #[test]
    fn long_k_is_fine() {
        let (w, v) = pair("abab", "abab");
        assert!(simon_congruent(&w, &v, 1_000_000).unwrap());
        let (w, v) = pair("abab", "abba");
        assert!(simon_congruent(&w, &v, 2).unwrap());
        assert!(!simon_congruent(&w, &v, 1_000_000).unwrap());
    }

    #[test]
    fn alphabet_mismatch() {
        let w = parse_word("ab", None).unwrap();
        let v = parse_word("abc", None).unwrap();
        assert!(simon_congruent(&w, &v, 1).is_err());
    }
}
