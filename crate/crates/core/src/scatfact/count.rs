use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{pow, One, Zero};

use crate::word::Word;

/// Exact number of distinct scattered factors of each length `0..=|w|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    sigma: usize,
    counts: Vec<BigUint>,
}

impl CountTable {
    /// `|ScatFact_k(w)|`; zero for `k > |w|`.
    pub fn get(&self, k: usize) -> BigUint {
        self.counts.get(k).cloned().unwrap_or_default()
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Largest length with an entry, i.e. `|w|`.
    pub fn max_len(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    /// `σ^k − |ScatFact_k(w)|`: the `m` for which the word is m-nearly k-universal.
    pub fn absent(&self, k: usize) -> BigUint {
        pow(BigUint::from(self.sigma), k) - self.get(k)
    }
}

/// Counts distinct scattered factors of every length.
///
/// With `D_i[k]` the count for the prefix of length `i`, appending `a` gives
/// `D_{i+1}[k] = D_i[k] + D_i[k−1] − D_{p−1}[k−1]`, where `p` is the previous
/// occurrence of `a` (no subtraction if there is none). Only the row before
/// each letter's last occurrence is kept, so memory is `O(σ·|w|)` big integers
/// and time `O(|w|²)` big-integer additions.
pub fn count_scatfact_all_lengths(w: &Word) -> CountTable {
    let n = w.len();
    let mut cur: Vec<BigUint> = vec![BigUint::zero(); n + 1];
    cur[0] = BigUint::one();
    let mut before_last: Vec<Option<Vec<BigUint>>> = vec![None; w.sigma()];

    for (i, &a) in w.symbols().iter().enumerate() {
        let prev = cur.clone();
        let shadow = before_last[a as usize].as_ref();
        for k in (1..=i + 1).rev() {
            let mut v = &cur[k] + &cur[k - 1];
            if let Some(row) = shadow {
                v -= &row[k - 1];
            }
            cur[k] = v;
        }
        before_last[a as usize] = Some(prev);
    }

    CountTable {
        sigma: w.sigma(),
        counts: cur,
    }
}

/// Number of length-`k` words over the alphabet that are not scattered factors of `w`.
pub fn absent_count(w: &Word, k: usize) -> BigUint {
    count_scatfact_all_lengths(w).absent(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{parse_word, Alphabet};
    use alloc::sync::Arc;

    fn counts(s: &str) -> CountTable {
        count_scatfact_all_lengths(&parse_word(s, None).unwrap())
    }

    #[test]
    fn four_letter_examples() {
        let x = counts("aabbccdd");
        assert_eq!(x.get(2), BigUint::from(10u32));
        assert_eq!(x.get(3), BigUint::from(16u32));
        let y = counts("abcdccdc");
        assert_eq!(y.get(2), BigUint::from(9u32));
        assert_eq!(y.get(3), BigUint::from(17u32));
    }

    #[test]
    fn small_binary() {
        let t = counts("bab");
        let got: Vec<u32> = t.counts().iter().map(|c| c.try_into().unwrap()).collect();
        // ε; a b; ab ba bb; bab
        assert_eq!(got, [1, 2, 3, 1]);
        assert_eq!(t.absent(2), BigUint::one());
        assert_eq!(t.get(4), BigUint::zero());
    }

    #[test]
    fn absent_examples() {
        let w = parse_word("aabbccdd", None).unwrap();
        assert_eq!(absent_count(&w, 2), BigUint::from(6u32));
        assert_eq!(absent_count(&w, 1), BigUint::zero());
        assert_eq!(absent_count(&w, 0), BigUint::zero());
    }

    #[test]
    fn empty_word_counts() {
        let ab = Arc::new(Alphabet::from_chars("ab").unwrap());
        let t = count_scatfact_all_lengths(&Word::empty(ab));
        assert_eq!(t.counts(), &[BigUint::one()]);
        assert_eq!(t.absent(1), BigUint::from(2u32));
    }

    #[test]
    fn unary_counts_are_one() {
        let t = counts("aaaaa");
        assert!(t.counts().iter().all(|c| c.is_one()));
    }
}
