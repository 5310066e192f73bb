//! The two extremal families of ι-universal words.
//!
//! *Fewest absent factors.* Among words with universality index `ι`, the
//! number of length-`k` scattered factors (`k > ι`) is at most
//! `Σ_{j=0}^{ι} C(k, j)·(σ−1)^{k−j}`. The shortest words reaching it have a
//! unary modus `a^ι`, and every inner as well as the rest is a concatenation
//! of `k − ι` permutations of `Σ ∖ {a}`.
//!
//! *Most absent factors.* `w_min = P·P^R·P·P^R⋯` (`ι` arches) has, for every
//! `k`, no more length-`k` scattered factors than any other word with the same
//! universality index.

use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{format, vec};

use num_bigint::BigUint;
use num_traits::{pow, One, Zero};

use crate::arch::universality_index;
use crate::error::{Error, Result};
use crate::word::{Alphabet, LetterSet, Symbol, Word};

/// `(σ, ι, k)` with `σ ≥ 2` and `1 ≤ ι < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalParams {
    alphabet: Arc<Alphabet>,
    iota: usize,
    k: usize,
}

impl ExtremalParams {
    /// Parameters over the default alphabet `a, b, c, …`.
    pub fn new(sigma: usize, iota: usize, k: usize) -> Result<Self> {
        check_sigma(sigma)?;
        Self::with_alphabet(Arc::new(Alphabet::first(sigma)?), iota, k)
    }

    pub fn with_alphabet(alphabet: Arc<Alphabet>, iota: usize, k: usize) -> Result<Self> {
        check_sigma(alphabet.size())?;
        if iota == 0 {
            return Err(Error::InvalidParams("iota must be at least 1".to_string()));
        }
        if k <= iota {
            return Err(Error::InvalidParams(format!(
                "k must exceed iota (got iota = {iota}, k = {k})"
            )));
        }
        Ok(ExtremalParams { alphabet, iota, k })
    }

    pub fn sigma(&self) -> usize {
        self.alphabet.size()
    }

    pub fn iota(&self) -> usize {
        self.iota
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// Number of permutation slots, `(ι + 1)(k − ι)`.
    pub fn permutation_slots(&self) -> usize {
        (self.iota + 1) * (self.k - self.iota)
    }
}

fn check_sigma(sigma: usize) -> Result<()> {
    if sigma < 2 {
        return Err(Error::InvalidParams(format!(
            "extremal constructions need at least two letters (got {sigma})"
        )));
    }
    Ok(())
}

fn check_symbol(s: Symbol, sigma: usize) -> Result<()> {
    if s as usize >= sigma {
        return Err(Error::SymbolOutOfRange {
            rank: s as usize,
            sigma,
        });
    }
    Ok(())
}

fn is_permutation_of(perm: &[Symbol], letters: LetterSet) -> bool {
    perm.len() == letters.len() && perm.iter().copied().collect::<LetterSet>() == letters
}

fn assemble(params: &ExtremalParams, modus: Symbol, slots: &[&[Symbol]]) -> Word {
    let per_block = params.k - params.iota;
    let mut symbols = Vec::with_capacity(shortest_min_absent_length(params));
    for (b, block) in slots.chunks(per_block).enumerate() {
        if b > 0 {
            symbols.push(modus);
        }
        for perm in block {
            symbols.extend_from_slice(perm);
        }
    }
    Word::from_parts(Arc::clone(&params.alphabet), symbols)
}

/// `B_1 a B_2 a ⋯ B_ι a B_{ι+1}` where each block `B_t` is `k − ι`
/// permutations of `Σ ∖ {a}`.
///
/// `inner_perms` supplies all `(ι + 1)(k − ι)` permutations left to right;
/// by default every slot holds the ascending order.
pub fn min_absent_word(
    params: &ExtremalParams,
    modus_letter: Symbol,
    inner_perms: Option<&[Vec<Symbol>]>,
) -> Result<Word> {
    let sigma = params.sigma();
    check_symbol(modus_letter, sigma)?;
    let mut others = LetterSet::full(sigma);
    others.remove(modus_letter);
    let ascending: Vec<Symbol> = others.iter().collect();
    let slots: Vec<&[Symbol]> = match inner_perms {
        None => vec![ascending.as_slice(); params.permutation_slots()],
        Some(perms) => {
            if perms.len() != params.permutation_slots() {
                return Err(Error::InvalidParams(format!(
                    "expected {} permutations, got {}",
                    params.permutation_slots(),
                    perms.len()
                )));
            }
            if let Some(bad) = perms.iter().position(|p| !is_permutation_of(p, others)) {
                return Err(Error::InvalidParams(format!(
                    "slot {} is not a permutation of the non-modus letters",
                    bad + 1
                )));
            }
            perms.iter().map(Vec::as_slice).collect()
        }
    };
    Ok(assemble(params, modus_letter, &slots))
}

/// `Σ_{j=0}^{ι} C(k, j)·(σ−1)^{k−j}`, evaluated without any precondition on
/// the arguments. For `ι ≥ k` this is `σ^k`.
pub fn scatfact_count_bound(sigma: usize, iota: usize, k: usize) -> BigUint {
    let base = BigUint::from(sigma.saturating_sub(1));
    let mut binom = BigUint::one();
    let mut total = BigUint::zero();
    for j in 0..=iota.min(k) {
        if j > 0 {
            binom = binom * BigUint::from(k - j + 1) / BigUint::from(j);
        }
        total += &binom * pow(base.clone(), k - j);
    }
    total
}

/// Largest `|ScatFact_k(w)|` over all words with `ι(w) = ι`.
pub fn max_scatfact_count(params: &ExtremalParams) -> BigUint {
    scatfact_count_bound(params.sigma(), params.iota, params.k)
}

/// Fewest absent length-`k` scattered factors an ι-universal word can have.
pub fn min_absent_count(params: &ExtremalParams) -> BigUint {
    pow(BigUint::from(params.sigma()), params.k) - max_scatfact_count(params)
}

/// `(ι + 1)(σ − 1)(k − ι) + ι`.
pub fn shortest_min_absent_length(params: &ExtremalParams) -> usize {
    (params.iota + 1) * (params.sigma() - 1) * (params.k - params.iota) + params.iota
}

/// `σ·((σ − 1)!)^{(ι + 1)(k − ι)}`.
pub fn count_shortest_min_absent_words(params: &ExtremalParams) -> BigUint {
    let sigma = params.sigma();
    let fact: BigUint = (1..sigma).map(BigUint::from).product();
    BigUint::from(sigma) * pow(fact, params.permutation_slots())
}

/// All permutations of `letters` in lexicographic order.
fn permutations(letters: &[Symbol]) -> Vec<Vec<Symbol>> {
    let mut current = letters.to_vec();
    current.sort_unstable();
    let mut out = vec![current.clone()];
    // next_permutation
    loop {
        let Some(i) = (1..current.len())
            .rev()
            .find(|&i| current[i - 1] < current[i])
        else {
            return out;
        };
        let j = (i..current.len())
            .rev()
            .find(|&j| current[j] > current[i - 1])
            .unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

/// Stream of every shortest word with the fewest absent factors.
///
/// Modus letters ascend; within a modus letter words come out in
/// lexicographic order of their permutation slots.
#[derive(Clone, Debug)]
pub struct ShortestMinAbsentWords {
    params: ExtremalParams,
    modus: usize,
    perms: Vec<Vec<Symbol>>,
    odometer: Vec<usize>,
    exhausted_modus: bool,
}

impl ShortestMinAbsentWords {
    fn load_modus(&mut self) {
        let mut others = LetterSet::full(self.params.sigma());
        others.remove(self.modus as Symbol);
        self.perms = permutations(&others.iter().collect::<Vec<_>>());
        self.odometer = vec![0; self.params.permutation_slots()];
        self.exhausted_modus = false;
    }
}

impl Iterator for ShortestMinAbsentWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.exhausted_modus {
            self.modus += 1;
            if self.modus >= self.params.sigma() {
                return None;
            }
            self.load_modus();
        }
        let slots: Vec<&[Symbol]> = self
            .odometer
            .iter()
            .map(|&i| self.perms[i].as_slice())
            .collect();
        let word = assemble(&self.params, self.modus as Symbol, &slots);

        let radix = self.perms.len();
        let mut carry = true;
        for digit in self.odometer.iter_mut().rev() {
            *digit += 1;
            if *digit < radix {
                carry = false;
                break;
            }
            *digit = 0;
        }
        self.exhausted_modus = carry;
        Some(word)
    }
}

/// Every shortest word attaining [`max_scatfact_count`], each exactly once.
pub fn enumerate_shortest_min_absent_words(
    params: &ExtremalParams,
    guard: u64,
) -> Result<ShortestMinAbsentWords> {
    let total = count_shortest_min_absent_words(params);
    if total > BigUint::from(guard) {
        return Err(Error::GuardExceeded {
            what: "shortest extremal family",
            required: total.to_string(),
            guard,
            hint: "",
        });
    }
    let mut it = ShortestMinAbsentWords {
        params: params.clone(),
        modus: 0,
        perms: Vec::new(),
        odometer: Vec::new(),
        exhausted_modus: false,
    };
    it.load_modus();
    Ok(it)
}

/// `w_min` over the default alphabet with first arch `a_1⋯a_σ`.
pub fn min_scatfact_word(sigma: usize, iota: usize) -> Result<Word> {
    check_sigma(sigma)?;
    let alphabet = Arc::new(Alphabet::first(sigma)?);
    let perm = Word::from_parts(Arc::clone(&alphabet), alphabet.symbols().collect());
    min_scatfact_word_from(&perm, iota)
}

/// `P·P^R·P⋯` with `ι` arches for a permutation `P` of its alphabet.
pub fn min_scatfact_word_from(first_arch: &Word, iota: usize) -> Result<Word> {
    let sigma = first_arch.sigma();
    check_sigma(sigma)?;
    if iota == 0 {
        return Err(Error::InvalidParams("iota must be at least 1".to_string()));
    }
    if !is_permutation_of(first_arch.symbols(), LetterSet::full(sigma)) {
        return Err(Error::InvalidParams(
            "first arch must be a permutation of the alphabet".to_string(),
        ));
    }
    let forward = first_arch.symbols();
    let mut backward = forward.to_vec();
    backward.reverse();
    let mut symbols = Vec::with_capacity(iota * sigma);
    for i in 0..iota {
        symbols.extend_from_slice(if i % 2 == 0 { forward } else { &backward });
    }
    Ok(first_arch.with_symbols(symbols))
}

/// Deletes letters one at a time, each time the leftmost one whose removal
/// keeps the universality index, until `|w| = ι(w)·σ`.
///
/// Every intermediate word is a scattered factor of `w`, so the result has
/// no scattered factor that `w` lacks.
pub fn truncate_to_min_length(w: &Word) -> Result<Word> {
    let iota = universality_index(w);
    if iota == 0 {
        return Err(Error::InvalidParams(
            "word is not universal (iota = 0)".to_string(),
        ));
    }
    let target = iota * w.sigma();
    let mut symbols = w.symbols().to_vec();
    while symbols.len() > target {
        let i = (0..symbols.len())
            .find(|&i| {
                let mut shorter = symbols.clone();
                shorter.remove(i);
                universality_index(&w.with_symbols(shorter)) == iota
            })
            .expect("a longer-than-minimal word always has a removable letter");
        symbols.remove(i);
    }
    Ok(w.with_symbols(symbols))
}
