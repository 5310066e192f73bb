//! Alphabets, words, and the elementary word functions everything else is
//! built from.
//!
//! Symbols are stored as their rank in the alphabet (`0..σ`), so the symbol
//! with rank `r` is the `(r + 1)`-th letter of the ordered alphabet. Positions
//! in public APIs are 1-based: `w.get(1)` is the first letter.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// Rank of a symbol within its alphabet.
pub type Symbol = u8;

/// Largest supported alphabet.
pub const MAX_SIGMA: usize = 256;

const NO_RANK: u8 = u8::MAX;
const DEFAULT_SYMBOLS: &str = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

/// An ordered alphabet of distinct printable characters.
#[derive(Clone)]
pub struct Alphabet {
    chars: Vec<char>,
    // Rank lookup for ASCII; NO_RANK marks absence. Symbol 255 of a full
    // 256-letter alphabet is resolved by the slow path.
    ascii: [u8; 128],
}

impl Alphabet {
    /// Builds an alphabet whose order is the iteration order of `symbols`.
    pub fn new<I: IntoIterator<Item = char>>(symbols: I) -> Result<Self> {
        let chars: Vec<char> = symbols.into_iter().collect();
        if chars.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if chars.len() > MAX_SIGMA {
            return Err(Error::AlphabetTooLarge { max: MAX_SIGMA });
        }
        let mut ascii = [NO_RANK; 128];
        for (rank, &c) in chars.iter().enumerate() {
            if chars[..rank].contains(&c) {
                return Err(Error::DuplicateSymbol { symbol: c });
            }
            if c.is_ascii() && rank < NO_RANK as usize {
                ascii[c as usize] = rank as u8;
            }
        }
        Ok(Alphabet { chars, ascii })
    }

    /// Parses an alphabet given as a string of distinct characters, e.g. `"abcd"`.
    pub fn from_chars(symbols: &str) -> Result<Self> {
        Self::new(symbols.chars())
    }

    /// The first `sigma` letters of `a..z`, `A..Z`, `0..9`.
    pub fn first(sigma: usize) -> Result<Self> {
        let max = DEFAULT_SYMBOLS.len();
        if sigma == 0 || sigma > max {
            return Err(Error::OutOfRange {
                what: "default alphabet size",
                value: sigma,
                min: 1,
                max,
            });
        }
        Self::new(DEFAULT_SYMBOLS.chars().take(sigma))
    }

    /// The distinct characters of `text` in ascending character order.
    pub fn inferred(text: &str) -> Result<Self> {
        let mut chars: Vec<char> = text.chars().collect();
        chars.sort_unstable();
        chars.dedup();
        Self::new(chars)
    }

    pub fn size(&self) -> usize {
        self.chars.len()
    }

    pub fn chars(&self) -> &[char] {
        &self.chars
    }

    /// Character of the symbol with the given rank.
    ///
    /// Panics if the rank is out of range.
    pub fn char_of(&self, symbol: Symbol) -> char {
        self.chars[symbol as usize]
    }

    pub fn rank_of(&self, c: char) -> Option<Symbol> {
        if c.is_ascii() {
            let r = self.ascii[c as usize];
            if r != NO_RANK {
                return Some(r);
            }
            if self.chars.len() < MAX_SIGMA {
                return None;
            }
        }
        self.chars.iter().position(|&x| x == c).map(|r| r as Symbol)
    }

    /// All symbols in ascending order.
    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + Clone {
        (0..self.chars.len()).map(|r| r as Symbol)
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.chars == other.chars
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet(\"")?;
        for c in &self.chars {
            write!(f, "{c}")?;
        }
        write!(f, "\")")
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.chars {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A set of symbols, stored as a 256-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LetterSet([u64; 4]);

impl LetterSet {
    pub const fn new() -> Self {
        LetterSet([0; 4])
    }

    /// The set `{0, .., sigma - 1}`.
    pub fn full(sigma: usize) -> Self {
        let mut s = Self::new();
        for a in 0..sigma {
            s.insert(a as Symbol);
        }
        s
    }

    /// Inserts `a` and reports whether it was new.
    #[inline]
    pub fn insert(&mut self, a: Symbol) -> bool {
        let (word, bit) = (a as usize >> 6, 1u64 << (a & 63));
        let fresh = self.0[word] & bit == 0;
        self.0[word] |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, a: Symbol) {
        self.0[a as usize >> 6] &= !(1u64 << (a & 63));
    }

    #[inline]
    pub fn contains(&self, a: Symbol) -> bool {
        self.0[a as usize >> 6] & (1u64 << (a & 63)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn clear(&mut self) {
        self.0 = [0; 4];
    }

    pub fn is_subset(&self, other: &LetterSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..MAX_SIGMA)
            .map(|a| a as Symbol)
            .filter(move |&a| self.contains(a))
    }
}

impl FromIterator<Symbol> for LetterSet {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        let mut s = LetterSet::new();
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl fmt::Debug for LetterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite word over an [`Alphabet`].
#[derive(Clone)]
pub struct Word {
    alphabet: Arc<Alphabet>,
    symbols: Vec<Symbol>,
}

impl Word {
    pub fn new(alphabet: Arc<Alphabet>, symbols: Vec<Symbol>) -> Result<Self> {
        let sigma = alphabet.size();
        if let Some(&bad) = symbols.iter().find(|&&a| a as usize >= sigma) {
            return Err(Error::SymbolOutOfRange {
                rank: bad as usize,
                sigma,
            });
        }
        Ok(Word { alphabet, symbols })
    }

    /// Caller guarantees every symbol is below `alphabet.size()`.
    pub(crate) fn from_parts(alphabet: Arc<Alphabet>, symbols: Vec<Symbol>) -> Self {
        debug_assert!(symbols.iter().all(|&a| (a as usize) < alphabet.size()));
        Word { alphabet, symbols }
    }

    pub fn empty(alphabet: Arc<Alphabet>) -> Self {
        Word {
            alphabet,
            symbols: Vec::new(),
        }
    }

    /// Parses `text` one character per symbol. Without an alphabet, the
    /// alphabet becomes the distinct characters of `text` in ascending order.
    pub fn parse(text: &str, alphabet: Option<&Arc<Alphabet>>) -> Result<Self> {
        let alphabet = match alphabet {
            Some(a) => Arc::clone(a),
            None if text.is_empty() => {
                return Err(Error::InvalidParams(String::from(
                    "cannot infer an alphabet from the empty word",
                )))
            }
            None => Arc::new(Alphabet::inferred(text)?),
        };
        let mut symbols = Vec::with_capacity(text.len());
        for (i, c) in text.chars().enumerate() {
            match alphabet.rank_of(c) {
                Some(r) => symbols.push(r),
                None => {
                    return Err(Error::UnknownCharacter {
                        character: c,
                        position: i + 1,
                    })
                }
            }
        }
        Ok(Word { alphabet, symbols })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn sigma(&self) -> usize {
        self.alphabet.size()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    /// The letter at 1-based position `pos`.
    pub fn get(&self, pos: usize) -> Option<Symbol> {
        pos.checked_sub(1)
            .and_then(|i| self.symbols.get(i).copied())
    }

    /// The factor `w[i..j]` (1-based, inclusive); empty when `i > j`.
    pub fn factor(&self, i: usize, j: usize) -> Result<Self> {
        if i > j {
            return Ok(Word::empty(Arc::clone(&self.alphabet)));
        }
        if i == 0 || j > self.len() {
            return Err(Error::OutOfRange {
                what: "factor bound",
                value: if i == 0 { i } else { j },
                min: 1,
                max: self.len(),
            });
        }
        Ok(self.with_symbols(self.symbols[i - 1..j].to_vec()))
    }

    pub fn reverse(&self) -> Self {
        let mut s = self.symbols.clone();
        s.reverse();
        self.with_symbols(s)
    }

    pub fn letters(&self) -> LetterSet {
        self.symbols.iter().copied().collect()
    }

    /// `|w|_a`, the number of occurrences of `a`.
    pub fn count(&self, a: Symbol) -> usize {
        self.symbols.iter().filter(|&&x| x == a).count()
    }

    pub fn concat(&self, other: &Word) -> Result<Self> {
        self.check_same_alphabet(other)?;
        let mut s = self.symbols.clone();
        s.extend_from_slice(&other.symbols);
        Ok(self.with_symbols(s))
    }

    /// A word over the same alphabet with the given symbols.
    pub(crate) fn with_symbols(&self, symbols: Vec<Symbol>) -> Self {
        Word::from_parts(Arc::clone(&self.alphabet), symbols)
    }

    pub fn same_alphabet(&self, other: &Word) -> bool {
        Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet
    }

    pub(crate) fn check_same_alphabet(&self, other: &Word) -> Result<()> {
        if self.same_alphabet(other) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols && self.same_alphabet(other)
    }
}

impl Eq for Word {}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.symbols
            .cmp(&other.symbols)
            .then_with(|| self.alphabet.chars.cmp(&other.alphabet.chars))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.symbols.hash(state);
        self.alphabet.chars.hash(state);
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &a in &self.symbols {
            write!(f, "{}", self.alphabet.char_of(a))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}

/// Parses a word, inferring the alphabet from its letters when none is given.
pub fn parse_word(text: &str, alphabet: Option<&Arc<Alphabet>>) -> Result<Word> {
    Word::parse(text, alphabet)
}

pub fn letters_of(w: &Word) -> LetterSet {
    w.letters()
}

pub fn reverse(w: &Word) -> Word {
    w.reverse()
}

/// `w_Σ`: every symbol once, in ascending order.
pub fn canonical_word(alphabet: &Arc<Alphabet>) -> Word {
    Word::from_parts(Arc::clone(alphabet), alphabet.symbols().collect())
}
