//! Scattered factors (subsequences) of words.
//!
//! * [`word`]: alphabets, words and elementary word functions.
//! * [`arch`]: arch factorization, universality index, and the
//!   distinct-letter jump `next_alph_pos`.
//! * [`scatfact`]: the subsequence automaton, exact per-length counting,
//!   lexicographic enumeration, leftmost embeddings and Simon congruence.
//! * [`extremal`]: constructions and closed forms for the ι-universal words
//!   with the fewest and the most absent scattered factors.
//!
//! The crate is `no_std` and needs only `alloc`.
//!
//! ```
//! use scatfact_core::{arch::arch_factorize, scatfact::count_scatfact_all_lengths, word::parse_word};
//!
//! let w = parse_word("aabbbaa", None).unwrap();
//! assert_eq!(arch_factorize(&w).to_string(), "(aab)(bba)a");
//! assert_eq!(count_scatfact_all_lengths(&w).get(3), 7u32.into());
//! ```

#![no_std]

extern crate alloc;

pub mod arch;
pub mod error;
pub mod extremal;
pub mod scatfact;
pub mod word;

pub use error::{Error, Result};
pub use num_bigint::BigUint;
pub use word::{Alphabet, LetterSet, Symbol, Word};
