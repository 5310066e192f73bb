//! Scattered factors: membership, counting, enumeration, leftmost
//! embeddings and Simon congruence, all driven by the subsequence automaton.

mod automaton;
mod congruence;
mod count;
mod embedding;
mod enumerate;

pub use automaton::{build_automaton, is_scattered_factor, SubsequenceAutomaton};
pub use congruence::simon_congruent;
pub use count::{absent_count, count_scatfact_all_lengths, CountTable};
pub use embedding::{canonical_embedding, transfer_embedding, CanonicalEmbedding};
pub use enumerate::{enumerate_scatfact, scatfact_set, ScatFactIter, DEFAULT_SET_GUARD};
