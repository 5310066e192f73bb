use alloc::borrow::Cow;
use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::pow;

use super::automaton::SubsequenceAutomaton;
use crate::error::{Error, Result};
use crate::word::{Symbol, Word};

/// Default cap on `σ^k` for [`scatfact_set`].
pub const DEFAULT_SET_GUARD: u64 = 1_000_000;

#[derive(Clone, Copy, Debug)]
struct Frame {
    state: usize,
    next_symbol: usize,
}

/// Depth-first walk over the automaton yielding `ScatFact_k(w)` in
/// lexicographic order.
///
/// A transition into state `j` at depth `d` is taken only when
/// `|w| − j ≥ k − d − 1`, so every branch entered reaches an output. The
/// walk therefore spends at most `2·k·σ` symbol probes between consecutive
/// outputs; [`ScatFactIter::steps`] and [`ScatFactIter::max_delay`] expose
/// the probe counts.
#[derive(Clone, Debug)]
pub struct ScatFactIter<'a> {
    automaton: Cow<'a, SubsequenceAutomaton>,
    k: usize,
    stack: Vec<Frame>,
    prefix: Vec<Symbol>,
    pop_pending: bool,
    done: bool,
    steps: u64,
    steps_at_last_output: u64,
    max_delay: u64,
}

impl<'a> ScatFactIter<'a> {
    fn new(automaton: Cow<'a, SubsequenceAutomaton>, k: usize) -> Self {
        let done = k > automaton.word().len();
        let stack = if done {
            Vec::new()
        } else {
            alloc::vec![Frame {
                state: 0,
                next_symbol: 0,
            }]
        };
        ScatFactIter {
            automaton,
            k,
            stack,
            prefix: Vec::with_capacity(k),
            pop_pending: false,
            done,
            steps: 0,
            steps_at_last_output: 0,
            max_delay: 0,
        }
    }

    /// Symbol probes performed so far.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    /// Largest number of probes spent between two consecutive outputs
    /// (counting the start and the final exhaustion as boundaries).
    pub fn max_delay(&self) -> u64 {
        self.max_delay
    }

    fn mark_boundary(&mut self) {
        let delay = self.steps - self.steps_at_last_output;
        self.max_delay = self.max_delay.max(delay);
        self.steps_at_last_output = self.steps;
    }

    fn emit(&mut self) -> Word {
        self.mark_boundary();
        self.automaton.word().with_symbols(self.prefix.clone())
    }
}

impl Iterator for ScatFactIter<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        if self.k == 0 {
            self.done = true;
            return Some(self.emit());
        }
        if self.pop_pending {
            self.stack.pop();
            self.prefix.pop();
            self.pop_pending = false;
        }
        let n = self.automaton.word().len();
        let sigma = self.automaton.sigma();
        loop {
            let depth = self.prefix.len();
            let Some(top) = self.stack.last_mut() else {
                self.done = true;
                self.mark_boundary();
                return None;
            };
            let need = self.k - depth - 1;
            let mut descended = None;
            while top.next_symbol < sigma {
                let a = top.next_symbol as Symbol;
                top.next_symbol += 1;
                self.steps += 1;
                if let Some(j) = self.automaton.next(top.state, a) {
                    if n - j >= need {
                        descended = Some((j, a));
                        break;
                    }
                }
            }
            match descended {
                Some((j, a)) => {
                    self.stack.push(Frame {
                        state: j,
                        next_symbol: 0,
                    });
                    self.prefix.push(a);
                    if self.prefix.len() == self.k {
                        self.pop_pending = true;
                        return Some(self.emit());
                    }
                }
                None => {
                    self.stack.pop();
                    self.prefix.pop();
                }
            }
        }
    }
}

impl SubsequenceAutomaton {
    /// Lexicographic stream of the length-`k` scattered factors.
    pub fn scattered_factors(&self, k: usize) -> ScatFactIter<'_> {
        ScatFactIter::new(Cow::Borrowed(self), k)
    }
}

/// Streams `ScatFact_k(w)` in lexicographic order; empty when `k > |w|`.
pub fn enumerate_scatfact(w: &Word, k: usize) -> ScatFactIter<'static> {
    ScatFactIter::new(Cow::Owned(SubsequenceAutomaton::new(w)), k)
}

/// Materializes `ScatFact_k(w)`, refusing when `σ^k` exceeds `guard`.
pub fn scatfact_set(w: &Word, k: usize, guard: u64) -> Result<BTreeSet<Word>> {
    let space = pow(BigUint::from(w.sigma()), k);
    if space > BigUint::from(guard) {
        return Err(Error::GuardExceeded {
            what: "scattered factor set",
            required: space.to_string(),
            guard,
            hint: "; stream it with enumerate_scatfact instead",
        });
    }
    Ok(enumerate_scatfact(w, k).collect())
}
