//! Exhaustive sweeps over all words up to a length.
//!
//! Counting is done incrementally while the word grows, with fixed-width
//! integers and its own last-occurrence bookkeeping. Nothing here goes
//! through the subsequence automaton.

use std::collections::HashSet;

use scatfact_core::{Error, Result, Symbol};

/// Per-length distinct-subsequence counts of a growing word, truncated at
/// length `max_k`, plus the arch bookkeeping needed to know `ι` of the word.
#[derive(Clone, Debug)]
pub(crate) struct Prefix {
    sigma: usize,
    width: usize,
    counts: Vec<u64>,
    // Row `a` holds the counts of the prefix ending just before the last `a`;
    // all zero when `a` has not occurred.
    before_last: Vec<u64>,
    arches: usize,
    current: u64,
    len: usize,
}

impl Prefix {
    pub(crate) fn new(sigma: usize, max_k: usize) -> Result<Self> {
        if sigma == 0 || sigma > 64 {
            return Err(Error::OutOfRange {
                what: "sweep alphabet size",
                value: sigma,
                min: 1,
                max: 64,
            });
        }
        if (sigma as u64).checked_pow(max_k as u32).is_none() {
            return Err(Error::InvalidParams(format!(
                "counts up to sigma^{max_k} do not fit in 64 bits"
            )));
        }
        let width = max_k + 1;
        let mut counts = vec![0; width];
        counts[0] = 1;
        Ok(Prefix {
            sigma,
            width,
            counts,
            before_last: vec![0; sigma * width],
            arches: 0,
            current: 0,
            len: 0,
        })
    }

    pub(crate) fn push(&self, a: Symbol) -> Prefix {
        let a = a as usize;
        let mut next = self.clone();
        let row = &self.before_last[a * self.width..(a + 1) * self.width];
        for j in 1..self.width {
            next.counts[j] = self.counts[j] + self.counts[j - 1] - row[j - 1];
        }
        next.before_last[a * self.width..(a + 1) * self.width].copy_from_slice(&self.counts);
        next.current |= 1 << a;
        if next.current.count_ones() as usize == self.sigma {
            next.arches += 1;
            next.current = 0;
        }
        next.len += 1;
        next
    }

    pub(crate) fn count(&self, k: usize) -> u64 {
        self.counts.get(k).copied().unwrap_or(0)
    }

    pub(crate) fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Fewest extra letters before the word can have `iota` arches.
    fn letters_short_of(&self, iota: usize) -> usize {
        if self.arches >= iota {
            0
        } else {
            (iota - self.arches) * self.sigma - self.current.count_ones() as usize
        }
    }
}

/// Visits every word of length `≤ max_len` whose universality index is
/// exactly `iota`, in lexicographic pre-order, together with its counts up
/// to `max_k`. Prefixes that already exceed `iota`, or cannot reach it in
/// time, are cut. Returns the number of words visited.
pub(crate) fn for_each_word_with_iota<F>(
    sigma: usize,
    iota: usize,
    max_len: usize,
    max_k: usize,
    mut visit: F,
) -> Result<u64>
where
    F: FnMut(&[Symbol], &Prefix),
{
    fn go<F: FnMut(&[Symbol], &Prefix)>(
        p: &Prefix,
        word: &mut Vec<Symbol>,
        iota: usize,
        max_len: usize,
        visit: &mut F,
        seen: &mut u64,
    ) {
        if p.arches == iota {
            visit(word, p);
            *seen += 1;
        }
        if p.len == max_len {
            return;
        }
        for a in 0..p.sigma as Symbol {
            let child = p.push(a);
            if child.arches > iota || child.len + child.letters_short_of(iota) > max_len {
                continue;
            }
            word.push(a);
            go(&child, word, iota, max_len, visit, seen);
            word.pop();
        }
    }

    let root = Prefix::new(sigma, max_k)?;
    let mut seen = 0;
    if root.letters_short_of(iota) <= max_len {
        go(
            &root,
            &mut Vec::with_capacity(max_len),
            iota,
            max_len,
            &mut visit,
            &mut seen,
        );
    }
    Ok(seen)
}

/// Outcome of [`max_count_search`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxSearch {
    /// Largest `|ScatFact_k(w)|` over words with `ι(w) = ι`, `|w| ≤ max_len`.
    pub max_count: u64,
    /// Shortest length at which `max_count` is reached.
    pub first_length: Option<usize>,
    /// Distinct canonical states expanded.
    pub states: u64,
}

/// Exact maximum of `|ScatFact_k(w)|` over all words with `ι(w) = ι` and
/// `|w| ≤ max_len`, without listing the words one by one.
///
/// Two prefixes whose count rows, last-occurrence rows and arch progress
/// coincide have identical counts and universality after any common
/// extension, so the breadth-first search keeps one representative per such
/// state. Renaming letters maps states to states, so each state is stored with
/// its per-letter records sorted, collapsing alphabet permutations. A state
/// first reached at length `ℓ` is never expanded again at a later length: every
/// word it leads to is then reachable at least as early.
pub fn max_count_search(
    sigma: usize,
    iota: usize,
    k: usize,
    max_len: usize,
    state_guard: u64,
) -> Result<MaxSearch> {
    if !(2..=64).contains(&sigma) {
        return Err(Error::OutOfRange {
            what: "search alphabet size",
            value: sigma,
            min: 2,
            max: 64,
        });
    }
    if (sigma as u64)
        .checked_pow(k as u32)
        .is_none_or(|v| v > u16::MAX as u64)
    {
        return Err(Error::InvalidParams(format!(
            "state search stores counts as u16; sigma^k = {sigma}^{k} is too large"
        )));
    }
    let layout = Layout { sigma, k };
    let mut visited: HashSet<Box<[u16]>> = HashSet::new();
    let root = layout.root();
    visited.insert(root.clone());
    let mut frontier = vec![root];
    let mut best = MaxSearch {
        max_count: 0,
        first_length: None,
        states: 1,
    };
    for len in 1..=max_len {
        let mut next_frontier = Vec::new();
        for state in &frontier {
            for r in 0..sigma {
                let Some(child) = layout.push(state, r, iota, max_len - len) else {
                    continue;
                };
                if visited.contains(&child[..]) {
                    continue;
                }
                if layout.arches(&child) == iota {
                    let c = layout.count(&child) as u64;
                    if c > best.max_count || best.first_length.is_none() {
                        best.max_count = c;
                        best.first_length = Some(len);
                    }
                }
                visited.insert(child.clone());
                next_frontier.push(child);
            }
        }
        best.states = visited.len() as u64;
        if best.states > state_guard {
            return Err(Error::GuardExceeded {
                what: "state search",
                required: best.states.to_string(),
                guard: state_guard,
                hint: "",
            });
        }
        frontier = next_frontier;
        if frontier.is_empty() {
            break;
        }
    }
    Ok(best)
}

/// Flat encoding of a search state:
/// `[arches, D[1..=k], (in_current_arch, L[0..k]) × σ]` with the per-letter
/// records sorted.
struct Layout {
    sigma: usize,
    k: usize,
}

impl Layout {
    fn record(&self) -> usize {
        self.k + 1
    }

    fn header(&self) -> usize {
        1 + self.k
    }

    fn root(&self) -> Box<[u16]> {
        vec![0u16; self.header() + self.sigma * self.record()].into_boxed_slice()
    }

    fn arches(&self, s: &[u16]) -> usize {
        s[0] as usize
    }

    fn count(&self, s: &[u16]) -> u16 {
        s[self.k]
    }

    fn counts_at(&self, s: &[u16], j: usize) -> u16 {
        if j == 0 {
            1
        } else {
            s[j]
        }
    }

    fn push(
        &self,
        s: &[u16],
        letter: usize,
        iota: usize,
        letters_left: usize,
    ) -> Option<Box<[u16]>> {
        let (h, rw) = (self.header(), self.record());
        let rec = &s[h + letter * rw..h + (letter + 1) * rw];
        let mut out = s.to_vec();
        for j in 1..=self.k {
            let v = self.counts_at(s, j) as u32 + self.counts_at(s, j - 1) as u32 - rec[j] as u32;
            out[j] = v as u16;
        }
        let dst = h + letter * rw;
        out[dst] = 1;
        for j in 0..self.k {
            out[dst + 1 + j] = self.counts_at(s, j);
        }
        let in_arch = (0..self.sigma).filter(|&r| out[h + r * rw] == 1).count();
        let mut arches = s[0] as usize;
        let mut in_arch_now = in_arch;
        if in_arch == self.sigma {
            arches += 1;
            in_arch_now = 0;
            for r in 0..self.sigma {
                out[h + r * rw] = 0;
            }
        }
        if arches > iota {
            return None;
        }
        let short = if arches >= iota {
            0
        } else {
            (iota - arches) * self.sigma - in_arch_now
        };
        if short > letters_left {
            return None;
        }
        out[0] = arches as u16;

        let mut records: Vec<&[u16]> = out[h..].chunks_exact(rw).collect();
        records.sort_unstable();
        let mut canon = Vec::with_capacity(out.len());
        canon.extend_from_slice(&out[..h]);
        for r in records {
            canon.extend_from_slice(r);
        }
        Some(canon.into_boxed_slice())
    }
}
