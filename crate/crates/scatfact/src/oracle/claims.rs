use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use scatfact_core::arch::{arch_factorize, universality_index, NextAlphTable};
use scatfact_core::extremal::{
    count_shortest_min_absent_words, enumerate_shortest_min_absent_words, max_scatfact_count,
    min_absent_word, min_scatfact_word, shortest_min_absent_length, ExtremalParams,
};
use scatfact_core::scatfact::{canonical_embedding, count_scatfact_all_lengths};
use scatfact_core::{Alphabet, BigUint, Error, Result, Symbol, Word};

use super::report::VerificationReport;
use super::sweep::{for_each_word_with_iota, max_count_search, Prefix};
use super::{
    brute_scatfact_set, naive_is_subsequence, DEFAULT_CANDIDATE_GUARD, DEFAULT_SUBSET_GUARD,
};

/// Target spaces up to this size are always swept exhaustively.
const EXHAUSTIVE_TARGETS: u64 = 100_000;

const LENGTH_GAP_NOTE: &str =
    "words longer than max_len are not covered; the sweep is exhaustive only up to max_len";

/// Size limits for the sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Candidate words enumerated one by one.
    pub candidates: u64,
    /// Index subsets per brute-force scattered-factor set.
    pub subsets: u64,
    /// Canonical states in a deduplicated search.
    pub states: u64,
    /// Words produced by the extremal family generator.
    pub family: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            candidates: DEFAULT_CANDIDATE_GUARD,
            subsets: DEFAULT_SUBSET_GUARD,
            states: 50_000_000,
            family: 1_000_000,
        }
    }
}

impl Guards {
    /// Every limit set to `n`.
    pub fn uniform(n: u64) -> Self {
        Guards {
            candidates: n,
            subsets: n,
            states: n,
            family: n,
        }
    }
}

fn words_up_to(sigma: usize, max_len: usize) -> u64 {
    (0..=max_len)
        .try_fold(0u64, |acc, l| {
            (sigma as u64)
                .checked_pow(l as u32)
                .and_then(|p| acc.checked_add(p))
        })
        .unwrap_or(u64::MAX)
}

fn big_to_u64(x: &BigUint, what: &str) -> Result<u64> {
    u64::try_from(x).map_err(|_| Error::InvalidParams(format!("{what} does not fit in 64 bits")))
}

fn render(alphabet: &Alphabet, symbols: &[Symbol]) -> String {
    symbols.iter().map(|&a| alphabet.char_of(a)).collect()
}

/// Checks the fewest-absent-factors claims over all words with `ι(w) = ι`
/// and `|w| ≤ max_len`:
///
/// (a) no word has more than `max_scatfact_count` length-`k` scattered factors;
/// (b) at the shortest length the words reaching the bound are exactly the
///     generated family;
/// (c) no shorter word reaches it.
///
/// When the candidate space exceeds the guard, (a) and (c) are decided by
/// [`max_count_search`] and (b) falls back to checking that the bound is
/// reached; the report notes which route ran.
pub fn verify_min_absent_extremality(
    params: &ExtremalParams,
    max_len: usize,
    guards: Guards,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let (sigma, iota, k) = (params.sigma(), params.iota(), params.k());
    let mut report = VerificationReport::new("min-absent-extremality");
    report.param("sigma", sigma);
    report.param("iota", iota);
    report.param("k", k);
    report.param("max_len", max_len);

    let bound = big_to_u64(&max_scatfact_count(params), "bound")?;
    let shortest = shortest_min_absent_length(params);
    report.observe("bound", bound);
    report.observe("shortest_length", shortest);

    let constructed = min_absent_word(params, 0, None)?;
    let constructed_count = count_scatfact_all_lengths(&constructed).get(k);
    report.observe("constructed_word", &constructed);
    report.observe("constructed_count", &constructed_count);
    if constructed_count != BigUint::from(bound) {
        report.witness(
            &constructed,
            format!("constructed word has {constructed_count} factors, bound is {bound}"),
        );
    }

    let candidates = words_up_to(sigma, max_len);
    if candidates <= guards.candidates {
        report.observe("method", "explicit");
        let alphabet = Arc::clone(params.alphabet());
        let mut max_seen = 0;
        let mut attaining = BTreeSet::new();
        let mut bad = Vec::new();
        report.instances_checked = for_each_word_with_iota(sigma, iota, max_len, k, |w, p| {
            let c = p.count(k);
            max_seen = max_seen.max(c);
            if c > bound {
                bad.push((
                    w.to_vec(),
                    format!("{c} factors of length {k}, above the bound {bound}"),
                ));
            } else if c == bound && w.len() < shortest {
                bad.push((
                    w.to_vec(),
                    format!("reaches the bound at length {} < {shortest}", w.len()),
                ));
            } else if c == bound && w.len() == shortest {
                attaining.insert(w.to_vec());
            }
        })?;
        for (w, detail) in bad {
            report.witness(render(&alphabet, &w), detail);
        }
        report.observe("max_count", max_seen);
        if shortest <= max_len {
            let family: BTreeSet<Vec<Symbol>> =
                enumerate_shortest_min_absent_words(params, guards.family)?
                    .map(Word::into_symbols)
                    .collect();
            report.observe("attaining_at_shortest_length", attaining.len());
            report.observe("family_size", count_shortest_min_absent_words(params));
            for w in family.difference(&attaining) {
                report.witness(
                    render(&alphabet, w),
                    "generated word does not reach the bound",
                );
            }
            for w in attaining.difference(&family) {
                report.witness(
                    render(&alphabet, w),
                    "reaches the bound but is not in the generated family",
                );
            }
            if max_seen != bound {
                report.witness(
                    "",
                    format!("maximum {max_seen} differs from the bound {bound}"),
                );
            }
        } else {
            report.notes.push(format!(
                "max_len {max_len} is below the shortest length {shortest}; family equality not checked"
            ));
        }
    } else {
        report.observe("method", "state-search");
        let search = max_count_search(sigma, iota, k, max_len, guards.states)?;
        report.instances_checked = search.states;
        report.observe("max_count", search.max_count);
        report.observe("states", search.states);
        if let Some(len) = search.first_length {
            report.observe("first_attaining_length", len);
        }
        if search.max_count > bound {
            report.witness(
                "",
                format!(
                    "some word has {} factors, above the bound {bound}",
                    search.max_count
                ),
            );
        }
        if search.max_count == bound && search.first_length.is_some_and(|l| l < shortest) {
            report.witness(
                "",
                format!(
                    "bound first reached at length {:?} < {shortest}",
                    search.first_length
                ),
            );
        }
        if shortest <= max_len && search.max_count < bound {
            report.witness(
                "",
                format!(
                    "maximum {} never reaches the bound {bound}",
                    search.max_count
                ),
            );
        }
        report.notes.push(
            "candidate space above the guard: the attaining set at the shortest length is not listed".to_string(),
        );
    }
    report.notes.push(LENGTH_GAP_NOTE.to_string());
    Ok(report.finish(start.elapsed()))
}

/// Checks that `w_min` has, for every `k ≤ |w_min|`, no more length-`k`
/// scattered factors than any word with the same universality index and
/// length `≤ max_len`.
pub fn verify_max_absent_extremality(
    sigma: usize,
    iota: usize,
    max_len: usize,
    guards: Guards,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("max-absent-extremality");
    report.param("sigma", sigma);
    report.param("iota", iota);
    report.param("max_len", max_len);

    let w_min = min_scatfact_word(sigma, iota)?;
    let n = w_min.len();
    report.observe("w_min", &w_min);
    let candidates = words_up_to(sigma, max_len);
    if candidates > guards.candidates {
        return Err(Error::GuardExceeded {
            what: "word enumeration",
            required: candidates.to_string(),
            guard: guards.candidates,
            hint: "",
        });
    }

    let mut reference = Prefix::new(sigma, n)?;
    for &a in w_min.symbols() {
        reference = reference.push(a);
    }
    let baseline = reference.counts().to_vec();
    report.observe(
        "w_min_counts",
        baseline
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(" "),
    );

    let alphabet = Arc::clone(w_min.alphabet());
    let mut bad = Vec::new();
    report.instances_checked = for_each_word_with_iota(sigma, iota, max_len, n, |w, p| {
        for (kk, &base) in baseline.iter().enumerate().skip(1) {
            if base > p.count(kk) {
                bad.push((
                    w.to_vec(),
                    format!("k={kk}: w_min has {base}, this word {}", p.count(kk)),
                ));
            }
        }
    })?;
    for (w, detail) in bad {
        report.witness(render(&alphabet, &w), detail);
    }
    report.notes.push(LENGTH_GAP_NOTE.to_string());
    Ok(report.finish(start.elapsed()))
}

fn permutations(sigma: usize) -> Vec<Vec<Symbol>> {
    fn go(rest: &mut Vec<Symbol>, cur: &mut Vec<Symbol>, out: &mut Vec<Vec<Symbol>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let a = rest.remove(i);
            cur.push(a);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, a);
        }
    }
    let mut out = Vec::new();
    go(
        &mut (0..sigma as Symbol).collect(),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Checks that replaying leftmost embeddings of `w_min` in any
/// `ι`-universal word of length `ι·σ` is total and injective on
/// `ScatFact_k(w_min)`.
///
/// Such targets are exactly the concatenations of `ι` permutations. Target
/// spaces of at most 10^5 words are swept completely; larger ones are sampled
/// (`max_targets` words from a ChaCha8 stream seeded with `seed`). With
/// `k = None` every `k ≤ ι·σ` is checked.
pub fn verify_injection(
    sigma: usize,
    iota: usize,
    k: Option<usize>,
    max_targets: u64,
    seed: u64,
    guards: Guards,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("injection");
    report.param("sigma", sigma);
    report.param("iota", iota);
    if let Some(k) = k {
        report.param("k", k);
    }
    report.param("max_targets", max_targets.to_string());
    report.param("seed", seed.to_string());

    let w_min = min_scatfact_word(sigma, iota)?;
    let n = w_min.len();
    let alphabet = Arc::clone(w_min.alphabet());
    let perms = permutations(sigma);
    let space = (perms.len() as u64)
        .checked_pow(iota as u32)
        .unwrap_or(u64::MAX);
    report.observe("target_space", space);

    let targets: Vec<Word> = if space <= EXHAUSTIVE_TARGETS {
        report.observe("mode", "exhaustive");
        let mut out = Vec::new();
        let mut digits = vec![0usize; iota];
        loop {
            let symbols = digits
                .iter()
                .flat_map(|&d| perms[d].iter().copied())
                .collect();
            out.push(Word::new(Arc::clone(&alphabet), symbols)?);
            let Some(pos) = (0..iota).rev().find(|&i| digits[i] + 1 < perms.len()) else {
                break;
            };
            digits[pos] += 1;
            digits[pos + 1..].iter_mut().for_each(|d| *d = 0);
        }
        out
    } else {
        report.observe("mode", "sampled");
        report.notes.push(format!(
            "sampled {max_targets} of {space} targets; not a proof"
        ));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut base: Vec<Symbol> = (0..sigma as Symbol).collect();
        (0..max_targets)
            .map(|_| {
                let mut symbols = Vec::with_capacity(n);
                for _ in 0..iota {
                    base.shuffle(&mut rng);
                    symbols.extend_from_slice(&base);
                }
                Word::new(Arc::clone(&alphabet), symbols)
            })
            .collect::<Result<_>>()?
    };
    report.observe("targets", targets.len());
    let tables: Vec<NextAlphTable> = targets.iter().map(NextAlphTable::new).collect();

    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (1..=n).collect(),
    };
    for &kk in &ks {
        let sources = brute_scatfact_set(&w_min, kk, guards.subsets)?;
        let embeddings = sources
            .iter()
            .map(|u| {
                canonical_embedding(&w_min, u).map(|e| (u, e.expect("u is a factor of w_min")))
            })
            .collect::<Result<Vec<_>>>()?;
        for (target, table) in targets.iter().zip(&tables) {
            debug_assert_eq!(universality_index(target), iota);
            let mut images = BTreeSet::new();
            for (u, e) in &embeddings {
                match e.transfer_with_table(target, table)? {
                    None => report.witness(target, format!("k={kk}: {u} has no image")),
                    Some(v) => {
                        if !naive_is_subsequence(target.symbols(), v.symbols()) {
                            report.witness(
                                target,
                                format!("k={kk}: image {v} of {u} is not a scattered factor"),
                            );
                        }
                        if !images.insert(v.clone()) {
                            report.witness(target, format!("k={kk}: image {v} is hit twice"));
                        }
                    }
                }
            }
            report.instances_checked += 1;
        }
    }
    Ok(report.finish(start.elapsed()))
}

/// Checks that every word with `ι(w) = ι` and `|w| ≤ max_len` has a letter
/// `a` outside its rest such that no `v ∈ Σ^k` containing `m(w)·a` is a
/// scattered factor of `w`.
pub fn verify_always_absent(
    params: &ExtremalParams,
    max_len: usize,
    guards: Guards,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let (sigma, iota, k) = (params.sigma(), params.iota(), params.k());
    let mut report = VerificationReport::new("always-absent");
    report.param("sigma", sigma);
    report.param("iota", iota);
    report.param("k", k);
    report.param("max_len", max_len);

    let candidates = words_up_to(sigma, max_len);
    if candidates > guards.candidates {
        return Err(Error::GuardExceeded {
            what: "word enumeration",
            required: candidates.to_string(),
            guard: guards.candidates,
            hint: "",
        });
    }
    let power = (sigma as u64).checked_pow(k as u32).unwrap_or(u64::MAX);
    if power > guards.subsets {
        return Err(Error::GuardExceeded {
            what: "length-k words",
            required: power.to_string(),
            guard: guards.subsets,
            hint: "",
        });
    }
    let alphabet = Arc::clone(params.alphabet());
    let everything: Vec<Vec<Symbol>> = super::enumerate_words(sigma, k, None, u64::MAX)?
        .filter(|w| w.len() == k)
        .map(Word::into_symbols)
        .collect();

    let mut words = Vec::new();
    report.instances_checked = for_each_word_with_iota(sigma, iota, max_len, 0, |w, _| {
        words.push(w.to_vec());
    })?;
    for symbols in words {
        let w = Word::new(Arc::clone(&alphabet), symbols)?;
        let present: BTreeSet<Vec<Symbol>> = brute_scatfact_set(&w, k, guards.subsets)?
            .into_iter()
            .map(Word::into_symbols)
            .collect();
        let f = arch_factorize(&w);
        let rest_letters = f.rest().letters();
        let modus = f.modus().into_symbols();
        let holds = (0..sigma as Symbol)
            .filter(|&a| !rest_letters.contains(a))
            .any(|a| {
                let mut pattern = modus.clone();
                pattern.push(a);
                everything
                    .iter()
                    .filter(|v| naive_is_subsequence(v, &pattern))
                    .all(|v| !present.contains(v))
            });
        if !holds {
            report.witness(&w, "no letter outside the rest forces absence");
        }
    }
    report.notes.push(LENGTH_GAP_NOTE.to_string());
    Ok(report.finish(start.elapsed()))
}
