//! The `scatfact` command-line front end.
//!
//! Exit codes: 0 for success, PASS or `true`; 1 for FAIL or `false`; 2 for
//! usage, parse and guard errors.

use std::io::{self, Write};
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use scatfact_core::arch::arch_factorize;
use scatfact_core::extremal::{
    count_shortest_min_absent_words, enumerate_shortest_min_absent_words, max_scatfact_count,
    min_absent_count, min_absent_word, min_scatfact_word_from, shortest_min_absent_length,
    ExtremalParams,
};
use scatfact_core::scatfact::{
    count_scatfact_all_lengths, enumerate_scatfact, scatfact_set, simon_congruent,
    DEFAULT_SET_GUARD,
};
use scatfact_core::word::canonical_word;
use scatfact_core::{Alphabet, Error, Word};
use serde_json::{json, Value};

use crate::formats::{decimal_strings, read_word_lines, CountTableJson, FormatError};
use crate::oracle::{
    verify_always_absent, verify_injection, verify_max_absent_extremality,
    verify_min_absent_extremality, Guards, VerificationReport,
};

/// Seed used by sampled sweeps unless `--seed` is given.
pub const DEFAULT_SEED: u64 = 0x5CA7_FAC7;

#[derive(Debug, Parser)]
#[command(
    name = "scatfact",
    version,
    about = "Scattered factors of words: analysis, counting, extremal words"
)]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Upper limit on sets, families and sweep sizes.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub guard: Option<u64>,
    /// Seed for sampled sweeps.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Alphabet in rank order, e.g. `abc`. Inferred from the input otherwise.
    #[arg(long, global = true)]
    pub alphabet: Option<String>,
    /// Read input words from a file, one per line.
    #[arg(long, global = true)]
    pub file: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Arch factorization, universality index and all counts.
    Analyze { words: Vec<String> },
    /// Number of distinct scattered factors of every length.
    Count { words: Vec<String> },
    /// The set of length-k scattered factors.
    Set {
        words: Vec<String>,
        #[arg(long)]
        k: usize,
    },
    /// Stream length-k scattered factors in lexicographic order.
    Enumerate {
        words: Vec<String>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Whether two words have the same scattered factors up to length k.
    Congruent {
        words: Vec<String>,
        #[arg(long)]
        k: usize,
    },
    /// Build extremal words.
    Construct {
        #[command(subcommand)]
        kind: Construct,
    },
    /// Closed-form values for iota-universal words.
    Bounds { sigma: usize, iota: usize, k: usize },
    /// Exhaustive check of an extremality claim.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// A shortest word with the fewest absent length-k scattered factors.
    MinAbsent {
        #[arg(long)]
        sigma: Option<usize>,
        #[arg(long)]
        iota: usize,
        #[arg(long)]
        k: usize,
        /// The repeated modus letter (defaults to the first letter).
        #[arg(long)]
        modus_letter: Option<char>,
        /// Stream the whole shortest family.
        #[arg(long)]
        all: bool,
    },
    /// The iota-universal word of length iota*sigma with the most absent factors.
    WMin {
        #[arg(long)]
        sigma: Option<usize>,
        #[arg(long)]
        iota: usize,
        /// First arch as a permutation of the alphabet.
        #[arg(long)]
        first_arch: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    /// Fewest absent factors: bound, shortest length and family.
    MinAbsent,
    /// w_min has the fewest factors of every length.
    MaxAbsent,
    /// Leftmost-embedding transfer from w_min is injective.
    Injection,
    /// The modus plus one letter always yields absent factors.
    AlwaysAbsent,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub claim: Claim,
    #[arg(long)]
    pub sigma: usize,
    #[arg(long)]
    pub iota: usize,
    /// Factor length; `injection` checks every length when omitted.
    #[arg(long)]
    pub k: Option<usize>,
    /// Longest candidate word swept.
    #[arg(long)]
    pub max_len: Option<usize>,
    /// Targets sampled when the target space is too large to sweep.
    #[arg(long, default_value_t = 1000)]
    pub max_targets: u64,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Non-error outcome of a command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Positive,
    Negative,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Positive => 0,
            Outcome::Negative => 1,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn show(w: &Word) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        w.to_string()
    }
}

fn emit_json(out: &mut dyn Write, v: &Value) -> io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("value serializes")
    )
}

struct Ctx<'a> {
    cli: &'a Cli,
}

impl Ctx<'_> {
    fn alphabet(&self) -> Result<Option<Arc<Alphabet>>, CliError> {
        match &self.cli.alphabet {
            Some(chars) => Ok(Some(Arc::new(Alphabet::from_chars(chars)?))),
            None => Ok(None),
        }
    }

    /// Positional words followed by those from `--file`.
    fn texts(&self, positional: &[String]) -> Result<Vec<String>, CliError> {
        let mut texts = positional.to_vec();
        if let Some(path) = &self.cli.file {
            texts.extend(read_word_lines(path)?);
        }
        if texts.is_empty() {
            return Err(usage("no input word given"));
        }
        Ok(texts)
    }

    /// Parses against `--alphabet`, or against the letters of `context`.
    /// Without any letters at all a one-letter alphabet is used.
    fn parse(&self, text: &str, context: &str) -> Result<Word, CliError> {
        let alphabet = match self.alphabet()? {
            Some(a) => a,
            None if context.is_empty() => Arc::new(Alphabet::first(1)?),
            None => Arc::new(Alphabet::inferred(context)?),
        };
        Ok(Word::parse(text, Some(&alphabet))?)
    }

    fn words(&self, positional: &[String]) -> Result<Vec<Word>, CliError> {
        self.texts(positional)?
            .iter()
            .map(|t| self.parse(t, t))
            .collect()
    }

    fn params(
        &self,
        sigma: Option<usize>,
        iota: usize,
        k: usize,
    ) -> Result<ExtremalParams, CliError> {
        Ok(ExtremalParams::with_alphabet(
            self.default_alphabet(sigma)?,
            iota,
            k,
        )?)
    }

    fn default_alphabet(&self, sigma: Option<usize>) -> Result<Arc<Alphabet>, CliError> {
        match (self.alphabet()?, sigma) {
            (Some(a), Some(s)) if a.size() != s => Err(usage(format!(
                "--sigma {s} disagrees with the {}-letter --alphabet",
                a.size()
            ))),
            (Some(a), _) => Ok(a),
            (None, Some(s)) => Ok(Arc::new(Alphabet::first(s)?)),
            (None, None) => Err(usage("give --sigma or --alphabet")),
        }
    }

    fn guards(&self) -> Guards {
        self.cli.guard.map_or_else(Guards::default, Guards::uniform)
    }
}

/// Runs one parsed command, writing results to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let ctx = Ctx { cli };
    let json = cli.json;
    match &cli.command {
        Command::Analyze { words } => {
            let mut reports = Vec::new();
            for w in ctx.words(words)? {
                let f = arch_factorize(&w);
                let inners = (1..=f.iota())
                    .map(|i| f.inner(i))
                    .collect::<Result<Vec<_>, _>>()?;
                let counts = count_scatfact_all_lengths(&w);
                if json {
                    reports.push(json!({
                        "word": w.to_string(),
                        "alphabet": w.alphabet().to_string(),
                        "factorization": f.to_string(),
                        "iota": f.iota(),
                        "arches": f.arches().iter().map(Word::to_string).collect::<Vec<_>>(),
                        "modus": f.modus().to_string(),
                        "inners": inners.iter().map(Word::to_string).collect::<Vec<_>>(),
                        "rest": f.rest().to_string(),
                        "counts": decimal_strings(counts.counts()),
                    }));
                } else {
                    writeln!(out, "word: {}", show(&w))?;
                    writeln!(out, "alphabet: {}", w.alphabet())?;
                    writeln!(
                        out,
                        "factorization: {}",
                        if w.is_empty() {
                            "ε".into()
                        } else {
                            f.to_string()
                        }
                    )?;
                    writeln!(out, "iota: {}", f.iota())?;
                    writeln!(out, "modus: {}", show(&f.modus()))?;
                    let inners: Vec<String> = inners.iter().map(show).collect();
                    writeln!(out, "inners: {}", inners.join(" "))?;
                    writeln!(out, "rest: {}", show(&f.rest()))?;
                    writeln!(
                        out,
                        "counts: {}",
                        decimal_strings(counts.counts()).join(" ")
                    )?;
                }
            }
            if json {
                emit_json(out, &Value::Array(reports))?;
            }
        }
        Command::Count { words } => {
            for w in ctx.words(words)? {
                let t = count_scatfact_all_lengths(&w);
                if json {
                    writeln!(out, "{}", CountTableJson::new(&w, &t).to_json())?;
                } else {
                    writeln!(out, "{}", decimal_strings(t.counts()).join(" "))?;
                }
            }
        }
        Command::Set { words, k } => {
            let guard = cli.guard.unwrap_or(DEFAULT_SET_GUARD);
            for w in ctx.words(words)? {
                let set = scatfact_set(&w, *k, guard)?;
                if json {
                    let factors: Vec<String> = set.iter().map(Word::to_string).collect();
                    emit_json(
                        out,
                        &json!({"word": w.to_string(), "k": k, "size": set.len().to_string(), "factors": factors}),
                    )?;
                } else {
                    for u in &set {
                        writeln!(out, "{u}")?;
                    }
                }
            }
        }
        Command::Enumerate { words, k, limit } => {
            for w in ctx.words(words)? {
                let mut it = enumerate_scatfact(&w, *k);
                let mut factors = Vec::new();
                let mut emitted = 0u64;
                while limit.is_none_or(|l| emitted < l) {
                    let Some(u) = it.next() else { break };
                    emitted += 1;
                    if json {
                        factors.push(u.to_string());
                    } else {
                        writeln!(out, "{u}")?;
                    }
                }
                if json {
                    emit_json(
                        out,
                        &json!({
                            "word": w.to_string(),
                            "k": k,
                            "factors": factors,
                            "steps": it.steps().to_string(),
                            "max_delay": it.max_delay().to_string(),
                        }),
                    )?;
                }
            }
        }
        Command::Congruent { words, k } => {
            let texts = ctx.texts(words)?;
            let [a, b] = texts.as_slice() else {
                return Err(usage(format!(
                    "congruent takes two words, got {}",
                    texts.len()
                )));
            };
            let both = format!("{a}{b}");
            let (w, v) = (ctx.parse(a, &both)?, ctx.parse(b, &both)?);
            let same = simon_congruent(&w, &v, *k)?;
            if json {
                emit_json(
                    out,
                    &json!({"w": w.to_string(), "v": v.to_string(), "k": k, "congruent": same}),
                )?;
            } else {
                writeln!(out, "{same}")?;
            }
            return Ok(if same {
                Outcome::Positive
            } else {
                Outcome::Negative
            });
        }
        Command::Construct { kind } => construct(&ctx, kind, out)?,
        Command::Bounds { sigma, iota, k } => {
            let p = ExtremalParams::new(*sigma, *iota, *k)?;
            let (max, m_min, len, count) = (
                max_scatfact_count(&p),
                min_absent_count(&p),
                shortest_min_absent_length(&p),
                count_shortest_min_absent_words(&p),
            );
            if json {
                emit_json(
                    out,
                    &json!({
                        "sigma": sigma,
                        "iota": iota,
                        "k": k,
                        "max_scatfact_count": max.to_string(),
                        "min_absent_count": m_min.to_string(),
                        "shortest_min_absent_length": len,
                        "count_shortest_min_absent_words": count.to_string(),
                    }),
                )?;
            } else {
                writeln!(out, "max={max}")?;
                writeln!(out, "m_min={m_min}")?;
                writeln!(out, "len={len}")?;
                writeln!(out, "count={count}")?;
            }
        }
        Command::Verify(args) => {
            let report = verify(&ctx, args)?;
            if json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                writeln!(
                    out,
                    "{} {} instances={} elapsed_ms={}",
                    if report.passed() { "PASS" } else { "FAIL" },
                    report.claim_id,
                    report.instances_checked,
                    report.elapsed_ms
                )?;
                for (key, value) in &report.observed {
                    writeln!(out, "  {key}: {value}")?;
                }
                for note in &report.notes {
                    writeln!(out, "  note: {note}")?;
                }
                for w in &report.witnesses {
                    writeln!(out, "  witness {:?}: {}", w.word, w.detail)?;
                }
            }
            return Ok(if report.passed() {
                Outcome::Positive
            } else {
                Outcome::Negative
            });
        }
    }
    Ok(Outcome::Positive)
}

fn construct(ctx: &Ctx<'_>, kind: &Construct, out: &mut dyn Write) -> Result<(), CliError> {
    let json = ctx.cli.json;
    let (words, info) = match kind {
        Construct::MinAbsent {
            sigma,
            iota,
            k,
            modus_letter,
            all,
        } => {
            let p = ctx.params(*sigma, *iota, *k)?;
            let words: Vec<Word> = if *all {
                if modus_letter.is_some() {
                    return Err(usage("--all lists every modus letter; drop --modus-letter"));
                }
                let guard = ctx.cli.guard.unwrap_or(Guards::default().family);
                let family = enumerate_shortest_min_absent_words(&p, guard)?;
                if !json {
                    for w in family {
                        writeln!(out, "{w}")?;
                    }
                    return Ok(());
                }
                family.collect()
            } else {
                let modus = match modus_letter {
                    None => 0,
                    Some(c) => p.alphabet().rank_of(*c).ok_or_else(|| {
                        usage(format!("modus letter {c:?} is not in the alphabet"))
                    })?,
                };
                vec![min_absent_word(&p, modus, None)?]
            };
            let info = json!({
                "kind": "min-absent",
                "sigma": p.sigma(),
                "iota": p.iota(),
                "k": p.k(),
                "length": shortest_min_absent_length(&p),
                "max_scatfact_count": max_scatfact_count(&p).to_string(),
                "min_absent_count": min_absent_count(&p).to_string(),
                "count_shortest_min_absent_words": count_shortest_min_absent_words(&p).to_string(),
            });
            (words, info)
        }
        Construct::WMin {
            sigma,
            iota,
            first_arch,
        } => {
            let alphabet = ctx.default_alphabet(*sigma)?;
            let first = match first_arch {
                Some(text) => Word::parse(text, Some(&alphabet))?,
                None => canonical_word(&alphabet),
            };
            let w = min_scatfact_word_from(&first, *iota)?;
            let info = json!({
                "kind": "w-min",
                "sigma": alphabet.size(),
                "iota": iota,
                "length": w.len(),
                "universality_index": arch_factorize(&w).iota(),
                "counts": decimal_strings(count_scatfact_all_lengths(&w).counts()),
            });
            (vec![w], info)
        }
    };
    if json {
        let mut info = info;
        info["words"] = words.iter().map(Word::to_string).collect::<Vec<_>>().into();
        emit_json(out, &info)?;
    } else {
        for w in words {
            writeln!(out, "{w}")?;
        }
    }
    Ok(())
}

fn verify(ctx: &Ctx<'_>, args: &VerifyArgs) -> Result<VerificationReport, CliError> {
    let guards = ctx.guards();
    let need_k = || args.k.ok_or_else(|| usage("this claim needs --k"));
    let report = match args.claim {
        Claim::MinAbsent => {
            let p = ExtremalParams::new(args.sigma, args.iota, need_k()?)?;
            let max_len = args.max_len.unwrap_or(shortest_min_absent_length(&p) + 2);
            verify_min_absent_extremality(&p, max_len, guards)?
        }
        Claim::MaxAbsent => {
            let max_len = args.max_len.unwrap_or(args.iota * args.sigma + 2);
            verify_max_absent_extremality(args.sigma, args.iota, max_len, guards)?
        }
        Claim::Injection => verify_injection(
            args.sigma,
            args.iota,
            args.k,
            args.max_targets,
            ctx.cli.seed,
            guards,
        )?,
        Claim::AlwaysAbsent => {
            let p = ExtremalParams::new(args.sigma, args.iota, need_k()?)?;
            let max_len = args.max_len.unwrap_or(shortest_min_absent_length(&p));
            verify_always_absent(&p, max_len, guards)?
        }
    };
    Ok(report)
}
