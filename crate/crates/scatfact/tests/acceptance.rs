//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p scatfact --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scatfact::oracle::{
    brute_scatfact_set, naive_is_subsequence, verify_injection, verify_max_absent_extremality,
    verify_min_absent_extremality, Guards, VerificationReport,
};
use scatfact_core::arch::{arch_factorize, next_alph_pos};
use scatfact_core::extremal::{
    enumerate_shortest_min_absent_words, min_absent_word, min_scatfact_word,
    shortest_min_absent_length, ExtremalParams,
};
use scatfact_core::scatfact::{
    build_automaton, count_scatfact_all_lengths, enumerate_scatfact, scatfact_set, simon_congruent,
};
use scatfact_core::word::parse_word;
use scatfact_core::{Alphabet, BigUint, Symbol, Word};

const SUITE_SEED: u64 = 20_240_501;
const SUITE_SIZE: usize = 500;

type Check = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Check,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn word(text: &str) -> Word {
    parse_word(text, None).unwrap()
}

fn binomial(n: u64, k: u64) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, i| acc * i)
}

fn pow(base: u64, exp: u64) -> BigUint {
    BigUint::from(base).pow(exp as u32)
}

fn passed(r: &VerificationReport) -> Result<(), String> {
    ensure(r.passed(), || {
        format!("{} failed: {:?}", r.claim_id, r.witnesses.first())
    })
}

fn example_counts() -> Check {
    let cases = [
        ("aabbccdd", 2, 10u32),
        ("aabbccdd", 3, 16),
        ("abcdccdc", 2, 9),
        ("abcdccdc", 3, 17),
    ];
    let alphabet = Arc::new(Alphabet::from_chars("abcd").unwrap());
    for (text, k, expected) in cases {
        let w = parse_word(text, Some(&alphabet)).unwrap();
        let got = count_scatfact_all_lengths(&w).get(k);
        ensure(got == BigUint::from(expected), || {
            format!("counts({text})[{k}] = {got}, want {expected}")
        })?;
    }
    Ok("10, 16, 9, 17".into())
}

fn congruence_examples() -> Check {
    let (w, v) = (word("aaba"), word("abaa"));
    ensure(simon_congruent(&w, &v, 2).unwrap(), || {
        "aaba, abaa should be 2-congruent".into()
    })?;
    ensure(!simon_congruent(&w, &v, 3).unwrap(), || {
        "aaba, abaa should not be 3-congruent".into()
    })?;
    Ok("k=2 true, k=3 false".into())
}

fn arch_examples() -> Check {
    let f = arch_factorize(&word("aabbbaa"));
    ensure(f.to_string() == "(aab)(bba)a", || format!("aabbbaa -> {f}"))?;
    ensure(f.modus().to_string() == "ba", || {
        format!("modus {}", f.modus())
    })?;
    let g = arch_factorize(&word("tomatoatm"));
    ensure(g.iota() == 2 && g.rest().is_empty(), || {
        format!("tomatoatm -> {g}")
    })?;
    ensure(g.to_string() == "(toma)(toatm)", || {
        format!("tomatoatm -> {g}")
    })?;
    Ok(format!("{f}, {g}"))
}

fn closed_form_bound() -> Check {
    let mut cases = 0;
    for sigma in 2..=3u64 {
        for iota in 1..=2u64 {
            for k in iota + 1..=iota + 3 {
                let expected: BigUint = (0..=iota)
                    .map(|j| binomial(k, j) * pow(sigma - 1, k - j))
                    .sum();
                let p = ExtremalParams::new(sigma as usize, iota as usize, k as usize).unwrap();
                let max_len = shortest_min_absent_length(&p) + 2;
                let r = verify_min_absent_extremality(&p, max_len, Guards::default()).unwrap();
                passed(&r)?;
                let tag = format!("sigma={sigma} iota={iota} k={k}");
                ensure(r.observed["max_count"] == expected.to_string(), || {
                    format!("{tag}: sweep max {} != {expected}", r.observed["max_count"])
                })?;
                let w = min_absent_word(&p, 0, None).unwrap();
                let c = count_scatfact_all_lengths(&w).get(k as usize);
                ensure(c == expected, || format!("{tag}: {w} has {c}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} parameter triples"))
}

fn shortest_family() -> Check {
    for (sigma, iota, k) in [(2u64, 1u64, 2u64), (2, 1, 3), (2, 2, 3), (3, 1, 2)] {
        let p = ExtremalParams::new(sigma as usize, iota as usize, k as usize).unwrap();
        let len = (iota + 1) * (sigma - 1) * (k - iota) + iota;
        ensure(shortest_min_absent_length(&p) as u64 == len, || {
            format!("length for {sigma},{iota},{k}")
        })?;
        let r = verify_min_absent_extremality(&p, len as usize, Guards::default()).unwrap();
        passed(&r)?;
        let expected =
            BigUint::from(sigma) * factorial(sigma - 1).pow(((iota + 1) * (k - iota)) as u32);
        let found = &r.observed["attaining_at_shortest_length"];
        ensure(*found == expected.to_string(), || {
            format!("{sigma},{iota},{k}: {found} words, want {expected}")
        })?;
        let family: BTreeSet<Word> = enumerate_shortest_min_absent_words(&p, 1 << 20)
            .unwrap()
            .collect();
        ensure(BigUint::from(family.len()) == expected, || {
            "generator size".into()
        })?;
    }
    Ok("4 parameter triples".into())
}

fn w_min_minimality() -> Check {
    let mut instances = 0;
    for (sigma, iota) in [(2, 2), (2, 3), (3, 2)] {
        let r = verify_max_absent_extremality(sigma, iota, iota * sigma + 2, Guards::default())
            .unwrap();
        passed(&r)?;
        instances += r.instances_checked;
    }
    Ok(format!("{instances} words compared"))
}

fn jump_law() -> Check {
    let mut cells = 0;
    for sigma in 2..=5usize {
        for iota in 1..=5usize {
            let w = min_scatfact_word(sigma, iota).unwrap();
            for j in 0..=w.len() {
                for s in 1..=sigma {
                    let r = j % sigma;
                    let law = if r == 0 || s <= sigma - r {
                        Some(j + s)
                    } else if j / sigma + 1 < iota {
                        Some((j / sigma) * sigma + sigma + s)
                    } else {
                        None
                    };
                    // Positions past the end of the word do not exist.
                    let law = law.filter(|&p| p <= w.len());
                    let got = next_alph_pos(&w, j, s).unwrap();
                    ensure(got == law, || {
                        format!("sigma={sigma} iota={iota} j={j} s={s}: {got:?} vs {law:?}")
                    })?;
                    cells += 1;
                }
            }
        }
    }
    Ok(format!("{cells} (j, s) cells"))
}

fn injection() -> Check {
    let mut targets = 0;
    for (sigma, iota) in [(2, 2), (2, 3)] {
        let r = verify_injection(sigma, iota, None, 0, SUITE_SEED, Guards::default()).unwrap();
        passed(&r)?;
        ensure(r.observed["mode"] == "exhaustive", || {
            "target sweep was sampled".into()
        })?;
        targets += r.instances_checked;
    }
    Ok(format!("{targets} (target, k) pairs"))
}

fn random_suite() -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED);
    (0..SUITE_SIZE)
        .map(|_| {
            let sigma = rng.random_range(1..=3);
            let len = rng.random_range(0..=10);
            let symbols = (0..len)
                .map(|_| rng.random_range(0..sigma) as Symbol)
                .collect();
            Word::new(Arc::new(Alphabet::first(sigma as usize).unwrap()), symbols).unwrap()
        })
        .collect()
}

fn all_of_length(alphabet: &Arc<Alphabet>, k: usize) -> Vec<Word> {
    let sigma = alphabet.size();
    let total = sigma.pow(k as u32);
    (0..total)
        .map(|mut code| {
            let mut s = vec![0 as Symbol; k];
            for slot in s.iter_mut().rev() {
                *slot = (code % sigma) as Symbol;
                code /= sigma;
            }
            Word::new(Arc::clone(alphabet), s).unwrap()
        })
        .collect()
}

fn oracle_equivalence() -> Check {
    let mut checks = 0u64;
    for w in random_suite() {
        let automaton = build_automaton(&w);
        let counts = count_scatfact_all_lengths(&w);
        for k in 0..=w.len() + 1 {
            let brute = brute_scatfact_set(&w, k, u64::MAX).unwrap();
            let tag = || format!("w={w:?} k={k}");
            ensure(counts.get(k) == BigUint::from(brute.len()), || {
                format!("{}: count", tag())
            })?;
            let listed: Vec<Word> = enumerate_scatfact(&w, k).collect();
            ensure(
                listed.iter().cloned().collect::<BTreeSet<_>>() == brute,
                || format!("{}: enumeration", tag()),
            )?;
            ensure(scatfact_set(&w, k, u64::MAX).unwrap() == brute, || {
                format!("{}: set", tag())
            })?;
            for u in all_of_length(w.alphabet(), k) {
                let expected = naive_is_subsequence(w.symbols(), u.symbols());
                ensure(automaton.accepts(u.symbols()) == expected, || {
                    format!("{}: membership of {u:?}", tag())
                })?;
                ensure(brute.contains(&u) == expected, || {
                    format!("{}: brute membership of {u:?}", tag())
                })?;
                checks += 1;
            }
        }
    }
    Ok(format!("{SUITE_SIZE} words, {checks} membership queries"))
}

fn enumeration_contract() -> Check {
    let mut worst = 0f64;
    for w in random_suite() {
        let counts = count_scatfact_all_lengths(&w);
        for k in 0..=w.len() + 1 {
            let mut it = enumerate_scatfact(&w, k);
            let listed: Vec<Word> = it.by_ref().collect();
            let tag = || format!("w={w:?} k={k}");
            ensure(listed.windows(2).all(|p| p[0] < p[1]), || {
                format!("{}: not strictly increasing", tag())
            })?;
            ensure(BigUint::from(listed.len()) == counts.get(k), || {
                format!("{}: length", tag())
            })?;
            let unit = (k.max(1) * w.sigma()) as u64;
            ensure(it.max_delay() <= 2 * unit, || {
                format!("{}: delay {} > 2·k·σ", tag(), it.max_delay())
            })?;
            worst = worst.max(it.max_delay() as f64 / unit as f64);
        }
    }
    Ok(format!("worst delay {worst:.2}·k·σ steps"))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "example counts",
            budget: Duration::from_millis(1),
            run: example_counts,
        },
        Criterion {
            id: 2,
            name: "congruence examples",
            budget: Duration::from_millis(1),
            run: congruence_examples,
        },
        Criterion {
            id: 3,
            name: "arch factorization examples",
            budget: Duration::from_secs(1),
            run: arch_examples,
        },
        Criterion {
            id: 4,
            name: "closed-form maximum count",
            budget: Duration::from_secs(60),
            run: closed_form_bound,
        },
        Criterion {
            id: 5,
            name: "shortest length and family size",
            budget: Duration::from_secs(60),
            run: shortest_family,
        },
        Criterion {
            id: 6,
            name: "w_min minimality",
            budget: Duration::from_secs(120),
            run: w_min_minimality,
        },
        Criterion {
            id: 7,
            name: "w_min jump law",
            budget: Duration::from_secs(1),
            run: jump_law,
        },
        Criterion {
            id: 8,
            name: "transfer injectivity",
            budget: Duration::from_secs(60),
            run: injection,
        },
        Criterion {
            id: 9,
            name: "oracle equivalence",
            budget: Duration::from_secs(30),
            run: oracle_equivalence,
        },
        Criterion {
            id: 10,
            name: "enumeration contract",
            budget: Duration::from_secs(60),
            run: enumeration_contract,
        },
    ];
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.budget => {
                Err(format!("{detail}; took {elapsed:?}, budget {:?}", c.budget))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!(
                "PASS criterion {}: {} ({detail}; {elapsed:.2?})",
                c.id, c.name
            ),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {}: {} ({why})", c.id, c.name);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
