//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test -p mesolib --test acceptance -- --nocapture --test-threads 1`
//! to see them in order.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use mesolib::classifier::{classify, is_mesosome_free};
use mesolib::counting::{count_by_runs, g, g_closed_form, m_closed_form, m_enumerate};
use mesolib::detector::contains_mesosome;
use mesolib::infinite::{canonical_forms, extendable_oracle, is_infinitely_extendable};
use mesolib::minimal_forbidden::{generate_minimal_forbidden, is_minimal_forbidden};
use mesolib::word::enumerate_words;
use mesolib::{BinaryWord, EnumerationCap, Shape};

const TABLE: [u64; 18] = [
    1, 2, 4, 8, 14, 24, 32, 42, 54, 68, 82, 98, 118, 140, 162, 186, 216, 248,
];

fn criterion(id: u32, name: &str, check: impl FnOnce() -> Result<(), String>) {
    let started = Instant::now();
    let outcome = check();
    let elapsed = started.elapsed();
    match &outcome {
        Ok(()) => println!("PASS  AC{id}  {name}  ({elapsed:.2?})"),
        Err(why) => println!("FAIL  AC{id}  {name}  ({elapsed:.2?}): {why}"),
    }
    if let Err(why) = outcome {
        panic!("AC{id} failed: {why}");
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

#[test]
fn ac1_golden_table() {
    criterion(
        1,
        "m(0..17) matches the published table by closed form and enumeration",
        || {
            let t = Instant::now();
            let closed: Vec<u64> = (0..18).map(m_closed_form::<u64>).collect();
            let closed_time = t.elapsed();
            ensure(closed == TABLE, || format!("closed form gave {closed:?}"))?;
            ensure(closed_time < Duration::from_secs(1), || {
                format!("closed form took {closed_time:?}")
            })?;

            let t = Instant::now();
            let enumerated: Vec<u64> = (0..18)
                .map(|n| m_enumerate(n, EnumerationCap::DEFAULT).unwrap())
                .collect();
            let enum_time = t.elapsed();
            ensure(enumerated == TABLE, || {
                format!("enumeration gave {enumerated:?}")
            })?;
            ensure(enum_time < Duration::from_secs(60), || {
                format!("enumeration took {enum_time:?}")
            })
        },
    );
}

#[test]
fn ac2_closed_form_vs_enumeration() {
    criterion(
        2,
        "m_closed_form(n) = m_enumerate(n) for 0 <= n <= 22",
        || {
            for n in 0..=22 {
                let closed = m_closed_form::<u64>(n as u64);
                let counted = m_enumerate(n, EnumerationCap::DEFAULT).map_err(|e| e.to_string())?;
                ensure(closed == counted, || {
                    format!("n = {n}: closed {closed}, enumerated {counted}")
                })?;
            }
            Ok(())
        },
    );
}

#[test]
fn ac3_structure_theorem_equivalence() {
    criterion(
        3,
        "classifier agrees with definitional detector on all words of length <= 16",
        || {
            for n in 0..=16 {
                for w in enumerate_words(n) {
                    let fast = is_mesosome_free(&w);
                    let slow = !contains_mesosome(&w);
                    ensure(fast == slow, || {
                        format!("{w}: classifier {fast}, detector {slow}")
                    })?;
                }
            }
            Ok(())
        },
    );
}

#[derive(Default, Debug, PartialEq)]
struct Tally {
    one: u64,
    two: u64,
    three: u64,
    four_a: u64,
    four_b: u64,
    five_plus: u64,
}

/// Buckets free words starting with 0 by raw run count; four-run words are
/// split on whether the middle runs are both single symbols.
fn tally_by_enumeration(n: usize) -> Tally {
    let mut t = Tally::default();
    for w in enumerate_words(n).filter(|w| w.first() == Some(0) && is_mesosome_free(w)) {
        let runs = w.runs().unwrap().run_lengths;
        match runs.len() {
            1 => t.one += 1,
            2 => t.two += 1,
            3 => t.three += 1,
            4 if runs[1] == 1 && runs[2] == 1 => t.four_a += 1,
            4 => t.four_b += 1,
            _ => t.five_plus += 1,
        }
    }
    t
}

#[test]
fn ac4_breakdown_consistency() {
    criterion(
        4,
        "count_by_runs subtotals match filtered enumeration for 1 <= n <= 20",
        || {
            for n in 1..=20u64 {
                let b = count_by_runs::<u64>(n);
                let got = Tally {
                    one: b.one_run,
                    two: b.two_runs,
                    three: b.three_runs,
                    four_a: b.four_runs_case_a,
                    four_b: b.four_runs_case_b,
                    five_plus: b.five_plus_runs,
                };
                let want = tally_by_enumeration(n as usize);
                ensure(got == want, || {
                    format!("n = {n}: formulas {got:?}, enumeration {want:?}")
                })?;
                let parity = if n % 2 == 0 {
                    n * n.saturating_sub(2) / 4
                } else {
                    (n - 1) * (n - 1) / 4
                };
                ensure(b.three_runs == parity, || {
                    format!("n = {n}: three-run {}", b.three_runs)
                })?;
                let m = m_enumerate(n as usize, EnumerationCap::DEFAULT).unwrap();
                ensure(b.total == m, || {
                    format!("n = {n}: total {} vs {m}", b.total)
                })?;
            }
            Ok(())
        },
    );
}

#[test]
fn ac5_g_convolution_vs_cubics() {
    criterion(
        5,
        "g(n) convolution equals the mod-4 cubics for 0 <= n <= 1000",
        || {
            let t = Instant::now();
            for n in 0..=1000u64 {
                let conv = g::<u64>(n);
                let cubic = g_closed_form::<u64>(n);
                ensure(conv == cubic, || {
                    format!("n = {n}: convolution {conv}, cubic {cubic}")
                })?;
            }
            ensure(t.elapsed() < Duration::from_secs(1), || {
                format!("took {:?}", t.elapsed())
            })
        },
    );
}

#[test]
fn ac6_minimal_forbidden_completeness() {
    criterion(
        6,
        "generated minimal forbidden sets equal the definitional sets for n <= 18",
        || {
            let expected_counts = [
                (4, 2),
                (6, 10),
                (8, 6),
                (10, 10),
                (12, 10),
                (14, 14),
                (16, 14),
                (18, 18),
            ];
            for n in 0..=18usize {
                let generated: Vec<BinaryWord> = generate_minimal_forbidden(n);
                let exhaustive: Vec<BinaryWord> =
                    enumerate_words(n).filter(is_minimal_forbidden).collect();
                ensure(generated == exhaustive, || {
                    format!("n = {n}: generated {generated:?}, exhaustive {exhaustive:?}")
                })?;
                let want = expected_counts.iter().find(|c| c.0 == n).map_or(0, |c| c.1);
                ensure(generated.len() == want, || {
                    format!("n = {n}: {} words, expected {want}", generated.len())
                })?;
            }
            Ok(())
        },
    );
}

#[test]
fn ac7_infinite_form_prefixes() {
    criterion(
        7,
        "prefixes of every canonical infinite form (params <= 5) are free up to n = 1000",
        || {
            let forms = canonical_forms(5, 5);
            for form in &forms {
                for n in 0..=1000 {
                    let p = form.prefix(n);
                    ensure(is_mesosome_free(&p), || {
                        format!("{form} prefix of length {n} has a mesosome")
                    })?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn ac8_extendability() {
    criterion(
        8,
        "structural extendability matches the search oracle; the gap is exactly form E",
        || {
            for n in 0..=14 {
                for w in enumerate_words(n) {
                    let fast = is_infinitely_extendable(&w);
                    let slow = extendable_oracle(&w, EnumerationCap::DEFAULT)
                        .map_err(|e| e.to_string())?;
                    ensure(fast == slow, || {
                        format!("{w}: structural {fast}, oracle {slow}")
                    })?;

                    let free_not_extendable = is_mesosome_free(&w) && !fast;
                    let is_form_e = !w.is_empty()
                        && matches!(
                            classify(&w).unwrap().form().map(|f| f.shape),
                            Some(Shape::E { .. })
                        );
                    ensure(free_not_extendable == is_form_e, || {
                        format!("{w}: free-but-stuck {free_not_extendable}, form E {is_form_e}")
                    })?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn ac9_symmetries() {
    criterion(
        9,
        "freeness and minimal-forbidden status are complement/reverse-complement invariant",
        || {
            for n in 0..=14 {
                for w in enumerate_words(n) {
                    let c = w.complement();
                    ensure(is_mesosome_free(&w) == is_mesosome_free(&c), || {
                        format!("freeness of {w}")
                    })?;
                    ensure(contains_mesosome(&w) == contains_mesosome(&c), || {
                        format!("detector on {w}")
                    })?;
                    ensure(is_minimal_forbidden(&w) == is_minimal_forbidden(&c), || {
                        format!("minimal forbidden status of {w}")
                    })?;
                }
                let set: BTreeSet<BinaryWord> = generate_minimal_forbidden(n).into_iter().collect();
                let mapped: BTreeSet<BinaryWord> =
                    set.iter().map(|w| w.complement().reverse()).collect();
                ensure(set == mapped, || {
                    format!("n = {n}: set not closed under reverse-complement")
                })?;
            }
            Ok(())
        },
    );
}
