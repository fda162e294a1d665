//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p bridge-census --test acceptance -- --nocapture`.

mod tables;

use std::collections::HashSet;
use std::time::{Duration, Instant};

use bridge_census::check::{
    circle_count_outcome, determinant_outcome, orientation_outcome, orientation_sample,
};
use bridge_census::{
    closed_form_vertical_total, enumerate_model_words, group_by_knot, index_contribution,
    model_count, netto_partial_sum, run_census, to_alternating, word_class, Rational, RunWord,
};
use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::ToPrimitive;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Outcome {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn census_matches(
    c: usize,
    words: u64,
    avg_s: (i64, i64),
    upper: (i64, i64),
    genus: (i64, i64),
    bound: (i64, i64),
) -> Outcome {
    let start = Instant::now();
    let r = run_census(c).map_err(|e| e.to_string())?;
    let q = |(n, d): (i64, i64)| Rational::new(n, d);
    ensure(r.word_count == words, || {
        format!("word_count {}", r.word_count)
    })?;
    ensure(r.avg_s == q(avg_s), || format!("avg_s {}", r.avg_s))?;
    ensure(r.avg_s_upper == q(upper), || {
        format!("avg_s_upper {}", r.avg_s_upper)
    })?;
    ensure(r.avg_genus == q(genus), || {
        format!("avg_genus {}", r.avg_genus)
    })?;
    ensure(r.avg_genus_lower_closed_form == q(bound), || {
        format!("bound {}", r.avg_genus_lower_closed_form)
    })?;
    within(Duration::from_secs(1), start)
}

fn criterion_1() -> Outcome {
    census_matches(6, 5, (19, 5), (24, 5), (16, 10), (11, 10))
}

fn criterion_2() -> Outcome {
    census_matches(7, 11, (48, 11), (54, 11), (20, 11), (17, 11))
}

fn criterion_3() -> Outcome {
    let run = || {
        let six: Vec<String> = enumerate_model_words(6)
            .unwrap()
            .map(|r| r.to_word().to_string())
            .collect();
        let table: Vec<&str> = tables::SIX.iter().map(|r| r.word).collect();
        assert_eq!(six, table);
        let seven: HashSet<String> = enumerate_model_words(7)
            .unwrap()
            .map(|r| r.to_word().to_string())
            .collect();
        let table: HashSet<String> = tables::SEVEN.iter().map(|r| r.word.to_string()).collect();
        assert_eq!(seven, table);
        for r in tables::SIX.iter().chain(&tables::SEVEN) {
            tables::check_row(r);
        }
    };
    std::panic::catch_unwind(run).map_err(|e| {
        e.downcast_ref::<String>()
            .cloned()
            .unwrap_or_else(|| "golden row mismatch".into())
    })
}

fn criterion_4() -> Outcome {
    let ic = |c, i| {
        index_contribution(c, i)
            .map_err(|e| e.to_string())
            .map(|n| n.to_u64().unwrap())
    };
    let six = [ic(6, 2)?, ic(6, 3)?];
    let seven = [ic(7, 2)?, ic(7, 3)?, ic(7, 4)?];
    ensure(six == [3, 4], || format!("c=6 contributions {six:?}"))?;
    ensure(seven == [5, 8, 6], || {
        format!("c=7 contributions {seven:?}")
    })?;
    let t6 = closed_form_vertical_total(6).map_err(|e| e.to_string())?;
    let t7 = closed_form_vertical_total(7).map_err(|e| e.to_string())?;
    ensure(t6 == BigUint::from(14u8), || format!("c=6 total {t6}"))?;
    ensure(t7 == BigUint::from(32u8), || format!("c=7 total {t7}"))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    for c in 3..=24 {
        let n = enumerate_model_words(c).map_err(|e| e.to_string())?.count();
        ensure(model_count(c) == BigUint::from(n), || {
            format!("c={c}: enumerated {n}, formula {}", model_count(c))
        })?;
    }
    within(Duration::from_secs(60), start)
}

fn words_up_to(c_max: usize) -> Vec<RunWord> {
    (3..=c_max)
        .flat_map(|c| enumerate_model_words(c).unwrap())
        .collect()
}

fn all_ok(label: &str, outcomes: impl Iterator<Item = Outcome>) -> Outcome {
    let mut checked = 0;
    let failures: Vec<String> = outcomes
        .inspect(|_| checked += 1)
        .filter_map(Result::err)
        .collect();
    ensure(failures.is_empty(), || {
        format!(
            "{} of {checked} {label} mismatched, first: {}",
            failures.len(),
            failures[0]
        )
    })
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let words = words_up_to(14);
    ensure(words.len() > 2_700, || {
        format!("only {} words", words.len())
    })?;
    all_ok("words", words.iter().map(circle_count_outcome))?;
    within(Duration::from_secs(60), start)
}

fn criterion_7() -> Outcome {
    let sample = orientation_sample(40, 500);
    ensure(sample.len() == 27 * 500, || {
        format!("{} words sampled", sample.len())
    })?;
    all_ok("billiard words", sample.iter().map(orientation_outcome))
}

fn criterion_8() -> Outcome {
    for c in 3..=20 {
        let enumerated: usize = enumerate_model_words(c)
            .unwrap()
            .map(|r| to_alternating(&r).unwrap().vertical_count())
            .sum();
        let closed = closed_form_vertical_total(c).map_err(|e| e.to_string())?;
        ensure(closed == BigUint::from(enumerated), || {
            format!("c={c}: closed form {closed}, enumerated {enumerated}")
        })?;
        for i in 2..c {
            let a = index_contribution(c, i).unwrap();
            let b = index_contribution(c, c + 1 - i).unwrap();
            ensure(a == b, || {
                format!("c={c}: index {i} gives {a}, index {} gives {b}", c + 1 - i)
            })?;
        }
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    for c in 3..=14 {
        for k in group_by_knot(c).map_err(|e| e.to_string())? {
            let palindromic: Vec<bool> =
                k.members.iter().map(|r| r.is_palindromic_type()).collect();
            let ok = matches!(palindromic.as_slice(), [true] | [false, false]);
            ensure(ok, || {
                format!("c={c}: class {} has words {:?}", k.name, k.words)
            })?;
            let genera: HashSet<u64> = k
                .members
                .iter()
                .map(|r| to_alternating(r).unwrap().genus().unwrap())
                .collect();
            let fractions: HashSet<_> = k.members.iter().map(|r| word_class(r).unwrap()).collect();
            ensure(genera.len() == 1 && fractions.len() == 1, || {
                format!("c={c}: class {} disagrees internally", k.name)
            })?;
        }
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    all_ok("words", words_up_to(12).iter().map(determinant_outcome))?;
    within(Duration::from_secs(120), start)
}

fn criterion_11() -> Outcome {
    for k in 0..=30u64 {
        for r in 0..3 {
            let direct: BigUint = (0..=k)
                .filter(|j| j % 3 == r)
                .map(|j| binomial(BigUint::from(k), BigUint::from(j)))
                .sum();
            let closed = netto_partial_sum(k, r);
            ensure(closed == direct, || {
                format!("k={k}, r={r}: {closed} vs {direct}")
            })?;
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("c=6 census averages and bound", criterion_1),
        ("c=7 census averages and bound", criterion_2),
        ("golden rows for six and seven crossings", criterion_3),
        ("index contributions for c=6 and c=7", criterion_4),
        ("model count formula for 3 <= c <= 24", criterion_5),
        ("traced Seifert circles for c <= 14", criterion_6),
        ("billiard orientation patterns up to length 40", criterion_7),
        ("closed-form vertical totals for 3 <= c <= 20", criterion_8),
        ("class multiplicities for 3 <= c <= 14", criterion_9),
        ("Goeritz determinants for c <= 12", criterion_10),
        ("Netto identities for k <= 30", criterion_11),
    ];
    let mut failed = Vec::new();
    for (n, (label, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        match &outcome {
            Ok(()) => println!("PASS {:>2} {label} ({took:.2?})", n + 1),
            Err(e) => {
                println!("FAIL {:>2} {label} ({took:.2?}): {e}", n + 1);
                failed.push(n + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
