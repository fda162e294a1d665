//! Cross-validation of every combinatorial shortcut against brute force.

use std::fmt;

use num_bigint::BigUint;
use num_integer::binomial;
use serde::Serialize;

use crate::census::{
    closed_form_vertical_total, index_contribution, model_count, netto_partial_sum,
    run_census_with, CensusOptions,
};
use crate::diagram::to_alternating;
use crate::error::Result;
use crate::oracle::{
    alternating_pd, billiard_pd, expected_billiard_pattern, goeritz_determinant, orient,
};
use crate::par::{self, Execution};
use crate::rational::{diagram_fraction, group_by_knot};
use crate::word::{enumerate_model_words, sample, BilliardWord, RunWord};

/// Random billiard words tried per length in the orientation check.
pub const ORIENTATION_SAMPLES: usize = 500;
/// Longest random billiard word in the orientation check.
pub const ORIENTATION_MAX_LENGTH: usize = 40;
/// Determinants are compared for crossing numbers up to this bound.
pub const DETERMINANT_LIMIT: usize = 12;

const SEED: u64 = 0x5eed_b111;

#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckCount {
    pub name: &'static str,
    pub assertions: u64,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckReport {
    pub c_max: usize,
    pub checks: Vec<CheckCount>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures.is_empty())
    }

    pub fn assertions(&self) -> u64 {
        self.checks.iter().map(|c| c.assertions).sum()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.failures.is_empty() {
                "ok"
            } else {
                "FAILED"
            };
            writeln!(f, "{:<28} {:>8} assertions  {status}", c.name, c.assertions)?;
            for msg in c.failures.iter().take(10) {
                writeln!(f, "    {msg}")?;
            }
        }
        if self.passed() {
            write!(f, "OK: {} assertions", self.assertions())
        } else {
            let n: usize = self.checks.iter().map(|c| c.failures.len()).sum();
            write!(f, "FAILED: {n} of {} assertions", self.assertions())
        }
    }
}

impl CheckCount {
    fn new(name: &'static str) -> Self {
        CheckCount {
            name,
            ..Default::default()
        }
    }

    fn assert(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.assertions += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    fn absorb(&mut self, outcomes: Vec<std::result::Result<(), String>>) {
        for o in outcomes {
            self.assert(o.is_ok(), || o.unwrap_err());
        }
    }
}

fn model_words(c_max: usize) -> Result<Vec<RunWord>> {
    let mut all = Vec::new();
    for c in 3..=c_max {
        all.extend(enumerate_model_words(c)?);
    }
    Ok(all)
}

/// Seifert circles traced on the alternating diagram equal `2 + #viable`
/// and lie within the sequential/vertical bounds.
pub fn circle_count_outcome(r: &RunWord) -> std::result::Result<(), String> {
    let d = to_alternating(r).map_err(|e| e.to_string())?;
    let od = orient(&alternating_pd(&d)).map_err(|e| format!("{r}: {e}"))?;
    let traced = od.trace_seifert_circles();
    let (lo, hi) = d.seifert_bounds();
    if traced != d.seifert_circle_count() || !(lo..=hi).contains(&traced) {
        return Err(format!(
            "{r}: traced {traced} circles, formula {} in [{lo}, {hi}]",
            d.seifert_circle_count()
        ));
    }
    Ok(())
}

/// The oracle's V/H classification of the alternating diagram equals the
/// positional rule.
pub fn smoothing_outcome(r: &RunWord) -> std::result::Result<(), String> {
    let d = to_alternating(r).map_err(|e| e.to_string())?;
    let od = orient(&alternating_pd(&d)).map_err(|e| format!("{r}: {e}"))?;
    let traced = od.classify_orientations();
    if traced != d.smoothings() {
        let s: String = traced.iter().map(|x| x.as_char()).collect();
        return Err(format!("{r}: oracle {s}, rule {}", d.smoothing_string()));
    }
    Ok(())
}

/// A billiard diagram's V/H sequence depends only on its length.
pub fn orientation_outcome(w: &BilliardWord) -> std::result::Result<(), String> {
    let expected = expected_billiard_pattern(w.len()).ok_or_else(|| format!("{w}: link length"))?;
    let od =
        orient(&billiard_pd(w).map_err(|e| e.to_string())?).map_err(|e| format!("{w}: {e}"))?;
    let got = od.classify_orientations();
    if got != expected {
        let s: String = got.iter().map(|x| x.as_char()).collect();
        return Err(format!("{w}: orientation pattern {s}"));
    }
    Ok(())
}

/// Both diagrams of a model word have determinant `p`.
pub fn determinant_outcome(r: &RunWord) -> std::result::Result<(), String> {
    let d = to_alternating(r).map_err(|e| e.to_string())?;
    let p = diagram_fraction(&d).map_err(|e| e.to_string())?.p().clone();
    let det = |pd| goeritz_determinant(&pd).map_err(|e| e.to_string());
    let from_billiard = det(billiard_pd(&r.to_word()).map_err(|e| e.to_string())?)?;
    let from_alternating = det(alternating_pd(&d))?;
    if from_billiard != p || from_alternating != p {
        return Err(format!(
            "{r}: det billiard {from_billiard}, alternating {from_alternating}, p {p}"
        ));
    }
    Ok(())
}

/// Random billiard words of every knot length up to `max_len`.
pub fn orientation_sample(max_len: usize, per_length: usize) -> Vec<BilliardWord> {
    (1..=max_len)
        .filter(|n| n % 3 != 2)
        .flat_map(|n| sample(n, per_length, SEED ^ n as u64))
        .collect()
}

/// Runs every cross-check on model words with up to `c_max` crossings.
pub fn run_check(c_max: usize, exec: Execution) -> Result<CheckReport> {
    let words = model_words(c_max)?;
    let mut checks = Vec::new();

    let mut circles = CheckCount::new("seifert_circles");
    circles.absorb(par::map(exec, &words, circle_count_outcome));
    checks.push(circles);

    let mut smoothing = CheckCount::new("smoothing_classification");
    smoothing.absorb(par::map(exec, &words, smoothing_outcome));
    checks.push(smoothing);

    let mut orientation = CheckCount::new("orientation_pattern");
    let mut billiard: Vec<BilliardWord> = words.iter().map(RunWord::to_word).collect();
    billiard.extend(
        words
            .iter()
            .map(|r| r.toggle_interior().to_word())
            .filter(|w| w.len() % 3 != 2),
    );
    billiard.extend(orientation_sample(
        ORIENTATION_MAX_LENGTH,
        ORIENTATION_SAMPLES,
    ));
    orientation.absorb(par::map(exec, &billiard, orientation_outcome));
    checks.push(orientation);

    let mut determinant = CheckCount::new("determinant");
    let small: Vec<RunWord> = words
        .iter()
        .filter(|r| r.crossing_count() <= DETERMINANT_LIMIT)
        .cloned()
        .collect();
    determinant.absorb(par::map(exec, &small, determinant_outcome));
    checks.push(determinant);

    let mut count = CheckCount::new("model_count");
    let mut vertical = CheckCount::new("vertical_total");
    let mut symmetry = CheckCount::new("index_symmetry");
    let mut census = CheckCount::new("census_invariants");
    let mut multiplicity = CheckCount::new("multiplicity");
    for c in 3..=c_max {
        let n = enumerate_model_words(c)?.count();
        count.assert(model_count(c) == BigUint::from(n), || {
            format!("c={c}: {n} words, formula {}", model_count(c))
        });

        let enumerated: usize = words
            .iter()
            .filter(|r| r.crossing_count() == c)
            .map(|r| to_alternating(r).map(|d| d.vertical_count()).unwrap_or(0))
            .sum();
        let closed = closed_form_vertical_total(c)?;
        vertical.assert(closed == BigUint::from(enumerated), || {
            format!("c={c}: closed form {closed}, enumerated {enumerated}")
        });
        for i in 2..c {
            let a = index_contribution(c, i)?;
            let b = index_contribution(c, c + 1 - i)?;
            symmetry.assert(a == b, || format!("c={c}: index {i} gives {a}, mirror {b}"));
        }

        let opts = CensusOptions {
            execution: exec,
            classes: Some(false),
        };
        let outcome = run_census_with(c, &opts);
        census.assert(outcome.is_ok(), || {
            format!("c={c}: {}", outcome.unwrap_err())
        });

        match group_by_knot(c) {
            Ok(classes) => {
                for k in classes {
                    let expect = if k.palindromic { 1 } else { 2 };
                    let single_kind = k.members.iter().all(|r| r.is_palindromic_type())
                        || k.members.iter().all(|r| !r.is_palindromic_type());
                    multiplicity.assert(k.multiplicity == expect && single_kind, || {
                        format!(
                            "c={c}: {} has {} words {:?}",
                            k.name, k.multiplicity, k.words
                        )
                    });
                }
            }
            Err(e) => multiplicity.assert(false, || format!("c={c}: {e}")),
        }
    }
    checks.extend([count, vertical, symmetry, census, multiplicity]);

    let mut netto = CheckCount::new("netto");
    for k in 0..=30u64 {
        for r in 0..3 {
            let direct: BigUint = (0..=k)
                .filter(|j| j % 3 == r)
                .map(|j| binomial(BigUint::from(k), BigUint::from(j)))
                .sum();
            let closed = netto_partial_sum(k, r);
            netto.assert(closed == direct, || {
                format!("k={k}, r={r}: {closed} vs {direct}")
            });
        }
    }
    checks.push(netto);

    Ok(CheckReport { c_max, checks })
}
