//! Closed-form counts over the model and exact enumerated censuses.
//!
//! Every cosine that appears in the closed forms is `2cos(mπ/3)` for an
//! integer `m`, which is resolved by a lookup on `m mod 6`.

use num_bigint::{BigInt, BigUint};
use num_integer::{binomial, Integer};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::analysis::{analyze, WordAnalysis};
use crate::diagram::to_alternating;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::par::{self, Execution};
use crate::rational::{group_by_knot, KnotClass};
use crate::word::{check_crossing_number, doubles_residue, enumerate_model_words, RunWord};

/// Largest crossing number [`run_census`] accepts.
pub const MAX_CENSUS_CROSSINGS: usize = 40;

/// Class summaries are computed by default up to this crossing number.
pub const CLASS_SUMMARY_LIMIT: usize = 20;

/// `2cos(mπ/3)`.
fn two_cos_third(m: i64) -> i64 {
    [2, 1, -1, -2, -1, 1][m.rem_euclid(6) as usize]
}

/// `Σ_{j ≡ r (mod 3)} C(k, j)` via `(2^k + 2cos((k - 2r)π/3)) / 3`.
pub fn netto_partial_sum(k: u64, r: u64) -> BigUint {
    let r = (r % 3) as i64;
    let total = (BigInt::from(1u8) << k) + two_cos_third(k as i64 - 2 * r);
    let (q, rem) = total.div_rem(&BigInt::from(3u8));
    assert!(rem.is_zero(), "Netto sum not integral at k={k}, r={r}");
    q.to_biguint().expect("Netto sums are non-negative")
}

/// The correction term `*` in the model size `(2^(c-2) + *) / 3`.
pub fn star(c: usize) -> i64 {
    let c = c as i64;
    let m = match c % 3 {
        1 => c - 2,
        0 => c - 4,
        _ => c - 6,
    };
    two_cos_third(m)
}

/// Number of model words with `c >= 3` crossings.
pub fn model_count(c: usize) -> BigUint {
    assert!(c >= 3, "model_count needs at least 3 crossings, got {c}");
    let total = (BigInt::from(1u8) << (c - 2)) + star(c);
    let (q, rem) = total.div_rem(&BigInt::from(3u8));
    assert!(rem.is_zero(), "model count not integral at c={c}");
    q.to_biguint().expect("model count is positive")
}

/// Crossing `i` is a vertical single when `d1` doubles precede it.
pub fn delta_single(i: usize, d1: usize) -> u8 {
    u8::from((i + d1) % 3 != 1)
}

/// Crossing `i` is a vertical double when `d1` doubles precede it.
pub fn delta_double(i: usize, d1: usize) -> u8 {
    u8::from((i + d1) % 3 != 2)
}

fn check_closed_form(c: usize) -> Result<()> {
    if c < 3 {
        return Err(Error::TooFewCrossings(c));
    }
    Ok(())
}

fn residue(x: i64) -> u64 {
    x.rem_euclid(3) as u64
}

/// Number of model words whose crossing `i` is vertically smoothed.
///
/// The `d2` sum over doubles after `i` is a Netto partial sum, so only the
/// doubles `d1` before `i` are summed explicitly.
pub fn index_contribution(c: usize, i: usize) -> Result<BigUint> {
    check_closed_form(c)?;
    if !(2..c).contains(&i) {
        return Err(Error::CrossingIndex { i, max: c - 1 });
    }
    let before = (i - 2) as u64;
    let after = (c - i - 1) as u64;
    let mut total = BigUint::zero();
    for d1 in 0..=i - 2 {
        let ways = binomial(BigUint::from(before), BigUint::from(d1));
        let single = residue(1 - c as i64 - d1 as i64);
        let double = residue(1 - c as i64 - d1 as i64 - 1);
        if delta_single(i, d1) == 1 {
            total += &ways * netto_partial_sum(after, single);
        }
        if delta_double(i, d1) == 1 {
            total += &ways * netto_partial_sum(after, double);
        }
    }
    Ok(total)
}

/// Total number of vertical crossings over all model words with `c` crossings.
pub fn closed_form_vertical_total(c: usize) -> Result<BigUint> {
    check_closed_form(c)?;
    (2..c).map(|i| index_contribution(c, i)).sum()
}

/// Lower bound `(c - 1)/2 - 3V / (2(2^(c-2) + *))` on the average genus.
pub fn lower_bound_avg_genus(c: usize) -> Result<Rational> {
    let v = BigInt::from(closed_form_vertical_total(c)?);
    let words = (BigInt::from(1u8) << (c - 2)) + star(c);
    let bound = num_rational::BigRational::new(BigInt::from(c - 1), BigInt::from(2u8))
        - num_rational::BigRational::new(3 * v, 2 * words);
    Ok(bound.into())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub vertical: u64,
    pub viable: u64,
    pub sequential: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexContribution {
    pub index: usize,
    pub closed_form: u64,
    pub enumerated: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub c: usize,
    pub star: i64,
    pub word_count: u64,
    pub totals: Totals,
    pub avg_s: Rational,
    pub avg_s_lower: Rational,
    pub avg_s_upper: Rational,
    pub avg_genus: Rational,
    pub avg_genus_lower_closed_form: Rational,
    pub closed_form_vertical_total: u64,
    pub per_index_contributions: Vec<IndexContribution>,
    pub knot_class_summary: Option<Vec<KnotClass>>,
}

/// Column names of [`CensusReport::csv_record`].
pub const CENSUS_CSV_HEADER: [&str; 12] = [
    "c",
    "star",
    "word_count",
    "vertical",
    "viable",
    "sequential",
    "avg_s",
    "avg_s_lower",
    "avg_s_upper",
    "avg_genus",
    "avg_genus_lower_closed_form",
    "closed_form_vertical_total",
];

impl CensusReport {
    pub fn csv_record(&self) -> [String; 12] {
        [
            self.c.to_string(),
            self.star.to_string(),
            self.word_count.to_string(),
            self.totals.vertical.to_string(),
            self.totals.viable.to_string(),
            self.totals.sequential.to_string(),
            self.avg_s.to_string(),
            self.avg_s_lower.to_string(),
            self.avg_s_upper.to_string(),
            self.avg_genus.to_string(),
            self.avg_genus_lower_closed_form.to_string(),
            self.closed_form_vertical_total.to_string(),
        ]
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CensusOptions {
    pub execution: Execution,
    /// Whether to group words by knot class; `None` groups up to
    /// [`CLASS_SUMMARY_LIMIT`].
    pub classes: Option<bool>,
}

#[derive(Clone, Debug, Default)]
struct Tally {
    words: u64,
    totals: Totals,
    genus: u64,
    /// Vertical count per 1-based crossing index.
    per_index: Vec<u64>,
}

impl Tally {
    fn add(mut self, r: &RunWord) -> Result<Tally> {
        let d = to_alternating(r)?;
        if self.per_index.is_empty() {
            self.per_index = vec![0; d.crossing_count() + 1];
        }
        self.words += 1;
        self.totals.vertical += d.vertical_count() as u64;
        self.totals.viable += d.viable_count() as u64;
        self.totals.sequential += d.sequential_count() as u64;
        self.genus += d.genus()?;
        for x in d.crossings().iter().filter(|x| x.is_vertical()) {
            self.per_index[x.index] += 1;
        }
        Ok(self)
    }

    fn merge(mut self, other: Tally) -> Tally {
        if self.per_index.is_empty() {
            return other;
        }
        self.words += other.words;
        self.totals.vertical += other.totals.vertical;
        self.totals.viable += other.totals.viable;
        self.totals.sequential += other.totals.sequential;
        self.genus += other.genus;
        for (a, b) in self.per_index.iter_mut().zip(other.per_index) {
            *a += b;
        }
        self
    }
}

fn enumerate_tally(c: usize, exec: Execution) -> Result<Tally> {
    let interior = c as u32 - 2;
    let residue = doubles_residue(c);
    par::try_fold_range(
        exec,
        0..1u64 << interior,
        Tally::default,
        |t, mask| {
            if mask.count_ones() % 3 != residue {
                return Ok(t);
            }
            t.add(&RunWord::from_mask(c, mask))
        },
        Tally::merge,
    )
}

fn to_u64(n: &BigUint, what: &str) -> Result<u64> {
    n.to_u64()
        .ok_or_else(|| Error::Invariant(format!("{what} does not fit in 64 bits")))
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Invariant(what()))
    }
}

pub fn run_census(c: usize) -> Result<CensusReport> {
    run_census_with(c, &CensusOptions::default())
}

/// Enumerates every model word with `c` crossings and cross-checks the
/// totals against the closed forms.
pub fn run_census_with(c: usize, options: &CensusOptions) -> Result<CensusReport> {
    check_crossing_number(c)?;
    if c > MAX_CENSUS_CROSSINGS {
        return Err(Error::CrossingNumber {
            c,
            min: 3,
            max: MAX_CENSUS_CROSSINGS,
        });
    }
    let tally = enumerate_tally(c, options.execution)?;
    let expected = to_u64(&model_count(c), "model count")?;
    check(tally.words == expected, || {
        format!(
            "c={c}: enumerated {} words, formula gives {expected}",
            tally.words
        )
    })?;

    let mut per_index = Vec::with_capacity(c - 2);
    for i in 2..c {
        let closed = to_u64(&index_contribution(c, i)?, "index contribution")?;
        let enumerated = tally.per_index[i];
        check(closed == enumerated, || {
            format!("c={c}, i={i}: closed form {closed}, enumerated {enumerated}")
        })?;
        per_index.push(IndexContribution {
            index: i,
            closed_form: closed,
            enumerated,
        });
    }
    for (a, b) in per_index.iter().zip(per_index.iter().rev()) {
        check(a.closed_form == b.closed_form, || {
            format!("c={c}: contributions at {} and {} differ", a.index, b.index)
        })?;
    }
    // crossings 1 and c are never vertical
    check(tally.per_index[1] == 0 && tally.per_index[c] == 0, || {
        format!("c={c}: an end crossing is vertical")
    })?;
    let closed_total = to_u64(&closed_form_vertical_total(c)?, "vertical total")?;
    check(closed_total == tally.totals.vertical, || {
        format!(
            "c={c}: closed-form vertical total {closed_total}, enumerated {}",
            tally.totals.vertical
        )
    })?;

    let n = tally.words;
    let avg = |extra: u64| Rational::new(2 * n + extra, n);
    let avg_s = avg(tally.totals.viable);
    let avg_genus = Rational::new(tally.genus, n);
    let linear = num_rational::BigRational::new(BigInt::from(c + 1), BigInt::from(2u8))
        - avg_s.as_big() / BigInt::from(2u8);
    check(*avg_genus.as_big() == linear, || {
        format!("c={c}: average genus {avg_genus} is not (c+1)/2 - avg_s/2")
    })?;
    let bound = lower_bound_avg_genus(c)?;
    let ceiling = Rational::new(c - 1, 2);
    check(bound <= avg_genus && avg_genus <= ceiling, || {
        format!("c={c}: expected {bound} <= {avg_genus} <= {ceiling}")
    })?;

    let classes = options.classes.unwrap_or(c <= CLASS_SUMMARY_LIMIT);
    Ok(CensusReport {
        c,
        star: star(c),
        word_count: n,
        totals: tally.totals,
        avg_s_lower: avg(tally.totals.sequential),
        avg_s_upper: avg(tally.totals.vertical),
        avg_s,
        avg_genus,
        avg_genus_lower_closed_form: bound,
        closed_form_vertical_total: closed_total,
        per_index_contributions: per_index,
        knot_class_summary: if classes {
            Some(group_by_knot(c)?)
        } else {
            None
        },
    })
}

/// Per-word analyses in enumeration order.
pub fn analyze_all(c: usize, exec: Execution) -> Result<Vec<WordAnalysis>> {
    let words: Vec<RunWord> = enumerate_model_words(c)?.collect();
    par::map(exec, &words, analyze).into_iter().collect()
}
