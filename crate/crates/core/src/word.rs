//! Billiard table words over `{+, -}`, the two reduction moves, and the
//! run-length form of reduced words.
//!
//! A reduced word of crossing number `c` is `(+)^e1 (-)^e2 ... ` with
//! `e1 = ec = 1` and every interior `ei` in `{1, 2}`. Model words are the
//! reduced words that start with `+` and have total length `≡ 1 (mod 3)`;
//! every 2-bridge knot with `c` crossings appears once or twice among them.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest crossing number the enumerator accepts (interior choices are
/// indexed by a `u64` bit mask). Enumeration is practical up to about 34.
pub const MAX_ENUMERATED_CROSSINGS: usize = 62;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn mirror(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    /// Sign of the `i`-th run (1-based) of an alternating run word.
    fn alternate(first: Sign, i: usize) -> Sign {
        if i % 2 == 1 {
            first
        } else {
            first.mirror()
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A finite, possibly unreduced, word in `{+, -}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BilliardWord(Vec<Sign>);

impl BilliardWord {
    pub fn new(letters: Vec<Sign>) -> Self {
        BilliardWord(letters)
    }

    /// Parses `+`/`-` text; ASCII and Unicode whitespace is skipped.
    /// Error positions are 1-based character columns.
    pub fn parse(text: &str) -> Result<Self> {
        let mut letters = Vec::with_capacity(text.len());
        for (idx, ch) in text.chars().enumerate() {
            match ch {
                '+' => letters.push(Sign::Plus),
                '-' => letters.push(Sign::Minus),
                c if c.is_whitespace() => {}
                found => {
                    return Err(Error::Parse {
                        position: idx + 1,
                        found,
                    })
                }
            }
        }
        Ok(BilliardWord(letters))
    }

    pub fn letters(&self) -> &[Sign] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mirror(&self) -> BilliardWord {
        BilliardWord(self.0.iter().map(|s| s.mirror()).collect())
    }

    pub fn reverse(&self) -> BilliardWord {
        BilliardWord(self.0.iter().rev().copied().collect())
    }

    /// Applies reduction moves until none applies.
    ///
    /// Each round deletes the leftmost triple if there is one, otherwise a
    /// start pattern `++-`/`--+`, otherwise an end pattern `-++`/`+--`.
    pub fn reduce(&self) -> BilliardWord {
        let mut w = self.0.clone();
        loop {
            if let Some(i) = leftmost_triple(&w) {
                w.drain(i..i + 3);
            } else if has_start_move(&w) {
                w.drain(0..3);
            } else if has_end_move(&w) {
                w.truncate(w.len() - 3);
            } else {
                return BilliardWord(w);
            }
        }
    }

    pub fn is_reduced(&self) -> bool {
        leftmost_triple(&self.0).is_none() && !has_start_move(&self.0) && !has_end_move(&self.0)
    }

    /// Maximal runs as `(sign, length)` pairs.
    pub fn maximal_runs(&self) -> Vec<(Sign, usize)> {
        let mut runs: Vec<(Sign, usize)> = Vec::new();
        for &s in &self.0 {
            match runs.last_mut() {
                Some((last, n)) if *last == s => *n += 1,
                _ => runs.push((s, 1)),
            }
        }
        runs
    }

    /// Run-length encoding of a reduced word.
    pub fn to_runs(&self) -> Result<RunWord> {
        let runs = self.maximal_runs();
        let Some(&(first_sign, _)) = runs.first() else {
            return Err(Error::NotReducedForm("empty word".into()));
        };
        if let Some((pos, &(_, n))) = runs.iter().enumerate().find(|(_, (_, n))| *n >= 3) {
            return Err(Error::NotReducedForm(format!(
                "run {} of {self} has length {n}",
                pos + 1
            )));
        }
        if runs[0].1 != 1 || runs[runs.len() - 1].1 != 1 {
            return Err(Error::NotReducedForm(format!(
                "{self} must begin and end with a single letter"
            )));
        }
        let lengths = runs.iter().map(|&(_, n)| n as u8).collect();
        RunWord::new(first_sign, lengths)
    }
}

fn leftmost_triple(w: &[Sign]) -> Option<usize> {
    w.windows(3).position(|t| t[0] == t[1] && t[1] == t[2])
}

fn has_start_move(w: &[Sign]) -> bool {
    w.len() >= 3 && w[0] == w[1] && w[1] != w[2]
}

fn has_end_move(w: &[Sign]) -> bool {
    let n = w.len();
    n >= 3 && w[n - 3] != w[n - 2] && w[n - 2] == w[n - 1]
}

impl fmt::Display for BilliardWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for BilliardWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BilliardWord::parse(s)
    }
}

#[derive(Deserialize)]
struct RawRunWord {
    first_sign: Sign,
    runs: Vec<u8>,
}

impl TryFrom<RawRunWord> for RunWord {
    type Error = Error;

    fn try_from(raw: RawRunWord) -> Result<Self> {
        RunWord::new(raw.first_sign, raw.runs)
    }
}

/// Run-length form of a reduced word: alternating signs starting at
/// `first_sign`, run lengths in `{1, 2}` with single first and last runs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawRunWord")]
pub struct RunWord {
    first_sign: Sign,
    runs: Vec<u8>,
}

impl RunWord {
    pub fn new(first_sign: Sign, runs: Vec<u8>) -> Result<Self> {
        if runs.is_empty() {
            return Err(Error::InvalidRuns("no runs".into()));
        }
        if let Some(bad) = runs.iter().find(|&&e| e != 1 && e != 2) {
            return Err(Error::InvalidRuns(format!(
                "run length {bad} is not 1 or 2"
            )));
        }
        if runs[0] != 1 || runs[runs.len() - 1] != 1 {
            return Err(Error::InvalidRuns(
                "first and last runs must have length 1".into(),
            ));
        }
        Ok(RunWord { first_sign, runs })
    }

    /// Model word with `c` runs whose interior doubles are the set bits of
    /// `mask` (bit `j` is run `j + 2`). The caller guarantees the length
    /// congruence.
    pub(crate) fn from_mask(c: usize, mask: u64) -> RunWord {
        let mut runs = vec![1u8; c];
        for (j, run) in runs[1..c - 1].iter_mut().enumerate() {
            if mask >> j & 1 == 1 {
                *run = 2;
            }
        }
        RunWord {
            first_sign: Sign::Plus,
            runs,
        }
    }

    pub fn first_sign(&self) -> Sign {
        self.first_sign
    }

    pub fn runs(&self) -> &[u8] {
        &self.runs
    }

    /// Number of runs, which is the crossing number `c` of the alternating diagram.
    pub fn crossing_count(&self) -> usize {
        self.runs.len()
    }

    pub fn double_count(&self) -> usize {
        self.runs.iter().filter(|&&e| e == 2).count()
    }

    /// Reduced length `ℓ = Σ εi`.
    pub fn length(&self) -> usize {
        self.runs.iter().map(|&e| e as usize).sum()
    }

    /// Sign of run `i` (1-based).
    pub fn run_sign(&self, i: usize) -> Sign {
        Sign::alternate(self.first_sign, i)
    }

    pub fn is_model(&self) -> bool {
        self.first_sign == Sign::Plus && self.length() % 3 == 1 && self.crossing_count() >= 3
    }

    pub fn to_word(&self) -> BilliardWord {
        let mut letters = Vec::with_capacity(self.length());
        for (i, &e) in self.runs.iter().enumerate() {
            let s = self.run_sign(i + 1);
            letters.extend(std::iter::repeat_n(s, e as usize));
        }
        BilliardWord(letters)
    }

    pub fn mirror(&self) -> RunWord {
        RunWord {
            first_sign: self.first_sign.mirror(),
            runs: self.runs.clone(),
        }
    }

    pub fn reverse(&self) -> RunWord {
        let last = self.run_sign(self.crossing_count());
        RunWord {
            first_sign: last,
            runs: self.runs.iter().rev().copied().collect(),
        }
    }

    /// Swaps every interior run length `1 <-> 2`; the result has reduced
    /// length `3c - 2 - ℓ`.
    pub fn toggle_interior(&self) -> RunWord {
        let c = self.runs.len();
        let mut runs = self.runs.clone();
        if c > 2 {
            for e in &mut runs[1..c - 1] {
                *e = 3 - *e;
            }
        }
        RunWord {
            first_sign: self.first_sign,
            runs,
        }
    }

    /// Model words equal to their own reversal (after mirroring back to a
    /// leading `+` when `c` is even) appear once in the model instead of twice.
    pub fn is_palindromic_type(&self) -> bool {
        self.runs.iter().eq(self.runs.iter().rev())
    }

    /// Interior doubles as a bit mask (bit `j` is run `j + 2`).
    pub fn interior_mask(&self) -> u64 {
        let c = self.runs.len();
        if c <= 2 {
            return 0;
        }
        self.runs[1..c - 1]
            .iter()
            .enumerate()
            .filter(|(_, &e)| e == 2)
            .fold(0u64, |m, (j, _)| m | 1 << j)
    }

    /// Compact digit string of the run lengths, e.g. `121`.
    pub fn runs_string(&self) -> String {
        self.runs.iter().map(|e| char::from(b'0' + e)).collect()
    }
}

impl fmt::Display for RunWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

/// Result of bringing an arbitrary word into the model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normalized {
    ModelWord(RunWord),
    Unknot,
    /// Reduced length `≡ 2 (mod 3)`: the 3-strand closure is a 2-component link.
    OutOfScopeLink,
}

/// Reduces `w` and moves it into the model by mirroring and toggling
/// interior runs, each of which preserves the knot type up to mirror image.
pub fn normalize_to_model(w: &BilliardWord) -> Normalized {
    let reduced = w.reduce();
    let len = reduced.len();
    if len <= 1 {
        return Normalized::Unknot;
    }
    if len % 3 == 2 {
        return Normalized::OutOfScopeLink;
    }
    let mut runs = reduced
        .to_runs()
        .expect("reduced words of length >= 3 are in run form");
    if runs.first_sign() == Sign::Minus {
        runs = runs.mirror();
    }
    if runs.length().is_multiple_of(3) {
        runs = runs.toggle_interior();
    }
    debug_assert!(runs.is_model());
    Normalized::ModelWord(runs)
}

pub(crate) fn check_crossing_number(c: usize) -> Result<()> {
    if (3..=MAX_ENUMERATED_CROSSINGS).contains(&c) {
        Ok(())
    } else {
        Err(Error::CrossingNumber {
            c,
            min: 3,
            max: MAX_ENUMERATED_CROSSINGS,
        })
    }
}

/// Residue of the doubles count that model words with `c` runs must have.
pub(crate) fn doubles_residue(c: usize) -> u32 {
    ((4 - c % 3) % 3) as u32
}

/// Every model word with `c` runs, grouped by increasing number of doubles
/// and, within a group, by the doubles' interior indices in lexicographic order.
pub fn enumerate_model_words(c: usize) -> Result<ModelWords> {
    check_crossing_number(c)?;
    let slots = c - 2;
    let mut doubles = doubles_residue(c) as usize;
    let current = if doubles <= slots {
        Some((0..doubles).collect())
    } else {
        doubles = slots + 1;
        None
    };
    Ok(ModelWords {
        c,
        doubles,
        current,
    })
}

/// Streaming iterator returned by [`enumerate_model_words`].
#[derive(Clone, Debug)]
pub struct ModelWords {
    c: usize,
    doubles: usize,
    /// Interior slot indices (0-based) of the next subset to yield.
    current: Option<Vec<usize>>,
}

impl ModelWords {
    fn advance(&mut self) {
        let slots = self.c - 2;
        let Some(comb) = self.current.as_mut() else {
            return;
        };
        let k = comb.len();
        // Next k-subset in lexicographic order.
        let mut i = k;
        while i > 0 && comb[i - 1] == slots - k + i - 1 {
            i -= 1;
        }
        if i > 0 {
            comb[i - 1] += 1;
            for j in i..k {
                comb[j] = comb[j - 1] + 1;
            }
            return;
        }
        self.doubles += 3;
        self.current = (self.doubles <= slots).then(|| (0..self.doubles).collect());
    }
}

impl Iterator for ModelWords {
    type Item = RunWord;

    fn next(&mut self) -> Option<RunWord> {
        let comb = self.current.as_ref()?;
        let mask = comb.iter().fold(0u64, |m, &j| m | 1 << j);
        let word = RunWord::from_mask(self.c, mask);
        self.advance();
        Some(word)
    }
}

/// Deterministic stream of `count` uniform words in `{+, -}^n`.
pub fn sample(n: usize, count: usize, seed: u64) -> Sampler {
    Sampler {
        rng: ChaCha8Rng::seed_from_u64(seed),
        n,
        remaining: count,
    }
}

#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
    n: usize,
    remaining: usize,
}

impl Iterator for Sampler {
    type Item = BilliardWord;

    fn next(&mut self) -> Option<BilliardWord> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let letters = (0..self.n)
            .map(|_| {
                if self.rng.gen::<bool>() {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            })
            .collect();
        Some(BilliardWord(letters))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining, Some(self.remaining))
    }
}

impl ExactSizeIterator for Sampler {}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::{BTreeSet, HashSet};

    fn w(s: &str) -> BilliardWord {
        s.parse().unwrap()
    }

    fn runs(first: Sign, e: &[u8]) -> RunWord {
        RunWord::new(first, e.to_vec()).unwrap()
    }

    /// Every word reachable by any single move.
    fn one_move(word: &[Sign]) -> Vec<Vec<Sign>> {
        let mut out = Vec::new();
        for i in 0..word.len().saturating_sub(2) {
            if word[i] == word[i + 1] && word[i + 1] == word[i + 2] {
                let mut v = word.to_vec();
                v.drain(i..i + 3);
                out.push(v);
            }
        }
        if has_start_move(word) {
            out.push(word[3..].to_vec());
        }
        if has_end_move(word) {
            out.push(word[..word.len() - 3].to_vec());
        }
        out
    }

    /// All terminal words over every maximal move sequence.
    fn fixpoints(word: Vec<Sign>) -> BTreeSet<Vec<Sign>> {
        let mut seen = HashSet::new();
        let mut stack = vec![word];
        let mut terminal = BTreeSet::new();
        while let Some(v) = stack.pop() {
            if !seen.insert(v.clone()) {
                continue;
            }
            let next = one_move(&v);
            if next.is_empty() {
                terminal.insert(v);
            }
            stack.extend(next);
        }
        terminal
    }

    fn all_words(n: usize) -> impl Iterator<Item = BilliardWord> {
        (0..1u32 << n).map(move |bits| {
            BilliardWord(
                (0..n)
                    .map(|i| {
                        if bits >> i & 1 == 1 {
                            Sign::Minus
                        } else {
                            Sign::Plus
                        }
                    })
                    .collect(),
            )
        })
    }

    #[test]
    fn parse_examples() {
        assert!(w("").is_empty());
        use Sign::*;
        assert_eq!(w("+--+").letters(), &[Plus, Minus, Minus, Plus]);
        assert_eq!(
            w("+ -- +-+-").letters(),
            &[Plus, Minus, Minus, Plus, Minus, Plus, Minus]
        );
        assert_eq!(
            BilliardWord::parse("+-x+"),
            Err(Error::Parse {
                position: 3,
                found: 'x'
            })
        );
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(w("+++").reduce(), w(""));
        assert_eq!(fixpoints(w("++-+").0), BTreeSet::from([w("+").0]));
        assert_eq!(w("++-+").reduce(), w("+"));
        assert_eq!(w("+--+-+-").reduce(), w("+--+-+-"));
    }

    #[test]
    fn reduction_is_confluent_up_to_length_12() {
        // Below length 3 the moves can end on either of a mirror pair
        // ("--++" gives "+" or "-"); the classification still agrees.
        let mut ambiguous = 0;
        for n in 0..=12 {
            for word in all_words(n) {
                let reduced = word.reduce();
                let ends = fixpoints(word.0.clone());
                assert!(ends.contains(&reduced.0), "{word}");
                assert_eq!(reduced.len() % 3, n % 3);
                assert!(reduced.is_reduced());
                if reduced.len() >= 3 {
                    assert_eq!(ends.len(), 1, "{word} has several fixpoints");
                } else if ends.len() > 1 {
                    ambiguous += 1;
                    assert_eq!(ends.len(), 2, "{word}");
                    assert!(ends.contains(&reduced.mirror().0), "{word}");
                }
                let class = normalize_to_model(&reduced);
                for end in ends {
                    assert_eq!(normalize_to_model(&BilliardWord(end)), class, "{word}");
                }
            }
        }
        assert_eq!(ambiguous, 400);
    }

    #[test]
    fn run_form_examples() {
        assert_eq!(
            w("+--+-+-").to_runs().unwrap(),
            runs(Sign::Plus, &[1, 2, 1, 1, 1, 1])
        );
        assert_eq!(w("+-+").to_runs().unwrap(), runs(Sign::Plus, &[1, 1, 1]));
        assert_eq!(
            w("+--++--++-").to_runs().unwrap(),
            runs(Sign::Plus, &[1, 2, 2, 2, 2, 1])
        );
        assert!(matches!(
            w("+---+").to_runs(),
            Err(Error::NotReducedForm(_))
        ));
        assert!(matches!(w("++-+").to_runs(), Err(Error::NotReducedForm(_))));
        assert!(matches!(w("+-++").to_runs(), Err(Error::NotReducedForm(_))));
    }

    #[test]
    fn from_runs_examples() {
        assert_eq!(runs(Sign::Plus, &[1, 2, 1]).to_word(), w("+--+"));
        assert_eq!(
            runs(Sign::Plus, &[1, 2, 1, 1, 1, 1]).to_word(),
            w("+--+-+-")
        );
        let r = runs(Sign::Plus, &[1, 1, 2, 1, 2, 1]);
        assert_eq!(r.to_word(), w("+-++-++-"));
        assert_eq!(r.length(), 8);
        // a trailing double is not a run word
        assert!(RunWord::new(Sign::Plus, vec![1, 1, 2, 1, 2]).is_err());
    }

    #[test]
    fn run_word_rejects_bad_lengths() {
        assert!(RunWord::new(Sign::Plus, vec![]).is_err());
        assert!(RunWord::new(Sign::Plus, vec![1, 3, 1]).is_err());
        assert!(RunWord::new(Sign::Plus, vec![2, 1, 1]).is_err());
    }

    #[test]
    fn enumeration_small_cases() {
        let c3: Vec<_> = enumerate_model_words(3).unwrap().collect();
        assert_eq!(c3, vec![runs(Sign::Plus, &[1, 2, 1])]);

        let c6: Vec<String> = enumerate_model_words(6)
            .unwrap()
            .map(|r| r.to_string())
            .collect();
        assert_eq!(
            c6,
            ["+--+-+-", "+-++-+-", "+-+--+-", "+-+-++-", "+--++--++-"]
        );
        assert_eq!(enumerate_model_words(7).unwrap().count(), 11);
        assert_eq!(enumerate_model_words(4).unwrap().count(), 1);
        assert!(enumerate_model_words(2).is_err());
    }

    #[test]
    fn enumeration_yields_distinct_model_words() {
        for c in 3..=14 {
            let words: Vec<_> = enumerate_model_words(c).unwrap().collect();
            let distinct: HashSet<_> = words.iter().map(|r| r.runs().to_vec()).collect();
            assert_eq!(distinct.len(), words.len());
            for r in &words {
                assert!(r.is_model(), "{r}");
                assert_eq!(r.crossing_count(), c);
            }
            // Grouped by doubles, lexicographic within a group.
            for pair in words.windows(2) {
                let (a, b) = (&pair[0], &pair[1]);
                assert!(a.double_count() <= b.double_count());
                if a.double_count() == b.double_count() {
                    let sa: Vec<_> = (0..c).filter(|&i| a.runs()[i] == 2).collect();
                    let sb: Vec<_> = (0..c).filter(|&i| b.runs()[i] == 2).collect();
                    assert!(sa < sb);
                }
            }
        }
    }

    #[test]
    fn palindromic_type_examples() {
        assert!(runs(Sign::Plus, &[1, 2, 2, 2, 2, 1]).is_palindromic_type());
        assert!(!runs(Sign::Plus, &[1, 2, 1, 1, 1, 1]).is_palindromic_type());
        assert!(runs(Sign::Plus, &[1, 1, 1]).is_palindromic_type());
    }

    #[test]
    fn palindromic_type_matches_word_reversal() {
        for c in 3..=12 {
            for r in enumerate_model_words(c).unwrap() {
                let mut back = r.to_word().reverse();
                if back.letters()[0] == Sign::Minus {
                    back = back.mirror();
                }
                assert_eq!(r.is_palindromic_type(), back == r.to_word(), "{r}");
            }
        }
    }

    #[test]
    fn mirror_and_toggle_examples() {
        assert_eq!(w("+--+").mirror(), w("-++-"));
        let t = runs(Sign::Plus, &[1, 2, 1]).toggle_interior();
        assert_eq!(t, runs(Sign::Plus, &[1, 1, 1]));
        assert_eq!(t.length(), 3);
    }

    #[test]
    fn toggle_lengths_sum_to_3c_minus_2() {
        for c in 3..=12 {
            for r in enumerate_model_words(c).unwrap() {
                let t = r.toggle_interior();
                assert_eq!(r.length() + t.length(), 3 * c - 2);
                assert_eq!(t.length() % 3, 0);
                let interior_doubles = r.double_count();
                let delta = t.length() as i64 - r.length() as i64;
                assert_eq!(delta, (c as i64 - 2) - 2 * interior_doubles as i64);
                assert_eq!(t.toggle_interior(), r);
            }
        }
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_to_model(&w("+++")), Normalized::Unknot);
        assert_eq!(
            normalize_to_model(&w("-++-+-+")),
            Normalized::ModelWord(runs(Sign::Plus, &[1, 2, 1, 1, 1, 1]))
        );
        assert_eq!(normalize_to_model(&w("+-")), Normalized::OutOfScopeLink);
        // length 3 reduced word toggles into the trefoil word
        assert_eq!(
            normalize_to_model(&w("+-+")),
            Normalized::ModelWord(runs(Sign::Plus, &[1, 2, 1]))
        );
    }

    #[test]
    fn sampler_is_deterministic_and_sized() {
        let a: Vec<_> = sample(9, 50, 7).collect();
        let b: Vec<_> = sample(9, 50, 7).collect();
        assert_eq!(a, b);
        assert!(a.iter().all(|x| x.len() == 9));
        assert_ne!(a, sample(9, 50, 8).collect::<Vec<_>>());
        assert!(sample(1, 20, 3).all(|x| x == w("+") || x == w("-")));
    }

    /// 3-sigma binomial agreement of sampled class frequencies with the
    /// exhaustive distribution over `{+,-}^n`.
    fn sampled_matches_exhaustive(n: usize, count: usize, seed: u64) {
        use std::collections::HashMap;
        let key = |x: &BilliardWord| format!("{:?}", normalize_to_model(x));
        let mut exact: HashMap<String, f64> = HashMap::new();
        let total = (1u64 << n) as f64;
        for x in all_words(n) {
            *exact.entry(key(&x)).or_default() += 1.0 / total;
        }
        let mut seen: HashMap<String, f64> = HashMap::new();
        for x in sample(n, count, seed) {
            *seen.entry(key(&x)).or_default() += 1.0;
        }
        for (k, seen_count) in &seen {
            assert!(exact.contains_key(k), "sampled class {k} is impossible");
            let _ = seen_count;
        }
        for (k, p) in exact {
            let got = seen.get(&k).copied().unwrap_or(0.0) / count as f64;
            let sigma = (p * (1.0 - p) / count as f64).sqrt();
            assert!((got - p).abs() <= 3.0 * sigma + 1e-12, "{k}: {got} vs {p}");
        }
    }

    #[test]
    fn sampled_unknot_fraction_n4() {
        sampled_matches_exhaustive(4, 10_000, 2024);
    }

    #[test]
    fn sampled_model_distribution_n7() {
        sampled_matches_exhaustive(7, 10_000, 99);
    }

    #[test]
    fn run_word_json() {
        let r = runs(Sign::Plus, &[1, 2, 1]);
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(text, r#"{"first_sign":"+","runs":[1,2,1]}"#);
        let back: RunWord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert!(serde_json::from_str::<RunWord>(r#"{"first_sign":"+","runs":[2,1]}"#).is_err());
    }

    fn arb_word(max: usize) -> impl Strategy<Value = BilliardWord> {
        proptest::collection::vec(prop_oneof![Just(Sign::Plus), Just(Sign::Minus)], 0..max)
            .prop_map(BilliardWord)
    }

    fn arb_runs() -> impl Strategy<Value = RunWord> {
        (
            prop_oneof![Just(Sign::Plus), Just(Sign::Minus)],
            proptest::collection::vec(1u8..=2, 0..20),
        )
            .prop_map(|(s, mut inner)| {
                inner.insert(0, 1);
                inner.push(1);
                RunWord::new(s, inner).unwrap()
            })
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent_and_keeps_residue(word in arb_word(60)) {
            let r = word.reduce();
            prop_assert_eq!(r.reduce(), r.clone());
            prop_assert_eq!(r.len() % 3, word.len() % 3);
        }

        #[test]
        fn runs_round_trip(r in arb_runs()) {
            let word = r.to_word();
            prop_assert_eq!(word.len(), r.length());
            prop_assert_eq!(word.to_runs().unwrap(), r);
        }

        #[test]
        fn normalized_words_are_model(word in arb_word(60)) {
            if let Normalized::ModelWord(r) = normalize_to_model(&word) {
                prop_assert!(r.is_model());
                prop_assert!(r.to_word().is_reduced());
            }
        }
    }
}
