//! One-record summary of a model word.

use serde::Serialize;

use crate::diagram::to_alternating;
use crate::error::{Error, Result};
use crate::rational::{canonical_class, diagram_fraction, knot_name};
use crate::word::RunWord;

/// Column order of [`WordAnalysis::csv_record`].
pub const CSV_HEADER: [&str; 15] = [
    "word",
    "runs",
    "alternating",
    "smoothings",
    "vertical",
    "viable",
    "sequential",
    "s",
    "s_lower",
    "s_upper",
    "genus",
    "p",
    "q",
    "name",
    "palindromic",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WordAnalysis {
    pub word: String,
    pub runs: String,
    pub alternating: String,
    pub smoothings: String,
    pub vertical: usize,
    pub viable: usize,
    pub sequential: usize,
    pub s: usize,
    pub s_lower: usize,
    pub s_upper: usize,
    pub genus: u64,
    pub p: String,
    pub q: String,
    /// Table name such as `6_2`, or `p/q*` beyond the table.
    pub name: String,
    pub palindromic: bool,
    /// 1-based indices of the viable vertical crossings.
    pub viable_crossings: Vec<usize>,
}

pub fn analyze(r: &RunWord) -> Result<WordAnalysis> {
    let d = to_alternating(r)?;
    let fraction = diagram_fraction(&d)?;
    let class = canonical_class(&fraction);
    let name = knot_name(&class).map_or_else(|| class.display_name(), str::to_string);
    let (s_lower, s_upper) = d.seifert_bounds();
    let s = d.seifert_circle_count();
    if !(s_lower..=s_upper).contains(&s) {
        return Err(Error::Invariant(format!(
            "{r}: s = {s} outside [{s_lower}, {s_upper}]"
        )));
    }
    Ok(WordAnalysis {
        word: r.to_word().to_string(),
        runs: r.runs_string(),
        alternating: d.alternating_word(),
        smoothings: d.smoothing_string(),
        vertical: d.vertical_count(),
        viable: d.viable_count(),
        sequential: d.sequential_count(),
        s,
        s_lower,
        s_upper,
        genus: d.genus()?,
        p: fraction.p().to_string(),
        q: fraction.q().to_string(),
        name,
        palindromic: r.is_palindromic_type(),
        viable_crossings: d
            .crossings()
            .iter()
            .filter(|x| x.viable)
            .map(|x| x.index)
            .collect(),
    })
}

impl WordAnalysis {
    /// Fields in [`CSV_HEADER`] order.
    pub fn csv_record(&self) -> [String; 15] {
        [
            self.word.clone(),
            self.runs.clone(),
            self.alternating.clone(),
            self.smoothings.clone(),
            self.vertical.to_string(),
            self.viable.to_string(),
            self.sequential.to_string(),
            self.s.to_string(),
            self.s_lower.to_string(),
            self.s_upper.to_string(),
            self.genus.to_string(),
            self.p.clone(),
            self.q.clone(),
            self.name.clone(),
            self.palindromic.to_string(),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Sign;

    fn run(e: &[u8]) -> WordAnalysis {
        analyze(&RunWord::new(Sign::Plus, e.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let a = run(&[1, 2, 1, 1, 1, 1]);
        assert_eq!((a.s, a.genus, a.name.as_str()), (3, 2, "6_2"));
        assert_eq!(a.word, "+--+-+-");
        assert_eq!(a.alternating, "s1^3 s2^-1 s1 s2^-1");
        assert_eq!(a.smoothings, "HHHVVH");
        assert_eq!((a.p.as_str(), a.q.as_str()), ("11", "3"));

        let a = run(&[1, 1, 2, 2, 2, 1, 1]);
        assert_eq!((a.s, a.genus, a.name.as_str()), (6, 1, "7_4"));

        let a = run(&[1, 2, 1]);
        assert_eq!((a.s, a.genus, a.name.as_str()), (2, 1, "3_1"));
        assert!(a.palindromic);
    }

    #[test]
    fn unnamed_classes_show_the_fraction() {
        let a = run(&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1]);
        assert!(a.name.contains('/'), "{}", a.name);
    }

    #[test]
    fn rejects_non_model_words() {
        assert!(analyze(&RunWord::new(Sign::Plus, vec![1, 1]).unwrap()).is_err());
    }

    #[test]
    fn csv_record_matches_header() {
        let a = run(&[1, 2, 1]);
        assert_eq!(a.csv_record().len(), CSV_HEADER.len());
        assert_eq!(a.csv_record()[0], "+--+");
    }
}
