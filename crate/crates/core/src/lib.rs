//! Census of 2-bridge knots through reduced 3-strand billiard table words.
//!
//! Every 2-bridge knot with crossing number `c` is represented, once or
//! twice, by a *model word*: a reduced `±` word with `c` runs of length one
//! or two. This crate enumerates the model, counts Seifert circles and genus
//! with a positional rule, evaluates the closed-form lower bound on the
//! average genus, and checks all of it against explicit planar diagrams.
//!
//! ```
//! use bridge_census::{analyze, run_census, Rational, RunWord, Sign};
//!
//! let r = RunWord::new(Sign::Plus, vec![1, 2, 1, 1, 1, 1]).unwrap();
//! let a = analyze(&r).unwrap();
//! assert_eq!((a.s, a.genus, a.name.as_str()), (3, 2, "6_2"));
//!
//! let report = run_census(6).unwrap();
//! assert_eq!(report.avg_genus, Rational::new(8, 5));
//! assert_eq!(report.avg_genus_lower_closed_form, Rational::new(11, 10));
//! ```

pub mod analysis;
pub mod census;
pub mod check;
pub mod diagram;
pub mod error;
pub mod exact;
pub mod oracle;
pub mod par;
pub mod rational;
pub mod word;

pub use analysis::{analyze, WordAnalysis};
pub use census::{
    closed_form_vertical_total, index_contribution, lower_bound_avg_genus, model_count,
    netto_partial_sum, run_census, run_census_with, star, CensusOptions, CensusReport,
};
pub use check::{run_check, CheckReport};
pub use diagram::{to_alternating, AlternatingDiagram, Generator, Smoothing};
pub use error::{Error, Result};
pub use exact::Rational;
pub use par::Execution;
pub use rational::{group_by_knot, word_class, CanonicalClass, Fraction, KnotClass};
pub use word::{
    enumerate_model_words, normalize_to_model, sample, BilliardWord, Normalized, RunWord, Sign,
};
