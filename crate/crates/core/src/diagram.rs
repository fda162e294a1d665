//! Alternating plat diagrams of model words and the combinatorial count of
//! Seifert circles.
//!
//! Each run of a model word collapses to one crossing of a 3-strand
//! alternating diagram. Whether that crossing is smoothed vertically or
//! horizontally by Seifert's algorithm depends only on where the run starts
//! in the word (mod 3), and the circle count is two more than the number of
//! *viable* vertical crossings.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{RunWord, Sign};

/// Generator of a crossing in the 3-strand diagram: `σ1` sits at the lower
/// height (strands 1-2), `σ2⁻¹` at the upper height (strands 2-3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    SigmaOne,
    SigmaTwoInverse,
}

impl Generator {
    /// Crossing produced by a run: `(+,1), (-,2) -> σ1` and `(+,2), (-,1) -> σ2⁻¹`.
    pub fn for_run(sign: Sign, length: u8) -> Generator {
        match (sign, length) {
            (Sign::Plus, 1) | (Sign::Minus, 2) => Generator::SigmaOne,
            _ => Generator::SigmaTwoInverse,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Generator::SigmaOne => "s1",
            Generator::SigmaTwoInverse => "s2",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Smoothing {
    V,
    H,
}

impl Smoothing {
    pub fn as_char(self) -> char {
        match self {
            Smoothing::V => 'V',
            Smoothing::H => 'H',
        }
    }
}

/// Smoothing of the crossing coming from a run of `run_length` letters
/// starting at 1-based `start_position` in the reduced word.
pub fn classify_smoothing(run_length: u8, start_position: usize) -> Smoothing {
    let horizontal_residue = if run_length == 1 { 1 } else { 2 };
    if start_position % 3 == horizontal_residue {
        Smoothing::H
    } else {
        Smoothing::V
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingInfo {
    /// 1-based crossing index, left to right.
    pub index: usize,
    pub generator: Generator,
    pub run_sign: Sign,
    pub run_length: u8,
    /// 1-based position in the reduced word where the run starts.
    pub start_position: usize,
    pub smoothing: Smoothing,
    pub viable: bool,
    pub sequential: bool,
}

impl CrossingInfo {
    /// Doubles among the runs before this one (`d1(i)`).
    pub fn doubles_before(&self) -> usize {
        self.start_position - self.index
    }

    pub fn is_vertical(&self) -> bool {
        self.smoothing == Smoothing::V
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternatingDiagram {
    crossings: Vec<CrossingInfo>,
}

/// Builds the alternating diagram of a model word with smoothings and
/// viability already marked.
pub fn to_alternating(r: &RunWord) -> Result<AlternatingDiagram> {
    if !r.is_model() {
        return Err(Error::NotModelWord(r.to_string()));
    }
    let mut crossings = Vec::with_capacity(r.crossing_count());
    let mut start = 1;
    for (k, &len) in r.runs().iter().enumerate() {
        let sign = r.run_sign(k + 1);
        crossings.push(CrossingInfo {
            index: k + 1,
            generator: Generator::for_run(sign, len),
            run_sign: sign,
            run_length: len,
            start_position: start,
            smoothing: classify_smoothing(len, start),
            viable: false,
            sequential: false,
        });
        start += len as usize;
    }
    let mut diagram = AlternatingDiagram { crossings };
    diagram.mark_viability();
    Ok(diagram)
}

impl AlternatingDiagram {
    pub fn crossings(&self) -> &[CrossingInfo] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.crossings.iter().map(|x| x.generator)
    }

    pub fn smoothings(&self) -> Vec<Smoothing> {
        self.crossings.iter().map(|x| x.smoothing).collect()
    }

    /// Recomputes every smoothing from run lengths and start positions.
    pub fn classify_smoothings(&mut self) {
        for x in &mut self.crossings {
            x.smoothing = classify_smoothing(x.run_length, x.start_position);
        }
    }

    /// A vertical crossing is viable when the next vertical crossing has the
    /// same generator or there is no next one; it is sequential when the
    /// very next crossing is vertical with the same generator.
    pub fn mark_viability(&mut self) {
        let verticals: Vec<usize> = (0..self.crossings.len())
            .filter(|&k| self.crossings[k].is_vertical())
            .collect();
        for x in &mut self.crossings {
            x.viable = false;
            x.sequential = false;
        }
        for (n, &k) in verticals.iter().enumerate() {
            let g = self.crossings[k].generator;
            let viable = match verticals.get(n + 1) {
                None => true,
                Some(&next) => self.crossings[next].generator == g,
            };
            let sequential = verticals.get(n + 1).is_some()
                && self
                    .crossings
                    .get(k + 1)
                    .is_some_and(|y| y.is_vertical() && y.generator == g);
            self.crossings[k].viable = viable;
            self.crossings[k].sequential = sequential;
        }
    }

    pub fn vertical_count(&self) -> usize {
        self.crossings.iter().filter(|x| x.is_vertical()).count()
    }

    pub fn viable_count(&self) -> usize {
        self.crossings.iter().filter(|x| x.viable).count()
    }

    pub fn sequential_count(&self) -> usize {
        self.crossings.iter().filter(|x| x.sequential).count()
    }

    /// Doubles among the runs after crossing `i` (`d2(i)`).
    pub fn doubles_after(&self, i: usize) -> usize {
        self.crossings[i..]
            .iter()
            .filter(|x| x.run_length == 2)
            .count()
    }

    pub fn seifert_circle_count(&self) -> usize {
        2 + self.viable_count()
    }

    /// `(2 + #sequential, 2 + #vertical)`.
    pub fn seifert_bounds(&self) -> (usize, usize) {
        (2 + self.sequential_count(), 2 + self.vertical_count())
    }

    pub fn genus(&self) -> Result<u64> {
        genus(self.seifert_circle_count(), self.crossing_count())
    }

    /// Generator exponents with adjacent equal generators folded, e.g.
    /// `σ1³σ2⁻¹σ1σ2⁻¹ -> [3, 1, 1, 1]`.
    pub fn folded_exponents(&self) -> Vec<(Generator, u64)> {
        let mut out: Vec<(Generator, u64)> = Vec::new();
        for g in self.generators() {
            match out.last_mut() {
                Some((last, n)) if *last == g => *n += 1,
                _ => out.push((g, 1)),
            }
        }
        out
    }

    /// Text form such as `s1^3 s2^-1 s1 s2^-1`.
    pub fn alternating_word(&self) -> String {
        self.folded_exponents()
            .iter()
            .map(|&(g, n)| match (g, n) {
                (Generator::SigmaOne, 1) => "s1".to_string(),
                (Generator::SigmaOne, n) => format!("s1^{n}"),
                (Generator::SigmaTwoInverse, n) => format!("s2^-{n}"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn smoothing_string(&self) -> String {
        self.crossings
            .iter()
            .map(|x| x.smoothing.as_char())
            .collect()
    }
}

impl fmt::Display for AlternatingDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.alternating_word())
    }
}

/// Seifert genus `(1 - s + c) / 2` of a reduced alternating diagram.
pub fn genus(s: usize, c: usize) -> Result<u64> {
    let twice = 1 - s as i64 + c as i64;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Parity(twice));
    }
    Ok((twice / 2) as u64)
}
