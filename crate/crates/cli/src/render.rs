use std::io::{self, Write};

use bridge_census::analysis::CSV_HEADER;
use bridge_census::census::CENSUS_CSV_HEADER;
use bridge_census::{
    BilliardWord, CensusReport, CheckReport, KnotClass, Normalized, Rational, RunWord, WordAnalysis,
};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
    Csv,
}

pub struct Printer<W: Write> {
    out: W,
    format: Format,
}

type Outcome = Result<(), super::Failure>;

fn exact(r: &Rational) -> String {
    format!("{r} ({})", r.decimal(6))
}

fn classification(class: &Normalized) -> &'static str {
    match class {
        Normalized::ModelWord(_) => "knot",
        Normalized::Unknot => "unknot",
        Normalized::OutOfScopeLink => "link",
    }
}

fn non_model_message(class: &Normalized) -> &'static str {
    match class {
        Normalized::Unknot => "unknot",
        _ => "2-component link: out of scope",
    }
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (k, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if k + 1 == cells.len() {
                s.push_str(cell);
            } else {
                s.push_str(&format!("{cell:<w$}  "));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut s = line(header.to_vec());
    for row in rows {
        s.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    s
}

fn word_row(a: &WordAnalysis) -> Vec<String> {
    let viable: Vec<String> = a.viable_crossings.iter().map(|i| i.to_string()).collect();
    vec![
        a.word.clone(),
        a.alternating.clone(),
        a.smoothings.clone(),
        a.vertical.to_string(),
        if viable.is_empty() {
            "-".into()
        } else {
            viable.join(",")
        },
        a.s.to_string(),
        a.genus.to_string(),
        format!("{}/{}", a.p, a.q),
        a.name.clone(),
    ]
}

const WORD_TABLE: [&str; 9] = [
    "word",
    "alternating",
    "VH",
    "V",
    "viable at",
    "s",
    "g",
    "p/q",
    "knot",
];

impl<W: Write> Printer<W> {
    pub fn new(out: W, format: Format) -> Self {
        Printer { out, format }
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.out.flush()
    }

    fn json(&mut self, v: &impl serde::Serialize) -> Outcome {
        serde_json::to_writer_pretty(&mut self.out, v).map_err(io::Error::from)?;
        writeln!(self.out)?;
        Ok(())
    }

    fn csv<I, R>(&mut self, header: &[&str], rows: I) -> Outcome
    where
        I: IntoIterator<Item = R>,
        R: IntoIterator,
        R::Item: AsRef<[u8]>,
    {
        let mut w = csv::Writer::from_writer(&mut self.out);
        w.write_record(header)?;
        for row in rows {
            w.write_record(row)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn analysis(
        &mut self,
        input: &BilliardWord,
        class: &Normalized,
        a: Option<&WordAnalysis>,
    ) -> Outcome {
        match (self.format, a) {
            (Format::Json, _) => self.json(&json!({
                "input": input.to_string(),
                "classification": classification(class),
                "analysis": a,
            })),
            (Format::Csv, Some(a)) => self.csv(&CSV_HEADER, [a.csv_record()]),
            (Format::Csv, None) => self.csv(
                &["input", "classification"],
                [[input.to_string(), classification(class).to_string()]],
            ),
            (Format::Human, None) => {
                writeln!(self.out, "{}", non_model_message(class))?;
                Ok(())
            }
            (Format::Human, Some(a)) => {
                let mut lines = vec![("input", input.to_string())];
                lines.extend([
                    ("word", a.word.clone()),
                    ("runs", a.runs.clone()),
                    ("alternating", a.alternating.clone()),
                    ("smoothings", a.smoothings.clone()),
                    ("vertical", a.vertical.to_string()),
                    ("viable", a.viable.to_string()),
                    ("sequential", a.sequential.to_string()),
                    (
                        "s",
                        format!("{} (bounds {}..{})", a.s, a.s_lower, a.s_upper),
                    ),
                    ("genus", a.genus.to_string()),
                    ("fraction", format!("{}/{}", a.p, a.q)),
                    ("knot", a.name.clone()),
                    ("palindromic", a.palindromic.to_string()),
                ]);
                for (k, v) in lines {
                    writeln!(self.out, "{k:<12} {v}")?;
                }
                Ok(())
            }
        }
    }

    pub fn census(&mut self, r: &CensusReport, rows: Option<&[WordAnalysis]>) -> Outcome {
        match self.format {
            Format::Json => {
                let mut v = serde_json::to_value(r).map_err(io::Error::from)?;
                if let (Some(rows), Value::Object(map)) = (rows, &mut v) {
                    map.insert(
                        "words".into(),
                        serde_json::to_value(rows).map_err(io::Error::from)?,
                    );
                }
                self.json(&v)
            }
            Format::Csv => match rows {
                Some(rows) => self.csv(&CSV_HEADER, rows.iter().map(|a| a.csv_record())),
                None => self.csv(&CENSUS_CSV_HEADER, [r.csv_record()]),
            },
            Format::Human => {
                let o = &mut self.out;
                writeln!(o, "crossing number       {}", r.c)?;
                let sign = if r.star < 0 { '-' } else { '+' };
                writeln!(
                    o,
                    "model words           {}  (2^{} {sign} {}) / 3",
                    r.word_count,
                    r.c - 2,
                    r.star.abs()
                )?;
                writeln!(
                    o,
                    "vertical crossings    {}  (closed form {})",
                    r.totals.vertical, r.closed_form_vertical_total
                )?;
                writeln!(o, "viable crossings      {}", r.totals.viable)?;
                writeln!(o, "sequential crossings  {}", r.totals.sequential)?;
                writeln!(o, "average s             {}", exact(&r.avg_s))?;
                writeln!(o, "  lower bound         {}", exact(&r.avg_s_lower))?;
                writeln!(o, "  upper bound         {}", exact(&r.avg_s_upper))?;
                writeln!(o, "average genus         {}", exact(&r.avg_genus))?;
                writeln!(
                    o,
                    "genus lower bound     {}",
                    exact(&r.avg_genus_lower_closed_form)
                )?;
                writeln!(o)?;
                writeln!(o, "vertical crossings by index")?;
                let idx: Vec<Vec<String>> = r
                    .per_index_contributions
                    .iter()
                    .map(|x| {
                        vec![
                            x.index.to_string(),
                            x.closed_form.to_string(),
                            x.enumerated.to_string(),
                        ]
                    })
                    .collect();
                write!(o, "{}", table(&["i", "closed form", "enumerated"], &idx))?;
                if let Some(classes) = &r.knot_class_summary {
                    writeln!(o)?;
                    writeln!(o, "knot classes          {}", classes.len())?;
                }
                if let Some(rows) = rows {
                    writeln!(o)?;
                    let cells: Vec<Vec<String>> = rows.iter().map(word_row).collect();
                    write!(o, "{}", table(&WORD_TABLE, &cells))?;
                }
                Ok(())
            }
        }
    }

    pub fn bounds(&mut self, rows: &[(usize, Rational, Option<Rational>)]) -> Outcome {
        match self.format {
            Format::Json => {
                let v: Vec<Value> = rows
                    .iter()
                    .map(|(c, b, g)| json!({ "c": c, "lower_bound": b, "avg_genus": g }))
                    .collect();
                self.json(&v)
            }
            Format::Csv => self.csv(
                &["c", "lower_bound", "avg_genus"],
                rows.iter().map(|(c, b, g)| {
                    [
                        c.to_string(),
                        b.to_string(),
                        g.as_ref().map(|g| g.to_string()).unwrap_or_default(),
                    ]
                }),
            ),
            Format::Human => {
                let cells: Vec<Vec<String>> = rows
                    .iter()
                    .map(|(c, b, g)| {
                        vec![
                            c.to_string(),
                            exact(b),
                            g.as_ref().map(exact).unwrap_or_else(|| "-".into()),
                        ]
                    })
                    .collect();
                write!(
                    self.out,
                    "{}",
                    table(&["c", "lower bound", "average genus"], &cells)
                )?;
                Ok(())
            }
        }
    }

    pub fn words(&mut self, words: impl Iterator<Item = RunWord>) -> Outcome {
        match self.format {
            Format::Json => {
                let v: Vec<Value> = words
                    .map(|r| json!({ "word": r.to_word().to_string(), "first_sign": r.first_sign(), "runs": r.runs() }))
                    .collect();
                self.json(&v)
            }
            Format::Csv => self.csv(
                &["word", "runs"],
                words.map(|r| [r.to_word().to_string(), r.runs_string()]),
            ),
            Format::Human => {
                for r in words {
                    writeln!(self.out, "{}  {}", r.to_word(), r.runs_string())?;
                }
                Ok(())
            }
        }
    }

    pub fn classes(&mut self, classes: &[KnotClass]) -> Outcome {
        match self.format {
            Format::Json => self.json(&classes),
            Format::Csv => self.csv(
                &[
                    "p",
                    "q",
                    "q_star",
                    "name",
                    "multiplicity",
                    "genus",
                    "palindromic",
                    "words",
                ],
                classes.iter().map(|k| {
                    [
                        k.p.clone(),
                        k.q.clone(),
                        k.q_star.clone(),
                        k.name.clone(),
                        k.multiplicity.to_string(),
                        k.genus.to_string(),
                        k.palindromic.to_string(),
                        k.words.join(" "),
                    ]
                }),
            ),
            Format::Human => {
                let cells: Vec<Vec<String>> = classes
                    .iter()
                    .map(|k| {
                        vec![
                            k.name.clone(),
                            format!("{}/{}", k.p, k.q_star),
                            k.multiplicity.to_string(),
                            k.genus.to_string(),
                            k.words.join(" "),
                        ]
                    })
                    .collect();
                write!(
                    self.out,
                    "{}",
                    table(&["knot", "p/q*", "words", "genus", "members"], &cells)
                )?;
                Ok(())
            }
        }
    }

    pub fn samples(
        &mut self,
        rows: &[(BilliardWord, Normalized, Option<WordAnalysis>)],
    ) -> Outcome {
        match self.format {
            Format::Json => {
                let v: Vec<Value> = rows
                    .iter()
                    .map(|(w, class, a)| {
                        json!({ "input": w.to_string(), "classification": classification(class), "analysis": a })
                    })
                    .collect();
                self.json(&v)
            }
            Format::Csv => {
                let mut header = vec!["input", "classification"];
                header.extend(CSV_HEADER);
                self.csv(
                    &header,
                    rows.iter().map(|(w, class, a)| {
                        let mut rec = vec![w.to_string(), classification(class).to_string()];
                        match a {
                            Some(a) => rec.extend(a.csv_record()),
                            None => {
                                rec.extend(std::iter::repeat_n(String::new(), CSV_HEADER.len()))
                            }
                        }
                        rec
                    }),
                )
            }
            Format::Human => {
                let cells: Vec<Vec<String>> = rows
                    .iter()
                    .map(|(w, class, a)| match a {
                        Some(a) => {
                            let mut row = vec![w.to_string()];
                            row.extend(word_row(a));
                            row
                        }
                        None => vec![w.to_string(), non_model_message(class).into()],
                    })
                    .collect();
                let mut header = vec!["input"];
                header.extend(WORD_TABLE);
                write!(self.out, "{}", table(&header, &cells))?;
                let count = |k: &str| {
                    rows.iter()
                        .filter(|(_, c, _)| classification(c) == k)
                        .count()
                };
                writeln!(
                    self.out,
                    "\n{} knots, {} unknots, {} links",
                    count("knot"),
                    count("unknot"),
                    count("link")
                )?;
                Ok(())
            }
        }
    }

    pub fn check(&mut self, report: &CheckReport) -> Outcome {
        match self.format {
            Format::Json => {
                let v = json!({ "passed": report.passed(), "assertions": report.assertions(), "report": report });
                self.json(&v)
            }
            Format::Csv => self.csv(
                &["check", "assertions", "failures"],
                report.checks.iter().map(|c| {
                    [
                        c.name.to_string(),
                        c.assertions.to_string(),
                        c.failures.len().to_string(),
                    ]
                }),
            ),
            Format::Human => {
                writeln!(self.out, "{report}")?;
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_alignment() {
        let t = table(&["a", "bb"], &[vec!["xyz".into(), "1".into()]]);
        assert_eq!(t, "a    bb\nxyz  1\n");
    }
}
