use std::fmt::Write as _;

use crate::diagram::Smoothing;
use crate::error::{Error, Result};

use super::pd::{is_left_slot, End, Over, PlanarDiagram, NE, NW, SE, SW};

/// A one-component diagram with every end marked incoming or outgoing by a
/// traversal that starts on the long strand's entry, moving right.
#[derive(Clone, Debug)]
pub struct OrientedDiagram {
    pd: PlanarDiagram,
    incoming: Vec<[bool; 4]>,
    /// Edge label of every end, numbered 1.. along the traversal.
    labels: Vec<[usize; 4]>,
}

pub fn orient(pd: &PlanarDiagram) -> Result<OrientedDiagram> {
    let n = pd.crossing_count();
    let mut incoming = vec![[false; 4]; n];
    let mut labels = vec![[0usize; 4]; n];
    let start = pd.entry();
    let mut e = start;
    let mut visited = 0;
    let mut label = 1;
    loop {
        incoming[e.crossing][e.slot] = true;
        labels[e.crossing][e.slot] = label;
        label += 1;
        let out = e.opposite();
        labels[out.crossing][out.slot] = label;
        visited += 2;
        e = pd.mate(out);
        if e == start {
            break;
        }
    }
    if visited < 4 * n {
        return Err(Error::MultiComponent(pd.component_count()));
    }
    // the final edge closes back onto label 1
    let last = pd.mate(start);
    labels[last.crossing][last.slot] = 1;
    Ok(OrientedDiagram {
        pd: pd.clone(),
        incoming,
        labels,
    })
}

impl OrientedDiagram {
    pub fn diagram(&self) -> &PlanarDiagram {
        &self.pd
    }

    pub fn is_incoming(&self, end: End) -> bool {
        self.incoming[end.crossing][end.slot]
    }

    /// The two incoming ends of a crossing, `SW-NE` strand first.
    fn incoming_pair(&self, crossing: usize) -> (End, End) {
        let pick = |a: usize, b: usize| {
            if self.incoming[crossing][a] {
                End::new(crossing, a)
            } else {
                End::new(crossing, b)
            }
        };
        (pick(SW, NE), pick(NW, SE))
    }

    /// `V` when the strands run in opposite horizontal directions (so both
    /// point up or both down), `H` when both run left or both run right.
    pub fn classify_orientations(&self) -> Vec<Smoothing> {
        (0..self.pd.crossing_count())
            .map(|k| {
                let (a, b) = self.incoming_pair(k);
                if is_left_slot(a.slot) == is_left_slot(b.slot) {
                    Smoothing::H
                } else {
                    Smoothing::V
                }
            })
            .collect()
    }

    /// Seifert's algorithm: smooth each crossing along the orientation and
    /// count the closed curves.
    pub fn trace_seifert_circles(&self) -> usize {
        let n = self.pd.crossing_count();
        // Incoming end `a` continues out through the end opposite the other
        // incoming end, which is the outgoing end adjacent to `a`.
        let smooth = |e: End| {
            let (a, b) = self.incoming_pair(e.crossing);
            let other = if e == a { b } else { a };
            self.pd.mate(other.opposite())
        };
        let mut seen = vec![[false; 4]; n];
        let mut circles = 0;
        for k in 0..n {
            for slot in 0..4 {
                if !self.incoming[k][slot] || seen[k][slot] {
                    continue;
                }
                circles += 1;
                let start = End::new(k, slot);
                let mut e = start;
                loop {
                    seen[e.crossing][e.slot] = true;
                    e = smooth(e);
                    if e == start {
                        break;
                    }
                }
            }
        }
        circles
    }

    /// Planar diagram code: one `X[a,b,c,d]` per crossing, starting at the
    /// incoming under-strand edge and continuing counterclockwise.
    pub fn pd_code(&self) -> String {
        let mut out = String::from("PD[");
        for k in 0..self.pd.crossing_count() {
            let (u1, u2) = match self.pd.over(k) {
                Over::PositiveSlope => (NW, SE),
                Over::NegativeSlope => (SW, NE),
            };
            let first = if self.incoming[k][u1] { u1 } else { u2 };
            if k > 0 {
                out.push_str(", ");
            }
            let l = &self.labels[k];
            let _ = write!(
                out,
                "X[{},{},{},{}]",
                l[first],
                l[(first + 1) % 4],
                l[(first + 2) % 4],
                l[(first + 3) % 4]
            );
        }
        out.push(']');
        out
    }
}

/// Parses `PD[X[a,b,c,d], ...]` into label quadruples.
pub fn parse_pd_code(text: &str) -> Option<Vec<[usize; 4]>> {
    let body = text.trim().strip_prefix("PD[")?.strip_suffix(']')?;
    if body.trim().is_empty() {
        return Some(Vec::new());
    }
    body.split("X[")
        .skip(1)
        .map(|chunk| {
            let inner = chunk
                .trim()
                .trim_end_matches(',')
                .trim()
                .strip_suffix(']')?;
            let nums: Vec<usize> = inner
                .split(',')
                .map(|v| v.trim().parse().ok())
                .collect::<Option<_>>()?;
            nums.try_into().ok()
        })
        .collect()
}
