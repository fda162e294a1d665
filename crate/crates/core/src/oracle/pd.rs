//! Explicit 4-valent planar diagrams built from a 3-strand strip plus its
//! closure arcs.
//!
//! Every crossing uses the same local frame. Its four ends are numbered
//! counterclockwise `SW, SE, NE, NW`; the strands through it are `SW-NE`
//! and `NW-SE`, and the left side of the strip is `{SW, NW}`.

use std::collections::HashMap;

use crate::diagram::{AlternatingDiagram, Generator};
use crate::error::{Error, Result};
use crate::word::{BilliardWord, Sign};

pub const SW: usize = 0;
pub const SE: usize = 1;
pub const NE: usize = 2;
pub const NW: usize = 3;

/// End reached by passing straight through a crossing.
pub fn opposite(slot: usize) -> usize {
    (slot + 2) % 4
}

pub fn is_left_slot(slot: usize) -> bool {
    slot == SW || slot == NW
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct End {
    pub crossing: usize,
    pub slot: usize,
}

impl End {
    pub fn new(crossing: usize, slot: usize) -> Self {
        End { crossing, slot }
    }

    pub fn opposite(self) -> End {
        End::new(self.crossing, opposite(self.slot))
    }
}

/// Which strand passes over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Over {
    /// The `SW-NE` strand (positive slope) is on top.
    PositiveSlope,
    /// The `NW-SE` strand is on top.
    NegativeSlope,
}

impl Over {
    /// Slots of the over strand.
    pub fn slots(self) -> (usize, usize) {
        match self {
            Over::PositiveSlope => (SW, NE),
            Over::NegativeSlope => (NW, SE),
        }
    }

    pub fn is_over(self, slot: usize) -> bool {
        let (a, b) = self.slots();
        slot == a || slot == b
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureKind {
    LeftCap,
    RightCap,
    /// Joins the two long ends around the outside of the strip.
    LongClosure,
}

/// One column of the strip: a crossing between strand positions `lower`
/// and `lower + 1` (positions counted 1..=3 from the bottom).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StripCrossing {
    pub lower: u8,
    pub over: Over,
}

#[derive(Clone, Debug)]
pub struct PlanarDiagram {
    over: Vec<Over>,
    /// `mate[x][slot]` is the end at the far side of the edge leaving `(x, slot)`.
    mate: Vec<[End; 4]>,
    /// In-end of the long strand entering from the left.
    entry: End,
    /// Edges that run through closure arcs, with the arcs they use.
    closure_edges: Vec<(End, End, Vec<ClosureKind>)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Point {
    End(End),
    Left(u8),
    Right(u8),
}

impl PlanarDiagram {
    /// Closes a strip: on the left strands 2 and 3 are capped and the long
    /// strand enters at position 1. On the right, an odd number of columns
    /// caps positions 2-3 and exits at 1, an even number caps 1-2 and exits
    /// at 3. The long ends are joined by an arc around the outside.
    pub fn from_strip(columns: &[StripCrossing]) -> PlanarDiagram {
        assert!(!columns.is_empty(), "a strip needs at least one crossing");
        let n = columns.len();
        let mut segments: HashMap<Point, Point> = HashMap::new();
        let mut link = |a: Point, b: Point| {
            segments.insert(a, b);
            segments.insert(b, a);
        };
        let mut current = [Point::Left(1), Point::Left(2), Point::Left(3)];
        for (k, col) in columns.iter().enumerate() {
            let lo = col.lower as usize - 1;
            link(current[lo], Point::End(End::new(k, SW)));
            link(current[lo + 1], Point::End(End::new(k, NW)));
            current[lo] = Point::End(End::new(k, SE));
            current[lo + 1] = Point::End(End::new(k, NE));
        }
        for (p, point) in current.into_iter().enumerate() {
            link(point, Point::Right(p as u8 + 1));
        }

        let (cap, exit) = if n % 2 == 1 { ((2, 3), 1) } else { ((1, 2), 3) };
        let mut closures: HashMap<Point, (Point, ClosureKind)> = HashMap::new();
        let mut close = |a: Point, b: Point, kind| {
            closures.insert(a, (b, kind));
            closures.insert(b, (a, kind));
        };
        close(Point::Left(2), Point::Left(3), ClosureKind::LeftCap);
        close(
            Point::Right(cap.0),
            Point::Right(cap.1),
            ClosureKind::RightCap,
        );
        close(Point::Left(1), Point::Right(exit), ClosureKind::LongClosure);

        let mut mate = vec![[End::new(0, 0); 4]; n];
        let mut closure_edges = Vec::new();
        for (k, row) in mate.iter_mut().enumerate() {
            for (slot, far_end) in row.iter_mut().enumerate() {
                let start = End::new(k, slot);
                let mut kinds = Vec::new();
                let mut at = segments[&Point::End(start)];
                let far = loop {
                    match at {
                        Point::End(e) => break e,
                        boundary => {
                            let (other, kind) = closures[&boundary];
                            kinds.push(kind);
                            at = segments[&other];
                        }
                    }
                };
                *far_end = far;
                if !kinds.is_empty() && start < far {
                    closure_edges.push((start, far, kinds));
                }
            }
        }

        PlanarDiagram {
            over: columns.iter().map(|c| c.over).collect(),
            mate,
            entry: End::new(0, SW),
            closure_edges,
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.over.len()
    }

    pub fn over(&self, crossing: usize) -> Over {
        self.over[crossing]
    }

    pub fn mate(&self, end: End) -> End {
        self.mate[end.crossing][end.slot]
    }

    pub fn entry(&self) -> End {
        self.entry
    }

    pub fn closure_edges(&self) -> &[(End, End, Vec<ClosureKind>)] {
        &self.closure_edges
    }

    /// Number of link components, by following strands straight through
    /// crossings.
    pub fn component_count(&self) -> usize {
        let n = self.crossing_count();
        let mut seen = vec![[false; 4]; n];
        let mut components = 0;
        for k in 0..n {
            for slot in 0..4 {
                if seen[k][slot] {
                    continue;
                }
                components += 1;
                let start = End::new(k, slot);
                let mut e = start;
                loop {
                    seen[e.crossing][e.slot] = true;
                    let out = e.opposite();
                    seen[out.crossing][out.slot] = true;
                    e = self.mate(out);
                    if e == start {
                        break;
                    }
                }
            }
        }
        components
    }
}

/// Diagram of a billiard word: crossing `k` sits on strands 1-2 when `k`
/// is odd and 2-3 when even, with a `+` letter putting the positive-slope
/// strand on top.
pub fn billiard_pd(w: &BilliardWord) -> Result<PlanarDiagram> {
    if w.is_empty() || w.len() % 3 == 2 {
        return Err(Error::LinkLength(w.len()));
    }
    Ok(billiard_pd_unchecked(w))
}

/// As [`billiard_pd`] without the length check; words of length `≡ 2
/// (mod 3)` give 2-component links.
pub fn billiard_pd_unchecked(w: &BilliardWord) -> PlanarDiagram {
    let columns: Vec<StripCrossing> = w
        .letters()
        .iter()
        .enumerate()
        .map(|(k, &s)| StripCrossing {
            lower: if k % 2 == 0 { 1 } else { 2 },
            over: match s {
                Sign::Plus => Over::PositiveSlope,
                Sign::Minus => Over::NegativeSlope,
            },
        })
        .collect();
    PlanarDiagram::from_strip(&columns)
}

/// Plat diagram of an alternating word: `σ1` on strands 1-2 with the
/// positive-slope strand on top, `σ2⁻¹` on strands 2-3 with the
/// negative-slope strand on top.
pub fn alternating_pd(d: &AlternatingDiagram) -> PlanarDiagram {
    let columns: Vec<StripCrossing> = d
        .generators()
        .map(|g| match g {
            Generator::SigmaOne => StripCrossing {
                lower: 1,
                over: Over::PositiveSlope,
            },
            Generator::SigmaTwoInverse => StripCrossing {
                lower: 2,
                over: Over::NegativeSlope,
            },
        })
        .collect();
    PlanarDiagram::from_strip(&columns)
}
