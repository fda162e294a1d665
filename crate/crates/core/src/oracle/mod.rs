//! Independent verification by brute force on explicit planar diagrams.
//!
//! Nothing here uses the mod-3 shortcuts of [`crate::diagram`]: diagrams are
//! built crossing by crossing, oriented by walking the knot, smoothed, and
//! traced.

pub mod goeritz;
pub mod orient;
pub mod pd;

pub use goeritz::{goeritz_determinant, goeritz_matrix};
pub use orient::{orient, parse_pd_code, OrientedDiagram};
pub use pd::{alternating_pd, billiard_pd, billiard_pd_unchecked, PlanarDiagram};

use crate::diagram::Smoothing;

/// `H (VVH)^m` for `n = 3m + 1` crossings and `(VHV)^m` for `n = 3m`;
/// `None` for lengths `≡ 2 (mod 3)`.
pub fn expected_billiard_pattern(n: usize) -> Option<Vec<Smoothing>> {
    use Smoothing::{H, V};
    match n % 3 {
        1 => Some(
            std::iter::once(H)
                .chain((0..n / 3).flat_map(|_| [V, V, H]))
                .collect(),
        ),
        0 => Some((0..n / 3).flat_map(|_| [V, H, V]).collect()),
        _ => None,
    }
}
