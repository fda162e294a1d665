//! Faces, checkerboard coloring, and the Goeritz matrix of a planar diagram.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

use super::pd::{End, Over, PlanarDiagram, NW, SW};

/// Corner `k` of a crossing lies between slot `k` and slot `k + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Corner {
    pub crossing: usize,
    pub index: usize,
}

/// Faces of the diagram and the face at every crossing corner.
#[derive(Clone, Debug)]
pub struct Faces {
    pub boundaries: Vec<Vec<Corner>>,
    /// `face_at[x][k]` is the face containing corner `k` of crossing `x`.
    pub face_at: Vec<[usize; 4]>,
}

/// Traces faces keeping each face on the left: after arriving at slot `s`
/// the walk leaves through the clockwise-next slot `s - 1`.
pub fn faces(pd: &PlanarDiagram) -> Faces {
    let n = pd.crossing_count();
    let mut face_at = vec![[usize::MAX; 4]; n];
    let mut boundaries = Vec::new();
    for k in 0..n {
        for slot in 0..4 {
            // dart leaving (k, slot); its face's corner at the far end is
            // recorded as we arrive
            let start = End::new(k, slot);
            let arrival = pd.mate(start);
            let corner = (arrival.slot + 3) % 4;
            if face_at[arrival.crossing][corner] != usize::MAX {
                continue;
            }
            let id = boundaries.len();
            let mut boundary = Vec::new();
            let mut dart = start;
            loop {
                let at = pd.mate(dart);
                let corner = (at.slot + 3) % 4;
                if face_at[at.crossing][corner] == id {
                    break;
                }
                face_at[at.crossing][corner] = id;
                boundary.push(Corner {
                    crossing: at.crossing,
                    index: corner,
                });
                dart = End::new(at.crossing, corner);
            }
            boundaries.push(boundary);
        }
    }
    Faces {
        boundaries,
        face_at,
    }
}

/// Two-coloring of the faces; faces meeting across an edge get different
/// colors. `None` if the diagram is not checkerboard colorable.
pub fn checkerboard(faces: &Faces) -> Option<Vec<u8>> {
    let nf = faces.boundaries.len();
    let mut color: Vec<Option<u8>> = vec![None; nf];
    let mut stack = Vec::new();
    if nf == 0 {
        return Some(Vec::new());
    }
    color[0] = Some(0);
    stack.push(0usize);
    // corners of one crossing alternate colors around it
    let mut corners_of_face: Vec<Vec<Corner>> = vec![Vec::new(); nf];
    for (x, row) in faces.face_at.iter().enumerate() {
        for (k, &f) in row.iter().enumerate() {
            corners_of_face[f].push(Corner {
                crossing: x,
                index: k,
            });
        }
    }
    while let Some(f) = stack.pop() {
        let cf = color[f].unwrap();
        for corner in &corners_of_face[f] {
            for k in 0..4 {
                let g = faces.face_at[corner.crossing][k];
                let want = cf ^ ((k + 4 - corner.index) % 2) as u8;
                match color[g] {
                    None => {
                        color[g] = Some(want);
                        stack.push(g);
                    }
                    Some(c) if c != want => return None,
                    _ => {}
                }
            }
        }
    }
    color.into_iter().collect()
}

/// Goeritz matrix over the shaded faces, shading the color class of the
/// face to the left of the long strand's entry. Returns the matrix and the
/// per-crossing sign used (`0` for a crossing touching one shaded face twice).
pub fn goeritz_matrix(pd: &PlanarDiagram) -> Result<(Vec<Vec<i64>>, Vec<i8>)> {
    let fs = faces(pd);
    let colors = checkerboard(&fs)
        .ok_or_else(|| Error::Invariant("diagram faces are not 2-colorable".into()))?;
    let entry = pd.entry();
    debug_assert_eq!(entry.slot, SW);
    let shade = colors[fs.face_at[entry.crossing][NW]];
    let shaded: Vec<usize> = (0..colors.len()).filter(|&f| colors[f] == shade).collect();
    let mut index = vec![usize::MAX; colors.len()];
    for (i, &f) in shaded.iter().enumerate() {
        index[f] = i;
    }
    let m = shaded.len();
    let mut g = vec![vec![0i64; m]; m];
    let mut signs = Vec::with_capacity(pd.crossing_count());
    for x in 0..pd.crossing_count() {
        let row = fs.face_at[x];
        let (a, b, shaded_pair) = if colors[row[0]] == shade {
            (row[0], row[2], (0, 2))
        } else {
            (row[1], row[3], (1, 3))
        };
        // rotating the over strand counterclockwise sweeps corners {0,2}
        // for the SW-NE strand and {1,3} for the NW-SE strand
        let swept = match pd.over(x) {
            Over::PositiveSlope => (0, 2),
            Over::NegativeSlope => (1, 3),
        };
        let eta: i64 = if shaded_pair == swept { 1 } else { -1 };
        if a == b {
            signs.push(0);
            continue;
        }
        signs.push(eta as i8);
        let (i, j) = (index[a], index[b]);
        g[i][j] -= eta;
        g[j][i] -= eta;
        g[i][i] += eta;
        g[j][j] += eta;
    }
    Ok((g, signs))
}

/// `|det|` of the Goeritz matrix with its first row and column removed:
/// the knot determinant.
pub fn goeritz_determinant(pd: &PlanarDiagram) -> Result<BigUint> {
    let (g, _) = goeritz_matrix(pd)?;
    if g.len() <= 1 {
        return Ok(BigUint::from(1u32));
    }
    let minor: Vec<Vec<BigInt>> = g[1..]
        .iter()
        .map(|row| row[1..].iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    Ok(bareiss_determinant(minor).abs().to_biguint().unwrap())
}

/// Fraction-free Gaussian elimination.
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}
