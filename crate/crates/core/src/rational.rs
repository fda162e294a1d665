//! 2-bridge fractions of model words, their classification up to mirror
//! image, and the multiplicity structure of the model.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::diagram::{to_alternating, AlternatingDiagram};
use crate::error::{Error, Result};
use crate::word::{enumerate_model_words, RunWord};

/// Rational number `p/q` of a 2-bridge knot: `p` odd, `0 < q < p`, coprime.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    p: BigUint,
    q: BigUint,
}

impl Fraction {
    pub fn new(p: impl Into<BigUint>, q: impl Into<BigUint>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        let bad = |reason| Error::InvalidFraction {
            p: p.to_string(),
            q: q.to_string(),
            reason,
        };
        if q.is_zero() || q >= p {
            return Err(bad("need 0 < q < p"));
        }
        if p.is_even() {
            return Err(bad("even p is a link"));
        }
        if !p.gcd(&q).is_one() {
            return Err(bad("p and q are not coprime"));
        }
        Ok(Fraction { p, q })
    }

    pub fn p(&self) -> &BigUint {
        &self.p
    }

    pub fn q(&self) -> &BigUint {
        &self.q
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// `[a1, a2, ..., ak] = a1 + 1/(a2 + 1/(... + 1/ak))`.
pub fn continued_fraction(exponents: &[u64]) -> Result<Fraction> {
    let Some((&last, rest)) = exponents.split_last() else {
        return Err(Error::InvalidFraction {
            p: "?".into(),
            q: "?".into(),
            reason: "empty continued fraction",
        });
    };
    if exponents.contains(&0) {
        return Err(Error::InvalidFraction {
            p: "?".into(),
            q: "?".into(),
            reason: "terms must be positive",
        });
    }
    let mut p = BigUint::from(last);
    let mut q = BigUint::one();
    for &a in rest.iter().rev() {
        let next = BigUint::from(a) * &p + &q;
        q = std::mem::replace(&mut p, next);
    }
    Fraction::new(p, q)
}

/// Fraction read off an alternating diagram from its folded exponents.
pub fn diagram_fraction(d: &AlternatingDiagram) -> Result<Fraction> {
    let exps: Vec<u64> = d.folded_exponents().iter().map(|&(_, n)| n).collect();
    continued_fraction(&exps)
}

/// Representative of `{q, p - q, q⁻¹, p - q⁻¹} mod p`: the same unoriented
/// 2-bridge knot up to mirror image.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalClass {
    pub p: BigUint,
    pub q_star: BigUint,
}

impl CanonicalClass {
    pub fn display_name(&self) -> String {
        match knot_name(self) {
            Some(name) => name.to_string(),
            None => format!("{}/{}", self.p, self.q_star),
        }
    }
}

impl fmt::Display for CanonicalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q_star)
    }
}

pub fn canonical_class(f: &Fraction) -> CanonicalClass {
    let p = &f.p;
    let q = &f.q % p;
    let inv = mod_inverse(&q, p).expect("fraction terms are coprime");
    let q_star = [q.clone(), p - &q, inv.clone(), p - &inv]
        .into_iter()
        .min()
        .unwrap();
    CanonicalClass {
        p: p.clone(),
        q_star,
    }
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub fn mod_inverse(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    let (m_int, mut r0, mut r1) = (
        BigInt::from(m.clone()),
        BigInt::from(m.clone()),
        BigInt::from(a % m),
    );
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let quot = &r0 / &r1;
        let r2 = &r0 - &quot * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &quot * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if !r0.is_one() {
        return None;
    }
    t0.mod_floor(&m_int).to_biguint()
}

/// Every 2-bridge knot through seven crossings as `(p, q*)`.
const KNOT_TABLE: [(u64, u64, &str); 14] = [
    (3, 1, "3_1"),
    (5, 2, "4_1"),
    (5, 1, "5_1"),
    (7, 2, "5_2"),
    (9, 2, "6_1"),
    (11, 3, "6_2"),
    (13, 5, "6_3"),
    (7, 1, "7_1"),
    (11, 2, "7_2"),
    (13, 3, "7_3"),
    (15, 4, "7_4"),
    (17, 5, "7_5"),
    (19, 7, "7_6"),
    (21, 8, "7_7"),
];

pub fn knot_name(cc: &CanonicalClass) -> Option<&'static str> {
    let (p, q) = (cc.p.to_u64()?, cc.q_star.to_u64()?);
    KNOT_TABLE
        .iter()
        .find(|&&(tp, tq, _)| tp == p && tq == q)
        .map(|&(_, _, name)| name)
}

/// Class of a model word.
pub fn word_class(r: &RunWord) -> Result<CanonicalClass> {
    let d = to_alternating(r)?;
    Ok(canonical_class(&diagram_fraction(&d)?))
}

#[derive(Clone, Debug, Serialize)]
pub struct KnotClass {
    pub p: String,
    /// `q` of the first member's fraction.
    pub q: String,
    pub q_star: String,
    pub name: String,
    pub multiplicity: usize,
    pub genus: u64,
    pub palindromic: bool,
    pub words: Vec<String>,
    #[serde(skip)]
    pub class: CanonicalClass,
    #[serde(skip)]
    pub members: Vec<RunWord>,
}

/// Groups the model words with `c` crossings by knot class, in order of
/// first appearance. Fails if members of one class disagree on genus.
pub fn group_by_knot(c: usize) -> Result<Vec<KnotClass>> {
    let mut order: Vec<KnotClass> = Vec::new();
    let mut index: HashMap<CanonicalClass, usize> = HashMap::new();
    for r in enumerate_model_words(c)? {
        let d = to_alternating(&r)?;
        let fraction = diagram_fraction(&d)?;
        let class = canonical_class(&fraction);
        let g = d.genus()?;
        match index.get(&class) {
            Some(&k) => {
                let entry = &mut order[k];
                if entry.genus != g {
                    return Err(Error::Invariant(format!(
                        "class {} has words of genus {} and {g}",
                        entry.class, entry.genus
                    )));
                }
                entry.multiplicity += 1;
                entry.palindromic |= r.is_palindromic_type();
                entry.words.push(r.to_string());
                entry.members.push(r);
            }
            None => {
                index.insert(class.clone(), order.len());
                order.push(KnotClass {
                    p: class.p.to_string(),
                    q: fraction.q().to_string(),
                    q_star: class.q_star.to_string(),
                    name: class.display_name(),
                    multiplicity: 1,
                    genus: g,
                    palindromic: r.is_palindromic_type(),
                    words: vec![r.to_string()],
                    class,
                    members: vec![r],
                });
            }
        }
    }
    Ok(order)
}
