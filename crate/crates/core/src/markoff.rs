//! Markoff triples, Vieta flips, and the bijection between proper triples
//! and standard factorizations of Christoffel words.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrices::{markoff_number_of, mu, mu_x, mu_y, Mat2};
use crate::words::{FactoredWord, Word};

/// a² + b² + c² = 3abc over positive integers. Zero entries are rejected
/// even though (0,0,0) solves the equation.
pub fn check_equation(a: &BigUint, b: &BigUint, c: &BigUint) -> bool {
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return false;
    }
    a * a + b * b + c * c == BigUint::from(3u32) * a * b * c
}

/// The other root of t² − 3·p·q·t + (p² + q²) = 0 given one root `r`.
fn vieta(p: &BigUint, q: &BigUint, r: &BigUint) -> BigUint {
    BigUint::from(3u32) * p * q - r
}

/// A Markoff triple held as a sorted multiset `a ≤ b ≤ c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkoffTriple {
    a: BigUint,
    b: BigUint,
    c: BigUint,
}

impl MarkoffTriple {
    /// Accepts the three numbers in any order.
    pub fn new(a: impl Into<BigUint>, b: impl Into<BigUint>, c: impl Into<BigUint>) -> Result<Self> {
        let mut v = [a.into(), b.into(), c.into()];
        v.sort();
        let [a, b, c] = v;
        if !check_equation(&a, &b, &c) {
            return Err(Error::NotMarkoffTriple { a, b, c });
        }
        Ok(MarkoffTriple { a, b, c })
    }

    fn sorted_unchecked(a: BigUint, b: BigUint, c: BigUint) -> Self {
        let mut v = [a, b, c];
        v.sort();
        let [a, b, c] = v;
        debug_assert!(check_equation(&a, &b, &c));
        MarkoffTriple { a, b, c }
    }

    /// `{1, 1, 1}`
    pub fn root() -> Self {
        MarkoffTriple::sorted_unchecked(BigUint::one(), BigUint::one(), BigUint::one())
    }

    pub fn a(&self) -> &BigUint {
        &self.a
    }

    pub fn b(&self) -> &BigUint {
        &self.b
    }

    pub fn c(&self) -> &BigUint {
        &self.c
    }

    pub fn largest(&self) -> &BigUint {
        &self.c
    }

    pub fn as_array(&self) -> [&BigUint; 3] {
        [&self.a, &self.b, &self.c]
    }

    /// All three entries distinct.
    pub fn is_proper(&self) -> bool {
        self.a < self.b && self.b < self.c
    }

    /// Replaces the maximum `c` by `3ab − c`, which is strictly below `b`.
    pub fn flip_max(&self) -> Result<MarkoffTriple> {
        if !self.is_proper() {
            return Err(Error::ImproperTriple(self.to_string()));
        }
        Ok(MarkoffTriple::sorted_unchecked(
            self.a.clone(),
            self.b.clone(),
            vieta(&self.a, &self.b, &self.c),
        ))
    }

    /// The three Vieta flips, in the order: replace `a`, replace `b`,
    /// replace `c`.
    pub fn neighbors(&self) -> [MarkoffTriple; 3] {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        [
            MarkoffTriple::sorted_unchecked(vieta(b, c, a), b.clone(), c.clone()),
            MarkoffTriple::sorted_unchecked(a.clone(), vieta(a, c, b), c.clone()),
            MarkoffTriple::sorted_unchecked(a.clone(), b.clone(), vieta(a, b, c)),
        ]
    }
}

impl Ord for MarkoffTriple {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.c, &self.b, &self.a).cmp(&(&other.c, &other.b, &other.a))
    }
}

impl PartialOrd for MarkoffTriple {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// `(a, b, c)`
impl fmt::Display for MarkoffTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Decimal strings, so 64-bit JSON readers cannot corrupt large entries.
impl Serialize for MarkoffTriple {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(3))?;
        for n in self.as_array() {
            seq.serialize_element(&n.to_string())?;
        }
        seq.end()
    }
}

/// A triple together with the factorization that produced it and which
/// number came from which factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleProvenance {
    pub triple: MarkoffTriple,
    pub word: FactoredWord,
    pub from_w1: BigUint,
    pub from_w2: BigUint,
    pub from_word: BigUint,
}

pub(crate) fn provenance_from_matrices(
    word: FactoredWord,
    m1: &Mat2,
    m2: &Mat2,
    m: &Mat2,
) -> Result<TripleProvenance> {
    let from_w1 = markoff_number_of(m1)?;
    let from_w2 = markoff_number_of(m2)?;
    let from_word = markoff_number_of(m)?;
    let triple = MarkoffTriple::new(from_w1.clone(), from_w2.clone(), from_word.clone())
        .map_err(|e| Error::Invariant(format!("{word}: {e}")))?;
    if !triple.is_proper() || triple.c != from_word {
        return Err(Error::Invariant(format!(
            "{word} gives {triple}, expected a proper triple with maximum from the whole word"
        )));
    }
    Ok(TripleProvenance { triple, word, from_w1, from_w2, from_word })
}

/// {⅓Tr(μw₁), ⅓Tr(μw₂), ⅓Tr(μ(w₁w₂))}
pub fn triple_of_word(fw: &FactoredWord) -> Result<TripleProvenance> {
    let m1 = mu(fw.w1());
    let m2 = mu(fw.w2());
    let m = &m1 * &m2;
    provenance_from_matrices(fw.clone(), &m1, &m2, &m)
}

/// Inverse of [`triple_of_word`]: descend by `flip_max` to (1, 2, 5), then
/// rebuild the factorization from (x, y) one lift per descent step.
pub fn word_of_triple(t: &MarkoffTriple) -> Result<FactoredWord> {
    if !t.is_proper() {
        return Err(Error::ImproperTriple(t.to_string()));
    }
    let base = MarkoffTriple::sorted_unchecked(1u32.into(), 2u32.into(), 5u32.into());
    let mut smallest = Vec::new();
    let mut cur = t.clone();
    while cur != base {
        let next = cur
            .flip_max()
            .map_err(|_| Error::Invariant(format!("descent from {t} reached improper {cur}")))?;
        smallest.push(cur.a);
        cur = next;
    }

    let (mut w1, mut w2) = (Word::x(), Word::y());
    let (mut m1, mut m2) = (mu_x(), mu_y());
    for a in smallest.into_iter().rev() {
        let product = &m1 * &m2;
        let w = w1.concat(&w2);
        // e12 of a Christoffel μ-image is its Markoff number
        if m1.e12().magnitude() == &a {
            w2 = w;
            m2 = product;
        } else if m2.e12().magnitude() == &a {
            w1 = w;
            m1 = product;
        } else {
            return Err(Error::Invariant(format!("{a} matches neither factor of {w1} | {w2}")));
        }
    }
    Ok(FactoredWord::from_tree_unchecked(w1, w2))
}

/// Every Markoff triple with maximum ≤ `bound`, reached from (1, 1, 1) by
/// Vieta flips and sorted by `c`, then `b`, then `a`.
pub fn markoff_tree(bound: &BigUint) -> Vec<MarkoffTriple> {
    let mut seen = BTreeSet::new();
    let root = MarkoffTriple::root();
    if root.c > *bound {
        return Vec::new();
    }
    let mut queue = VecDeque::from([root.clone()]);
    seen.insert(root);
    while let Some(t) = queue.pop_front() {
        for n in t.neighbors() {
            if n.c <= *bound && !seen.contains(&n) {
                seen.insert(n.clone());
                queue.push_back(n);
            }
        }
    }
    seen.into_iter().collect()
}
