//! Bounded empirical checks around the injectivity conjecture: no two
//! Christoffel words share a Markoff number.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::markoff::markoff_tree;
use crate::matrices::{markoff_number_of, mu_x, mu_y, Mat2};
use crate::words::{FactoredWord, Word};

/// Tree node carrying the μ-images of both factors, so each child costs one
/// matrix product instead of a full re-evaluation of μ.
#[derive(Debug, Clone)]
struct Node {
    pair: FactoredWord,
    m1: Mat2,
    m2: Mat2,
    product: Mat2,
}

impl Node {
    fn new(pair: FactoredWord, m1: Mat2, m2: Mat2) -> Self {
        let product = &m1 * &m2;
        Node { pair, m1, m2, product }
    }

    fn root() -> Self {
        Node::new(FactoredWord::root(), mu_x(), mu_y())
    }

    fn children(&self) -> [Node; 2] {
        [
            Node::new(self.pair.left_child(), self.m1.clone(), self.product.clone()),
            Node::new(self.pair.right_child(), self.product.clone(), self.m2.clone()),
        ]
    }
}

/// Markoff number → words realizing it. Merging is a per-key union followed
/// by a canonical sort, so partial scans combine in any order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Tally {
    words_checked: u64,
    numbers: BTreeMap<BigUint, Vec<Word>>,
}

impl Tally {
    fn record(&mut self, number: BigUint, word: Word) {
        self.words_checked += 1;
        self.numbers.entry(number).or_default().push(word);
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.words_checked += other.words_checked;
        for (n, ws) in other.numbers {
            self.numbers.entry(n).or_default().extend(ws);
        }
        self
    }

    fn canonicalize(&mut self) {
        for ws in self.numbers.values_mut() {
            ws.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        }
    }
}

fn scan_subtree(start: Node, start_depth: usize, max_depth: usize) -> Result<Tally> {
    let mut tally = Tally::default();
    let mut stack = vec![(start_depth, start)];
    while let Some((depth, node)) = stack.pop() {
        tally.record(markoff_number_of(&node.product)?, node.pair.word());
        if depth < max_depth {
            let [l, r] = node.children();
            stack.push((depth + 1, r));
            stack.push((depth + 1, l));
        }
    }
    Ok(tally)
}

const PARALLEL_SPLIT_DEPTH: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Collision {
    #[serde(serialize_with = "as_decimal")]
    pub number: BigUint,
    pub words: Vec<Word>,
}

/// Outcome of [`injectivity_scan`]. `bound` is the largest Markoff number
/// met during the scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollisionReport {
    #[serde(serialize_with = "as_decimal")]
    pub bound: BigUint,
    pub words_checked: u64,
    #[serde(rename = "distinct_numbers", serialize_with = "key_count")]
    pub numbers: BTreeMap<BigUint, Vec<Word>>,
    pub collisions: Vec<Collision>,
}

fn as_decimal<S: serde::Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(n)
}

fn key_count<S: serde::Serializer>(
    m: &BTreeMap<BigUint, Vec<Word>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(m.len() as u64)
}

impl CollisionReport {
    fn from_tally(mut tally: Tally) -> Self {
        tally.canonicalize();
        let bound = tally.numbers.keys().next_back().cloned().unwrap_or_default();
        let collisions = tally
            .numbers
            .iter()
            .filter(|(_, ws)| ws.len() >= 2)
            .map(|(n, ws)| Collision { number: n.clone(), words: ws.clone() })
            .collect();
        CollisionReport { bound, words_checked: tally.words_checked, numbers: tally.numbers, collisions }
    }

    pub fn is_injective(&self) -> bool {
        self.collisions.is_empty()
    }

    pub fn distinct_numbers(&self) -> usize {
        self.numbers.len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Computes ⅓Tr(μw) for x, y, and every word w₁w₂ of the Christoffel tree
/// down to `depth`, grouping words by number.
pub fn injectivity_scan(depth: usize) -> Result<CollisionReport> {
    let split = depth.min(PARALLEL_SPLIT_DEPTH);

    let mut top = Tally::default();
    top.record(markoff_number_of(&mu_x())?, Word::x());
    top.record(markoff_number_of(&mu_y())?, Word::y());
    let mut frontier = vec![Node::root()];
    for _ in 0..split {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for node in frontier {
            top.record(markoff_number_of(&node.product)?, node.pair.word());
            next.extend(node.children());
        }
        frontier = next;
    }

    let below = frontier
        .into_par_iter()
        .map(|node| scan_subtree(node, split, depth))
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;

    Ok(CollisionReport::from_tally(top.merge(below)))
}

/// Markoff numbers ⅓Tr(μw) ≤ `bound` over proper Christoffel words w.
///
/// A branch is cut as soon as its number exceeds the bound: both tree rules
/// multiply the whole word's μ-image by a positive matrix, so numbers only
/// grow going down.
pub fn christoffel_numbers_up_to(bound: &BigUint) -> Result<BTreeSet<BigUint>> {
    let mut found = BTreeSet::new();
    let mut stack = vec![Node::root()];
    while let Some(node) = stack.pop() {
        let n = markoff_number_of(&node.product)?;
        if n > *bound {
            continue;
        }
        found.insert(n);
        stack.extend(node.children());
    }
    Ok(found)
}

/// Maxima of proper triples with maximum ≤ `bound`, from the Vieta tree.
pub fn triple_maxima_up_to(bound: &BigUint) -> BTreeSet<BigUint> {
    markoff_tree(bound)
        .into_iter()
        .filter(|t| t.is_proper())
        .map(|t| t.largest().clone())
        .collect()
}

/// Whether the Vieta-tree maxima and the Christoffel-word numbers agree up
/// to `bound`.
pub fn cross_check(bound: &BigUint) -> Result<bool> {
    Ok(triple_maxima_up_to(bound) == christoffel_numbers_up_to(bound)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::christoffel_tree;

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn depth_zero_scan() {
        let r = injectivity_scan(0).unwrap();
        assert_eq!(r.numbers.keys().cloned().collect::<Vec<_>>(), vec![n(1), n(2), n(5)]);
        assert_eq!(r.words_checked, 3);
        assert!(r.is_injective());
        assert_eq!(r.bound, n(5));
    }

    #[test]
    fn depth_two_scan() {
        let r = injectivity_scan(2).unwrap();
        for v in [13, 29, 34, 169, 194, 433] {
            assert!(r.numbers.contains_key(&n(v)), "missing {v}");
        }
        assert_eq!(r.words_checked, 9);
        assert!(r.is_injective());
    }

    #[test]
    fn parallel_scan_matches_plain_tree_walk() {
        let r = injectivity_scan(7).unwrap();
        let mut expected: BTreeMap<BigUint, Vec<Word>> = BTreeMap::new();
        for w in [Word::x(), Word::y()] {
            expected.entry(crate::matrices::markoff_number(&w).unwrap()).or_default().push(w);
        }
        for fw in christoffel_tree(7) {
            let w = fw.word();
            expected.entry(crate::matrices::markoff_number(&w).unwrap()).or_default().push(w);
        }
        assert_eq!(r.numbers, expected);
        assert_eq!(r.words_checked, 2 + 255);
    }

    #[test]
    fn tally_merge_is_order_independent() {
        let a = scan_subtree(Node::root().children()[0].clone(), 1, 5).unwrap();
        let b = scan_subtree(Node::root().children()[1].clone(), 1, 5).unwrap();
        let mut ab = a.clone().merge(b.clone());
        let mut ba = b.merge(a);
        ab.canonicalize();
        ba.canonicalize();
        assert_eq!(ab, ba);
    }

    #[test]
    fn collisions_are_reported_when_present() {
        // yx is not Christoffel; it only stands in for a hypothetical second word.
        let mut t = Tally::default();
        t.record(n(5), "yx".parse().unwrap());
        t.record(n(1), Word::x());
        t.record(n(5), "xy".parse().unwrap());
        let r = CollisionReport::from_tally(t);
        assert!(!r.is_injective());
        assert_eq!(
            r.collisions,
            vec![Collision { number: n(5), words: vec!["xy".parse().unwrap(), "yx".parse().unwrap()] }]
        );
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["collisions"], serde_json::json!([{"number": "5", "words": ["xy", "yx"]}]));
    }

    #[test]
    fn report_json_shape() {
        let json = injectivity_scan(0).unwrap().to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["bound"], "5");
        assert_eq!(v["words_checked"], 3);
        assert_eq!(v["distinct_numbers"], 3);
        assert_eq!(v["collisions"], serde_json::json!([]));
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["bound", "words_checked", "distinct_numbers", "collisions"]);
    }

    #[test]
    fn small_cross_checks() {
        assert!(cross_check(&n(1)).unwrap());
        assert!(cross_check(&n(5)).unwrap());
        assert_eq!(christoffel_numbers_up_to(&n(5)).unwrap(), BTreeSet::from([n(5)]));
        assert!(christoffel_numbers_up_to(&n(4)).unwrap().is_empty());
    }
}
