//! Christoffel words over the alphabet {x, y}.
//!
//! The lower Christoffel word of slope q/p codes the lattice path from (0,0)
//! to (p,q) that runs below the segment joining them with no lattice point
//! strictly between path and segment; `x` is a horizontal step, `y` a
//! vertical one. Proper words (both letters present) split uniquely at the
//! path point closest to the segment, and the pairs of factors form a binary
//! tree rooted at (x, y).

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// A finite word over {x, y}. The empty word is representable (it is the
/// monoid identity) but nothing in this module produces it.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn x() -> Self {
        Word(vec![Letter::X])
    }

    pub fn y() -> Self {
        Word(vec![Letter::Y])
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `(p, q)`: the number of x's and y's, i.e. the path endpoint.
    pub fn counts(&self) -> (u64, u64) {
        let xs = self.0.iter().filter(|&&l| l == Letter::X).count() as u64;
        (xs, self.0.len() as u64 - xs)
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn is_suffix_of(&self, other: &Word) -> bool {
        other.0.ends_with(&self.0)
    }

    /// Both letters occur.
    pub fn is_proper(&self) -> bool {
        let (p, q) = self.counts();
        p > 0 && q > 0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|l| l.as_char()).collect();
        f.write_str(&s)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                _ => Err(Error::ParseWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Endpoint `(p, q)` of a Christoffel path: `p` horizontal steps, `q`
/// vertical steps, coprime and not both zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slope {
    p: u64,
    q: u64,
}

impl Slope {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidSlope { p, q });
        }
        Ok(Slope { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Machine form `(p,q)`.
    pub fn pair_string(&self) -> String {
        format!("({},{})", self.p, self.q)
    }
}

/// Displays as the slope `q/p`.
impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.q, self.p)
    }
}

/// The lower Christoffel word of slope q/p.
///
/// Step i (1-based) is vertical exactly when floor(iq/n) exceeds
/// floor((i-1)q/n), n = p + q: the path height after i steps is
/// floor(iq/n).
pub fn christoffel_word(slope: Slope) -> Word {
    let (p, q) = (slope.p as u128, slope.q as u128);
    let n = p + q;
    let letters = (1..=n)
        .map(|i| {
            if (i * q) / n == ((i - 1) * q) / n {
                Letter::X
            } else {
                Letter::Y
            }
        })
        .collect();
    Word(letters)
}

/// Returns the slope if `word` is the Christoffel word of its own letter
/// counts.
pub fn is_christoffel(word: &Word) -> Option<Slope> {
    let (p, q) = word.counts();
    let slope = Slope::new(p, q).ok()?;
    (christoffel_word(slope) == *word).then_some(slope)
}

/// Unit-step lattice path from the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePath {
    points: Vec<(u64, u64)>,
}

impl LatticePath {
    pub fn points(&self) -> &[(u64, u64)] {
        &self.points
    }

    pub fn endpoint(&self) -> (u64, u64) {
        *self.points.last().expect("a path always contains the origin")
    }

    /// q·a − p·b ≥ 0 at every point, (p, q) being the endpoint.
    pub fn is_weakly_below_segment(&self) -> bool {
        let (p, q) = self.endpoint();
        self.points
            .iter()
            .all(|&(a, b)| q as i128 * a as i128 - p as i128 * b as i128 >= 0)
    }

    /// Lattice points lying strictly above the path and strictly below the
    /// segment from the origin to the endpoint.
    pub fn interior_points(&self) -> Vec<(u64, u64)> {
        let (p, q) = self.endpoint();
        let mut top = vec![0u64; p as usize + 1];
        for &(a, b) in &self.points {
            top[a as usize] = top[a as usize].max(b);
        }
        let mut inside = Vec::new();
        for a in 0..=p {
            for b in top[a as usize] + 1..=q {
                if (q as i128) * (a as i128) - (p as i128) * (b as i128) > 0 {
                    inside.push((a, b));
                }
            }
        }
        inside
    }
}

pub fn lattice_path(word: &Word) -> LatticePath {
    let mut points = Vec::with_capacity(word.len() + 1);
    let (mut a, mut b) = (0u64, 0u64);
    points.push((a, b));
    for &letter in word.letters() {
        match letter {
            Letter::X => a += 1,
            Letter::Y => b += 1,
        }
        points.push((a, b));
    }
    LatticePath { points }
}

/// A proper Christoffel word split as its standard factorization `w1 · w2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FactoredWord {
    w1: Word,
    w2: Word,
}

impl FactoredWord {
    /// Validates that `(w1, w2)` is the standard factorization of `w1 · w2`.
    pub fn new(w1: Word, w2: Word) -> Result<Self> {
        let fw = standard_factorization(&w1.concat(&w2))?;
        if fw.w1 != w1 {
            return Err(Error::NotChristoffel(format!("{w1} | {w2} (as a factorization)")));
        }
        Ok(fw)
    }

    /// Caller guarantees the pair is a node of the Christoffel tree.
    pub(crate) fn from_tree_unchecked(w1: Word, w2: Word) -> Self {
        FactoredWord { w1, w2 }
    }

    /// The tree root `(x, y)`.
    pub fn root() -> Self {
        FactoredWord { w1: Word::x(), w2: Word::y() }
    }

    pub fn w1(&self) -> &Word {
        &self.w1
    }

    pub fn w2(&self) -> &Word {
        &self.w2
    }

    pub fn word(&self) -> Word {
        self.w1.concat(&self.w2)
    }

    pub fn into_parts(self) -> (Word, Word) {
        (self.w1, self.w2)
    }

    /// `(u, v) -> (u, uv)`
    pub fn left_child(&self) -> Self {
        FactoredWord { w1: self.w1.clone(), w2: self.word() }
    }

    /// `(u, v) -> (uv, v)`
    pub fn right_child(&self) -> Self {
        FactoredWord { w1: self.word(), w2: self.w2.clone() }
    }
}

impl fmt::Display for FactoredWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.w1, self.w2)
    }
}

/// Cuts a proper Christoffel word at the interior path point closest to the
/// segment, which is the unique point with q·a − p·b = 1.
pub fn standard_factorization(word: &Word) -> Result<FactoredWord> {
    let slope = is_christoffel(word).ok_or_else(|| Error::NotChristoffel(word.to_string()))?;
    if !word.is_proper() {
        return Err(Error::ImproperWord(word.to_string()));
    }
    let (p, q) = (slope.p as i128, slope.q as i128);
    let path = lattice_path(word);
    let interior = &path.points()[1..word.len()];
    let mut cuts = interior
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| q * a as i128 - p * b as i128 == 1)
        .map(|(i, _)| i + 1);
    match (cuts.next(), cuts.next()) {
        (Some(k), None) => Ok(FactoredWord {
            w1: Word(word.0[..k].to_vec()),
            w2: Word(word.0[k..].to_vec()),
        }),
        _ => Err(Error::Invariant(format!("{word} has no unique closest point"))),
    }
}

/// Depth-first walk of the Christoffel tree down to a fixed depth, yielding
/// `(depth, pair)`; the `(u, uv)` branch is visited before `(uv, v)`.
#[derive(Debug, Clone)]
pub struct ChristoffelTree {
    max_depth: usize,
    stack: Vec<(usize, FactoredWord)>,
}

impl ChristoffelTree {
    pub fn new(max_depth: usize) -> Self {
        ChristoffelTree { max_depth, stack: vec![(0, FactoredWord::root())] }
    }
}

impl Iterator for ChristoffelTree {
    type Item = (usize, FactoredWord);

    fn next(&mut self) -> Option<Self::Item> {
        let (depth, node) = self.stack.pop()?;
        if depth < self.max_depth {
            self.stack.push((depth + 1, node.right_child()));
            self.stack.push((depth + 1, node.left_child()));
        }
        Some((depth, node))
    }
}

/// Every standard factorization reachable from `(x, y)` in at most
/// `max_depth` rule applications, in depth-first order.
pub fn christoffel_tree(max_depth: usize) -> Vec<FactoredWord> {
    ChristoffelTree::new(max_depth).map(|(_, fw)| fw).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(RenderFormat::Ascii),
            "svg" => Ok(RenderFormat::Svg),
            _ => Err(Error::Parse { what: "render format", input: s.to_string() }),
        }
    }
}

pub fn render_path(word: &Word, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => render_ascii(word),
        RenderFormat::Svg => render_svg(word),
    }
}

// One text column per step, one row per height (top row first): a
// horizontal step at height b is `_` in row b, a step up to height b is `|`.
fn render_ascii(word: &Word) -> String {
    let (_, q) = word.counts();
    let mut rows = vec![vec![' '; word.len()]; q as usize + 1];
    let mut height = 0usize;
    for (col, &letter) in word.letters().iter().enumerate() {
        match letter {
            Letter::X => rows[height][col] = '_',
            Letter::Y => {
                height += 1;
                rows[height][col] = '|';
            }
        }
    }
    let mut lines: Vec<String> = rows
        .iter()
        .rev()
        .map(|r| r.iter().collect::<String>().trim_end().to_string())
        .collect();
    while lines.last().is_some_and(|l| l.is_empty()) {
        lines.pop();
    }
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

const SVG_UNIT: u64 = 40;
const SVG_MARGIN: u64 = 20;

fn render_svg(word: &Word) -> String {
    use std::fmt::Write;

    let (p, q) = word.counts();
    let width = p * SVG_UNIT + 2 * SVG_MARGIN;
    let height = q * SVG_UNIT + 2 * SVG_MARGIN;
    let sx = |a: u64| SVG_MARGIN + a * SVG_UNIT;
    let sy = |b: u64| SVG_MARGIN + (q - b) * SVG_UNIT;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(svg, r#"  <title>Christoffel word {word}</title>"#);
    for a in 0..=p {
        let _ = writeln!(
            svg,
            r##"  <line class="grid" x1="{x}" y1="{y1}" x2="{x}" y2="{y2}" stroke="#ccc" stroke-width="1"/>"##,
            x = sx(a),
            y1 = sy(0),
            y2 = sy(q)
        );
    }
    for b in 0..=q {
        let _ = writeln!(
            svg,
            r##"  <line class="grid" x1="{x1}" y1="{y}" x2="{x2}" y2="{y}" stroke="#ccc" stroke-width="1"/>"##,
            x1 = sx(0),
            x2 = sx(p),
            y = sy(b)
        );
    }
    let _ = writeln!(
        svg,
        r##"  <line class="segment" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#c00" stroke-width="2" stroke-dasharray="6 4"/>"##,
        sx(0),
        sy(0),
        sx(p),
        sy(q)
    );
    let path = lattice_path(word);
    for pair in path.points().windows(2) {
        let ((a0, b0), (a1, b1)) = (pair[0], pair[1]);
        let _ = writeln!(
            svg,
            r##"  <line class="step" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#000" stroke-width="3" stroke-linecap="round"/>"##,
            sx(a0),
            sy(b0),
            sx(a1),
            sy(b1)
        );
    }
    svg.push_str("</svg>\n");
    svg
}
