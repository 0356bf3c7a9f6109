//! Partitions, skew diagrams and the two cell orders used by pictures.
//!
//! Cells are 1-based `(row, col)` pairs in English notation: row 1 is the
//! top row and columns grow to the right.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts. Trailing zeros are
/// dropped on construction, so derived equality is structural.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Length of row `i` (1-based); rows past the end have length 0.
    pub fn part(&self, i: usize) -> usize {
        debug_assert!(i >= 1);
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of non-zero rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.rows() <= self.rows() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    /// All partitions of `n`, in reverse lexicographic order ((n) first).
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: current.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                current.push(p);
                rec(rest - p, p, current, out);
                current.pop();
            }
        }
        rec(n, n, &mut current, &mut out);
        out
    }

    /// All partitions fitting in a `rows × cols` box with at most `max_size`
    /// cells, ordered by size then reverse lexicographically.
    pub fn all_in_box(rows: usize, cols: usize, max_size: usize) -> Vec<Partition> {
        (0..=max_size).flat_map(Partition::all_of_size).filter(|p| p.rows() <= rows && p.part(1) <= cols).collect()
    }

    /// All partitions contained in `self` (including ∅ and `self`).
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.rows());
        fn rec(outer: &[usize], i: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::new(current.clone()).expect("weakly decreasing by construction"));
                return;
            }
            for p in (0..=outer[i].min(max)).rev() {
                current.push(p);
                rec(outer, i + 1, p, current, out);
                current.pop();
            }
        }
        rec(&self.parts, 0, usize::MAX, &mut current, &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A box of a diagram. Serialized as `[row, col]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(usize, usize)", into = "(usize, usize)")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl TryFrom<(usize, usize)> for Cell {
    type Error = Error;

    fn try_from((row, col): (usize, usize)) -> Result<Self> {
        if row == 0 || col == 0 {
            return Err(Error::BadCell { row, col });
        }
        Ok(Cell { row, col })
    }
}

impl From<Cell> for (usize, usize) {
    fn from(c: Cell) -> Self {
        (c.row, c.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// The componentwise partial order `≤_P`.
pub fn leq_p(a: Cell, b: Cell) -> bool {
    a.row <= b.row && a.col <= b.col
}

/// The total order `≤_J`: by row, and right to left within a row.
pub fn leq_j(a: Cell, b: Cell) -> bool {
    a.row < b.row || (a.row == b.row && a.col >= b.col)
}

/// `Ordering` form of `≤_J`, for sorting.
pub fn j_cmp(a: Cell, b: Cell) -> Ordering {
    a.row.cmp(&b.row).then(b.col.cmp(&a.col))
}

/// The skew diagram `outer \ inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSkewShape")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Deserialize)]
struct RawSkewShape {
    outer: Partition,
    #[serde(default)]
    inner: Partition,
}

impl TryFrom<RawSkewShape> for SkewShape {
    type Error = Error;

    fn try_from(raw: RawSkewShape) -> Result<Self> {
        SkewShape::new(raw.outer, raw.inner)
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotNested { outer: outer.parts, inner: inner.parts });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(shape: Partition) -> Self {
        SkewShape { outer: shape, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of rows of the outer partition (some may be empty in the skew diagram).
    pub fn rows(&self) -> usize {
        self.outer.rows()
    }

    /// Columns `lo..=hi` occupied in row `i`; empty when `lo > hi`.
    pub fn row_span(&self, i: usize) -> (usize, usize) {
        (self.inner.part(i) + 1, self.outer.part(i))
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.col > self.inner.part(c.row) && c.col <= self.outer.part(c.row)
    }

    /// Cells in row-major order (top to bottom, left to right).
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (1..=self.rows()).flat_map(move |i| {
            let (lo, hi) = self.row_span(i);
            (lo..=hi).map(move |j| Cell::new(i, j))
        })
    }

    /// Cells sorted ascending by `≤_J`.
    pub fn j_order_cells(&self) -> Vec<Cell> {
        (1..=self.rows())
            .flat_map(|i| {
                let (lo, hi) = self.row_span(i);
                (lo..=hi).rev().map(move |j| Cell::new(i, j))
            })
            .collect()
    }

    /// `outer[i] - inner[i]` for every row of the outer partition.
    pub fn row_lengths(&self) -> Composition {
        Composition((1..=self.rows()).map(|i| self.outer.part(i) - self.inner.part(i)).collect())
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}\\{}", self.outer, self.inner)
        }
    }
}

/// A finite sequence of non-negative integers; not necessarily decreasing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    /// Component `i` (1-based), 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Equality up to trailing zeros.
    pub fn same_as(&self, other: &Composition) -> bool {
        let n = self.0.len().max(other.0.len());
        (1..=n).all(|i| self.part(i) == other.part(i))
    }

    pub fn to_partition(&self) -> Result<Partition> {
        Partition::new(self.0.clone())
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.parts.clone())
    }
}

/// The addition `shape[i]`: one box appended to row `i`.
pub fn add_one(shape: &Composition, i: usize) -> Composition {
    assert!(i >= 1, "rows are 1-based");
    let mut parts = shape.0.clone();
    if parts.len() < i {
        parts.resize(i, 0);
    }
    parts[i - 1] += 1;
    Composition(parts)
}

/// Result of adding a word to a partition letter by letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Addition {
    pub result: Composition,
    pub valid: bool,
    /// 1-based step whose intermediate first fails to be a partition.
    pub first_failure: Option<usize>,
}

impl Addition {
    /// The final partition, if every intermediate was a partition.
    pub fn partition(&self) -> Option<Partition> {
        if self.valid {
            self.result.to_partition().ok()
        } else {
            None
        }
    }
}

/// Applies `add_one` for each letter of `word`, tracking whether every
/// intermediate stays a partition.
pub fn add_sequence(base: &Partition, word: &[usize]) -> Addition {
    let mut parts = base.parts.clone();
    let mut first_failure = None;
    for (k, &i) in word.iter().enumerate() {
        assert!(i >= 1, "letters are positive");
        if parts.len() < i {
            parts.resize(i, 0);
        }
        parts[i - 1] += 1;
        // only row i changed, so only its two neighbours can break the order
        if first_failure.is_none() && i >= 2 && parts[i - 2] < parts[i - 1] {
            first_failure = Some(k + 1);
        }
    }
    Addition { result: Composition(parts), valid: first_failure.is_none(), first_failure }
}
