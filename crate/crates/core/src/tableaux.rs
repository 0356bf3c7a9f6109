//! Skew tableaux, their readings and brute-force enumeration.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::crystal::TensorWord;
use crate::error::{Error, Result};
use crate::shapes::{Cell, Composition, Partition, SkewShape};

/// Default cap on the number of cells for exhaustive tableau enumeration.
pub const DEFAULT_MAX_CELLS: usize = 12;

/// A word in the plactic sense: read left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

/// A filling of a skew shape. `rows[i]` holds the entries of row `i + 1`
/// for columns `inner[i] + 1 ..= outer[i]`.
///
/// JSON form: `{"outer":[..],"inner":[..],"rows":[[..],..]}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau", into = "RawTableau")]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    outer: Partition,
    #[serde(default)]
    inner: Partition,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<RawTableau> for SkewTableau {
    type Error = Error;

    fn try_from(raw: RawTableau) -> Result<Self> {
        SkewTableau::new(SkewShape::new(raw.outer, raw.inner)?, raw.rows)
    }
}

impl From<SkewTableau> for RawTableau {
    fn from(t: SkewTableau) -> Self {
        let SkewTableau { shape, rows } = t;
        RawTableau { outer: shape.outer().clone(), inner: shape.inner().clone(), rows }
    }
}

impl SkewTableau {
    /// Builds a filling; trailing empty rows may be omitted.
    pub fn new(shape: SkewShape, mut rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() > shape.rows() && rows[shape.rows()..].iter().any(|r| !r.is_empty()) {
            return Err(Error::ShapeMismatch(format!("{} rows for shape {shape}", rows.len())));
        }
        rows.resize(shape.rows(), Vec::new());
        for (i, row) in rows.iter().enumerate() {
            let (lo, hi) = shape.row_span(i + 1);
            let want = (hi + 1).saturating_sub(lo);
            if row.len() != want {
                return Err(Error::ShapeMismatch(format!(
                    "row {} has {} entries, shape {shape} needs {want}",
                    i + 1,
                    row.len()
                )));
            }
            if row.contains(&0) {
                return Err(Error::ShapeMismatch("entries must be positive".into()));
            }
        }
        Ok(SkewTableau { shape, rows })
    }

    /// Straight tableau from its rows.
    pub fn straight(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        SkewTableau::new(SkewShape::straight(shape), rows)
    }

    /// Fills the shape's cells in `≤_J` order with `letters`.
    pub fn from_j_order(shape: SkewShape, letters: &[usize]) -> Result<Self> {
        if letters.len() != shape.size() {
            return Err(Error::SizeMismatch(letters.len(), shape.size()));
        }
        let mut rows = Vec::with_capacity(shape.rows());
        let mut it = letters.iter();
        for i in 1..=shape.rows() {
            let (lo, hi) = shape.row_span(i);
            let mut row: Vec<usize> = it.by_ref().take((hi + 1).saturating_sub(lo)).copied().collect();
            row.reverse();
            rows.push(row);
        }
        SkewTableau::new(shape, rows)
    }

    pub fn empty() -> Self {
        SkewTableau { shape: SkewShape::straight(Partition::empty()), rows: Vec::new() }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<usize>> {
        self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn get(&self, c: Cell) -> Option<usize> {
        if !self.shape.contains(c) {
            return None;
        }
        Some(self.rows[c.row - 1][c.col - 1 - self.shape.inner().part(c.row)])
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Multiplicity of each letter: component `k` counts entries equal to `k`.
    pub fn content(&self) -> Composition {
        let mut counts = vec![0; self.max_entry()];
        for &x in self.rows.iter().flatten() {
            counts[x - 1] += 1;
        }
        Composition(counts)
    }

    pub fn is_semistandard(&self) -> bool {
        validate_semistandard(self)
    }

    /// Entries along `≤_J` without any validation.
    pub fn j_order_letters(&self) -> Vec<usize> {
        self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect()
    }

    /// The middle-eastern reading as a tensor word of the given rank.
    pub fn me_reading(&self, rank: usize) -> Result<TensorWord> {
        if !self.is_semistandard() {
            return Err(Error::NotSemistandard);
        }
        TensorWord::new(rank, self.j_order_letters())
    }

    /// Rows left to right, bottom row first.
    pub fn skew_word(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }

    /// Cells holding `k`, rightmost first.
    pub fn level_set(&self, k: usize) -> Vec<Cell> {
        let mut cells: Vec<Cell> = self.shape.cells().filter(|&c| self.get(c) == Some(k)).collect();
        cells.sort_by(|a, b| b.col.cmp(&a.col).then(a.row.cmp(&b.row)));
        cells
    }

    /// Rank of `c` among the cells sharing its entry, counted from the right.
    pub fn p_index(&self, c: Cell) -> Result<usize> {
        let k = self.get(c).ok_or(Error::CellOutsideShape(c))?;
        let pos = self.level_set(k).iter().position(|&d| d == c).expect("cell holds k");
        Ok(pos + 1)
    }
}

impl fmt::Debug for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:?}", self.shape, self.rows)
    }
}

/// Rows weakly increase and columns strictly increase.
pub fn validate_semistandard(t: &SkewTableau) -> bool {
    let shape = &t.shape;
    for i in 1..=shape.rows() {
        let row = &t.rows[i - 1];
        if row.windows(2).any(|w| w[0] > w[1]) {
            return false;
        }
        if i == 1 {
            continue;
        }
        let (lo, hi) = shape.row_span(i);
        for j in lo..=hi {
            if let Some(above) = t.get(Cell::new(i - 1, j)) {
                if above >= t.get(Cell::new(i, j)).expect("in shape") {
                    return false;
                }
            }
        }
    }
    true
}

/// The tableau of shape `shape` whose row `k` is filled with `k`.
pub fn highest_tableau(shape: &Partition) -> SkewTableau {
    let rows = shape.parts().iter().enumerate().map(|(i, &len)| vec![i + 1; len]).collect();
    SkewTableau { shape: SkewShape::straight(shape.clone()), rows }
}

/// Every semistandard filling of `shape` with entries in `1..=max_entry`,
/// ordered lexicographically by `≤_J` reading.
pub fn enumerate_ssyt(shape: &SkewShape, max_entry: usize, max_cells: usize) -> Result<Vec<SkewTableau>> {
    let mut out = Vec::new();
    for_each_filling(shape, max_entry, max_cells, |_, _| true, |t| out.push(t))?;
    Ok(out)
}

/// Fills `shape` in `≤_J` order, calling `accept(prefix, letter)` before each
/// placement so callers can prune on the reading prefix.
pub(crate) fn for_each_filling(
    shape: &SkewShape,
    max_entry: usize,
    max_cells: usize,
    mut accept: impl FnMut(&[usize], usize) -> bool,
    mut emit: impl FnMut(SkewTableau),
) -> Result<()> {
    let n = shape.size();
    if n > max_cells {
        return Err(Error::BoundExceeded { size: n, bound: max_cells });
    }
    let cells = shape.j_order_cells();
    // index (in `cells`) of the cell to the right and the cell above, when in shape
    let index_of = |c: Cell| cells.iter().position(|&d| d == c);
    let right: Vec<Option<usize>> = cells.iter().map(|c| index_of(Cell::new(c.row, c.col + 1))).collect();
    let above: Vec<Option<usize>> =
        cells.iter().map(|c| if c.row > 1 { index_of(Cell::new(c.row - 1, c.col)) } else { None }).collect();

    let mut letters = Vec::with_capacity(n);
    fn rec(
        pos: usize,
        max_entry: usize,
        right: &[Option<usize>],
        above: &[Option<usize>],
        letters: &mut Vec<usize>,
        accept: &mut dyn FnMut(&[usize], usize) -> bool,
        done: &mut dyn FnMut(&[usize]),
    ) {
        if pos == right.len() {
            done(letters);
            return;
        }
        let lo = above[pos].map_or(1, |a| letters[a] + 1);
        let hi = right[pos].map_or(max_entry, |r| letters[r].min(max_entry));
        for x in lo..=hi {
            if !accept(letters, x) {
                continue;
            }
            letters.push(x);
            rec(pos + 1, max_entry, right, above, letters, accept, done);
            letters.pop();
        }
    }
    let mut done = |letters: &[usize]| {
        emit(SkewTableau::from_j_order(shape.clone(), letters).expect("letters fit the shape"));
    };
    rec(0, max_entry, &right, &above, &mut letters, &mut accept, &mut done);
    Ok(())
}
