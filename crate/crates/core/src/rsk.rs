//! Column bumping and the column-type RSK correspondence.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition};
use crate::tableaux::{SkewTableau, Word};

/// Result of `x → T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BumpOutcome {
    pub tableau: SkewTableau,
    pub new_cell: Cell,
}

/// Column-inserts `x` into the rows of a straight tableau in place and
/// returns the new box.
///
/// In each column, `x` replaces the topmost entry `≥ x`, which moves on to
/// the next column; when every entry is `< x` (or the column is empty) `x`
/// goes below the column.
pub(crate) fn bump_rows(rows: &mut Vec<Vec<usize>>, mut x: usize) -> Cell {
    let mut col = 0;
    loop {
        let mut height = 0;
        let mut bumped = false;
        while height < rows.len() && rows[height].len() > col {
            let slot = &mut rows[height][col];
            if *slot >= x {
                std::mem::swap(slot, &mut x);
                bumped = true;
                break;
            }
            height += 1;
        }
        if !bumped {
            if height == rows.len() {
                debug_assert_eq!(col, 0);
                rows.push(vec![x]);
            } else {
                debug_assert_eq!(rows[height].len(), col);
                rows[height].push(x);
            }
            return Cell::new(height + 1, col + 1);
        }
        col += 1;
    }
}

/// Undoes `bump_rows` from the corner `(row, col)` (1-based); returns the
/// letter leaving the first column.
pub(crate) fn unbump_rows(rows: &mut Vec<Vec<usize>>, corner: Cell) -> usize {
    let mut carried = rows[corner.row - 1].pop().expect("corner is in shape");
    for col in (0..corner.col - 1).rev() {
        let row = (0..rows.len())
            .rev()
            .find(|&i| rows[i].len() > col && rows[i][col] <= carried)
            .expect("row of a semistandard tableau is weakly increasing");
        std::mem::swap(&mut rows[row][col], &mut carried);
    }
    while rows.last().is_some_and(Vec::is_empty) {
        rows.pop();
    }
    carried
}

fn require_straight_semistandard(t: &SkewTableau) -> Result<()> {
    if !t.shape().is_straight() {
        return Err(Error::ShapeMismatch(format!("{} is not a straight shape", t.shape())));
    }
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    Ok(())
}

fn from_rows(rows: Vec<Vec<usize>>) -> SkewTableau {
    SkewTableau::straight(rows).expect("bumping keeps a straight shape")
}

/// `x → t`.
pub fn column_insert(t: &SkewTableau, x: usize) -> Result<BumpOutcome> {
    require_straight_semistandard(t)?;
    if x == 0 {
        return Err(Error::LetterOutOfRange { letter: 0, max: usize::MAX });
    }
    let mut rows = t.rows().to_vec();
    let new_cell = bump_rows(&mut rows, x);
    Ok(BumpOutcome { tableau: from_rows(rows), new_cell })
}

fn is_corner(shape: &Partition, c: Cell) -> bool {
    c.row >= 1 && c.col >= 1 && shape.part(c.row) == c.col && shape.part(c.row + 1) < c.col
}

/// Reverse column bumping from the removable corner `c`.
pub fn reverse_column_insert(t: &SkewTableau, c: Cell) -> Result<(SkewTableau, usize)> {
    require_straight_semistandard(t)?;
    if !is_corner(t.shape().outer(), c) {
        return Err(Error::NotACorner(c));
    }
    let mut rows = t.rows().to_vec();
    let x = unbump_rows(&mut rows, c);
    Ok((from_rows(rows), x))
}

/// Column-inserts the letters in order (first letter first).
pub fn insert_word(letters: impl IntoIterator<Item = usize>) -> SkewTableau {
    let mut rows = Vec::new();
    for x in letters {
        bump_rows(&mut rows, x);
    }
    from_rows(rows)
}

/// Like [`insert_word`], also returning the new box of every step.
pub fn insert_word_tracking(letters: impl IntoIterator<Item = usize>) -> (SkewTableau, Vec<Cell>) {
    let mut rows = Vec::new();
    let cells = letters.into_iter().map(|x| bump_rows(&mut rows, x)).collect();
    (from_rows(rows), cells)
}

/// A two-rowed array `(u₁…u_m / v₁…v_m)`. JSON: `{"top":[..],"bottom":[..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawArray")]
pub struct TwoRowedArray {
    top: Word,
    bottom: Word,
}

#[derive(Deserialize)]
struct RawArray {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl TryFrom<RawArray> for TwoRowedArray {
    type Error = Error;

    fn try_from(raw: RawArray) -> Result<Self> {
        TwoRowedArray::new(raw.top, raw.bottom)
    }
}

impl TwoRowedArray {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::RaggedArray { top: top.len(), bottom: bottom.len() });
        }
        Ok(TwoRowedArray { top: Word(top), bottom: Word(bottom) })
    }

    pub fn top(&self) -> &[usize] {
        self.top.letters()
    }

    pub fn bottom(&self) -> &[usize] {
        self.bottom.letters()
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    pub fn is_lexicographic(&self) -> bool {
        validate_lex_array(self)
    }
}

/// Top row weakly increasing; bottom row weakly decreasing where the top
/// row repeats.
pub fn validate_lex_array(w: &TwoRowedArray) -> bool {
    let (u, v) = (w.top(), w.bottom());
    (1..u.len()).all(|k| u[k - 1] < u[k] || (u[k - 1] == u[k] && v[k - 1] >= v[k]))
}

/// `w ↦ (P, Q)`: column-insert the bottom row, recording the top row.
pub fn rsk_forward(w: &TwoRowedArray) -> Result<(SkewTableau, SkewTableau)> {
    if !validate_lex_array(w) {
        return Err(Error::NotLexicographic);
    }
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (&u, &v) in w.top().iter().zip(w.bottom()) {
        let cell = bump_rows(&mut p, v);
        if cell.row > q.len() {
            q.push(Vec::new());
        }
        q[cell.row - 1].push(u);
    }
    Ok((from_rows(p), from_rows(q)))
}

/// `(P, Q) ↦ w`, the two-sided inverse of [`rsk_forward`].
pub fn rsk_inverse(p: &SkewTableau, q: &SkewTableau) -> Result<TwoRowedArray> {
    require_straight_semistandard(p)?;
    require_straight_semistandard(q)?;
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch(format!("P has shape {}, Q has shape {}", p.shape(), q.shape())));
    }
    let mut p_rows = p.rows().to_vec();
    let mut q_rows = q.rows().to_vec();
    let mut top = Vec::with_capacity(p.size());
    let mut bottom = Vec::with_capacity(p.size());
    while !q_rows.is_empty() {
        // the rightmost maximum of Q; the last entry of its row
        let (row, max) = q_rows
            .iter()
            .enumerate()
            .map(|(i, r)| (i, *r.last().expect("no empty rows")))
            .max_by(|a, b| a.1.cmp(&b.1).then(q_rows[a.0].len().cmp(&q_rows[b.0].len())))
            .expect("non-empty");
        let corner = Cell::new(row + 1, q_rows[row].len());
        q_rows[row].pop();
        while q_rows.last().is_some_and(Vec::is_empty) {
            q_rows.pop();
        }
        bottom.push(unbump_rows(&mut p_rows, corner));
        top.push(max);
    }
    top.reverse();
    bottom.reverse();
    TwoRowedArray::new(top, bottom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{equiv_check, EquivMode};
    use crate::shapes::SkewShape;
    use crate::tableaux::enumerate_ssyt;
    use std::collections::BTreeSet;

    fn straight(rows: &[&[usize]]) -> SkewTableau {
        SkewTableau::straight(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn arr(top: &[usize], bottom: &[usize]) -> TwoRowedArray {
        TwoRowedArray::new(top.to_vec(), bottom.to_vec()).unwrap()
    }

    #[test]
    fn column_insert_examples() {
        let out = column_insert(&SkewTableau::empty(), 1).unwrap();
        assert_eq!((out.tableau, out.new_cell), (straight(&[&[1]]), Cell::new(1, 1)));
        let out = column_insert(&straight(&[&[1]]), 2).unwrap();
        assert_eq!((out.tableau, out.new_cell), (straight(&[&[1], &[2]]), Cell::new(2, 1)));
        let out = column_insert(&straight(&[&[2]]), 1).unwrap();
        assert_eq!((out.tableau, out.new_cell), (straight(&[&[1, 2]]), Cell::new(1, 2)));
        assert_eq!(column_insert(&straight(&[&[2, 1]]), 1), Err(Error::NotSemistandard));
    }

    #[test]
    fn reverse_insert_examples() {
        assert_eq!(reverse_column_insert(&straight(&[&[1, 2]]), Cell::new(1, 2)).unwrap(), (straight(&[&[2]]), 1));
        assert_eq!(reverse_column_insert(&straight(&[&[1], &[2]]), Cell::new(2, 1)).unwrap(), (straight(&[&[1]]), 2));
        assert_eq!(reverse_column_insert(&straight(&[&[1]]), Cell::new(1, 1)).unwrap(), (SkewTableau::empty(), 1));
        assert_eq!(
            reverse_column_insert(&straight(&[&[1, 2], &[2]]), Cell::new(1, 1)),
            Err(Error::NotACorner(Cell::new(1, 1)))
        );
    }

    fn straight_shapes(max: usize) -> Vec<SkewShape> {
        (0..=max).flat_map(Partition::all_of_size).map(SkewShape::straight).collect()
    }

    #[test]
    fn insert_then_reverse_is_identity() {
        for shape in straight_shapes(5) {
            for t in enumerate_ssyt(&shape, 3, 12).unwrap() {
                for x in 1..=4 {
                    let out = column_insert(&t, x).unwrap();
                    assert!(out.tableau.is_semistandard());
                    assert_eq!(out.tableau.size(), t.size() + 1);
                    assert!(t.shape().outer().cells().all(|c| out.tableau.get(c).is_some()));
                    assert!(t.get(out.new_cell).is_none());
                    assert_eq!(reverse_column_insert(&out.tableau, out.new_cell).unwrap(), (t.clone(), x));
                }
            }
        }
    }

    #[test]
    fn insertion_is_knuth_compatible() {
        for shape in straight_shapes(5) {
            for t in enumerate_ssyt(&shape, 3, 12).unwrap() {
                for x in 1..=3 {
                    let lhs = column_insert(&t, x).unwrap().tableau.skew_word();
                    let mut rhs = vec![x];
                    rhs.extend(t.skew_word().0);
                    assert!(equiv_check(lhs.letters(), &rhs, EquivMode::Knuth, 8).unwrap(), "{t:?} <- {x}");
                }
            }
        }
    }

    #[test]
    fn lex_examples() {
        assert!(validate_lex_array(&arr(&[1, 1], &[2, 1])));
        assert!(!validate_lex_array(&arr(&[1, 1], &[1, 2])));
        assert!(!validate_lex_array(&arr(&[2, 1], &[1, 1])));
        assert!(TwoRowedArray::new(vec![1], vec![]).is_err());
    }

    #[test]
    fn rsk_examples() {
        type Case<'a> = (&'a [usize], &'a [usize], &'a [&'a [usize]], &'a [&'a [usize]]);
        let cases: [Case; 3] = [
            (&[1], &[1], &[&[1]], &[&[1]]),
            (&[1, 1], &[2, 1], &[&[1, 2]], &[&[1, 1]]),
            (&[1, 2], &[1, 2], &[&[1], &[2]], &[&[1], &[2]]),
        ];
        for (top, bottom, p, q) in cases {
            let w = arr(top, bottom);
            let (pp, qq) = rsk_forward(&w).unwrap();
            assert_eq!((&pp, &qq), (&straight(p), &straight(q)));
            assert_eq!(rsk_inverse(&pp, &qq).unwrap(), w);
        }
        assert_eq!(rsk_forward(&arr(&[1, 1], &[1, 2])), Err(Error::NotLexicographic));
        assert!(matches!(rsk_inverse(&straight(&[&[1]]), &straight(&[&[1, 1]])), Err(Error::ShapeMismatch(_))));
    }

    /// Every lexicographic array of length `m` with entries `1..=n`.
    fn lex_arrays(n: usize, m: usize) -> Vec<TwoRowedArray> {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (1..=n).rev().map(move |v| (u, v))).collect();
        let mut out = Vec::new();
        // multisets of pairs, taken in the lexicographic pair order
        fn rec(
            pairs: &[(usize, usize)],
            start: usize,
            m: usize,
            cur: &mut Vec<(usize, usize)>,
            out: &mut Vec<TwoRowedArray>,
        ) {
            if cur.len() == m {
                let (u, v) = cur.iter().copied().unzip();
                out.push(TwoRowedArray::new(u, v).unwrap());
                return;
            }
            for i in start..pairs.len() {
                cur.push(pairs[i]);
                rec(pairs, i, m, cur, out);
                cur.pop();
            }
        }
        rec(&pairs, 0, m, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn rsk_is_a_bijection_on_small_sets() {
        for (n, m) in [(2, 3), (3, 2), (3, 3)] {
            let arrays = lex_arrays(n, m);
            let mut images = BTreeSet::new();
            for w in &arrays {
                assert!(w.is_lexicographic());
                let (p, q) = rsk_forward(w).unwrap();
                assert!(p.is_semistandard() && q.is_semistandard());
                assert_eq!(rsk_inverse(&p, &q).unwrap(), *w);
                images.insert((p.into_rows(), q.into_rows()));
            }
            assert_eq!(images.len(), arrays.len());
            let pairs: usize = Partition::all_of_size(m)
                .into_iter()
                .map(|mu| enumerate_ssyt(&SkewShape::straight(mu), n, 12).unwrap().len().pow(2))
                .sum();
            assert_eq!(pairs, arrays.len());
        }
    }
}
