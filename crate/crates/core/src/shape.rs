//! Partition shapes and their geometry.
//!
//! Rows and columns are 1-based throughout, so the chess colouring makes
//! `(1, 1)` black.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition drawn as a Ferrers diagram.
///
/// Parts are stored weakly decreasing with no zero parts, so equality is
/// structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Shape {
    parts: Vec<usize>,
    size: usize,
}

/// A square of a diagram, `(row, col)` with both indices starting at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    Black,
    White,
}

/// A finite set of cells, ordered row-major.
pub type CellSet = BTreeSet<Cell>;

/// The skew shape `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Shape,
    inner: Shape,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1, "cells are 1-based");
        Cell { row, col }
    }

    /// Black iff `row + col` is even.
    pub fn color(self) -> Color {
        if (self.row + self.col) % 2 == 0 {
            Color::Black
        } else {
            Color::White
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

pub fn cell_color(cell: Cell) -> Color {
    cell.color()
}

impl Shape {
    /// Builds a shape from row lengths. Trailing zeros are stripped; any other
    /// increase between consecutive parts is rejected.
    pub fn new(parts: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut parts: Vec<usize> = parts.into_iter().collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "parts must be weakly decreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Like [`Shape::new`] but accepts signed input, rejecting negatives.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        let parts = parts
            .iter()
            .map(|&p| {
                usize::try_from(p)
                    .map_err(|_| Error::InvalidShape(format!("negative part {p}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    fn from_sorted(parts: Vec<usize>) -> Self {
        let size = parts.iter().sum();
        Shape { parts, size }
    }

    pub fn empty() -> Self {
        Shape::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of row `row` (1-based); zero past the last row.
    pub fn row_len(&self, row: usize) -> usize {
        row.checked_sub(1)
            .and_then(|i| self.parts.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// Cells in reading order (row by row, left to right).
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |c| Cell::new(i + 1, c)))
    }

    /// Reflection in the main diagonal.
    pub fn conjugate(&self) -> Shape {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Shape::from_sorted(parts)
    }

    /// True iff `self` fits inside `other` row by row.
    pub fn is_subshape_of(&self, other: &Shape) -> bool {
        self.parts.len() <= other.parts.len()
            && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Cells `(r, c)` with `c == row_len(r)` and `row_len(r + 1) < c`.
    pub fn outer_corners(&self) -> Vec<Cell> {
        (1..=self.num_rows())
            .filter(|&r| self.row_len(r + 1) < self.row_len(r))
            .map(|r| Cell::new(r, self.row_len(r)))
            .collect()
    }

    /// The shape with `cell` added, if that leaves a valid shape.
    pub fn with_cell(&self, cell: Cell) -> Option<Shape> {
        let r = cell.row;
        if r == 0 || r > self.num_rows() + 1 || cell.col != self.row_len(r) + 1 {
            return None;
        }
        if r > 1 && self.row_len(r - 1) < cell.col {
            return None;
        }
        let mut parts = self.parts.clone();
        if r > parts.len() {
            parts.push(1);
        } else {
            parts[r - 1] += 1;
        }
        Some(Shape::from_sorted(parts))
    }

    /// The shape with outer corner `cell` removed.
    pub fn without_corner(&self, cell: Cell) -> Option<Shape> {
        if !self.outer_corners().contains(&cell) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[cell.row - 1] -= 1;
        if parts[cell.row - 1] == 0 {
            parts.pop();
        }
        Some(Shape::from_sorted(parts))
    }

    /// `(black, white)` cell counts under the chess colouring.
    pub fn color_counts(&self) -> (usize, usize) {
        let black = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                // row i+1: black columns have the same parity as the row.
                if i % 2 == 0 {
                    len.div_ceil(2)
                } else {
                    len / 2
                }
            })
            .sum::<usize>();
        (black, self.size - black)
    }

    pub fn black_cells(&self) -> CellSet {
        self.cells().filter(|c| c.color() == Color::Black).collect()
    }

    /// True iff rows pair up with equal even lengths.
    pub fn is_fourling(&self) -> bool {
        self.parts.len() % 2 == 0
            && self
                .parts
                .chunks(2)
                .all(|pair| pair[0] == pair[1] && pair[0] % 2 == 0)
    }

    /// Largest subshape made of 2x2 blocks. Rows `2i-1` and `2i` of the body
    /// both have length `2 * floor(row_len(2i) / 2)`.
    pub fn fourling_body(&self) -> Shape {
        let mut parts = Vec::with_capacity(self.parts.len());
        for pair in self.parts.chunks(2) {
            let len = pair.get(1).map_or(0, |&p| p - p % 2);
            if len == 0 {
                break;
            }
            parts.push(len);
            parts.push(len);
        }
        Shape::from_sorted(parts)
    }

    /// Maximum number of disjoint fourlings.
    pub fn d_count(&self) -> usize {
        self.fourling_body().size() / 4
    }

    /// Maximum number of disjoint vertical dominoes.
    pub fn v_count(&self) -> usize {
        self.conjugate().parts.iter().map(|c| c / 2).sum()
    }

    /// Maximum number of disjoint horizontal dominoes.
    pub fn h_count(&self) -> usize {
        self.parts.iter().map(|r| r / 2).sum()
    }

    /// Cells outside the fourling body.
    pub fn strip(&self) -> CellSet {
        let body = self.fourling_body();
        self.cells().filter(|&c| !body.contains(c)).collect()
    }

    pub fn strip_size(&self) -> usize {
        self.size - self.fourling_body().size()
    }

    /// Vertical dominoes fitting in the strip. Body columns have even length,
    /// so each column's strip cells form one contiguous run.
    pub fn vs_count(&self) -> usize {
        let cols = self.conjugate();
        let body_cols = self.fourling_body().conjugate();
        cols.parts
            .iter()
            .enumerate()
            .map(|(i, &len)| (len - body_cols.parts.get(i).copied().unwrap_or(0)) / 2)
            .sum()
    }

    pub fn hs_count(&self) -> usize {
        self.conjugate().vs_count()
    }

    /// Hook `(n - i, 1^i)`.
    pub fn hook(n: usize, i: usize) -> Result<Shape> {
        if n == 0 || i >= n {
            return Err(Error::InvalidShape(format!("no hook (n-i,1^i) with n={n}, i={i}")));
        }
        Ok(Shape::from_sorted(
            std::iter::once(n - i).chain(std::iter::repeat(1).take(i)).collect(),
        ))
    }

    pub fn is_hook(&self) -> bool {
        self.row_len(2) <= 1
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
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

impl std::str::FromStr for Shape {
    type Err = Error;

    /// Comma-separated parts; the empty string is the empty shape.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(Shape::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidShape(format!("bad part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Shape::from_signed(&parts)
    }
}

impl TryFrom<Vec<usize>> for Shape {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Shape::new(parts)
    }
}

impl From<Shape> for Vec<usize> {
    fn from(shape: Shape) -> Self {
        shape.parts
    }
}

pub fn make_shape(parts: &[i64]) -> Result<Shape> {
    Shape::from_signed(parts)
}

pub fn conjugate(shape: &Shape) -> Shape {
    shape.conjugate()
}

pub fn is_subshape(inner: &Shape, outer: &Shape) -> bool {
    inner.is_subshape_of(outer)
}

impl SkewShape {
    pub fn new(outer: Shape, inner: Shape) -> Result<Self> {
        if !inner.is_subshape_of(&outer) {
            return Err(Error::NotNested {
                inner: inner.to_string(),
                outer: outer.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Shape {
        &self.outer
    }

    pub fn inner(&self) -> &Shape {
        &self.inner
    }

    pub fn cells(&self) -> CellSet {
        self.outer.cells().filter(|&c| !self.inner.contains(c)).collect()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn white_count(&self) -> usize {
        self.cells().iter().filter(|c| c.color() == Color::White).count()
    }

    /// Number of pairs `(x, y)` with `x` in the inner shape and `y` in the skew
    /// part, `x` in a row strictly above `y`.
    pub fn cells_above_count(&self) -> usize {
        self.cells()
            .iter()
            .map(|y| (1..y.row).map(|r| self.inner.row_len(r)).sum::<usize>())
            .sum()
    }

    pub fn v_count(&self) -> usize {
        vertical_domino_count(&self.cells())
    }
}

pub fn skew_cells(outer: &Shape, inner: &Shape) -> Result<CellSet> {
    Ok(SkewShape::new(outer.clone(), inner.clone())?.cells())
}

/// Maximum number of disjoint vertical dominoes inside an arbitrary cell set:
/// per column, the sum over maximal vertical runs of `floor(run / 2)`.
pub fn vertical_domino_count(cells: &CellSet) -> usize {
    let mut by_col: Vec<(usize, usize)> = cells.iter().map(|c| (c.col, c.row)).collect();
    by_col.sort_unstable();
    let mut total = 0;
    let mut run = 0;
    let mut prev: Option<(usize, usize)> = None;
    for &(col, row) in &by_col {
        match prev {
            Some((pc, pr)) if pc == col && pr + 1 == row => run += 1,
            _ => {
                total += run / 2;
                run = 1;
            }
        }
        prev = Some((col, row));
    }
    total + run / 2
}

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: usize) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

pub fn enumerate_partitions(n: usize) -> Partitions {
    partitions(n)
}

pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Shape;

    fn next(&mut self) -> Option<Shape> {
        let current = self.next.take()?;
        // Successor: decrement the last part exceeding 1, then refill the
        // remainder greedily with parts no larger than it.
        let mut succ = current.clone();
        let ones = succ.iter().rev().take_while(|&&p| p == 1).count();
        succ.truncate(succ.len() - ones);
        if let Some(last) = succ.last_mut() {
            *last -= 1;
            let cap = *last;
            let mut rest = ones + 1;
            while rest > 0 {
                let part = rest.min(cap);
                succ.push(part);
                rest -= part;
            }
            self.next = Some(succ);
        }
        Some(Shape::from_sorted(current))
    }
}

/// All non-empty fourling shapes with at most `max_cells` cells, ordered by
/// size then decreasing lexicographically.
pub fn fourling_shapes(max_cells: usize) -> Vec<Shape> {
    (1..=max_cells / 4)
        .flat_map(|d| {
            partitions(d).map(|mu| {
                Shape::from_sorted(mu.parts().iter().flat_map(|&p| [2 * p, 2 * p]).collect())
            })
        })
        .collect()
}
