//! Tableaux, reading words and their signs, and exhaustive enumeration of
//! standard Young tableaux and chess tableaux.

use std::fmt;
use std::ops::{Mul, MulAssign};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::shape::{Cell, Color, Shape};

/// Parity of an inversion count, as `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(count: usize) -> Self {
        if count % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl MulAssign for Sign {
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// A sequence of distinct integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEntry(w[0]));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inversions(&self) -> usize {
        inversion_count(&self.0)
    }

    pub fn sign(&self) -> Sign {
        Sign::from_parity(self.inversions())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&letters.join(" "))
    }
}

/// Number of pairs `i < j` with `w[i] > w[j]`, by merge sort.
pub fn inversion_count(letters: &[u32]) -> usize {
    fn sort_count(v: &mut [u32], buf: &mut Vec<u32>) -> usize {
        let n = v.len();
        if n < 2 {
            return 0;
        }
        let mid = n / 2;
        let mut count = sort_count(&mut v[..mid], buf) + sort_count(&mut v[mid..], buf);
        buf.clear();
        let (mut i, mut j) = (0, mid);
        while i < mid && j < n {
            if v[i] <= v[j] {
                buf.push(v[i]);
                i += 1;
            } else {
                buf.push(v[j]);
                count += mid - i;
                j += 1;
            }
        }
        buf.extend_from_slice(&v[i..mid]);
        buf.extend_from_slice(&v[j..n]);
        v.copy_from_slice(buf);
        count
    }
    let mut v = letters.to_vec();
    sort_count(&mut v, &mut Vec::with_capacity(letters.len()))
}

pub fn word_sign(word: &Word) -> Sign {
    word.sign()
}

/// A filling of a shape by distinct integers increasing along rows and down
/// columns. Entries are stored row-major.
#[derive(Clone, Debug)]
pub struct Tableau {
    shape: Shape,
    entries: Vec<u32>,
    sign_cache: Option<Sign>,
}

impl PartialEq for Tableau {
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape && self.entries == other.entries
    }
}

impl Eq for Tableau {}

impl std::hash::Hash for Tableau {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.shape.hash(state);
        self.entries.hash(state);
    }
}

impl Tableau {
    pub fn empty() -> Self {
        Tableau {
            shape: Shape::empty(),
            entries: Vec::new(),
            sign_cache: Some(Sign::Plus),
        }
    }

    /// Validates rows against the tableau conditions.
    pub fn from_rows<R: AsRef<[u32]>>(rows: &[R]) -> Result<Self> {
        let shape = Shape::new(rows.iter().map(|r| r.as_ref().len()))?;
        if rows.iter().any(|r| r.as_ref().is_empty()) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        let entries: Vec<u32> = rows.iter().flat_map(|r| r.as_ref().iter().copied()).collect();
        Self::from_entries(shape, entries)
    }

    /// `entries` in reading order.
    pub fn from_entries(shape: Shape, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::InvalidTableau(format!(
                "{} entries for a shape with {} cells",
                entries.len(),
                shape.size()
            )));
        }
        Word::new(entries.clone())?;
        let t = Tableau {
            shape,
            entries,
            sign_cache: None,
        };
        for cell in t.shape.cells() {
            let x = t.get(cell).unwrap();
            if cell.col > 1 && t.get(Cell::new(cell.row, cell.col - 1)).unwrap() >= x {
                return Err(Error::InvalidTableau(format!("row {} does not increase at {cell}", cell.row)));
            }
            if cell.row > 1 && t.get(Cell::new(cell.row - 1, cell.col)).unwrap() >= x {
                return Err(Error::InvalidTableau(format!("column {} does not increase at {cell}", cell.col)));
            }
        }
        Ok(t)
    }

    pub(crate) fn from_parts_unchecked(shape: Shape, entries: Vec<u32>, sign_cache: Option<Sign>) -> Self {
        debug_assert_eq!(shape.size(), entries.len());
        Tableau {
            shape,
            entries,
            sign_cache,
        }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in reading order.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    fn row_offset(&self, row: usize) -> usize {
        self.shape.parts()[..row - 1].iter().sum()
    }

    pub fn row(&self, row: usize) -> &[u32] {
        let start = self.row_offset(row);
        &self.entries[start..start + self.shape.row_len(row)]
    }

    pub fn rows(&self) -> Vec<&[u32]> {
        (1..=self.shape.num_rows()).map(|r| self.row(r)).collect()
    }

    pub fn get(&self, cell: Cell) -> Option<u32> {
        if !self.shape.contains(cell) {
            return None;
        }
        Some(self.entries[self.row_offset(cell.row) + cell.col - 1])
    }

    pub fn position(&self, value: u32) -> Option<Cell> {
        self.shape.cells().zip(&self.entries).find(|(_, &e)| e == value).map(|(c, _)| c)
    }

    pub fn contains_value(&self, value: u32) -> bool {
        self.entries.contains(&value)
    }

    pub fn reading_word(&self) -> Word {
        Word(self.entries.clone())
    }

    /// Sign maintained during enumeration, when the tableau came from one.
    pub fn sign_cache(&self) -> Option<Sign> {
        self.sign_cache
    }

    pub fn sign(&self) -> Sign {
        self.sign_cache.unwrap_or_else(|| self.reading_word().sign())
    }

    /// True iff the entries are exactly `1..=n`.
    pub fn is_standard(&self) -> bool {
        let n = self.entries.len() as u32;
        self.entries.iter().all(|&e| (1..=n).contains(&e))
    }

    /// Odd entries on black cells and even entries on white cells.
    pub fn is_chess(&self) -> bool {
        self.shape
            .cells()
            .zip(&self.entries)
            .all(|(cell, &e)| (e % 2 == 1) == (cell.color() == Color::Black))
    }

    /// The tableau with entries `values[e - 1]` in place of each `e`, for a
    /// standard tableau and an increasing list of values.
    pub fn relabel(&self, values: &[u32]) -> Tableau {
        let entries = self.entries.iter().map(|&e| values[e as usize - 1]).collect();
        Tableau::from_parts_unchecked(self.shape.clone(), entries, None)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.iter().map(|e| e.to_string().len()).max().unwrap_or(1);
        for (i, row) in self.rows().into_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|e| format!("{e:>width$}")).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn make_tableau<R: AsRef<[u32]>>(shape: &Shape, rows: &[R]) -> Result<Tableau> {
    let t = Tableau::from_rows(rows)?;
    if t.shape() != shape {
        return Err(Error::InvalidTableau(format!(
            "rows have shape {}, expected {shape}",
            t.shape()
        )));
    }
    Ok(t)
}

pub fn reading_word(t: &Tableau) -> Word {
    t.reading_word()
}

pub fn tableau_sign(t: &Tableau) -> Sign {
    t.sign()
}

pub fn is_chess(t: &Tableau) -> bool {
    t.is_chess()
}

/// Depth-first walker over the standard Young tableaux of a shape.
///
/// Values `1..=n` are placed in increasing order, each at an addable corner of
/// the partial shape, top row first. The reading-word sign is kept as a parity
/// bit: placing the current maximum in row `r` creates one inversion with
/// every entry already placed in a lower row.
///
/// With `chess` set, a placement is rejected unless the value's parity matches
/// the cell colour (odd on black).
pub struct SytWalker {
    parts: Vec<usize>,
    offsets: Vec<usize>,
    n: usize,
    chess: bool,
    fill: Vec<usize>,
    entries: Vec<u32>,
    /// Row chosen for each placed value.
    rows: Vec<usize>,
    /// Next row to try for the value at each depth.
    cursor: Vec<usize>,
    /// Parity before each placement.
    parity: Vec<bool>,
    odd: bool,
    depth: usize,
    state: WalkState,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum WalkState {
    Fresh,
    AtLeaf,
    Done,
}

impl SytWalker {
    pub fn new(shape: &Shape, chess: bool) -> Self {
        let parts = shape.parts().to_vec();
        let mut offsets = Vec::with_capacity(parts.len());
        let mut acc = 0;
        for &p in &parts {
            offsets.push(acc);
            acc += p;
        }
        let n = shape.size();
        SytWalker {
            fill: vec![0; parts.len()],
            entries: vec![0; n],
            rows: vec![0; n],
            cursor: vec![0; n + 1],
            parity: vec![false; n],
            parts,
            offsets,
            n,
            chess,
            odd: false,
            depth: 0,
            state: WalkState::Fresh,
        }
    }

    #[inline]
    fn can_place(&self, r: usize, value: usize) -> bool {
        let c = self.fill[r];
        if c >= self.parts[r] || (r > 0 && self.fill[r - 1] <= c) {
            return false;
        }
        // 0-based (r, c) is black iff r + c is even.
        !self.chess || ((r + c) % 2 == 0) == (value % 2 == 1)
    }

    #[inline]
    fn push(&mut self, r: usize) {
        let d = self.depth;
        let below: usize = self.fill[r + 1..].iter().sum();
        self.parity[d] = self.odd;
        self.odd ^= below % 2 == 1;
        self.rows[d] = r;
        self.entries[self.offsets[r] + self.fill[r]] = (d + 1) as u32;
        self.fill[r] += 1;
        self.depth += 1;
    }

    #[inline]
    fn pop(&mut self) {
        self.depth -= 1;
        let d = self.depth;
        self.fill[self.rows[d]] -= 1;
        self.odd = self.parity[d];
    }

    /// Moves to the next complete tableau; false once exhausted.
    pub fn advance(&mut self) -> bool {
        match self.state {
            WalkState::Done => return false,
            WalkState::Fresh if self.n == 0 => {
                self.state = WalkState::AtLeaf;
                return true;
            }
            WalkState::AtLeaf if self.n == 0 => {
                self.state = WalkState::Done;
                return false;
            }
            WalkState::AtLeaf => self.pop(),
            WalkState::Fresh => {}
        }
        loop {
            let d = self.depth;
            let value = d + 1;
            let found = (self.cursor[d]..self.parts.len()).find(|&r| self.can_place(r, value));
            match found {
                Some(r) => {
                    self.cursor[d] = r + 1;
                    self.push(r);
                    if self.depth == self.n {
                        self.state = WalkState::AtLeaf;
                        return true;
                    }
                    self.cursor[self.depth] = 0;
                }
                None => {
                    if d == 0 {
                        self.state = WalkState::Done;
                        return false;
                    }
                    self.pop();
                }
            }
        }
    }

    /// Sign of the current tableau.
    pub fn sign(&self) -> Sign {
        if self.odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// Entries of the current tableau in reading order.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }
}

/// Iterator over tableaux produced by a [`SytWalker`].
pub struct SytIter {
    shape: Shape,
    walker: SytWalker,
}

impl Iterator for SytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if !self.walker.advance() {
            return None;
        }
        Some(Tableau::from_parts_unchecked(
            self.shape.clone(),
            self.walker.entries().to_vec(),
            Some(self.walker.sign()),
        ))
    }
}

/// Every standard Young tableau on `shape`, each carrying its sign.
pub fn enumerate_syt(shape: &Shape) -> SytIter {
    SytIter {
        shape: shape.clone(),
        walker: SytWalker::new(shape, false),
    }
}

/// The chess tableaux on `shape`.
pub fn enumerate_chess(shape: &Shape) -> SytIter {
    SytIter {
        shape: shape.clone(),
        walker: SytWalker::new(shape, true),
    }
}

/// Number of standard Young tableaux by the hook length formula.
pub fn syt_count(shape: &Shape) -> BigUint {
    let conj = shape.conjugate();
    let mut num = BigUint::one();
    for k in 2..=shape.size() {
        num *= k;
    }
    let mut den = BigUint::one();
    for cell in shape.cells() {
        let arm = shape.row_len(cell.row) - cell.col;
        let leg = conj.row_len(cell.col) - cell.row;
        den *= arm + leg + 1;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(parts: &[usize]) -> Shape {
        Shape::new(parts.iter().copied()).unwrap()
    }

    fn example() -> Tableau {
        Tableau::from_rows(&[&[1, 4, 6, 7, 10][..], &[2, 5, 9], &[3, 11], &[8, 13], &[12]]).unwrap()
    }

    #[test]
    fn make_tableau_examples() {
        assert_eq!(example().shape(), &sh(&[5, 3, 2, 2, 1]));
        assert!(make_tableau(&sh(&[2, 1]), &[&[1, 3][..], &[2]]).is_ok());
        assert!(make_tableau(&sh(&[2]), &[&[2, 1][..]]).is_err());
        assert!(make_tableau(&sh(&[2, 1]), &[&[1, 2][..], &[1]]).is_err());
        assert!(make_tableau(&sh(&[2, 2]), &[&[1, 3][..], &[2, 3]]).is_err());
        assert!(make_tableau(&sh(&[2, 2]), &[&[1, 3][..], &[4, 2]]).is_err());
        assert!(make_tableau(&sh(&[3]), &[&[1, 2][..]]).is_err());
    }

    #[test]
    fn reading_words_and_signs() {
        let t = Tableau::from_rows(&[&[1, 3][..], &[2]]).unwrap();
        assert_eq!(t.reading_word().letters(), &[1, 3, 2]);
        assert_eq!(t.sign(), Sign::Minus);
        let row = Tableau::from_rows(&[&[1, 2, 3][..]]).unwrap();
        assert_eq!(row.reading_word().letters(), &[1, 2, 3]);
        assert_eq!(row.sign(), Sign::Plus);
        let ex = example();
        assert_eq!(ex.reading_word().letters(), &[1, 4, 6, 7, 10, 2, 5, 9, 3, 11, 8, 13, 12]);
        assert_eq!(ex.reading_word().inversions(), 18);
        assert_eq!(ex.sign(), Sign::Plus);
    }

    #[test]
    fn inversion_count_matches_quadratic() {
        let w = [5u32, 1, 4, 2, 3, 9, 7];
        let brute = (0..w.len())
            .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| w[i] > w[j])
            .count();
        assert_eq!(inversion_count(&w), brute);
        assert_eq!(inversion_count(&[]), 0);
    }

    #[test]
    fn word_rejects_repeats() {
        assert!(Word::new(vec![1, 2, 1]).is_err());
    }

    #[test]
    fn chess_examples() {
        assert!(!Tableau::from_rows(&[&[1, 2][..], &[3]]).unwrap().is_chess());
        assert!(!Tableau::from_rows(&[&[1, 2][..], &[3, 4]]).unwrap().is_chess());
        assert!(Tableau::from_rows(&[&[1][..]]).unwrap().is_chess());
    }

    #[test]
    fn syt_enumeration_small() {
        let two_one: Vec<Tableau> = enumerate_syt(&sh(&[2, 1])).collect();
        assert_eq!(two_one.len(), 2);
        let mut signs: Vec<i64> = two_one.iter().map(|t| t.sign().value()).collect();
        signs.sort();
        assert_eq!(signs, vec![-1, 1]);
        assert_eq!(enumerate_syt(&sh(&[5])).count(), 1);
        let square: Vec<i64> = enumerate_syt(&sh(&[2, 2])).map(|t| t.sign().value()).collect();
        assert_eq!(square.len(), 2);
        assert_eq!(square.iter().sum::<i64>(), 0);
        let empty: Vec<Tableau> = enumerate_syt(&Shape::empty()).collect();
        assert_eq!(empty, vec![Tableau::empty()]);
    }

    #[test]
    fn chess_enumeration_small() {
        assert_eq!(enumerate_chess(&sh(&[2, 2])).count(), 0);
        assert_eq!(enumerate_chess(&sh(&[1])).count(), 1);
        // Both SYTs of (2,1) put 3 on a white cell.
        assert_eq!(enumerate_chess(&sh(&[2, 1])).count(), 0);
        let chess: Vec<Tableau> = enumerate_chess(&sh(&[3, 1, 1])).collect();
        assert!(chess.iter().all(Tableau::is_chess));
    }

    #[test]
    fn hook_length_counts() {
        assert_eq!(syt_count(&sh(&[2, 1])), BigUint::from(2u32));
        assert_eq!(syt_count(&sh(&[7])), BigUint::one());
        assert_eq!(syt_count(&sh(&[3, 2, 1])), BigUint::from(16u32));
        assert_eq!(syt_count(&sh(&[3, 3])), BigUint::from(5u32));
        assert_eq!(syt_count(&Shape::empty()), BigUint::one());
    }

    #[test]
    fn walker_entries_are_valid_tableaux() {
        for t in enumerate_syt(&sh(&[3, 2, 1])) {
            let rows: Vec<Vec<u32>> = t.rows().into_iter().map(<[u32]>::to_vec).collect();
            let rebuilt = Tableau::from_rows(&rows).unwrap();
            assert!(rebuilt.is_standard());
            assert_eq!(rebuilt.sign(), t.sign_cache().unwrap());
        }
    }
}
