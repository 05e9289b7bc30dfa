//! Row insertion and extraction, the Robinson-Schensted bijection, and the
//! sign statistics that govern inserting a complementary word.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::shape::{Cell, Color, Shape, SkewShape};
use crate::tableau::{Sign, Tableau, Word};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let slot = (x as usize)
                .checked_sub(1)
                .and_then(|i| seen.get_mut(i))
                .ok_or_else(|| Error::InvalidPermutation(format!("{x} is outside 1..={n}")))?;
            if *slot {
                return Err(Error::InvalidPermutation(format!("{x} occurs twice")));
            }
            *slot = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sign(&self) -> Sign {
        Sign::from_parity(crate::tableau::inversion_count(&self.0))
    }

    pub fn is_involution(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| self.0[x as usize - 1] as usize == i + 1)
    }

    pub fn fixed_points(&self) -> usize {
        self.0.iter().enumerate().filter(|&(i, &x)| x as usize == i + 1).count()
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n as u32).permutations(n).map(Permutation)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.iter().join(","))
    }
}

impl std::str::FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Permutation(Vec::new()));
        }
        let images = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad entry {x:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images)
    }
}

pub fn perm_sign(pi: &Permutation) -> Sign {
    pi.sign()
}

/// Result of inserting one value, with the statistics that fix the sign
/// change: `sign(result) = (-1)^(l + w + u) * sign(input)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionOutcome {
    pub result: Tableau,
    pub new_cell: Cell,
    /// Entries of the input smaller than the inserted value.
    pub l: usize,
    /// 1 if the new cell is white, 0 if black.
    pub w: usize,
    /// Cells in rows strictly above the new cell.
    pub u: usize,
}

impl InsertionOutcome {
    pub fn sign_factor(&self) -> Sign {
        Sign::from_parity(self.l + self.w + self.u)
    }
}

fn to_rows(t: &Tableau) -> Vec<Vec<u32>> {
    t.rows().into_iter().map(<[u32]>::to_vec).collect()
}

fn from_rows(rows: Vec<Vec<u32>>) -> Tableau {
    let shape = Shape::new(rows.iter().map(Vec::len)).expect("row lengths stay a partition");
    let entries = rows.into_iter().flatten().collect();
    Tableau::from_parts_unchecked(shape, entries, None)
}

/// Row insertion: `a` replaces the smallest entry of the first row exceeding
/// it, the displaced entry moves on to the next row, and so on until a value
/// lands at the end of a row.
pub fn insert(t: &Tableau, a: u32) -> Result<InsertionOutcome> {
    if t.contains_value(a) {
        return Err(Error::DuplicateEntry(a));
    }
    let l = t.entries().iter().filter(|&&e| e < a).count();
    let mut rows = to_rows(t);
    let mut carry = a;
    let mut r = 0;
    let new_cell = loop {
        if r == rows.len() {
            rows.push(vec![carry]);
            break Cell::new(r + 1, 1);
        }
        let row = &mut rows[r];
        let pos = row.partition_point(|&x| x < carry);
        if pos == row.len() {
            row.push(carry);
            break Cell::new(r + 1, pos + 1);
        }
        carry = std::mem::replace(&mut row[pos], carry);
        r += 1;
    };
    let u = rows[..new_cell.row - 1].iter().map(Vec::len).sum();
    let w = usize::from(new_cell.color() == Color::White);
    Ok(InsertionOutcome {
        result: from_rows(rows),
        new_cell,
        l,
        w,
        u,
    })
}

/// Reverse of [`insert`]: removes the outer corner `x` and bumps its entry
/// back up to the first row, returning the value that falls out.
pub fn extract(t: &Tableau, x: Cell) -> Result<(Tableau, u32)> {
    if !t.shape().outer_corners().contains(&x) {
        return Err(Error::NotCorner(x));
    }
    let mut rows = to_rows(t);
    let mut carry = rows[x.row - 1].pop().expect("corner row is non-empty");
    if rows[x.row - 1].is_empty() {
        rows.pop();
    }
    for r in (0..x.row - 1).rev() {
        let row = &mut rows[r];
        // Largest entry smaller than the carried value.
        let pos = row.partition_point(|&v| v < carry) - 1;
        carry = std::mem::replace(&mut row[pos], carry);
    }
    Ok((from_rows(rows), carry))
}

pub fn insert_word(t: &Tableau, w: &Word) -> Result<Tableau> {
    w.letters()
        .iter()
        .try_fold(t.clone(), |acc, &a| Ok(insert(&acc, a)?.result))
}

/// Insertion tableau `P` and recording tableau `Q`; the cell created at step
/// `k` holds `k` in `Q`.
pub fn rs(pi: &Permutation) -> (Tableau, Tableau) {
    let mut p = Tableau::empty();
    let mut q_rows: Vec<Vec<u32>> = Vec::new();
    for (k, &a) in pi.images().iter().enumerate() {
        let out = insert(&p, a).expect("permutation entries are distinct");
        let r = out.new_cell.row - 1;
        if r == q_rows.len() {
            q_rows.push(Vec::new());
        }
        q_rows[r].push(k as u32 + 1);
        p = out.result;
    }
    (p, from_rows(q_rows))
}

pub fn rs_inverse(p: &Tableau, q: &Tableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::InvalidTableau(format!(
            "P has shape {} but Q has shape {}",
            p.shape(),
            q.shape()
        )));
    }
    for t in [p, q] {
        Tableau::from_entries(t.shape().clone(), t.entries().to_vec())?;
        if !t.is_standard() {
            return Err(Error::InvalidTableau("not a standard Young tableau".into()));
        }
    }
    let n = p.size();
    let mut images = vec![0; n];
    let mut p = p.clone();
    let mut q = q.clone();
    for k in (1..=n as u32).rev() {
        let cell = q.position(k).expect("Q is standard");
        let (p_next, a) = extract(&p, cell)?;
        let q_next = remove_corner(&q, cell);
        images[k as usize - 1] = a;
        p = p_next;
        q = q_next;
    }
    Permutation::new(images)
}

fn remove_corner(t: &Tableau, cell: Cell) -> Tableau {
    let mut rows = to_rows(t);
    rows[cell.row - 1].pop();
    if rows[cell.row - 1].is_empty() {
        rows.pop();
    }
    from_rows(rows)
}

/// The sorted word of values in `1..=m` missing from `t`, where `m` must be
/// `t.size() + k`.
pub fn complementary_word(t: &Tableau, k: usize, m: usize) -> Result<Word> {
    if m != t.size() + k {
        return Err(Error::Precondition(format!(
            "universe size {m} differs from {} entries plus k = {k}",
            t.size()
        )));
    }
    if let Some(&e) = t.entries().iter().find(|&&e| e == 0 || e as usize > m) {
        return Err(Error::EntryOutOfRange { entry: e, max: m as u32 });
    }
    let mut present = vec![false; m + 1];
    for &e in t.entries() {
        present[e as usize] = true;
    }
    Word::new((1..=m as u32).filter(|&x| !present[x as usize]).collect())
}

/// `(-1)^L` with `L` the sum of `letter - 1` over the word.
pub fn sigma(w: &Word) -> Sign {
    Sign::from_parity(w.letters().iter().map(|&x| x as usize - 1).sum())
}

/// `(-1)^(W + U)` for the skew shape `outer / inner`: `W` counts its white
/// cells and `U` counts pairs of an inner cell in a row strictly above a skew
/// cell.
pub fn tau(outer: &Shape, inner: &Shape) -> Result<Sign> {
    let skew = SkewShape::new(outer.clone(), inner.clone())?;
    Ok(Sign::from_parity(skew.white_count() + skew.cells_above_count()))
}

/// Strictly increasing words of length `j` over `1..=i`, lexicographically.
pub fn enumerate_sorted_words(i: usize, j: usize) -> impl Iterator<Item = Word> {
    (1..=i as u32)
        .combinations(j)
        .map(|letters| Word::new(letters).expect("combinations are distinct"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::from_rows(rows).unwrap()
    }

    fn fig4_input() -> Tableau {
        tab(&[&[2, 4, 6, 9, 13], &[3, 5], &[8, 11], &[12]])
    }

    fn fig4_output() -> Tableau {
        tab(&[&[1, 4, 6, 7, 10], &[2, 5, 9, 13], &[3, 11], &[8], &[12]])
    }

    #[test]
    fn insert_examples() {
        let out = insert(&Tableau::empty(), 5).unwrap();
        assert_eq!(out.result, tab(&[&[5]]));
        assert_eq!((out.new_cell, out.l, out.w, out.u), (Cell::new(1, 1), 0, 0, 0));

        let out = insert(&tab(&[&[2]]), 1).unwrap();
        assert_eq!(out.result, tab(&[&[1], &[2]]));
        assert_eq!((out.new_cell, out.l, out.w, out.u), (Cell::new(2, 1), 0, 1, 1));
        assert_eq!(out.sign_factor(), Sign::Plus);
        assert_eq!(out.result.sign(), tab(&[&[2]]).sign());

        assert!(insert(&tab(&[&[2]]), 2).is_err());
    }

    #[test]
    fn word_insertion_example() {
        let w = Word::new(vec![1, 7, 10]).unwrap();
        assert_eq!(insert_word(&fig4_input(), &w).unwrap(), fig4_output());
        assert_eq!(insert_word(&fig4_input(), &Word::default()).unwrap(), fig4_input());
        let sorted = Word::new(vec![1, 2, 3, 4]).unwrap();
        assert_eq!(insert_word(&Tableau::empty(), &sorted).unwrap(), tab(&[&[1, 2, 3, 4]]));
    }

    #[test]
    fn extract_examples() {
        let before = insert_word(&fig4_input(), &Word::new(vec![1, 7]).unwrap()).unwrap();
        let out = insert(&before, 10).unwrap();
        assert_eq!(out.result, fig4_output());
        assert_eq!(extract(&fig4_output(), out.new_cell).unwrap(), (before, 10));
        assert_eq!(extract(&tab(&[&[4]]), Cell::new(1, 1)).unwrap(), (Tableau::empty(), 4));
        assert!(extract(&fig4_output(), Cell::new(1, 1)).is_err());
    }

    #[test]
    fn rs_examples() {
        let (p, q) = rs(&Permutation::identity(4));
        assert_eq!(p, tab(&[&[1, 2, 3, 4]]));
        assert_eq!(q, p);

        let pi: Permutation = "2,1".parse().unwrap();
        let (p, q) = rs(&pi);
        assert_eq!(p, tab(&[&[1], &[2]]));
        assert_eq!(q, p);
        assert_eq!(pi.sign(), Sign::Minus);
        assert_eq!(p.shape().v_count(), 1);

        assert_eq!(rs_inverse(&tab(&[&[1, 2, 3]]), &tab(&[&[1, 2, 3]])).unwrap(), Permutation::identity(3));
        let col = tab(&[&[1], &[2]]);
        assert_eq!(rs_inverse(&col, &col).unwrap().images(), &[2, 1]);
        assert!(rs_inverse(&col, &tab(&[&[1, 2]])).is_err());
        assert!(rs_inverse(&tab(&[&[1], &[3]]), &col).is_err());
    }

    #[test]
    fn permutation_parsing() {
        assert!("1,1".parse::<Permutation>().is_err());
        assert!("1,3".parse::<Permutation>().is_err());
        assert!("0".parse::<Permutation>().is_err());
        assert!("x".parse::<Permutation>().is_err());
        assert_eq!(Permutation::identity(3).sign(), Sign::Plus);
        for n in 2..6 {
            assert_eq!(Permutation::all(n).map(|p| p.sign().value()).sum::<i64>(), 0);
        }
    }

    #[test]
    fn complementary_words() {
        let w = complementary_word(&fig4_input(), 3, 13).unwrap();
        assert_eq!(w.letters(), &[1, 7, 10]);
        assert!(complementary_word(&tab(&[&[1, 2], &[3]]), 0, 3).unwrap().is_empty());
        assert_eq!(complementary_word(&tab(&[&[2]]), 1, 2).unwrap().letters(), &[1]);
        assert!(complementary_word(&tab(&[&[5]]), 1, 2).is_err());
        assert!(complementary_word(&tab(&[&[2]]), 1, 3).is_err());
    }

    #[test]
    fn sigma_and_tau() {
        assert_eq!(sigma(&Word::new(vec![1, 7, 10]).unwrap()), Sign::Minus);
        assert_eq!(sigma(&Word::new(vec![1]).unwrap()), Sign::Plus);
        assert_eq!(sigma(&Word::new(vec![2, 3]).unwrap()), Sign::Minus);

        let mu = fig4_output().shape().clone();
        let lam = fig4_input().shape().clone();
        assert_eq!(tau(&mu, &lam).unwrap(), Sign::Minus);
        assert_eq!(tau(&lam, &lam).unwrap(), Sign::Plus);
        let one = Shape::new([1]).unwrap();
        let three = Shape::new([3]).unwrap();
        assert_eq!(tau(&three, &Shape::new([2]).unwrap()).unwrap(), Sign::Plus);
        assert!(tau(&one, &three).is_err());
    }

    #[test]
    fn sorted_words() {
        let words: Vec<Vec<u32>> = enumerate_sorted_words(3, 2).map(|w| w.letters().to_vec()).collect();
        assert_eq!(words, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(enumerate_sorted_words(5, 0).count(), 1);
        let total: i64 = enumerate_sorted_words(4, 2).map(|w| sigma(&w).value()).sum();
        assert_eq!(enumerate_sorted_words(4, 2).count(), 6);
        assert_eq!(total, -2);
    }
}
