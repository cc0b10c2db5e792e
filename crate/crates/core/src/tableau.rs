//! Tableaux, minors and bitableaux (products of minors).
//!
//! Both tableaux of a bitableau store their rows increasing left to right;
//! row `i` of `(left, right)` is the minor `[left_i | right_i]`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shape::Shape;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        let mut rows = rows;
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        Tableau { rows }
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn shape(&self) -> Result<Shape> {
        Shape::new(self.rows.iter().map(Vec::len).collect())
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn check_bound(&self, bound: usize) -> Result<()> {
        for &e in self.rows.iter().flatten() {
            if e == 0 || e > bound {
                return Err(Error::OutOfBounds { entry: e, bound });
            }
        }
        Ok(())
    }

    /// Rows strictly increase, columns weakly increase downward, and row
    /// lengths are non-increasing.
    pub fn is_standard(&self) -> bool {
        if self.rows.iter().any(|r| r.is_empty()) {
            return false;
        }
        if self.rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return false;
        }
        if self.rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return false;
        }
        self.rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| hi <= lo))
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

/// `[a_1 .. a_t | b_1 .. b_t]`, the determinant of the submatrix on rows `a`
/// and columns `b` (1-based). The empty minor has value 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Minor {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl Minor {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        if rows.len() != cols.len() {
            return Err(Error::InvalidMinor(format!(
                "{} row indices but {} column indices",
                rows.len(),
                cols.len()
            )));
        }
        let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]) && !v.contains(&0);
        if !increasing(&rows) || !increasing(&cols) {
            return Err(Error::InvalidMinor(format!(
                "indices must be positive and strictly increasing: {rows:?} | {cols:?}"
            )));
        }
        Ok(Minor { rows, cols })
    }

    pub fn empty() -> Self {
        Minor::default()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn transpose(&self) -> Minor {
        Minor {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
        }
    }

    /// Positions of the main diagonal.
    pub fn diagonal(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .copied()
            .zip(self.cols.iter().copied())
            .collect()
    }

    /// All minors of size `t` of an `m x n` matrix, in lexicographic order.
    pub fn all_of_size(m: usize, n: usize, t: usize) -> Vec<Minor> {
        let mut out = Vec::new();
        for rows in subsets(m, t) {
            for cols in subsets(n, t) {
                out.push(Minor {
                    rows: rows.clone(),
                    cols,
                });
            }
        }
        out
    }

    /// All non-empty minors of an `m x n` matrix.
    pub fn all(m: usize, n: usize) -> Vec<Minor> {
        (1..=m.min(n))
            .flat_map(|t| Minor::all_of_size(m, n, t))
            .collect()
    }
}

impl fmt::Display for Minor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "[{}|{}]", j(&self.rows), j(&self.cols))
    }
}

/// The partial order on minors: `size(a) >= size(b)` and componentwise
/// `a.rows[i] <= b.rows[i]`, `a.cols[i] <= b.cols[i]` for `i < size(b)`.
pub fn minor_preceq(a: &Minor, b: &Minor) -> bool {
    a.size() >= b.size() && (0..b.size()).all(|i| a.rows[i] <= b.rows[i] && a.cols[i] <= b.cols[i])
}

/// Strictly increasing subsets of `{1..n}` of size `k`, lexicographic.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for x in start..=n {
            if n - x + 1 < need {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// A product of minors drawn as a pair of tableaux of equal shape.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bitableau {
    pub left: Tableau,
    pub right: Tableau,
}

impl Ord for Bitableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.minors().cmp(&other.minors())
    }
}

impl PartialOrd for Bitableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Bitableau {
    /// Validates that both tableaux have the same row lengths and that every
    /// row is a valid minor.
    pub fn new(left: Tableau, right: Tableau) -> Result<Self> {
        let b = Bitableau { left, right };
        b.validate()?;
        Ok(b)
    }

    pub fn empty() -> Self {
        Bitableau::default()
    }

    pub fn validate(&self) -> Result<()> {
        if self.left.row_lengths() != self.right.row_lengths() {
            return Err(Error::InvalidTableau(
                "left and right tableaux have different row lengths".into(),
            ));
        }
        for (l, r) in self.left.rows.iter().zip(&self.right.rows) {
            if l.is_empty() {
                return Err(Error::InvalidTableau("empty row".into()));
            }
            Minor::new(l.clone(), r.clone())?;
        }
        Ok(())
    }

    pub fn check_bounds(&self, m: usize, n: usize) -> Result<()> {
        self.left.check_bound(m)?;
        self.right.check_bound(n)
    }

    /// Product of the given minors, rows ordered by non-increasing size
    /// (stable, so equal-size minors keep their given order). Empty minors
    /// are dropped.
    pub fn from_minors(minors: Vec<Minor>) -> Self {
        let mut minors: Vec<Minor> = minors.into_iter().filter(|d| d.size() > 0).collect();
        minors.sort_by_key(|d| std::cmp::Reverse(d.size()));
        let left = minors.iter().map(|d| d.rows.clone()).collect();
        let right = minors.iter().map(|d| d.cols.clone()).collect();
        Bitableau {
            left: Tableau { rows: left },
            right: Tableau { rows: right },
        }
    }

    pub fn minors(&self) -> Vec<Minor> {
        self.left
            .rows
            .iter()
            .zip(&self.right.rows)
            .map(|(l, r)| Minor {
                rows: l.clone(),
                cols: r.clone(),
            })
            .collect()
    }

    pub fn shape(&self) -> Shape {
        Shape::from_sizes(self.left.row_lengths())
    }

    pub fn degree(&self) -> usize {
        self.left.size()
    }

    /// Consecutive minors increase under [`minor_preceq`].
    pub fn is_standard(&self) -> bool {
        let minors = self.minors();
        minors.windows(2).all(|w| minor_preceq(&w[0], &w[1]))
    }

    /// Row-index multiplicities (length `m`) and column-index multiplicities
    /// (length `n`).
    pub fn content(&self, m: usize, n: usize) -> (Vec<usize>, Vec<usize>) {
        let mut rows = vec![0; m];
        let mut cols = vec![0; n];
        for &a in self.left.rows.iter().flatten() {
            rows[a - 1] += 1;
        }
        for &b in self.right.rows.iter().flatten() {
            cols[b - 1] += 1;
        }
        (rows, cols)
    }

    pub fn transpose(&self) -> Bitableau {
        Bitableau {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    /// Same product with minors sorted by size (descending), then
    /// lexicographically. Standard bitableaux are fixed by this.
    pub fn canonical(&self) -> Bitableau {
        let mut minors = self.minors();
        minors.sort_by(|a, b| b.size().cmp(&a.size()).then_with(|| a.cmp(b)));
        Bitableau::from_minors(minors)
    }

    pub fn product(&self, other: &Bitableau) -> Bitableau {
        let mut minors = self.minors();
        minors.extend(other.minors());
        Bitableau::from_minors(minors)
    }

    pub fn power(&self, k: usize) -> Bitableau {
        let mut minors = Vec::new();
        for d in self.minors() {
            for _ in 0..k {
                minors.push(d.clone());
            }
        }
        Bitableau::from_minors(minors)
    }
}

impl fmt::Display for Bitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.left.rows.is_empty() {
            return write!(f, "[|]");
        }
        let parts: Vec<String> = self.minors().iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join("·"))
    }
}

/// Row-strict, column-weak tableaux of the given shape with entries in
/// `[1, bound]`, in lexicographic order of their rows.
pub fn standard_tableaux(shape: &Shape, bound: usize) -> Vec<Tableau> {
    standard_tableaux_with_content(shape, bound, None)
}

/// As [`standard_tableaux`], restricted to tableaux in which entry `e` occurs
/// exactly `content[e - 1]` times.
pub fn standard_tableaux_with_content(
    shape: &Shape,
    bound: usize,
    content: Option<&[usize]>,
) -> Vec<Tableau> {
    let lens = shape.parts().to_vec();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut budget: Option<Vec<usize>> = content.map(|c| c.to_vec());
    fill_rows(&lens, bound, &mut rows, &mut budget, &mut out);
    out
}

fn fill_rows(
    lens: &[usize],
    bound: usize,
    rows: &mut Vec<Vec<usize>>,
    budget: &mut Option<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    let i = rows.len();
    if i == lens.len() {
        if budget.as_ref().is_none_or(|b| b.iter().all(|&x| x == 0)) {
            out.push(Tableau { rows: rows.clone() });
        }
        return;
    }
    let mut row = Vec::with_capacity(lens[i]);
    fill_cells(lens, bound, rows, &mut row, budget, out);
}

fn fill_cells(
    lens: &[usize],
    bound: usize,
    rows: &mut Vec<Vec<usize>>,
    row: &mut Vec<usize>,
    budget: &mut Option<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    let i = rows.len();
    let j = row.len();
    if j == lens[i] {
        rows.push(row.clone());
        fill_rows(lens, bound, rows, budget, out);
        rows.pop();
        return;
    }
    let left = row.last().map_or(1, |&x| x + 1);
    let above = if i > 0 { rows[i - 1][j] } else { 1 };
    let lo = left.max(above);
    let remaining_in_row = lens[i] - j;
    if lo + remaining_in_row - 1 > bound {
        return;
    }
    for v in lo..=bound + 1 - remaining_in_row {
        if let Some(b) = budget.as_mut() {
            if b[v - 1] == 0 {
                continue;
            }
            b[v - 1] -= 1;
        }
        row.push(v);
        fill_cells(lens, bound, rows, row, budget, out);
        row.pop();
        if let Some(b) = budget.as_mut() {
            b[v - 1] += 1;
        }
    }
}

/// All standard bitableaux of total degree `d` on `[1,m] x [1,n]`, shape by
/// shape (partitions of `d` in reverse lexicographic order).
pub fn standard_bitableaux(m: usize, n: usize, d: usize) -> Vec<Bitableau> {
    let mut out = Vec::new();
    let cap = m.min(n);
    for shape in crate::shape::partitions(d, d, 1, cap) {
        let lefts = standard_tableaux(&shape, m);
        let rights = standard_tableaux(&shape, n);
        for l in &lefts {
            for r in &rights {
                out.push(Bitableau {
                    left: l.clone(),
                    right: r.clone(),
                });
            }
        }
    }
    out
}

/// Number of standard bitableaux of each shape of degree `d`.
pub fn standard_bitableaux_by_shape(m: usize, n: usize, d: usize) -> Vec<(Shape, usize)> {
    crate::shape::partitions(d, d, 1, m.min(n))
        .into_iter()
        .map(|s| {
            let c = standard_tableaux(&s, m).len() * standard_tableaux(&s, n).len();
            (s, c)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minor(r: &[usize], c: &[usize]) -> Minor {
        Minor::new(r.to_vec(), c.to_vec()).unwrap()
    }

    #[test]
    fn preceq_examples() {
        assert!(minor_preceq(&minor(&[1, 2], &[1, 2]), &minor(&[2], &[1])));
        assert!(!minor_preceq(&minor(&[2], &[1]), &minor(&[1], &[2])));
        let d = minor(&[1, 3], &[2, 3]);
        assert!(minor_preceq(&d, &d));
        assert!(minor_preceq(&d, &Minor::empty()));
    }

    #[test]
    fn preceq_is_partial_order_on_3x3() {
        let all = Minor::all(3, 3);
        assert_eq!(all.len(), 19);
        for a in &all {
            assert!(minor_preceq(a, a));
            for b in &all {
                if a != b && minor_preceq(a, b) {
                    assert!(!minor_preceq(b, a), "{a} {b}");
                }
                for c in &all {
                    if minor_preceq(a, b) && minor_preceq(b, c) {
                        assert!(minor_preceq(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn standard_examples() {
        let b = Bitableau::from_minors(vec![minor(&[1, 3], &[1, 2]), minor(&[2], &[2])]);
        assert!(b.is_standard());
        let b = Bitableau::from_minors(vec![minor(&[2], &[1]), minor(&[1], &[2])]);
        assert!(!b.is_standard());
        let b = Bitableau::from_minors(vec![minor(&[1, 2, 3], &[1, 2, 4])]);
        assert!(b.is_standard());
        assert!(Bitableau::empty().is_standard());
    }

    #[test]
    fn content_examples() {
        let b = Bitableau::from_minors(vec![minor(&[1, 2], &[1, 2])]);
        assert_eq!(b.content(3, 3), (vec![1, 1, 0], vec![1, 1, 0]));
        let b = Bitableau::from_minors(vec![minor(&[1], &[1]), minor(&[1], &[1])]);
        assert_eq!(b.content(2, 2), (vec![2, 0], vec![2, 0]));
        let b = Bitableau::from_minors(vec![
            minor(&[1, 3, 4, 5], &[1, 2, 3, 6]),
            minor(&[2, 6], &[4, 5]),
        ]);
        assert_eq!(b.content(6, 6), (vec![1; 6], vec![1; 6]));
    }

    #[test]
    fn from_minors_orders_by_size() {
        let b = Bitableau::from_minors(vec![minor(&[2], &[2]), minor(&[1, 3], &[1, 2])]);
        assert_eq!(b.left.rows, vec![vec![1, 3], vec![2]]);
        assert_eq!(b.shape(), Shape::new(vec![2, 1]).unwrap());
    }

    #[test]
    fn mismatched_tableaux_rejected() {
        let l = Tableau::new(vec![vec![1, 2]]);
        let r = Tableau::new(vec![vec![1]]);
        assert!(Bitableau::new(l, r).is_err());
        let l = Tableau::new(vec![vec![2, 1]]);
        let r = Tableau::new(vec![vec![1, 2]]);
        assert!(Bitableau::new(l, r).is_err());
    }

    #[test]
    fn tableau_standardness() {
        assert!(Tableau::new(vec![vec![1, 2], vec![1, 2]]).is_standard());
        assert!(!Tableau::new(vec![vec![1, 1]]).is_standard());
        assert!(!Tableau::new(vec![vec![2, 3], vec![1]]).is_standard());
        assert!(!Tableau::new(vec![vec![1], vec![1, 2]]).is_standard());
    }

    #[test]
    fn standard_tableaux_enumeration() {
        let s = Shape::new(vec![1, 1]).unwrap();
        // column-weak: (a <= b) pairs over [1,2]
        assert_eq!(standard_tableaux(&s, 2).len(), 3);
        let s = Shape::new(vec![2]).unwrap();
        assert_eq!(standard_tableaux(&s, 3).len(), 3);
        for t in standard_tableaux(&Shape::new(vec![2, 1]).unwrap(), 3) {
            assert!(t.is_standard());
        }
        let with =
            standard_tableaux_with_content(&Shape::new(vec![2, 1]).unwrap(), 3, Some(&[1, 1, 1]));
        assert!(with.iter().all(|t| {
            let mut v: Vec<usize> = t.rows.iter().flatten().copied().collect();
            v.sort();
            v == vec![1, 2, 3]
        }));
    }

    #[test]
    fn subsets_count() {
        assert_eq!(subsets(5, 2).len(), 10);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }
}
