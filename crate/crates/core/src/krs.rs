//! Deletion, insertion, the KRS correspondence between standard bitableaux
//! and monomials, and Knuth relations.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::monomial::{PositionMonomial, TwoLineArray};
use crate::tableau::{Bitableau, Tableau};

/// Default length bound for [`knuth_equivalent`].
pub const KNUTH_DEFAULT_BOUND: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionResult {
    pub tableau: Tableau,
    pub bumped: usize,
}

/// Removes the box at the end of row `p` (1-based) and pushes entries up
/// to row 1, returning the value ejected from the first row.
pub fn delete(t: &Tableau, p: usize) -> Result<DeletionResult> {
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    if p == 0 || p > t.rows.len() {
        return Err(Error::NotACorner { row: p });
    }
    let len_p = t.rows[p - 1].len();
    let len_next = t.rows.get(p).map_or(0, Vec::len);
    if len_p <= len_next {
        return Err(Error::NotACorner { row: p });
    }
    Ok(delete_unchecked(t, p))
}

fn delete_unchecked(t: &Tableau, p: usize) -> DeletionResult {
    let mut rows = t.rows.clone();
    let mut carry = rows[p - 1].pop().expect("row p is non-empty");
    if rows[p - 1].is_empty() {
        rows.truncate(p - 1);
    }
    for i in (0..p - 1).rev() {
        let row = &mut rows[i];
        let k = row
            .iter()
            .rposition(|&a| a <= carry)
            .expect("column-weak tableau has an entry below the carried value");
        std::mem::swap(&mut row[k], &mut carry);
    }
    DeletionResult {
        tableau: Tableau { rows },
        bumped: carry,
    }
}

/// Inserts `x`, returning the new tableau and the 1-based row of the new box.
pub fn insert(t: &Tableau, x: usize) -> Result<(Tableau, usize)> {
    if !t.rows.is_empty() && !t.is_standard() {
        return Err(Error::NotStandard);
    }
    Ok(insert_unchecked(t.clone(), x))
}

fn insert_unchecked(mut t: Tableau, mut x: usize) -> (Tableau, usize) {
    for (i, row) in t.rows.iter_mut().enumerate() {
        match row.iter().position(|&a| a >= x) {
            None => {
                row.push(x);
                return (t, i + 1);
            }
            Some(j) => std::mem::swap(&mut row[j], &mut x),
        }
    }
    t.rows.push(vec![x]);
    let p = t.rows.len();
    (t, p)
}

/// The KRS image of a standard bitableau as a canonical two-line array.
pub fn krs(b: &Bitableau) -> Result<TwoLineArray> {
    b.validate()?;
    if !b.is_standard() {
        return Err(Error::NotStandard);
    }
    let mut left = b.left.clone();
    let mut right = b.right.clone();
    let mut pairs = Vec::with_capacity(b.degree());
    while !left.rows.is_empty() {
        let top = left.max_entry();
        let p = left
            .rows
            .iter()
            .rposition(|r| r.last() == Some(&top))
            .expect("maximum occurs at a row end");
        left.rows[p].pop();
        if left.rows[p].is_empty() {
            left.rows.truncate(p);
        }
        let DeletionResult { tableau, bumped } = delete_unchecked(&right, p + 1);
        right = tableau;
        pairs.push((top, bumped));
    }
    pairs.reverse();
    let array = TwoLineArray {
        top: pairs.iter().map(|p| p.0).collect(),
        bottom: pairs.iter().map(|p| p.1).collect(),
    };
    debug_assert!(array.validate().is_ok());
    Ok(array)
}

pub fn krs_inverse(a: &TwoLineArray) -> Result<Bitableau> {
    a.validate()?;
    let mut left = Tableau::empty();
    let mut right = Tableau::empty();
    for (&l, &r) in a.top.iter().zip(&a.bottom) {
        let (t, p) = insert_unchecked(right, r);
        right = t;
        if left.rows.len() < p {
            left.rows.push(Vec::new());
        }
        left.rows[p - 1].push(l);
    }
    Ok(Bitableau { left, right })
}

pub fn krs_monomial(b: &Bitableau, m: usize, n: usize) -> Result<PositionMonomial> {
    b.check_bounds(m, n)?;
    PositionMonomial::from_array(m, n, &krs(b)?)
}

pub fn krs_inverse_monomial(mon: &PositionMonomial) -> Bitableau {
    krs_inverse(&mon.to_array()).expect("canonical arrays are valid")
}

/// Insertion tableau of a sequence.
pub fn ins(seq: &[usize]) -> Tableau {
    seq.iter()
        .fold(Tableau::empty(), |t, &x| insert_unchecked(t, x).0)
}

/// Rows read bottom to top.
pub fn canonical_sequence(p: &Tableau) -> Result<Vec<usize>> {
    if !p.rows.is_empty() && !p.is_standard() {
        return Err(Error::NotStandard);
    }
    Ok(p.rows.iter().rev().flatten().copied().collect())
}

/// Sequences obtained from `seq` by one Knuth relation on three consecutive
/// entries, in either direction.
pub fn knuth_neighbors(seq: &[usize]) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for i in 0..seq.len().saturating_sub(2) {
        let (a, b, c) = (seq[i], seq[i + 1], seq[i + 2]);
        if (b <= a && a < c) || (c <= a && a < b) {
            let mut s = seq.to_vec();
            s.swap(i + 1, i + 2);
            out.insert(s);
        }
        if (a < c && c <= b) || (b < c && c <= a) {
            let mut s = seq.to_vec();
            s.swap(i, i + 1);
            out.insert(s);
        }
    }
    out
}

/// Breadth-first closure of `r` under [`knuth_neighbors`].
pub fn knuth_equivalent(r: &[usize], s: &[usize], bound: usize) -> Result<bool> {
    for len in [r.len(), s.len()] {
        if len > bound {
            return Err(Error::TooLarge { len, bound });
        }
    }
    if r == s {
        return Ok(true);
    }
    let (mut a, mut b) = (r.to_vec(), s.to_vec());
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Ok(false);
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(r.to_vec());
    queue.push_back(r.to_vec());
    while let Some(cur) = queue.pop_front() {
        for nb in knuth_neighbors(&cur) {
            if nb == s {
                return Ok(true);
            }
            if seen.insert(nb.clone()) {
                queue.push_back(nb);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect())
    }

    fn sample() -> Bitableau {
        Bitableau::new(
            tab(&[&[1, 3, 4, 5], &[2, 6]]),
            tab(&[&[1, 2, 3, 6], &[4, 5]]),
        )
        .unwrap()
    }

    #[test]
    fn deletion_examples() {
        let r = delete(&tab(&[&[1, 2, 3, 6], &[4, 5]]), 2).unwrap();
        assert_eq!((r.tableau, r.bumped), (tab(&[&[1, 2, 5, 6], &[4]]), 3));
        let r = delete(&tab(&[&[1, 4]]), 1).unwrap();
        assert_eq!((r.tableau, r.bumped), (tab(&[&[1]]), 4));
        let r = delete(&tab(&[&[1, 2], &[1, 2]]), 2).unwrap();
        assert_eq!((r.tableau, r.bumped), (tab(&[&[1, 2], &[1]]), 2));
    }

    #[test]
    fn deletion_rejects_bad_input() {
        assert_eq!(
            delete(&tab(&[&[1, 2], &[1, 2]]), 1),
            Err(Error::NotACorner { row: 1 })
        );
        assert_eq!(delete(&tab(&[&[2, 1]]), 1), Err(Error::NotStandard));
    }

    #[test]
    fn insertion_examples() {
        assert_eq!(
            insert(&tab(&[&[1, 2, 5, 6], &[4]]), 3).unwrap(),
            (tab(&[&[1, 2, 3, 6], &[4, 5]]), 2)
        );
        assert_eq!(insert(&tab(&[&[1]]), 4).unwrap(), (tab(&[&[1, 4]]), 1));
        assert_eq!(insert(&tab(&[&[1]]), 1).unwrap(), (tab(&[&[1], &[1]]), 2));
    }

    #[test]
    fn sample_krs() {
        let a = krs(&sample()).unwrap();
        assert_eq!(a.top, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(a.bottom, vec![4, 1, 2, 5, 6, 3]);
        assert_eq!(krs_inverse(&a).unwrap(), sample());
    }

    #[test]
    fn single_minor_gives_diagonal() {
        let b = Bitableau::new(tab(&[&[1, 3, 5]]), tab(&[&[2, 4, 6]])).unwrap();
        let a = krs(&b).unwrap();
        assert_eq!((a.top, a.bottom), (vec![1, 3, 5], vec![2, 4, 6]));
        assert_eq!(krs(&Bitableau::empty()).unwrap(), TwoLineArray::default());
    }

    #[test]
    fn inverse_small_cases() {
        let b = krs_inverse(&TwoLineArray::new(vec![1], vec![1]).unwrap()).unwrap();
        assert_eq!(b, Bitableau::new(tab(&[&[1]]), tab(&[&[1]])).unwrap());
        let b = krs_inverse(&TwoLineArray::new(vec![1, 1], vec![1, 1]).unwrap()).unwrap();
        assert_eq!(
            b,
            Bitableau::new(tab(&[&[1], &[1]]), tab(&[&[1], &[1]])).unwrap()
        );
        assert!(krs_inverse(&TwoLineArray {
            top: vec![2, 1],
            bottom: vec![1, 1]
        })
        .is_err());
    }

    #[test]
    fn non_standard_rejected() {
        let b = Bitableau::new(tab(&[&[2], &[1]]), tab(&[&[1], &[2]])).unwrap();
        assert_eq!(krs(&b), Err(Error::NotStandard));
    }

    #[test]
    fn ins_and_canonical_sequence() {
        assert_eq!(ins(&[4, 1, 2, 5, 6, 3]).row_lengths(), vec![4, 2]);
        assert_eq!(ins(&[1, 2, 3]), tab(&[&[1, 2, 3]]));
        assert_eq!(
            canonical_sequence(&tab(&[&[1, 2], &[3]])).unwrap(),
            vec![3, 1, 2]
        );
        let p = tab(&[&[1, 3, 4, 5], &[2, 6]]);
        assert_eq!(canonical_sequence(&p).unwrap(), vec![2, 6, 1, 3, 4, 5]);
        assert_eq!(ins(&canonical_sequence(&p).unwrap()), p);
    }

    #[test]
    fn knuth_examples() {
        let nb = |s: &[usize]| knuth_neighbors(s).into_iter().collect::<Vec<_>>();
        assert_eq!(nb(&[1, 3, 2]), vec![vec![3, 1, 2]]);
        assert!(nb(&[1, 2, 3]).is_empty());
        assert_eq!(nb(&[2, 1, 2]), vec![vec![1, 2, 2]]);
        assert_eq!(ins(&[2, 1, 2]), ins(&[1, 2, 2]));
        assert!(knuth_equivalent(&[3, 1, 2], &[1, 3, 2], 8).unwrap());
        assert!(!knuth_equivalent(&[1, 2], &[2, 1], 8).unwrap());
        assert!(knuth_equivalent(&[5, 5], &[5, 5], 8).unwrap());
        assert!(knuth_equivalent(&[1; 9], &[1; 9], 8).is_err());
    }
}
