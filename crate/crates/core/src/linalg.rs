//! Exact row echelon forms over the rationals for spans of polynomials.
//!
//! Rows are kept with distinct leading keys (the largest key present), so
//! the leading keys of an echelon basis form a basis of the initial space.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{ExactPolynomial, Exponents, Rational};

pub type SparseVec<K> = BTreeMap<K, Rational>;

fn axpy<K: Ord + Clone>(v: &mut SparseVec<K>, row: &SparseVec<K>, c: &Rational) {
    for (k, x) in row {
        let entry = v.entry(k.clone()).or_insert_with(Rational::zero);
        *entry -= c * x;
        if entry.is_zero() {
            v.remove(k);
        }
    }
}

/// Echelon basis keyed by leading key; each row has leading coefficient 1.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon {
            rows: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reduces `v` against the basis until its leading key is not a pivot.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        loop {
            let Some((lead, c)) = v.iter().next_back() else {
                return v;
            };
            let Some(row) = self.rows.get(lead) else {
                return v;
            };
            let c = c.clone();
            axpy(&mut v, row, &c);
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let v = self.reduce(v);
        let Some((lead, c)) = v.iter().next_back() else {
            return false;
        };
        let (lead, inv) = (lead.clone(), c.recip());
        let row = v.into_iter().map(|(k, x)| (k, x * &inv)).collect();
        self.rows.insert(lead, row);
        true
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.rows.values()
    }
}

/// Coordinates of `target` in terms of `basis`, which must be linearly
/// independent. `None` if `target` is outside the span.
pub fn solve_combination<K: Ord + Clone>(
    basis: &[SparseVec<K>],
    target: &SparseVec<K>,
) -> Option<Vec<Rational>> {
    // Each row carries its expression in the original basis.
    let mut rows: BTreeMap<K, (SparseVec<K>, SparseVec<usize>)> = BTreeMap::new();
    for (idx, b) in basis.iter().enumerate() {
        let mut v = b.clone();
        let mut tag: SparseVec<usize> = BTreeMap::from([(idx, Rational::one())]);
        loop {
            let (lead, c) = v.iter().next_back()?;
            match rows.get(lead) {
                Some((row, rtag)) => {
                    let c = c.clone();
                    axpy(&mut v, row, &c);
                    axpy(&mut tag, rtag, &c);
                }
                None => {
                    let (lead, inv) = (lead.clone(), c.recip());
                    let v: SparseVec<K> = v.into_iter().map(|(k, x)| (k, x * &inv)).collect();
                    let tag: SparseVec<usize> =
                        tag.into_iter().map(|(k, x)| (k, x * &inv)).collect();
                    rows.insert(lead, (v, tag));
                    break;
                }
            }
        }
    }
    let mut v = target.clone();
    let mut coeffs: SparseVec<usize> = BTreeMap::new();
    while let Some((lead, c)) = v.iter().next_back() {
        let (row, rtag) = rows.get(lead)?;
        let c = c.clone();
        axpy(&mut v, row, &c);
        axpy(&mut coeffs, rtag, &-c);
    }
    Some(
        (0..basis.len())
            .map(|i| coeffs.get(&i).cloned().unwrap_or_else(Rational::zero))
            .collect(),
    )
}

/// Row and column multiplicities of an exponent vector.
pub fn content_of(e: &[u32], m: usize, n: usize) -> Vec<u32> {
    let mut c = vec![0u32; m + n];
    for (idx, &x) in e.iter().enumerate() {
        c[idx / n] += x;
        c[m + idx % n] += x;
    }
    c
}

/// A space of polynomials spanned by content-homogeneous elements, stored
/// as one echelon form per content.
#[derive(Clone, Debug)]
pub struct GradedSpace {
    m: usize,
    n: usize,
    buckets: BTreeMap<Vec<u32>, Echelon<Exponents>>,
}

impl GradedSpace {
    pub fn new(m: usize, n: usize) -> Self {
        GradedSpace {
            m,
            n,
            buckets: BTreeMap::new(),
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    fn split(&self, p: &ExactPolynomial) -> BTreeMap<Vec<u32>, SparseVec<Exponents>> {
        let mut parts: BTreeMap<Vec<u32>, SparseVec<Exponents>> = BTreeMap::new();
        for (e, c) in p.terms() {
            parts
                .entry(content_of(e, self.m, self.n))
                .or_default()
                .insert(e.clone(), c.clone());
        }
        parts
    }

    /// Adds a content-homogeneous polynomial.
    pub fn insert(&mut self, p: &ExactPolynomial) -> Result<bool> {
        let mut parts = self.split(p);
        if parts.len() > 1 {
            return Err(Error::InvalidParameter(
                "polynomial is not homogeneous in the row and column grading".into(),
            ));
        }
        let Some((content, v)) = parts.pop_first() else {
            return Ok(false);
        };
        Ok(self.buckets.entry(content).or_default().insert(v))
    }

    /// Adds a vector already known to lie in a single content bucket.
    pub fn insert_in(&mut self, content: Vec<u32>, v: SparseVec<Exponents>) -> bool {
        self.buckets.entry(content).or_default().insert(v)
    }

    pub fn contains(&self, p: &ExactPolynomial) -> bool {
        self.split(p)
            .into_iter()
            .all(|(content, v)| match self.buckets.get(&content) {
                Some(ech) => ech.contains(&v),
                None => v.is_empty(),
            })
    }

    pub fn dim(&self) -> usize {
        self.buckets.values().map(Echelon::rank).sum()
    }

    /// Leading monomials of an echelon basis.
    pub fn initial_monomials(&self) -> BTreeSet<Exponents> {
        self.buckets
            .values()
            .flat_map(|b| b.pivots().cloned())
            .collect()
    }

    pub fn basis(&self) -> Vec<ExactPolynomial> {
        self.buckets
            .values()
            .flat_map(|b| b.rows())
            .map(|row| ExactPolynomial::from_terms(self.m, self.n, row.clone()))
            .collect()
    }

    pub fn bucket_basis(&self) -> impl Iterator<Item = (&Vec<u32>, &Echelon<Exponents>)> {
        self.buckets.iter()
    }

    pub fn sum(&self, other: &GradedSpace) -> GradedSpace {
        let mut out = self.clone();
        for (content, ech) in &other.buckets {
            for row in ech.rows() {
                out.insert_in(content.clone(), row.clone());
            }
        }
        out
    }

    /// Intersection via the Zassenhaus construction, bucket by bucket.
    pub fn intersection(&self, other: &GradedSpace) -> GradedSpace {
        let mut out = GradedSpace::new(self.m, self.n);
        for (content, a) in &self.buckets {
            let Some(b) = other.buckets.get(content) else {
                continue;
            };
            // Keys (0, e) sort below (1, e); the first half must lead, so
            // the first component is tagged 1.
            let mut z: Echelon<(u8, Exponents)> = Echelon::new();
            for row in a.rows() {
                let mut v: SparseVec<(u8, Exponents)> = BTreeMap::new();
                for (e, c) in row {
                    v.insert((1, e.clone()), c.clone());
                    v.insert((0, e.clone()), c.clone());
                }
                z.insert(v);
            }
            for row in b.rows() {
                let v = row
                    .iter()
                    .map(|(e, c)| ((1, e.clone()), c.clone()))
                    .collect();
                z.insert(v);
            }
            for (lead, row) in z.rows.iter() {
                if lead.0 == 0 {
                    let v: SparseVec<Exponents> = row
                        .iter()
                        .map(|((_, e), c)| (e.clone(), c.clone()))
                        .collect();
                    out.insert_in(content.clone(), v);
                }
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &GradedSpace) -> bool {
        self.buckets.iter().all(|(content, ech)| {
            ech.rows().all(|row| match other.buckets.get(content) {
                Some(o) => o.contains(row),
                None => row.is_empty(),
            })
        })
    }

    pub fn equals(&self, other: &GradedSpace) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }

    /// A basis element of `self` outside `other`, if any.
    pub fn witness_outside(&self, other: &GradedSpace) -> Option<ExactPolynomial> {
        for (content, ech) in &self.buckets {
            for row in ech.rows() {
                let inside = other.buckets.get(content).is_some_and(|o| o.contains(row));
                if !inside {
                    return Some(ExactPolynomial::from_terms(self.m, self.n, row.clone()));
                }
            }
        }
        None
    }
}

/// Leading monomials of an echelon basis of the span of `polys`.
pub fn initial_space(polys: &[ExactPolynomial]) -> BTreeSet<Exponents> {
    let mut ech: Echelon<Exponents> = Echelon::new();
    for p in polys {
        ech.insert(p.terms().clone());
    }
    ech.pivots().cloned().collect()
}

pub fn rank(polys: &[ExactPolynomial]) -> usize {
    let mut ech: Echelon<Exponents> = Echelon::new();
    for p in polys {
        ech.insert(p.terms().clone());
    }
    ech.rank()
}
