//! Monomials in the entries of a generic `m x n` matrix and their two-line
//! arrays.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Two rows `(top | bottom)` encoding the monomial `prod X_{top_i bottom_i}`.
///
/// Canonical form: `top` is non-decreasing and, within equal `top` values,
/// `bottom` is non-increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoLineArray {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
}

impl TwoLineArray {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        let a = TwoLineArray { top, bottom };
        a.validate()?;
        Ok(a)
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        if self.top.len() != self.bottom.len() {
            return Err(Error::InvalidArray("rows have different lengths".into()));
        }
        if self.top.iter().chain(&self.bottom).any(|&x| x == 0) {
            return Err(Error::InvalidArray("entries must be positive".into()));
        }
        for i in 1..self.top.len() {
            if self.top[i - 1] > self.top[i] {
                return Err(Error::InvalidArray(format!(
                    "top row decreases at position {}",
                    i + 1
                )));
            }
            if self.top[i - 1] == self.top[i] && self.bottom[i - 1] < self.bottom[i] {
                return Err(Error::InvalidArray(format!(
                    "bottom row increases under equal top entries at position {}",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    /// Canonical array of an arbitrary list of pairs.
    pub fn from_pairs(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        TwoLineArray {
            top: pairs.iter().map(|p| p.0).collect(),
            bottom: pairs.iter().map(|p| p.1).collect(),
        }
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.top
            .iter()
            .copied()
            .zip(self.bottom.iter().copied())
            .collect()
    }

    /// Swaps the rows and re-sorts into canonical form.
    pub fn transpose(&self) -> Self {
        TwoLineArray::from_pairs(self.pairs().into_iter().map(|(a, b)| (b, a)).collect())
    }
}

/// A monomial `prod X_{ij}^{e_ij}` over positions of `[1,m] x [1,n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositionMonomial {
    m: usize,
    n: usize,
    exponents: BTreeMap<(usize, usize), u32>,
}

impl PositionMonomial {
    pub fn one(m: usize, n: usize) -> Self {
        PositionMonomial {
            m,
            n,
            exponents: BTreeMap::new(),
        }
    }

    /// Product of the given positions, repeated positions multiply.
    pub fn from_positions(m: usize, n: usize, positions: &[(usize, usize)]) -> Result<Self> {
        let mut mon = PositionMonomial::one(m, n);
        for &p in positions {
            mon.check(p)?;
            *mon.exponents.entry(p).or_insert(0) += 1;
        }
        Ok(mon)
    }

    pub fn from_exponents(
        m: usize,
        n: usize,
        exps: impl IntoIterator<Item = ((usize, usize), u32)>,
    ) -> Result<Self> {
        let mut mon = PositionMonomial::one(m, n);
        for (p, e) in exps {
            mon.check(p)?;
            if e > 0 {
                *mon.exponents.entry(p).or_insert(0) += e;
            }
        }
        Ok(mon)
    }

    pub fn from_array(m: usize, n: usize, a: &TwoLineArray) -> Result<Self> {
        a.validate()?;
        PositionMonomial::from_positions(m, n, &a.pairs())
    }

    /// Dense exponent vector, index `(i-1)*n + (j-1)`.
    pub fn from_dense(m: usize, n: usize, exps: &[u32]) -> Self {
        let mut mon = PositionMonomial::one(m, n);
        for (idx, &e) in exps.iter().enumerate() {
            if e > 0 {
                mon.exponents.insert((idx / n + 1, idx % n + 1), e);
            }
        }
        mon
    }

    fn check(&self, (i, j): (usize, usize)) -> Result<()> {
        if i == 0 || i > self.m {
            return Err(Error::OutOfBounds {
                entry: i,
                bound: self.m,
            });
        }
        if j == 0 || j > self.n {
            return Err(Error::OutOfBounds {
                entry: j,
                bound: self.n,
            });
        }
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn exponents(&self) -> &BTreeMap<(usize, usize), u32> {
        &self.exponents
    }

    pub fn exponent(&self, i: usize, j: usize) -> u32 {
        self.exponents.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.exponents.values().map(|&e| e as usize).sum()
    }

    pub fn dense(&self) -> Vec<u32> {
        let mut v = vec![0; self.m * self.n];
        for (&(i, j), &e) in &self.exponents {
            v[(i - 1) * self.n + (j - 1)] = e;
        }
        v
    }

    /// Positions with multiplicity, row-major.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.degree());
        for (&p, &e) in &self.exponents {
            for _ in 0..e {
                out.push(p);
            }
        }
        out
    }

    pub fn to_array(&self) -> TwoLineArray {
        TwoLineArray::from_pairs(self.positions())
    }

    /// Bottom row of the canonical two-line array.
    pub fn bottom_row(&self) -> Vec<usize> {
        self.to_array().bottom
    }

    pub fn mul(&self, other: &PositionMonomial) -> PositionMonomial {
        let mut out = self.clone();
        for (&p, &e) in &other.exponents {
            *out.exponents.entry(p).or_insert(0) += e;
        }
        out
    }

    pub fn pow(&self, k: u32) -> PositionMonomial {
        let mut out = self.clone();
        for e in out.exponents.values_mut() {
            *e *= k;
        }
        out.exponents.retain(|_, e| *e > 0);
        out
    }

    pub fn divides(&self, other: &PositionMonomial) -> bool {
        self.exponents
            .iter()
            .all(|(&(i, j), &e)| other.exponent(i, j) >= e)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient(&self, other: &PositionMonomial) -> Option<PositionMonomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = other.clone();
        for (p, &e) in &self.exponents {
            let x = out.exponents.get_mut(p).expect("divisibility checked");
            *x -= e;
        }
        out.exponents.retain(|_, e| *e > 0);
        Some(out)
    }

    pub fn transpose(&self) -> PositionMonomial {
        PositionMonomial {
            m: self.n,
            n: self.m,
            exponents: self
                .exponents
                .iter()
                .map(|(&(i, j), &e)| ((j, i), e))
                .collect(),
        }
    }

    /// Product of all `mn` variables.
    pub fn all_variables(m: usize, n: usize) -> PositionMonomial {
        let mut mon = PositionMonomial::one(m, n);
        for i in 1..=m {
            for j in 1..=n {
                mon.exponents.insert((i, j), 1);
            }
        }
        mon
    }

    /// Every monomial of degree `d`, in lexicographic order of dense vectors
    /// (largest first).
    pub fn all_of_degree(m: usize, n: usize, d: usize) -> Vec<PositionMonomial> {
        let vars = m * n;
        let mut out = Vec::new();
        let mut cur = vec![0u32; vars];
        fn rec(
            idx: usize,
            left: u32,
            cur: &mut Vec<u32>,
            m: usize,
            n: usize,
            out: &mut Vec<PositionMonomial>,
        ) {
            if idx + 1 == cur.len() {
                cur[idx] = left;
                out.push(PositionMonomial::from_dense(m, n, cur));
                cur[idx] = 0;
                return;
            }
            for e in (0..=left).rev() {
                cur[idx] = e;
                rec(idx + 1, left - e, cur, m, n, out);
            }
            cur[idx] = 0;
        }
        if vars == 0 {
            if d == 0 {
                out.push(PositionMonomial::one(m, n));
            }
            return out;
        }
        rec(0, d as u32, &mut cur, m, n, &mut out);
        out
    }

    /// Parses `"1,1 1,3 2,2"` or `"1,1^2 2,3"` (whitespace-separated
    /// positions, optional exponent).
    pub fn parse(m: usize, n: usize, text: &str) -> Result<Self> {
        let mut exps = Vec::new();
        for tok in text.split_whitespace() {
            let (pos, e) = match tok.split_once('^') {
                Some((p, e)) => (
                    p,
                    e.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?,
                ),
                None => (tok, 1),
            };
            let (i, j) = pos
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected i,j but found {tok:?}")))?;
            let i = i
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad row index in {tok:?}")))?;
            let j = j
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad column index in {tok:?}")))?;
            exps.push(((i, j), e));
        }
        PositionMonomial::from_exponents(m, n, exps)
    }
}

impl fmt::Display for PositionMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&(i, j), &e) in &self.exponents {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "X{i}_{j}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MonomialJson {
    m: usize,
    n: usize,
    terms: Vec<[u64; 3]>,
}

impl Serialize for PositionMonomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MonomialJson {
            m: self.m,
            n: self.n,
            terms: self
                .exponents
                .iter()
                .map(|(&(i, j), &e)| [i as u64, j as u64, e as u64])
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PositionMonomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MonomialJson::deserialize(d)?;
        let exps = raw
            .terms
            .iter()
            .map(|t| ((t[0] as usize, t[1] as usize), t[2] as u32));
        PositionMonomial::from_exponents(raw.m, raw.n, exps).map_err(serde::de::Error::custom)
    }
}
