//! The complex of subsets of the `m x n` grid without `t`-element
//! antichains, its facets as families of non-intersecting lattice paths, a
//! shelling, and the resulting h-vector, multiplicity and Hilbert series.
//!
//! The grid is ordered by `(i,j) <= (h,k)` iff `i <= h` and `j >= k`; two
//! points are incomparable iff one lies strictly north-west of the other.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub type Point = (usize, usize);

/// Largest grid handled by the bitmask representation of faces.
pub const MAX_CELLS: usize = 128;

/// `(a,b)` strictly north-west of `(c,d)`.
pub fn nw(p: Point, q: Point) -> bool {
    p.0 < q.0 && p.1 < q.1
}

/// Length of the longest chain of strictly north-west points.
pub fn longest_nw_chain(points: &[Point]) -> usize {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    let mut best = vec![1usize; pts.len()];
    for i in 0..pts.len() {
        for j in 0..i {
            if nw(pts[j], pts[i]) {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// A set of grid points is a face iff it contains no `t`-element antichain.
pub fn is_face(points: &[Point], t: usize) -> bool {
    longest_nw_chain(points) < t
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PathFamily {
    pub m: usize,
    pub n: usize,
    /// Path `i` (0-based) runs from `(i+1, n)` to `(m, i+1)`.
    pub paths: Vec<Vec<Point>>,
}

impl PathFamily {
    pub fn points(&self) -> BTreeSet<Point> {
        self.paths.iter().flatten().copied().collect()
    }

    pub fn size(&self) -> usize {
        self.paths.iter().map(Vec::len).sum()
    }

    pub fn mask(&self) -> u128 {
        self.paths
            .iter()
            .flatten()
            .fold(0, |acc, &p| acc | bit(p, self.n))
    }

    /// Points where a `(1,0)` step is followed by a `(0,-1)` step.
    pub fn right_turns(&self) -> BTreeSet<Point> {
        let mut out = BTreeSet::new();
        for path in &self.paths {
            for w in path.windows(3) {
                let down = w[1].0 == w[0].0 + 1 && w[1].1 == w[0].1;
                let left = w[2].0 == w[1].0 && w[2].1 + 1 == w[1].1;
                if down && left {
                    out.insert(w[1]);
                }
            }
        }
        out
    }

    /// Validates endpoints, unit steps and disjointness.
    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for (idx, path) in self.paths.iter().enumerate() {
            let i = idx + 1;
            if path.first() != Some(&(i, self.n)) || path.last() != Some(&(self.m, i)) {
                return Err(Error::NotAFacet(format!("path {i} has wrong endpoints")));
            }
            for w in path.windows(2) {
                let down = w[1] == (w[0].0 + 1, w[0].1);
                let left = w[0].1 > 0 && w[1] == (w[0].0, w[0].1 - 1);
                if !(down || left) {
                    return Err(Error::NotAFacet(format!("path {i} has a non-unit step")));
                }
            }
            for &p in path {
                if !seen.insert(p) {
                    return Err(Error::NotAFacet(format!("paths meet at {p:?}")));
                }
            }
        }
        Ok(())
    }
}

/// Shelling order: compare at the largest path index where the families
/// differ, then lexicographically on the point lists.
pub fn shelling_cmp(a: &PathFamily, b: &PathFamily) -> Ordering {
    for (p, q) in a.paths.iter().zip(&b.paths).rev() {
        match p.cmp(q) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn bit(p: Point, n: usize) -> u128 {
    1u128 << ((p.0 - 1) * n + (p.1 - 1))
}

fn check_grid(m: usize, n: usize, t: usize) -> Result<()> {
    if m * n > MAX_CELLS {
        return Err(Error::InvalidParameter(format!(
            "grid {m}x{n} exceeds {MAX_CELLS} cells"
        )));
    }
    if t == 0 || t > m.min(n) {
        return Err(Error::InvalidParameter(format!(
            "t = {t} outside [1, {}]",
            m.min(n)
        )));
    }
    Ok(())
}

/// All facets, in shelling order.
pub fn facets(m: usize, n: usize, t: usize) -> Result<Vec<PathFamily>> {
    check_grid(m, n, t)?;
    let mut out = Vec::new();
    let mut paths = Vec::new();
    families(m, n, t, 0, &mut paths, &mut out);
    out.sort_by(shelling_cmp);
    Ok(out)
}

fn families(
    m: usize,
    n: usize,
    t: usize,
    occupied: u128,
    paths: &mut Vec<Vec<Point>>,
    out: &mut Vec<PathFamily>,
) {
    let i = paths.len() + 1;
    if i == t {
        out.push(PathFamily {
            m,
            n,
            paths: paths.clone(),
        });
        return;
    }
    let start = (i, n);
    if occupied & bit(start, n) != 0 {
        return;
    }
    let mut path = vec![start];
    walk(m, n, t, i, occupied | bit(start, n), &mut path, paths, out);
}

#[allow(clippy::too_many_arguments)]
fn walk(
    m: usize,
    n: usize,
    t: usize,
    i: usize,
    occupied: u128,
    path: &mut Vec<Point>,
    paths: &mut Vec<Vec<Point>>,
    out: &mut Vec<PathFamily>,
) {
    let here = *path.last().expect("path starts non-empty");
    if here == (m, i) {
        paths.push(path.clone());
        families(m, n, t, occupied, paths, out);
        paths.pop();
        return;
    }
    let mut steps = Vec::with_capacity(2);
    if here.1 > i {
        steps.push((here.0, here.1 - 1));
    }
    if here.0 < m {
        steps.push((here.0 + 1, here.1));
    }
    for next in steps {
        let b = bit(next, n);
        if occupied & b != 0 {
            continue;
        }
        path.push(next);
        walk(m, n, t, i, occupied | b, path, paths, out);
        path.pop();
    }
}

/// Splits a face into successive layers of north-west-minimal points. For
/// a facet the layers are the paths of its family.
pub fn light_shadow(face: &[Point], m: usize, n: usize, t: usize) -> Result<PathFamily> {
    check_grid(m, n, t)?;
    let mut rest: BTreeSet<Point> = face.iter().copied().collect();
    if rest
        .iter()
        .any(|&(i, j)| i == 0 || j == 0 || i > m || j > n)
    {
        return Err(Error::NotAFacet("point outside the grid".into()));
    }
    let mut paths = Vec::new();
    while !rest.is_empty() {
        let layer: Vec<Point> = rest
            .iter()
            .copied()
            .filter(|&p| !rest.iter().any(|&q| nw(q, p)))
            .collect();
        for p in &layer {
            rest.remove(p);
        }
        let mut layer = layer;
        // Along a path the row grows while the column shrinks.
        layer.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        paths.push(layer);
    }
    if paths.len() != t - 1 {
        return Err(Error::NotAFacet(format!(
            "{} layers, expected {}",
            paths.len(),
            t - 1
        )));
    }
    let fam = PathFamily { m, n, paths };
    fam.validate()?;
    Ok(fam)
}

#[derive(Clone, Debug, Serialize)]
pub struct ShellingCertificate {
    /// `|c(F_i)|` for each facet in order.
    pub restriction_sizes: Vec<usize>,
    pub valid: bool,
    pub restrictions_are_right_turns: bool,
    pub first_failure: Option<usize>,
}

/// Restriction sets `c(F_i) = { v : F_i \ {v} lies in an earlier facet }`.
pub fn restrictions(order: &[PathFamily]) -> Vec<BTreeSet<Point>> {
    let masks: Vec<u128> = order.iter().map(PathFamily::mask).collect();
    let mut first: HashMap<u128, usize> = HashMap::new();
    for (i, f) in order.iter().enumerate() {
        for p in f.points() {
            first.entry(masks[i] & !bit(p, f.n)).or_insert(i);
        }
    }
    order
        .iter()
        .enumerate()
        .map(|(i, f)| {
            f.points()
                .into_iter()
                .filter(|&p| first[&(masks[i] & !bit(p, f.n))] < i)
                .collect()
        })
        .collect()
}

/// Checks that for all `j < i` some `v` in `c(F_i)` is missing from `F_j`,
/// and that `c(F_i)` is the set of right turns of `F_i`.
pub fn certify_shelling(order: &[PathFamily]) -> ShellingCertificate {
    let masks: Vec<u128> = order.iter().map(PathFamily::mask).collect();
    let cs = restrictions(order);
    let mut first_failure = None;
    let mut turns_ok = true;
    for (i, c) in cs.iter().enumerate() {
        if *c != order[i].right_turns() {
            turns_ok = false;
        }
        let cmask = c.iter().fold(0u128, |acc, &p| acc | bit(p, order[i].n));
        let bad = (0..i).any(|j| masks[j] & cmask == cmask);
        if bad && first_failure.is_none() {
            first_failure = Some(i);
        }
    }
    ShellingCertificate {
        restriction_sizes: cs.iter().map(BTreeSet::len).collect(),
        valid: first_failure.is_none(),
        restrictions_are_right_turns: turns_ok,
        first_failure,
    }
}

fn histogram(values: impl Iterator<Item = usize>) -> Vec<u64> {
    let mut h: Vec<u64> = Vec::new();
    for v in values {
        if h.len() <= v {
            h.resize(v + 1, 0);
        }
        h[v] += 1;
    }
    h
}

/// h-vector from the restriction sizes of the shelling.
pub fn h_vector(m: usize, n: usize, t: usize) -> Result<Vec<u64>> {
    let order = facets(m, n, t)?;
    let cert = certify_shelling(&order);
    if !cert.valid {
        return Err(Error::Inconsistent(format!(
            "facet order is not a shelling at position {:?}",
            cert.first_failure
        )));
    }
    Ok(histogram(cert.restriction_sizes.into_iter()))
}

/// Generating polynomial of right-turn counts over all facets.
pub fn right_turn_polynomial(m: usize, n: usize, t: usize) -> Result<Vec<u64>> {
    Ok(histogram(
        facets(m, n, t)?.iter().map(|f| f.right_turns().len()),
    ))
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Fraction-free determinant over the integers.
pub fn bareiss_int(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// `det[ C(m-i + n-j, m-i) ]_{i,j = 1..t-1}`: the number of non-intersecting
/// path families.
pub fn gv_multiplicity(m: usize, n: usize, t: usize) -> BigInt {
    let k = t.saturating_sub(1);
    let a = (1..=k)
        .map(|i| {
            (1..=k)
                .map(|j| binomial((m - i + n - j) as i64, (m - i) as i64))
                .collect()
        })
        .collect();
    bareiss_int(a)
}

/// `prod_{i=0}^{n-t} C(m+i, t-1) / C(t+i-1, t-1)`.
pub fn giambelli_multiplicity(m: usize, n: usize, t: usize) -> Result<BigInt> {
    if t == 0 || t > m.min(n) {
        return Err(Error::InvalidParameter(format!(
            "t = {t} outside [1, {}]",
            m.min(n)
        )));
    }
    let mut acc = BigRational::one();
    for i in 0..=(n - t) {
        let num = binomial((m + i) as i64, (t - 1) as i64);
        let den = binomial((t + i - 1) as i64, (t - 1) as i64);
        acc *= BigRational::new(num, den);
    }
    if !acc.is_integer() {
        return Err(Error::Inconsistent(format!(
            "product {acc} is not an integer"
        )));
    }
    Ok(acc.to_integer())
}

pub fn krull_dim(m: usize, n: usize, t: usize) -> usize {
    (m + n + 1 - t) * (t - 1)
}

/// Dense univariate polynomial with integer coefficients, lowest degree
/// first.
pub type ZPoly = Vec<BigInt>;

fn zp_trim(mut p: ZPoly) -> ZPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn zp_mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zp_trim(out)
}

fn zp_sub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    zp_trim(out)
}

/// Exact division; `None` if `b` does not divide `a` over the integers.
fn zp_div(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let b = zp_trim(b.clone());
    let lead = b.last()?.clone();
    let mut rem = zp_trim(a.clone());
    if rem.len() < b.len() {
        return rem.is_empty().then(Vec::new);
    }
    let mut q = vec![BigInt::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let (c, r) = rem.last().expect("non-empty").div_rem(&lead);
        if !r.is_zero() {
            return None;
        }
        for (i, x) in b.iter().enumerate() {
            rem[shift + i] -= &c * x;
        }
        q[shift] = c;
        rem = zp_trim(rem);
    }
    rem.is_empty().then(|| zp_trim(q))
}

/// Fraction-free determinant over `Z[z]`.
pub fn bareiss_poly(mut a: Vec<Vec<ZPoly>>) -> Result<ZPoly> {
    let n = a.len();
    if n == 0 {
        return Ok(vec![BigInt::one()]);
    }
    let mut negate = false;
    let mut prev: ZPoly = vec![BigInt::one()];
    for k in 0..n - 1 {
        if a[k][k].is_empty() {
            match (k + 1..n).find(|&r| !a[r][k].is_empty()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(Vec::new()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = zp_sub(&zp_mul(&a[i][j], &a[k][k]), &zp_mul(&a[i][k], &a[k][j]));
                a[i][j] = zp_div(&num, &prev).ok_or_else(|| {
                    Error::Inconsistent("inexact division in Bareiss elimination".into())
                })?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate {
        d.into_iter().map(|c| -c).collect()
    } else {
        d
    })
}

/// `det( sum_k C(m-i,k) C(n-j,k) z^k )_{i,j=1..t-1}` divided by
/// `z^{C(t-1,2)}`.
pub fn determinantal_numerator(m: usize, n: usize, t: usize) -> Result<Vec<BigInt>> {
    let k = t.saturating_sub(1);
    let entry = |i: usize, j: usize| -> ZPoly {
        let top = (m - i).min(n - j);
        zp_trim(
            (0..=top)
                .map(|q| binomial((m - i) as i64, q as i64) * binomial((n - j) as i64, q as i64))
                .collect(),
        )
    };
    let a: Vec<Vec<ZPoly>> = (1..=k)
        .map(|i| (1..=k).map(|j| entry(i, j)).collect())
        .collect();
    let det = bareiss_poly(a)?;
    let shift = k * k.saturating_sub(1) / 2;
    if det.iter().take(shift).any(|c| !c.is_zero()) || det.len() < shift {
        return Err(Error::Inconsistent(format!(
            "determinant is not divisible by z^{shift}"
        )));
    }
    Ok(det[shift..].to_vec())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    pub numerator: Vec<u64>,
    pub denominator_degree: usize,
}

impl HilbertSeries {
    pub fn multiplicity(&self) -> u64 {
        self.numerator.iter().sum()
    }

    /// Coefficient of `z^d` in `numerator / (1-z)^D`.
    pub fn coefficient(&self, d: usize) -> BigInt {
        let big_d = self.denominator_degree as i64;
        let mut acc = BigInt::zero();
        for (j, &h) in self.numerator.iter().enumerate() {
            if j > d {
                break;
            }
            let r = (d - j) as i64;
            let c = if big_d == 0 {
                if r == 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            } else {
                binomial(r + big_d - 1, big_d - 1)
            };
            acc += c * BigInt::from(h);
        }
        acc
    }
}

fn to_u64(v: &[BigInt]) -> Result<Vec<u64>> {
    v.iter()
        .map(|c| {
            c.to_u64().ok_or_else(|| {
                Error::Inconsistent(format!(
                    "coefficient {c} is not a small non-negative integer"
                ))
            })
        })
        .collect()
}

/// Hilbert series of `K[X]/I_t`, with the numerator computed from right
/// turns, from the shelling, and from the determinant; all three must agree.
pub fn hilbert_series(m: usize, n: usize, t: usize) -> Result<HilbertSeries> {
    let order = facets(m, n, t)?;
    let turns = histogram(order.iter().map(|f| f.right_turns().len()));
    let cert = certify_shelling(&order);
    if !cert.valid {
        return Err(Error::Inconsistent("facet order is not a shelling".into()));
    }
    let shelled = histogram(cert.restriction_sizes.into_iter());
    let det = to_u64(&determinantal_numerator(m, n, t)?)?;
    if turns != shelled || turns != det {
        return Err(Error::Inconsistent(format!(
            "numerators differ: right turns {turns:?}, shelling {shelled:?}, determinant {det:?}"
        )));
    }
    Ok(HilbertSeries {
        numerator: turns,
        denominator_degree: krull_dim(m, n, t),
    })
}

pub fn hilbert_function(m: usize, n: usize, t: usize, d: usize) -> Result<BigInt> {
    Ok(hilbert_series(m, n, t)?.coefficient(d))
}
