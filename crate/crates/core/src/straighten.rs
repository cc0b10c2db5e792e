//! Straightening of bitableaux.
//!
//! A minor `[a|b]` of `X` is lifted to a maximal minor of the extended matrix
//! `X' = (X | E)` of size `m x (n+m)`, where column `n+m+1-r` of `E` is the
//! unit vector `e_r`. Products of maximal minors are straightened with
//! Plücker relations and mapped back by the substitution `phi`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::solve_combination;
use crate::poly::{rational, ExactPolynomial, MinorCache, Rational};
use crate::shape::partitions;
use crate::tableau::{standard_tableaux_with_content, Bitableau, Minor};

/// `(coefficient, standard bitableau)` pairs with distinct bitableaux.
pub type StraightRepresentation = Vec<(Rational, Bitableau)>;

/// Column set of a maximal minor of `X'`.
pub type MaximalMinor = Vec<usize>;

/// Sign of the permutation sorting `v` (which must have distinct entries).
fn sort_sign(v: &mut [usize]) -> i64 {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    sign
}

fn has_repeat(v: &[usize]) -> bool {
    v.windows(2).any(|w| w[0] == w[1])
}

pub fn lift(d: &Minor, m: usize, n: usize) -> MaximalMinor {
    let mut cols: Vec<usize> = d.cols().to_vec();
    for r in 1..=m {
        if !d.rows().contains(&r) {
            cols.push(n + m + 1 - r);
        }
    }
    cols.sort_unstable();
    cols
}

/// `phi([B]) = sign * [a|b]`; `None` when a column index is out of range.
pub fn phi_specialize(cols: &[usize], m: usize, n: usize) -> Option<(i64, Minor)> {
    if cols.len() != m
        || cols.windows(2).any(|w| w[0] >= w[1])
        || cols.iter().any(|&c| c == 0 || c > n + m)
    {
        return None;
    }
    let t = cols.iter().filter(|&&c| c <= n).count();
    let b = cols[..t].to_vec();
    let unit_rows: Vec<usize> = cols[t..].iter().map(|&c| n + m + 1 - c).collect();
    let a: Vec<usize> = (1..=m).filter(|r| !unit_rows.contains(r)).collect();
    let mut seq = a.clone();
    seq.extend(&unit_rows);
    let sign = sort_sign(&mut seq);
    Some((sign, Minor::new(a, b).expect("valid index lists")))
}

fn standard_pair(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Plücker straightening of a product of two maximal minors of `X'`
/// (`X'` has `m` rows). Returns standard pairs `(P, Q)` with `P <= Q`.
pub struct PluckerStraightener {
    memo: HashMap<(MaximalMinor, MaximalMinor), BTreeMap<(MaximalMinor, MaximalMinor), Rational>>,
    tuple_memo: HashMap<Vec<MaximalMinor>, BTreeMap<Vec<MaximalMinor>, Rational>>,
}

impl Default for PluckerStraightener {
    fn default() -> Self {
        Self::new()
    }
}

impl PluckerStraightener {
    pub fn new() -> Self {
        PluckerStraightener {
            memo: HashMap::new(),
            tuple_memo: HashMap::new(),
        }
    }

    pub fn pair(
        &mut self,
        g: &[usize],
        d: &[usize],
    ) -> BTreeMap<(MaximalMinor, MaximalMinor), Rational> {
        let (a, b) = if g <= d {
            (g.to_vec(), d.to_vec())
        } else {
            (d.to_vec(), g.to_vec())
        };
        let key = (a.clone(), b.clone());
        if let Some(r) = self.memo.get(&key) {
            return r.clone();
        }
        let mut out = BTreeMap::new();
        if standard_pair(&a, &b) {
            out.insert(key.clone(), Rational::one());
            self.memo.insert(key, out.clone());
            return out;
        }
        let m = a.len();
        let p = (0..m)
            .find(|&i| a[i] > b[i])
            .expect("non-standard pair has a violation");
        // c = (a_{p+1}, ..., a_m, b_1, ..., b_{p+1}) in 1-based terms.
        let t = m - p;
        let mut c: Vec<usize> = a[p..].to_vec();
        c.extend_from_slice(&b[..=p]);
        let s = c.len();
        let mut terms: BTreeMap<(MaximalMinor, MaximalMinor), Rational> = BTreeMap::new();
        for chosen in crate::tableau::subsets(s, t) {
            let rest: Vec<usize> = (1..=s).filter(|x| !chosen.contains(x)).collect();
            let mut perm: Vec<usize> = chosen.clone();
            perm.extend(&rest);
            let perm_sign = sort_sign(&mut perm.clone());
            let mut first: Vec<usize> = a[..p].to_vec();
            first.extend(chosen.iter().map(|&i| c[i - 1]));
            let mut second: Vec<usize> = rest.iter().map(|&i| c[i - 1]).collect();
            second.extend_from_slice(&b[p + 1..]);
            let s1 = sort_sign(&mut first);
            let s2 = sort_sign(&mut second);
            if has_repeat(&first) || has_repeat(&second) {
                continue;
            }
            let k = if first <= second {
                (first, second)
            } else {
                (second, first)
            };
            *terms.entry(k).or_insert_with(Rational::zero) += rational(perm_sign * s1 * s2);
        }
        let c0 = terms.remove(&key).unwrap_or_else(Rational::zero);
        assert!(
            !c0.is_zero(),
            "Plücker relation does not involve the input pair"
        );
        let factor = -c0.recip();
        for ((p1, p2), coeff) in terms {
            if coeff.is_zero() {
                continue;
            }
            for (k, v) in self.pair(&p1, &p2) {
                *out.entry(k).or_insert_with(Rational::zero) += &coeff * &factor * v;
            }
        }
        out.retain(|_, v| !v.is_zero());
        self.memo.insert(key, out.clone());
        out
    }

    /// Straightens a product of maximal minors, fixing the leftmost
    /// non-standard adjacent pair first.
    pub fn tuple(&mut self, factors: &[MaximalMinor]) -> BTreeMap<Vec<MaximalMinor>, Rational> {
        let mut key = factors.to_vec();
        key.sort();
        if let Some(r) = self.tuple_memo.get(&key) {
            return r.clone();
        }
        let mut out: BTreeMap<Vec<MaximalMinor>, Rational> = BTreeMap::new();
        match (1..key.len()).find(|&i| !standard_pair(&key[i - 1], &key[i])) {
            None => {
                out.insert(key.clone(), Rational::one());
            }
            Some(i) => {
                for ((p, q), c) in self.pair(&key[i - 1], &key[i]) {
                    let mut next = key.clone();
                    next[i - 1] = p;
                    next[i] = q;
                    for (k, v) in self.tuple(&next) {
                        *out.entry(k).or_insert_with(Rational::zero) += &c * v;
                    }
                }
                out.retain(|_, v| !v.is_zero());
            }
        }
        self.tuple_memo.insert(key, out.clone());
        out
    }
}

fn collect(
    m: usize,
    n: usize,
    raw: BTreeMap<Vec<MaximalMinor>, Rational>,
    scale: &Rational,
) -> StraightRepresentation {
    let mut out: BTreeMap<Bitableau, Rational> = BTreeMap::new();
    for (factors, c) in raw {
        let mut sign = 1i64;
        let mut minors = Vec::new();
        for f in &factors {
            let (s, d) = phi_specialize(f, m, n).expect("lifted columns are in range");
            sign *= s;
            minors.push(d);
        }
        let b = Bitableau::from_minors(minors);
        *out.entry(b).or_insert_with(Rational::zero) += c * rational(sign) * scale;
    }
    out.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(b, c)| (c, b))
        .collect()
}

/// Straightens two maximal minors of `X` (`m <= n`), given by their column
/// sets.
pub fn straighten_maximal(
    g: &[usize],
    d: &[usize],
    m: usize,
    n: usize,
) -> Result<StraightRepresentation> {
    for cols in [g, d] {
        if cols.len() != m {
            return Err(Error::InvalidMinor(format!(
                "{cols:?} is not a maximal minor of a {m}x{n} matrix"
            )));
        }
    }
    let rows: Vec<usize> = (1..=m).collect();
    let b = Bitableau::from_minors(vec![
        Minor::new(rows.clone(), g.to_vec())?,
        Minor::new(rows, d.to_vec())?,
    ]);
    b.check_bounds(m, n)?;
    straighten(&b, m, n)
}

/// Expresses a bitableau as a combination of standard bitableaux.
pub fn straighten(b: &Bitableau, m: usize, n: usize) -> Result<StraightRepresentation> {
    let mut s = PluckerStraightener::new();
    straighten_with(&mut s, b, m, n)
}

pub fn straighten_with(
    s: &mut PluckerStraightener,
    b: &Bitableau,
    m: usize,
    n: usize,
) -> Result<StraightRepresentation> {
    b.validate()?;
    b.check_bounds(m, n)?;
    let mut sign = 1i64;
    let mut lifted = Vec::new();
    for d in b.minors() {
        let cols = lift(&d, m, n);
        let (sg, back) = phi_specialize(&cols, m, n).expect("lift is in range");
        debug_assert_eq!(back, d);
        sign *= sg;
        lifted.push(cols);
    }
    let raw = s.tuple(&lifted);
    Ok(collect(m, n, raw, &rational(sign)))
}

/// Default degree bound for [`straighten_oracle`].
pub const ORACLE_DEFAULT_BOUND: usize = 8;

/// Standard bitableaux with the given row and column content.
pub fn standard_bitableaux_with_content(rows: &[usize], cols: &[usize]) -> Vec<Bitableau> {
    let d: usize = rows.iter().sum();
    let (m, n) = (rows.len(), cols.len());
    let mut out = Vec::new();
    for shape in partitions(d, d, 1, m.min(n)) {
        let lefts = standard_tableaux_with_content(&shape, m, Some(rows));
        if lefts.is_empty() {
            continue;
        }
        let rights = standard_tableaux_with_content(&shape, n, Some(cols));
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

/// Straightening by solving a linear system over the standard bitableaux of
/// the same content.
pub fn straighten_oracle(
    b: &Bitableau,
    m: usize,
    n: usize,
    bound: usize,
) -> Result<StraightRepresentation> {
    b.validate()?;
    b.check_bounds(m, n)?;
    if b.degree() > bound {
        return Err(Error::TooLarge {
            len: b.degree(),
            bound,
        });
    }
    let (rows, cols) = b.content(m, n);
    let candidates = standard_bitableaux_with_content(&rows, &cols);
    let mut cache = MinorCache::new(m, n);
    let basis: Vec<_> = candidates
        .iter()
        .map(|c| cache.bitableau(c).into_terms())
        .collect();
    let target = cache.bitableau(b).into_terms();
    let coeffs = solve_combination(&basis, &target).ok_or_else(|| {
        Error::Inconsistent(format!(
            "{b} is not a combination of standard bitableaux of its content"
        ))
    })?;
    Ok(candidates
        .into_iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .map(|(b, c)| (c, b))
        .collect())
}

/// Sum of the expansions of a representation.
pub fn evaluate(rep: &StraightRepresentation, m: usize, n: usize) -> ExactPolynomial {
    let mut cache = MinorCache::new(m, n);
    let mut out = ExactPolynomial::zero(m, n);
    for (c, b) in rep {
        out.add_scaled(&cache.bitableau(b), c);
    }
    out
}

/// Canonical ordering for comparing representations.
pub fn normalize(rep: &StraightRepresentation) -> BTreeMap<Bitableau, Rational> {
    let mut out = BTreeMap::new();
    for (c, b) in rep {
        *out.entry(b.canonical()).or_insert_with(Rational::zero) += c;
    }
    out.retain(|_, c: &mut Rational| !c.is_zero());
    out
}
