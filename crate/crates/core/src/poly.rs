//! Exact polynomials in the entries of a generic `m x n` matrix.
//!
//! Exponent vectors are dense with index `(i-1)*n + (j-1)` for `X_ij`, so the
//! derived lexicographic order on vectors is the diagonal term order
//! `X_11 > X_12 > ... > X_1n > X_21 > ... > X_mn`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::monomial::PositionMonomial;
use crate::tableau::{Bitableau, Minor};

pub type Exponents = Vec<u32>;
pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    BigRational::from_integer(n.into())
}

/// Formats as `p` or `p/q`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactPolynomial {
    m: usize,
    n: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl ExactPolynomial {
    pub fn zero(m: usize, n: usize) -> Self {
        ExactPolynomial {
            m,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize, n: usize) -> Self {
        Self::monomial(m, n, vec![0; m * n], Rational::one())
    }

    pub fn monomial(m: usize, n: usize, exps: Exponents, c: Rational) -> Self {
        let mut p = Self::zero(m, n);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn variable(m: usize, n: usize, i: usize, j: usize) -> Self {
        let mut e = vec![0; m * n];
        e[(i - 1) * n + (j - 1)] = 1;
        Self::monomial(m, n, e, Rational::one())
    }

    pub fn from_position_monomial(mon: &PositionMonomial) -> Self {
        Self::monomial(mon.m(), mon.n(), mon.dense(), Rational::one())
    }

    pub fn from_terms(
        m: usize,
        n: usize,
        terms: impl IntoIterator<Item = (Exponents, Rational)>,
    ) -> Self {
        let mut p = Self::zero(m, n);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, Rational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Exponents, Rational> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Exponents, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &ExactPolynomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (e, d) in &other.terms {
            self.add_term(e.clone(), &(d * c));
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.m, self.n);
        }
        ExactPolynomial {
            m: self.m,
            n: self.n,
            terms: self.terms.iter().map(|(e, d)| (e.clone(), d * c)).collect(),
        }
    }

    /// Leading term under the diagonal order.
    pub fn leading_term(&self) -> Option<(&Exponents, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<PositionMonomial> {
        self.leading_term()
            .map(|(e, _)| PositionMonomial::from_dense(self.m, self.n, e))
    }

    /// Common total degree, or `None` for zero or inhomogeneous polynomials.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.m, self.n);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl Add for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn add(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Sub for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn sub(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn neg(self) -> ExactPolynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn mul(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let mut acc: HashMap<Exponents, Rational> = HashMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        ExactPolynomial::from_terms(
            self.m,
            self.n,
            acc.into_iter().filter(|(_, c)| !c.is_zero()),
        )
    }
}

impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mon = PositionMonomial::from_dense(self.m, self.n, e);
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let is_const = mon.degree() == 0;
            if !abs.is_one() || is_const {
                write!(f, "{}", format_rational(&abs))?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            if !is_const {
                write!(f, "{mon}")?;
            }
        }
        Ok(())
    }
}

/// Determinant of the submatrix on the given rows and columns, by cofactor
/// expansion along the first row with memoization on column subsets.
pub fn expand_minor(d: &Minor, m: usize, n: usize) -> ExactPolynomial {
    let rows = d.rows();
    let cols = d.cols();
    let t = rows.len();
    if t == 0 {
        return ExactPolynomial::one(m, n);
    }
    let mut memo: HashMap<u64, ExactPolynomial> = HashMap::new();
    fn det(
        level: usize,
        mask: u64,
        rows: &[usize],
        cols: &[usize],
        m: usize,
        n: usize,
        memo: &mut HashMap<u64, ExactPolynomial>,
    ) -> ExactPolynomial {
        if level == rows.len() {
            return ExactPolynomial::one(m, n);
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let mut out = ExactPolynomial::zero(m, n);
        let mut sign = 1i64;
        for (k, &c) in cols.iter().enumerate() {
            if mask & (1 << k) != 0 {
                continue;
            }
            let sub = det(level + 1, mask | (1 << k), rows, cols, m, n, memo);
            let x = ExactPolynomial::variable(m, n, rows[level], c);
            out.add_scaled(&(&x * &sub), &rational(sign));
            sign = -sign;
        }
        memo.insert(mask, out.clone());
        out
    }
    det(0, 0, rows, cols, m, n, &mut memo)
}

/// Product of the expansions of the minors of a bitableau.
pub fn expand_bitableau(b: &Bitableau, m: usize, n: usize) -> ExactPolynomial {
    b.minors()
        .iter()
        .fold(ExactPolynomial::one(m, n), |acc, d| {
            &acc * &expand_minor(d, m, n)
        })
}

/// Caches minor expansions for repeated products.
#[derive(Debug, Default)]
pub struct MinorCache {
    m: usize,
    n: usize,
    cache: HashMap<Minor, ExactPolynomial>,
}

impl MinorCache {
    pub fn new(m: usize, n: usize) -> Self {
        MinorCache {
            m,
            n,
            cache: HashMap::new(),
        }
    }

    pub fn minor(&mut self, d: &Minor) -> ExactPolynomial {
        let (m, n) = (self.m, self.n);
        self.cache
            .entry(d.clone())
            .or_insert_with(|| expand_minor(d, m, n))
            .clone()
    }

    pub fn bitableau(&mut self, b: &Bitableau) -> ExactPolynomial {
        let mut acc = ExactPolynomial::one(self.m, self.n);
        for d in b.minors() {
            acc = &acc * &self.minor(&d);
        }
        acc
    }
}
