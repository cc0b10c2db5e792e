//! Ideals built from minors: expressions, initial-ideal membership of
//! monomials, standard-bitableau counts, degree components and their
//! comparison by exact linear algebra.
//!
//! Powers and products are described in characteristic zero.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::greene::ins_shape;
use crate::linalg::GradedSpace;
use crate::monomial::PositionMonomial;
use crate::poly::{ExactPolynomial, Exponents, MinorCache};
use crate::shape::{partitions, Shape};
use crate::tableau::{standard_bitableaux, standard_bitableaux_by_shape, Minor};

/// Default degree bound for [`ideal_component`].
pub const COMPONENT_DEFAULT_BOUND: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IdealExpr {
    /// `I[t]`
    Determinantal(usize),
    /// `I[t]^k`
    Power(usize, usize),
    /// `I[t]^(k)`
    SymbolicPower(usize, usize),
    Product(Vec<IdealExpr>),
    Intersection(Vec<IdealExpr>),
    Sum(Vec<IdealExpr>),
}

impl IdealExpr {
    pub fn parse(text: &str) -> Result<Self> {
        let tokens = tokenize(text)?;
        let mut p = Parser { tokens, pos: 0 };
        let e = p.sum()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Parse(format!("unexpected {:?}", p.tokens[p.pos])));
        }
        Ok(e)
    }

    /// Product of determinantal ideals `I_{t_1} ... I_{t_r}`.
    pub fn product_of(sizes: &[usize]) -> Self {
        IdealExpr::Product(sizes.iter().map(|&t| IdealExpr::Determinantal(t)).collect())
    }

    /// Checks all sizes against an `m x n` matrix.
    pub fn validate(&self, m: usize, n: usize) -> Result<()> {
        let cap = m.min(n);
        let size = |t: usize| {
            if t == 0 || t > cap {
                Err(Error::InvalidParameter(format!(
                    "minor size {t} outside [1, {cap}]"
                )))
            } else {
                Ok(())
            }
        };
        let exp = |k: usize| {
            if k == 0 {
                Err(Error::InvalidParameter("exponent must be positive".into()))
            } else {
                Ok(())
            }
        };
        match self {
            IdealExpr::Determinantal(t) => size(*t),
            IdealExpr::Power(t, k) | IdealExpr::SymbolicPower(t, k) => size(*t).and(exp(*k)),
            IdealExpr::Product(v) | IdealExpr::Intersection(v) | IdealExpr::Sum(v) => {
                if v.is_empty() {
                    return Err(Error::InvalidParameter("empty operand list".into()));
                }
                v.iter().try_for_each(|e| e.validate(m, n))
            }
        }
    }

    /// Sizes `(t_1 >= ... >= t_r)` when the expression is a product of
    /// determinantal ideals and their powers.
    pub fn product_shape(&self) -> Option<Shape> {
        fn sizes(e: &IdealExpr, out: &mut Vec<usize>) -> bool {
            match e {
                IdealExpr::Determinantal(t) => {
                    out.push(*t);
                    true
                }
                IdealExpr::Power(t, k) => {
                    out.extend(std::iter::repeat_n(*t, *k));
                    true
                }
                IdealExpr::Product(v) => v.iter().all(|x| sizes(x, out)),
                _ => false,
            }
        }
        let mut v = Vec::new();
        sizes(self, &mut v).then(|| Shape::from_sizes(v))
    }

    /// Whether a standard bitableau of shape `s` belongs to the standard
    /// basis of the ideal.
    pub fn admits_shape(&self, s: &Shape) -> Result<bool> {
        Ok(match self {
            IdealExpr::Determinantal(t) => s.gamma(*t) >= 1,
            IdealExpr::SymbolicPower(t, k) => s.gamma(*t) >= *k,
            IdealExpr::Power(t, k) => s.alpha(*k) >= k * t,
            IdealExpr::Product(_) => {
                let rho = self.product_shape().ok_or_else(|| {
                    Error::Unsupported(format!(
                        "{self}: only products of I[t] and I[t]^k are described"
                    ))
                })?;
                (1..=rho.part(0)).all(|i| s.gamma(i) >= rho.gamma(i))
            }
            IdealExpr::Intersection(v) => {
                for e in v {
                    if !e.admits_shape(s)? {
                        return Ok(false);
                    }
                }
                true
            }
            IdealExpr::Sum(v) => {
                for e in v {
                    if e.admits_shape(s)? {
                        return Ok(true);
                    }
                }
                false
            }
        })
    }
}

impl fmt::Display for IdealExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, v: &[IdealExpr], op: &str| -> fmt::Result {
            for (i, e) in v.iter().enumerate() {
                if i > 0 {
                    write!(f, "{op}")?;
                }
                let compound = matches!(
                    e,
                    IdealExpr::Product(_) | IdealExpr::Intersection(_) | IdealExpr::Sum(_)
                );
                if compound {
                    write!(f, "({e})")?;
                } else {
                    write!(f, "{e}")?;
                }
            }
            Ok(())
        };
        match self {
            IdealExpr::Determinantal(t) => write!(f, "I[{t}]"),
            IdealExpr::Power(t, k) => write!(f, "I[{t}]^{k}"),
            IdealExpr::SymbolicPower(t, k) => write!(f, "I[{t}]^({k})"),
            IdealExpr::Product(v) => join(f, v, "*"),
            IdealExpr::Intersection(v) => join(f, v, " & "),
            IdealExpr::Sum(v) => join(f, v, " + "),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    I,
    Num(usize),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Caret,
    Star,
    Amp,
    Plus,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            ' ' | '\t' => {
                i += 1;
                continue;
            }
            'I' => Token::I,
            '[' => Token::LBracket,
            ']' => Token::RBracket,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '^' => Token::Caret,
            '*' => Token::Star,
            '&' => Token::Amp,
            '+' => Token::Plus,
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Token::Num(
                    s.parse()
                        .map_err(|_| Error::Parse(format!("number too large: {s}")))?,
                ));
                continue;
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        };
        out.push(tok);
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn expect(&mut self, t: Token) -> Result<()> {
        match self.peek() {
            Some(x) if *x == t => {
                self.pos += 1;
                Ok(())
            }
            other => Err(Error::Parse(format!("expected {t:?}, found {other:?}"))),
        }
    }

    fn number(&mut self) -> Result<usize> {
        match self.peek() {
            Some(Token::Num(k)) => {
                let k = *k;
                self.pos += 1;
                Ok(k)
            }
            other => Err(Error::Parse(format!("expected a number, found {other:?}"))),
        }
    }

    fn list(
        &mut self,
        sep: Token,
        next: fn(&mut Self) -> Result<IdealExpr>,
        wrap: fn(Vec<IdealExpr>) -> IdealExpr,
    ) -> Result<IdealExpr> {
        let mut v = vec![next(self)?];
        while self.peek() == Some(&sep) {
            self.pos += 1;
            v.push(next(self)?);
        }
        Ok(if v.len() == 1 {
            v.pop().expect("one element")
        } else {
            wrap(v)
        })
    }

    fn sum(&mut self) -> Result<IdealExpr> {
        self.list(Token::Plus, Self::intersection, IdealExpr::Sum)
    }

    fn intersection(&mut self) -> Result<IdealExpr> {
        self.list(Token::Amp, Self::product, IdealExpr::Intersection)
    }

    fn product(&mut self) -> Result<IdealExpr> {
        self.list(Token::Star, Self::atom, IdealExpr::Product)
    }

    fn atom(&mut self) -> Result<IdealExpr> {
        match self.peek() {
            Some(Token::LParen) => {
                self.pos += 1;
                let e = self.sum()?;
                self.expect(Token::RParen)?;
                Ok(e)
            }
            Some(Token::I) => {
                self.pos += 1;
                self.expect(Token::LBracket)?;
                let t = self.number()?;
                self.expect(Token::RBracket)?;
                if self.peek() != Some(&Token::Caret) {
                    return Ok(IdealExpr::Determinantal(t));
                }
                self.pos += 1;
                if self.peek() == Some(&Token::LParen) {
                    self.pos += 1;
                    let k = self.number()?;
                    self.expect(Token::RParen)?;
                    Ok(IdealExpr::SymbolicPower(t, k))
                } else {
                    Ok(IdealExpr::Power(t, self.number()?))
                }
            }
            other => Err(Error::Parse(format!(
                "expected I[t] or '(', found {other:?}"
            ))),
        }
    }
}

/// Membership of a monomial in the initial ideal, decided from the shape of
/// the insertion tableau of its bottom row.
pub fn in_ini(expr: &IdealExpr, mon: &PositionMonomial) -> Result<bool> {
    expr.admits_shape(&ins_shape(&mon.bottom_row()))
}

pub fn in_ini_determinantal(mon: &PositionMonomial, t: usize) -> bool {
    crate::greene::monomial_hat_gamma(mon, t) >= 1
}

pub fn in_ini_symbolic(mon: &PositionMonomial, t: usize, k: usize) -> bool {
    crate::greene::monomial_hat_gamma(mon, t) >= k
}

pub fn in_ini_power(mon: &PositionMonomial, t: usize, k: usize) -> bool {
    crate::greene::monomial_hat_alpha(mon, k) >= k * t
}

pub fn in_ini_product(mon: &PositionMonomial, factors: &[usize]) -> Result<bool> {
    let rho = Shape::new(factors.to_vec())?;
    let s = ins_shape(&mon.bottom_row());
    Ok((1..=rho.part(0)).all(|i| s.gamma(i) >= rho.gamma(i)))
}

/// Shapes of the Gröbner basis of `I_t^(k)`: all parts in `[t, min(m,n)]`
/// and `gamma_t = k`.
pub fn groebner_shapes_symbolic(t: usize, k: usize, m: usize, n: usize) -> BTreeSet<Shape> {
    let cap = m.min(n);
    let mut out = BTreeSet::new();
    if t == 0 || t > cap {
        return out;
    }
    for total in t..=k * cap {
        for s in partitions(total, k, t, cap) {
            if s.gamma(t) == k {
                out.insert(s);
            }
        }
    }
    out
}

/// Shapes of the Gröbner basis of `I_t^k`: partitions of `kt` into at most
/// `k` parts, each at most `min(m,n)`.
pub fn groebner_shapes_power(t: usize, k: usize, m: usize, n: usize) -> BTreeSet<Shape> {
    partitions(k * t, k, 1, m.min(n)).into_iter().collect()
}

/// Number of standard bitableaux of degree `d` in the standard basis of the
/// ideal.
pub fn standard_basis_count(expr: &IdealExpr, m: usize, n: usize, d: usize) -> Result<usize> {
    expr.validate(m, n)?;
    let mut total = 0;
    for (s, count) in standard_bitableaux_by_shape(m, n, d) {
        if expr.admits_shape(&s)? {
            total += count;
        }
    }
    Ok(total)
}

/// Number of monomials of degree `d` in the initial ideal.
pub fn initial_monomial_count(expr: &IdealExpr, m: usize, n: usize, d: usize) -> Result<usize> {
    expr.validate(m, n)?;
    let mut total = 0;
    for mon in PositionMonomial::all_of_degree(m, n, d) {
        if in_ini(expr, &mon)? {
            total += 1;
        }
    }
    Ok(total)
}

/// Chooses chains strictly increasing in both coordinates, one of each
/// requested size, using each position at most as often as its exponent.
fn diagonal_packings(
    counts: &mut std::collections::BTreeMap<(usize, usize), u32>,
    sizes: &[usize],
    chosen: &mut Vec<Vec<(usize, usize)>>,
) -> bool {
    let Some((&size, rest)) = sizes.split_first() else {
        return true;
    };
    let positions: Vec<(usize, usize)> = counts
        .iter()
        .filter(|(_, &c)| c > 0)
        .map(|(&p, _)| p)
        .collect();
    fn extend(
        positions: &[(usize, usize)],
        counts: &mut std::collections::BTreeMap<(usize, usize), u32>,
        size: usize,
        rest: &[usize],
        chain: &mut Vec<(usize, usize)>,
        chosen: &mut Vec<Vec<(usize, usize)>>,
    ) -> bool {
        if chain.len() == size {
            chosen.push(chain.clone());
            if diagonal_packings(counts, rest, chosen) {
                return true;
            }
            chosen.pop();
            return false;
        }
        for &p in positions {
            if counts[&p] == 0 {
                continue;
            }
            if let Some(&(a, b)) = chain.last() {
                if !(a < p.0 && b < p.1) {
                    continue;
                }
            }
            *counts.get_mut(&p).expect("present") -= 1;
            chain.push(p);
            let found = extend(positions, counts, size, rest, chain, chosen);
            chain.pop();
            *counts.get_mut(&p).expect("present") += 1;
            if found {
                return true;
            }
        }
        false
    }
    extend(&positions, counts, size, rest, &mut Vec::new(), chosen)
}

/// Disjoint diagonals of the given sizes inside `mon`, if they exist. These
/// are exactly the initial monomials of products of minors of that shape
/// dividing `mon`.
pub fn dividing_diagonals(
    mon: &PositionMonomial,
    shape: &Shape,
) -> Option<Vec<Vec<(usize, usize)>>> {
    let mut counts = mon.exponents().clone();
    let mut chosen = Vec::new();
    diagonal_packings(&mut counts, shape.parts(), &mut chosen).then_some(chosen)
}

/// A shape and, per row, the positions of a dividing bitableau initial monomial.
pub type Witness = (Shape, Vec<Vec<(usize, usize)>>);

#[derive(Clone, Debug, Serialize)]
pub struct GkrsReport {
    pub monomial: PositionMonomial,
    pub factors: Shape,
    pub member: bool,
    pub shapes_checked: Vec<Shape>,
    pub bitableau_initial_exists: bool,
    pub witness: Option<Witness>,
}

/// The monomial `X11 X13 X22 X34 X43 X45` on a `4 x 5` matrix: it lies in
/// `ini(I4 I2)` but no standard bitableau of shape at least `(4, 2)` has an
/// initial monomial dividing it.
pub fn gap_monomial() -> PositionMonomial {
    PositionMonomial::parse(4, 5, "1,1 1,3 2,2 3,4 4,3 4,5").expect("valid positions")
}

/// Decides whether some product of minors lying in `I^rho` has an initial
/// monomial dividing `mon`. Such a product has shape `lambda` with
/// `|rho| <= |lambda| <= deg mon` and `gamma_i(lambda) >= gamma_i(rho)`.
pub fn gkrs_failure_witness(mon: &PositionMonomial, factors: &[usize]) -> Result<GkrsReport> {
    let rho = Shape::new(factors.to_vec())?;
    IdealExpr::product_of(factors).validate(mon.m(), mon.n())?;
    let member = in_ini_product(mon, factors)?;
    let mut shapes_checked = Vec::new();
    let mut witness = None;
    for total in rho.size()..=mon.degree() {
        for s in partitions(total, total, 1, total) {
            if !(1..=rho.part(0)).all(|i| s.gamma(i) >= rho.gamma(i)) {
                continue;
            }
            shapes_checked.push(s.clone());
            if witness.is_none() {
                if let Some(d) = dividing_diagonals(mon, &s) {
                    witness = Some((s, d));
                }
            }
        }
    }
    Ok(GkrsReport {
        monomial: mon.clone(),
        factors: rho,
        member,
        shapes_checked,
        bitableau_initial_exists: witness.is_some(),
        witness,
    })
}

fn shift(p: &ExactPolynomial, e: &[u32]) -> ExactPolynomial {
    ExactPolynomial::from_terms(
        p.m(),
        p.n(),
        p.terms().iter().map(|(x, c)| {
            (
                x.iter().zip(e).map(|(a, b)| a + b).collect::<Exponents>(),
                c.clone(),
            )
        }),
    )
}

fn multisets(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, len: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            cur.push(i);
            rec(i, len, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, len, k, &mut Vec::new(), &mut out);
    out
}

/// Products of one minor of each size (sizes non-increasing).
fn minor_products(
    sizes: &[usize],
    m: usize,
    n: usize,
    cache: &mut MinorCache,
) -> Vec<ExactPolynomial> {
    let mut groups: Vec<(usize, usize)> = Vec::new();
    for &s in sizes {
        match groups.last_mut() {
            Some((t, c)) if *t == s => *c += 1,
            _ => groups.push((s, 1)),
        }
    }
    let mut out = vec![ExactPolynomial::one(m, n)];
    for (t, count) in groups {
        let minors = Minor::all_of_size(m, n, t);
        let polys: Vec<ExactPolynomial> = minors.iter().map(|d| cache.minor(d)).collect();
        let mut next = Vec::new();
        for choice in multisets(polys.len(), count) {
            let prod = choice
                .iter()
                .fold(ExactPolynomial::one(m, n), |acc, &i| &acc * &polys[i]);
            for base in &out {
                next.push(base * &prod);
            }
        }
        out = next;
    }
    out
}

/// Basis of the degree-`d` component of the ideal.
pub fn ideal_component(
    expr: &IdealExpr,
    m: usize,
    n: usize,
    d: usize,
    bound: usize,
) -> Result<GradedSpace> {
    expr.validate(m, n)?;
    if d > bound {
        return Err(Error::TooLarge { len: d, bound });
    }
    let mut cache = MinorCache::new(m, n);
    component(expr, m, n, d, &mut cache)
}

fn component(
    expr: &IdealExpr,
    m: usize,
    n: usize,
    d: usize,
    cache: &mut MinorCache,
) -> Result<GradedSpace> {
    let mut space = GradedSpace::new(m, n);
    if let Some(rho) = expr.product_shape() {
        if rho.size() > d {
            return Ok(space);
        }
        let monomials = PositionMonomial::all_of_degree(m, n, d - rho.size());
        for g in minor_products(rho.parts(), m, n, cache) {
            for mon in &monomials {
                space.insert(&shift(&g, &mon.dense()))?;
            }
        }
        return Ok(space);
    }
    match expr {
        IdealExpr::SymbolicPower(t, k) => {
            for b in standard_bitableaux(m, n, d) {
                if b.shape().gamma(*t) >= *k {
                    space.insert(&cache.bitableau(&b))?;
                }
            }
            Ok(space)
        }
        IdealExpr::Sum(v) => {
            for e in v {
                space = space.sum(&component(e, m, n, d, cache)?);
            }
            Ok(space)
        }
        IdealExpr::Intersection(v) => {
            let mut it = v.iter();
            let first = it.next().expect("validated non-empty");
            let mut acc = component(first, m, n, d, cache)?;
            for e in it {
                acc = acc.intersection(&component(e, m, n, d, cache)?);
            }
            Ok(acc)
        }
        IdealExpr::Product(v) => {
            // (AB)_d is spanned by A_i B_{d-i}.
            let (head, tail) = v.split_first().expect("validated non-empty");
            let rest = if tail.len() == 1 {
                tail[0].clone()
            } else {
                IdealExpr::Product(tail.to_vec())
            };
            for i in 0..=d {
                let a = component(head, m, n, i, cache)?;
                if a.dim() == 0 {
                    continue;
                }
                let b = component(&rest, m, n, d - i, cache)?;
                for f in a.basis() {
                    for g in b.basis() {
                        space.insert(&(&f * &g))?;
                    }
                }
            }
            Ok(space)
        }
        IdealExpr::Determinantal(_) | IdealExpr::Power(..) => unreachable!("handled as products"),
    }
}

/// Monomials of degree `d` divisible by a chain of `t` positions strictly
/// increasing in both coordinates.
pub fn diagonal_ideal_monomials(m: usize, n: usize, t: usize, d: usize) -> BTreeSet<Exponents> {
    PositionMonomial::all_of_degree(m, n, d)
        .into_iter()
        .filter(|mon| longest_diagonal(mon) >= t)
        .map(|mon| mon.dense())
        .collect()
}

/// Longest chain of support positions strictly increasing in rows and
/// columns.
pub fn longest_diagonal(mon: &PositionMonomial) -> usize {
    let pts: Vec<(usize, usize)> = mon.exponents().keys().copied().collect();
    let mut best = vec![1usize; pts.len()];
    for i in 0..pts.len() {
        for j in 0..i {
            if pts[j].0 < pts[i].0 && pts[j].1 < pts[i].1 {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeCheck {
    pub degree: usize,
    pub dimension: usize,
    pub expected: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroebnerReport {
    pub ideal: String,
    pub m: usize,
    pub n: usize,
    pub degrees: Vec<DegreeCheck>,
    pub passed: bool,
}

/// Degreewise check that the initial space of `I_t` is spanned by the
/// monomials divisible by a `t`-diagonal.
pub fn verify_groebner_determinantal(
    m: usize,
    n: usize,
    t: usize,
    dmax: usize,
) -> Result<GroebnerReport> {
    let expr = IdealExpr::Determinantal(t);
    expr.validate(m, n)?;
    let mut cache = MinorCache::new(m, n);
    let mut degrees = Vec::new();
    for d in 0..=dmax {
        let space = component(&expr, m, n, d, &mut cache)?;
        let ini = space.initial_monomials();
        let expected = diagonal_ideal_monomials(m, n, t, d);
        degrees.push(DegreeCheck {
            degree: d,
            dimension: ini.len(),
            expected: expected.len(),
            ok: ini == expected,
        });
    }
    let passed = degrees.iter().all(|c| c.ok);
    Ok(GroebnerReport {
        ideal: expr.to_string(),
        m,
        n,
        degrees,
        passed,
    })
}

/// Degreewise check that the initial space of the ideal equals the set of
/// monomials accepted by [`in_ini`].
pub fn verify_initial_ideal(
    expr: &IdealExpr,
    m: usize,
    n: usize,
    dmax: usize,
) -> Result<GroebnerReport> {
    expr.validate(m, n)?;
    let mut cache = MinorCache::new(m, n);
    let mut degrees = Vec::new();
    for d in 0..=dmax {
        let space = component(expr, m, n, d, &mut cache)?;
        let ini = space.initial_monomials();
        let mut expected = BTreeSet::new();
        for mon in PositionMonomial::all_of_degree(m, n, d) {
            if in_ini(expr, &mon)? {
                expected.insert(mon.dense());
            }
        }
        degrees.push(DegreeCheck {
            degree: d,
            dimension: ini.len(),
            expected: expected.len(),
            ok: ini == expected,
        });
    }
    let passed = degrees.iter().all(|c| c.ok);
    Ok(GroebnerReport {
        ideal: expr.to_string(),
        m,
        n,
        degrees,
        passed,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Comparison {
    Equal,
    Contained,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub lhs: String,
    pub rhs: String,
    pub comparison: Comparison,
    pub dimensions: Vec<(usize, usize, usize)>,
    pub passed: bool,
    pub failing_degree: Option<usize>,
    pub witness: Option<String>,
}

/// Compares two ideals degree by degree up to `dmax`.
pub fn verify_identity(
    lhs: &IdealExpr,
    rhs: &IdealExpr,
    m: usize,
    n: usize,
    dmax: usize,
    comparison: Comparison,
) -> Result<IdentityReport> {
    lhs.validate(m, n)?;
    rhs.validate(m, n)?;
    let mut cache = MinorCache::new(m, n);
    let mut dimensions = Vec::new();
    let mut failing_degree = None;
    let mut witness = None;
    for d in 0..=dmax {
        let a = component(lhs, m, n, d, &mut cache)?;
        let b = component(rhs, m, n, d, &mut cache)?;
        dimensions.push((d, a.dim(), b.dim()));
        let w = match comparison {
            Comparison::Contained => a.witness_outside(&b),
            Comparison::Equal => a.witness_outside(&b).or_else(|| b.witness_outside(&a)),
        };
        if let Some(w) = w {
            failing_degree = Some(d);
            witness = Some(w.to_string());
            break;
        }
    }
    Ok(IdentityReport {
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        comparison,
        dimensions,
        passed: failing_degree.is_none(),
        failing_degree,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mon(m: usize, n: usize, s: &str) -> PositionMonomial {
        PositionMonomial::parse(m, n, s).unwrap()
    }

    fn sh(p: &[usize]) -> Shape {
        Shape::new(p.to_vec()).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let e = IdealExpr::parse("I[4]*I[2]").unwrap();
        assert_eq!(e, IdealExpr::product_of(&[4, 2]));
        let e = IdealExpr::parse("I[1]^(4) & I[2]^(2)").unwrap();
        assert_eq!(
            e,
            IdealExpr::Intersection(vec![
                IdealExpr::SymbolicPower(1, 4),
                IdealExpr::SymbolicPower(2, 2)
            ])
        );
        let e = IdealExpr::parse("I[1]^4 & (I[2]^2 + I[3])").unwrap();
        assert_eq!(e.to_string(), "I[1]^4 & (I[2]^2 + I[3])");
        assert_eq!(IdealExpr::parse(&e.to_string()).unwrap(), e);
        assert!(IdealExpr::parse("I[2").is_err());
        assert!(IdealExpr::parse("J[2]").is_err());
        assert!(IdealExpr::parse("I[2] I[3]").is_err());
        assert!(IdealExpr::parse("I[4]").unwrap().validate(3, 3).is_err());
    }

    #[test]
    fn membership_examples() {
        let gap = gap_monomial();
        assert!(in_ini_determinantal(&mon(2, 2, "1,1 2,2"), 2));
        assert!(!in_ini_determinantal(&mon(2, 2, "1,2 2,1"), 2));
        assert!(in_ini_determinantal(&gap, 4));
        assert!(in_ini_symbolic(&gap, 3, 2));
        assert!(!in_ini_symbolic(&mon(2, 2, "1,1"), 2, 1));
        assert!(in_ini_symbolic(
            &PositionMonomial::all_variables(3, 3),
            3,
            1
        ));
        assert!(in_ini_power(&mon(2, 2, "1,1 2,2"), 2, 1));
        assert!(in_ini_power(&gap, 2, 3));
        assert!(!in_ini_power(&mon(2, 2, "1,1^2 2,2"), 2, 2));
        assert!(in_ini_product(&gap, &[4, 2]).unwrap());
        assert!(in_ini_product(&mon(2, 2, "1,2"), &[1]).unwrap());
        assert!(!in_ini_product(&PositionMonomial::one(2, 2), &[1]).unwrap());
        assert!(!in_ini_product(&mon(2, 2, "1,1 2,2"), &[2, 2]).unwrap());
    }

    #[test]
    fn groebner_shapes() {
        assert_eq!(
            groebner_shapes_symbolic(2, 2, 2, 3),
            BTreeSet::from([sh(&[2, 2])])
        );
        assert_eq!(
            groebner_shapes_symbolic(2, 1, 3, 3),
            BTreeSet::from([sh(&[2])])
        );
        assert_eq!(
            groebner_shapes_symbolic(2, 2, 3, 3),
            BTreeSet::from([sh(&[2, 2]), sh(&[3])])
        );
        assert_eq!(
            groebner_shapes_power(2, 2, 3, 3),
            BTreeSet::from([sh(&[2, 2]), sh(&[3, 1])])
        );
        assert_eq!(
            groebner_shapes_power(2, 1, 4, 5),
            BTreeSet::from([sh(&[2])])
        );
        assert_eq!(
            groebner_shapes_power(3, 2, 4, 4),
            BTreeSet::from([sh(&[3, 3]), sh(&[4, 2])])
        );
    }

    #[test]
    fn basis_counts() {
        assert_eq!(
            standard_basis_count(&IdealExpr::Determinantal(2), 2, 2, 2).unwrap(),
            1
        );
        // C(mn + d - 1, d) for I_1.
        assert_eq!(
            standard_basis_count(&IdealExpr::Determinantal(1), 2, 3, 3).unwrap(),
            56
        );
        let e = IdealExpr::SymbolicPower(2, 2);
        assert_eq!(
            standard_basis_count(&e, 3, 3, 3).unwrap(),
            initial_monomial_count(&e, 3, 3, 3).unwrap()
        );
    }

    #[test]
    fn gap_failure() {
        let r = gkrs_failure_witness(&gap_monomial(), &[4, 2]).unwrap();
        assert!(r.member);
        assert!(!r.bitableau_initial_exists);
        assert_eq!(r.shapes_checked, vec![sh(&[6]), sh(&[5, 1]), sh(&[4, 2])]);
        let m2 = mon(4, 5, "1,1 2,2 3,3 4,4 1,3 2,4");
        let r = gkrs_failure_witness(&m2, &[4, 2]).unwrap();
        assert!(r.member && r.bitableau_initial_exists);
        let r = gkrs_failure_witness(&mon(3, 3, "1,1 2,3 3,2"), &[2]).unwrap();
        assert!(r.member && r.bitableau_initial_exists);
    }

    #[test]
    fn components_small() {
        let det = IdealExpr::Determinantal(2);
        assert_eq!(ideal_component(&det, 2, 2, 2, 6).unwrap().dim(), 1);
        assert_eq!(ideal_component(&det, 2, 2, 1, 6).unwrap().dim(), 0);
        assert!(ideal_component(&det, 2, 2, 9, 6).is_err());
        let r = verify_groebner_determinantal(2, 2, 2, 4).unwrap();
        assert!(r.passed);
        assert!(verify_groebner_determinantal(2, 3, 1, 3).unwrap().passed);
    }

    #[test]
    fn identity_small() {
        let a = IdealExpr::parse("I[2]").unwrap();
        let r = verify_identity(&a, &a, 2, 3, 3, Comparison::Equal).unwrap();
        assert!(r.passed);
        let b = IdealExpr::parse("I[2]^2").unwrap();
        let r = verify_identity(&a, &b, 2, 3, 3, Comparison::Contained).unwrap();
        assert!(!r.passed);
        assert_eq!(r.failing_degree, Some(2));
        assert!(
            verify_identity(&b, &a, 2, 3, 4, Comparison::Contained)
                .unwrap()
                .passed
        );
    }

    #[test]
    fn longest_diagonal_examples() {
        assert_eq!(longest_diagonal(&gap_monomial()), 4);
        assert_eq!(longest_diagonal(&mon(2, 2, "1,2 2,1")), 1);
        assert_eq!(longest_diagonal(&PositionMonomial::one(2, 2)), 0);
    }
}
