//! Monomial membership in the initial algebras of the symbolic Rees
//! algebra, of Rees algebras of products of determinantal ideals, and of
//! the algebra of minors `A_t`, together with their canonical modules.
//!
//! An element `M T^k` of `K[X,T]` is a [`BigradedMonomial`].

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::greene::monomial_hat_gamma;
use crate::monomial::PositionMonomial;
use crate::paths::{facets, PathFamily};
use crate::poly::expand_bitableau;
use crate::shape::{partitions, Shape};
use crate::tableau::{Bitableau, Minor};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BigradedMonomial {
    pub mon: PositionMonomial,
    pub k: usize,
}

impl BigradedMonomial {
    pub fn new(mon: PositionMonomial, k: usize) -> Self {
        BigradedMonomial { mon, k }
    }

    pub fn mul(&self, other: &BigradedMonomial) -> BigradedMonomial {
        BigradedMonomial::new(self.mon.mul(&other.mon), self.k + other.k)
    }

    pub fn divides(&self, other: &BigradedMonomial) -> bool {
        self.k <= other.k && self.mon.divides(&other.mon)
    }

    /// `other / self`, if defined.
    pub fn quotient(&self, other: &BigradedMonomial) -> Option<BigradedMonomial> {
        if self.k > other.k {
            return None;
        }
        Some(BigradedMonomial::new(
            self.mon.quotient(&other.mon)?,
            other.k - self.k,
        ))
    }
}

impl fmt::Display for BigradedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            0 => write!(f, "{}", self.mon),
            1 => write!(f, "{}*T", self.mon),
            k => write!(f, "{}*T^{k}", self.mon),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormVariant {
    Symbolic,
    ReesProduct,
}

/// `L_F(X_ij) = 1` for `(i,j)` outside the facet `F`, `0` inside, and
/// `L_F(T) = -t_coeff`.
#[derive(Clone, Debug, Serialize)]
pub struct FacetLinearForm {
    pub facet: PathFamily,
    pub level: usize,
    pub t_coeff: usize,
    pub variant: FormVariant,
}

impl FacetLinearForm {
    pub fn evaluate(&self, x: &BigradedMonomial) -> i64 {
        let inside = self.facet.points();
        let outside: u64 = x
            .mon
            .exponents()
            .iter()
            .filter(|(p, _)| !inside.contains(p))
            .map(|(_, &e)| e as u64)
            .sum();
        outside as i64 - (self.t_coeff * x.k) as i64
    }
}

/// One form per facet of the level-`t` complex, with `L_F(T) = -1`.
pub fn symbolic_forms(m: usize, n: usize, t: usize) -> Result<Vec<FacetLinearForm>> {
    Ok(facets(m, n, t)?
        .into_iter()
        .map(|facet| FacetLinearForm {
            facet,
            level: t,
            t_coeff: 1,
            variant: FormVariant::Symbolic,
        })
        .collect())
}

fn check_factors(factors: &[usize]) -> Result<()> {
    if factors.is_empty() || factors.contains(&0) || factors.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidParameter(format!(
            "factors {factors:?} must be positive and non-increasing"
        )));
    }
    Ok(())
}

/// Forms for every level `j <= t_1`, with `L_F(T) = -gamma_j(factors)`.
pub fn product_forms(m: usize, n: usize, factors: &[usize]) -> Result<Vec<FacetLinearForm>> {
    check_factors(factors)?;
    let shape = Shape::from_sizes(factors.to_vec());
    let mut out = Vec::new();
    for j in 1..=factors[0] {
        let g = shape.gamma(j);
        for facet in facets(m, n, j)? {
            out.push(FacetLinearForm {
                facet,
                level: j,
                t_coeff: g,
                variant: FormVariant::ReesProduct,
            });
        }
    }
    Ok(out)
}

pub fn satisfies_forms(forms: &[FacetLinearForm], x: &BigradedMonomial) -> bool {
    forms.iter().all(|f| f.evaluate(x) >= 0)
}

pub fn in_ini_symbolic_rees(x: &BigradedMonomial, t: usize) -> bool {
    monomial_hat_gamma(&x.mon, t) >= x.k
}

pub fn in_ini_rees(x: &BigradedMonomial, t: usize) -> bool {
    (1..=t).all(|i| monomial_hat_gamma(&x.mon, i) >= x.k * (t + 1 - i))
}

pub fn in_ini_rees_product(x: &BigradedMonomial, factors: &[usize]) -> Result<bool> {
    check_factors(factors)?;
    let shape = Shape::from_sizes(factors.to_vec());
    Ok((1..=factors[0]).all(|j| monomial_hat_gamma(&x.mon, j) >= x.k * shape.gamma(j)))
}

pub fn in_ini_at(x: &BigradedMonomial, t: usize) -> bool {
    x.mon.degree() == t * x.k && monomial_hat_gamma(&x.mon, 2) >= x.k * (t - 1)
}

fn divisible_by_xt(x: &BigradedMonomial) -> bool {
    x.k >= 1 && PositionMonomial::all_variables(x.mon.m(), x.mon.n()).divides(&x.mon)
}

pub fn in_canonical_rees(x: &BigradedMonomial, t: usize) -> bool {
    divisible_by_xt(x) && (1..=t).all(|i| monomial_hat_gamma(&x.mon, i) > (t + 1 - i) * x.k)
}

pub fn in_canonical_at(x: &BigradedMonomial, t: usize) -> bool {
    x.mon.degree() == t * x.k && divisible_by_xt(x) && monomial_hat_gamma(&x.mon, 2) > (t - 1) * x.k
}

/// `(m-i+1)(n-i+1)`, the value of `gamma_i` on the product of all variables.
pub fn gamma_of_x(m: usize, n: usize, i: usize) -> Result<usize> {
    if i == 0 || i > m.min(n) {
        return Err(Error::InvalidParameter(format!(
            "i = {i} outside [1, {}]",
            m.min(n)
        )));
    }
    Ok((m - i + 1) * (n - i + 1))
}

/// Product of minors whose initial monomial is the product of all
/// variables.
pub fn distinguished_d(m: usize, n: usize) -> Result<Bitableau> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter("empty matrix".into()));
    }
    if m > n {
        return Ok(distinguished_d(n, m)?.transpose());
    }
    let range = |a: usize, b: usize| (a..=b).collect::<Vec<usize>>();
    let mut minors = Vec::new();
    for s in 1..m {
        minors.push(Minor::new(range(m - s + 1, m), range(1, s))?);
        minors.push(Minor::new(range(1, s), range(n - s + 1, n))?);
    }
    for j in 1..=n - m + 1 {
        minors.push(Minor::new(range(1, m), range(j, j + m - 1))?);
    }
    Ok(Bitableau::from_minors(minors))
}

/// Checks `ini(D)` against the product of all variables and the shape of
/// `D` against `gamma_of_x`.
pub fn check_distinguished_d(m: usize, n: usize) -> Result<bool> {
    let d = distinguished_d(m, n)?;
    let lead = expand_bitableau(&d, m, n).leading_monomial();
    let shape = d.shape();
    let gammas = (1..=m.min(n)).all(|i| gamma_of_x(m, n, i).is_ok_and(|g| g == shape.gamma(i)));
    Ok(lead == Some(PositionMonomial::all_variables(m, n)) && gammas)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GorensteinReason {
    /// `t = 1`.
    Polynomial,
    /// `t = min(m,n)`.
    MaximalMinors,
    /// `t = m - 1` and `m = n`.
    Submaximal,
    /// `mn = t(m+n)`.
    Balanced,
}

impl GorensteinReason {
    pub fn clause(self) -> char {
        match self {
            GorensteinReason::Polynomial => 'a',
            GorensteinReason::MaximalMinors => 'b',
            GorensteinReason::Submaximal => 'c',
            GorensteinReason::Balanced => 'd',
        }
    }
}

fn check_t(m: usize, n: usize, t: usize) -> Result<()> {
    if t == 0 || t > m.min(n) {
        return Err(Error::InvalidParameter(format!(
            "t = {t} outside [1, {}]",
            m.min(n)
        )));
    }
    Ok(())
}

/// Whether `A_t` is Gorenstein, with the first clause that applies.
pub fn is_gorenstein_at(m: usize, n: usize, t: usize) -> Result<Option<GorensteinReason>> {
    check_t(m, n, t)?;
    Ok(if t == 1 {
        Some(GorensteinReason::Polynomial)
    } else if t == m.min(n) {
        Some(GorensteinReason::MaximalMinors)
    } else if t + 1 == m && m == n {
        Some(GorensteinReason::Submaximal)
    } else if m * n == t * (m + n) {
        Some(GorensteinReason::Balanced)
    } else {
        None
    })
}

pub fn dim_at(m: usize, n: usize, t: usize) -> Result<usize> {
    check_t(m, n, t)?;
    let (a, b) = (m.min(n), m.max(n));
    Ok(if t == a { a * (b - a) + 1 } else { m * n })
}

/// All `M T^k` with `deg M <= max_degree` and `k <= max_k`.
pub fn bigraded_monomials(
    m: usize,
    n: usize,
    max_degree: usize,
    max_k: usize,
) -> Vec<BigradedMonomial> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        for mon in PositionMonomial::all_of_degree(m, n, d) {
            for k in 0..=max_k {
                out.push(BigradedMonomial::new(mon.clone(), k));
            }
        }
    }
    out
}

/// Members `M T^k` of the canonical module of `A_t` with `k <= max_k`.
pub fn canonical_at_members(m: usize, n: usize, t: usize, max_k: usize) -> Vec<BigradedMonomial> {
    let all = PositionMonomial::all_variables(m, n);
    let mut out = Vec::new();
    for k in 1..=max_k {
        let Some(extra) = (t * k).checked_sub(m * n) else {
            continue;
        };
        for rest in PositionMonomial::all_of_degree(m, n, extra) {
            let x = BigradedMonomial::new(all.mul(&rest), k);
            if in_canonical_at(&x, t) {
                out.push(x);
            }
        }
    }
    out
}

/// For `mn = t(m+n)`: checks that `X T^{m+n}` is a member and that every
/// member up to `max_k` is `X T^{m+n}` times an element of `ini(A_t)`.
/// Returns the first member that is not.
pub fn canonical_at_principal(
    m: usize,
    n: usize,
    t: usize,
    max_k: usize,
) -> Result<Option<BigradedMonomial>> {
    check_t(m, n, t)?;
    if m * n != t * (m + n) {
        return Err(Error::InvalidParameter(format!("{m}*{n} != {t}*({m}+{n})")));
    }
    let g = BigradedMonomial::new(PositionMonomial::all_variables(m, n), m + n);
    if !in_canonical_at(&g, t) {
        return Ok(Some(g));
    }
    Ok(canonical_at_members(m, n, t, max_k)
        .into_iter()
        .find(|x| !g.quotient(x).is_some_and(|q| in_ini_at(&q, t))))
}

/// For every shape `lambda` with `|lambda| = kt <= max_size`: if
/// `gamma_2(lambda) >= k(t-1)` then `gamma_i(lambda) >= k(t+1-i)` for all
/// `i <= t`. Returns a counterexample `(lambda, k, t)`.
pub fn shape_simplification_counterexample(max_size: usize) -> Option<(Shape, usize, usize)> {
    for size in 1..=max_size {
        for lambda in partitions(size, size, 1, size) {
            for t in 1..=size {
                if size % t != 0 {
                    continue;
                }
                let k = size / t;
                let premise = t < 2 || lambda.gamma(2) >= k * (t - 1);
                if premise && !(1..=t).all(|i| lambda.gamma(i) >= k * (t + 1 - i)) {
                    return Some((lambda, k, t));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mon(m: usize, n: usize, s: &str) -> PositionMonomial {
        PositionMonomial::parse(m, n, s).unwrap()
    }

    fn bx(m: PositionMonomial, k: usize) -> BigradedMonomial {
        BigradedMonomial::new(m, k)
    }

    #[test]
    fn symbolic_rees_examples() {
        let x = PositionMonomial::all_variables(3, 3);
        assert!(in_ini_symbolic_rees(&bx(x, 4), 2));
        assert!(in_ini_symbolic_rees(&bx(mon(3, 3, "1,2"), 0), 3));
        assert!(!in_ini_symbolic_rees(&bx(mon(3, 3, "1,1"), 1), 2));
    }

    #[test]
    fn rees_examples() {
        let gap = crate::ideals::gap_monomial();
        let (m, n) = (gap.m(), gap.n());
        assert!(in_ini_rees(&bx(gap.clone(), 2), 2));
        assert!(in_ini_rees(&bx(mon(3, 3, "1,1 2,2"), 1), 2));
        assert!(!in_ini_rees(&bx(mon(3, 3, "1,1 2,2"), 2), 2));
        assert!(in_ini_rees_product(&bx(gap.clone(), 1), &[4, 2]).unwrap());
        assert!(in_ini_rees_product(&bx(PositionMonomial::one(m, n), 0), &[4, 2]).unwrap());
        assert!(!in_ini_rees_product(&bx(mon(3, 3, "1,1 2,2 3,3"), 2), &[2]).unwrap());
        assert!(in_ini_rees_product(&bx(gap, 1), &[2, 4]).is_err());
    }

    #[test]
    fn at_examples() {
        assert!(in_ini_at(&bx(mon(3, 3, "1,1 2,2"), 1), 2));
        assert!(in_ini_at(&bx(mon(4, 4, "1,1 2,2 3,3 4,4"), 2), 2));
        assert!(!in_ini_at(&bx(mon(3, 3, "1,1^2"), 1), 2));
        assert!(!in_ini_at(&bx(mon(3, 3, "1,1 2,2 3,3"), 1), 2));
    }

    #[test]
    fn canonical_examples() {
        let x = PositionMonomial::all_variables(3, 3);
        assert!(in_canonical_rees(&bx(x.clone(), 1), 2));
        assert!(in_canonical_rees(&bx(x.clone(), 3), 2));
        assert!(!in_canonical_rees(&bx(x.clone(), 4), 2));
        assert!(!in_canonical_rees(&bx(mon(3, 3, "1,1 2,2"), 1), 2));
        let g = bx(PositionMonomial::all_variables(4, 4), 8);
        assert!(in_canonical_at(&g, 2));
        assert!(!in_canonical_at(
            &bx(PositionMonomial::all_variables(4, 4), 7),
            2
        ));
        assert_eq!(canonical_at_principal(4, 4, 2, 10).unwrap(), None);
    }

    #[test]
    fn gamma_of_all_variables() {
        assert_eq!(gamma_of_x(3, 3, 1).unwrap(), 9);
        assert_eq!(gamma_of_x(3, 3, 3).unwrap(), 1);
        assert_eq!(gamma_of_x(4, 5, 2).unwrap(), 12);
        let x = PositionMonomial::all_variables(4, 5);
        assert_eq!(monomial_hat_gamma(&x, 2), 12);
    }

    #[test]
    fn distinguished_products() {
        let d = distinguished_d(2, 2).unwrap();
        assert_eq!(d.to_string(), "[1 2|1 2]·[2|1]·[1|2]");
        assert_eq!(
            distinguished_d(3, 4).unwrap().shape().parts(),
            &[3, 3, 2, 2, 1, 1]
        );
        assert_eq!(distinguished_d(1, 3).unwrap().shape().parts(), &[1, 1, 1]);
        for (m, n) in [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3), (3, 4)] {
            assert!(check_distinguished_d(m, n).unwrap(), "{m}x{n}");
        }
    }

    #[test]
    fn gorenstein_table() {
        use GorensteinReason::*;
        assert_eq!(is_gorenstein_at(4, 4, 2).unwrap(), Some(Balanced));
        assert_eq!(is_gorenstein_at(3, 3, 2).unwrap(), Some(Submaximal));
        assert_eq!(is_gorenstein_at(4, 3, 2).unwrap(), None);
        assert_eq!(is_gorenstein_at(6, 6, 3).unwrap(), Some(Balanced));
        assert_eq!(is_gorenstein_at(5, 2, 1).unwrap(), Some(Polynomial));
        assert!(is_gorenstein_at(2, 2, 3).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim_at(2, 4, 2).unwrap(), 5);
        assert_eq!(dim_at(3, 3, 2).unwrap(), 9);
        assert_eq!(dim_at(4, 3, 1).unwrap(), 12);
    }

    #[test]
    fn forms_agree_with_gamma_on_2x3() {
        for t in 1..=2 {
            let forms = symbolic_forms(2, 3, t).unwrap();
            for x in bigraded_monomials(2, 3, 4, 3) {
                assert_eq!(
                    satisfies_forms(&forms, &x),
                    in_ini_symbolic_rees(&x, t),
                    "{x} t={t}"
                );
            }
        }
        let forms = product_forms(2, 3, &[2, 1]).unwrap();
        for x in bigraded_monomials(2, 3, 4, 2) {
            assert_eq!(
                satisfies_forms(&forms, &x),
                in_ini_rees_product(&x, &[2, 1]).unwrap()
            );
        }
    }

    #[test]
    fn shape_simplification_small() {
        assert_eq!(shape_simplification_counterexample(12), None);
    }
}
