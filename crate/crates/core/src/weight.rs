//! Positive integral weights separating pairs of monomials, by
//! Fourier-Motzkin elimination over the rationals.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{rational, ExactPolynomial, Rational};

/// Outcome of [`find_separating_weight`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "result")]
pub enum WeightResult {
    /// `a_i >= 1` and `a . (big - small) >= 1` for every pair.
    Weight {
        #[serde(serialize_with = "as_strings")]
        weight: Vec<BigInt>,
    },
    /// Non-negative multipliers: `positivity[i]` for `a_i >= 1`, then
    /// `pairs[j]` for the `j`-th pair. The combination has zero left side
    /// and positive right side.
    Infeasible {
        #[serde(serialize_with = "as_strings")]
        positivity: Vec<BigInt>,
        #[serde(serialize_with = "as_strings")]
        pairs: Vec<BigInt>,
    },
}

fn as_strings<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

#[derive(Clone, Debug)]
struct Row {
    coeffs: Vec<Rational>,
    rhs: Rational,
    origin: Vec<Rational>,
}

impl Row {
    fn combine(p: &Row, q: &Row, k: usize) -> Row {
        // p has positive and q negative coefficient at k.
        let lp = -q.coeffs[k].clone();
        let lq = p.coeffs[k].clone();
        let mix = |a: &Vec<Rational>, b: &Vec<Rational>| {
            a.iter().zip(b).map(|(x, y)| x * &lp + y * &lq).collect()
        };
        Row {
            coeffs: mix(&p.coeffs, &q.coeffs),
            rhs: &p.rhs * &lp + &q.rhs * &lq,
            origin: mix(&p.origin, &q.origin),
        }
    }

    /// Scales so the first non-zero coefficient has absolute value 1.
    fn normalized(mut self) -> Row {
        let lead = self.coeffs.iter().find(|c| !c.is_zero()).cloned();
        let scale = match lead {
            Some(c) => c.abs().recip(),
            None if !self.rhs.is_zero() => self.rhs.abs().recip(),
            None => return self,
        };
        for c in self.coeffs.iter_mut().chain(self.origin.iter_mut()) {
            *c *= &scale;
        }
        self.rhs *= scale;
        self
    }
}

fn to_integers(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter()
        .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
        .collect()
}

/// Finds `a` with positive integer entries and `a . big > a . small` for
/// every `(big, small)` pair of exponent vectors.
pub fn find_separating_weight(pairs: &[(Vec<u32>, Vec<u32>)]) -> Result<WeightResult> {
    let nvars = pairs.first().map_or(0, |p| p.0.len());
    if pairs
        .iter()
        .any(|(a, b)| a.len() != nvars || b.len() != nvars)
    {
        return Err(Error::InvalidParameter(
            "exponent vectors have different lengths".into(),
        ));
    }
    let ncons = nvars + pairs.len();
    let mut rows: Vec<Row> = Vec::with_capacity(ncons);
    for i in 0..nvars {
        let mut coeffs = vec![Rational::zero(); nvars];
        coeffs[i] = Rational::one();
        let mut origin = vec![Rational::zero(); ncons];
        origin[i] = Rational::one();
        rows.push(Row {
            coeffs,
            rhs: Rational::one(),
            origin,
        });
    }
    for (j, (big, small)) in pairs.iter().enumerate() {
        let coeffs = big
            .iter()
            .zip(small)
            .map(|(&x, &y)| rational(x as i64 - y as i64))
            .collect();
        let mut origin = vec![Rational::zero(); ncons];
        origin[nvars + j] = Rational::one();
        rows.push(Row {
            coeffs,
            rhs: Rational::one(),
            origin,
        });
    }

    // stages[k] holds the system over variables k..nvars.
    let mut stages: Vec<Vec<Row>> = Vec::with_capacity(nvars + 1);
    stages.push(rows.clone());
    for k in 0..nvars {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            if r.coeffs[k].is_positive() {
                pos.push(r);
            } else if r.coeffs[k].is_negative() {
                neg.push(r);
            } else {
                rest.push(r);
            }
        }
        for p in &pos {
            for q in &neg {
                rest.push(Row::combine(p, q, k));
            }
        }
        let mut seen = BTreeSet::new();
        rows = rest
            .into_iter()
            .map(Row::normalized)
            .filter(|r| seen.insert((r.coeffs.clone(), r.rhs.clone())))
            .collect();
        stages.push(rows.clone());
    }

    if let Some(bad) = rows.iter().find(|r| r.rhs.is_positive()) {
        let ints = to_integers(&bad.origin);
        let (positivity, pair_mults) = ints.split_at(nvars);
        return Ok(WeightResult::Infeasible {
            positivity: positivity.to_vec(),
            pairs: pair_mults.to_vec(),
        });
    }

    let mut a = vec![Rational::zero(); nvars];
    for k in (0..nvars).rev() {
        let mut lower: Option<Rational> = None;
        for r in &stages[k] {
            if !r.coeffs[k].is_positive() {
                continue;
            }
            let others: Rational = ((k + 1)..nvars).map(|j| &r.coeffs[j] * &a[j]).sum();
            let bound = (&r.rhs - others) / &r.coeffs[k];
            if lower.as_ref().is_none_or(|l| bound > *l) {
                lower = Some(bound);
            }
        }
        a[k] = lower.expect("a_k >= 1 always bounds a_k from below");
    }
    let weight = to_integers(&a);
    let ok = weight.iter().all(|x| x.is_positive())
        && pairs.iter().all(|(big, small)| {
            let dot = |v: &Vec<u32>| -> BigInt {
                v.iter()
                    .zip(&weight)
                    .map(|(&e, w)| w * BigInt::from(e))
                    .sum()
            };
            dot(big) > dot(small)
        });
    if !ok {
        return Err(Error::Inconsistent(
            "back-substituted weight fails validation".into(),
        ));
    }
    Ok(WeightResult::Weight { weight })
}

/// Pairs `(leading monomial, other monomial)` for each polynomial.
pub fn leading_pairs(polys: &[ExactPolynomial]) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut out = Vec::new();
    for p in polys {
        if let Some((lead, _)) = p.leading_term() {
            for e in p.terms().keys() {
                if e != lead {
                    out.push((lead.clone(), e.clone()));
                }
            }
        }
    }
    out
}

/// Checks a certificate from [`WeightResult::Infeasible`].
pub fn check_infeasibility(
    pairs: &[(Vec<u32>, Vec<u32>)],
    positivity: &[BigInt],
    mults: &[BigInt],
) -> bool {
    let nvars = positivity.len();
    if mults.len() != pairs.len() || positivity.iter().chain(mults).any(|x| x.is_negative()) {
        return false;
    }
    let mut lhs = vec![BigInt::zero(); nvars];
    for (i, c) in positivity.iter().enumerate() {
        lhs[i] += c;
    }
    for ((big, small), c) in pairs.iter().zip(mults) {
        for i in 0..nvars {
            lhs[i] += c * (BigInt::from(big[i]) - BigInt::from(small[i]));
        }
    }
    let rhs: BigInt = positivity.iter().chain(mults).sum();
    lhs.iter().all(|x| x.is_zero()) && rhs.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::expand_minor;
    use crate::tableau::Minor;

    #[test]
    fn single_minor() {
        let pairs = vec![(vec![1, 0, 0, 1], vec![0, 1, 1, 0])];
        match find_separating_weight(&pairs).unwrap() {
            WeightResult::Weight { weight } => {
                assert!(&weight[0] + &weight[3] > &weight[1] + &weight[2]);
            }
            other => panic!("expected a weight, got {other:?}"),
        }
    }

    #[test]
    fn antisymmetric_pairs_infeasible() {
        let u = vec![1, 0];
        let v = vec![0, 1];
        let pairs = vec![(u.clone(), v.clone()), (v, u)];
        match find_separating_weight(&pairs).unwrap() {
            WeightResult::Infeasible {
                positivity,
                pairs: mults,
            } => {
                assert!(check_infeasibility(&pairs, &positivity, &mults));
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn squares_against_mixed_term() {
        let pairs = vec![(vec![2, 0], vec![1, 1]), (vec![0, 2], vec![1, 1])];
        assert!(matches!(
            find_separating_weight(&pairs).unwrap(),
            WeightResult::Infeasible { .. }
        ));
    }

    #[test]
    fn diagonal_order_on_2x3_minors() {
        let polys: Vec<_> = Minor::all(2, 3)
            .iter()
            .map(|d| expand_minor(d, 2, 3))
            .collect();
        let pairs = leading_pairs(&polys);
        assert!(matches!(
            find_separating_weight(&pairs).unwrap(),
            WeightResult::Weight { .. }
        ));
    }
}
