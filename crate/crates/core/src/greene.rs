//! Greene invariants of sequences and monomials.
//!
//! Each statistic is available in two modes: `Fast` reads it off the shape
//! of the insertion tableau, `Brute` optimizes over all decompositions of the
//! sequence into increasing (or non-increasing) subsequences.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::krs::ins;
use crate::monomial::PositionMonomial;
use crate::shape::Shape;

/// Default length bound for brute-force mode.
pub const BRUTE_DEFAULT_BOUND: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockKind {
    /// Strictly increasing blocks.
    Increasing,
    /// Weakly decreasing blocks.
    NonIncreasing,
}

impl BlockKind {
    fn admits(self, tail: usize, next: usize) -> bool {
        match self {
            BlockKind::Increasing => tail < next,
            BlockKind::NonIncreasing => tail >= next,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Fast,
    Brute { bound: usize },
}

impl Mode {
    pub fn brute() -> Self {
        Mode::Brute {
            bound: BRUTE_DEFAULT_BOUND,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stat {
    Alpha,
    Gamma,
    AlphaStar,
    W,
}

/// A partition of positions `1..=len` into blocks of the given kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionWitness {
    pub blocks: Vec<Vec<usize>>,
    pub kind: BlockKind,
    pub shape: Shape,
}

impl DecompositionWitness {
    /// Checks that the blocks partition the positions of `seq` and each
    /// induces a subsequence of the stated kind.
    pub fn validate(&self, seq: &[usize]) -> bool {
        let mut seen = vec![false; seq.len()];
        for block in &self.blocks {
            if block.is_empty() || block.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            for &pos in block {
                if pos == 0 || pos > seq.len() || seen[pos - 1] {
                    return false;
                }
                seen[pos - 1] = true;
            }
            if block
                .windows(2)
                .any(|w| !self.kind.admits(seq[w[0] - 1], seq[w[1] - 1]))
            {
                return false;
            }
        }
        seen.iter().all(|&s| s)
            && self.shape == Shape::from_sizes(self.blocks.iter().map(Vec::len).collect())
    }
}

fn guard(seq: &[usize], bound: usize) -> Result<()> {
    if seq.len() > bound {
        return Err(Error::TooLarge {
            len: seq.len(),
            bound,
        });
    }
    Ok(())
}

/// Maximizes `objective(shape)` over all decompositions of `seq` into blocks
/// of `kind`. The objective must grow by at most one when a single block
/// gains one element.
pub fn brute_optimum<F>(seq: &[usize], kind: BlockKind, objective: F) -> DecompositionWitness
where
    F: Fn(&Shape) -> usize,
{
    struct Search<'a, F> {
        seq: &'a [usize],
        kind: BlockKind,
        objective: F,
        blocks: Vec<Vec<usize>>,
        best: Option<usize>,
        best_blocks: Vec<Vec<usize>>,
    }

    impl<F: Fn(&Shape) -> usize> Search<'_, F> {
        fn value(&self) -> usize {
            (self.objective)(&Shape::from_sizes(
                self.blocks.iter().map(Vec::len).collect(),
            ))
        }

        fn run(&mut self, pos: usize) {
            let current = self.value();
            if pos == self.seq.len() {
                if self.best.is_none_or(|b| current > b) {
                    self.best = Some(current);
                    self.best_blocks = self.blocks.clone();
                }
                return;
            }
            if self
                .best
                .is_some_and(|b| current + (self.seq.len() - pos) <= b)
            {
                return;
            }
            let x = self.seq[pos];
            for b in 0..self.blocks.len() {
                let tail = *self.blocks[b].last().expect("blocks are non-empty");
                if self.kind.admits(self.seq[tail - 1], x) {
                    self.blocks[b].push(pos + 1);
                    self.run(pos + 1);
                    self.blocks[b].pop();
                }
            }
            self.blocks.push(vec![pos + 1]);
            self.run(pos + 1);
            self.blocks.pop();
        }
    }

    let mut search = Search {
        seq,
        kind,
        objective,
        blocks: Vec::new(),
        best: None,
        best_blocks: Vec::new(),
    };
    search.run(0);
    let blocks = search.best_blocks;
    let shape = Shape::from_sizes(blocks.iter().map(Vec::len).collect());
    DecompositionWitness {
        blocks,
        kind,
        shape,
    }
}

/// Every shape realized by some decomposition of `seq` into blocks of `kind`.
pub fn decomposition_shapes(
    seq: &[usize],
    kind: BlockKind,
    bound: usize,
) -> Result<BTreeSet<Shape>> {
    guard(seq, bound)?;
    fn rec(
        seq: &[usize],
        kind: BlockKind,
        pos: usize,
        tails: &mut Vec<(usize, usize)>,
        out: &mut BTreeSet<Shape>,
    ) {
        if pos == seq.len() {
            out.insert(Shape::from_sizes(tails.iter().map(|t| t.1).collect()));
            return;
        }
        let x = seq[pos];
        for b in 0..tails.len() {
            let (tail, len) = tails[b];
            if kind.admits(tail, x) {
                tails[b] = (x, len + 1);
                rec(seq, kind, pos + 1, tails, out);
                tails[b] = (tail, len);
            }
        }
        tails.push((x, 1));
        rec(seq, kind, pos + 1, tails, out);
        tails.pop();
    }
    let mut out = BTreeSet::new();
    rec(seq, kind, 0, &mut Vec::new(), &mut out);
    Ok(out)
}

pub fn ins_shape(seq: &[usize]) -> Shape {
    Shape::from_sizes(ins(seq).row_lengths())
}

type ShapeStat = Box<dyn Fn(&Shape) -> usize>;

/// Value of `stat` at parameter `k` (or `t`), with a witness in brute mode.
pub fn evaluate(
    seq: &[usize],
    stat: Stat,
    k: usize,
    mode: Mode,
) -> Result<(usize, Option<DecompositionWitness>)> {
    match mode {
        Mode::Fast => {
            let s = ins_shape(seq);
            let v = match stat {
                Stat::Alpha => s.alpha(k),
                Stat::Gamma => s.gamma(k),
                Stat::AlphaStar => s.dual().alpha(k),
                Stat::W => s.dual().alpha(k.saturating_sub(1)),
            };
            Ok((v, None))
        }
        Mode::Brute { bound } => {
            guard(seq, bound)?;
            let (kind, param): (BlockKind, ShapeStat) = match stat {
                Stat::Alpha => (BlockKind::Increasing, Box::new(move |s: &Shape| s.alpha(k))),
                Stat::Gamma => (BlockKind::Increasing, Box::new(move |s: &Shape| s.gamma(k))),
                Stat::AlphaStar => (
                    BlockKind::NonIncreasing,
                    Box::new(move |s: &Shape| s.alpha(k)),
                ),
                Stat::W => {
                    let j = k.saturating_sub(1);
                    (
                        BlockKind::NonIncreasing,
                        Box::new(move |s: &Shape| s.alpha(j)),
                    )
                }
            };
            let w = brute_optimum(seq, kind, |s| param(s));
            let v = param(&w.shape);
            Ok((v, Some(w)))
        }
    }
}

fn value(seq: &[usize], stat: Stat, k: usize, mode: Mode) -> Result<usize> {
    evaluate(seq, stat, k, mode).map(|r| r.0)
}

/// Largest number of entries covered by `k` strictly increasing subsequences.
pub fn hat_alpha(seq: &[usize], k: usize, mode: Mode) -> Result<usize> {
    value(seq, Stat::Alpha, k, mode)
}

/// Largest `gamma_t` of the shape of an increasing decomposition.
pub fn hat_gamma(seq: &[usize], t: usize, mode: Mode) -> Result<usize> {
    value(seq, Stat::Gamma, t, mode)
}

/// Largest number of entries covered by `k` non-increasing subsequences.
pub fn hat_alpha_star(seq: &[usize], k: usize, mode: Mode) -> Result<usize> {
    value(seq, Stat::AlphaStar, k, mode)
}

/// Largest number of entries covered by `t - 1` non-increasing subsequences.
pub fn w(seq: &[usize], t: usize) -> usize {
    ins_shape(seq).dual().alpha(t.saturating_sub(1))
}

pub fn monomial_hat_alpha(mon: &PositionMonomial, k: usize) -> usize {
    ins_shape(&mon.bottom_row()).alpha(k)
}

pub fn monomial_hat_gamma(mon: &PositionMonomial, t: usize) -> usize {
    ins_shape(&mon.bottom_row()).gamma(t)
}

pub fn monomial_w(mon: &PositionMonomial, t: usize) -> usize {
    w(&mon.bottom_row(), t)
}

/// `(gamma_1, ..., gamma_len)` of the insertion shape of the monomial.
pub fn monomial_gamma_vector(mon: &PositionMonomial, len: usize) -> Vec<usize> {
    let s = ins_shape(&mon.bottom_row());
    (1..=len).map(|t| s.gamma(t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG: [usize; 6] = [4, 1, 2, 5, 6, 3];
    const GAP: [usize; 6] = [3, 1, 2, 4, 5, 3];

    #[test]
    fn sample_values() {
        for mode in [Mode::Fast, Mode::brute()] {
            assert_eq!(hat_alpha(&FIG, 1, mode).unwrap(), 4);
            assert_eq!(hat_alpha(&FIG, 2, mode).unwrap(), 6);
            assert_eq!(hat_alpha_star(&FIG, 1, mode).unwrap(), 2);
            assert_eq!(hat_alpha(&[5, 4, 3, 2, 1], 1, mode).unwrap(), 1);
            assert_eq!(hat_alpha_star(&[2, 2, 2, 2], 1, mode).unwrap(), 4);
            assert_eq!(hat_alpha_star(&[1, 2, 3, 4, 5], 2, mode).unwrap(), 2);
        }
    }

    #[test]
    fn gap_values() {
        for mode in [Mode::Fast, Mode::brute()] {
            assert_eq!(hat_gamma(&GAP, 4, mode).unwrap(), 1);
            assert_eq!(hat_gamma(&GAP, 2, mode).unwrap(), 4);
            assert_eq!(hat_gamma(&GAP, 7, mode).unwrap(), 0);
        }
        assert_eq!(w(&GAP, 2), 2);
        assert_eq!(w(&GAP, 1), 0);
        assert_eq!(w(&[1, 2, 3], 2), 1);
    }

    #[test]
    fn monomial_values() {
        let m = PositionMonomial::parse(4, 5, "1,1 1,3 2,2 3,4 4,3 4,5").unwrap();
        assert_eq!(monomial_hat_gamma(&m, 3), 2);
        assert_eq!(monomial_gamma_vector(&m, 4), vec![6, 4, 2, 1]);
        let d = PositionMonomial::parse(3, 3, "1,1 2,2 3,3").unwrap();
        assert_eq!(monomial_hat_alpha(&d, 1), 3);
        assert_eq!(
            monomial_hat_gamma(&PositionMonomial::all_variables(3, 3), 2),
            4
        );
    }

    #[test]
    fn no_decomposition_of_insertion_shape() {
        let shapes = decomposition_shapes(&FIG, BlockKind::Increasing, 10).unwrap();
        assert!(!shapes.contains(&Shape::new(vec![4, 2]).unwrap()));
        assert!(shapes.contains(&Shape::new(vec![4, 1, 1]).unwrap()));
        assert!(shapes.contains(&Shape::new(vec![3, 3]).unwrap()));
    }

    #[test]
    fn witnesses_validate() {
        let (v, wit) = evaluate(&FIG, Stat::Alpha, 2, Mode::brute()).unwrap();
        let wit = wit.unwrap();
        assert_eq!(v, 6);
        assert!(wit.validate(&FIG));
        assert_eq!(wit.shape.alpha(2), 6);
        let bad = DecompositionWitness {
            blocks: vec![vec![1, 2]],
            kind: BlockKind::Increasing,
            shape: Shape::new(vec![2]).unwrap(),
        };
        assert!(!bad.validate(&[2, 1]));
    }

    #[test]
    fn brute_guard() {
        let long = vec![1; 11];
        assert!(hat_alpha(&long, 1, Mode::brute()).is_err());
        assert!(hat_alpha(&long, 1, Mode::Fast).is_ok());
    }

    #[test]
    fn empty_sequence() {
        let (v, wit) = evaluate(&[], Stat::Gamma, 1, Mode::brute()).unwrap();
        assert_eq!(v, 0);
        assert!(wit.unwrap().validate(&[]));
    }
}
