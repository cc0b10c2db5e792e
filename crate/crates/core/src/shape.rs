//! Shapes (non-increasing sequences of row lengths) and the shape functions
//! `alpha_k`, `gamma_t` and their duals.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-increasing sequence of positive integers. Trailing zeros are
/// stripped on construction, so `(2, 1, 0, 0)` and `(2, 1)` are the same shape.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(parts));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidShape(parts));
        }
        Ok(Shape(parts))
    }

    /// Sorts arbitrary block sizes into a shape.
    pub fn from_sizes(mut sizes: Vec<usize>) -> Self {
        sizes.retain(|&s| s > 0);
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Shape(sizes)
    }

    pub fn empty() -> Self {
        Shape(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `i` (0-based); rows beyond the shape have length 0.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Sum of the first `k` parts.
    pub fn alpha(&self, k: usize) -> usize {
        self.0.iter().take(k).sum()
    }

    /// `sum_i max(s_i - t + 1, 0)`; for `t = 0` every part contributes `s_i + 1`.
    pub fn gamma(&self, t: usize) -> usize {
        self.0.iter().map(|&s| (s + 1).saturating_sub(t)).sum()
    }

    /// Column lengths.
    pub fn dual(&self) -> Shape {
        let width = self.part(0);
        Shape(
            (1..=width)
                .map(|i| self.0.iter().filter(|&&s| s >= i).count())
                .collect(),
        )
    }

    pub fn alpha_star(&self, k: usize) -> usize {
        self.0.iter().map(|&s| s.min(k)).sum()
    }

    /// Dominance-type order: `alpha_k(self) <= alpha_k(other)` for every `k`.
    pub fn leq(&self, other: &Shape) -> bool {
        let len = self.len().max(other.len());
        (1..=len).all(|k| self.alpha(k) <= other.alpha(k))
    }
}

impl TryFrom<Vec<usize>> for Shape {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Shape::new(parts)
    }
}

impl From<Shape> for Vec<usize> {
    fn from(s: Shape) -> Self {
        s.0
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

pub fn alpha(shape: &Shape, k: usize) -> usize {
    shape.alpha(k)
}

pub fn gamma(shape: &Shape, t: usize) -> usize {
    shape.gamma(t)
}

pub fn dual_shape(shape: &Shape) -> Shape {
    shape.dual()
}

pub fn shape_leq(rho: &Shape, sigma: &Shape) -> bool {
    rho.leq(sigma)
}

/// All partitions of `total` with at most `max_len` parts, each part in
/// `[min_part, max_part]`, in reverse lexicographic order.
pub fn partitions(total: usize, max_len: usize, min_part: usize, max_part: usize) -> Vec<Shape> {
    fn rec(
        remaining: usize,
        slots: usize,
        min_part: usize,
        cap: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Shape>,
    ) {
        if remaining == 0 {
            out.push(Shape(prefix.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        let hi = cap.min(remaining);
        for p in (min_part.max(1)..=hi).rev() {
            prefix.push(p);
            rec(remaining - p, slots - 1, min_part, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(
        total,
        max_len,
        min_part,
        max_part,
        &mut Vec::new(),
        &mut out,
    );
    out
}
