use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Positive rational vertex weights, stored together with the least common
/// denominator `scale` and the integer weights `scale * w(v)`. All solver
/// arithmetic runs on the scaled integers; results convert back to rationals
/// at the boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMap {
    w: Vec<BigRational>,
    scale: BigInt,
    scaled: Vec<i64>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightError {
    #[error("weight of vertex {v} must be positive")]
    NonPositive { v: usize },
    #[error("scaled weight of vertex {v} does not fit in 64 bits")]
    Overflow { v: usize },
    #[error("expected {expected} weights, got {got}")]
    Count { expected: usize, got: usize },
}

impl WeightMap {
    /// Unit weights on `n` vertices.
    pub fn unit(n: usize) -> Self {
        let one = BigRational::one();
        let mut w = vec![BigRational::zero()];
        w.extend(std::iter::repeat(one).take(n));
        let mut scaled = vec![0i64; n + 1];
        for s in scaled.iter_mut().skip(1) {
            *s = 1;
        }
        WeightMap { w, scale: BigInt::one(), scaled }
    }

    /// Weights for vertices `1..=weights.len()`, validated positive.
    pub fn from_rationals(weights: Vec<BigRational>) -> Result<Self, WeightError> {
        for (i, q) in weights.iter().enumerate() {
            if !q.is_positive() {
                return Err(WeightError::NonPositive { v: i + 1 });
            }
        }
        let mut scale = BigInt::one();
        for q in &weights {
            scale = scale.lcm(q.denom());
        }
        let mut w = vec![BigRational::zero()];
        let mut scaled = vec![0i64];
        for (i, q) in weights.iter().enumerate() {
            let s = (q * BigRational::from_integer(scale.clone())).to_integer();
            let s64 = s.to_i64().ok_or(WeightError::Overflow { v: i + 1 })?;
            scaled.push(s64);
            w.push(q.clone());
        }
        Ok(WeightMap { w, scale, scaled })
    }

    pub fn n(&self) -> usize {
        self.w.len() - 1
    }

    pub fn get(&self, v: usize) -> &BigRational {
        &self.w[v]
    }

    pub fn scaled(&self, v: usize) -> i64 {
        self.scaled[v]
    }

    pub fn scale(&self) -> &BigInt {
        &self.scale
    }

    /// The scale as a float, for approximate reporting (trace output and the
    /// like). Exact arithmetic stays on the scaled integers.
    pub fn scale_f64(&self) -> f64 {
        self.scale.to_f64().filter(|s| *s > 0.0).unwrap_or(1.0)
    }

    pub fn sum_scaled<I: IntoIterator<Item = usize>>(&self, set: I) -> i64 {
        set.into_iter().map(|v| self.scaled[v]).sum()
    }

    pub fn total_scaled(&self) -> i64 {
        self.scaled[1..].iter().sum()
    }

    /// Convert a scaled total back to the exact rational it represents.
    pub fn to_rational(&self, scaled_total: i64) -> BigRational {
        BigRational::new(BigInt::from(scaled_total), self.scale.clone())
    }

    pub fn sum<I: IntoIterator<Item = usize>>(&self, set: I) -> BigRational {
        let mut acc = BigRational::zero();
        for v in set {
            acc += &self.w[v];
        }
        acc
    }

    /// Weights of an induced subgraph described by `map` (as produced by
    /// `OrderedGraph::induce`): new position `i` inherits the weight of
    /// `map[i]`. The scale is preserved.
    pub fn restrict(&self, map: &[usize]) -> WeightMap {
        let mut w = vec![BigRational::zero()];
        let mut scaled = vec![0i64];
        for &old in &map[1..] {
            w.push(self.w[old].clone());
            scaled.push(self.scaled[old]);
        }
        WeightMap { w, scale: self.scale.clone(), scaled }
    }
}
