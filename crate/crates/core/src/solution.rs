use num::BigRational;
use serde_json::{json, Value};

/// An exact solver result: the optimum weight, a witness independent set
/// (ascending positions), and run statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub weight: BigRational,
    pub witness: Vec<usize>,
    pub nodes: u64,
    pub millis: u128,
}

impl Solution {
    /// The weight as a canonical fraction string ("7/2", integers without
    /// the denominator).
    pub fn alpha_string(&self) -> String {
        self.weight.to_string()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "alpha": self.alpha_string(),
            "witness": self.witness,
            "nodes": self.nodes,
            "millis": self.millis as u64,
        })
    }
}
