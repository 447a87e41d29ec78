//! Branch-tree logging shared by the solvers.

use serde_json::{json, Value};

/// Branch-tree log: one JSON object per node.
#[derive(Debug, Default)]
pub struct Trace {
    next_id: u64,
    pub events: Vec<Value>,
}

impl Trace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn node(&mut self, parent: Option<u64>, action: &str, credit: f64) -> u64 {
        let id = self.next_id;
        self.next_id += 1;
        self.events.push(json!({
            "node": id,
            "parent": parent,
            "action": action,
            "credit": credit,
        }));
        id
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_get_sequential_ids() {
        let mut t = Trace::new();
        let root = t.node(None, "root", 0.0);
        let child = t.node(Some(root), "exclude 3", 1.5);
        assert_eq!(root, 0);
        assert_eq!(child, 1);
        assert_eq!(t.events.len(), 2);
        assert_eq!(t.events[1]["parent"], 0);
        assert_eq!(t.events[1]["credit"], 1.5);
    }
}
