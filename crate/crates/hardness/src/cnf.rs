use crate::output::{Provenance, ReductionOutput};
use crate::HardnessError;
use omwis_core::graph::OrderedGraph;

const SAT_BRUTE_CAP: usize = 24;

/// A 3-CNF formula. Literals are signed 1-based variable indices; every
/// clause holds exactly three pairwise-distinct literals (`x ∨ ¬x ∨ y` is
/// fine — the literals differ even though the variables do not).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    vars: usize,
    clauses: Vec<[i64; 3]>,
}

impl CnfFormula {
    pub fn new(vars: usize, clauses: Vec<[i64; 3]>) -> Result<CnfFormula, HardnessError> {
        for (index, clause) in clauses.iter().enumerate() {
            for &lit in clause {
                if lit == 0 {
                    return Err(HardnessError::MalformedClause {
                        index,
                        reason: "literal 0".into(),
                    });
                }
                if lit.unsigned_abs() as usize > vars {
                    return Err(HardnessError::MalformedClause {
                        index,
                        reason: format!("literal {lit} exceeds {vars} variables"),
                    });
                }
            }
            if clause[0] == clause[1] || clause[0] == clause[2] || clause[1] == clause[2] {
                return Err(HardnessError::MalformedClause {
                    index,
                    reason: "literals are not pairwise distinct".into(),
                });
            }
        }
        Ok(CnfFormula { vars, clauses })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn clauses(&self) -> &[[i64; 3]] {
        &self.clauses
    }

    /// Parse DIMACS CNF: optional `c` comment lines, a `p cnf <vars>
    /// <clauses>` header, then whitespace-separated literals with each clause
    /// terminated by 0.
    pub fn parse_dimacs(text: &str) -> Result<CnfFormula, HardnessError> {
        let mut header: Option<(usize, usize)> = None;
        let mut lits: Vec<i64> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                if header.is_some() {
                    return Err(HardnessError::Cnf("duplicate header".into()));
                }
                let fields: Vec<&str> = rest.split_whitespace().collect();
                if fields.len() != 3 || fields[0] != "cnf" {
                    return Err(HardnessError::Cnf(format!("bad header {line:?}")));
                }
                let vars = fields[1]
                    .parse::<usize>()
                    .map_err(|e| HardnessError::Cnf(format!("bad variable count: {e}")))?;
                let count = fields[2]
                    .parse::<usize>()
                    .map_err(|e| HardnessError::Cnf(format!("bad clause count: {e}")))?;
                header = Some((vars, count));
                continue;
            }
            for tok in line.split_whitespace() {
                let lit = tok
                    .parse::<i64>()
                    .map_err(|e| HardnessError::Cnf(format!("bad literal {tok:?}: {e}")))?;
                lits.push(lit);
            }
        }
        let (vars, count) = header.ok_or_else(|| HardnessError::Cnf("missing header".into()))?;
        let mut clauses = Vec::with_capacity(count);
        let mut current: Vec<i64> = Vec::with_capacity(3);
        for lit in lits {
            if lit == 0 {
                let clause: [i64; 3] = current.as_slice().try_into().map_err(|_| {
                    HardnessError::MalformedClause {
                        index: clauses.len(),
                        reason: format!("{} literals instead of 3", current.len()),
                    }
                })?;
                clauses.push(clause);
                current.clear();
            } else {
                current.push(lit);
            }
        }
        if !current.is_empty() {
            return Err(HardnessError::Cnf("unterminated clause".into()));
        }
        if clauses.len() != count {
            return Err(HardnessError::Cnf(format!(
                "header promises {count} clauses, found {}",
                clauses.len()
            )));
        }
        CnfFormula::new(vars, clauses)
    }

    /// Exhaustive satisfiability check over all 2^vars assignments.
    pub fn satisfiable_brute(&self) -> Result<bool, HardnessError> {
        if self.vars > SAT_BRUTE_CAP {
            return Err(HardnessError::FormulaTooLarge {
                vars: self.vars,
                cap: SAT_BRUTE_CAP,
            });
        }
        'outer: for bits in 0u64..(1u64 << self.vars) {
            for clause in &self.clauses {
                let sat = clause.iter().any(|&lit| {
                    let v = lit.unsigned_abs() as usize;
                    (bits >> (v - 1)) & 1 == u64::from(lit > 0)
                });
                if !sat {
                    continue 'outer;
                }
            }
            return Ok(true);
        }
        Ok(false)
    }
}

/// Reduce 3-SAT to independent set on an ordered graph.
///
/// Each variable x contributes a block `v(x), v(¬x,·)…, v(¬x), v(x,·)…`: the
/// two literal vertices joined by an edge, with the occurrence vertices of a
/// literal placed directly after the opposite literal vertex (their one
/// literal-vertex neighbor). The three occurrence vertices of every clause
/// form a triangle. The blocks sit side by side in variable order, and
/// occurrence vertices within a group follow clause order. An assignment
/// picks one endpoint of every literal edge, and a satisfied clause frees one
/// triangle corner, so α ≥ vars + clauses exactly when the formula is
/// satisfiable.
pub fn gen_3sat(formula: &CnfFormula) -> ReductionOutput {
    let n = formula.vars();
    let m = formula.clauses().len();

    // Positions: literal vertices per variable, then per-occurrence slots.
    let mut pos_literal = vec![(0usize, 0usize); n + 1]; // (v(x), v(¬x))
    let mut pos_occurrence = vec![[0usize; 3]; m];
    let mut next = 1;
    for x in 1..=n {
        let lit = |sign: bool| if sign { x as i64 } else { -(x as i64) };
        pos_literal[x].0 = next;
        next += 1;
        for (c, clause) in formula.clauses().iter().enumerate() {
            for (slot, &l) in clause.iter().enumerate() {
                if l == lit(false) {
                    pos_occurrence[c][slot] = next;
                    next += 1;
                }
            }
        }
        pos_literal[x].1 = next;
        next += 1;
        for (c, clause) in formula.clauses().iter().enumerate() {
            for (slot, &l) in clause.iter().enumerate() {
                if l == lit(true) {
                    pos_occurrence[c][slot] = next;
                    next += 1;
                }
            }
        }
    }
    let total = next - 1;
    debug_assert_eq!(total, 2 * n + 3 * m);

    let mut edges = Vec::new();
    for x in 1..=n {
        edges.push(pos_literal[x]);
    }
    for (c, clause) in formula.clauses().iter().enumerate() {
        for (slot, &l) in clause.iter().enumerate() {
            // v(ℓ,c) is adjacent to the opposite literal vertex v(¬ℓ).
            let x = l.unsigned_abs() as usize;
            let opposite = if l > 0 { pos_literal[x].1 } else { pos_literal[x].0 };
            edges.push((opposite, pos_occurrence[c][slot]));
        }
        edges.push((pos_occurrence[c][0], pos_occurrence[c][1]));
        edges.push((pos_occurrence[c][0], pos_occurrence[c][2]));
        edges.push((pos_occurrence[c][1], pos_occurrence[c][2]));
    }

    let graph = OrderedGraph::new(total, &edges).expect("construction yields valid edges");
    ReductionOutput {
        graph,
        threshold: n + m,
        provenance: Provenance::ThreeSat { formula: formula.clone() },
    }
}
