/// Dinic max-flow over explicit residual capacities. Callers can encode
/// lower-bound transformations by choosing the initial forward/backward
/// residuals per edge.
pub struct Dinic {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
    level: Vec<i32>,
    it: Vec<usize>,
    pub augmentations: u64,
}

pub const INF: i64 = i64::MAX / 4;

impl Dinic {
    pub fn new(n: usize) -> Self {
        Dinic {
            head: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
            level: vec![-1; n],
            it: vec![0; n],
            augmentations: 0,
        }
    }

    /// Adds the pair (u→v with residual `cap`, v→u with residual `back`).
    /// Returns the forward edge id; the paired edge is `id ^ 1`.
    pub fn add_edge(&mut self, u: usize, v: usize, cap: i64, back: i64) -> usize {
        let id = self.to.len();
        self.to.push(v);
        self.cap.push(cap);
        self.head[u].push(id);
        self.to.push(u);
        self.cap.push(back);
        self.head[v].push(id + 1);
        id
    }

    pub fn residual(&self, id: usize) -> i64 {
        self.cap[id]
    }

    /// Net flow pushed through edge `id` since construction, assuming its
    /// initial forward residual was `initial`.
    pub fn pushed(&self, id: usize, initial: i64) -> i64 {
        initial - self.cap[id]
    }

    pub fn set_residual(&mut self, id: usize, value: i64) {
        self.cap[id] = value;
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        let mut queue = std::collections::VecDeque::new();
        self.level[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &id in &self.head[v] {
                let u = self.to[id];
                if self.cap[id] > 0 && self.level[u] < 0 {
                    self.level[u] = self.level[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, v: usize, t: usize, limit: i64) -> i64 {
        if v == t {
            return limit;
        }
        while self.it[v] < self.head[v].len() {
            let id = self.head[v][self.it[v]];
            let u = self.to[id];
            if self.cap[id] > 0 && self.level[u] == self.level[v] + 1 {
                let pushed = self.dfs(u, t, limit.min(self.cap[id]));
                if pushed > 0 {
                    self.cap[id] -= pushed;
                    self.cap[id ^ 1] += pushed;
                    return pushed;
                }
            }
            self.it[v] += 1;
        }
        0
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        while self.bfs(s, t) {
            self.it.iter_mut().for_each(|i| *i = 0);
            loop {
                let pushed = self.dfs(s, t, INF);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
                self.augmentations += 1;
            }
        }
        flow
    }

    /// Nodes reachable from `s` along positive residuals.
    pub fn reachable_from(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &id in &self.head[v] {
                let u = self.to[id];
                if self.cap[id] > 0 && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen
    }
}
