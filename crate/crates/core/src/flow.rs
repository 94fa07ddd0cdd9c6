//! Dense Edmonds–Karp max-flow. Networks here have at most a few hundred
//! nodes, so an adjacency matrix of residual capacities is the simplest fit.

use std::collections::VecDeque;

pub(crate) const INF: i64 = i64::MAX / 4;

pub(crate) struct FlowNetwork {
    n: usize,
    residual: Vec<i64>,
}

impl FlowNetwork {
    pub fn new(n: usize) -> Self {
        FlowNetwork {
            n,
            residual: vec![0; n * n],
        }
    }

    /// Directed arc `u -> v` with capacity `cap` (added to any existing arc).
    pub fn add_arc(&mut self, u: usize, v: usize, cap: i64) {
        let c = &mut self.residual[u * self.n + v];
        *c = c.saturating_add(cap).min(INF);
    }

    /// Undirected edge: capacity `cap` in both directions.
    pub fn add_edge(&mut self, u: usize, v: usize, cap: i64) {
        self.add_arc(u, v, cap);
        self.add_arc(v, u, cap);
    }

    /// Runs max-flow from `s` to `t`, stopping early once the flow reaches `limit`.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: i64) -> i64 {
        let n = self.n;
        let mut flow = 0i64;
        let mut parent = vec![usize::MAX; n];
        while flow < limit {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            parent[s] = s;
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(u) = queue.pop_front() {
                let row = &self.residual[u * n..(u + 1) * n];
                for (v, &cap) in row.iter().enumerate() {
                    if cap > 0 && parent[v] == usize::MAX {
                        parent[v] = u;
                        if v == t {
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if parent[t] == usize::MAX {
                break;
            }
            let mut bottleneck = limit - flow;
            let mut v = t;
            while v != s {
                let u = parent[v];
                bottleneck = bottleneck.min(self.residual[u * n + v]);
                v = u;
            }
            let mut v = t;
            while v != s {
                let u = parent[v];
                self.residual[u * n + v] -= bottleneck;
                self.residual[v * n + u] += bottleneck;
                v = u;
            }
            flow += bottleneck;
        }
        flow
    }

    /// Nodes reachable from `s` in the residual network (source side of a min cut).
    pub fn source_side(&self, s: usize) -> Vec<bool> {
        let n = self.n;
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if !seen[v] && self.residual[u * n + v] > 0 {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}
