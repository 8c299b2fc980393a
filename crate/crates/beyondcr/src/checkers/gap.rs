use std::collections::VecDeque;

use crate::drawing::{CrossingSet, Drawing};
use crate::framework::Concept;
use crate::graph::EdgeId;

use super::{Certificate, Verdict, Witness};

struct Arc {
    to: usize,
    cap: usize,
}

/// Dinic max-flow on a small adjacency-list network.
struct Flow {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
    level: Vec<i64>,
    iter: Vec<usize>,
}

impl Flow {
    fn new(n: usize) -> Self {
        Flow { arcs: Vec::new(), adj: vec![Vec::new(); n], level: vec![0; n], iter: vec![0; n] }
    }

    fn add(&mut self, u: usize, v: usize, cap: usize) -> usize {
        self.adj[u].push(self.arcs.len());
        self.arcs.push(Arc { to: v, cap });
        self.adj[v].push(self.arcs.len());
        self.arcs.push(Arc { to: u, cap: 0 });
        self.arcs.len() - 2
    }

    fn bfs(&mut self, s: usize) {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &a in &self.adj[u] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && self.level[arc.to] < 0 {
                    self.level[arc.to] = self.level[u] + 1;
                    q.push_back(arc.to);
                }
            }
        }
    }

    fn dfs(&mut self, u: usize, t: usize, f: usize) -> usize {
        if u == t {
            return f;
        }
        while self.iter[u] < self.adj[u].len() {
            let a = self.adj[u][self.iter[u]];
            let (to, cap) = (self.arcs[a].to, self.arcs[a].cap);
            if cap > 0 && self.level[to] == self.level[u] + 1 {
                let got = self.dfs(to, t, f.min(cap));
                if got > 0 {
                    self.arcs[a].cap -= got;
                    self.arcs[a ^ 1].cap += got;
                    return got;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> usize {
        let mut total = 0;
        loop {
            self.bfs(s);
            if self.level[t] < 0 {
                return total;
            }
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, usize::MAX);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
    }
}

/// Assigns every crossing to one of its edges with at most `k` crossings per
/// edge, via max-flow. On failure the witness is the residual-reachable edge
/// set, whose internal crossings exceed its capacity.
pub fn check_k_gap_planar(d: &Drawing, cs: &CrossingSet, k: usize) -> Verdict {
    let (c, m) = (cs.len(), d.graph.m());
    let (s, t) = (c + m, c + m + 1);
    let mut fl = Flow::new(c + m + 2);
    let mut choice = Vec::with_capacity(c);
    for (x, cr) in cs.crossings.iter().enumerate() {
        fl.add(s, x, 1);
        let mut arcs = vec![(fl.add(x, c + cr.a, 1), cr.a)];
        if cr.b != cr.a {
            arcs.push((fl.add(x, c + cr.b, 1), cr.b));
        }
        choice.push(arcs);
    }
    for e in 0..m {
        fl.add(c + e, t, k);
    }
    if fl.max_flow(s, t) == c {
        let assignment: Vec<EdgeId> =
            choice.iter().map(|arcs| arcs.iter().find(|(a, _)| fl.arcs[*a].cap == 0).expect("saturated").1).collect();
        return Verdict::new(Concept::KGapPlanar, Some(k), None)
            .with_certificate(Certificate::GapAssignment(assignment));
    }
    fl.bfs(s);
    let edges: Vec<EdgeId> = (0..m).filter(|&e| fl.level[c + e] >= 0).collect();
    let internal = cs
        .crossings
        .iter()
        .filter(|cr| edges.binary_search(&cr.a).is_ok() && edges.binary_search(&cr.b).is_ok())
        .count();
    Verdict::new(Concept::KGapPlanar, Some(k), Some(Witness::Deficient { edges, internal_crossings: internal }))
}

/// Exhaustive search over all assignments; for tests on small instances.
pub fn gap_feasible_brute(cs: &CrossingSet, m: usize, k: usize) -> bool {
    fn go(cs: &CrossingSet, i: usize, load: &mut [usize], k: usize) -> bool {
        if i == cs.len() {
            return true;
        }
        let c = &cs.crossings[i];
        let mut opts = vec![c.a];
        if c.b != c.a {
            opts.push(c.b);
        }
        for e in opts {
            if load[e] < k {
                load[e] += 1;
                if go(cs, i + 1, load, k) {
                    return true;
                }
                load[e] -= 1;
            }
        }
        false
    }
    go(cs, 0, &mut vec![0; m], k)
}
