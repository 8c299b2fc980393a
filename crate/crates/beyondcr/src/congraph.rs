//! Two-pole gadgets substituted for frame connections.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConGraphSpec {
    /// `i` internally disjoint pole paths of length `j`.
    Bundle(usize, usize),
    /// A bundle plus the direct pole edge.
    BundlePlus(usize, usize),
    SingleEdge,
    K7,
    ApexBlue {
        ell: usize,
        k: usize,
    },
    SkewBlue {
        ell: usize,
        k: usize,
    },
}

/// Vertex of a con-graph: a pole or the i-th internal vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Loc {
    S,
    T,
    I(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConGraph {
    pub internal: Vec<String>,
    pub edges: Vec<(Loc, Loc)>,
    /// Pole-to-pole path family, each path from `S` to `T`.
    pub paths: Vec<Vec<Loc>>,
}

impl ConGraph {
    fn new() -> Self {
        ConGraph { internal: Vec::new(), edges: Vec::new(), paths: Vec::new() }
    }

    fn vertex(&mut self, label: String) -> Loc {
        self.internal.push(label);
        Loc::I(self.internal.len() - 1)
    }

    fn path(&mut self, p: Vec<Loc>) {
        for w in p.windows(2) {
            self.edges.push((w[0], w[1]));
        }
        self.paths.push(p);
    }

    pub fn width(&self) -> usize {
        self.paths.len()
    }

    pub fn height(&self) -> usize {
        self.paths.iter().map(|p| p.len() - 1).max().unwrap_or(0)
    }
}

impl ConGraphSpec {
    pub fn triangle() -> Self {
        ConGraphSpec::BundlePlus(1, 2)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameters(m));
        match *self {
            ConGraphSpec::Bundle(i, j) => {
                if i == 0 || j == 0 {
                    return bad(format!("bundle ({i},{j}) needs i,j >= 1"));
                }
                if j == 1 && i > 1 {
                    return bad(format!("bundle ({i},1) would have parallel edges"));
                }
            }
            ConGraphSpec::BundlePlus(i, j) => {
                if i == 0 || j < 2 {
                    return bad(format!("bundle+ ({i},{j}) needs i >= 1 and j >= 2"));
                }
            }
            ConGraphSpec::ApexBlue { ell, k } | ConGraphSpec::SkewBlue { ell, k } => {
                if ell == 0 || k == 0 {
                    return bad(format!("gadget parameters ell={ell}, k={k} must be >= 1"));
                }
            }
            ConGraphSpec::SingleEdge | ConGraphSpec::K7 => {}
        }
        Ok(())
    }

    pub fn instantiate(&self) -> Result<ConGraph> {
        self.validate()?;
        let mut g = ConGraph::new();
        match *self {
            ConGraphSpec::SingleEdge => g.path(vec![Loc::S, Loc::T]),
            ConGraphSpec::Bundle(i, j) => bundle_paths(&mut g, i, j),
            ConGraphSpec::BundlePlus(i, j) => {
                g.path(vec![Loc::S, Loc::T]);
                bundle_paths(&mut g, i, j);
            }
            ConGraphSpec::K7 => {
                let x: Vec<Loc> = (1..=5).map(|i| g.vertex(format!("x{i}"))).collect();
                g.path(vec![Loc::S, Loc::T]);
                for &xi in &x {
                    g.path(vec![Loc::S, xi, Loc::T]);
                }
                for a in 0..5 {
                    for b in a + 1..5 {
                        g.edges.push((x[a], x[b]));
                    }
                }
            }
            ConGraphSpec::ApexBlue { ell, k } => {
                for v in 1..=k {
                    let a = g.vertex(format!("a{v}"));
                    let left: Vec<Loc> = (1..=ell).map(|i| g.vertex(format!("l{v}.{i}"))).collect();
                    let right: Vec<Loc> = (1..=ell).map(|i| g.vertex(format!("r{v}.{i}"))).collect();
                    let q: Vec<Loc> = (1..=4).map(|i| g.vertex(format!("q{v}.{i}"))).collect();
                    for i in 0..ell {
                        g.path(vec![Loc::S, left[i], a, right[i], Loc::T]);
                    }
                    let k5 = [a, q[0], q[1], q[2], q[3]];
                    for x in 0..5 {
                        for y in x + 1..5 {
                            g.edges.push((k5[x], k5[y]));
                        }
                    }
                }
            }
            ConGraphSpec::SkewBlue { k, .. } => {
                for v in 1..=k {
                    let a = g.vertex(format!("a{v}"));
                    let w: Vec<Loc> = (1..=3).map(|i| g.vertex(format!("w{v}.{i}"))).collect();
                    g.path(vec![Loc::S, w[0], a, Loc::T]);
                    g.edges.push((Loc::S, w[1]));
                    g.edges.push((Loc::S, w[2]));
                    g.edges.push((a, w[1]));
                    g.edges.push((a, w[2]));
                    g.edges.push((w[0], w[1]));
                    g.edges.push((w[0], w[2]));
                    g.edges.push((w[1], w[2]));
                }
            }
        }
        Ok(g)
    }
}

fn bundle_paths(g: &mut ConGraph, i: usize, j: usize) {
    for a in 1..=i {
        let mut p = vec![Loc::S];
        for b in 1..j {
            p.push(g.vertex(format!("p{a}.{b}")));
        }
        p.push(Loc::T);
        g.path(p);
    }
}
