//! One predicate per concept. Every check returns a [`Verdict`] whose witness
//! is present exactly when the predicate fails.

mod cover;
mod fan;
mod gap;

use std::collections::HashMap;

use serde::Serialize;

use crate::drawing::{simplicity_violation, CrossingSet, Drawing, SimplicityViolation};
use crate::framework::Concept;
use crate::graph::{EdgeId, VertexId};

pub use cover::{check_k_apex, check_skewness, min_apex_brute, min_skew_brute};
pub use fan::{check_adjacency_crossing, check_fan_crossing, check_strong_fan_planar, check_weak_fan_planar};
pub use gap::{check_k_gap_planar, gap_feasible_brute};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    NotSimple {
        violation: SimplicityViolation,
    },
    OverCrossedEdge {
        edge: EdgeId,
        crossings: usize,
    },
    OverloadedVertex {
        vertex: VertexId,
        crossings: Vec<usize>,
    },
    SharedVertices {
        crossings: [usize; 2],
        shared: Vec<VertexId>,
    },
    Fan {
        edge: EdgeId,
        anchor: VertexId,
        fan: Vec<EdgeId>,
    },
    IndependentCrossers {
        edge: EdgeId,
        crossers: [EdgeId; 2],
    },
    NoCommonVertex {
        edge: EdgeId,
        crossers: [EdgeId; 3],
    },
    OppositeSides {
        edge: EdgeId,
        anchor: VertexId,
        crossings: [usize; 2],
    },
    Enclosure {
        edge: EdgeId,
        anchor: VertexId,
        crossings: [usize; 2],
        endpoint: VertexId,
    },
    TooManyCrossedEdges {
        edges: Vec<EdgeId>,
    },
    /// Edge set with more internal crossings than its total capacity.
    Deficient {
        edges: Vec<EdgeId>,
        internal_crossings: usize,
    },
    /// Crossings already forcing more than `k` apex vertices or skewness edges.
    Core {
        crossings: Vec<usize>,
    },
}

/// Positive evidence attached to some holding verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Certificate {
    /// Edge charged with each crossing, by crossing id.
    GapAssignment(Vec<EdgeId>),
    ApexSet(Vec<VertexId>),
    SkewEdges(Vec<EdgeId>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub concept: Concept,
    pub k: Option<usize>,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub certificate: Option<Certificate>,
}

impl Verdict {
    fn new(concept: Concept, k: Option<usize>, witness: Option<Witness>) -> Self {
        Verdict { concept, k, holds: witness.is_none(), witness, certificate: None }
    }

    fn with_certificate(mut self, c: Certificate) -> Self {
        if self.holds {
            self.certificate = Some(c);
        }
        self
    }
}

/// Dispatches to the checker of `concept`; `k` is ignored by concepts without
/// a parameter.
pub fn check(concept: Concept, k: usize, d: &Drawing, cs: &CrossingSet) -> Verdict {
    match concept {
        Concept::KPlanar => check_k_planar(d, cs, k),
        Concept::KVertexPlanar => check_k_vertex_planar(d, cs, k),
        Concept::Ic => check_ic(d, cs),
        Concept::Nic => check_nic(d, cs),
        Concept::Nnic => check_nnic(d, cs),
        Concept::KFanCrossingFree => check_k_fan_crossing_free(d, cs, k),
        Concept::AdjacencyCrossing => check_adjacency_crossing(d, cs),
        Concept::FanCrossing => check_fan_crossing(d, cs),
        Concept::WeakFanPlanar => check_weak_fan_planar(d, cs),
        Concept::StrongFanPlanar => check_strong_fan_planar(d, cs),
        Concept::KEdgeCrossing => check_k_edge_crossing(d, cs, k),
        Concept::KGapPlanar => check_k_gap_planar(d, cs, k),
        Concept::KApex => check_k_apex(d, cs, k),
        Concept::Skewness => check_skewness(d, cs, k),
    }
}

pub fn check_k_planar(d: &Drawing, cs: &CrossingSet, k: usize) -> Verdict {
    let w = (0..d.graph.m())
        .map(|e| (e, cs.count_on(e)))
        .find(|&(_, c)| c > k)
        .map(|(edge, crossings)| Witness::OverCrossedEdge { edge, crossings });
    Verdict::new(Concept::KPlanar, Some(k), w)
}

fn vertex_loads(d: &Drawing, cs: &CrossingSet) -> Vec<Vec<usize>> {
    let mut load = vec![Vec::new(); d.graph.n()];
    for x in 0..cs.len() {
        for v in cs.vertex_set(&d.graph, x) {
            load[v].push(x);
        }
    }
    load
}

pub fn check_k_vertex_planar(d: &Drawing, cs: &CrossingSet, k: usize) -> Verdict {
    let w = vertex_loads(d, cs)
        .into_iter()
        .enumerate()
        .find(|(_, l)| l.len() > k)
        .map(|(vertex, l)| Witness::OverloadedVertex { vertex, crossings: l[..=k].to_vec() });
    Verdict::new(Concept::KVertexPlanar, Some(k), w)
}

/// First pair of crossings sharing at least `t` vertices, found by hashing
/// every `t`-subset of each crossing's vertex set.
fn shared_pair(d: &Drawing, cs: &CrossingSet, t: usize) -> Option<Witness> {
    let mut seen: HashMap<Vec<VertexId>, usize> = HashMap::new();
    for x in 0..cs.len() {
        let vs = cs.vertex_set(&d.graph, x);
        for sub in subsets(&vs, t) {
            if let Some(&y) = seen.get(&sub) {
                let other = cs.vertex_set(&d.graph, y);
                let shared = vs.iter().copied().filter(|v| other.contains(v)).collect();
                return Some(Witness::SharedVertices { crossings: [y, x], shared });
            }
            seen.insert(sub, x);
        }
    }
    None
}

fn subsets(vs: &[VertexId], t: usize) -> Vec<Vec<VertexId>> {
    if t == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..vs.len() {
        for mut rest in subsets(&vs[i + 1..], t - 1) {
            rest.insert(0, vs[i]);
            out.push(rest);
        }
    }
    out
}

pub fn check_ic(d: &Drawing, cs: &CrossingSet) -> Verdict {
    Verdict::new(Concept::Ic, None, shared_pair(d, cs, 1))
}

pub fn check_nic(d: &Drawing, cs: &CrossingSet) -> Verdict {
    Verdict::new(Concept::Nic, None, shared_pair(d, cs, 2))
}

/// Pairwise condition of NNIC without the simplicity requirement.
pub fn nnic_pairwise(d: &Drawing, cs: &CrossingSet) -> Option<Witness> {
    shared_pair(d, cs, 3)
}

pub fn check_nnic(d: &Drawing, cs: &CrossingSet) -> Verdict {
    let w = simplicity_violation(&d.graph, cs)
        .map(|violation| Witness::NotSimple { violation })
        .or_else(|| nnic_pairwise(d, cs));
    Verdict::new(Concept::Nnic, None, w)
}

pub fn check_k_fan_crossing_free(d: &Drawing, cs: &CrossingSet, k: usize) -> Verdict {
    let concept = Concept::KFanCrossingFree;
    if let Some(s) = simplicity_violation(&d.graph, cs) {
        return Verdict::new(concept, Some(k), Some(Witness::NotSimple { violation: s }));
    }
    let g = &d.graph;
    for e in 0..g.m() {
        let (a, b) = g.edge(e);
        let mut by_vertex: HashMap<VertexId, Vec<EdgeId>> = HashMap::new();
        for f in cs.crossers(e) {
            let (u, v) = g.edge(f);
            for z in [u, v] {
                if z != a && z != b {
                    let fan = by_vertex.entry(z).or_default();
                    fan.push(f);
                    if fan.len() >= k {
                        let w = Witness::Fan { edge: e, anchor: z, fan: fan.clone() };
                        return Verdict::new(concept, Some(k), Some(w));
                    }
                }
            }
        }
    }
    Verdict::new(concept, Some(k), None)
}

pub fn check_k_edge_crossing(d: &Drawing, cs: &CrossingSet, k: usize) -> Verdict {
    let crossed: Vec<EdgeId> = (0..d.graph.m()).filter(|&e| !cs.per_edge[e].is_empty()).collect();
    let w = (crossed.len() > k).then(|| Witness::TooManyCrossedEdges { edges: crossed[..=k].to_vec() });
    Verdict::new(Concept::KEdgeCrossing, Some(k), w)
}

/// Re-checks that a witness is a genuine violation of `concept` on this
/// drawing, independently of the search that produced it.
pub fn witness_is_violation(concept: Concept, k: usize, d: &Drawing, cs: &CrossingSet, w: &Witness) -> bool {
    let g = &d.graph;
    let endpoints = |e: EdgeId| {
        let (u, v) = g.edge(e);
        [u, v]
    };
    match w {
        Witness::NotSimple { violation: s } => {
            matches!(concept, Concept::Nnic | Concept::KFanCrossingFree)
                && match s {
                    SimplicityViolation::SelfCrossing { edge, crossing } => {
                        let c = &cs.crossings[*crossing];
                        c.a == *edge && c.b == *edge
                    }
                    SimplicityViolation::AdjacentCrossing { edges, vertex, crossing } => {
                        let c = &cs.crossings[*crossing];
                        c.a == edges[0]
                            && c.b == edges[1]
                            && endpoints(edges[0]).contains(vertex)
                            && endpoints(edges[1]).contains(vertex)
                    }
                    SimplicityViolation::MultipleCrossing { edges, crossings } => {
                        crossings.len() > 1
                            && crossings.iter().all(|&x| cs.crossings[x].a == edges[0] && cs.crossings[x].b == edges[1])
                    }
                }
        }
        Witness::OverCrossedEdge { edge, .. } => cs.count_on(*edge) > k,
        Witness::OverloadedVertex { vertex, crossings } => {
            let mut xs = crossings.clone();
            xs.sort_unstable();
            xs.dedup();
            xs.len() > k && xs.iter().all(|&x| cs.vertex_set(g, x).contains(vertex))
        }
        Witness::SharedVertices { crossings, shared } => {
            let t = match concept {
                Concept::Ic => 1,
                Concept::Nic => 2,
                Concept::Nnic => 3,
                _ => return false,
            };
            let a = cs.vertex_set(g, crossings[0]);
            let b = cs.vertex_set(g, crossings[1]);
            crossings[0] != crossings[1] && shared.len() >= t && shared.iter().all(|v| a.contains(v) && b.contains(v))
        }
        Witness::Fan { edge, anchor, fan } => {
            let crossers = cs.crossers(*edge);
            let mut f = fan.clone();
            f.sort_unstable();
            f.dedup();
            f.len() >= k
                && !endpoints(*edge).contains(anchor)
                && f.iter().all(|x| crossers.contains(x) && endpoints(*x).contains(anchor))
        }
        Witness::IndependentCrossers { edge, crossers } => {
            let cr = cs.crossers(*edge);
            cr.contains(&crossers[0]) && cr.contains(&crossers[1]) && !g.adjacent(crossers[0], crossers[1])
        }
        Witness::NoCommonVertex { edge, crossers } => {
            let cr = cs.crossers(*edge);
            crossers.iter().all(|f| cr.contains(f))
                && !endpoints(crossers[0])
                    .iter()
                    .any(|v| endpoints(crossers[1]).contains(v) && endpoints(crossers[2]).contains(v))
        }
        Witness::OppositeSides { edge, anchor, crossings } => {
            fan::opposite_sides_hold(d, cs, *edge, *anchor, crossings)
        }
        Witness::Enclosure { edge, anchor, crossings, endpoint } => {
            fan::enclosure_holds(d, cs, *edge, *anchor, crossings, *endpoint)
        }
        Witness::TooManyCrossedEdges { edges } => {
            let mut e = edges.clone();
            e.sort_unstable();
            e.dedup();
            e.len() > k && e.iter().all(|&x| !cs.per_edge[x].is_empty())
        }
        Witness::Deficient { edges, internal_crossings } => {
            let internal = cs
                .crossings
                .iter()
                .filter(|c| edges.binary_search(&c.a).is_ok() && edges.binary_search(&c.b).is_ok())
                .count();
            internal == *internal_crossings && internal > k * edges.len()
        }
        Witness::Core { crossings } => match concept {
            Concept::KApex => cover::min_apex_brute(d, cs, crossings, k).is_none(),
            Concept::Skewness => cover::min_skew_brute(cs, crossings, k).is_none(),
            _ => false,
        },
    }
}
