//! Framework graphs G_ℓ: a colored frame with every connection replaced by a
//! con-graph, plus the per-connection pole path families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::congraph::{ConGraphSpec, Loc};
use crate::error::{Error, Result};
use crate::frame::{self, build_frame, Color, Coloring, ConnectionId, Frame, NODE_LABELS};
use crate::graph::{EdgeId, Graph, VertexId};

/// Serialized by its short name (`kpl`, `ic`, ...).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "&'static str", try_from = "String")]
pub enum Concept {
    KPlanar,
    KVertexPlanar,
    Ic,
    Nic,
    Nnic,
    KFanCrossingFree,
    AdjacencyCrossing,
    FanCrossing,
    WeakFanPlanar,
    StrongFanPlanar,
    KEdgeCrossing,
    KGapPlanar,
    KApex,
    Skewness,
}

impl Concept {
    pub const ALL: [Concept; 14] = [
        Concept::KPlanar,
        Concept::KVertexPlanar,
        Concept::Ic,
        Concept::Nic,
        Concept::Nnic,
        Concept::KFanCrossingFree,
        Concept::AdjacencyCrossing,
        Concept::FanCrossing,
        Concept::WeakFanPlanar,
        Concept::StrongFanPlanar,
        Concept::KEdgeCrossing,
        Concept::KGapPlanar,
        Concept::KApex,
        Concept::Skewness,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            Concept::KPlanar => "kpl",
            Concept::KVertexPlanar => "kvp",
            Concept::Ic => "ic",
            Concept::Nic => "nic",
            Concept::Nnic => "nnic",
            Concept::KFanCrossingFree => "kfcf",
            Concept::AdjacencyCrossing => "ac",
            Concept::FanCrossing => "fc",
            Concept::WeakFanPlanar => "wfp",
            Concept::StrongFanPlanar => "sfp",
            Concept::KEdgeCrossing => "kecr",
            Concept::KGapPlanar => "kgap",
            Concept::KApex => "kapex",
            Concept::Skewness => "skew",
        }
    }

    /// Whether the concept takes the parameter `k`.
    pub fn has_k(self) -> bool {
        matches!(
            self,
            Concept::KPlanar
                | Concept::KVertexPlanar
                | Concept::KFanCrossingFree
                | Concept::KEdgeCrossing
                | Concept::KGapPlanar
                | Concept::KApex
                | Concept::Skewness
        )
    }

    pub fn min_k(self) -> usize {
        match self {
            Concept::KFanCrossingFree | Concept::KEdgeCrossing => 2,
            _ => 1,
        }
    }

    pub fn is_fan_variant(self) -> bool {
        matches!(
            self,
            Concept::AdjacencyCrossing | Concept::FanCrossing | Concept::WeakFanPlanar | Concept::StrongFanPlanar
        )
    }

    pub fn coloring(self) -> Coloring {
        match self {
            Concept::KGapPlanar | Concept::KApex | Concept::Skewness => Coloring::Alternate,
            _ => Coloring::Standard,
        }
    }

    /// Smallest ℓ for which the lower-bound argument applies.
    pub fn ell_threshold(self, k: usize) -> usize {
        match self {
            Concept::KPlanar => 41,
            Concept::KVertexPlanar => 11,
            Concept::Ic => 2,
            Concept::Nic => 4,
            Concept::Nnic | Concept::KFanCrossingFree => 109,
            Concept::KGapPlanar => 5,
            Concept::Skewness => k + 1,
            _ => 1,
        }
    }

    /// The `k` actually used by the construction (NNIC reuses the 2-fcf graph).
    pub fn effective_k(self, k: usize) -> usize {
        match self {
            Concept::Nnic => 2,
            c if c.has_k() => k,
            _ => 1,
        }
    }
}

impl fmt::Display for Concept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl From<Concept> for &'static str {
    fn from(c: Concept) -> Self {
        c.short_name()
    }
}

impl TryFrom<String> for Concept {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for Concept {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.to_ascii_lowercase().replace(['-', '_'], "");
        let c = match t.as_str() {
            "kpl" | "kplanar" => Concept::KPlanar,
            "kvp" | "kvertexplanar" => Concept::KVertexPlanar,
            "ic" => Concept::Ic,
            "nic" => Concept::Nic,
            "nnic" => Concept::Nnic,
            "kfcf" | "kfancrossingfree" | "fcf" => Concept::KFanCrossingFree,
            "ac" | "adjacencycrossing" => Concept::AdjacencyCrossing,
            "fc" | "fancrossing" => Concept::FanCrossing,
            "wfp" | "weakfanplanar" => Concept::WeakFanPlanar,
            "sfp" | "strongfanplanar" => Concept::StrongFanPlanar,
            "kecr" | "kedgecrossing" => Concept::KEdgeCrossing,
            "kgap" | "kgappl" | "kgapplanar" => Concept::KGapPlanar,
            "kapex" | "kapexplanar" => Concept::KApex,
            "skew" | "skewk" | "skewness" => Concept::Skewness,
            _ => return Err(Error::UnknownConcept(s.to_string())),
        };
        Ok(c)
    }
}

/// An instantiated framework graph.
#[derive(Clone, Debug)]
pub struct FrameworkGraph {
    pub graph: Graph,
    pub frame: Frame,
    pub specs: [ConGraphSpec; 9],
    pub concept: Option<Concept>,
    pub ell: usize,
    pub k: usize,
    pub below_threshold: bool,
    /// Connection of every edge.
    pub edge_conn: Vec<ConnectionId>,
    /// Index into `paths[edge_conn[e]]` of the pole path containing `e`.
    pub edge_path: Vec<Option<usize>>,
    /// Connection owning each non-frame vertex; `None` for the six frame nodes.
    pub vertex_conn: Vec<Option<ConnectionId>>,
    /// Pole path families P_c as vertex sequences from the `v` node to the `w` node.
    pub paths: Vec<Vec<Vec<VertexId>>>,
}

/// Recipe per color.
pub type Recipe = Vec<(Color, ConGraphSpec)>;

pub fn build_framework_graph(frame: &Frame, recipe: &[(Color, ConGraphSpec)]) -> Result<FrameworkGraph> {
    let mut specs = [ConGraphSpec::SingleEdge; 9];
    for (c, spec) in specs.iter_mut().enumerate() {
        let col = frame.color(c);
        *spec = recipe
            .iter()
            .find(|(rc, _)| *rc == col)
            .map(|(_, s)| *s)
            .ok_or_else(|| Error::InvalidParameters(format!("recipe has no entry for {}", col.name())))?;
    }
    build_with_specs(frame, specs)
}

pub fn build_with_specs(frame: &Frame, specs: [ConGraphSpec; 9]) -> Result<FrameworkGraph> {
    let mut graph = Graph::new();
    for l in NODE_LABELS {
        graph.add_vertex(l)?;
    }
    let mut vertex_conn = vec![None; 6];
    let mut edge_conn = Vec::new();
    let mut edge_path = Vec::new();
    let mut paths = Vec::with_capacity(9);
    for (c, spec) in specs.iter().enumerate() {
        let cg = spec.instantiate()?;
        let (s, t) = frame::endpoints(c);
        let cl = frame::connection_label(c);
        let base = graph.n();
        for l in &cg.internal {
            graph.add_vertex(format!("{cl}:{l}"))?;
            vertex_conn.push(Some(c));
        }
        let map = |x: Loc| match x {
            Loc::S => s,
            Loc::T => t,
            Loc::I(i) => base + i,
        };
        let first_edge = graph.m();
        for &(a, b) in &cg.edges {
            graph.add_edge(map(a), map(b))?;
            edge_conn.push(c);
            edge_path.push(None);
        }
        let mut fam = Vec::with_capacity(cg.paths.len());
        for (pi, p) in cg.paths.iter().enumerate() {
            let vs: Vec<VertexId> = p.iter().map(|&x| map(x)).collect();
            for w in vs.windows(2) {
                let e = graph.edge_between(w[0], w[1]).expect("path edges exist");
                debug_assert!(e >= first_edge);
                if edge_path[e].is_some() {
                    return Err(Error::Graph(format!("pole paths of {cl} share an edge")));
                }
                edge_path[e] = Some(pi);
            }
            fam.push(vs);
        }
        paths.push(fam);
    }
    Ok(FrameworkGraph {
        graph,
        frame: frame.clone(),
        specs,
        concept: None,
        ell: 0,
        k: 0,
        below_threshold: false,
        edge_conn,
        edge_path,
        vertex_conn,
        paths,
    })
}

/// The color recipe of the construction for `concept`.
pub fn recipe_for(concept: Concept, ell: usize, k: usize) -> Recipe {
    use ConGraphSpec::*;
    let k = concept.effective_k(k);
    match concept {
        Concept::KPlanar => vec![
            (Color::Yellow, SingleEdge),
            (Color::Red, Bundle(k + 1, 2)),
            (Color::Blue, Bundle(ell * k, ell)),
            (Color::Gray, Bundle(ell * k, 2)),
        ],
        Concept::KVertexPlanar => vec![
            (Color::Yellow, SingleEdge),
            (Color::Red, Bundle(k + 1, 2)),
            (Color::Blue, Bundle(ell * k, 2 * ell + 1)),
            (Color::Gray, Bundle(ell * k, 2)),
        ],
        Concept::Ic => vec![
            (Color::Yellow, SingleEdge),
            (Color::Red, BundlePlus(1, 2)),
            (Color::Blue, Bundle(ell, 2 * ell + 1)),
            (Color::Gray, BundlePlus(1, 2)),
        ],
        Concept::Nic => vec![
            (Color::Yellow, SingleEdge),
            (Color::Red, BundlePlus(1, 2)),
            (Color::Blue, Bundle(ell, ell + 2)),
            (Color::Gray, Bundle(ell, 2)),
        ],
        Concept::Nnic | Concept::KFanCrossingFree => vec![
            (Color::Yellow, SingleEdge),
            (Color::Red, Bundle(2 * k, 2)),
            (Color::Blue, Bundle(ell * k, 3)),
            (Color::Gray, Bundle(ell * k, 2)),
        ],
        Concept::AdjacencyCrossing | Concept::FanCrossing | Concept::WeakFanPlanar | Concept::StrongFanPlanar => {
            vec![(Color::Yellow, SingleEdge), (Color::Red, K7), (Color::Blue, Bundle(ell, 2)), (Color::Gray, K7)]
        }
        Concept::KEdgeCrossing => vec![
            (Color::Yellow, SingleEdge),
            (Color::Red, Bundle(k, 2)),
            (Color::Blue, Bundle(k / 2, 2)),
            (Color::Gray, Bundle(ell * k, 2)),
        ],
        Concept::KGapPlanar => {
            vec![(Color::Red, Bundle(5 * k, 2)), (Color::Blue, Bundle(5 * k, 2)), (Color::Gray, Bundle(ell * k, 5))]
        }
        Concept::KApex => {
            vec![(Color::Red, SingleEdge), (Color::Blue, ApexBlue { ell, k }), (Color::Gray, Bundle(ell * k, 2))]
        }
        Concept::Skewness => {
            vec![(Color::Red, SingleEdge), (Color::Blue, SkewBlue { ell, k }), (Color::Gray, Bundle(ell * k, 2))]
        }
    }
}

/// Validates `(ℓ, k)` for `concept`. Skewness below ℓ > k is rejected since the
/// witness drawing needs more gray paths than skewness edges.
pub fn check_params(concept: Concept, ell: usize, k: usize) -> Result<()> {
    if ell == 0 {
        return Err(Error::InvalidParameters("ell must be >= 1".into()));
    }
    if concept.has_k() && k < concept.min_k() {
        return Err(Error::InvalidParameters(format!("{concept} requires k >= {}, got {k}", concept.min_k())));
    }
    if concept == Concept::Skewness && ell <= k {
        return Err(Error::InvalidParameters(format!("skewness requires ell > k, got ell={ell}, k={k}")));
    }
    Ok(())
}

pub fn construction_for(concept: Concept, ell: usize, k: usize) -> Result<FrameworkGraph> {
    check_params(concept, ell, k)?;
    let frame = build_frame(concept.coloring());
    let mut fg = build_framework_graph(&frame, &recipe_for(concept, ell, k))?;
    fg.concept = Some(concept);
    fg.ell = ell;
    fg.k = concept.effective_k(k);
    fg.below_threshold = ell < concept.ell_threshold(k);
    Ok(fg)
}

/// Closed-form vertex count of `construction_for(concept, ℓ, k)`.
pub fn vertex_count(concept: Concept, ell: u128, k: u128) -> u128 {
    let k = concept.effective_k(k as usize) as u128;
    let bundle = |i: u128, j: u128| i * (j - 1);
    let (y, r, b, g, nb, ng) = match concept {
        Concept::KPlanar => (0, bundle(k + 1, 2), bundle(ell * k, ell), bundle(ell * k, 2), 2, 5),
        Concept::KVertexPlanar => (0, bundle(k + 1, 2), bundle(ell * k, 2 * ell + 1), bundle(ell * k, 2), 2, 5),
        Concept::Ic => (0, 1, bundle(ell, 2 * ell + 1), 1, 2, 5),
        Concept::Nic => (0, 1, bundle(ell, ell + 2), bundle(ell, 2), 2, 5),
        Concept::Nnic | Concept::KFanCrossingFree => {
            (0, bundle(2 * k, 2), bundle(ell * k, 3), bundle(ell * k, 2), 2, 5)
        }
        Concept::AdjacencyCrossing | Concept::FanCrossing | Concept::WeakFanPlanar | Concept::StrongFanPlanar => {
            (0, 5, bundle(ell, 2), 5, 2, 5)
        }
        Concept::KEdgeCrossing => (0, bundle(k, 2), bundle(k / 2, 2), bundle(ell * k, 2), 2, 5),
        Concept::KGapPlanar => return 6 + 2 * bundle(5 * k, 2) + bundle(5 * k, 2) + 6 * bundle(ell * k, 5),
        Concept::KApex => return 6 + k * (1 + 2 * ell + 4) + 6 * bundle(ell * k, 2),
        Concept::Skewness => return 6 + 4 * k + 6 * bundle(ell * k, 2),
    };
    6 + y + r + nb * b + ng * g
}

/// Closed-form edge count of `construction_for(concept, ℓ, k)`.
pub fn edge_count(concept: Concept, ell: u128, k: u128) -> u128 {
    let k = concept.effective_k(k as usize) as u128;
    let spec_edges = |s: ConGraphSpec| -> u128 {
        match s {
            ConGraphSpec::Bundle(i, j) => (i * j) as u128,
            ConGraphSpec::BundlePlus(i, j) => (i * j) as u128 + 1,
            ConGraphSpec::SingleEdge => 1,
            ConGraphSpec::K7 => 21,
            ConGraphSpec::ApexBlue { .. } => k * (4 * ell + 10),
            ConGraphSpec::SkewBlue { .. } => 10 * k,
        }
    };
    let frame = build_frame(concept.coloring());
    // recipes with huge ℓ are only inspected, never instantiated
    let recipe = recipe_for(concept, ell as usize, k as usize);
    frame
        .colors()
        .iter()
        .map(|c| spec_edges(recipe.iter().find(|(rc, _)| rc == c).expect("recipe covers frame").1))
        .sum()
}

impl FrameworkGraph {
    pub fn width(&self, c: ConnectionId) -> usize {
        self.paths[c].len()
    }

    pub fn height(&self, c: ConnectionId) -> usize {
        self.paths[c].iter().map(|p| p.len() - 1).max().unwrap_or(0)
    }

    pub fn widths(&self) -> [usize; 9] {
        std::array::from_fn(|c| self.width(c))
    }

    /// |𝒦| = ∏ widths, or `None` on overflow.
    pub fn kuratowski_count(&self) -> Option<u128> {
        self.widths().iter().try_fold(1u128, |acc, &w| acc.checked_mul(w as u128))
    }

    pub fn edges_of(&self, c: ConnectionId) -> Vec<EdgeId> {
        (0..self.graph.m()).filter(|&e| self.edge_conn[e] == c).collect()
    }

    pub fn vertices_of(&self, c: ConnectionId) -> Vec<VertexId> {
        (0..self.graph.n()).filter(|&v| self.vertex_conn[v] == Some(c)).collect()
    }

    pub fn color(&self, c: ConnectionId) -> Color {
        self.frame.color(c)
    }

    /// Vertex of connection `c` with local label `local` (e.g. `p1.2`).
    pub fn local(&self, c: ConnectionId, local: &str) -> Option<VertexId> {
        self.graph.vertex(&format!("{}:{local}", frame::connection_label(c)))
    }

    /// Keeps only the pole path `r` of connection `c`. Returns the restricted
    /// framework graph and the old-to-new vertex and edge maps.
    pub fn restrict(
        &self,
        c: ConnectionId,
        r: usize,
    ) -> Result<(FrameworkGraph, Vec<Option<VertexId>>, Vec<Option<EdgeId>>)> {
        if r >= self.width(c) {
            return Err(Error::NotAPolePath(r));
        }
        let keep_path = &self.paths[c][r];
        let mut keep_vertex = vec![true; self.graph.n()];
        for v in self.vertices_of(c) {
            keep_vertex[v] = false;
        }
        for &v in keep_path {
            keep_vertex[v] = true;
        }
        let keep_edge: Vec<bool> =
            (0..self.graph.m()).map(|e| self.edge_conn[e] != c || self.edge_path[e] == Some(r)).collect();
        let (graph, vmap, emap) = self.graph.induced(&keep_vertex, &keep_edge);
        let mut edge_conn = vec![0; graph.m()];
        let mut edge_path = vec![None; graph.m()];
        for (e, ne) in emap.iter().enumerate() {
            if let Some(ne) = *ne {
                edge_conn[ne] = self.edge_conn[e];
                edge_path[ne] = if self.edge_conn[e] == c { Some(0) } else { self.edge_path[e] };
            }
        }
        let mut vertex_conn = vec![None; graph.n()];
        for (v, nv) in vmap.iter().enumerate() {
            if let Some(nv) = *nv {
                vertex_conn[nv] = self.vertex_conn[v];
            }
        }
        let paths = (0..9)
            .map(|d| {
                let fam: Vec<&Vec<VertexId>> = if d == c { vec![keep_path] } else { self.paths[d].iter().collect() };
                fam.into_iter().map(|p| p.iter().map(|&v| vmap[v].expect("path vertices kept")).collect()).collect()
            })
            .collect();
        let fg = FrameworkGraph {
            graph,
            frame: self.frame.clone(),
            specs: self.specs,
            concept: self.concept,
            ell: self.ell,
            k: self.k,
            below_threshold: self.below_threshold,
            edge_conn,
            edge_path,
            vertex_conn,
            paths,
        };
        Ok((fg, vmap, emap))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_tuples(widths: &[usize; 9]) -> u128 {
        // explicit enumeration of index tuples
        let mut count = 0u128;
        let mut idx = [0usize; 9];
        loop {
            count += 1;
            let mut c = 0;
            loop {
                if c == 9 {
                    return count;
                }
                idx[c] += 1;
                if idx[c] < widths[c] {
                    break;
                }
                idx[c] = 0;
                c += 1;
            }
        }
    }

    #[test]
    fn ic_vertex_count() {
        for ell in 2..6 {
            let fg = construction_for(Concept::Ic, ell, 1).unwrap();
            assert_eq!(fg.graph.n(), 4 * ell * ell + 12);
        }
    }

    #[test]
    fn all_single_edges_is_k33() {
        let frame = build_frame(Coloring::Standard);
        let fg = build_with_specs(&frame, [ConGraphSpec::SingleEdge; 9]).unwrap();
        assert_eq!((fg.graph.n(), fg.graph.m()), (6, 9));
        assert_eq!(fg.kuratowski_count(), Some(1));
    }

    #[test]
    fn kplanar_widths_match_enumeration() {
        let fg = construction_for(Concept::KPlanar, 3, 2).unwrap();
        let w = fg.widths();
        let mut sorted = w;
        sorted.sort();
        assert_eq!(sorted, [1, 3, 6, 6, 6, 6, 6, 6, 6]);
        assert_eq!(fg.kuratowski_count(), Some(3 * 6u128.pow(7)));
        // spot enumeration on a smaller instance
        let small = construction_for(Concept::KPlanar, 1, 1).unwrap();
        assert_eq!(Some(all_tuples(&small.widths())), small.kuratowski_count());
        assert!(fg.below_threshold);
    }

    #[test]
    fn bundle_paths_cover_edges() {
        let fg = construction_for(Concept::KVertexPlanar, 3, 2).unwrap();
        for c in 0..9 {
            let total: usize = fg.paths[c].iter().map(|p| p.len() - 1).sum();
            assert_eq!(total, fg.edges_of(c).len());
            assert!(fg.edges_of(c).iter().all(|&e| fg.edge_path[e].is_some()));
        }
    }

    #[test]
    fn closed_form_vertex_counts() {
        for concept in Concept::ALL {
            for (ell, k) in [(3usize, 2usize), (4, 3), (5, 2)] {
                let Ok(fg) = construction_for(concept, ell, k) else { continue };
                assert_eq!(fg.graph.n() as u128, vertex_count(concept, ell as u128, k as u128), "{concept}");
            }
        }
    }

    #[test]
    fn closed_form_edge_counts() {
        for concept in Concept::ALL {
            for (ell, k) in [(3usize, 2usize), (4, 3), (5, 2)] {
                let Ok(fg) = construction_for(concept, ell, k) else { continue };
                assert_eq!(fg.graph.m() as u128, edge_count(concept, ell as u128, k as u128), "{concept}");
            }
        }
    }

    #[test]
    fn skewness_requires_ell_above_k() {
        assert!(construction_for(Concept::Skewness, 2, 2).is_err());
        assert!(construction_for(Concept::Skewness, 3, 2).is_ok());
        assert!(construction_for(Concept::KEdgeCrossing, 3, 1).is_err());
    }

    #[test]
    fn apex_blue_has_k_disjoint_k5() {
        let fg = construction_for(Concept::KApex, 2, 3).unwrap();
        let blue = fg.frame.with_color(Color::Blue)[0];
        let mut found = Vec::new();
        for v in 1..=3 {
            let vs: Vec<VertexId> = std::iter::once(format!("a{v}"))
                .chain((1..=4).map(|i| format!("q{v}.{i}")))
                .map(|l| fg.local(blue, &l).unwrap())
                .collect();
            for i in 0..5 {
                for j in i + 1..5 {
                    assert!(fg.graph.edge_between(vs[i], vs[j]).is_some());
                }
            }
            found.extend(vs);
        }
        let set: std::collections::HashSet<_> = found.iter().collect();
        assert_eq!(set.len(), 15);
    }

    #[test]
    fn restriction_divides_count() {
        let fg = construction_for(Concept::KPlanar, 2, 2).unwrap();
        let red = fg.frame.with_color(Color::Red)[0];
        let (r, _, _) = fg.restrict(red, 1).unwrap();
        assert_eq!(r.kuratowski_count().unwrap() * fg.width(red) as u128, fg.kuratowski_count().unwrap());
        assert_eq!(r.graph.n(), fg.graph.n() - 2);
        assert!(fg.restrict(red, 9).is_err());
        let yellow = fg.frame.with_color(Color::Yellow)[0];
        let (same, _, _) = fg.restrict(yellow, 0).unwrap();
        assert_eq!(same.graph, fg.graph);
    }
}
