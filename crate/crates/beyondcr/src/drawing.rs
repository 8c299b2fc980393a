//! Polyline drawings with exact coordinates and their crossing sets.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geom::{Point, Q};
use crate::graph::{EdgeId, Graph, VertexId};

/// A drawing: a position per vertex and a polyline per edge. Curves run from
/// the smaller to the larger endpoint id and include both endpoint positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Drawing {
    pub graph: Graph,
    pub positions: Vec<Point>,
    pub curves: Vec<Vec<Point>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    /// `a <= b`; equal for a self-crossing.
    pub a: EdgeId,
    pub b: EdgeId,
    pub point: Point,
    pub seg_a: usize,
    pub seg_b: usize,
    pub t_a: Q,
    pub t_b: Q,
    /// Sign of `dir_a x dir_b`, both directions taken along the curves.
    pub side: i8,
}

impl Crossing {
    pub fn is_self(&self) -> bool {
        self.a == self.b
    }

    /// The edge crossing `e` here, if `e` takes part.
    pub fn other(&self, e: EdgeId) -> Option<EdgeId> {
        if self.a == e {
            Some(self.b)
        } else if self.b == e {
            Some(self.a)
        } else {
            None
        }
    }

    /// Side as seen from `e`.
    pub fn side_from(&self, e: EdgeId) -> i8 {
        if self.a == e {
            self.side
        } else {
            -self.side
        }
    }

    /// Segment index and parameter on `e`.
    pub fn position_on(&self, e: EdgeId) -> (usize, &Q) {
        if self.a == e {
            (self.seg_a, &self.t_a)
        } else {
            (self.seg_b, &self.t_b)
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossingSet {
    pub crossings: Vec<Crossing>,
    /// Crossing ids along each edge, ordered by arc position. A self-crossing
    /// appears twice in its edge's list.
    pub per_edge: Vec<Vec<usize>>,
}

impl CrossingSet {
    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    /// Distinct edges crossing `e`, excluding `e` itself.
    pub fn crossers(&self, e: EdgeId) -> Vec<EdgeId> {
        let mut v: Vec<EdgeId> =
            self.per_edge[e].iter().filter_map(|&x| self.crossings[x].other(e)).filter(|&f| f != e).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Number of crossing points on `e` (a self-crossing counts once).
    pub fn count_on(&self, e: EdgeId) -> usize {
        let mut ids = self.per_edge[e].clone();
        ids.dedup();
        ids.len()
    }

    /// Endpoints of both edges of crossing `x`, sorted and deduplicated.
    pub fn vertex_set(&self, g: &Graph, x: usize) -> Vec<VertexId> {
        let c = &self.crossings[x];
        let (a, b) = g.edge(c.a);
        let (u, v) = g.edge(c.b);
        let mut s = vec![a, b, u, v];
        s.sort_unstable();
        s.dedup();
        s
    }
}

impl Drawing {
    /// Builds a drawing and validates curve endpoints.
    pub fn new(graph: Graph, positions: Vec<Point>, curves: Vec<Vec<Point>>) -> Result<Self> {
        if positions.len() != graph.n() {
            return Err(Error::Drawing(format!("{} positions for {} vertices", positions.len(), graph.n())));
        }
        if curves.len() != graph.m() {
            return Err(Error::Drawing(format!("{} curves for {} edges", curves.len(), graph.m())));
        }
        for (e, c) in curves.iter().enumerate() {
            let (u, v) = graph.edge(e);
            if c.len() < 2 || c[0] != positions[u] || c[c.len() - 1] != positions[v] {
                return Err(Error::Drawing(format!("curve of {} does not join its endpoints", graph.edge_key(e))));
            }
            if c.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Drawing(format!("curve of {} has a zero-length segment", graph.edge_key(e))));
            }
        }
        Ok(Drawing { graph, positions, curves })
    }

    /// Straight-line drawing from positions alone.
    pub fn straight(graph: Graph, positions: Vec<Point>) -> Result<Self> {
        let curves = graph.edges().iter().map(|&(u, v)| vec![positions[u].clone(), positions[v].clone()]).collect();
        Drawing::new(graph, positions, curves)
    }

    pub fn is_straight_line(&self) -> bool {
        self.curves.iter().all(|c| c.len() == 2)
    }

    pub fn segment_count(&self) -> usize {
        self.curves.iter().map(|c| c.len() - 1).sum()
    }

    /// Drawing of a subgraph given old-to-new maps as produced by
    /// [`Graph::induced`].
    pub fn subdrawing(&self, graph: Graph, vmap: &[Option<VertexId>], emap: &[Option<EdgeId>]) -> Drawing {
        let mut positions = vec![Point::int(0, 0); graph.n()];
        for (v, nv) in vmap.iter().enumerate() {
            if let Some(nv) = nv {
                positions[*nv] = self.positions[v].clone();
            }
        }
        let mut curves = vec![Vec::new(); graph.m()];
        for (e, ne) in emap.iter().enumerate() {
            if let Some(ne) = ne {
                curves[*ne] = self.curves[e].clone();
            }
        }
        Drawing { graph, positions, curves }
    }

    /// Applies `f` to every coordinate pair.
    pub fn map_points(&self, f: impl Fn(&Point) -> Point) -> Drawing {
        Drawing {
            graph: self.graph.clone(),
            positions: self.positions.iter().map(&f).collect(),
            curves: self.curves.iter().map(|c| c.iter().map(&f).collect()).collect(),
        }
    }

    /// Portion of the curve of `e` between two arc positions, inclusive.
    pub fn curve_between(&self, e: EdgeId, from: (usize, &Q), to: (usize, &Q)) -> Vec<Point> {
        let c = &self.curves[e];
        let at = |(s, t): (usize, &Q)| c[s].lerp(&c[s + 1], t);
        let forward = (from.0, from.1) <= (to.0, to.1);
        let (lo, hi) = if forward { (from, to) } else { (to, from) };
        let mut pts = vec![at(lo)];
        for i in lo.0 + 1..=hi.0 {
            pts.push(c[i].clone());
        }
        pts.push(at(hi));
        pts.dedup();
        if !forward {
            pts.reverse();
        }
        pts
    }

    /// Portion of the curve of `e` from an arc position to endpoint `v`.
    pub fn curve_to_vertex(&self, e: EdgeId, from: (usize, &Q), v: VertexId) -> Vec<Point> {
        let c = &self.curves[e];
        let (u, _) = self.graph.edge(e);
        let last = c.len() - 2;
        if v == u {
            self.curve_between(e, from, (0, &Q::zero()))
        } else {
            self.curve_between(e, from, (last, &Q::one()))
        }
    }
}

// ---------------------------------------------------------------------------
// crossing kernel

trait Num:
    Clone
    + Ord
    + Integer
    + Signed
    + Send
    + Sync
    + std::fmt::Debug
    + for<'a> std::ops::Mul<&'a Self, Output = Self>
    + for<'a> std::ops::Sub<&'a Self, Output = Self>
{
    fn to_big(&self) -> BigInt;
}

impl Num for i128 {
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Num for BigInt {
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

type P<T> = (T, T);

#[derive(Clone, Debug)]
struct Seg<T> {
    edge: EdgeId,
    idx: usize,
    last: bool,
    p: P<T>,
    q: P<T>,
}

enum Item<T> {
    Seg(Seg<T>),
    Vertex(VertexId, P<T>),
}

impl<T: Num> Item<T> {
    fn bbox(&self) -> (T, T, T, T) {
        match self {
            Item::Seg(s) => (
                s.p.0.clone().min(s.q.0.clone()),
                s.p.0.clone().max(s.q.0.clone()),
                s.p.1.clone().min(s.q.1.clone()),
                s.p.1.clone().max(s.q.1.clone()),
            ),
            Item::Vertex(_, p) => (p.0.clone(), p.0.clone(), p.1.clone(), p.1.clone()),
        }
    }
}

fn orient<T: Num>(a: &P<T>, b: &P<T>, c: &P<T>) -> T {
    (b.0.clone() - &a.0) * &(c.1.clone() - &a.1) - &((b.1.clone() - &a.1) * &(c.0.clone() - &a.0))
}

fn sgn<T: Num>(x: &T) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn within<T: Num>(a: &P<T>, b: &P<T>, p: &P<T>) -> bool {
    p.0 >= a.0.clone().min(b.0.clone())
        && p.0 <= a.0.clone().max(b.0.clone())
        && p.1 >= a.1.clone().min(b.1.clone())
        && p.1 <= a.1.clone().max(b.1.clone())
}

struct RawCrossing {
    a: EdgeId,
    b: EdgeId,
    seg_a: usize,
    seg_b: usize,
    /// t = num / den on each segment, den > 0
    ta: (BigInt, BigInt),
    tb: (BigInt, BigInt),
    side: i8,
}

fn gp_error(kind: &'static str, detail: String) -> Error {
    Error::GeneralPosition { kind, detail }
}

fn test_pair<T: Num>(g: &Graph, x: &Item<T>, y: &Item<T>) -> std::result::Result<Option<RawCrossing>, Error> {
    match (x, y) {
        (Item::Vertex(v, p), Item::Seg(s)) | (Item::Seg(s), Item::Vertex(v, p)) => {
            if sgn(&orient(&s.p, &s.q, p)) != 0 || !within(&s.p, &s.q, p) {
                return Ok(None);
            }
            let (eu, ev) = g.edge(s.edge);
            let ok = (s.idx == 0 && *v == eu && *p == s.p) || (s.last && *v == ev && *p == s.q);
            if ok {
                Ok(None)
            } else {
                Err(gp_error("curve through vertex", format!("{} passes through {}", g.edge_key(s.edge), g.label(*v))))
            }
        }
        (Item::Vertex(u, p), Item::Vertex(v, q)) => {
            if p == q {
                Err(gp_error("coincident vertices", format!("{} and {}", g.label(*u), g.label(*v))))
            } else {
                Ok(None)
            }
        }
        (Item::Seg(s), Item::Seg(t)) => test_segments(g, s, t),
    }
}

fn test_segments<T: Num>(g: &Graph, s: &Seg<T>, t: &Seg<T>) -> std::result::Result<Option<RawCrossing>, Error> {
    let o1 = orient(&s.p, &s.q, &t.p);
    let o2 = orient(&s.p, &s.q, &t.q);
    let o3 = orient(&t.p, &t.q, &s.p);
    let o4 = orient(&t.p, &t.q, &s.q);
    let (d1, d2, d3, d4) = (sgn(&o1), sgn(&o2), sgn(&o3), sgn(&o4));
    let describe = || format!("{}[{}] and {}[{}]", g.edge_key(s.edge), s.idx, g.edge_key(t.edge), t.idx);
    if d1 * d2 < 0 && d3 * d4 < 0 {
        // proper crossing; t on s = o3 / (o3 - o4), on t = o1 / (o1 - o2)
        let norm = |n: T, d: T| {
            let (n, d) = (n.to_big(), d.to_big());
            if d.is_negative() {
                (-n, -d)
            } else {
                (n, d)
            }
        };
        let ta = norm(o3.clone(), o3 - &o4);
        let tb = norm(o1.clone(), o1 - &o2);
        let ds = (s.q.0.clone() - &s.p.0, s.q.1.clone() - &s.p.1);
        let dt = (t.q.0.clone() - &t.p.0, t.q.1.clone() - &t.p.1);
        let side = sgn(&(ds.0 * &dt.1 - &(ds.1 * &dt.0)));
        return Ok(Some(RawCrossing { a: s.edge, b: t.edge, seg_a: s.idx, seg_b: t.idx, ta, tb, side }));
    }
    if d1 == 0 && d2 == 0 {
        // collinear: overlap in more than a point is never allowed
        let key = |p: &P<T>| (p.0.clone(), p.1.clone());
        let (s0, s1) = {
            let (a, b) = (key(&s.p), key(&s.q));
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        };
        let (t0, t1) = {
            let (a, b) = (key(&t.p), key(&t.q));
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        };
        let lo = s0.clone().max(t0.clone());
        let hi = s1.clone().min(t1.clone());
        match lo.cmp(&hi) {
            Ordering::Greater => return Ok(None),
            Ordering::Less => return Err(gp_error("overlap", describe())),
            Ordering::Equal => {}
        }
    }
    // collect touching points
    let mut touches: Vec<&P<T>> = Vec::new();
    if d1 == 0 && within(&s.p, &s.q, &t.p) {
        touches.push(&t.p);
    }
    if d2 == 0 && within(&s.p, &s.q, &t.q) {
        touches.push(&t.q);
    }
    if d3 == 0 && within(&t.p, &t.q, &s.p) {
        touches.push(&s.p);
    }
    if d4 == 0 && within(&t.p, &t.q, &s.q) {
        touches.push(&s.q);
    }
    for p in touches {
        let s_end = s.p == *p || s.q == *p;
        let t_end = t.p == *p || t.q == *p;
        if !(s_end && t_end) {
            return Err(gp_error("touching", describe()));
        }
        let allowed = if s.edge == t.edge {
            s.idx.abs_diff(t.idx) == 1 && {
                let (lo, hi) = if s.idx < t.idx { (s, t) } else { (t, s) };
                lo.q == *p && hi.p == *p
            }
        } else {
            match (vertex_end(g, s, p), vertex_end(g, t, p)) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            }
        };
        if !allowed {
            return Err(gp_error("touching", describe()));
        }
    }
    Ok(None)
}

/// The graph vertex at endpoint `p` of segment `s`, if `p` is a curve end.
fn vertex_end<T: Num>(g: &Graph, s: &Seg<T>, p: &P<T>) -> Option<VertexId> {
    let (u, v) = g.edge(s.edge);
    if s.idx == 0 && s.p == *p {
        Some(u)
    } else if s.last && s.q == *p {
        Some(v)
    } else {
        None
    }
}

/// Common denominator of all coordinates.
fn scale_factor(d: &Drawing) -> BigInt {
    let mut l = BigInt::one();
    let mut add = |x: &Q| {
        if !x.denom().is_one() {
            l = l.lcm(x.denom());
        }
    };
    for p in &d.positions {
        add(&p.x);
        add(&p.y);
    }
    for c in &d.curves {
        for p in c {
            add(&p.x);
            add(&p.y);
        }
    }
    l
}

fn scaled(x: &Q, l: &BigInt) -> BigInt {
    x.numer() * (l / x.denom())
}

fn build_items<T: Num>(d: &Drawing, l: &BigInt, conv: impl Fn(BigInt) -> T) -> Vec<Item<T>> {
    let pt = |p: &Point| (conv(scaled(&p.x, l)), conv(scaled(&p.y, l)));
    let mut items = Vec::with_capacity(d.segment_count() + d.graph.n());
    for (v, p) in d.positions.iter().enumerate() {
        items.push(Item::Vertex(v, pt(p)));
    }
    for (e, c) in d.curves.iter().enumerate() {
        let k = c.len() - 1;
        for i in 0..k {
            items.push(Item::Seg(Seg { edge: e, idx: i, last: i + 1 == k, p: pt(&c[i]), q: pt(&c[i + 1]) }));
        }
    }
    items
}

fn sweep<T: Num>(d: &Drawing, items: Vec<Item<T>>) -> Result<Vec<RawCrossing>> {
    let mut boxes: Vec<(T, T, T, T, usize)> = items
        .iter()
        .enumerate()
        .map(|(i, it)| {
            let (a, b, c, e) = it.bbox();
            (a, b, c, e, i)
        })
        .collect();
    boxes.sort_by(|x, y| x.0.cmp(&y.0).then(x.4.cmp(&y.4)));
    let g = &d.graph;
    let results: Vec<(usize, std::result::Result<Vec<RawCrossing>, Error>)> = (0..boxes.len())
        .into_par_iter()
        .map(|i| {
            let (_, maxx, miny, maxy, ii) = &boxes[i];
            let mut found = Vec::new();
            for other in &boxes[i + 1..] {
                if other.0 > *maxx {
                    break;
                }
                if other.3 < *miny || other.2 > *maxy {
                    continue;
                }
                match test_pair(g, &items[*ii], &items[other.4]) {
                    Ok(Some(c)) => found.push(c),
                    Ok(None) => {}
                    Err(e) => return (i, Err(e)),
                }
            }
            (i, Ok(found))
        })
        .collect();
    let mut out = Vec::new();
    for (_, r) in results {
        out.extend(r?);
    }
    Ok(out)
}

/// All interior crossings of the drawing, exactly.
pub fn compute_crossings(d: &Drawing) -> Result<CrossingSet> {
    let l = scale_factor(d);
    let bound = BigInt::from(1u64 << 60);
    let fits = d
        .positions
        .iter()
        .chain(d.curves.iter().flatten())
        .all(|p| scaled(&p.x, &l).abs() < bound && scaled(&p.y, &l).abs() < bound);
    let raw = if fits {
        sweep(d, build_items(d, &l, |b| b.to_i128().expect("bounded")))?
    } else {
        sweep(d, build_items(d, &l, |b| b))?
    };
    assemble(d, raw)
}

fn assemble(d: &Drawing, raw: Vec<RawCrossing>) -> Result<CrossingSet> {
    let mut crossings: Vec<Crossing> = raw
        .into_iter()
        .map(|r| {
            let ta = Q::new(r.ta.0, r.ta.1);
            let tb = Q::new(r.tb.0, r.tb.1);
            let ca = &d.curves[r.a];
            let point = ca[r.seg_a].lerp(&ca[r.seg_a + 1], &ta);
            let swap = (r.a, r.seg_a) > (r.b, r.seg_b);
            if swap {
                Crossing { a: r.b, b: r.a, point, seg_a: r.seg_b, seg_b: r.seg_a, t_a: tb, t_b: ta, side: -r.side }
            } else {
                Crossing { a: r.a, b: r.b, point, seg_a: r.seg_a, seg_b: r.seg_b, t_a: ta, t_b: tb, side: r.side }
            }
        })
        .collect();
    crossings.sort_by(|x, y| {
        (x.a, x.b, x.seg_a, &x.t_a, x.seg_b, &x.t_b).cmp(&(y.a, y.b, y.seg_a, &y.t_a, y.seg_b, &y.t_b))
    });
    let mut at: HashMap<&Point, usize> = HashMap::with_capacity(crossings.len());
    for (i, c) in crossings.iter().enumerate() {
        if let Some(j) = at.insert(&c.point, i) {
            let o = &crossings[j];
            return Err(gp_error(
                "coincident crossings",
                format!(
                    "{} x {} and {} x {} at {:?}",
                    d.graph.edge_key(o.a),
                    d.graph.edge_key(o.b),
                    d.graph.edge_key(c.a),
                    d.graph.edge_key(c.b),
                    c.point
                ),
            ));
        }
    }
    let mut per_edge: Vec<Vec<(usize, &Q, usize)>> = vec![Vec::new(); d.graph.m()];
    for (i, c) in crossings.iter().enumerate() {
        per_edge[c.a].push((c.seg_a, &c.t_a, i));
        per_edge[c.b].push((c.seg_b, &c.t_b, i));
    }
    let per_edge = per_edge
        .into_iter()
        .map(|mut v| {
            v.sort();
            v.into_iter().map(|(_, _, i)| i).collect()
        })
        .collect();
    Ok(CrossingSet { crossings, per_edge })
}

// ---------------------------------------------------------------------------
// simplicity

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SimplicityViolation {
    SelfCrossing { edge: EdgeId, crossing: usize },
    AdjacentCrossing { edges: [EdgeId; 2], vertex: VertexId, crossing: usize },
    MultipleCrossing { edges: [EdgeId; 2], crossings: Vec<usize> },
}

/// First violation of simplicity in crossing order, if any. Concurrent
/// crossings are rejected earlier by [`compute_crossings`].
pub fn simplicity_violation(g: &Graph, cs: &CrossingSet) -> Option<SimplicityViolation> {
    let mut pairs: BTreeMap<(EdgeId, EdgeId), Vec<usize>> = BTreeMap::new();
    for (i, c) in cs.crossings.iter().enumerate() {
        if c.is_self() {
            return Some(SimplicityViolation::SelfCrossing { edge: c.a, crossing: i });
        }
        let (a, b) = g.edge(c.a);
        let (u, v) = g.edge(c.b);
        if let Some(&w) = [a, b].iter().find(|&&w| w == u || w == v) {
            return Some(SimplicityViolation::AdjacentCrossing { edges: [c.a, c.b], vertex: w, crossing: i });
        }
        pairs.entry((c.a, c.b)).or_default().push(i);
    }
    pairs
        .into_iter()
        .find(|(_, v)| v.len() > 1)
        .map(|((a, b), v)| SimplicityViolation::MultipleCrossing { edges: [a, b], crossings: v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::q_frac;

    fn two_edges(a: [(i64, i64); 2], b: [(i64, i64); 2]) -> Drawing {
        let mut g = Graph::new();
        for l in ["a0", "a1", "b0", "b1"] {
            g.add_vertex(l).unwrap();
        }
        g.add_edge(0, 1).unwrap();
        g.add_edge(2, 3).unwrap();
        let pos = vec![
            Point::int(a[0].0, a[0].1),
            Point::int(a[1].0, a[1].1),
            Point::int(b[0].0, b[0].1),
            Point::int(b[1].0, b[1].1),
        ];
        Drawing::straight(g, pos).unwrap()
    }

    #[test]
    fn symmetric_x() {
        let d = two_edges([(0, 0), (2, 2)], [(0, 2), (2, 0)]);
        let cs = compute_crossings(&d).unwrap();
        assert_eq!(cs.len(), 1);
        let c = &cs.crossings[0];
        assert_eq!(c.point, Point::int(1, 1));
        assert_eq!(c.side_from(0), -c.side_from(1));
        assert_eq!(c.t_a, q_frac(1, 2));
        assert_eq!(cs.per_edge, vec![vec![0], vec![0]]);
    }

    #[test]
    fn k4_with_inner_vertex_is_planar() {
        let g = Graph::complete(4);
        let pos = vec![Point::int(0, 0), Point::int(6, 0), Point::int(3, 6), Point::int(3, 2)];
        let d = Drawing::straight(g, pos).unwrap();
        assert!(compute_crossings(&d).unwrap().is_empty());
    }

    #[test]
    fn general_position_errors() {
        // T-junction
        let d = two_edges([(0, 0), (4, 0)], [(2, 0), (2, 3)]);
        assert!(matches!(compute_crossings(&d), Err(Error::GeneralPosition { .. })));
        // overlap
        let d = two_edges([(0, 0), (4, 0)], [(2, 0), (6, 0)]);
        assert!(matches!(compute_crossings(&d), Err(Error::GeneralPosition { .. })));
        // curve through a vertex
        let mut g = Graph::new();
        for l in ["a", "b", "c"] {
            g.add_vertex(l).unwrap();
        }
        g.add_edge(0, 1).unwrap();
        let d = Drawing::straight(g, vec![Point::int(0, 0), Point::int(4, 0), Point::int(2, 0)]).unwrap();
        assert!(matches!(compute_crossings(&d), Err(Error::GeneralPosition { kind: "curve through vertex", .. })));
        // three concurrent edges
        let mut g = Graph::new();
        for i in 0..6 {
            g.add_vertex(i.to_string()).unwrap();
        }
        for i in 0..3 {
            g.add_edge(2 * i, 2 * i + 1).unwrap();
        }
        let pos = [(-2, 0), (2, 0), (0, -2), (0, 2), (-2, -2), (2, 2)].iter().map(|&(x, y)| Point::int(x, y)).collect();
        let d = Drawing::straight(g, pos).unwrap();
        assert!(matches!(compute_crossings(&d), Err(Error::GeneralPosition { kind: "coincident crossings", .. })));
    }

    #[test]
    fn double_crossing_is_not_simple() {
        let mut g = Graph::new();
        for l in ["a", "b", "c", "d"] {
            g.add_vertex(l).unwrap();
        }
        g.add_edge(0, 1).unwrap();
        g.add_edge(2, 3).unwrap();
        let pos = vec![Point::int(0, 0), Point::int(10, 0), Point::int(2, 5), Point::int(8, 5)];
        let curves = vec![
            vec![pos[0].clone(), pos[1].clone()],
            vec![pos[2].clone(), Point::int(3, -5), Point::int(7, -5), pos[3].clone()],
        ];
        let d = Drawing::new(g, pos, curves).unwrap();
        let cs = compute_crossings(&d).unwrap();
        assert_eq!(cs.len(), 2);
        assert!(!d.is_straight_line());
        match simplicity_violation(&d.graph, &cs) {
            Some(SimplicityViolation::MultipleCrossing { crossings, .. }) => assert_eq!(crossings, vec![0, 1]),
            other => panic!("unexpected {other:?}"),
        }
        // ordered along edge 0 by x
        assert!(cs.crossings[cs.per_edge[0][0]].point.x < cs.crossings[cs.per_edge[0][1]].point.x);
    }

    #[test]
    fn adjacent_crossing_and_self_crossing() {
        let mut g = Graph::new();
        for l in ["a", "b", "c"] {
            g.add_vertex(l).unwrap();
        }
        g.add_edge(0, 1).unwrap();
        g.add_edge(0, 2).unwrap();
        let pos = vec![Point::int(0, 0), Point::int(10, 0), Point::int(10, 2)];
        let curves = vec![
            vec![pos[0].clone(), pos[1].clone()],
            vec![pos[0].clone(), Point::int(4, -3), Point::int(6, 3), pos[2].clone()],
        ];
        let d = Drawing::new(g, pos, curves).unwrap();
        let cs = compute_crossings(&d).unwrap();
        assert_eq!(cs.len(), 1);
        assert!(matches!(
            simplicity_violation(&d.graph, &cs),
            Some(SimplicityViolation::AdjacentCrossing { vertex: 0, .. })
        ));

        let mut g = Graph::new();
        g.add_vertex("a").unwrap();
        g.add_vertex("b").unwrap();
        g.add_edge(0, 1).unwrap();
        let pos = vec![Point::int(0, 0), Point::int(10, 0)];
        let curve = [(0, 0), (6, 2), (4, 4), (4, -2), (10, 0)].iter().map(|&(x, y)| Point::int(x, y)).collect();
        let d = Drawing::new(g, pos, vec![curve]).unwrap();
        let cs = compute_crossings(&d).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs.per_edge[0].len(), 2);
        assert_eq!(cs.count_on(0), 1);
        assert!(matches!(simplicity_violation(&d.graph, &cs), Some(SimplicityViolation::SelfCrossing { .. })));
    }

    #[test]
    fn big_coordinates_take_the_bigint_path() {
        let big = 1i64 << 62;
        let d = two_edges([(-big, -big), (big, big)], [(-big, big), (big, -big)]);
        let cs = compute_crossings(&d).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs.crossings[0].point, Point::int(0, 0));
    }
}
