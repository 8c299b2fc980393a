use crate::drawing::{CrossingSet, Drawing};
use crate::framework::Concept;
use crate::geom::point_in_polygon;
use crate::graph::{EdgeId, VertexId};

use super::{Verdict, Witness};

fn ends(d: &Drawing, e: EdgeId) -> [VertexId; 2] {
    let (u, v) = d.graph.edge(e);
    [u, v]
}

fn independent_pair(d: &Drawing, cs: &CrossingSet) -> Option<Witness> {
    for e in 0..d.graph.m() {
        let f = cs.crossers(e);
        for i in 0..f.len() {
            for j in i + 1..f.len() {
                if !d.graph.adjacent(f[i], f[j]) {
                    return Some(Witness::IndependentCrossers { edge: e, crossers: [f[i], f[j]] });
                }
            }
        }
    }
    None
}

/// Vertices shared by every crosser of `e`.
fn anchors(d: &Drawing, cs: &CrossingSet, e: EdgeId) -> Vec<VertexId> {
    let f = cs.crossers(e);
    let Some(first) = f.first() else { return Vec::new() };
    ends(d, *first).into_iter().filter(|v| f.iter().all(|&x| ends(d, x).contains(v))).collect()
}

/// Either an independent pair or a triangle of crossers without a common vertex.
fn fan_violation(d: &Drawing, cs: &CrossingSet) -> Option<Witness> {
    if let Some(w) = independent_pair(d, cs) {
        return Some(w);
    }
    for e in 0..d.graph.m() {
        let f = cs.crossers(e);
        if f.len() < 3 || !anchors(d, cs, e).is_empty() {
            continue;
        }
        // pairwise adjacent without a common vertex: a triangle
        let w = ends(d, f[0]).into_iter().find(|v| ends(d, f[1]).contains(v)).expect("adjacent");
        let third = f.iter().copied().find(|&x| !ends(d, x).contains(&w)).expect("no common vertex");
        return Some(Witness::NoCommonVertex { edge: e, crossers: [f[0], f[1], third] });
    }
    None
}

pub fn check_adjacency_crossing(d: &Drawing, cs: &CrossingSet) -> Verdict {
    Verdict::new(Concept::AdjacencyCrossing, None, independent_pair(d, cs))
}

pub fn check_fan_crossing(d: &Drawing, cs: &CrossingSet) -> Verdict {
    Verdict::new(Concept::FanCrossing, None, fan_violation(d, cs))
}

/// Side from which the crosser at crossing `x` approaches `anchor`, relative
/// to the direction of `e`.
fn approach_side(d: &Drawing, cs: &CrossingSet, e: EdgeId, x: usize, anchor: VertexId) -> i8 {
    let c = &cs.crossings[x];
    let f = c.other(e).expect("crossing on e");
    let s = c.side_from(e);
    if d.graph.edge(f).0 == anchor {
        -s
    } else {
        s
    }
}

fn non_self(cs: &CrossingSet, e: EdgeId) -> Vec<usize> {
    let mut xs: Vec<usize> = cs.per_edge[e].iter().copied().filter(|&x| !cs.crossings[x].is_self()).collect();
    xs.dedup();
    xs
}

/// For each crossed edge, the anchor under which all sides agree, or a
/// witness pair of opposite crossings.
fn weak_anchors(d: &Drawing, cs: &CrossingSet) -> Result<Vec<Option<VertexId>>, Witness> {
    let mut out = vec![None; d.graph.m()];
    for e in 0..d.graph.m() {
        let xs = non_self(cs, e);
        if xs.is_empty() {
            continue;
        }
        let cands = anchors(d, cs, e);
        let mut first_bad = None;
        for &v in &cands {
            let s0 = approach_side(d, cs, e, xs[0], v);
            match xs.iter().find(|&&x| approach_side(d, cs, e, x, v) != s0) {
                None => {
                    out[e] = Some(v);
                    break;
                }
                Some(&x) => {
                    first_bad.get_or_insert(Witness::OppositeSides { edge: e, anchor: v, crossings: [xs[0], x] });
                }
            }
        }
        if out[e].is_none() {
            return Err(first_bad.expect("fan-crossing guarantees an anchor"));
        }
    }
    Ok(out)
}

pub fn check_weak_fan_planar(d: &Drawing, cs: &CrossingSet) -> Verdict {
    let w = fan_violation(d, cs).or_else(|| weak_anchors(d, cs).err());
    Verdict::new(Concept::WeakFanPlanar, None, w)
}

/// Closed curve formed by `e` between two crossings and both crossers up to
/// `anchor`.
fn enclosure_polygon(
    d: &Drawing,
    cs: &CrossingSet,
    e: EdgeId,
    anchor: VertexId,
    xi: usize,
    xj: usize,
) -> Vec<crate::geom::Point> {
    let ci = &cs.crossings[xi];
    let cj = &cs.crossings[xj];
    let fi = ci.other(e).expect("crossing on e");
    let fj = cj.other(e).expect("crossing on e");
    let mut poly = d.curve_between(e, ci.position_on(e), cj.position_on(e));
    poly.extend(d.curve_to_vertex(fj, cj.position_on(fj), anchor).into_iter().skip(1));
    let mut back = d.curve_to_vertex(fi, ci.position_on(fi), anchor);
    back.reverse();
    poly.extend(back.into_iter().skip(1));
    poly.pop();
    poly.dedup();
    poly
}

fn enclosed_endpoint(
    d: &Drawing,
    cs: &CrossingSet,
    e: EdgeId,
    anchor: VertexId,
    xi: usize,
    xj: usize,
) -> Option<VertexId> {
    let poly = enclosure_polygon(d, cs, e, anchor, xi, xj);
    ends(d, e).into_iter().find(|&u| u != anchor && point_in_polygon(&poly, &d.positions[u]))
}

pub fn check_strong_fan_planar(d: &Drawing, cs: &CrossingSet) -> Verdict {
    let concept = Concept::StrongFanPlanar;
    if let Some(w) = fan_violation(d, cs) {
        return Verdict::new(concept, None, Some(w));
    }
    let anchors = match weak_anchors(d, cs) {
        Ok(a) => a,
        Err(w) => return Verdict::new(concept, None, Some(w)),
    };
    for e in 0..d.graph.m() {
        let Some(v) = anchors[e] else { continue };
        let xs = non_self(cs, e);
        for i in 0..xs.len() {
            for j in i + 1..xs.len() {
                if let Some(u) = enclosed_endpoint(d, cs, e, v, xs[i], xs[j]) {
                    let w = Witness::Enclosure { edge: e, anchor: v, crossings: [xs[i], xs[j]], endpoint: u };
                    return Verdict::new(concept, None, Some(w));
                }
            }
        }
    }
    Verdict::new(concept, None, None)
}

pub(super) fn opposite_sides_hold(d: &Drawing, cs: &CrossingSet, e: EdgeId, anchor: VertexId, xs: &[usize; 2]) -> bool {
    let on_e = |x: usize| cs.crossings[x].other(e).is_some_and(|f| f != e);
    if !on_e(xs[0]) || !on_e(xs[1]) {
        return false;
    }
    // the anchor may only be replaced by another common vertex, which must fail too
    anchors(d, cs, e).iter().all(|&v| {
        let all: Vec<i8> = non_self(cs, e).iter().map(|&x| approach_side(d, cs, e, x, v)).collect();
        all.iter().any(|&s| s != all[0])
    }) && approach_side(d, cs, e, xs[0], anchor) != approach_side(d, cs, e, xs[1], anchor)
}

pub(super) fn enclosure_holds(
    d: &Drawing,
    cs: &CrossingSet,
    e: EdgeId,
    anchor: VertexId,
    xs: &[usize; 2],
    endpoint: VertexId,
) -> bool {
    let on_e = |x: usize| cs.crossings[x].other(e).is_some_and(|f| f != e && ends(d, f).contains(&anchor));
    on_e(xs[0])
        && on_e(xs[1])
        && ends(d, e).contains(&endpoint)
        && endpoint != anchor
        && point_in_polygon(&enclosure_polygon(d, cs, e, anchor, xs[0], xs[1]), &d.positions[endpoint])
}
