//! Con-graph layouts in canonical coordinates: poles at `(-r, 0)` and
//! `(r, 0)`, everything else in a thin band around the pole axis.

use std::collections::HashMap;

use crate::congraph::{ConGraph, Loc};

pub(crate) type Pt = (i64, i64);

#[derive(Clone, Debug, Default)]
pub(crate) struct Canon {
    pub internal: Vec<Pt>,
    /// Interior bends per con-graph edge, listed from its first to its second end.
    pub bends: Vec<Vec<Pt>>,
}

impl Canon {
    fn new(cg: &ConGraph) -> Self {
        Canon { internal: vec![(0, 0); cg.internal.len()], bends: vec![Vec::new(); cg.edges.len()] }
    }

    /// Largest absolute coordinate of an internal vertex or bend.
    pub fn extent(&self) -> i64 {
        self.internal.iter().chain(self.bends.iter().flatten()).map(|&(x, y)| x.abs().max(y.abs())).max().unwrap_or(0)
    }
}

fn index(cg: &ConGraph) -> HashMap<&str, usize> {
    cg.internal.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect()
}

fn internal_of(l: Loc) -> usize {
    match l {
        Loc::I(i) => i,
        _ => unreachable!("pole on a lane interior"),
    }
}

/// Vertex slots of a lane's internal vertices, as gaps between the lanes of
/// the other side (gap `g` lies after `g` lanes).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Pattern {
    /// One vertex after every `k` lanes.
    Boundaries(usize),
    /// Pairs around each block of `k` lanes, with an uncrossed edge between pairs.
    Alternating(usize),
    /// One vertex in each gap.
    Stairs,
    /// One vertex before and one after all lanes.
    Ends,
    /// Every vertex after all lanes.
    After,
}

impl Pattern {
    fn gaps(self, count: usize, lanes: usize) -> Vec<usize> {
        let g: Vec<usize> = match self {
            Pattern::Boundaries(k) => (1..=count).map(|m| m * k).collect(),
            Pattern::Alternating(k) => (0..count).map(|m| m.div_ceil(2) * k).collect(),
            Pattern::Stairs => (0..count).collect(),
            Pattern::Ends => (0..count).map(|m| if m == 0 { 0 } else { lanes }).collect(),
            Pattern::After => vec![lanes; count],
        };
        g.into_iter().map(|x| x.min(lanes)).collect()
    }
}

/// Lanes of a bundle-like con-graph: its pole paths, direct edge first.
fn is_direct(p: &[Loc]) -> bool {
    p.len() == 2
}

struct Axis {
    /// Coordinate of the r-th slot of gap g.
    slots: Vec<Vec<i64>>,
    lanes: Vec<i64>,
}

/// Interleaves the slots for one side's vertices with the other side's lanes.
/// A direct lane, always lane 0, is moved to coordinate 0.
fn axis(gaps: &[Vec<usize>], lanes: usize, direct: bool) -> Axis {
    let mut need = vec![0usize; lanes + 1];
    for lane in gaps {
        let mut count = vec![0usize; lanes + 1];
        for &g in lane {
            count[g] += 1;
        }
        for g in 0..=lanes {
            need[g] = need[g].max(count[g]);
        }
    }
    let mut pos = 0i64;
    let mut slots = Vec::with_capacity(lanes + 1);
    let mut coords = Vec::with_capacity(lanes);
    for (g, &c) in need.iter().enumerate() {
        slots.push((0..c as i64).map(|r| pos + r).collect::<Vec<_>>());
        pos += c as i64;
        if g < lanes {
            coords.push(pos);
            pos += 1;
        }
    }
    let shift = if direct && lanes > 0 { coords[0] } else { pos / 2 };
    slots.iter_mut().flatten().for_each(|x| *x -= shift);
    coords.iter_mut().for_each(|x| *x -= shift);
    Axis { slots, lanes: coords }
}

fn lane_gaps(cg: &ConGraph, p: Pattern, other_lanes: usize) -> Vec<Vec<usize>> {
    cg.paths.iter().map(|path| p.gaps(path.len() - 2, other_lanes)).collect()
}

fn place(cg: &ConGraph, gaps: &[Vec<usize>], slots: &Axis, lanes: &Axis) -> Canon {
    let mut c = Canon::new(cg);
    for (a, path) in cg.paths.iter().enumerate() {
        let mut used = HashMap::new();
        for (m, &v) in path[1..path.len() - 1].iter().enumerate() {
            let g = gaps[a][m];
            let r = used.entry(g).or_insert(0usize);
            let along = slots.slots[g][*r];
            *r += 1;
            c.internal[internal_of(v)] = (along, lanes.lanes[a]);
        }
    }
    c
}

/// Comb layout of two crossing bundle-like con-graphs. `h` runs along the x
/// axis and `v` along the y axis; the returned layout of `v` is in its own
/// canonical frame, where its canonical y is the common x coordinate.
pub(crate) fn comb(h: &ConGraph, hp: Pattern, v: &ConGraph, vp: Pattern) -> (Canon, Canon) {
    let (hl, vl) = (h.paths.len(), v.paths.len());
    let hg = lane_gaps(h, hp, vl);
    let vg = lane_gaps(v, vp, hl);
    let x = axis(&hg, vl, is_direct(&v.paths[0]));
    let y = axis(&vg, hl, is_direct(&h.paths[0]));
    (place(h, &hg, &x, &y), place(v, &vg, &y, &x))
}

/// Layout of a con-graph crossed only by vertical lanes at `xs`, each with
/// its one internal vertex above everything of `h`.
pub(crate) fn after_lanes(v: &ConGraph, xs: &[i64], top: i64) -> Canon {
    let mut c = Canon::new(v);
    for (b, path) in v.paths.iter().enumerate() {
        for &u in &path[1..path.len() - 1] {
            c.internal[internal_of(u)] = (top, xs[b]);
        }
    }
    c
}

/// Uncrossed layout of a bundle-like con-graph.
pub(crate) fn planar_bundle(cg: &ConGraph) -> Canon {
    let mut c = Canon::new(cg);
    let direct = is_direct(&cg.paths[0]);
    let i = cg.paths.len() as i64;
    for (a, path) in cg.paths.iter().enumerate() {
        let y = if direct { a as i64 } else { 2 * a as i64 - (i - 1) };
        let j = path.len() as i64 - 1;
        for (b, &v) in path[1..path.len() - 1].iter().enumerate() {
            c.internal[internal_of(v)] = (2 * (b as i64 + 1) - j, y);
        }
    }
    c
}

/// One-crossing K5: `c` at the origin, outer triangle `a, b, c`, and the only
/// crossing between `ce` and `bd`.
pub const K5_TEMPLATE: [(&str, Pt); 5] =
    [("a", (-20, 40)), ("b", (20, 40)), ("c", (0, 0)), ("d", (0, 30)), ("e", (5, 36))];

/// Apex gadget: per group the left vertices in a column at x = 0, the apex
/// after `lanes` vertical lanes at the top of the group with its K5 above, the
/// right vertices one step further. Returns the layout, the lane x
/// coordinates and the largest y used.
pub(crate) fn apex(cg: &ConGraph, ell: usize, k: usize, lanes: usize) -> (Canon, Vec<i64>, i64) {
    let ix = index(cg);
    let mut c = Canon::new(cg);
    let step = 100i64;
    let xa = step * (lanes as i64 + 1);
    let height = 2 * ell as i64 + 60;
    let mut top = 0;
    for v in 1..=k {
        let base = (v as i64 - 1) * height;
        let apex_y = base + 2 * ell as i64;
        c.internal[ix[format!("a{v}").as_str()]] = (xa, apex_y);
        for i in 1..=ell {
            let y = base + 2 * i as i64;
            c.internal[ix[format!("l{v}.{i}").as_str()]] = (0, y);
            c.internal[ix[format!("r{v}.{i}").as_str()]] = (xa + step, y);
        }
        for (q, (_, (dx, dy))) in [K5_TEMPLATE[0], K5_TEMPLATE[1], K5_TEMPLATE[3], K5_TEMPLATE[4]].iter().enumerate() {
            c.internal[ix[format!("q{v}.{}", q + 1).as_str()]] = (xa + dx, apex_y + dy);
        }
        top = apex_y + 40;
    }
    let xs = (1..=lanes as i64).map(|b| step * b).collect();
    (c, xs, top)
}

/// Skewness gadget: per group a triangle on the three `w` vertices with the
/// apex inside; the apex-to-pole edge leaves through the triangle's right side
/// and then crosses `lanes` vertical lanes.
pub(crate) fn skew(cg: &ConGraph, k: usize, lanes: usize) -> (Canon, Vec<i64>, i64) {
    let ix = index(cg);
    let mut c = Canon::new(cg);
    let u = 10i64;
    let mut top = 0;
    for v in 1..=k {
        let mid = (v as i64 - 1) * 20 + 5;
        c.internal[ix[format!("w{v}.1").as_str()]] = (0, mid);
        c.internal[ix[format!("a{v}").as_str()]] = (u, mid);
        c.internal[ix[format!("w{v}.2").as_str()]] = (2 * u, mid + 3);
        c.internal[ix[format!("w{v}.3").as_str()]] = (2 * u, mid - 3);
        top = mid + 3;
    }
    let xs = (1..=lanes as i64).map(|b| 2 * u + 2 * b).collect();
    (c, xs, top)
}

/// K7 gadget drawn with nine crossings, all of fan type; poles on the outer
/// face. Figure coordinates are (X, Y) with poles at Y = -2000 and Y = 2000.
const K7_VERTICES: [(i64, i64); 5] = [(276, 32), (276, 672), (-333, -230), (-709, 320), (-333, 838)];

/// Bent K7 edges as (end, end, interior bends) with ends 0 = s, 1 = t,
/// 2.. = x1...
const K7_BENT: [(usize, usize, [(i64, i64); 7]); 7] = [
    (0, 5, [(-128, -1686), (-245, -1399), (-350, -1127), (-444, -863), (-528, -596), (-599, -316), (-660, -14)]),
    (0, 6, [(-314, -1503), (-618, -1020), (-877, -565), (-1058, -150), (-1128, 211), (-1053, 505), (-799, 718)]),
    (5, 1, [(-649, 567), (-586, 792), (-517, 999), (-440, 1196), (-353, 1388), (-252, 1582), (-135, 1784)]),
    (4, 1, [(-652, -118), (-834, 85), (-897, 359), (-857, 680), (-730, 1027), (-534, 1377), (-285, 1709)]),
    (3, 0, [(420, 434), (477, 131), (467, -219), (406, -597), (311, -983), (200, -1358), (91, -1704)]),
    (1, 0, [(359, 1559), (609, 1077), (752, 564), (793, 35), (734, -499), (580, -1025), (334, -1529)]),
    (1, 2, [(142, 1738), (283, 1470), (409, 1202), (505, 938), (554, 684), (543, 445), (455, 226)]),
];

pub(crate) fn k7(cg: &ConGraph, r: i64) -> Canon {
    let ix = index(cg);
    let mut c = Canon::new(cg);
    let map = |(x, y): (i64, i64)| (y * r / 2000, x);
    let loc = |n: usize| match n {
        0 => Loc::S,
        1 => Loc::T,
        i => Loc::I(ix[format!("x{}", i - 1).as_str()]),
    };
    for (i, &p) in K7_VERTICES.iter().enumerate() {
        c.internal[ix[format!("x{}", i + 1).as_str()]] = map(p);
    }
    for (a, b, bends) in K7_BENT {
        let (la, lb) = (loc(a), loc(b));
        let pts: Vec<Pt> = bends.iter().map(|&p| map(p)).collect();
        let e = cg.edges.iter().position(|&(x, y)| (x, y) == (la, lb) || (x, y) == (lb, la)).expect("K7 edge");
        c.bends[e] = if cg.edges[e].0 == la { pts } else { pts.into_iter().rev().collect() };
    }
    c
}
