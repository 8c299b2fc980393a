//! Hand-made drawings: a fan-crossing-free graph that is not NNIC-planar in
//! the drawn embedding, and a one-crossing K5.

use crate::drawing::Drawing;
use crate::geom::{q, q_frac, Point};
use crate::graph::{EdgeId, Graph};

use super::canon::K5_TEMPLATE;

/// Wall-guard-loner drawing: a convex hexagon of large vertices whose sides
/// (walls) are protected by K5 gadgets (guards plus three small vertices
/// each), and five loner edges, two inside and three outside.
#[derive(Clone, Debug)]
pub struct AppendixFixture {
    pub drawing: Drawing,
    pub walls: Vec<EdgeId>,
    pub guards: Vec<EdgeId>,
    pub loners: Vec<EdgeId>,
}

const HEXAGON: [(i64, i64); 6] = [(4, 0), (2, 3), (-2, 3), (-4, 0), (-2, -3), (2, -3)];
const SCALE: i64 = 1000;
/// Loners as (from, to, outer radius); radius 0 means a straight chord. No
/// two radii are in ratio 3/4, which would put a bend on another arc.
const LONERS: [(usize, usize, i64); 5] = [(0, 2, 0), (1, 3, 0), (0, 3, 2), (1, 4, 3), (2, 5, 5)];

fn hex(i: usize) -> (i64, i64) {
    let (x, y) = HEXAGON[i % 6];
    (x * SCALE, y * SCALE)
}

pub fn appendix_fcf_fixture() -> AppendixFixture {
    let mut g = Graph::new();
    let mut pos = Vec::new();
    for i in 0..6 {
        g.add_vertex(format!("L{i}")).expect("fresh label");
        let (x, y) = hex(i);
        pos.push(Point::int(x, y));
    }
    let mut walls = Vec::new();
    let mut guards = Vec::new();
    for i in 0..6 {
        let (u, v) = (i, (i + 1) % 6);
        let ((ux, uy), (vx, vy)) = (hex(u), hex(v));
        let (dx, dy) = (vx - ux, vy - uy);
        // template a -> u, b -> v; the apex c points into the hexagon
        let place = |tx: i64, ty: i64| {
            let along = q_frac(tx + 20, 40);
            let across = q_frac(40 - ty, 400);
            Point::new(q(ux) + &along * q(dx) - &across * q(dy), q(uy) + &along * q(dy) + &across * q(dx))
        };
        let mut ids = [u, v, 0, 0, 0];
        for (slot, name) in [(2, "c"), (3, "d"), (4, "e")] {
            let (_, (tx, ty)) = K5_TEMPLATE.iter().find(|(l, _)| *l == name).copied().expect("template vertex");
            ids[slot] = g.add_vertex(format!("S{i}.{name}")).expect("fresh label");
            pos.push(place(tx, ty));
        }
        for a in 0..5 {
            for b in a + 1..5 {
                let e = g.add_edge(ids[a], ids[b]).expect("simple");
                if (a, b) == (0, 1) {
                    walls.push(e);
                } else {
                    guards.push(e);
                }
            }
        }
    }
    let mut loners = Vec::new();
    for (a, b, _) in LONERS {
        loners.push(g.add_edge(a, b).expect("simple"));
    }
    let mut curves: Vec<Vec<Point>> = g.edges().iter().map(|&(u, v)| vec![pos[u].clone(), pos[v].clone()]).collect();
    for (li, &e) in loners.iter().enumerate() {
        let (a, b, r) = LONERS[li];
        if r == 0 {
            continue;
        }
        // out along the ray, counter-clockwise through scaled side midpoints, back in
        let scaled = |(x, y): (i64, i64)| Point::int(x * r, y * r);
        let mut c = vec![pos[a].clone(), scaled(hex(a))];
        for j in a..b {
            let ((x0, y0), (x1, y1)) = (hex(j), hex(j + 1));
            c.push(scaled(((x0 + x1) / 2, (y0 + y1) / 2)));
        }
        c.push(scaled(hex(b)));
        c.push(pos[b].clone());
        curves[e] = c;
    }
    let drawing = Drawing::new(g, pos, curves).expect("fixture curves join their ends");
    AppendixFixture { drawing, walls, guards, loners }
}

/// K5 drawn with exactly one crossing.
pub fn k5_fcf_fixture() -> Drawing {
    let mut g = Graph::new();
    let mut pos = Vec::new();
    for (l, (x, y)) in K5_TEMPLATE {
        g.add_vertex(l).expect("fresh label");
        pos.push(Point::int(x, y));
    }
    for a in 0..5 {
        for b in a + 1..5 {
            g.add_edge(a, b).expect("simple");
        }
    }
    Drawing::straight(g, pos).expect("straight drawing")
}
