//! Seeded random drawings for property tests and the `gen --seed` corpus.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::drawing::{compute_crossings, CrossingSet, Drawing};
use crate::geom::Point;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug)]
pub struct RandomSpec {
    pub min_vertices: usize,
    pub max_vertices: usize,
    /// Drawings with more crossings are rejected.
    pub max_crossings: usize,
    /// Chance that an edge gets one bend; 0 gives straight-line drawings.
    pub bend_probability: f64,
    /// Coordinates are drawn from `0..grid`.
    pub grid: i64,
}

impl Default for RandomSpec {
    fn default() -> Self {
        RandomSpec { min_vertices: 4, max_vertices: 8, max_crossings: 12, bend_probability: 0.3, grid: 40 }
    }
}

fn point(rng: &mut ChaCha8Rng, grid: i64) -> Point {
    Point::int(rng.gen_range(0..grid), rng.gen_range(0..grid))
}

fn attempt(rng: &mut ChaCha8Rng, spec: &RandomSpec) -> Option<(Drawing, CrossingSet)> {
    let n = rng.gen_range(spec.min_vertices..=spec.max_vertices);
    let mut g = Graph::new();
    for i in 0..n {
        g.add_vertex(format!("x{i}")).ok()?;
    }
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let m = rng.gen_range(n.saturating_sub(1)..=(2 * n).min(pairs.len()));
    for &(u, v) in &pairs[..m] {
        g.add_edge(u, v).ok()?;
    }
    let positions: Vec<Point> = (0..n).map(|_| point(rng, spec.grid)).collect();
    let curves = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let mut c = vec![positions[u].clone()];
            if rng.gen_bool(spec.bend_probability) {
                c.push(point(rng, spec.grid));
            }
            c.push(positions[v].clone());
            c
        })
        .collect();
    let d = Drawing::new(g, positions, curves).ok()?;
    let cs = compute_crossings(&d).ok()?;
    (cs.len() <= spec.max_crossings).then_some((d, cs))
}

/// A drawing in general position with at most `spec.max_crossings`
/// crossings, determined by `seed`. Invalid samples are redrawn.
pub fn random_drawing(seed: u64, spec: &RandomSpec) -> (Drawing, CrossingSet) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        if let Some(r) = attempt(&mut rng, spec) {
            return r;
        }
    }
}
