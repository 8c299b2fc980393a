//! Standard drawings of the framework graphs and the two hand-made fixtures.
//!
//! Frame nodes sit on a straight-line K3,3 with a single crossing, between the
//! horizontal connection W-Z and the vertical one B-T. The two con-graphs
//! placed there are drawn as combs that cross in a grid near the origin; every
//! other con-graph stays in a thin band around its connection.

mod canon;
mod fixtures;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::congraph::{ConGraphSpec, Loc};
use crate::drawing::Drawing;
use crate::error::{Error, Result};
use crate::frame::{self, ConnectionId};
use crate::framework::{check_params, construction_for, Concept, FrameworkGraph};
use crate::geom::Point;

use canon::{Canon, Pattern, Pt};

pub use canon::K5_TEMPLATE;
pub use fixtures::{appendix_fcf_fixture, k5_fcf_fixture, AppendixFixture};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LayoutVariant {
    /// Red-yellow (standard frame) or red-red (alternate frame).
    Upper,
    /// Blue-blue (standard frame) or blue-gray (alternate frame).
    Witness,
}

impl LayoutVariant {
    pub const BOTH: [LayoutVariant; 2] = [LayoutVariant::Witness, LayoutVariant::Upper];

    pub fn name(self) -> &'static str {
        match self {
            LayoutVariant::Upper => "upper",
            LayoutVariant::Witness => "witness",
        }
    }
}

impl fmt::Display for LayoutVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LayoutVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "upper" | "upperbound" | "red-yellow" | "red-red" => Ok(LayoutVariant::Upper),
            "witness" | "blue-blue" | "blue-gray" => Ok(LayoutVariant::Witness),
            _ => Err(Error::InvalidParameters(format!("unknown layout variant `{s}`"))),
        }
    }
}

/// Slots of the six frame nodes in units of `r`: W, Z, B, T, P, Q.
const SLOTS: [(i64, i64); 6] = [(-2, 0), (2, 0), (0, -2), (0, 2), (2, 6), (-6, -2)];

/// Slot of every frame node (v1, v2, v3, w1, w2, w3).
fn node_slots(variant: LayoutVariant) -> [usize; 6] {
    match variant {
        LayoutVariant::Witness => [0, 2, 4, 1, 3, 5],
        LayoutVariant::Upper => [0, 2, 4, 3, 1, 5],
    }
}

/// The connections drawn on W-Z and on B-T.
pub fn crossing_pair(variant: LayoutVariant) -> (ConnectionId, ConnectionId) {
    match variant {
        LayoutVariant::Witness => (frame::connection(0, 0), frame::connection(1, 1)),
        LayoutVariant::Upper => (frame::connection(0, 1), frame::connection(1, 0)),
    }
}

fn patterns(concept: Concept, k: usize) -> (Pattern, Pattern) {
    use Pattern::*;
    match concept {
        Concept::KPlanar => (Boundaries(k), Boundaries(k)),
        Concept::KVertexPlanar => (Alternating(k), Alternating(k)),
        Concept::Ic => (Alternating(1), Alternating(1)),
        Concept::Nic => (Stairs, Stairs),
        Concept::Nnic | Concept::KFanCrossingFree => (Ends, Ends),
        Concept::KGapPlanar => (After, Boundaries(k)),
        _ => (After, After),
    }
}

/// Emits the standard drawing of `construction_for(concept, ell, k)`.
pub fn standard_drawing(concept: Concept, ell: usize, k: usize, variant: LayoutVariant) -> Result<Drawing> {
    let fg = construction_for(concept, ell, k)?;
    draw(&fg, concept, variant)
}

/// Standard drawing of an already built construction.
pub fn draw(fg: &FrameworkGraph, concept: Concept, variant: LayoutVariant) -> Result<Drawing> {
    let (hc, vc) = crossing_pair(variant);
    let cgs: Vec<_> = fg.specs.iter().map(|s| s.instantiate()).collect::<Result<_>>()?;
    let k = fg.k;
    let mut canons: Vec<Option<Canon>> = vec![None; 9];
    let (h, v) = (&cgs[hc], &cgs[vc]);
    match (fg.specs[hc], variant) {
        (ConGraphSpec::ApexBlue { ell, k }, LayoutVariant::Witness) => {
            let (hcan, xs, top) = canon::apex(h, ell, k, v.paths.len());
            canons[vc] = Some(canon::after_lanes(v, &xs, top + 2));
            canons[hc] = Some(hcan);
        }
        (ConGraphSpec::SkewBlue { k, .. }, LayoutVariant::Witness) => {
            let (hcan, xs, top) = canon::skew(h, k, v.paths.len());
            canons[vc] = Some(canon::after_lanes(v, &xs, top + 2));
            canons[hc] = Some(hcan);
        }
        (ConGraphSpec::K7, _) => {
            if fg.specs[vc] != ConGraphSpec::SingleEdge {
                return Err(Error::InvalidParameters("a K7 may only cross a single edge".into()));
            }
            canons[vc] = Some(Canon { internal: Vec::new(), bends: vec![Vec::new()] });
        }
        _ => {
            let (hp, vp) = match variant {
                LayoutVariant::Witness => patterns(concept, k),
                LayoutVariant::Upper => (Pattern::After, Pattern::After),
            };
            let (hcan, vcan) = canon::comb(h, hp, v, vp);
            canons[hc] = Some(hcan);
            canons[vc] = Some(vcan);
        }
    }
    for c in 0..9 {
        if canons[c].is_none() {
            canons[c] = match fg.specs[c] {
                ConGraphSpec::ApexBlue { ell, k } => Some(canon::apex(&cgs[c], ell, k, 0).0),
                ConGraphSpec::SkewBlue { k, .. } => Some(canon::skew(&cgs[c], k, 0).0),
                ConGraphSpec::K7 => None,
                _ => Some(canon::planar_bundle(&cgs[c])),
            };
        }
    }
    let extent = canons.iter().flatten().map(Canon::extent).max().unwrap_or(0).max(1200);
    // near-grid: fans deviate from their lanes by less than half a unit
    let r = 2000 * (1 + (16 * extent * extent + 16 * extent) / 2000);
    for c in 0..9 {
        if canons[c].is_none() {
            canons[c] = Some(canon::k7(&cgs[c], r));
        }
    }

    let slots = node_slots(variant);
    let node = |i: usize| {
        let (x, y) = SLOTS[slots[i]];
        (x * r, y * r)
    };
    let g = &fg.graph;
    let mut positions = vec![Point::int(0, 0); g.n()];
    for i in 0..6 {
        let (x, y) = node(i);
        positions[i] = Point::int(x, y);
    }
    let mut curves: Vec<Vec<Point>> = vec![Vec::new(); g.m()];
    for c in 0..9 {
        let cg = &cgs[c];
        let can = canons[c].as_ref().expect("all laid out");
        let (s, t) = frame::endpoints(c);
        let (ps, pt) = (node(s), node(t));
        let to_world = |(x, y): Pt| -> Point {
            let (wx, wy) = if c == hc {
                (2 * x, 2 * y)
            } else if c == vc {
                (2 * y, 2 * x)
            } else {
                let u = ((pt.0 - ps.0) / (2 * r), (pt.1 - ps.1) / (2 * r));
                (ps.0 + (x + r) * u.0 - y * u.1, ps.1 + (x + r) * u.1 + y * u.0)
            };
            Point::int(wx, wy)
        };
        let ids: Vec<usize> =
            cg.internal.iter().map(|l| fg.local(c, l).expect("con-graph vertex in framework")).collect();
        for (i, &p) in can.internal.iter().enumerate() {
            positions[ids[i]] = to_world(p);
        }
        let id = |l: Loc| match l {
            Loc::S => s,
            Loc::T => t,
            Loc::I(i) => ids[i],
        };
        for (ei, &(a, b)) in cg.edges.iter().enumerate() {
            let (ia, ib) = (id(a), id(b));
            let e = g.edge_between(ia, ib).expect("con-graph edge in framework");
            let mut pts = vec![positions[ia].clone()];
            pts.extend(can.bends[ei].iter().map(|&p| to_world(p)));
            pts.push(positions[ib].clone());
            if g.edge(e).0 != ia {
                pts.reverse();
            }
            curves[e] = pts;
        }
    }
    Drawing::new(g.clone(), positions, curves)
}

/// Exact crossing count of the standard drawing.
pub fn crossing_count_formula(concept: Concept, variant: LayoutVariant, ell: usize, k: usize) -> Result<u128> {
    check_params(concept, ell, k)?;
    let l = ell as u128;
    let k = concept.effective_k(k) as u128;
    let witness = variant == LayoutVariant::Witness;
    let n = match concept {
        Concept::KPlanar | Concept::KVertexPlanar => {
            if witness {
                (l * k).pow(2)
            } else {
                k + 1
            }
        }
        Concept::Ic | Concept::Nic => {
            if witness {
                l * l
            } else {
                2
            }
        }
        Concept::Nnic | Concept::KFanCrossingFree => {
            if witness {
                (l * k).pow(2)
            } else {
                2 * k
            }
        }
        // six K7s with nine crossings each, plus ten edges through the cut
        Concept::AdjacencyCrossing | Concept::FanCrossing | Concept::WeakFanPlanar | Concept::StrongFanPlanar => {
            if witness {
                l * l + 54
            } else {
                64
            }
        }
        Concept::KEdgeCrossing => {
            if witness {
                (k / 2).pow(2)
            } else {
                k
            }
        }
        Concept::KGapPlanar => {
            if witness {
                5 * l * k * k
            } else {
                25 * k * k
            }
        }
        Concept::KApex => {
            if witness {
                (l * k).pow(2) + k
            } else {
                k + 1
            }
        }
        Concept::Skewness => {
            if witness {
                l * k * k + k
            } else {
                k + 1
            }
        }
    };
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checkers::check;
    use crate::drawing::compute_crossings;

    fn counts(concept: Concept, ell: usize, k: usize) {
        for variant in LayoutVariant::BOTH {
            let d = standard_drawing(concept, ell, k, variant).unwrap();
            let cs = compute_crossings(&d).unwrap();
            assert_eq!(
                cs.len() as u128,
                crossing_count_formula(concept, variant, ell, k).unwrap(),
                "{concept} {variant} l={ell} k={k}"
            );
            let v = check(concept, k, &d, &cs);
            assert_eq!(v.holds, variant == LayoutVariant::Witness, "{concept} {variant}: {:?}", v.witness);
        }
    }

    #[test]
    fn every_concept_small() {
        for concept in Concept::ALL {
            for (ell, k) in [(2, 1), (3, 2), (4, 3), (5, 2)] {
                if check_params(concept, ell, k).is_ok() {
                    counts(concept, ell, k);
                }
            }
        }
    }

    #[test]
    fn straight_except_fan_variants() {
        for concept in Concept::ALL {
            for variant in LayoutVariant::BOTH {
                let d = standard_drawing(concept, 3, 2, variant).unwrap();
                assert_eq!(d.is_straight_line(), !concept.is_fan_variant(), "{concept} {variant}");
            }
        }
    }

    #[test]
    fn frame_alone_has_one_crossing() {
        let fg = crate::framework::build_with_specs(
            &frame::build_frame(frame::Coloring::Standard),
            [ConGraphSpec::SingleEdge; 9],
        )
        .unwrap();
        for variant in LayoutVariant::BOTH {
            let d = draw(&fg, Concept::KPlanar, variant).unwrap();
            assert_eq!(compute_crossings(&d).unwrap().len(), 1);
        }
    }

    #[test]
    fn deterministic() {
        let a = standard_drawing(Concept::Nic, 4, 1, LayoutVariant::Witness).unwrap();
        let b = standard_drawing(Concept::Nic, 4, 1, LayoutVariant::Witness).unwrap();
        assert_eq!(a.positions, b.positions);
        assert_eq!(a.curves, b.curves);
    }
}
