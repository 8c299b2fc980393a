//! Exact rational points and the small set of predicates the checkers share.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `p/q` in lowest terms, denominator always present.
pub fn q_to_string(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `p/q` or a bare integer.
pub fn parse_q(s: &str) -> Option<Q> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.trim().parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    (!d.is_zero()).then(|| Q::new(n, d))
}

pub(crate) fn ser_q<S: serde::Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q_to_string(x))
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Q,
    pub y: Q,
}

impl Point {
    pub fn new(x: Q, y: Q) -> Self {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point { x: q(x), y: q(y) }
    }

    pub fn sub(&self, o: &Point) -> (Q, Q) {
        (&self.x - &o.x, &self.y - &o.y)
    }

    /// Point at parameter `t` on the segment `self`-`o`.
    pub fn lerp(&self, o: &Point, t: &Q) -> Point {
        Point { x: &self.x + (&o.x - &self.x) * t, y: &self.y + (&o.y - &self.y) * t }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

pub fn cross(a: (&Q, &Q), b: (&Q, &Q)) -> Q {
    a.0 * b.1 - a.1 * b.0
}

/// Sign of the turn a -> b -> c.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Ordering {
    let (ux, uy) = b.sub(a);
    let (vx, vy) = c.sub(a);
    cross((&ux, &uy), (&vx, &vy)).cmp(&Q::zero())
}

/// Whether `p` lies on the closed segment `a`-`b`.
pub fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    orient(a, b, p) == Ordering::Equal
        && p.x >= a.x.clone().min(b.x.clone())
        && p.x <= a.x.clone().max(b.x.clone())
        && p.y >= a.y.clone().min(b.y.clone())
        && p.y <= a.y.clone().max(b.y.clone())
}

/// Even-odd containment of `p` in the closed polygon `poly` (last vertex
/// connects back to the first). `p` must not lie on the boundary.
pub fn point_in_polygon(poly: &[Point], p: &Point) -> bool {
    let n = poly.len();
    let mut inside = false;
    for i in 0..n {
        let a = &poly[i];
        let b = &poly[(i + 1) % n];
        if (a.y > p.y) != (b.y > p.y) {
            // x-coordinate of the edge at height p.y compared with p.x
            let lhs = (&b.x - &a.x) * (&p.y - &a.y);
            let rhs = (&p.x - &a.x) * (&b.y - &a.y);
            let right_of_p = if b.y > a.y { lhs > rhs } else { lhs < rhs };
            if right_of_p {
                inside = !inside;
            }
        }
    }
    inside
}

pub fn sign(x: &Q) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
