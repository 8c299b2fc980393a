//! The edge-colored K3,3 frame.

use serde::{Deserialize, Serialize};

pub type ConnectionId = usize;
pub type NodeId = usize;

pub const NODE_LABELS: [&str; 6] = ["v1", "v2", "v3", "w1", "w2", "w3"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
    Yellow,
    Gray,
}

impl Color {
    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Blue => "blue",
            Color::Yellow => "yellow",
            Color::Gray => "gray",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coloring {
    /// Blue, yellow, blue, red along a 4-cycle; five gray connections.
    Standard,
    /// One blue connection adjacent to two independent red ones; six gray.
    Alternate,
}

/// Nodes `0..3` are `v1..v3`, nodes `3..6` are `w1..w3`. Connection `3*i + j`
/// joins `v(i+1)` and `w(j+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub coloring: Coloring,
    colors: [Color; 9],
}

pub fn connection(v: usize, w: usize) -> ConnectionId {
    3 * v + w
}

pub fn endpoints(c: ConnectionId) -> (NodeId, NodeId) {
    (c / 3, 3 + c % 3)
}

pub fn connection_label(c: ConnectionId) -> String {
    let (a, b) = endpoints(c);
    format!("{}{}", NODE_LABELS[a], NODE_LABELS[b])
}

/// Connections sharing a frame node.
pub fn adjacent(c1: ConnectionId, c2: ConnectionId) -> bool {
    c1 / 3 == c2 / 3 || c1 % 3 == c2 % 3
}

pub fn build_frame(coloring: Coloring) -> Frame {
    let mut colors = [Color::Gray; 9];
    match coloring {
        Coloring::Standard => {
            // v1w1, w1v2, v2w2, w2v1
            colors[connection(0, 0)] = Color::Blue;
            colors[connection(1, 0)] = Color::Yellow;
            colors[connection(1, 1)] = Color::Blue;
            colors[connection(0, 1)] = Color::Red;
        }
        Coloring::Alternate => {
            colors[connection(0, 0)] = Color::Blue;
            colors[connection(0, 1)] = Color::Red;
            colors[connection(1, 0)] = Color::Red;
        }
    }
    Frame { coloring, colors }
}

impl Frame {
    pub fn color(&self, c: ConnectionId) -> Color {
        self.colors[c]
    }

    pub fn colors(&self) -> &[Color; 9] {
        &self.colors
    }

    pub fn with_color(&self, color: Color) -> Vec<ConnectionId> {
        (0..9).filter(|&c| self.colors[c] == color).collect()
    }
}
