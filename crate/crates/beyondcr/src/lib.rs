//! Crossing-ratio constructions for beyond-planarity concepts: framework
//! graphs, exact drawings, concept checkers and Kuratowski coverage.

pub mod bounds;
pub mod checkers;
pub mod congraph;
pub mod drawing;
pub mod error;
pub mod frame;
pub mod framework;
pub mod geom;
pub mod golden;
pub mod graph;
pub mod json;
pub mod kuratowski;
pub mod layouts;
pub mod random;
pub mod svg;

pub use bounds::{crossing_lemma_bound, ratio_report, ratio_upper, CountSource, RatioReport};
pub use checkers::{check, Certificate, Verdict, Witness};
pub use congraph::{ConGraph, ConGraphSpec, Loc};
pub use drawing::{compute_crossings, Crossing, CrossingSet, Drawing};
pub use error::{Error, Result};
pub use frame::{build_frame, Color, Coloring, ConnectionId, Frame};
pub use framework::{construction_for, Concept, FrameworkGraph};
pub use geom::{Point, Q};
pub use graph::{EdgeId, Graph, VertexId};
pub use kuratowski::{counting_lower_bound, coverage_ledger, verify_full_coverage, CoverageLedger, LowerBound};
pub use layouts::{standard_drawing, LayoutVariant};
pub use svg::{to_svg, SvgStyle};
