//! Exact polar duality and Mahler volume for centrally symmetric convex
//! polygons, with a descent that deletes edge or vertex pairs while
//! strictly lowering the Mahler volume until a parallelogram (`M = 8`)
//! remains.
//!
//! All geometry is carried out in arbitrary-precision rationals, so every
//! identity is checked with `==`, never with a tolerance.
//!
//! ```
//! use mahler::{named_polygon, descend, rational};
//!
//! let hex = named_polygon("hex6b").unwrap();
//! assert_eq!(hex.mahler_volume(), rational::int(9));
//! let trace = descend(&hex).unwrap();
//! assert_eq!(trace.final_mahler, rational::int(8));
//! ```

pub mod error;
pub mod geometry;
pub mod oracle;
pub mod parallelograms;
pub mod rational;
pub mod reduction;
pub mod svg;
pub mod verify;
pub mod zonogen;

pub use error::{Error, Result};
pub use geometry::{index_shift, HalfPlane, LinearMap, Point, SymPolygon};
pub use parallelograms::{
    compare_parallelogram_sums, hexagon_carving, p1, p2, Carving, ParallelogramSums, Quad, Tri,
};
pub use rational::Rational;
pub use reduction::{
    apply_move, check_edge_deletion, descend, normalize_for_edge, remove_edge_pair,
    remove_vertex_pair, select_move, vertical_distances, DescentTrace, Move, Neighbor,
    NormalizedFrame, Side, VerticalDistances,
};
pub use zonogen::{named_polygon, random_zonogon, GenSpec};
