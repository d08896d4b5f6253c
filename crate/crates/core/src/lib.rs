//! Morse theory of area functionals on polygon linkage configuration spaces.
//!
//! A polygonal linkage is a cyclic chain of rigid bars joined by revolving
//! joints. Its planar configurations carry the signed area as a natural
//! function; spatial configurations decorated with a unit direction carry
//! the projected-area functional. Both are generically Morse functions,
//! their critical points are explicit geometric shapes (cyclic polygons,
//! zig-zags, and a non-planar family), and the Morse indices obey closed
//! formulas in the combinatorial data of the shape.
//!
//! This crate enumerates the critical shapes, evaluates the closed-form
//! indices, verifies them against independent constrained-Hessian numerics,
//! and certifies perfect-Morse claims against Betti numbers of the
//! configuration spaces.
//!
//! Module map:
//!
//! * [`linkage`] — bar-length vectors, genericity via subset sums.
//! * [`polygon`] — planar/spatial polygons, the two area functionals,
//!   rigid alignment, JSON round-tripping.
//! * [`cyclic`] — planar cyclic configurations from orientation data and a
//!   circumradius solve; full enumeration; the equilateral fast path.
//! * [`swap`] — edge-transposition maps and the composite SW symmetry.
//! * [`morse`] — index formulas plus the numeric projected-Hessian path.
//! * [`deform`] — index bookkeeping along cyclic deformations.
//! * [`spatial`] — multistart search for critical points of the projected
//!   area on the decorated space, classification, zig-zag solver.
//! * [`topology`] — Betti tables and the perfect-Morse verdict.

pub mod cyclic;
pub mod deform;
pub mod error;
pub mod linkage;
pub mod morse;
pub mod polygon;
pub mod spatial;
pub mod swap;
pub mod tol;
pub mod topology;

pub use nalgebra::{Vector2 as Vec2, Vector3 as Vec3};

/// 2D vector of `f64`, the coordinate type used throughout.
pub type V2 = Vec2<f64>;
/// 3D vector of `f64`.
pub type V3 = Vec3<f64>;

pub use cyclic::{enumerate_cyclic, enumerate_equilateral, solve_cyclic, CyclicConfig};
pub use error::{CyclicError, LinkageError, MorseError, SpatialError, TopologyError};
pub use linkage::Linkage;
pub use polygon::{
    signed_area, vector_area, DecoratedConfig, PlanarPolygon, SpatialPolygon,
};
pub use spatial::{classify, find_critical_points, solve_zigzag, CriticalClass};
pub use topology::{decorated_betti, equilateral_betti, klyachko_betti, BettiTable, MorseReport};
