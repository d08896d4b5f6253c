//! Numeric tolerances used across the crate.
//!
//! All thresholds are collected here so that every comparison has one
//! documented origin. Scale factors are noted next to each constant; a
//! constant marked `×X` multiplies the quantity X before use.

/// Relative tolerance for edge-length agreement (×length).
pub const TAU_LEN: f64 = 1e-9;

/// Tolerance for functional identities computed two ways (absolute on
/// quantities of order one, ×scale otherwise).
pub const TAU_NUM: f64 = 1e-10;

/// Genericity margin for subset sums (×perimeter).
pub const TAU_GEN: f64 = 1e-9;

/// Hessian eigenvalue cutoff (×max |eigenvalue|).
pub const TAU_EIG: f64 = 1e-6;

/// Stationarity residual gate for accepting a point as critical (×scale,
/// where scale is circumradius times perimeter or its spatial analogue).
pub const TAU_CRIT: f64 = 1e-7;

/// Classification residual threshold (×polygon diameter).
pub const TAU_CLASS: f64 = 1e-6;

/// Default SW-invariance alignment tolerance (×polygon diameter).
pub const SW_TOL: f64 = 1e-7;

/// Relative bisection target for circumradius and zig-zag roots.
pub const BISECT_REL: f64 = 1e-13;
