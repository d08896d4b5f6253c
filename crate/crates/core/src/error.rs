//! Error types, one enum per subsystem.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LinkageError {
    #[error("a linkage needs at least 3 bars, got {0}")]
    TooFewBars(usize),
    #[error("bar length {index} is not positive: {value}")]
    NonPositiveLength { index: usize, value: f64 },
}

#[derive(Debug, Error)]
pub enum CyclicError {
    #[error("orientation string has length {got}, linkage has {expected} bars")]
    SignLengthMismatch { got: usize, expected: usize },
    #[error("orientation entries must be +1 or -1")]
    BadSign,
    #[error(
        "root at r = {r} sits within the genericity margin of the central radius {central_r} \
         (edge {edge}); perturb the lengths to split it off the boundary"
    )]
    NonGenericCentral { r: f64, central_r: f64, edge: usize },
    #[error("delta = {delta} is below the degeneracy threshold; the planar index formula does not apply")]
    DegenerateDelta { delta: f64 },
    #[error("configuration is central; per-edge orientations are ambiguous there")]
    CentralConfiguration,
    #[error("equilateral enumeration needs odd n, got {0}")]
    OddOnly(usize),
}

#[derive(Debug, Error)]
pub enum SwapError {
    #[error("swap at vertex {index} undefined: neighbouring vertices coincide")]
    DegenerateSwap { index: usize },
}

#[derive(Debug, Error)]
pub enum MorseError {
    #[error("index formula gave {raw}, outside [0, {max}]; input data is inconsistent")]
    IndexOutOfRange { raw: i64, max: usize },
    #[error("point is not critical: stationarity residual {gradient_norm} exceeds {threshold}")]
    NotCritical { gradient_norm: f64, threshold: f64 },
    #[error("constraint Jacobian rank-deficient: null space dimension {got}, expected {expected}")]
    RankDeficient { got: usize, expected: usize },
    #[error("gauge slice singular at this configuration and no fallback pin is available")]
    GaugeFailure,
    #[error("delta changes sign at t = {t}; the deformation path is invalid")]
    DeltaCrossing { t: f64 },
    #[error("angle closure drifts by {drift} at t = {t}")]
    ClosureViolation { t: f64, drift: f64 },
    #[error("start and target winding numbers differ ({start} vs {target}); no linear angle path connects them")]
    WindingMismatch { start: i32, target: i32 },
    #[error("target has more edges ({target}) than the start ({start})")]
    TargetTooLarge { start: usize, target: usize },
    #[error("edge {edge}: start and target orientations conflict along the linear path")]
    SignConflict { edge: usize },
    #[error(
        "contraction bookkeeping gives end index {computed}, target formula index is {expected}"
    )]
    IndexBookkeeping { computed: usize, expected: usize },
    #[error(transparent)]
    Cyclic(#[from] CyclicError),
}

#[derive(Debug, Error)]
pub enum SpatialError {
    #[error("zig-zag construction needs even n, got {0}")]
    OddN(usize),
    #[error("sign string has length {got}, linkage has {expected} bars")]
    SignLengthMismatch { got: usize, expected: usize },
    #[error(
        "critical point passes the gradient test but fits no class \
         (planarity {planarity:.3e}, cyclicity {cyclicity:.3e}, parallel {parallel:.3e}, coplanarity {coplanarity:.3e})"
    )]
    Unclassifiable {
        planarity: f64,
        cyclicity: f64,
        parallel: f64,
        coplanarity: f64,
    },
    #[error("no search trial converged out of {trials}")]
    NoConvergence { trials: usize },
    #[error(transparent)]
    Morse(#[from] MorseError),
}

#[derive(Debug, Error)]
pub enum TopologyError {
    #[error("linkage is not generic: subset {witness:?} sums to half the perimeter")]
    GenericityError { witness: Vec<usize> },
    #[error("subset enumeration is capped at n = 24, got {0}")]
    NOverflow(usize),
    #[error("equilateral closed form needs odd n, got {0}")]
    OddOnly(usize),
}
