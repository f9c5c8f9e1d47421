//! Numerical tolerances. All values are absolute chart-coordinate distances
//! except [`EPS_ANGLE`], which is in radians. Scenes are expected to have
//! O(1) chart extent.

/// Two points closer than this in the chart are the same point.
pub const EPS_PT: f64 = 1e-12;
/// Default band for "on a geodesic" / "on the boundary" classification.
pub const EPS_ON: f64 = 1e-9;
/// Klein points must satisfy `u² + v² < 1 − EPS_BOUNDARY`.
pub const EPS_BOUNDARY: f64 = 1e-9;
/// A vertex is extreme iff its metric interior angle is below `π − EPS_ANGLE`.
pub const EPS_ANGLE: f64 = 1e-7;
/// Regions with chart area at or below this are treated as empty.
pub const EPS_AREA: f64 = 1e-14;
