use std::f64::consts::PI;

use crate::error::{GeomError, Result};
use crate::model::{distance, Point};
use crate::polygon::{interior_angle, ContainmentClass, GeodesicPolygon};
use crate::tol::EPS_ANGLE;

/// Extreme vertices of a polygon together with every vertex's metric interior
/// angle.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremeSet {
    pub indices: Vec<usize>,
    pub angles: Vec<f64>,
}

impl ExtremeSet {
    pub fn contains(&self, i: usize) -> bool {
        self.indices.contains(&i)
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// Vertices whose metric interior angle is below `π − ε_angle`. Edge points,
/// straight vertices and reflex vertices all sit inside a short segment of the
/// polygon, so nothing else is extreme.
pub fn extreme_points(a: &GeodesicPolygon) -> ExtremeSet {
    let angles: Vec<f64> = (0..a.len())
        .map(|i| interior_angle(a, i).expect("index in range"))
        .collect();
    let indices = angles
        .iter()
        .enumerate()
        .filter(|(_, &ang)| ang < PI - EPS_ANGLE)
        .map(|(i, _)| i)
        .collect();
    ExtremeSet { indices, angles }
}

/// The vertex farthest from an exterior point `p` (lowest index on ties).
///
/// Distance to a point is convex along geodesics on both surfaces, so its
/// maximum over the polygon is reached at a vertex.
pub fn farthest_extreme(a: &GeodesicPolygon, p: Point, eps: f64) -> Result<(usize, Point)> {
    if p.model() != a.model() {
        return Err(GeomError::ModelMismatch(a.model(), p.model()));
    }
    if a.locate_chart(p.chart(), eps) != ContainmentClass::Exterior {
        return Err(GeomError::Precondition(format!("({}, {}) is not exterior to the polygon", p.u, p.v)));
    }
    let mut best = (0, f64::NEG_INFINITY);
    for (i, &v) in a.vertices().iter().enumerate() {
        let d = distance(p, v)?;
        if d > best.1 * (1.0 + 1e-12) {
            best = (i, d);
        }
    }
    Ok((best.0, a.vertex(best.0)))
}
