use crate::error::{GeomError, Result};
use crate::model::{chart_distance, Point};
use crate::planar::{self, Vec2};
use crate::polygon::{ContainmentClass, GeodesicPolygon};

/// Nearest point of `A` on the ray from `x` in chart direction `theta`, with
/// its metric distance from `x`. A point of `A` hits itself at distance 0.
pub fn ray_hits(a: &GeodesicPolygon, x: Point, theta: f64, eps: f64) -> Option<(Point, f64)> {
    assert_eq!(a.model(), x.model(), "ray_hits: model mismatch");
    let c = x.chart();
    if a.locate_chart(c, eps) != ContainmentClass::Exterior {
        return Some((x, 0.0));
    }
    let dir = Vec2::from_angle(theta);
    let t = a
        .edges()
        .filter_map(|(p, q)| planar::ray_segment_param(c, dir, p, q, eps))
        .fold(f64::INFINITY, f64::min);
    if !t.is_finite() {
        return None;
    }
    let hit = c + dir * t;
    Some((Point::from_chart_unchecked(a.model(), hit), chart_distance(a.model(), c, hit)))
}

/// The ray condition at an exterior point: some ray with vertex `x` meets `A`.
///
/// Read literally this holds for every non-empty `A` (aim at a vertex), which
/// is what is implemented; the witness direction points at vertex 0.
pub fn ray_condition(a: &GeodesicPolygon, x: Point, eps: f64) -> Result<(bool, f64)> {
    if x.model() != a.model() {
        return Err(GeomError::ModelMismatch(a.model(), x.model()));
    }
    if a.locate_chart(x.chart(), eps) != ContainmentClass::Exterior {
        return Err(GeomError::Precondition(format!("({}, {}) is not exterior to the polygon", x.u, x.v)));
    }
    let theta = planar::norm_angle((a.chart()[0] - x.chart()).angle());
    Ok((ray_hits(a, x, theta, eps).is_some(), theta))
}
