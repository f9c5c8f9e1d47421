use crate::error::{GeomError, Result};
use crate::model::Point;
use crate::planar::{self, Location, SegmentHit, Vec2};
use crate::polygon::{ContainmentClass, GeodesicPolygon};

fn require_not_exterior(a: &GeodesicPolygon, p: Point, eps: f64, what: &str) -> Result<()> {
    if p.model() != a.model() {
        return Err(GeomError::ModelMismatch(a.model(), p.model()));
    }
    if a.locate_chart(p.chart(), eps) == ContainmentClass::Exterior {
        return Err(GeomError::Precondition(format!("{what} ({}, {}) lies outside the polygon", p.u, p.v)));
    }
    Ok(())
}

/// Sorted parameters along `[p q]` where it meets the boundary, with 0 and 1.
fn boundary_params(a: &GeodesicPolygon, p: Vec2, q: Vec2, eps: f64) -> Vec<f64> {
    let mut ts = vec![0.0, 1.0];
    for (ea, eb) in a.edges() {
        match planar::segment_hit(p, q, ea, eb, eps) {
            SegmentHit::None => {}
            SegmentHit::Point { t, .. } => ts.push(t),
            SegmentHit::Overlap { t0, t1 } => {
                ts.push(t0);
                ts.push(t1);
            }
        }
    }
    ts.sort_by(f64::total_cmp);
    ts.dedup_by(|x, y| (*x - *y).abs() <= 1e-14);
    ts
}

/// Parameter intervals of `[p q]` that run through the exterior of `a`.
pub(crate) fn exterior_intervals(a: &GeodesicPolygon, p: Vec2, q: Vec2, eps: f64) -> Vec<(f64, f64)> {
    let ts = boundary_params(a, p, q, eps);
    ts.windows(2)
        .filter(|w| planar::locate(a.chart(), p.lerp(q, 0.5 * (w[0] + w[1])), eps) == Location::Outside)
        .map(|w| (w[0], w[1]))
        .collect()
}

/// Chart-level visibility for callers that have already checked the
/// endpoints.
pub(crate) fn sees_chart(a: &GeodesicPolygon, p: Vec2, q: Vec2, eps: f64) -> bool {
    if p.dist(q) <= crate::tol::EPS_PT {
        return true;
    }
    let ts = boundary_params(a, p, q, eps);
    ts.windows(2)
        .all(|w| planar::locate(a.chart(), p.lerp(q, 0.5 * (w[0] + w[1])), eps) != Location::Outside)
}

/// Whether `p` sees `q` via `a`. Exact: every boundary crossing of `[pq]` is
/// enumerated and the midpoint of each piece in between is classified.
pub fn sees(a: &GeodesicPolygon, p: Point, q: Point, eps: f64) -> Result<bool> {
    require_not_exterior(a, p, eps, "p")?;
    require_not_exterior(a, q, eps, "q")?;
    Ok(sees_chart(a, p.chart(), q.chart(), eps))
}

/// The first exterior stretch of `[a b]`: two boundary points whose open
/// segment misses `A`. `None` when `[a b]` lies in `A`.
pub fn gap_points(poly: &GeodesicPolygon, a: Point, b: Point, eps: f64) -> Result<Option<(Point, Point)>> {
    require_not_exterior(poly, a, eps, "a")?;
    require_not_exterior(poly, b, eps, "b")?;
    let (ac, bc) = (a.chart(), b.chart());
    if ac.dist(bc) <= crate::tol::EPS_PT {
        return Ok(None);
    }
    Ok(exterior_intervals(poly, ac, bc, eps).first().map(|&(t0, t1)| {
        (
            Point::from_chart_unchecked(poly.model(), ac.lerp(bc, t0)),
            Point::from_chart_unchecked(poly.model(), ac.lerp(bc, t1)),
        )
    }))
}
