//! Ambient geometry for the two shipped surfaces.
//!
//! Both models are presented through a global chart whose geodesics are
//! straight lines: the identity chart of the Euclidean plane and the
//! Beltrami–Klein disk of the hyperbolic plane. Incidence is decided in the
//! chart; [`distance`] and [`angle_at`] use the model metric.

use std::f64::consts::TAU;
use std::fmt;

use crate::error::{GeomError, Result};
use crate::hyperbolic;
use crate::planar::{self, SegmentHit, Vec2};
use crate::tol::{EPS_BOUNDARY, EPS_ON, EPS_PT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModelId {
    Euclidean,
    HyperbolicKlein,
}

impl ModelId {
    pub const ALL: [ModelId; 2] = [ModelId::Euclidean, ModelId::HyperbolicKlein];

    pub fn name(self) -> &'static str {
        match self {
            ModelId::Euclidean => "euclidean",
            ModelId::HyperbolicKlein => "hyperbolic-klein",
        }
    }

    pub fn from_name(s: &str) -> Option<ModelId> {
        match s {
            "euclidean" => Some(ModelId::Euclidean),
            "hyperbolic-klein" => Some(ModelId::HyperbolicKlein),
            _ => None,
        }
    }

    /// Whether a chart position is a valid point of this model.
    pub fn in_domain(self, c: Vec2) -> bool {
        match self {
            ModelId::Euclidean => c.x.is_finite() && c.y.is_finite(),
            ModelId::HyperbolicKlein => c.x.is_finite() && c.y.is_finite() && c.norm2() < 1.0 - EPS_BOUNDARY,
        }
    }
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn same_model(a: ModelId, b: ModelId) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(GeomError::ModelMismatch(a, b))
    }
}

/// A point of a model surface, stored by its chart coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    model: ModelId,
    pub u: f64,
    pub v: f64,
}

impl Point {
    pub fn new(model: ModelId, u: f64, v: f64) -> Result<Point> {
        if model.in_domain(Vec2::new(u, v)) {
            Ok(Point { model, u, v })
        } else {
            Err(GeomError::OutOfDomain { model, u, v })
        }
    }

    /// Panics on non-finite input.
    pub fn euclidean(u: f64, v: f64) -> Point {
        Point::new(ModelId::Euclidean, u, v).expect("finite coordinates")
    }

    pub fn klein(u: f64, v: f64) -> Result<Point> {
        Point::new(ModelId::HyperbolicKlein, u, v)
    }

    pub(crate) fn from_chart(model: ModelId, c: Vec2) -> Result<Point> {
        Point::new(model, c.x, c.y)
    }

    /// Skips the domain check; callers guarantee the position is valid up to
    /// rounding (e.g. a point on a chord between two valid points).
    pub(crate) fn from_chart_unchecked(model: ModelId, c: Vec2) -> Point {
        Point { model, u: c.x, v: c.y }
    }

    pub fn model(&self) -> ModelId {
        self.model
    }

    pub fn chart(&self) -> Vec2 {
        Vec2::new(self.u, self.v)
    }
}

/// The minimizing geodesic `[a b]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodesicSegment {
    pub a: Point,
    pub b: Point,
    pub length: f64,
}

impl GeodesicSegment {
    pub fn new(a: Point, b: Point) -> Result<Self> {
        same_model(a.model, b.model)?;
        if a.chart().dist(b.chart()) <= EPS_PT {
            return Err(GeomError::DegenerateAnchor);
        }
        Self::new_degenerate_allowed(a, b)
    }

    pub fn new_degenerate_allowed(a: Point, b: Point) -> Result<Self> {
        let length = distance(a, b)?;
        Ok(GeodesicSegment { a, b, length })
    }

    pub fn model(&self) -> ModelId {
        self.a.model
    }
}

/// The ray `R(vertex, through)`, clipped to the model domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodesicRay {
    pub vertex: Point,
    pub through: Point,
}

impl GeodesicRay {
    pub fn new(vertex: Point, through: Point) -> Result<Self> {
        same_model(vertex.model, through.model)?;
        if vertex.chart().dist(through.chart()) <= EPS_PT {
            return Err(GeomError::DegenerateAnchor);
        }
        Ok(GeodesicRay { vertex, through })
    }

    pub fn direction(&self) -> Vec2 {
        self.through.chart() - self.vertex.chart()
    }
}

/// Complete geodesic through two distinct anchors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geodesic {
    pub p: Point,
    pub q: Point,
}

impl Geodesic {
    pub fn model(&self) -> ModelId {
        self.p.model
    }

    pub fn reversed(&self) -> Geodesic {
        Geodesic { p: self.q, q: self.p }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    On,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
            Side::On => Side::On,
        }
    }
}

/// Closed side of a complete geodesic, relative to its anchor order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlane {
    pub boundary: Geodesic,
    pub side: Side,
}

impl HalfPlane {
    pub fn new(boundary: Geodesic, side: Side) -> Result<Self> {
        if side == Side::On {
            return Err(GeomError::Precondition("a half-plane side must be Left or Right".into()));
        }
        Ok(HalfPlane { boundary, side })
    }

    /// The closed left side of the directed geodesic `p → q`.
    pub fn left_of(p: Point, q: Point) -> Result<Self> {
        Ok(HalfPlane { boundary: geodesic_through(p, q)?, side: Side::Left })
    }

    pub fn contains(&self, p: Point, eps: f64) -> Result<bool> {
        let s = side_of(&self.boundary, p, eps)?;
        Ok(s == Side::On || s == self.side)
    }

    /// Signed chart distance, positive inside.
    pub(crate) fn signed_depth(&self, c: Vec2) -> f64 {
        let d = planar::signed_dist(self.boundary.p.chart(), self.boundary.q.chart(), c);
        match self.side {
            Side::Right => -d,
            _ => d,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum IsoKind {
    Euclidean { angle: f64, tu: f64, tv: f64 },
    Klein { m: [[f64; 3]; 3] },
}

/// Distance-preserving map of a model onto itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isometry {
    kind: IsoKind,
}

impl Isometry {
    pub fn identity(model: ModelId) -> Isometry {
        match model {
            ModelId::Euclidean => Isometry::euclidean(0.0, 0.0, 0.0),
            ModelId::HyperbolicKlein => Isometry { kind: IsoKind::Klein { m: hyperbolic::rotation(0.0) } },
        }
    }

    /// Rotation by `angle` about the origin followed by translation `(tu, tv)`.
    pub fn euclidean(angle: f64, tu: f64, tv: f64) -> Isometry {
        Isometry { kind: IsoKind::Euclidean { angle, tu, tv } }
    }

    /// Rotation by `pre`, boost with rapidity `rapidity` along the chart `u`
    /// axis, then rotation by `post`.
    pub fn klein(pre: f64, rapidity: f64, post: f64) -> Isometry {
        let m = hyperbolic::mat_mul(
            &hyperbolic::rotation(post),
            &hyperbolic::mat_mul(&hyperbolic::boost_u(rapidity), &hyperbolic::rotation(pre)),
        );
        Isometry { kind: IsoKind::Klein { m } }
    }

    pub fn model(&self) -> ModelId {
        match self.kind {
            IsoKind::Euclidean { .. } => ModelId::Euclidean,
            IsoKind::Klein { .. } => ModelId::HyperbolicKlein,
        }
    }

    /// Matrix acting on homogeneous chart coordinates `(u, v, 1)`.
    pub fn matrix(&self) -> [[f64; 3]; 3] {
        match self.kind {
            IsoKind::Euclidean { angle, tu, tv } => {
                let (s, c) = angle.sin_cos();
                [[c, -s, tu], [s, c, tv], [0.0, 0.0, 1.0]]
            }
            IsoKind::Klein { m } => m,
        }
    }

    pub(crate) fn apply_chart(&self, c: Vec2) -> Vec2 {
        let m = self.matrix();
        hyperbolic::project(hyperbolic::mat_apply(&m, [c.x, c.y, 1.0]))
    }
}

pub fn distance(p: Point, q: Point) -> Result<f64> {
    same_model(p.model, q.model)?;
    Ok(chart_distance(p.model, p.chart(), q.chart()))
}

pub(crate) fn chart_distance(model: ModelId, p: Vec2, q: Vec2) -> f64 {
    match model {
        ModelId::Euclidean => p.dist(q),
        ModelId::HyperbolicKlein => hyperbolic::distance(p, q),
    }
}

/// Metric distance from `x` to the geodesic segment `[a b]` (chart positions).
pub(crate) fn chart_distance_to_segment(model: ModelId, x: Vec2, a: Vec2, b: Vec2) -> f64 {
    match model {
        ModelId::Euclidean => planar::dist_to_segment(x, a, b),
        ModelId::HyperbolicKlein => {
            if a.dist(b) <= EPS_PT {
                hyperbolic::distance(x, a)
            } else {
                hyperbolic::distance_to_segment(x, a, b)
            }
        }
    }
}

pub fn geodesic_through(p: Point, q: Point) -> Result<Geodesic> {
    same_model(p.model, q.model)?;
    if p.chart().dist(q.chart()) <= EPS_PT {
        return Err(GeomError::DegenerateAnchor);
    }
    Ok(Geodesic { p, q })
}

/// Chart-affine interpolation `a + t(b − a)`.
pub fn point_on(s: &GeodesicSegment, t: f64) -> Result<Point> {
    if !(0.0..=1.0).contains(&t) {
        return Err(GeomError::ParameterRange(t));
    }
    Ok(Point::from_chart_unchecked(s.model(), s.a.chart().lerp(s.b.chart(), t)))
}

pub fn side_of(g: &Geodesic, p: Point, eps: f64) -> Result<Side> {
    same_model(g.model(), p.model)?;
    let (a, b) = (g.p.chart(), g.q.chart());
    if a.dist(b) <= EPS_PT {
        return Err(GeomError::DegenerateAnchor);
    }
    let d = planar::signed_dist(a, b, p.chart());
    Ok(if d.abs() <= eps {
        Side::On
    } else if d > 0.0 {
        Side::Left
    } else {
        Side::Right
    })
}

pub fn intersect_geodesics(g1: &Geodesic, g2: &Geodesic) -> Result<Option<Point>> {
    same_model(g1.model(), g2.model())?;
    let (a1, b1, a2, b2) = (g1.p.chart(), g1.q.chart(), g2.p.chart(), g2.q.chart());
    match planar::line_params(a1, b1, a2, b2) {
        Some((t, _)) => {
            let c = a1.lerp(b1, t);
            Ok(g1.model().in_domain(c).then(|| Point::from_chart_unchecked(g1.model(), c)))
        }
        None => {
            if planar::signed_dist(a1, b1, a2).abs() <= EPS_ON {
                Err(GeomError::CoincidentGeodesics)
            } else {
                Ok(None)
            }
        }
    }
}

/// Common point of two segments; collinear overlap is reported as
/// [`GeomError::Overlap`].
pub fn intersect_segment_segment(s1: &GeodesicSegment, s2: &GeodesicSegment, eps: f64) -> Result<Option<Point>> {
    same_model(s1.model(), s2.model())?;
    match planar::segment_hit(s1.a.chart(), s1.b.chart(), s2.a.chart(), s2.b.chart(), eps) {
        SegmentHit::None => Ok(None),
        SegmentHit::Point { at, .. } => Ok(Some(Point::from_chart_unchecked(s1.model(), at))),
        SegmentHit::Overlap { .. } => Err(GeomError::Overlap),
    }
}

/// Hit of a ray with a segment nearest the ray vertex (inclusive of segment
/// endpoints within `eps`).
pub fn intersect_ray_segment(r: &GeodesicRay, s: &GeodesicSegment, eps: f64) -> Result<Option<Point>> {
    same_model(r.vertex.model, s.model())?;
    let (o, d) = (r.vertex.chart(), r.direction());
    let (a, b) = (s.a.chart(), s.b.chart());
    if planar::signed_dist(o, o + d, a).abs() <= eps && planar::signed_dist(o, o + d, b).abs() <= eps {
        let ta = d.dot(a - o);
        let tb = d.dot(b - o);
        if ta > 0.0 && tb > 0.0 {
            return Err(GeomError::Overlap);
        }
    }
    Ok(planar::ray_segment_param(o, d, a, b, eps)
        .map(|t| Point::from_chart_unchecked(s.model(), o + d * t)))
}

/// Metric angle at `p` swept counterclockwise from the geodesic toward `a` to
/// the geodesic toward `b`, in `[0, 2π)`.
pub fn angle_at(p: Point, a: Point, b: Point) -> Result<f64> {
    same_model(p.model, a.model)?;
    same_model(p.model, b.model)?;
    let (pc, ac, bc) = (p.chart(), a.chart(), b.chart());
    if pc.dist(ac) <= EPS_PT || pc.dist(bc) <= EPS_PT {
        return Err(GeomError::DegenerateAngle);
    }
    let raw = match p.model {
        ModelId::Euclidean => {
            let (da, db) = (ac - pc, bc - pc);
            da.cross(db).atan2(da.dot(db))
        }
        ModelId::HyperbolicKlein => hyperbolic::oriented_angle(pc, ac, bc),
    };
    let r = raw.rem_euclid(TAU);
    Ok(if r >= TAU { 0.0 } else { r })
}

/// Image of `p`. Klein images within `ε_boundary` of the ideal circle are
/// rejected rather than clamped.
pub fn apply_isometry(phi: &Isometry, p: Point) -> Result<Point> {
    same_model(phi.model(), p.model)?;
    Point::from_chart(p.model, phi.apply_chart(p.chart()))
}
