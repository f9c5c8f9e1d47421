//! Compact sets represented as simple geodesic polygons.

use std::fmt;

use crate::error::{GeomError, Result};
use crate::model::{angle_at, ModelId, Point};
use crate::planar::{self, Location, SegmentHit, Vec2};
use crate::tol::{EPS_ON, EPS_PT};

/// Counterclockwise simple polygon with geodesic edges, implicitly closed.
#[derive(Debug, Clone, PartialEq)]
pub struct GeodesicPolygon {
    model: ModelId,
    vertices: Vec<Point>,
    chart: Vec<Vec2>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContainmentClass {
    Interior,
    Boundary,
    Exterior,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    TooFewVertices(usize),
    ModelMismatch { index: usize },
    OutOfDomain { index: usize },
    DuplicateVertex { index: usize },
    CollinearVertex { index: usize },
    SelfIntersection { edge_a: usize, edge_b: usize },
    Clockwise,
    ZeroArea,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooFewVertices(n) => write!(f, "polygon has {n} vertices, need at least 3"),
            Violation::ModelMismatch { index } => write!(f, "vertex {index} belongs to a different model"),
            Violation::OutOfDomain { index } => write!(f, "vertex {index} lies outside the model domain"),
            Violation::DuplicateVertex { index } => write!(f, "vertex {index} repeats its predecessor"),
            Violation::CollinearVertex { index } => write!(f, "vertex {index} is collinear with its neighbours"),
            Violation::SelfIntersection { edge_a, edge_b } => {
                write!(f, "edges {edge_a} and {edge_b} intersect")
            }
            Violation::Clockwise => write!(f, "vertices are ordered clockwise"),
            Violation::ZeroArea => write!(f, "polygon has zero area"),
        }
    }
}

/// Lists every violation of the polygon invariants; empty means valid.
pub fn validate(model: ModelId, vertices: &[Point]) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = vertices.len();
    if n < 3 {
        out.push(Violation::TooFewVertices(n));
        return out;
    }
    for (i, p) in vertices.iter().enumerate() {
        if p.model() != model {
            out.push(Violation::ModelMismatch { index: i });
        } else if !model.in_domain(p.chart()) {
            out.push(Violation::OutOfDomain { index: i });
        }
    }
    let c: Vec<Vec2> = vertices.iter().map(Point::chart).collect();
    validate_chart(&c, &mut out);
    out
}

fn validate_chart(c: &[Vec2], out: &mut Vec<Violation>) {
    let n = c.len();
    let mut has_duplicate = false;
    for i in 0..n {
        if c[i].dist(c[(i + n - 1) % n]) <= EPS_PT {
            out.push(Violation::DuplicateVertex { index: i });
            has_duplicate = true;
        }
    }
    for i in 0..n {
        let (prev, cur, next) = (c[(i + n - 1) % n], c[i], c[(i + 1) % n]);
        if prev.dist(next) > EPS_PT && planar::signed_dist(prev, next, cur).abs() <= EPS_ON {
            out.push(Violation::CollinearVertex { index: i });
        }
    }
    if !has_duplicate {
        for i in 0..n {
            for j in i + 1..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                let hit = planar::segment_hit(c[i], c[(i + 1) % n], c[j], c[(j + 1) % n], EPS_ON);
                let bad = match hit {
                    SegmentHit::None => false,
                    SegmentHit::Overlap { .. } => true,
                    SegmentHit::Point { at, .. } => {
                        if adjacent {
                            let shared = if j == i + 1 { c[j] } else { c[0] };
                            at.dist(shared) > EPS_ON
                        } else {
                            true
                        }
                    }
                };
                if bad {
                    out.push(Violation::SelfIntersection { edge_a: i, edge_b: j });
                }
            }
        }
    }
    let area = planar::signed_area(c);
    if area.abs() <= crate::tol::EPS_AREA {
        out.push(Violation::ZeroArea);
    } else if area < 0.0 {
        out.push(Violation::Clockwise);
    }
}

impl GeodesicPolygon {
    pub fn new(model: ModelId, vertices: Vec<Point>) -> Result<Self> {
        let violations = validate(model, &vertices);
        if !violations.is_empty() {
            return Err(GeomError::InvalidPolygon(violations));
        }
        Ok(Self::from_points_unchecked(model, vertices))
    }

    /// Builds from chart coordinates, validating.
    pub fn from_chart(model: ModelId, coords: &[(f64, f64)]) -> Result<Self> {
        let pts = coords
            .iter()
            .map(|&(u, v)| Point::new(model, u, v))
            .collect::<Result<Vec<_>>>()?;
        Self::new(model, pts)
    }

    pub(crate) fn from_points_unchecked(model: ModelId, vertices: Vec<Point>) -> Self {
        let chart = vertices.iter().map(Point::chart).collect();
        GeodesicPolygon { model, vertices, chart }
    }

    pub(crate) fn from_chart_unchecked(model: ModelId, chart: Vec<Vec2>) -> Self {
        let vertices = chart.iter().map(|&c| Point::from_chart_unchecked(model, c)).collect();
        GeodesicPolygon { model, vertices, chart }
    }

    pub fn model(&self) -> ModelId {
        self.model
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn chart(&self) -> &[Vec2] {
        &self.chart
    }

    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i % self.vertices.len()]
    }

    /// Edge `i` runs from vertex `i` to vertex `i + 1`.
    pub fn edge(&self, i: usize) -> (Vec2, Vec2) {
        let n = self.chart.len();
        (self.chart[i % n], self.chart[(i + 1) % n])
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vec2, Vec2)> + '_ {
        (0..self.chart.len()).map(move |i| self.edge(i))
    }

    pub fn chart_area(&self) -> f64 {
        planar::signed_area(&self.chart)
    }

    /// Chart bounding box as `(min, max)`.
    pub fn bbox(&self) -> (Vec2, Vec2) {
        let mut lo = Vec2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for c in &self.chart {
            lo = Vec2::new(lo.x.min(c.x), lo.y.min(c.y));
            hi = Vec2::new(hi.x.max(c.x), hi.y.max(c.y));
        }
        (lo, hi)
    }

    pub fn validate(&self) -> Vec<Violation> {
        validate(self.model, &self.vertices)
    }

    /// Maps every vertex through `f`, keeping the order.
    pub fn map_points(&self, f: impl Fn(Point) -> Result<Point>) -> Result<Self> {
        let pts = self.vertices.iter().map(|&p| f(p)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_points_unchecked(self.model, pts))
    }

    pub(crate) fn locate_chart(&self, c: Vec2, eps: f64) -> ContainmentClass {
        match planar::locate(&self.chart, c, eps) {
            Location::Inside => ContainmentClass::Interior,
            Location::OnBoundary => ContainmentClass::Boundary,
            Location::Outside => ContainmentClass::Exterior,
        }
    }

    /// Index of the vertex within `eps` of `c`, if any.
    pub(crate) fn vertex_at(&self, c: Vec2, eps: f64) -> Option<usize> {
        self.chart.iter().position(|v| v.dist(c) <= eps)
    }
}

/// Containment of `p` in `poly` with a boundary band of width `eps`.
///
/// Panics if `p` belongs to a different model.
pub fn contains(poly: &GeodesicPolygon, p: Point, eps: f64) -> ContainmentClass {
    assert_eq!(poly.model, p.model(), "contains: model mismatch");
    poly.locate_chart(p.chart(), eps)
}

/// Metric interior angle at vertex `i`.
pub fn interior_angle(poly: &GeodesicPolygon, i: usize) -> Result<f64> {
    let n = poly.len();
    if i >= n {
        return Err(GeomError::IndexOutOfRange { index: i, len: n });
    }
    angle_at(poly.vertices[i], poly.vertices[(i + 1) % n], poly.vertices[(i + n - 1) % n])
}

/// Removes near-duplicate and collinear vertices from a chart loop. Returns
/// `None` when fewer than three vertices or no area remain.
pub(crate) fn clean_loop(pts: &[Vec2], eps: f64) -> Option<Vec<Vec2>> {
    let mut cur: Vec<Vec2> = pts.to_vec();
    loop {
        let n = cur.len();
        if n < 3 {
            return None;
        }
        let mut changed = false;
        let mut out: Vec<Vec2> = Vec::with_capacity(n);
        for &p in &cur {
            if out.last().is_some_and(|l: &Vec2| l.dist(p) <= eps) {
                changed = true;
            } else {
                out.push(p);
            }
        }
        while out.len() > 1 && out[0].dist(out[out.len() - 1]) <= eps {
            out.pop();
            changed = true;
        }
        let n = out.len();
        if n < 3 {
            return None;
        }
        let mut keep = vec![true; n];
        for i in 0..n {
            let prev = out[(i + n - 1) % n];
            let next = out[(i + 1) % n];
            if planar::dist_to_segment(out[i], prev, next) <= eps {
                keep[i] = false;
                changed = true;
                break;
            }
        }
        cur = out.into_iter().zip(keep).filter_map(|(p, k)| k.then_some(p)).collect();
        if !changed {
            break;
        }
    }
    (cur.len() >= 3 && planar::signed_area(&cur).abs() > crate::tol::EPS_AREA).then_some(cur)
}
