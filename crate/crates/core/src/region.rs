//! Regions (possibly empty simply connected polygons) and the set operations
//! the kernel constructions need.

use crate::model::{chart_distance_to_segment, HalfPlane, Isometry, ModelId, Point};
use crate::overlay;
use crate::planar::{self, Location, Vec2};
use crate::polygon::{clean_loop, GeodesicPolygon};
use crate::error::Result;

/// A polygon or the empty set. `multi_component` records that the exact
/// result had several components (or holes) and only the largest was kept.
#[derive(Debug, Clone, PartialEq)]
pub struct Region {
    model: ModelId,
    polygon: Option<GeodesicPolygon>,
    multi_component: bool,
}

impl Region {
    pub fn empty(model: ModelId) -> Region {
        Region { model, polygon: None, multi_component: false }
    }

    pub fn from_polygon(p: GeodesicPolygon) -> Region {
        Region { model: p.model(), polygon: Some(p), multi_component: false }
    }

    pub fn model(&self) -> ModelId {
        self.model
    }

    pub fn polygon(&self) -> Option<&GeodesicPolygon> {
        self.polygon.as_ref()
    }

    pub fn into_polygon(self) -> Option<GeodesicPolygon> {
        self.polygon
    }

    pub fn is_empty(&self) -> bool {
        self.polygon.is_none()
    }

    pub fn multi_component(&self) -> bool {
        self.multi_component
    }

    /// Largest-area loop wins; any extra loop or hole raises the flag.
    pub(crate) fn from_loops(model: ModelId, loops: Vec<Vec<Vec2>>, holes: usize) -> Region {
        let multi = loops.len() > 1 || holes > 0;
        let best = loops
            .into_iter()
            .max_by(|a, b| planar::signed_area(a).total_cmp(&planar::signed_area(b)));
        Region {
            model,
            polygon: best.map(|l| GeodesicPolygon::from_chart_unchecked(model, l)),
            multi_component: multi,
        }
    }

    pub(crate) fn from_loop(model: ModelId, pts: &[Vec2], eps: f64) -> Region {
        match clean_loop(pts, eps) {
            Some(l) if planar::signed_area(&l) > 0.0 => {
                Region::from_polygon(GeodesicPolygon::from_chart_unchecked(model, l))
            }
            _ => Region::empty(model),
        }
    }

    pub fn with_flag(mut self, flag: bool) -> Region {
        self.multi_component |= flag;
        self
    }

    /// Image under an isometry (the model's isometries map chart polygons to
    /// chart polygons and preserve orientation).
    pub fn apply(&self, phi: &Isometry) -> Result<Region> {
        let polygon = match &self.polygon {
            Some(p) => Some(p.map_points(|q| crate::model::apply_isometry(phi, q))?),
            None => None,
        };
        Ok(Region { model: self.model, polygon, multi_component: self.multi_component })
    }

    /// Chart centroid, if non-empty.
    pub fn centroid(&self) -> Option<Point> {
        self.polygon
            .as_ref()
            .map(|p| Point::from_chart_unchecked(self.model, planar::centroid(p.chart())))
    }

    pub fn chart_area(&self) -> f64 {
        self.polygon.as_ref().map_or(0.0, GeodesicPolygon::chart_area)
    }
}

/// Convex chart loop clipped to the closed side of `h`. Only valid for convex
/// input; the result is convex.
pub(crate) fn clip_convex(poly: &[Vec2], h: &HalfPlane, eps: f64) -> Vec<Vec2> {
    let n = poly.len();
    let depth = |c: Vec2| {
        let d = h.signed_depth(c);
        if d.abs() <= eps {
            0.0
        } else {
            d
        }
    };
    let mut out = Vec::with_capacity(n + 2);
    for i in 0..n {
        let (cur, nxt) = (poly[i], poly[(i + 1) % n]);
        let (dc, dn) = (depth(cur), depth(nxt));
        if dc >= 0.0 {
            out.push(cur);
        }
        if (dc > 0.0 && dn < 0.0) || (dc < 0.0 && dn > 0.0) {
            out.push(cur.lerp(nxt, dc / (dc - dn)));
        }
    }
    out
}

fn is_chart_convex(c: &[Vec2]) -> bool {
    let n = c.len();
    (0..n).all(|i| planar::orient(c[i], c[(i + 1) % n], c[(i + 2) % n]) >= 0.0)
}

/// `P ∩ h`. Convex polygons are clipped directly; otherwise the half-plane is
/// realized as a large convex polygon and intersected exactly.
pub fn clip_halfplane(p: &GeodesicPolygon, h: &HalfPlane, eps: f64) -> Region {
    assert_eq!(p.model(), h.boundary.model(), "clip_halfplane: model mismatch");
    if is_chart_convex(p.chart()) {
        return Region::from_loop(p.model(), &clip_convex(p.chart(), h, eps), eps);
    }
    let (lo, hi) = p.bbox();
    let pad = (hi - lo).norm() + 1.0;
    let bx = [
        Vec2::new(lo.x - pad, lo.y - pad),
        Vec2::new(hi.x + pad, lo.y - pad),
        Vec2::new(hi.x + pad, hi.y + pad),
        Vec2::new(lo.x - pad, hi.y + pad),
    ];
    let half = clip_convex(&bx, h, eps);
    match clean_loop(&half, eps) {
        Some(hl) => {
            let o = overlay::intersect(p.chart(), &hl, eps);
            Region::from_loops(p.model(), o.loops, o.holes)
        }
        None => Region::empty(p.model()),
    }
}

/// Iterated exact intersection of a set of components with one more loop.
pub(crate) fn intersect_components(
    components: &[Vec<Vec2>],
    with: &[Vec2],
    eps: f64,
) -> (Vec<Vec<Vec2>>, usize) {
    let mut loops = Vec::new();
    let mut holes = 0;
    for c in components {
        let o = overlay::intersect(c, with, eps);
        loops.extend(o.loops);
        holes += o.holes;
    }
    (loops, holes)
}

/// `R1 ∩ R2`. A convex second operand is applied as iterated half-plane clips
/// when the first operand is convex too; everything else goes through the
/// exact boundary overlay.
pub fn intersect_regions(r1: &Region, r2: &Region, eps: f64) -> Region {
    assert_eq!(r1.model, r2.model, "intersect_regions: model mismatch");
    let model = r1.model;
    let (Some(p1), Some(p2)) = (&r1.polygon, &r2.polygon) else {
        return Region::empty(model);
    };
    let flag = r1.multi_component || r2.multi_component;
    if is_chart_convex(p1.chart()) && is_chart_convex(p2.chart()) {
        let mut cur = p1.chart().to_vec();
        for (a, b) in p2.edges() {
            let h = HalfPlane {
                boundary: crate::model::Geodesic {
                    p: Point::from_chart_unchecked(model, a),
                    q: Point::from_chart_unchecked(model, b),
                },
                side: crate::model::Side::Left,
            };
            cur = clip_convex(&cur, &h, eps);
            if cur.len() < 3 {
                return Region::empty(model).with_flag(flag);
            }
        }
        return Region::from_loop(model, &cur, eps).with_flag(flag);
    }
    let o = overlay::intersect(p1.chart(), p2.chart(), eps);
    Region::from_loops(model, o.loops, o.holes).with_flag(flag)
}

fn boundary_samples(p: &GeodesicPolygon, n_samples: usize) -> Vec<Vec2> {
    let c = p.chart();
    let perim: f64 = p.edges().map(|(a, b)| a.dist(b)).sum();
    let mut out: Vec<Vec2> = c.to_vec();
    if n_samples == 0 || perim == 0.0 {
        return out;
    }
    let step = perim / n_samples as f64;
    for (a, b) in p.edges() {
        let len = a.dist(b);
        let k = (len / step).floor() as usize;
        for j in 1..=k {
            out.push(a.lerp(b, j as f64 / (k + 1) as f64));
        }
    }
    out
}

/// Metric distance from a chart point to a polygon region (zero inside).
pub(crate) fn distance_to_polygon(p: &GeodesicPolygon, x: Vec2) -> f64 {
    if planar::locate(p.chart(), x, 0.0) != Location::Outside {
        return 0.0;
    }
    p.edges()
        .map(|(a, b)| chart_distance_to_segment(p.model(), x, a, b))
        .fold(f64::INFINITY, f64::min)
}

/// Symmetric Hausdorff distance estimated from the vertices plus about
/// `n_samples` evenly spread boundary points of each region. Vertex sampling
/// makes the estimate exact whenever the other region is convex.
pub fn hausdorff(r1: &Region, r2: &Region, n_samples: usize) -> f64 {
    assert_eq!(r1.model, r2.model, "hausdorff: model mismatch");
    match (&r1.polygon, &r2.polygon) {
        (None, None) => 0.0,
        (Some(_), None) | (None, Some(_)) => f64::INFINITY,
        (Some(a), Some(b)) => {
            let one_way = |from: &GeodesicPolygon, to: &GeodesicPolygon| {
                boundary_samples(from, n_samples)
                    .into_iter()
                    .map(|x| distance_to_polygon(to, x))
                    .fold(0.0, f64::max)
            };
            one_way(a, b).max(one_way(b, a))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::{geodesic_through, Side};
    use crate::tol::EPS_ON;

    fn e(u: f64, v: f64) -> Point {
        Point::euclidean(u, v)
    }

    fn rect(x0: f64, y0: f64, x1: f64, y1: f64) -> Region {
        Region::from_polygon(
            GeodesicPolygon::from_chart(ModelId::Euclidean, &[(x0, y0), (x1, y0), (x1, y1), (x0, y1)]).unwrap(),
        )
    }

    #[test]
    fn clip_square() {
        let h = HalfPlane::new(geodesic_through(e(0.5, 0.0), e(0.5, 1.0)).unwrap(), Side::Left).unwrap();
        let r = clip_halfplane(&fixtures::square(), &h, EPS_ON);
        assert!(hausdorff(&r, &rect(0.0, 0.0, 0.5, 1.0), 64) < 1e-12);
        let far = HalfPlane::new(geodesic_through(e(-1.0, 0.0), e(-1.0, 1.0)).unwrap(), Side::Left).unwrap();
        assert!(clip_halfplane(&fixtures::square(), &far, EPS_ON).is_empty());
    }

    #[test]
    fn clip_lshape_left_column() {
        let h = HalfPlane::new(geodesic_through(e(1.0, 0.0), e(1.0, 1.0)).unwrap(), Side::Left).unwrap();
        let r = clip_halfplane(&fixtures::lshape(), &h, EPS_ON);
        assert!(!r.multi_component());
        assert!(hausdorff(&r, &rect(0.0, 0.0, 1.0, 2.0), 64) < 1e-12);
        assert_eq!(r.polygon().unwrap().len(), 4);
    }

    #[test]
    fn clip_ushape_disconnects() {
        let h = HalfPlane::new(geodesic_through(e(3.0, 1.5), e(0.0, 1.5)).unwrap(), Side::Right).unwrap();
        let r = clip_halfplane(&fixtures::ushape(), &h, EPS_ON);
        assert!(r.multi_component());
        assert!((r.chart_area() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn region_intersections() {
        let s = Region::from_polygon(fixtures::square());
        assert!(hausdorff(&intersect_regions(&s, &s, EPS_ON), &s, 64) < 1e-12);
        let t = rect(0.5, 0.5, 1.5, 1.5);
        let i = intersect_regions(&s, &t, EPS_ON);
        assert!(hausdorff(&i, &rect(0.5, 0.5, 1.0, 1.0), 64) < 1e-12);
        let l = Region::from_polygon(fixtures::lshape());
        let li = intersect_regions(&l, &t, EPS_ON);
        assert!((li.chart_area() - 0.75).abs() < 1e-12);
        assert!(intersect_regions(&s, &rect(3.0, 3.0, 4.0, 4.0), EPS_ON).is_empty());
    }

    #[test]
    fn hausdorff_basics() {
        let s = Region::from_polygon(fixtures::square());
        let t = rect(0.1, 0.0, 1.1, 1.0);
        assert!((hausdorff(&s, &t, 256) - 0.1).abs() < 1e-12);
        assert_eq!(hausdorff(&s, &Region::empty(ModelId::Euclidean), 8), f64::INFINITY);
        let em = Region::empty(ModelId::Euclidean);
        assert_eq!(hausdorff(&em, &em, 8), 0.0);
    }
}
