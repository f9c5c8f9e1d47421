use crate::model::{Geodesic, HalfPlane, Point, Side};
use crate::planar::Vec2;
use crate::polygon::GeodesicPolygon;
use crate::region::{clip_convex, intersect_components, Region};

use super::extreme::extreme_points;
use super::star::star;

/// `A ∩ ⋂_{x ∈ E(A)} A_x`, the intersection of the stars at the extreme
/// vertices, computed by exact boundary overlay. All components are carried
/// through the iteration; if more than one survives, the largest is returned
/// and the region is flagged.
pub fn kernel_extreme(a: &GeodesicPolygon, eps: f64) -> Region {
    let model = a.model();
    let mut components: Vec<Vec<Vec2>> = vec![a.chart().to_vec()];
    let mut holes = 0;
    for i in extreme_points(a).indices {
        let s = match star(a, a.vertex(i), eps) {
            Ok(s) => s,
            // a vertex always sees its own neighbourhood; failure means a
            // degenerate polygon, whose kernel is empty
            Err(_) => return Region::empty(model).with_flag(true),
        };
        let (next, h) = intersect_components(&components, s.polygon.chart(), eps);
        components = next;
        holes += h;
        if components.is_empty() {
            return Region::empty(model).with_flag(holes > 0);
        }
    }
    Region::from_loops(model, components, holes)
}

/// Intersection of the closed inner half-planes of every edge, clipped from
/// the chart bounding box of `A`.
pub fn kernel_halfplane(a: &GeodesicPolygon, eps: f64) -> Region {
    let model = a.model();
    let (lo, hi) = a.bbox();
    let mut cur = vec![lo, Vec2::new(hi.x, lo.y), hi, Vec2::new(lo.x, hi.y)];
    for (p, q) in a.edges() {
        let h = HalfPlane {
            boundary: Geodesic {
                p: Point::from_chart_unchecked(model, p),
                q: Point::from_chart_unchecked(model, q),
            },
            side: Side::Left,
        };
        cur = clip_convex(&cur, &h, eps);
        if cur.len() < 3 {
            return Region::empty(model);
        }
    }
    Region::from_loop(model, &cur, eps)
}

/// Starshapedness with a kernel witness (the kernel's chart centroid, which
/// lies inside because the kernel is convex in the chart).
pub fn is_starshaped(a: &GeodesicPolygon, eps: f64) -> (bool, Option<Point>) {
    let k = kernel_halfplane(a, eps);
    let w = k.centroid();
    (w.is_some(), w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::ModelId;
    use crate::region::hausdorff;
    use crate::tol::EPS_ON;

    fn unit_square() -> Region {
        Region::from_polygon(fixtures::square())
    }

    #[test]
    fn convex_fixtures_are_their_own_kernel() {
        for p in [fixtures::square(), fixtures::htri()] {
            let r = Region::from_polygon(p.clone());
            assert!(hausdorff(&kernel_extreme(&p, EPS_ON), &r, 64) < 1e-9);
            assert!(hausdorff(&kernel_halfplane(&p, EPS_ON), &r, 64) < 1e-9);
        }
    }

    #[test]
    fn lshape_kernel() {
        let l = fixtures::lshape();
        let ke = kernel_extreme(&l, EPS_ON);
        let kh = kernel_halfplane(&l, EPS_ON);
        assert!(!ke.multi_component());
        assert!(hausdorff(&ke, &unit_square(), 64) < 1e-12);
        assert!(hausdorff(&kh, &unit_square(), 64) < 1e-12);
        assert_eq!(ke.polygon().unwrap().len(), 4);
    }

    #[test]
    fn ushape_kernel_empty() {
        let u = fixtures::ushape();
        assert!(kernel_extreme(&u, EPS_ON).is_empty());
        assert!(kernel_halfplane(&u, EPS_ON).is_empty());
        assert_eq!(is_starshaped(&u, EPS_ON), (false, None));
    }

    #[test]
    fn witnesses() {
        let (ok, w) = is_starshaped(&fixtures::lshape(), EPS_ON);
        assert!(ok);
        let w = w.unwrap();
        assert!(w.u > 0.0 && w.u < 1.0 && w.v > 0.0 && w.v < 1.0);
        let (ok, w) = is_starshaped(&fixtures::htri(), EPS_ON);
        assert!(ok && w.unwrap().model() == ModelId::HyperbolicKlein);
    }
}
