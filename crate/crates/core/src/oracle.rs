//! Brute-force verifiers by dense chart sampling.
//!
//! Nothing here shares code with the star sweep, the boundary overlay or the
//! half-plane clipper; these routines are the ground truth the exact kernel
//! constructions are checked against.

use crate::model::Point;
use crate::planar::{self, Location, Vec2};
use crate::polygon::{ContainmentClass, GeodesicPolygon};
use crate::region::Region;
use crate::starshape;
use crate::tol::EPS_ON;

pub const DEFAULT_RESOLUTION: usize = 64;
pub const DEFAULT_STEPS: usize = 256;
pub const DEFAULT_DIRS: usize = 1024;

/// Default number of boundary targets for [`brute_kernel`].
pub fn default_boundary_targets(n_vertices: usize) -> usize {
    4 * n_vertices * 16
}

/// Sampled visibility: all `n_steps + 1` evenly chart-spaced points of `[pq]`
/// avoid the exterior.
pub fn brute_sees(a: &GeodesicPolygon, p: Point, q: Point, n_steps: usize) -> bool {
    let (pc, qc) = (p.chart(), q.chart());
    let n = n_steps.max(1);
    (0..=n).all(|k| a.locate_chart(pc.lerp(qc, k as f64 / n as f64), EPS_ON) != ContainmentClass::Exterior)
}

/// Sampled star: along `n_dirs` evenly spaced rays from `p`, find the first
/// boundary contact by sphere tracing against the chart boundary, then keep
/// samples spaced `diameter / n_steps` before it.
pub fn brute_star(a: &GeodesicPolygon, p: Point, n_dirs: usize, n_steps: usize) -> Vec<Point> {
    let c = p.chart();
    let (lo, hi) = a.bbox();
    let reach = (hi - lo).norm();
    let step = reach / n_steps.max(1) as f64;
    let stop = 1e-9 * reach.max(1.0);
    let clearance = |x: Vec2| a.edges().map(|(s, e)| planar::dist_to_segment(x, s, e)).fold(f64::INFINITY, f64::min);
    let mut out = vec![p];
    for k in 0..n_dirs {
        let dir = Vec2::from_angle(std::f64::consts::TAU * k as f64 / n_dirs as f64);
        let mut t = clearance(c).max(stop);
        let t_exit = loop {
            let x = c + dir * t;
            if t > 2.0 * reach || a.locate_chart(x, EPS_ON) == ContainmentClass::Exterior {
                break t;
            }
            let d = clearance(x);
            if d < stop {
                break t;
            }
            t += d;
        };
        let mut j = 1;
        while step * (j as f64) < t_exit {
            let x = c + dir * (step * j as f64);
            if !a.model().in_domain(x) {
                break;
            }
            out.push(Point::from_chart_unchecked(a.model(), x));
            j += 1;
        }
    }
    out
}

/// Cell centers of a `resolution × resolution` chart grid over the polygon's
/// bounding box, restricted to the polygon interior.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleGrid {
    pub resolution: usize,
    /// Larger of the two cell sides.
    pub step: f64,
    pub points: Vec<Point>,
}

impl SampleGrid {
    pub fn new(a: &GeodesicPolygon, resolution: usize) -> SampleGrid {
        let (lo, hi) = a.bbox();
        SampleGrid::over(a, lo, hi, resolution)
    }

    /// Grid over the chart window `[lo, hi]` instead of the bounding box.
    pub fn over(a: &GeodesicPolygon, lo: Vec2, hi: Vec2, resolution: usize) -> SampleGrid {
        let res = resolution.max(1);
        let (dx, dy) = ((hi.x - lo.x) / res as f64, (hi.y - lo.y) / res as f64);
        let mut points = Vec::new();
        for j in 0..res {
            for i in 0..res {
                let c = Vec2::new(lo.x + (i as f64 + 0.5) * dx, lo.y + (j as f64 + 0.5) * dy);
                if a.locate_chart(c, EPS_ON) == ContainmentClass::Interior {
                    points.push(Point::from_chart_unchecked(a.model(), c));
                }
            }
        }
        SampleGrid { resolution: res, step: dx.max(dy), points }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KernelSamples {
    pub grid: SampleGrid,
    /// Grid points that see every target.
    pub kept: Vec<Point>,
}

fn boundary_targets(a: &GeodesicPolygon, count: usize) -> Vec<Vec2> {
    let mut out: Vec<Vec2> = a.chart().to_vec();
    let perim: f64 = a.edges().map(|(p, q)| p.dist(q)).sum();
    if count == 0 {
        return out;
    }
    let step = perim / count as f64;
    let mut walked = 0.0;
    let mut next = 0.5 * step;
    for (p, q) in a.edges() {
        let len = p.dist(q);
        while next < walked + len {
            out.push(p.lerp(q, (next - walked) / len));
            next += step;
        }
        walked += len;
    }
    out
}

enum Clearance {
    Clear,
    Blocked,
    Unsure,
}

/// Visibility of boundary point `t` from interior point `q` when every edge
/// is either well separated from `[q t]`, ends the segment at `t`, or crosses
/// it transversally away from the endpoints. Anything closer to degenerate is
/// `Unsure`.
fn clearance(chart: &[Vec2], lens: &[f64], q: Vec2, t: Vec2, eps: f64) -> Clearance {
    let d = t - q;
    let len = d.norm();
    if len <= eps {
        return Clearance::Unsure;
    }
    let n = chart.len();
    let mut blocked = false;
    for i in 0..n {
        let (a, b) = (chart[i], chart[(i + 1) % n]);
        let (sa, sb) = (d.cross(a - q), d.cross(b - q));
        let m = eps * len;
        if (sa > m && sb > m) || (sa < -m && sb < -m) {
            continue;
        }
        let e = b - a;
        let me = eps * lens[i];
        let (sq, st) = (e.cross(q - a), e.cross(t - a));
        if (sq > me && st > me) || (sq < -me && st < -me) {
            continue;
        }
        if st.abs() <= me && sq.abs() > me {
            // the edge line passes through t, so the edge meets [q t] only near t
            let along = e.dot(t - a);
            if along >= -me && along <= e.norm2() + me {
                continue;
            }
            return Clearance::Unsure;
        }
        if ((sa > m && sb < -m) || (sa < -m && sb > m)) && ((sq > me && st < -me) || (sq < -me && st > me)) {
            blocked = true;
            continue;
        }
        return Clearance::Unsure;
    }
    if blocked {
        Clearance::Blocked
    } else {
        Clearance::Clear
    }
}

/// Grid points that see all vertices and `n_boundary_targets` evenly spread
/// boundary samples (exact visibility per target).
pub fn brute_kernel(a: &GeodesicPolygon, resolution: usize, n_boundary_targets: usize) -> KernelSamples {
    let (lo, hi) = a.bbox();
    brute_kernel_in(a, lo, hi, resolution, n_boundary_targets)
}

/// [`brute_kernel`] over a grid spanning the chart window `[lo, hi]`.
pub fn brute_kernel_in(a: &GeodesicPolygon, lo: Vec2, hi: Vec2, resolution: usize, n_boundary_targets: usize) -> KernelSamples {
    let grid = SampleGrid::over(a, lo, hi, resolution);
    let targets = boundary_targets(a, n_boundary_targets);
    let lens: Vec<f64> = a.edges().map(|(p, q)| p.dist(q)).collect();
    let kept = grid
        .points
        .iter()
        .copied()
        .filter(|q| {
            let qc = q.chart();
            targets.iter().all(|&t| match clearance(a.chart(), &lens, qc, t, EPS_ON) {
                Clearance::Clear => true,
                Clearance::Blocked => false,
                Clearance::Unsure => starshape::sees_chart(a, qc, t, EPS_ON),
            })
        })
        .collect();
    KernelSamples { grid, kept }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Comparison {
    pub max_violation: f64,
    pub agrees: bool,
}

/// Compares an exact region with an oracle point set at grid resolution.
///
/// Violations are the chart distance from each oracle point to the region and,
/// for every probe on a `grid_step` lattice lying at least `grid_step` inside
/// the region, the chart distance to the nearest oracle point. The two agree
/// when no violation exceeds `2·grid_step`.
pub fn compare(region: &Region, pts: &[Point], grid_step: f64) -> Comparison {
    let mut worst: f64 = 0.0;
    match region.polygon() {
        None => {
            if !pts.is_empty() {
                worst = f64::INFINITY;
            }
        }
        Some(poly) => {
            let chart = poly.chart();
            let dist_to_boundary = |x: Vec2| {
                poly.edges()
                    .map(|(a, b)| planar::dist_to_segment(x, a, b))
                    .fold(f64::INFINITY, f64::min)
            };
            for p in pts {
                let x = p.chart();
                if planar::locate(chart, x, 0.0) == Location::Outside {
                    worst = worst.max(dist_to_boundary(x));
                }
            }
            let (lo, hi) = poly.bbox();
            let nx = ((hi.x - lo.x) / grid_step).ceil() as usize;
            let ny = ((hi.y - lo.y) / grid_step).ceil() as usize;
            for j in 0..ny {
                for i in 0..nx {
                    let x = Vec2::new(lo.x + (i as f64 + 0.5) * grid_step, lo.y + (j as f64 + 0.5) * grid_step);
                    if planar::locate(chart, x, 0.0) != Location::Inside || dist_to_boundary(x) < grid_step {
                        continue;
                    }
                    let near = pts.iter().map(|p| p.chart().dist(x)).fold(f64::INFINITY, f64::min);
                    worst = worst.max(near);
                }
            }
        }
    }
    Comparison { max_violation: worst, agrees: worst <= 2.0 * grid_step }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::{Isometry, ModelId};
    use crate::starshape::{kernel_halfplane, sees};

    #[test]
    fn brute_sees_examples() {
        let sq = fixtures::square();
        assert!(brute_sees(&sq, Point::euclidean(0.5, 0.5), Point::euclidean(1.0, 1.0), 256));
        let l = fixtures::lshape();
        assert!(!brute_sees(&l, Point::euclidean(1.8, 0.5), Point::euclidean(0.5, 1.8), 256));
    }

    #[test]
    fn brute_star_samples_are_visible() {
        let l = fixtures::lshape();
        let p = Point::euclidean(1.8, 0.5);
        let pts = brute_star(&l, p, 256, 128);
        assert!(pts.iter().all(|&x| sees(&l, p, x, EPS_ON).unwrap()));
        assert!(pts.iter().all(|x| x.chart().dist(Vec2::new(0.5, 1.8)) > 0.1));
    }

    #[test]
    fn lshape_brute_kernel_is_unit_square_grid() {
        let l = fixtures::lshape();
        let ks = brute_kernel(&l, 64, default_boundary_targets(6));
        // 32 × 32 cell centers fall in the open unit square
        assert_eq!(ks.kept.len(), 32 * 32);
        assert!(ks.kept.iter().all(|p| p.u < 1.0 && p.v < 1.0));
        let cmp = compare(&kernel_halfplane(&l, EPS_ON), &ks.kept, ks.grid.step);
        assert!(cmp.agrees, "{cmp:?}");
    }

    #[test]
    fn ushape_and_square_brute_kernels() {
        let u = fixtures::ushape();
        assert!(brute_kernel(&u, 64, default_boundary_targets(8)).kept.is_empty());
        let sq = fixtures::square();
        let ks = brute_kernel(&sq, 32, default_boundary_targets(4));
        assert_eq!(ks.kept.len(), ks.grid.points.len());
        assert_eq!(ks.kept.len(), 32 * 32);
    }

    #[test]
    fn planted_fault_is_caught() {
        let l = fixtures::lshape();
        let ks = brute_kernel(&l, 64, default_boundary_targets(6));
        let moved = kernel_halfplane(&l, EPS_ON).apply(&Isometry::euclidean(0.0, 0.5, 0.0)).unwrap();
        let cmp = compare(&moved, &ks.kept, ks.grid.step);
        assert!(!cmp.agrees);
        assert!((cmp.max_violation - 0.5).abs() < 0.05, "{cmp:?}");
        let none = compare(&Region::empty(ModelId::Euclidean), &[], 0.1);
        assert!(none.agrees);
    }
}
