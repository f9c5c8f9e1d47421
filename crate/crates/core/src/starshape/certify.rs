use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{Isometry, Point};
use crate::oracle::{self, Comparison};
use crate::planar::Vec2;
use crate::polygon::{ContainmentClass, GeodesicPolygon};
use crate::region::{hausdorff, Region};
use crate::tol::EPS_ON;

use super::extreme::{extreme_points, ExtremeSet};
use super::kernel::{kernel_extreme, kernel_halfplane};
use super::rays::ray_condition;

#[derive(Debug, Clone, PartialEq)]
pub struct CertifyOptions {
    /// Exterior points at which the ray condition is evaluated.
    pub n_probes: usize,
    pub seed: u64,
    /// Oracle grid resolution.
    pub resolution: usize,
    pub eps: f64,
    /// Boundary samples per region for Hausdorff estimates.
    pub hausdorff_samples: usize,
    /// Planted fault for harness self-tests: the star-intersection region is
    /// moved by this isometry (the input polygon is moved instead when that
    /// region is empty) before any cross-check.
    pub kernel_fault: Option<Isometry>,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            n_probes: 32,
            seed: 0,
            resolution: oracle::DEFAULT_RESOLUTION,
            eps: EPS_ON,
            hausdorff_samples: 256,
            kernel_fault: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RayProbe {
    pub point: Point,
    pub holds: bool,
    pub theta: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossChecks {
    pub halfplane_kernel: Region,
    pub hausdorff_b_vs_halfplane: f64,
    pub oracle_agreement: bool,
    pub oracle: Comparison,
    pub oracle_kept: usize,
    pub oracle_grid_step: f64,
}

/// Outcome of certifying one polygon.
#[derive(Debug, Clone, PartialEq)]
pub struct CertReport {
    pub extreme: ExtremeSet,
    /// Intersection of the stars at the extreme points (with `A`).
    pub b: Region,
    pub ray_probes: Vec<RayProbe>,
    /// The ray condition as stated holds for every non-empty set, so it never
    /// decides the verdict on its own.
    pub ray_condition_vacuous: bool,
    pub starshaped: bool,
    /// Equal to `b` when starshaped, empty otherwise.
    pub kernel: Region,
    pub cross_checks: CrossChecks,
}

/// Exterior probes drawn uniformly from an annulus around the polygon's chart
/// bounding box; falls back to rejection sampling over the model domain when
/// the annulus leaves the Klein disk.
fn exterior_probes(a: &GeodesicPolygon, count: usize, rng: &mut ChaCha8Rng, eps: f64) -> Vec<Point> {
    let (lo, hi) = a.bbox();
    let center = lo.lerp(hi, 0.5);
    let radius = a.chart().iter().map(|v| v.dist(center)).fold(0.0, f64::max);
    let (r_in, r_out) = (radius * 1.001 + 1e-9, radius * 1.5 + 1e-3);
    let model = a.model();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut found = None;
        for _ in 0..64 {
            let theta = rng.gen_range(0.0..std::f64::consts::TAU);
            let r: f64 = rng.gen_range(r_in * r_in..r_out * r_out);
            let r = r.sqrt();
            let c = center + Vec2::from_angle(theta) * r;
            if model.in_domain(c) && model.in_domain(c * 1.001) {
                found = Some(c);
                break;
            }
        }
        let c = found.unwrap_or_else(|| loop {
            let c = Vec2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            if c.norm() < 0.999 && a.locate_chart(c, eps) == ContainmentClass::Exterior {
                break c;
            }
        });
        out.push(Point::from_chart_unchecked(model, c));
    }
    out
}

/// Certifies starshapedness of `a` by the extreme-star criterion and
/// cross-checks the result against the half-plane kernel and the sampling
/// oracle. Disagreements are reported, not resolved.
pub fn certify(a: &GeodesicPolygon, opts: &CertifyOptions) -> CertReport {
    let eps = opts.eps;
    let extreme = extreme_points(a);
    let mut b = kernel_extreme(a, eps);
    if let Some(phi) = &opts.kernel_fault {
        let base = if b.is_empty() { Region::from_polygon(a.clone()) } else { b.clone() };
        b = base.apply(phi).unwrap_or_else(|_| Region::empty(a.model())).with_flag(b.multi_component());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let ray_probes: Vec<RayProbe> = exterior_probes(a, opts.n_probes, &mut rng, eps)
        .into_iter()
        .map(|x| match ray_condition(a, x, eps) {
            Ok((holds, theta)) => RayProbe { point: x, holds, theta },
            Err(_) => RayProbe { point: x, holds: false, theta: f64::NAN },
        })
        .collect();
    let rays_ok = ray_probes.iter().all(|p| p.holds);
    let starshaped = !b.is_empty() && rays_ok;
    let kernel = if starshaped { b.clone() } else { Region::empty(a.model()) };

    let halfplane_kernel = kernel_halfplane(a, eps);
    let hd = hausdorff(&b, &halfplane_kernel, opts.hausdorff_samples);
    let samples = oracle::brute_kernel(a, opts.resolution, oracle::default_boundary_targets(a.len()));
    let cmp = oracle::compare(&b, &samples.kept, samples.grid.step);

    CertReport {
        extreme,
        b,
        ray_probes,
        ray_condition_vacuous: true,
        starshaped,
        kernel,
        cross_checks: CrossChecks {
            halfplane_kernel,
            hausdorff_b_vs_halfplane: hd,
            oracle_agreement: cmp.agrees,
            oracle: cmp,
            oracle_kept: samples.kept.len(),
            oracle_grid_step: samples.grid.step,
        },
    }
}
