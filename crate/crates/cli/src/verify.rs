//! Monte-Carlo campaign: random polygons, alternately generated starshaped
//! and unconstrained, each certified and cross-checked. Report lines are
//! `key=value` records, one per trial, followed by a summary.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use starkit::oracle;
use starkit::polygon::{contains, interior_angle, ContainmentClass};
use starkit::scene::{random_simple, random_starshaped};
use starkit::starshape::{certify, CertReport, CertifyOptions};
use starkit::{GeodesicPolygon, Isometry, ModelId, Point, Region};

use crate::mutually_visible;

/// Campaign tolerance on Hausdorff(kernel_extreme, kernel_halfplane).
pub const HAUSDORFF_TOL: f64 = 1e-6;
/// Slack on the π bound for kernel interior angles.
pub const CONVEX_ANGLE_TOL: f64 = 1e-7;
/// Random point pairs checked for mutual visibility per kernel.
pub const CONVEX_PAIRS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelChoice {
    One(ModelId),
    All,
}

impl FromStr for ModelChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(ModelChoice::All);
        }
        ModelId::from_name(s)
            .map(ModelChoice::One)
            .ok_or_else(|| format!("unknown model {s:?} (euclidean, hyperbolic-klein, all)"))
    }
}

impl fmt::Display for ModelChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelChoice::One(m) => write!(f, "{m}"),
            ModelChoice::All => f.write_str("all"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub trials: usize,
    pub seed: u64,
    pub model: ModelChoice,
    pub nmin: usize,
    pub nmax: usize,
    pub resolution: usize,
    pub eps: f64,
    /// Planted fault: translate B before the cross-checks.
    pub shift_kernel: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            trials: 200,
            seed: 42,
            model: ModelChoice::All,
            nmin: 5,
            nmax: 24,
            resolution: 64,
            eps: starkit::tol::EPS_ON,
            shift_kernel: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrialKind {
    Starshaped,
    Simple,
}

impl TrialKind {
    pub fn name(self) -> &'static str {
        match self {
            TrialKind::Starshaped => "starshaped",
            TrialKind::Simple => "simple",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord {
    pub index: usize,
    pub seed: u64,
    pub model: ModelId,
    pub kind: TrialKind,
    pub n_vertices: usize,
    pub starshaped: bool,
    pub b_nonempty: bool,
    pub kernel_vertices: usize,
    pub hausdorff: f64,
    pub oracle_agreement: bool,
    pub oracle_violation: f64,
    pub oracle_kept: usize,
    /// Kernel angle and visibility checks passed (vacuous when empty).
    pub convex: bool,
    pub flags: Vec<String>,
    /// Reasons this trial is a counterexample candidate.
    pub reasons: Vec<String>,
}

impl TrialRecord {
    fn line(&self) -> String {
        let mut s = String::new();
        let join = |v: &[String]| if v.is_empty() { "-".to_string() } else { v.join(",") };
        let _ = write!(
            s,
            "trial={} seed={} model={} kind={} n={} starshaped={} b={} kernel_vertices={} hausdorff={:e} oracle={} max_violation={:e} oracle_kept={} convex={} flags={} candidate={}",
            self.index,
            self.seed,
            self.model,
            self.kind.name(),
            self.n_vertices,
            self.starshaped,
            if self.b_nonempty { "nonempty" } else { "empty" },
            self.kernel_vertices,
            self.hausdorff,
            if self.oracle_agreement { "agree" } else { "disagree" },
            self.oracle_violation,
            self.oracle_kept,
            if self.convex { "ok" } else { "fail" },
            join(&self.flags),
            join(&self.reasons),
        );
        s
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub trials: Vec<TrialRecord>,
    pub max_hausdorff: f64,
    /// Indices of trials with at least one reason.
    pub candidates: Vec<usize>,
}

impl VerifyReport {
    pub fn to_text(&self) -> String {
        let c = &self.config;
        let mut s = String::new();
        let _ = writeln!(
            s,
            "verify trials={} seed={} model={} nmin={} nmax={} resolution={} eps={:e} inject_bug={}",
            c.trials,
            c.seed,
            c.model,
            c.nmin,
            c.nmax,
            c.resolution,
            c.eps,
            if c.shift_kernel { "shift-kernel" } else { "none" }
        );
        for t in &self.trials {
            s.push_str(&t.line());
            s.push('\n');
        }
        let starshaped = self.trials.iter().filter(|t| t.starshaped).count();
        let _ = writeln!(
            s,
            "summary trials={} starshaped={} max_hausdorff={:e} candidates={}",
            self.trials.len(),
            starshaped,
            self.max_hausdorff,
            self.candidates.len()
        );
        for &i in &self.candidates {
            let t = &self.trials[i];
            let _ = writeln!(s, "candidate trial={} seed={} model={} reasons={}", i, t.seed, t.model, t.reasons.join(","));
        }
        let _ = writeln!(s, "result={}", if self.candidates.is_empty() { "PASS" } else { "COUNTEREXAMPLE-CANDIDATES" });
        s
    }
}

/// Per-trial seed: a splitmix64 step over the campaign seed and index.
pub fn trial_seed(seed: u64, index: usize) -> u64 {
    let mut z = seed.wrapping_add((index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn trial_plan(cfg: &VerifyConfig, index: usize) -> (ModelId, TrialKind) {
    let kind = if index.is_multiple_of(2) { TrialKind::Starshaped } else { TrialKind::Simple };
    let model = match cfg.model {
        ModelChoice::One(m) => m,
        ModelChoice::All => ModelId::ALL[(index / 2) % ModelId::ALL.len()],
    };
    (model, kind)
}

fn fault(model: ModelId) -> Isometry {
    match model {
        ModelId::Euclidean => Isometry::euclidean(0.0, 0.5, 0.0),
        ModelId::HyperbolicKlein => Isometry::klein(0.0, 0.5, 0.0),
    }
}

fn sample_inside(k: &GeodesicPolygon, rng: &mut ChaCha8Rng, eps: f64) -> Point {
    let (lo, hi) = k.bbox();
    for _ in 0..10_000 {
        let (u, v) = (rng.gen_range(lo.x..=hi.x), rng.gen_range(lo.y..=hi.y));
        if let Ok(p) = Point::new(k.model(), u, v) {
            if contains(k, p, eps) == ContainmentClass::Interior {
                return p;
            }
        }
    }
    // sliver kernels: a random point on a chord from the vertex centroid
    let n = k.len() as f64;
    let c = k.chart().iter().fold((0.0, 0.0), |acc, v| (acc.0 + v.x / n, acc.1 + v.y / n));
    let w = k.chart()[rng.gen_range(0..k.len())];
    let t: f64 = rng.gen_range(0.0..1.0);
    Point::new(k.model(), c.0 + t * (w.x - c.0), c.1 + t * (w.y - c.1)).expect("chord of a domain polygon")
}

/// Interior angles at most π + [`CONVEX_ANGLE_TOL`] and [`CONVEX_PAIRS`]
/// random internal pairs mutually visible.
pub fn kernel_convexity(kernel: &Region, seed: u64, eps: f64) -> bool {
    let Some(k) = kernel.polygon() else { return true };
    let angles_ok =
        (0..k.len()).all(|i| interior_angle(k, i).is_ok_and(|a| a <= std::f64::consts::PI + CONVEX_ANGLE_TOL));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xC0FF_EE00);
    angles_ok
        && (0..CONVEX_PAIRS).all(|_| {
            let p = sample_inside(k, &mut rng, eps);
            let q = sample_inside(k, &mut rng, eps);
            mutually_visible(kernel, p, q, eps)
        })
}

/// Settles a disagreement between B's emptiness and the resolution-R oracle
/// by resampling: finer full grids (×2, ×4, ×8) and then a grid over B's own
/// window when B is non-empty, or ×8 boundary targets when it is empty.
/// Returns the refinement step that restored agreement.
fn refine_emptiness(a: &GeodesicPolygon, b: &Region, resolution: usize) -> Option<String> {
    let targets = oracle::default_boundary_targets(a.len());
    match b.polygon() {
        Some(k) => {
            for f in [2, 4, 8] {
                if !oracle::brute_kernel(a, resolution * f, targets).kept.is_empty() {
                    return Some(format!("grid-x{f}"));
                }
            }
            let (lo, hi) = k.bbox();
            (!oracle::brute_kernel_in(a, lo, hi, resolution, targets).kept.is_empty()).then(|| "grid-window".to_string())
        }
        None => oracle::brute_kernel(a, resolution, 8 * targets).kept.is_empty().then(|| "targets-x8".to_string()),
    }
}

fn judge(a: &GeodesicPolygon, kind: TrialKind, r: &CertReport, convex: bool, resolution: usize) -> (Vec<String>, Vec<String>) {
    let cc = &r.cross_checks;
    let mut reasons = Vec::new();
    let mut flags = Vec::new();
    if cc.hausdorff_b_vs_halfplane.is_nan() || cc.hausdorff_b_vs_halfplane > HAUSDORFF_TOL {
        reasons.push("hausdorff".to_string());
    }
    if !cc.oracle_agreement {
        reasons.push("oracle".to_string());
    }
    if r.b.is_empty() != (cc.oracle_kept == 0) {
        match refine_emptiness(a, &r.b, resolution) {
            Some(step) => flags.push(format!("oracle-refined:{step}")),
            None => reasons.push("b-vs-brute-emptiness".to_string()),
        }
    }
    if kind == TrialKind::Starshaped && !r.starshaped {
        reasons.push("starshaped-instance-rejected".to_string());
    }
    if !convex {
        reasons.push("kernel-not-convex".to_string());
    }
    if r.b.multi_component() {
        reasons.push("multi-component".to_string());
    }
    (reasons, flags)
}

pub fn run_trial(cfg: &VerifyConfig, index: usize) -> TrialRecord {
    let seed = trial_seed(cfg.seed, index);
    let (model, kind) = trial_plan(cfg, index);
    let n = cfg.nmin + (seed % (cfg.nmax - cfg.nmin + 1) as u64) as usize;
    let generated = match kind {
        TrialKind::Starshaped => random_starshaped(model, n, seed),
        TrialKind::Simple => random_simple(model, n, seed),
    };
    let mut rec = TrialRecord {
        index,
        seed,
        model,
        kind,
        n_vertices: n,
        starshaped: false,
        b_nonempty: false,
        kernel_vertices: 0,
        hausdorff: f64::NAN,
        oracle_agreement: false,
        oracle_violation: f64::NAN,
        oracle_kept: 0,
        convex: false,
        flags: Vec::new(),
        reasons: Vec::new(),
    };
    let poly = match generated {
        Ok(p) => p,
        Err(e) => {
            rec.flags.push(format!("generator-error:{}", e.to_string().replace(' ', "_")));
            rec.reasons.push("generator".to_string());
            return rec;
        }
    };
    let opts = CertifyOptions {
        seed,
        resolution: cfg.resolution,
        eps: cfg.eps,
        kernel_fault: cfg.shift_kernel.then(|| fault(model)),
        ..Default::default()
    };
    let r = certify(&poly, &opts);
    let convex = kernel_convexity(&r.b, seed, cfg.eps);
    rec.starshaped = r.starshaped;
    rec.b_nonempty = !r.b.is_empty();
    rec.kernel_vertices = r.kernel.polygon().map_or(0, GeodesicPolygon::len);
    rec.hausdorff = r.cross_checks.hausdorff_b_vs_halfplane;
    rec.oracle_agreement = r.cross_checks.oracle_agreement;
    rec.oracle_violation = r.cross_checks.oracle.max_violation;
    rec.oracle_kept = r.cross_checks.oracle_kept;
    rec.convex = convex;
    if r.b.multi_component() {
        rec.flags.push("multi-component".to_string());
    }
    if r.ray_probes.iter().any(|p| !p.holds) {
        rec.flags.push("ray-condition-failed".to_string());
    }
    let (reasons, flags) = judge(&poly, kind, &r, convex, cfg.resolution);
    rec.reasons = reasons;
    rec.flags.extend(flags);
    rec
}

/// Runs every trial (in parallel) and assembles the report in trial order.
pub fn run_campaign(cfg: &VerifyConfig) -> VerifyReport {
    let trials: Vec<TrialRecord> = (0..cfg.trials).into_par_iter().map(|i| run_trial(cfg, i)).collect();
    let max_hausdorff = trials
        .iter()
        .filter(|t| t.starshaped)
        .map(|t| t.hausdorff)
        .fold(0.0, f64::max);
    let candidates = trials.iter().filter(|t| !t.reasons.is_empty()).map(|t| t.index).collect();
    VerifyReport { config: cfg.clone(), trials, max_hausdorff, candidates }
}
