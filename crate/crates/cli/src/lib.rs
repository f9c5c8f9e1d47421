//! Command-line front end for `starkit`.
//!
//! [`execute`] runs a parsed [`Cli`] and writes its report to the given
//! sink; the binary maps the outcome onto process exit codes.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use starkit::polygon::{contains, ContainmentClass};
use starkit::region::hausdorff;
use starkit::scene::{load_scene, random_simple, random_starshaped, render_svg, save_scene, Layer, Overlays, RenderSpec, Scene};
use starkit::starshape::{certify, extreme_points, gap_points, kernel_extreme, kernel_halfplane, sees, star, CertifyOptions};
use starkit::{GeodesicPolygon, ModelId, Point, Region};

pub mod verify;

pub use verify::{run_campaign, ModelChoice, TrialRecord, VerifyConfig, VerifyReport};

/// Environment variable overriding the on-boundary tolerance.
pub const EPS_ENV: &str = "STARKIT_EPS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Precondition(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

/// Successful outcomes; `Counterexample` maps to exit code 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Counterexample,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Counterexample => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "starkit", version, about = "Kernels and stars of geodesic polygons")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Extreme,
    Halfplane,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Bug {
    ShiftKernel,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the kernel polygon (or EMPTY).
    Kernel {
        scene: PathBuf,
        #[arg(long, value_enum, default_value = "extreme")]
        method: Method,
        /// Render the scene with its kernel to this SVG file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the star of the polygon at a point.
    Star {
        scene: PathBuf,
        #[arg(long, value_parser = parse_pair)]
        point: (f64, f64),
    },
    /// List the extreme vertices.
    Extreme { scene: PathBuf },
    /// Decide starshapedness and print the certification report.
    Certify {
        scene: PathBuf,
        #[arg(long, default_value_t = 32)]
        probes: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        resolution: usize,
    },
    /// Monte-Carlo cross-check of the kernel pipelines on random polygons.
    Verify {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value = "all")]
        model: ModelChoice,
        #[arg(long, default_value_t = 5)]
        nmin: usize,
        #[arg(long, default_value_t = 24)]
        nmax: usize,
        #[arg(long, default_value_t = 64)]
        resolution: usize,
        /// Also write the report here.
        report: Option<PathBuf>,
        #[arg(long, value_enum)]
        inject_bug: Option<Bug>,
    },
    /// Render a scene as SVG.
    Render {
        scene: PathBuf,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Comma-separated layer names.
        #[arg(long, value_delimiter = ',')]
        layers: Option<Vec<String>>,
        #[arg(long, default_value_t = 640)]
        width: u32,
        #[arg(long, default_value_t = 640)]
        height: u32,
    },
    /// Write a random scene.
    Generate {
        #[arg(long, default_value = "euclidean")]
        model: String,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Unconstrained simple polygon instead of a starshaped one.
        #[arg(long)]
        simple: bool,
    },
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected u,v, got {s:?}"))?;
    let u: f64 = a.trim().parse().map_err(|e| format!("bad u: {e}"))?;
    let v: f64 = b.trim().parse().map_err(|e| format!("bad v: {e}"))?;
    Ok((u, v))
}

/// Reads the boundary tolerance from [`EPS_ENV`], falling back to the
/// library default.
pub fn eps_from_env() -> Result<f64, CliError> {
    match std::env::var(EPS_ENV) {
        Err(_) => Ok(starkit::tol::EPS_ON),
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(e) if e.is_finite() && e > 0.0 => Ok(e),
            _ => Err(CliError::Input(format!("{EPS_ENV}: not a positive number: {s:?}"))),
        },
    }
}

fn read_scene(path: &Path) -> Result<Scene, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    load_scene(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Fixed 12-decimal coordinates with trailing zeros trimmed.
pub fn fmt_coord(x: f64) -> String {
    let s = format!("{x:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

fn write_region(out: &mut String, region: &Region) {
    match region.polygon() {
        None => out.push_str("EMPTY\n"),
        Some(p) => {
            let _ = writeln!(out, "vertices={}", p.len());
            for v in p.vertices() {
                let _ = writeln!(out, "{} {}", fmt_coord(v.u), fmt_coord(v.v));
            }
        }
    }
    if region.multi_component() {
        out.push_str("flag=multi-component\n");
    }
}

fn kernel_svg(scene: &Scene, kernel: Region) -> String {
    let spec = RenderSpec { layers: vec![Layer::Polygon, Layer::Kernel], ..Default::default() };
    render_svg(scene, &Overlays { kernel: Some(kernel), ..Default::default() }, &spec)
}

/// Overlays for every layer: kernel, stars at extreme vertices, extreme
/// markers and gap segments between mutually invisible probe pairs.
pub fn full_overlays(scene: &Scene, eps: f64) -> Overlays {
    let a = &scene.polygon;
    let ext = extreme_points(a);
    let extremes: Vec<Point> = ext.indices.iter().map(|&i| a.vertex(i)).collect();
    let stars = extremes.iter().filter_map(|&p| star(a, p, eps).ok()).map(|s| s.polygon).collect();
    let mut gaps = Vec::new();
    for (i, (_, p)) in scene.probes.iter().enumerate() {
        for (_, q) in &scene.probes[i + 1..] {
            if let Ok(Some(g)) = gap_points(a, *p, *q, eps) {
                gaps.push(g);
            }
        }
    }
    Overlays { kernel: Some(kernel_extreme(a, eps)), stars, extremes, gaps }
}

fn point_in(model: ModelId, (u, v): (f64, f64)) -> Result<Point, CliError> {
    Point::new(model, u, v).map_err(|e| CliError::Input(e.to_string()))
}

/// Runs one command, writing its report to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<Status, CliError> {
    let eps = eps_from_env()?;
    let mut text = String::new();
    let status = match &cli.command {
        Command::Kernel { scene, method, out: svg } => {
            let sc = read_scene(scene)?;
            let a = &sc.polygon;
            let ext = matches!(method, Method::Extreme | Method::Both).then(|| kernel_extreme(a, eps));
            let half = matches!(method, Method::Halfplane | Method::Both).then(|| kernel_halfplane(a, eps));
            for (name, r) in [("extreme", &ext), ("halfplane", &half)] {
                if let Some(r) = r {
                    if *method == Method::Both {
                        let _ = writeln!(text, "method={name}");
                    }
                    write_region(&mut text, r);
                }
            }
            if let (Some(e), Some(h)) = (&ext, &half) {
                let _ = writeln!(text, "hausdorff={:e}", hausdorff(e, h, 256));
            }
            if let Some(path) = svg {
                let k = ext.or(half).expect("at least one method");
                std::fs::write(path, kernel_svg(&sc, k))?;
            }
            Status::Ok
        }
        Command::Star { scene, point } => {
            let sc = read_scene(scene)?;
            let p = point_in(sc.model, *point)?;
            if contains(&sc.polygon, p, eps) == ContainmentClass::Exterior {
                return Err(CliError::Precondition(format!("star center ({}, {}) lies outside the polygon", p.u, p.v)));
            }
            let s = star(&sc.polygon, p, eps).map_err(|e| CliError::Precondition(e.to_string()))?;
            let _ = writeln!(text, "star center={},{} breakpoints={}", fmt_coord(p.u), fmt_coord(p.v), s.breakpoints.len());
            write_region(&mut text, &Region::from_polygon(s.polygon));
            Status::Ok
        }
        Command::Extreme { scene } => {
            let sc = read_scene(scene)?;
            let e = extreme_points(&sc.polygon);
            let _ = writeln!(text, "extreme count={}", e.len());
            for (&i, &ang) in e.indices.iter().zip(&e.angles) {
                let v = sc.polygon.vertex(i);
                let _ = writeln!(text, "{i} {} {} angle={ang:.12}", fmt_coord(v.u), fmt_coord(v.v));
            }
            Status::Ok
        }
        Command::Certify { scene, probes, seed, resolution } => {
            let sc = read_scene(scene)?;
            let opts = CertifyOptions { n_probes: *probes, seed: *seed, resolution: *resolution, eps, ..Default::default() };
            let r = certify(&sc.polygon, &opts);
            if r.starshaped {
                let k = r.kernel.polygon().map_or(0, GeodesicPolygon::len);
                let _ = writeln!(text, "STARSHAPED kernel={k} vertices");
            } else if r.b.is_empty() {
                text.push_str("NOT STARSHAPED (B empty)\n");
            } else {
                text.push_str("NOT STARSHAPED (ray condition fails)\n");
            }
            let holds = r.ray_probes.iter().filter(|p| p.holds).count();
            let _ = writeln!(text, "extreme={}", r.extreme.indices.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","));
            let _ = writeln!(text, "b={}", if r.b.is_empty() { "empty" } else { "nonempty" });
            let _ = writeln!(text, "ray_probes={} holding={holds}", r.ray_probes.len());
            let cc = &r.cross_checks;
            let _ = writeln!(text, "hausdorff_halfplane={:e}", cc.hausdorff_b_vs_halfplane);
            let _ = writeln!(
                text,
                "oracle_agreement={} max_violation={:e} oracle_kept={} grid_step={:e}",
                cc.oracle_agreement, cc.oracle.max_violation, cc.oracle_kept, cc.oracle_grid_step
            );
            text.push_str("kernel:\n");
            write_region(&mut text, &r.kernel);
            let consistent = cc.oracle_agreement && cc.hausdorff_b_vs_halfplane <= 1e-6 && !r.b.multi_component();
            if consistent {
                Status::Ok
            } else {
                text.push_str("CROSS-CHECK DISAGREEMENT\n");
                Status::Counterexample
            }
        }
        Command::Verify { trials, seed, model, nmin, nmax, resolution, report, inject_bug } => {
            if *trials == 0 {
                return Err(CliError::Input("--trials must be at least 1".into()));
            }
            if *nmin < 3 || nmax < nmin {
                return Err(CliError::Input(format!("need 3 <= nmin <= nmax, got {nmin}..{nmax}")));
            }
            let cfg = VerifyConfig {
                trials: *trials,
                seed: *seed,
                model: *model,
                nmin: *nmin,
                nmax: *nmax,
                resolution: *resolution,
                eps,
                shift_kernel: inject_bug.is_some(),
            };
            let rep = run_campaign(&cfg);
            let body = rep.to_text();
            if let Some(path) = report {
                std::fs::write(path, &body)?;
            }
            text.push_str(&body);
            if rep.candidates.is_empty() {
                Status::Ok
            } else {
                Status::Counterexample
            }
        }
        Command::Render { scene, out: path, layers, width, height } => {
            let sc = read_scene(scene)?;
            let layers = match layers {
                None => Layer::ALL.to_vec(),
                Some(names) => names
                    .iter()
                    .map(|n| Layer::from_name(n.trim()).ok_or_else(|| CliError::Input(format!("unknown layer {n:?}"))))
                    .collect::<Result<_, _>>()?,
            };
            let spec = RenderSpec { layers, width: *width, height: *height, ..Default::default() };
            let svg = render_svg(&sc, &full_overlays(&sc, eps), &spec);
            match path {
                Some(p) => std::fs::write(p, svg)?,
                None => text.push_str(&svg),
            }
            Status::Ok
        }
        Command::Generate { model, n, seed, simple } => {
            let m = ModelId::from_name(model).ok_or_else(|| CliError::Input(format!("unknown model {model:?}")))?;
            let poly = if *simple { random_simple(m, *n, *seed) } else { random_starshaped(m, *n, *seed) }
                .map_err(|e| CliError::Input(e.to_string()))?;
            let mut sc = Scene::new(poly);
            sc.seed = Some(*seed);
            text.push_str(&save_scene(&sc));
            Status::Ok
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(status)
}

/// Whether `p` and `q` see each other inside the region's polygon.
pub fn mutually_visible(region: &Region, p: Point, q: Point, eps: f64) -> bool {
    region.polygon().is_some_and(|k| sees(k, p, q, eps).unwrap_or(false))
}
