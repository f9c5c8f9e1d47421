use std::f64::consts::TAU;

use crate::error::{GeomError, Result};
use crate::model::Point;
use crate::planar::{self, Vec2};
use crate::polygon::{clean_loop, ContainmentClass, GeodesicPolygon};

/// One end of a visible boundary piece: the exit point of the ray from the
/// center at chart direction `theta` lies `t_exit` chart units away, on edge
/// `edge` of the polygon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Breakpoint {
    pub theta: f64,
    pub t_exit: f64,
    pub edge: usize,
}

/// The star `A_p` as a first-exit radial function around `center`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialStar {
    pub center: Point,
    pub breakpoints: Vec<Breakpoint>,
    pub polygon: GeodesicPolygon,
}

/// Directions available at the center: the full turn for interior centers,
/// the interior angular cone for boundary centers.
struct Cone {
    start: f64,
    width: f64,
    full: bool,
    excluded: Vec<usize>,
}

fn cone_at(a: &GeodesicPolygon, c: Vec2, class: ContainmentClass, eps: f64) -> Cone {
    let n = a.len();
    let chart = a.chart();
    if class == ContainmentClass::Interior {
        return Cone { start: 0.0, width: TAU, full: true, excluded: Vec::new() };
    }
    let (next, prev, excluded) = match a.vertex_at(c, eps) {
        Some(i) => (chart[(i + 1) % n], chart[(i + n - 1) % n], vec![(i + n - 1) % n, i]),
        None => {
            let j = (0..n)
                .min_by(|&x, &y| {
                    let dx = planar::dist_to_segment(c, chart[x], chart[(x + 1) % n]);
                    let dy = planar::dist_to_segment(c, chart[y], chart[(y + 1) % n]);
                    dx.total_cmp(&dy)
                })
                .expect("non-empty polygon");
            (chart[(j + 1) % n], chart[j], vec![j])
        }
    };
    let start = planar::norm_angle((next - c).angle());
    let end = planar::norm_angle((prev - c).angle());
    let mut width = planar::norm_angle(end - start);
    if width == 0.0 {
        width = TAU;
    }
    Cone { start, width, full: false, excluded }
}

/// Nearest boundary hit of the ray `c + t·dir`, ignoring `excluded` edges and
/// hits closer than `min_t`.
fn first_exit(a: &GeodesicPolygon, c: Vec2, dir: Vec2, excluded: &[usize], min_t: f64) -> Option<(f64, usize)> {
    let mut best: Option<(f64, usize)> = None;
    for (k, (ea, eb)) in a.edges().enumerate() {
        if excluded.contains(&k) {
            continue;
        }
        if let Some(t) = planar::ray_segment_param(c, dir, ea, eb, 0.0) {
            if t > min_t && best.is_none_or(|(bt, _)| t < bt) {
                best = Some((t, k));
            }
        }
    }
    best
}

/// Chart distance along direction `theta` from `c` to the supporting line of
/// edge `k`.
fn exit_on_edge(a: &GeodesicPolygon, c: Vec2, theta: f64, k: usize, fallback: f64) -> f64 {
    let (ea, eb) = a.edge(k);
    let dir = Vec2::from_angle(theta);
    match planar::line_params(c, c + dir, ea, eb) {
        Some((t, _)) if t >= 0.0 => t,
        _ => fallback,
    }
}

/// Star of `a` at `p` by an angular sweep.
///
/// Event directions point from `p` to every vertex. Between two consecutive
/// events no vertex is crossed, so a single edge is the first exit for the
/// whole open interval; it is found on the middle ray and then evaluated at
/// both interval ends. Consecutive interval ends on one ray are joined by a
/// window segment. Boundary centers sweep only the interior cone.
pub fn star(a: &GeodesicPolygon, p: Point, eps: f64) -> Result<RadialStar> {
    if p.model() != a.model() {
        return Err(GeomError::ModelMismatch(a.model(), p.model()));
    }
    let c = p.chart();
    let class = a.locate_chart(c, eps);
    if class == ContainmentClass::Exterior {
        return Err(GeomError::Precondition(format!("star center ({}, {}) lies outside the polygon", p.u, p.v)));
    }
    let cone = cone_at(a, c, class, eps);

    let mut events: Vec<f64> = a
        .chart()
        .iter()
        .filter(|v| v.dist(c) > eps)
        .map(|&v| planar::norm_angle((v - c).angle() - cone.start))
        .filter(|&r| cone.full || r <= cone.width)
        .collect();
    if !cone.full {
        events.push(0.0);
        events.push(cone.width);
    }
    events.sort_by(f64::total_cmp);
    events.dedup_by(|x, y| (*x - *y).abs() <= 1e-13);
    if cone.full {
        let first = events[0];
        events.push(first + TAU);
    }

    let scale = {
        let (lo, hi) = a.bbox();
        (hi - lo).norm()
    };
    let min_t = if cone.full { 0.0 } else { 1e-9 * scale.max(1e-300) };

    let mut breakpoints = Vec::new();
    let mut ring: Vec<Vec2> = Vec::new();
    if !cone.full {
        ring.push(c);
    }
    for w in events.windows(2) {
        let (r0, r1) = (w[0], w[1]);
        if r1 - r0 <= 1e-13 {
            continue;
        }
        let mid = cone.start + 0.5 * (r0 + r1);
        let (t_mid, k) = first_exit(a, c, Vec2::from_angle(mid), &cone.excluded, min_t)
            .ok_or_else(|| GeomError::Numerical("ray from star center never leaves the polygon".into()))?;
        for r in [r0, r1] {
            let theta = cone.start + r;
            let t = exit_on_edge(a, c, theta, k, t_mid);
            breakpoints.push(Breakpoint { theta: planar::norm_angle(theta), t_exit: t, edge: k });
            ring.push(c + Vec2::from_angle(theta) * t);
        }
    }

    let cleaned = clean_loop(&ring, eps)
        .ok_or_else(|| GeomError::Numerical("degenerate star polygon".into()))?;
    let mut poly = cleaned;
    if planar::signed_area(&poly) < 0.0 {
        poly.reverse();
    }
    Ok(RadialStar {
        center: p,
        breakpoints,
        polygon: GeodesicPolygon::from_chart_unchecked(a.model(), poly),
    })
}
