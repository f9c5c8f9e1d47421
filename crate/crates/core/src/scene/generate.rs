//! Deterministic random polygons. Every generator is a pure function of
//! `(model, n_vertices, seed)`.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{GeomError, Result};
use crate::model::{ModelId, Point};
use crate::planar::{self, SegmentHit, Vec2};
use crate::polygon::{validate, GeodesicPolygon};
use crate::tol::EPS_ON;

const MAX_ATTEMPTS: usize = 64;
/// Klein scenes stay inside this chart radius.
const KLEIN_RADIUS: f64 = 0.85;

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(GeomError::Precondition(format!("need at least 3 vertices, got {n}")));
    }
    Ok(())
}

fn build(model: ModelId, chart: &[Vec2]) -> Option<GeodesicPolygon> {
    let pts: Vec<Point> = chart.iter().map(|&c| Point::new(model, c.x, c.y)).collect::<Result<_>>().ok()?;
    validate(model, &pts).is_empty().then(|| GeodesicPolygon::new(model, pts).ok()).flatten()
}

/// Radial polygon around a random center: sorted jittered angles with
/// consecutive gaps below π and random radii, so the center sees every vertex.
pub fn random_starshaped_with_center(model: ModelId, n: usize, seed: u64) -> Result<(GeodesicPolygon, Point)> {
    check_n(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (spread, r_min, r_max) = match model {
        ModelId::Euclidean => (0.5, 0.3, 1.0),
        // center within 0.1 of the origin and radius ≤ 0.7 keeps ‖·‖ ≤ 0.85
        ModelId::HyperbolicKlein => (0.1, 0.2, KLEIN_RADIUS - 0.1 * std::f64::consts::SQRT_2),
    };
    for _ in 0..MAX_ATTEMPTS {
        let c = Vec2::new(rng.gen_range(-spread..spread), rng.gen_range(-spread..spread));
        let phase = rng.gen_range(0.0..TAU);
        let chart: Vec<Vec2> = (0..n)
            .map(|i| {
                let theta = phase + TAU * (i as f64 + 0.45 * rng.gen::<f64>()) / n as f64;
                let r = rng.gen_range(r_min..r_max);
                c + Vec2::from_angle(theta) * r
            })
            .collect();
        if let Some(p) = build(model, &chart) {
            return Ok((p, Point::from_chart_unchecked(model, c)));
        }
    }
    Err(GeomError::Numerical(format!("no valid starshaped polygon after {MAX_ATTEMPTS} attempts")))
}

pub fn random_starshaped(model: ModelId, n: usize, seed: u64) -> Result<GeodesicPolygon> {
    random_starshaped_with_center(model, n, seed).map(|(p, _)| p)
}

fn first_crossing(pts: &[Vec2]) -> Option<(usize, usize)> {
    let n = pts.len();
    for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let hit = planar::segment_hit(pts[i], pts[i + 1], pts[j], pts[(j + 1) % n], EPS_ON);
            if hit != SegmentHit::None {
                return Some((i, j));
            }
        }
    }
    None
}

/// Random points made simple by 2-opt moves: while two edges cross, reverse the
/// chain between them. Each move shortens the tour, so the loop terminates;
/// an iteration bound and reseeding guard against degenerate inputs.
pub fn random_simple(model: ModelId, n: usize, seed: u64) -> Result<GeodesicPolygon> {
    check_n(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut pts: Vec<Vec2> = (0..n)
            .map(|_| match model {
                ModelId::Euclidean => Vec2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                ModelId::HyperbolicKlein => loop {
                    let c = Vec2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                    if c.norm() <= 1.0 {
                        break c * KLEIN_RADIUS;
                    }
                },
            })
            .collect();
        let mut moves = 0;
        while let Some((i, j)) = first_crossing(&pts) {
            pts[i + 1..=j].reverse();
            moves += 1;
            if moves > 100 * n * n {
                break;
            }
        }
        if planar::signed_area(&pts) < 0.0 {
            pts.reverse();
        }
        if let Some(p) = build(model, &pts) {
            return Ok(p);
        }
    }
    Err(GeomError::Numerical(format!("no valid simple polygon after {MAX_ATTEMPTS} attempts")))
}
