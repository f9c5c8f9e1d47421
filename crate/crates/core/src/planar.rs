//! Straight-line chart geometry shared by both models.
//!
//! Every geodesic of a shipped model is a straight line in its chart, so all
//! incidence predicates live here and work on raw chart coordinates.

use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm2(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Counterclockwise quarter turn.
    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    pub fn lerp(self, o: Vec2, t: f64) -> Vec2 {
        Vec2::new(self.x + t * (o.x - self.x), self.y + t * (o.y - self.y))
    }

    pub fn dist(self, o: Vec2) -> f64 {
        (self - o).norm()
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn from_angle(theta: f64) -> Vec2 {
        Vec2::new(theta.cos(), theta.sin())
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// Twice the signed area of triangle `abc`; positive when counterclockwise.
pub fn orient(a: Vec2, b: Vec2, c: Vec2) -> f64 {
    (b - a).cross(c - a)
}

/// Signed distance of `p` from the directed line `a → b`, positive on the left.
pub fn signed_dist(a: Vec2, b: Vec2, p: Vec2) -> f64 {
    let d = b - a;
    d.cross(p - a) / d.norm()
}

/// Parameter of the orthogonal projection of `p` onto the line `a + t(b − a)`.
pub fn project_param(a: Vec2, b: Vec2, p: Vec2) -> f64 {
    let d = b - a;
    d.dot(p - a) / d.norm2()
}

pub fn dist_to_segment(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    dist2_to_segment(p, a, b).sqrt()
}

fn dist2_to_segment(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let d = b - a;
    let len2 = d.norm2();
    if len2 == 0.0 {
        return (p - a).norm2();
    }
    let t = (d.dot(p - a) / len2).clamp(0.0, 1.0);
    (p - (a + d * t)).norm2()
}

/// Parameters `(t, s)` with `a1 + t(b1 − a1) = a2 + s(b2 − a2)`, or `None` when
/// the lines are parallel (relative to their lengths).
pub fn line_params(a1: Vec2, b1: Vec2, a2: Vec2, b2: Vec2) -> Option<(f64, f64)> {
    let d1 = b1 - a1;
    let d2 = b2 - a2;
    let den = d1.cross(d2);
    if den.abs() <= 1e-15 * d1.norm() * d2.norm() {
        return None;
    }
    let w = a2 - a1;
    Some((w.cross(d2) / den, w.cross(d1) / den))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SegmentHit {
    None,
    /// Single common point with its parameters on the first and second segment.
    Point { t: f64, s: f64, at: Vec2 },
    /// The segments share a sub-segment of positive length, given by its
    /// parameter range on the first segment.
    Overlap { t0: f64, t1: f64 },
}

/// Intersection of closed segments `[a1 b1]` and `[a2 b2]` with a distance
/// band `eps`.
pub fn segment_hit(a1: Vec2, b1: Vec2, a2: Vec2, b2: Vec2, eps: f64) -> SegmentHit {
    let (d1, d2) = (b1 - a1, b2 - a2);
    let len1 = d1.norm();
    let da = d1.cross(a2 - a1) / len1;
    let db = d1.cross(b2 - a1) / len1;
    if (da > eps && db > eps) || (da < -eps && db < -eps) {
        return SegmentHit::None;
    }
    let len2 = d2.norm();
    let ea = d2.cross(a1 - a2) / len2;
    let eb = d2.cross(b1 - a2) / len2;
    if (ea > eps && eb > eps) || (ea < -eps && eb < -eps) {
        return SegmentHit::None;
    }
    let collinear = da.abs() <= eps && db.abs() <= eps && ea.abs() <= eps && eb.abs() <= eps;
    if collinear {
        let ta = project_param(a1, b1, a2);
        let tb = project_param(a1, b1, b2);
        let lo = ta.min(tb).max(0.0);
        let hi = ta.max(tb).min(1.0);
        let slack = eps / len1;
        if hi - lo > slack {
            return SegmentHit::Overlap { t0: lo, t1: hi };
        }
        if hi - lo >= -slack {
            let t = (0.5 * (lo + hi)).clamp(0.0, 1.0);
            let at = a1.lerp(b1, t);
            let s = project_param(a2, b2, at).clamp(0.0, 1.0);
            return SegmentHit::Point { t, s, at };
        }
        return SegmentHit::None;
    }
    // Endpoint touches take precedence so that shared vertices come back exact.
    for (p, s) in [(a2, 0.0), (b2, 1.0)] {
        if dist_to_segment(p, a1, b1) <= eps {
            let t = project_param(a1, b1, p).clamp(0.0, 1.0);
            return SegmentHit::Point { t, s, at: p };
        }
    }
    for (p, t) in [(a1, 0.0), (b1, 1.0)] {
        if dist_to_segment(p, a2, b2) <= eps {
            let s = project_param(a2, b2, p).clamp(0.0, 1.0);
            return SegmentHit::Point { t, s, at: p };
        }
    }
    match line_params(a1, b1, a2, b2) {
        Some((t, s)) => {
            let (m1, m2) = (eps / len1, eps / len2);
            if t >= -m1 && t <= 1.0 + m1 && s >= -m2 && s <= 1.0 + m2 {
                let t = t.clamp(0.0, 1.0);
                SegmentHit::Point { t, s: s.clamp(0.0, 1.0), at: a1.lerp(b1, t) }
            } else {
                SegmentHit::None
            }
        }
        None => SegmentHit::None,
    }
}

/// Signed chart area of a closed vertex loop (positive when counterclockwise).
pub fn signed_area(pts: &[Vec2]) -> f64 {
    let n = pts.len();
    let mut acc = 0.0;
    for i in 0..n {
        acc += pts[i].cross(pts[(i + 1) % n]);
    }
    0.5 * acc
}

pub fn centroid(pts: &[Vec2]) -> Vec2 {
    let n = pts.len();
    let (mut cx, mut cy, mut a) = (0.0, 0.0, 0.0);
    for i in 0..n {
        let p = pts[i];
        let q = pts[(i + 1) % n];
        let w = p.cross(q);
        a += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    if a.abs() < 1e-300 {
        let s = pts.iter().fold(Vec2::default(), |acc, &p| acc + p);
        return s * (1.0 / n as f64);
    }
    Vec2::new(cx / (3.0 * a), cy / (3.0 * a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Inside,
    OnBoundary,
    Outside,
}

/// Classifies `p` against a closed loop: within `eps` of an edge is on the
/// boundary, otherwise crossing parity of a horizontal ray decides.
pub fn locate(loop_pts: &[Vec2], p: Vec2, eps: f64) -> Location {
    let n = loop_pts.len();
    let eps2 = eps * eps;
    for i in 0..n {
        if dist2_to_segment(p, loop_pts[i], loop_pts[(i + 1) % n]) <= eps2 {
            return Location::OnBoundary;
        }
    }
    let mut inside = false;
    let mut j = n - 1;
    for i in 0..n {
        let (a, b) = (loop_pts[i], loop_pts[j]);
        if (a.y > p.y) != (b.y > p.y) {
            let x = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if p.x < x {
                inside = !inside;
            }
        }
        j = i;
    }
    if inside {
        Location::Inside
    } else {
        Location::Outside
    }
}

/// Smallest nonnegative ray parameter at which `origin + t·dir` meets the
/// segment `[a b]`, if any. Collinear overlap reports the nearest overlap point.
pub fn ray_segment_param(origin: Vec2, dir: Vec2, a: Vec2, b: Vec2, eps: f64) -> Option<f64> {
    let e = b - a;
    let den = dir.cross(e);
    let w = a - origin;
    let scale = dir.norm() * e.norm();
    if den.abs() <= 1e-15 * scale {
        // parallel: only a collinear segment can be hit
        if (dir.cross(w) / dir.norm()).abs() > eps {
            return None;
        }
        let ta = dir.dot(a - origin) / dir.norm2();
        let tb = dir.dot(b - origin) / dir.norm2();
        let (lo, hi) = (ta.min(tb), ta.max(tb));
        if hi < 0.0 {
            return None;
        }
        return Some(lo.max(0.0));
    }
    let t = w.cross(e) / den;
    let s = w.cross(dir) / den;
    let ms = eps / e.norm();
    if t >= -eps / dir.norm() && s >= -ms && s <= 1.0 + ms {
        Some(t.max(0.0))
    } else {
        None
    }
}

/// Angle normalized to `[0, 2π)`.
pub fn norm_angle(a: f64) -> f64 {
    let tau = std::f64::consts::TAU;
    let r = a.rem_euclid(tau);
    if r >= tau {
        0.0
    } else {
        r
    }
}
