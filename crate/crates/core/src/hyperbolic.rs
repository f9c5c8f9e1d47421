//! Hyperboloid lift of the Klein chart.
//!
//! A chart point `(u, v)` lifts to `(u, v, 1) / √(1 − u² − v²)` on the upper
//! sheet of `x² + y² − z² = −1`. Distances, angles and isometries are computed
//! on the lift with the Minkowski form `⟨X, Y⟩ = x₁x₂ + y₁y₂ − z₁z₂`.

use crate::planar::Vec2;

pub(crate) type V3 = [f64; 3];

pub(crate) fn lift(p: Vec2) -> V3 {
    let w = 1.0 / (1.0 - p.norm2()).sqrt();
    [p.x * w, p.y * w, w]
}

pub(crate) fn project(x: V3) -> Vec2 {
    Vec2::new(x[0] / x[2], x[1] / x[2])
}

pub(crate) fn minkowski(a: V3, b: V3) -> f64 {
    a[0] * b[0] + a[1] * b[1] - a[2] * b[2]
}

fn sub(a: V3, b: V3) -> V3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn axpy(a: V3, s: f64, b: V3) -> V3 {
    [a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2]]
}

fn det(a: V3, b: V3, c: V3) -> f64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

/// Hyperbolic distance between two chart points.
///
/// Uses `cosh d = −⟨P, Q⟩` rewritten as `d = 2 asinh(‖P − Q‖ / 2)`, which is
/// the same quantity without the cancellation of `acosh` near zero.
pub(crate) fn distance(p: Vec2, q: Vec2) -> f64 {
    let d = sub(lift(p), lift(q));
    let m = minkowski(d, d).max(0.0);
    2.0 * (0.5 * m.sqrt()).asinh()
}

/// Oriented angle at `p` from the geodesic toward `a` to the geodesic toward
/// `b`, in `(−π, π]`. Positive is counterclockwise in the chart.
pub(crate) fn oriented_angle(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let pl = lift(p);
    let al = lift(a);
    let bl = lift(b);
    // tangent components at P (⟨P, P⟩ = −1)
    let ta = axpy(al, minkowski(al, pl), pl);
    let tb = axpy(bl, minkowski(bl, pl), pl);
    det(pl, ta, tb).atan2(minkowski(ta, tb))
}

/// Distance from `x` to the geodesic segment `[a b]`.
pub(crate) fn distance_to_segment(x: Vec2, a: Vec2, b: Vec2) -> f64 {
    let (xl, al, bl) = (lift(x), lift(a), lift(b));
    // Minkowski normal of the plane through the origin containing A and B
    let c = [
        al[1] * bl[2] - al[2] * bl[1],
        al[2] * bl[0] - al[0] * bl[2],
        -(al[0] * bl[1] - al[1] * bl[0]),
    ];
    let nn = minkowski(c, c);
    if nn <= 0.0 {
        return distance(x, a);
    }
    let n = [c[0] / nn.sqrt(), c[1] / nn.sqrt(), c[2] / nn.sqrt()];
    let s = minkowski(xl, n);
    let foot = project(axpy(xl, -s, n));
    let d = b - a;
    let t = d.dot(foot - a) / d.norm2();
    if (0.0..=1.0).contains(&t) {
        s.abs().asinh()
    } else {
        distance(x, a).min(distance(x, b))
    }
}

pub(crate) fn mat_mul(a: &[[f64; 3]; 3], b: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub(crate) fn mat_apply(m: &[[f64; 3]; 3], x: V3) -> V3 {
    [
        m[0][0] * x[0] + m[0][1] * x[1] + m[0][2] * x[2],
        m[1][0] * x[0] + m[1][1] * x[1] + m[1][2] * x[2],
        m[2][0] * x[0] + m[2][1] * x[1] + m[2][2] * x[2],
    ]
}

pub(crate) fn rotation(theta: f64) -> [[f64; 3]; 3] {
    let (s, c) = theta.sin_cos();
    [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]]
}

/// Lorentz boost along the chart `u` axis with rapidity `r`.
pub(crate) fn boost_u(r: f64) -> [[f64; 3]; 3] {
    let (s, c) = (r.sinh(), r.cosh());
    [[c, 0.0, s], [0.0, 1.0, 0.0], [s, 0.0, c]]
}
