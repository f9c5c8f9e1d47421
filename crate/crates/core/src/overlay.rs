//! Intersection of two simple counterclockwise chart loops by edge selection:
//! split both boundaries at every mutual contact, keep the pieces of each that
//! lie inside the other (shared pieces once, when both interiors agree), and
//! stitch the kept pieces into loops.

use std::collections::HashMap;

use crate::planar::{self, Location, Vec2};
use crate::polygon::clean_loop;

#[derive(Debug, Default)]
pub(crate) struct Overlay {
    /// Counterclockwise result loops, cleaned.
    pub loops: Vec<Vec<Vec2>>,
    /// Clockwise loops encountered (holes); not representable downstream.
    pub holes: usize,
}

struct Pool {
    pts: Vec<Vec2>,
    eps: f64,
}

impl Pool {
    fn id(&mut self, p: Vec2) -> usize {
        if let Some(i) = self.pts.iter().position(|q| q.dist(p) <= self.eps) {
            return i;
        }
        self.pts.push(p);
        self.pts.len() - 1
    }
}

/// Per-edge split points `(t, position)`.
type EdgeSplits = Vec<Vec<(f64, Vec2)>>;

fn splits(a: &[Vec2], b: &[Vec2], eps: f64) -> (EdgeSplits, EdgeSplits) {
    let (n, m) = (a.len(), b.len());
    let mut sa = vec![Vec::new(); n];
    let mut sb = vec![Vec::new(); m];
    for i in 0..n {
        let (a1, b1) = (a[i], a[(i + 1) % n]);
        for j in 0..m {
            let (a2, b2) = (b[j], b[(j + 1) % m]);
            let mut touched = false;
            for p in [a2, b2] {
                if planar::dist_to_segment(p, a1, b1) <= eps {
                    sa[i].push((planar::project_param(a1, b1, p), p));
                    touched = true;
                }
            }
            for p in [a1, b1] {
                if planar::dist_to_segment(p, a2, b2) <= eps {
                    sb[j].push((planar::project_param(a2, b2, p), p));
                    touched = true;
                }
            }
            if touched {
                continue;
            }
            if let Some((t, s)) = planar::line_params(a1, b1, a2, b2) {
                if t > 0.0 && t < 1.0 && s > 0.0 && s < 1.0 {
                    let at = a1.lerp(b1, t);
                    sa[i].push((t, at));
                    sb[j].push((s, at));
                }
            }
        }
    }
    (sa, sb)
}

fn sub_edges(loop_pts: &[Vec2], cuts: &mut [Vec<(f64, Vec2)>], pool: &mut Pool) -> Vec<(usize, usize)> {
    let n = loop_pts.len();
    let mut out = Vec::new();
    for i in 0..n {
        let cut = &mut cuts[i];
        cut.sort_by(|x, y| x.0.total_cmp(&y.0));
        let mut ids = vec![pool.id(loop_pts[i])];
        for &(_, p) in cut.iter() {
            ids.push(pool.id(p));
        }
        ids.push(pool.id(loop_pts[(i + 1) % n]));
        for w in ids.windows(2) {
            if w[0] != w[1] {
                out.push((w[0], w[1]));
            }
        }
    }
    out
}

/// Whether a piece of `a`'s boundary lying on `b`'s boundary runs in the same
/// direction as `b` there (so both interiors are on its left).
fn same_direction_on(b: &[Vec2], from: Vec2, to: Vec2, eps: f64) -> bool {
    let mid = from.lerp(to, 0.5);
    let d = to - from;
    let m = b.len();
    for j in 0..m {
        let (qa, qb) = (b[j], b[(j + 1) % m]);
        if planar::dist_to_segment(mid, qa, qb) <= eps {
            let e = qb - qa;
            if d.cross(e).abs() <= 1e-6 * d.norm() * e.norm() {
                return d.dot(e) > 0.0;
            }
        }
    }
    // no parallel edge: fall back to probing just left of the piece
    let probe = mid + d.perp() * (100.0 * eps / d.norm());
    planar::locate(b, probe, eps) == Location::Inside
}

pub(crate) fn intersect(a: &[Vec2], b: &[Vec2], eps: f64) -> Overlay {
    let mut pool = Pool { pts: Vec::new(), eps };
    let (mut ca, mut cb) = splits(a, b, eps);
    let ea = sub_edges(a, &mut ca, &mut pool);
    let eb = sub_edges(b, &mut cb, &mut pool);

    let mut kept: Vec<(usize, usize)> = Vec::new();
    for &(s, t) in &ea {
        let (ps, pt) = (pool.pts[s], pool.pts[t]);
        let keep = match planar::locate(b, ps.lerp(pt, 0.5), eps) {
            Location::Inside => true,
            Location::Outside => false,
            Location::OnBoundary => same_direction_on(b, ps, pt, eps),
        };
        if keep {
            kept.push((s, t));
        }
    }
    for &(s, t) in &eb {
        let mid = pool.pts[s].lerp(pool.pts[t], 0.5);
        if planar::locate(a, mid, eps) == Location::Inside {
            kept.push((s, t));
        }
    }
    kept.sort_unstable();
    kept.dedup();
    stitch(&pool.pts, &kept, eps)
}

fn stitch(pts: &[Vec2], edges: &[(usize, usize)], eps: f64) -> Overlay {
    let mut out_of: HashMap<usize, Vec<usize>> = HashMap::new();
    for (k, &(s, _)) in edges.iter().enumerate() {
        out_of.entry(s).or_default().push(k);
    }
    let mut used = vec![false; edges.len()];
    let mut result = Overlay::default();
    for start in 0..edges.len() {
        if used[start] {
            continue;
        }
        used[start] = true;
        let origin = edges[start].0;
        let mut ids = vec![origin];
        let mut cur = start;
        let mut closed = false;
        for _ in 0..=edges.len() {
            let (from, at) = edges[cur];
            if at == origin {
                closed = true;
                break;
            }
            ids.push(at);
            let back = pts[from] - pts[at];
            let next = out_of.get(&at).and_then(|cands| {
                cands
                    .iter()
                    .copied()
                    .filter(|&k| !used[k])
                    .max_by(|&x, &y| {
                        let ax = ccw_from(back, pts[edges[x].1] - pts[at]);
                        let ay = ccw_from(back, pts[edges[y].1] - pts[at]);
                        ax.total_cmp(&ay)
                    })
            });
            match next {
                Some(k) => {
                    used[k] = true;
                    cur = k;
                }
                None => break,
            }
        }
        if !closed {
            continue;
        }
        let loop_pts: Vec<Vec2> = ids.iter().map(|&i| pts[i]).collect();
        let area = planar::signed_area(&loop_pts);
        if area < 0.0 {
            if clean_loop(&loop_pts, eps).is_some() {
                result.holes += 1;
            }
        } else if let Some(c) = clean_loop(&loop_pts, eps) {
            result.loops.push(c);
        }
    }
    result
}

/// Counterclockwise angle from `r` to `d` in `(0, 2π]`.
fn ccw_from(r: Vec2, d: Vec2) -> f64 {
    let a = planar::norm_angle(r.cross(d).atan2(r.dot(d)));
    if a == 0.0 {
        std::f64::consts::TAU
    } else {
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(x0: f64, y0: f64, s: f64) -> Vec<Vec2> {
        vec![
            Vec2::new(x0, y0),
            Vec2::new(x0 + s, y0),
            Vec2::new(x0 + s, y0 + s),
            Vec2::new(x0, y0 + s),
        ]
    }

    fn area(o: &Overlay) -> f64 {
        o.loops.iter().map(|l| planar::signed_area(l)).sum()
    }

    #[test]
    fn identical_squares() {
        let o = intersect(&sq(0.0, 0.0, 1.0), &sq(0.0, 0.0, 1.0), 1e-9);
        assert_eq!(o.loops.len(), 1);
        assert!((area(&o) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn shifted_squares() {
        let o = intersect(&sq(0.0, 0.0, 1.0), &sq(0.5, 0.5, 1.0), 1e-9);
        assert_eq!(o.loops.len(), 1);
        assert!((area(&o) - 0.25).abs() < 1e-12);
    }

    #[test]
    fn nested_and_disjoint() {
        let o = intersect(&sq(0.0, 0.0, 1.0), &sq(0.25, 0.25, 0.5), 1e-9);
        assert!((area(&o) - 0.25).abs() < 1e-12);
        let d = intersect(&sq(0.0, 0.0, 1.0), &sq(2.0, 0.0, 1.0), 1e-9);
        assert!(d.loops.is_empty());
    }

    #[test]
    fn corner_and_edge_contact_is_empty() {
        assert!(intersect(&sq(0.0, 0.0, 1.0), &sq(1.0, 1.0, 1.0), 1e-9).loops.is_empty());
        assert!(intersect(&sq(0.0, 0.0, 1.0), &sq(1.0, 0.0, 1.0), 1e-9).loops.is_empty());
    }

    #[test]
    fn two_components() {
        // a U intersected with a bar across both prongs
        let u = vec![
            Vec2::new(0.0, 0.0),
            Vec2::new(3.0, 0.0),
            Vec2::new(3.0, 2.0),
            Vec2::new(2.0, 2.0),
            Vec2::new(2.0, 1.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(1.0, 2.0),
            Vec2::new(0.0, 2.0),
        ];
        let bar = vec![Vec2::new(-1.0, 1.5), Vec2::new(4.0, 1.5), Vec2::new(4.0, 3.0), Vec2::new(-1.0, 3.0)];
        let o = intersect(&u, &bar, 1e-9);
        assert_eq!(o.loops.len(), 2);
        assert!((area(&o) - 1.0).abs() < 1e-12);
    }
}
