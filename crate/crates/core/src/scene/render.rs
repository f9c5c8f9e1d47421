//! SVG 1.1 rendering in chart coordinates. Geodesic edges are straight chart
//! chords; hyperbolic scenes also draw the ideal circle. Each layer is one
//! `path` element whose id names the layer, emitted in a fixed order.

use std::fmt::Write as _;

use crate::model::{ModelId, Point};
use crate::planar::Vec2;
use crate::polygon::GeodesicPolygon;
use crate::region::Region;

use super::format::Scene;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Layer {
    Polygon,
    Kernel,
    StarsAtExtremes,
    ExtremeMarkers,
    GapSegments,
    Probes,
}

impl Layer {
    pub const ALL: [Layer; 6] = [
        Layer::Polygon,
        Layer::Kernel,
        Layer::StarsAtExtremes,
        Layer::ExtremeMarkers,
        Layer::GapSegments,
        Layer::Probes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Layer::Polygon => "polygon",
            Layer::Kernel => "kernel",
            Layer::StarsAtExtremes => "stars-at-extremes",
            Layer::ExtremeMarkers => "extreme-markers",
            Layer::GapSegments => "gap-segments",
            Layer::Probes => "probes",
        }
    }

    pub fn from_name(s: &str) -> Option<Layer> {
        Layer::ALL.into_iter().find(|l| l.name() == s)
    }

    fn style(self) -> &'static str {
        match self {
            Layer::Polygon => "fill:#dde6f0;stroke:#1f3b5c;stroke-width:1.5",
            Layer::Kernel => "fill:#f2a541;fill-opacity:0.7;stroke:#9c5b00;stroke-width:1.5",
            Layer::StarsAtExtremes => "fill:#5aa469;fill-opacity:0.12;stroke:#2f6b3a;stroke-width:0.75",
            Layer::ExtremeMarkers => "fill:#c0392b;stroke:none",
            Layer::GapSegments => "fill:none;stroke:#8e44ad;stroke-width:2;stroke-dasharray:4 3",
            Layer::Probes => "fill:none;stroke:#333333;stroke-width:1",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    /// Drawn in [`Layer::ALL`] order regardless of the order given here.
    pub layers: Vec<Layer>,
    pub width: u32,
    pub height: u32,
    pub background: String,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec { layers: Layer::ALL.to_vec(), width: 640, height: 640, background: "#ffffff".into() }
    }
}

/// Computed geometry to draw on top of a scene.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overlays {
    pub kernel: Option<Region>,
    pub stars: Vec<GeodesicPolygon>,
    pub extremes: Vec<Point>,
    pub gaps: Vec<(Point, Point)>,
}

struct View {
    lo: Vec2,
    scale: f64,
    pad: f64,
    height: f64,
}

impl View {
    fn px(&self, c: Vec2) -> (f64, f64) {
        (self.pad + (c.x - self.lo.x) * self.scale, self.height - self.pad - (c.y - self.lo.y) * self.scale)
    }
}

fn fmt_num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn ring(d: &mut String, view: &View, pts: &[Vec2]) {
    for (k, &c) in pts.iter().enumerate() {
        let (x, y) = view.px(c);
        let _ = write!(d, "{}{} {} ", if k == 0 { "M" } else { "L" }, fmt_num(x), fmt_num(y));
    }
    d.push_str("Z ");
}

pub fn render_svg(scene: &Scene, overlays: &Overlays, spec: &RenderSpec) -> String {
    let (w, h) = (spec.width as f64, spec.height as f64);
    let (lo, hi) = match scene.model {
        ModelId::HyperbolicKlein => (Vec2::new(-1.0, -1.0), Vec2::new(1.0, 1.0)),
        ModelId::Euclidean => {
            let (lo, hi) = scene.polygon.bbox();
            let m = 0.08 * (hi - lo).x.max((hi - lo).y).max(1e-9);
            (lo - Vec2::new(m, m), hi + Vec2::new(m, m))
        }
    };
    let pad = 8.0;
    let scale = ((w - 2.0 * pad) / (hi.x - lo.x)).min((h - 2.0 * pad) / (hi.y - lo.y));
    let view = View { lo, scale, pad, height: h };

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        spec.width, spec.height, spec.width, spec.height
    );
    let _ = writeln!(out, r#"<rect id="background" x="0" y="0" width="{}" height="{}" fill="{}"/>"#, spec.width, spec.height, spec.background);
    if scene.model == ModelId::HyperbolicKlein {
        let (cx, cy) = view.px(Vec2::new(0.0, 0.0));
        let _ = writeln!(
            out,
            r##"<circle id="ideal-boundary" cx="{}" cy="{}" r="{}" fill="none" stroke="#888888" stroke-width="1"/>"##,
            fmt_num(cx),
            fmt_num(cy),
            fmt_num(scale)
        );
    }
    let marker = 4.0 / scale;
    for layer in Layer::ALL {
        if !spec.layers.contains(&layer) {
            continue;
        }
        let mut d = String::new();
        let mut empty = false;
        match layer {
            Layer::Polygon => ring(&mut d, &view, scene.polygon.chart()),
            Layer::Kernel => match overlays.kernel.as_ref().and_then(Region::polygon) {
                Some(p) => ring(&mut d, &view, p.chart()),
                None => empty = true,
            },
            Layer::StarsAtExtremes => {
                for s in &overlays.stars {
                    ring(&mut d, &view, s.chart());
                }
            }
            Layer::ExtremeMarkers => {
                for p in &overlays.extremes {
                    let c = p.chart();
                    let sq = [
                        c + Vec2::new(-marker, -marker),
                        c + Vec2::new(marker, -marker),
                        c + Vec2::new(marker, marker),
                        c + Vec2::new(-marker, marker),
                    ];
                    ring(&mut d, &view, &sq);
                }
            }
            Layer::GapSegments => {
                for (a, b) in &overlays.gaps {
                    let ((x0, y0), (x1, y1)) = (view.px(a.chart()), view.px(b.chart()));
                    let _ = write!(d, "M{} {} L{} {} ", fmt_num(x0), fmt_num(y0), fmt_num(x1), fmt_num(y1));
                }
            }
            Layer::Probes => {
                for (_, p) in &scene.probes {
                    let (x, y) = view.px(p.chart());
                    let _ = write!(
                        d,
                        "M{} {} L{} {} M{} {} L{} {} ",
                        fmt_num(x - 4.0),
                        fmt_num(y),
                        fmt_num(x + 4.0),
                        fmt_num(y),
                        fmt_num(x),
                        fmt_num(y - 4.0),
                        fmt_num(x),
                        fmt_num(y + 4.0)
                    );
                }
            }
        }
        let class = if empty { r#" class="empty""# } else { "" };
        let _ = writeln!(
            out,
            r#"<path id="layer-{}"{} style="{}" d="{}"/>"#,
            layer.name(),
            class,
            layer.style(),
            d.trim_end()
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::starshape::kernel_extreme;
    use crate::tol::EPS_ON;

    fn kernel_only() -> RenderSpec {
        RenderSpec { layers: vec![Layer::Polygon, Layer::Kernel], ..Default::default() }
    }

    #[test]
    fn lshape_with_kernel() {
        let l = fixtures::lshape();
        let ov = Overlays { kernel: Some(kernel_extreme(&l, EPS_ON)), ..Default::default() };
        let svg = render_svg(&Scene::new(l), &ov, &kernel_only());
        assert_eq!(svg.matches("<path").count(), 2);
        assert!(svg.contains(r#"id="layer-polygon""#));
        assert!(svg.contains(r#"id="layer-kernel" style"#));
        assert!(svg.contains(r#"version="1.1""#));
    }

    #[test]
    fn ushape_kernel_marked_empty() {
        let u = fixtures::ushape();
        let ov = Overlays { kernel: Some(kernel_extreme(&u, EPS_ON)), ..Default::default() };
        let svg = render_svg(&Scene::new(u), &ov, &kernel_only());
        assert!(svg.contains(r#"<path id="layer-kernel" class="empty""#));
        assert!(svg.contains(r#"d=""/>"#));
    }

    #[test]
    fn deterministic_and_disk_drawn() {
        let s = Scene::new(fixtures::htri());
        let a = render_svg(&s, &Overlays::default(), &RenderSpec::default());
        let b = render_svg(&s, &Overlays::default(), &RenderSpec::default());
        assert_eq!(a, b);
        assert!(a.contains("ideal-boundary"));
    }
}
