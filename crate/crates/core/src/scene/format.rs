//! Plain-text scene format:
//!
//! ```text
//! model: euclidean | hyperbolic-klein
//! polygon: [[u1,v1],[u2,v2],...]
//! probes: {name: [u,v], ...}      (optional)
//! seed: <integer>                 (optional)
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::error::GeomError;
use crate::model::{ModelId, Point};
use crate::polygon::{GeodesicPolygon, Violation};

#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub model: ModelId,
    pub polygon: GeodesicPolygon,
    /// Named probe points in file order.
    pub probes: Vec<(String, Point)>,
    pub seed: Option<u64>,
}

impl Scene {
    pub fn new(polygon: GeodesicPolygon) -> Scene {
        Scene { model: polygon.model(), polygon, probes: Vec::new(), seed: None }
    }

    pub fn probe(&self, name: &str) -> Option<Point> {
        self.probes.iter().find(|(n, _)| n == name).map(|&(_, p)| p)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SceneError {
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("line {line}: point ({u}, {v}) lies outside the {model} domain")]
    Domain { line: usize, model: ModelId, u: f64, v: f64 },
    #[error("invalid polygon: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
    line: usize,
    /// Byte offset of the value within its line, for column reporting.
    base: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, msg: impl Into<String>) -> SceneError {
        SceneError::Parse { line: self.line, col: self.base + self.pos + 1, msg: msg.into() }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), SceneError> {
        self.ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<f64, SceneError> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && matches!(self.s[self.pos], b'0'..=b'9' | b'+' | b'-' | b'.' | b'e' | b'E') {
            self.pos += 1;
        }
        let tok = std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("");
        match tok.parse::<f64>() {
            Ok(x) if x.is_finite() => Ok(x),
            _ => {
                self.pos = start;
                Err(self.err("expected a decimal number"))
            }
        }
    }

    fn pair(&mut self) -> Result<(f64, f64), SceneError> {
        self.expect(b'[')?;
        let u = self.number()?;
        self.expect(b',')?;
        let v = self.number()?;
        self.expect(b']')?;
        Ok((u, v))
    }

    fn name(&mut self) -> Result<String, SceneError> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || matches!(self.s[self.pos], b'_' | b'-')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a probe name"));
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn end(&mut self) -> Result<(), SceneError> {
        self.ws();
        if self.pos < self.s.len() {
            Err(self.err("unexpected trailing characters"))
        } else {
            Ok(())
        }
    }
}

fn pair_list(c: &mut Cursor) -> Result<Vec<(f64, f64)>, SceneError> {
    c.expect(b'[')?;
    let mut out = Vec::new();
    if c.peek() == Some(b']') {
        c.pos += 1;
        return Ok(out);
    }
    loop {
        out.push(c.pair()?);
        match c.peek() {
            Some(b',') => c.pos += 1,
            Some(b']') => {
                c.pos += 1;
                return Ok(out);
            }
            _ => return Err(c.err("expected ',' or ']'")),
        }
    }
}

type RawProbes = Vec<(String, (f64, f64))>;

fn probe_map(c: &mut Cursor) -> Result<RawProbes, SceneError> {
    c.expect(b'{')?;
    let mut out = Vec::new();
    if c.peek() == Some(b'}') {
        c.pos += 1;
        return Ok(out);
    }
    loop {
        let name = c.name()?;
        c.expect(b':')?;
        out.push((name, c.pair()?));
        match c.peek() {
            Some(b',') => c.pos += 1,
            Some(b'}') => {
                c.pos += 1;
                return Ok(out);
            }
            _ => return Err(c.err("expected ',' or '}'")),
        }
    }
}

pub fn load_scene(text: &str) -> Result<Scene, SceneError> {
    let mut model: Option<ModelId> = None;
    let mut polygon: Option<(usize, Vec<(f64, f64)>)> = None;
    let mut probes: Option<(usize, RawProbes)> = None;
    let mut seed = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let lead = raw.len() - trimmed.len();
        let Some(colon) = trimmed.find(':') else {
            return Err(SceneError::Parse { line, col: lead + 1, msg: "expected 'key: value'".into() });
        };
        let key = trimmed[..colon].trim();
        let value = &trimmed[colon + 1..];
        let mut cur = Cursor { s: value.as_bytes(), pos: 0, line, base: lead + colon + 1 };
        let dup = |what: &str| SceneError::Parse { line, col: lead + 1, msg: format!("duplicate '{what}' entry") };
        match key {
            "model" => {
                if model.is_some() {
                    return Err(dup("model"));
                }
                let name = value.trim();
                model = Some(ModelId::from_name(name).ok_or_else(|| {
                    cur.ws();
                    cur.err(format!("unknown model '{name}' (expected euclidean or hyperbolic-klein)"))
                })?);
            }
            "polygon" => {
                if polygon.is_some() {
                    return Err(dup("polygon"));
                }
                let pts = pair_list(&mut cur)?;
                cur.end()?;
                polygon = Some((line, pts));
            }
            "probes" => {
                if probes.is_some() {
                    return Err(dup("probes"));
                }
                let p = probe_map(&mut cur)?;
                cur.end()?;
                probes = Some((line, p));
            }
            "seed" => {
                cur.ws();
                seed = Some(value.trim().parse::<u64>().map_err(|_| cur.err("expected a non-negative integer seed"))?);
            }
            other => {
                return Err(SceneError::Parse { line, col: lead + 1, msg: format!("unknown key '{other}'") });
            }
        }
    }
    let model = model.ok_or(SceneError::Parse { line: 1, col: 1, msg: "missing 'model' entry".into() })?;
    let (pline, coords) = polygon.ok_or(SceneError::Parse { line: 1, col: 1, msg: "missing 'polygon' entry".into() })?;
    let to_point = |line: usize, (u, v): (f64, f64)| {
        Point::new(model, u, v).map_err(|_| SceneError::Domain { line, model, u, v })
    };
    let pts = coords.into_iter().map(|c| to_point(pline, c)).collect::<Result<Vec<_>, _>>()?;
    let polygon = GeodesicPolygon::new(model, pts).map_err(|e| match e {
        GeomError::InvalidPolygon(v) => SceneError::Invalid(v),
        other => SceneError::Parse { line: pline, col: 1, msg: other.to_string() },
    })?;
    let probes = match probes {
        Some((line, list)) => list
            .into_iter()
            .map(|(n, c)| to_point(line, c).map(|p| (n, p)))
            .collect::<Result<Vec<_>, _>>()?,
        None => Vec::new(),
    };
    Ok(Scene { model, polygon, probes, seed })
}

/// Serializes with shortest round-trip number formatting, so
/// `load_scene(&save_scene(s)) == s` bit for bit.
pub fn save_scene(scene: &Scene) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "model: {}", scene.model);
    let coords: Vec<String> = scene.polygon.vertices().iter().map(|p| format!("[{:?},{:?}]", p.u, p.v)).collect();
    let _ = writeln!(out, "polygon: [{}]", coords.join(","));
    if !scene.probes.is_empty() {
        let items: Vec<String> = scene.probes.iter().map(|(n, p)| format!("{n}: [{:?},{:?}]", p.u, p.v)).collect();
        let _ = writeln!(out, "probes: {{{}}}", items.join(", "));
    }
    if let Some(s) = scene.seed {
        let _ = writeln!(out, "seed: {s}");
    }
    out
}
