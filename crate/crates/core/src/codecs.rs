//! External representations: signed Gauss codes, plane-curve and space-curve
//! documents, and the builtin curve constructors.
//!
//! Gauss codes are whitespace-separated tokens `(O|U)<label>(+|-)`, one
//! diagram per line in files, with `#` comments. Curve files are JSON
//! documents carrying a `format` tag and `version: 1`.

use serde::{Deserialize, Serialize};

use crate::chords::{Sign, SignedChordDiagram};
use crate::error::{Error, Result};
use crate::geom::{v2, v3, Vec2, Vec3};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pass {
    Over,
    Under,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnotEntry {
    /// 1-based crossing label, renormalized to first-appearance order.
    pub label: u32,
    pub pass: Pass,
    pub sign: Sign,
}

/// A signed Gauss sequence: the basepointed traversal of a knot projection,
/// recording over/under and the right-hand-rule sign at each crossing visit.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KnotDiagram {
    entries: Vec<KnotEntry>,
}

impl KnotDiagram {
    /// Validates and canonicalizes: every label exactly once over and once
    /// under, consistent signs, labels renumbered 1..n by first appearance.
    pub fn new(raw: Vec<(u32, Pass, Sign)>) -> Result<KnotDiagram> {
        if raw.len() % 2 != 0 {
            return Err(Error::Parse(format!(
                "odd token count {}: every crossing needs one O and one U",
                raw.len()
            )));
        }
        let mut relabel: Vec<(u32, u32)> = Vec::new(); // (original, canonical)
        let mut entries = Vec::with_capacity(raw.len());
        for (label, pass, sign) in &raw {
            let canonical = match relabel.iter().find(|(orig, _)| orig == label) {
                Some((_, c)) => *c,
                None => {
                    relabel.push((*label, relabel.len() as u32 + 1));
                    relabel.len() as u32
                }
            };
            entries.push(KnotEntry {
                label: canonical,
                pass: *pass,
                sign: *sign,
            });
        }
        let n = relabel.len();
        if entries.len() != 2 * n {
            return Err(Error::Parse(format!(
                "{} tokens but {} distinct labels; each label must appear exactly twice",
                entries.len(),
                n
            )));
        }
        let mut seen: Vec<Vec<&KnotEntry>> = vec![Vec::new(); n];
        for e in &entries {
            seen[(e.label - 1) as usize].push(e);
        }
        for (i, occ) in seen.iter().enumerate() {
            if occ.len() != 2 {
                return Err(Error::Parse(format!(
                    "crossing {} appears {} times, expected 2",
                    i + 1,
                    occ.len()
                )));
            }
            if occ[0].pass == occ[1].pass {
                return Err(Error::Parse(format!(
                    "crossing {} must appear once as O and once as U",
                    i + 1
                )));
            }
            if occ[0].sign != occ[1].sign {
                return Err(Error::Parse(format!(
                    "crossing {} carries inconsistent signs",
                    i + 1
                )));
            }
        }
        Ok(KnotDiagram { entries })
    }

    pub fn entries(&self) -> &[KnotEntry] {
        &self.entries
    }

    /// Crossing count.
    pub fn n(&self) -> usize {
        self.entries.len() / 2
    }

    /// The signed chord diagram of the underlying flattened curve: position
    /// k is the k-th visit; chords join the two visits of each crossing.
    pub fn chord_diagram(&self) -> SignedChordDiagram {
        let n = self.n();
        let mut first_seen: Vec<Option<usize>> = vec![None; n];
        let mut chord_ids = vec![usize::MAX; n];
        let mut next = 0usize;
        let mut chord_at = Vec::with_capacity(2 * n);
        let mut signs = vec![Sign::Plus; n];
        for e in &self.entries {
            let li = (e.label - 1) as usize;
            if first_seen[li].is_none() {
                first_seen[li] = Some(next);
                chord_ids[li] = next;
                signs[next] = e.sign;
                next += 1;
            }
            chord_at.push(chord_ids[li]);
        }
        SignedChordDiagram::new(chord_at, signs)
    }

    /// Moves the basepoint forward past `offset` tokens.
    pub fn rotated(&self, offset: usize) -> KnotDiagram {
        let m = self.entries.len();
        if m == 0 {
            return self.clone();
        }
        let raw = (0..m)
            .map(|i| {
                let e = &self.entries[(i + offset) % m];
                (e.label, e.pass, e.sign)
            })
            .collect();
        KnotDiagram::new(raw).expect("rotation preserves validity")
    }

    /// Reverses the traversal orientation. Crossing signs are preserved
    /// (both strands reverse).
    pub fn reversed(&self) -> KnotDiagram {
        let raw = self
            .entries
            .iter()
            .rev()
            .map(|e| (e.label, e.pass, e.sign))
            .collect();
        KnotDiagram::new(raw).expect("reversal preserves validity")
    }
}

/// Parses one whitespace-separated signed Gauss code. The empty string is
/// the 0-crossing diagram of the round unknot projection.
pub fn parse_gauss_code(text: &str) -> Result<KnotDiagram> {
    let mut raw = Vec::new();
    for tok in text.split_whitespace() {
        raw.push(parse_token(tok)?);
    }
    KnotDiagram::new(raw)
}

fn parse_token(tok: &str) -> Result<(u32, Pass, Sign)> {
    let bad = || Error::Parse(format!("bad token {tok:?}: expected (O|U)<digits>(+|-)"));
    let mut chars = tok.chars();
    let pass = match chars.next() {
        Some('O') => Pass::Over,
        Some('U') => Pass::Under,
        _ => return Err(bad()),
    };
    let body: String = chars.collect();
    let sign = match body.chars().last() {
        Some('+') => Sign::Plus,
        Some('-') => Sign::Minus,
        _ => return Err(bad()),
    };
    let digits = &body[..body.len() - 1];
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let label: u32 = digits.parse().map_err(|_| bad())?;
    if label == 0 {
        return Err(Error::Parse(format!("label must be positive in {tok:?}")));
    }
    Ok((label, pass, sign))
}

/// Canonical serialization; `parse_gauss_code(serialize(d)) == d`.
pub fn serialize_gauss_code(d: &KnotDiagram) -> String {
    d.entries()
        .iter()
        .map(|e| {
            format!(
                "{}{}{}",
                match e.pass {
                    Pass::Over => 'O',
                    Pass::Under => 'U',
                },
                e.label,
                match e.sign {
                    Sign::Plus => '+',
                    Sign::Minus => '-',
                }
            )
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Reads a Gauss-code file: one diagram per line, `#` starts a comment.
/// A file with no diagram lines holds the single empty diagram.
pub fn parse_gauss_file(text: &str) -> Result<Vec<KnotDiagram>> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        if !line.trim().is_empty() {
            out.push(parse_gauss_code(line)?);
        }
    }
    if out.is_empty() {
        out.push(KnotDiagram::default());
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Curve documents
// ---------------------------------------------------------------------------

/// A closed oriented polyline in the plane (vertices in traversal order;
/// the last vertex connects back to the first).
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneCurveInput {
    pub vertices: Vec<Vec2>,
}

impl PlaneCurveInput {
    pub fn new(vertices: Vec<Vec2>) -> Result<PlaneCurveInput> {
        if vertices.len() < 3 {
            return Err(Error::Parse(format!(
                "plane curve needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        let n = vertices.len();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            if a == b {
                return Err(Error::Parse(format!(
                    "zero-length edge at vertex {i}: consecutive points coincide"
                )));
            }
        }
        Ok(PlaneCurveInput { vertices })
    }

    pub fn reversed(&self) -> PlaneCurveInput {
        PlaneCurveInput {
            vertices: self.vertices.iter().rev().copied().collect(),
        }
    }
}

/// Raw deserialization target for both curve formats.
#[derive(Debug, Serialize, Deserialize)]
struct CurveDoc {
    format: String,
    version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    points: Option<Vec<Vec<f64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    builtin: Option<BuiltinSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BuiltinSpec {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub major_radius: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minor_radius: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u32>,
}

/// Parses a plane-curve JSON document.
pub fn parse_plane_curve(doc: &str) -> Result<PlaneCurveInput> {
    let doc: CurveDoc =
        serde_json::from_str(doc).map_err(|e| Error::Parse(format!("invalid curve JSON: {e}")))?;
    if doc.format != "plane_curve" {
        return Err(Error::Parse(format!(
            "expected format \"plane_curve\", got {:?}",
            doc.format
        )));
    }
    check_version(doc.version)?;
    let points = doc
        .points
        .ok_or_else(|| Error::Parse("plane_curve document has no points".into()))?;
    let mut vertices = Vec::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        if p.len() != 2 {
            return Err(Error::Parse(format!(
                "point {i} has {} coordinates, expected 2",
                p.len()
            )));
        }
        if !(p[0].is_finite() && p[1].is_finite()) {
            return Err(Error::Parse(format!("point {i} is not finite")));
        }
        vertices.push(v2(p[0], p[1]));
    }
    PlaneCurveInput::new(vertices)
}

pub fn serialize_plane_curve(c: &PlaneCurveInput) -> String {
    let doc = CurveDoc {
        format: "plane_curve".into(),
        version: 1,
        points: Some(c.vertices.iter().map(|p| vec![p.x, p.y]).collect()),
        builtin: None,
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

fn check_version(v: u32) -> Result<()> {
    if v != 1 {
        return Err(Error::Parse(format!("unsupported document version {v}")));
    }
    Ok(())
}

/// Space-curve inputs before resolution: explicit points or a builtin.
#[derive(Debug, Clone)]
pub enum SpaceCurveInput {
    Points(Vec<Vec3>),
    Builtin(BuiltinSpec),
}

pub fn parse_space_curve(doc: &str) -> Result<SpaceCurveInput> {
    let doc: CurveDoc =
        serde_json::from_str(doc).map_err(|e| Error::Parse(format!("invalid curve JSON: {e}")))?;
    if doc.format != "space_curve" {
        return Err(Error::Parse(format!(
            "expected format \"space_curve\", got {:?}",
            doc.format
        )));
    }
    check_version(doc.version)?;
    if let Some(b) = doc.builtin {
        return Ok(SpaceCurveInput::Builtin(b));
    }
    let points = doc
        .points
        .ok_or_else(|| Error::Parse("space_curve document has neither points nor builtin".into()))?;
    let mut vertices = Vec::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        if p.len() != 3 {
            return Err(Error::Parse(format!(
                "point {i} has {} coordinates, expected 3",
                p.len()
            )));
        }
        if !p.iter().all(|c| c.is_finite()) {
            return Err(Error::Parse(format!("point {i} is not finite")));
        }
        vertices.push(v3(p[0], p[1], p[2]));
    }
    Ok(SpaceCurveInput::Points(vertices))
}

pub fn serialize_space_curve(points: &[Vec3]) -> String {
    let doc = CurveDoc {
        format: "space_curve".into(),
        version: 1,
        points: Some(points.iter().map(|p| vec![p.x, p.y, p.z]).collect()),
        builtin: None,
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

/// Resolves a space-curve input to a closed polyline in R^3. The builtin
/// `circle` is the unit circle in the z = 0 plane; `torus_knot` is the
/// (p, q) curve on the torus of the given radii.
pub fn resolve_space_curve(input: &SpaceCurveInput) -> Result<Vec<Vec3>> {
    let points = match input {
        SpaceCurveInput::Points(pts) => pts.clone(),
        SpaceCurveInput::Builtin(spec) => {
            let samples = spec.samples.unwrap_or(0);
            match spec.name.as_str() {
                "circle" => {
                    let m = if spec.samples.is_none() { 360 } else { samples };
                    require_samples(m)?;
                    (0..m)
                        .map(|k| {
                            let t = 2.0 * std::f64::consts::PI * k as f64 / m as f64;
                            v3(t.cos(), t.sin(), 0.0)
                        })
                        .collect()
                }
                "torus_knot" => {
                    let m = if spec.samples.is_none() { 1200 } else { samples };
                    require_samples(m)?;
                    let p = spec.p.unwrap_or(2) as f64;
                    let q = spec.q.unwrap_or(3) as f64;
                    let big = spec.major_radius.unwrap_or(2.0);
                    let small = spec.minor_radius.unwrap_or(1.0);
                    // half-step phase keeps the projection's crossings off
                    // the sampled vertices
                    (0..m)
                        .map(|k| {
                            let t = 2.0 * std::f64::consts::PI * (k as f64 + 0.5) / m as f64;
                            let r = big + small * (q * t).cos();
                            v3(r * (p * t).cos(), r * (p * t).sin(), small * (q * t).sin())
                        })
                        .collect()
                }
                other => {
                    return Err(Error::Parse(format!("unknown builtin curve {other:?}")));
                }
            }
        }
    };
    if points.len() < 3 {
        return Err(Error::Parse(format!(
            "space curve needs at least 3 vertices, got {}",
            points.len()
        )));
    }
    let n = points.len();
    for i in 0..n {
        if points[i] == points[(i + 1) % n] {
            return Err(Error::Parse(format!(
                "zero-length edge at vertex {i}: consecutive points coincide"
            )));
        }
    }
    Ok(points)
}

fn require_samples(m: u32) -> Result<()> {
    if m < 3 {
        return Err(Error::Parse(format!("samples must be >= 3, got {m}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_kink() {
        let empty = parse_gauss_code("").unwrap();
        assert_eq!(empty.n(), 0);
        let kink = parse_gauss_code("O1+ U1+").unwrap();
        assert_eq!(kink.n(), 1);
    }

    #[test]
    fn trefoil_parses_and_round_trips() {
        let code = "O1+ U2+ O3+ U1+ O2+ U3+";
        let d = parse_gauss_code(code).unwrap();
        assert_eq!(d.n(), 3);
        assert_eq!(serialize_gauss_code(&d), code);
        // arbitrary labels renormalize to first-appearance order
        let relabeled = parse_gauss_code("O7+ U90+ O4+ U7+ O90+ U4+").unwrap();
        assert_eq!(relabeled, d);
        // all three chord pairs interleave
        let cd = d.chord_diagram();
        for a in 0..3 {
            for b in (a + 1)..3 {
                assert!(crate::chords::chords_intersect(&cd, a, b));
            }
        }
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_gauss_code("O1*").is_err());
        assert!(parse_gauss_code("X1+").is_err());
        assert!(parse_gauss_code("O1+ U1-").is_err()); // inconsistent signs
        assert!(parse_gauss_code("O1+ O1+").is_err()); // twice over
        assert!(parse_gauss_code("O1+ U1+ O2+").is_err()); // dangling label
        assert!(parse_gauss_code("O0+ U0+").is_err()); // zero label
    }

    #[test]
    fn gauss_file_lines_and_comments() {
        let text = "# trefoil then kink\nO1+ U2+ O3+ U1+ O2+ U3+\n\nO1- U1-  # a kink\n";
        let ds = parse_gauss_file(text).unwrap();
        assert_eq!(ds.len(), 2);
        assert_eq!(ds[0].n(), 3);
        assert_eq!(ds[1].n(), 1);
        assert_eq!(parse_gauss_file("# nothing\n").unwrap()[0].n(), 0);
    }

    #[test]
    fn plane_curve_document() {
        let doc = r#"{"format":"plane_curve","version":1,"points":[[1,0],[0,1],[-1,0],[0,-1]]}"#;
        let c = parse_plane_curve(doc).unwrap();
        assert_eq!(c.vertices.len(), 4);
        let round = parse_plane_curve(&serialize_plane_curve(&c)).unwrap();
        assert_eq!(round, c);
        assert!(parse_plane_curve(r#"{"format":"plane_curve","version":1,"points":[[1,0],[0,1]]}"#).is_err());
        assert!(parse_plane_curve(r#"{"format":"plane_curve","version":1,"points":[[1,0],[1,0],[0,1]]}"#).is_err());
        assert!(parse_plane_curve(r#"{"format":"space_curve","version":1,"points":[]}"#).is_err());
        assert!(parse_plane_curve(r#"{"format":"plane_curve","version":2,"points":[[1,0],[0,1],[-1,0]]}"#).is_err());
    }

    #[test]
    fn space_builtins() {
        let circle = resolve_space_curve(&SpaceCurveInput::Builtin(BuiltinSpec {
            name: "circle".into(),
            p: None,
            q: None,
            major_radius: None,
            minor_radius: None,
            samples: Some(360),
        }))
        .unwrap();
        assert_eq!(circle.len(), 360);
        for p in &circle {
            assert!((v3(p.x, p.y, 0.0).norm() - 1.0).abs() < 1e-12);
            assert_eq!(p.z, 0.0);
        }
        let unknown = resolve_space_curve(&SpaceCurveInput::Builtin(BuiltinSpec {
            name: "sphere".into(),
            p: None,
            q: None,
            major_radius: None,
            minor_radius: None,
            samples: Some(10),
        }));
        assert!(unknown.is_err());
        let tri = resolve_space_curve(&SpaceCurveInput::Points(vec![
            v3(0.0, 0.0, 0.0),
            v3(1.0, 0.0, 0.0),
            v3(0.0, 1.0, 0.0),
        ]))
        .unwrap();
        assert_eq!(tri.len(), 3);
    }
}
