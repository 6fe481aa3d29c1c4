//! Geometry and invariants of unicursal curves (generic immersions of the
//! circle in the plane): double-point detection with explicit genericity
//! tolerances, Gauss-diagram extraction, winding-number and arrangement
//! analysis, double-point indices via oriented surgery, and the Arnold
//! invariants alpha, I+-, St, J+-.

use crate::arrangement::{self, FaceMap, VanishingTriangle};
use crate::chords::{pair_count_difference, Sign, SignedChordDiagram};
use crate::codecs::{KnotDiagram, Pass, PlaneCurveInput};
use crate::error::{Error, Result};
use crate::geom::{
    point_segment_distance, segment_intersection, turning_number, v2, winding_number, Vec2, Vec3,
};
use crate::rational::{rat, Rational};

/// |sin(crossing angle)| below this is a self-tangency.
const SIN_TOL: f64 = 1e-9;
/// Crossing parameter closer than this fraction of its edge to a vertex.
const VERTEX_FRAC_TOL: f64 = 1e-9;
/// Two crossing points closer than this fraction of the curve diameter
/// indicate a triple point (or two crossings too close to separate).
const SEPARATION_TOL: f64 = 1e-9;
/// Winding numbers are certified only if the angle sum is this close to an
/// integer multiple of 2*pi.
const WINDING_RESIDUAL_TOL: f64 = 1e-6;

/// One visit of the curve to a double point.
#[derive(Debug, Clone, Copy)]
pub struct Passage {
    /// Double point visited.
    pub dp: usize,
    /// Edge index containing the crossing and the parameter along it.
    pub edge: usize,
    pub t: f64,
    /// Arc length from the basepoint (vertex 0).
    pub arclen: f64,
}

#[derive(Debug, Clone)]
pub struct DoublePoint {
    pub position: Vec2,
    /// Global passage indices in traversal order (first visit, second visit).
    pub passages: [usize; 2],
    /// Orientation sign of the frame (first-visit tangent, second-visit
    /// tangent): +1 when the second branch crosses left-to-right.
    pub frame_sign: i8,
}

/// A validated generic immersion: the polyline plus its double-point
/// structure.
#[derive(Debug, Clone)]
pub struct UnicursalCurve {
    vertices: Vec<Vec2>,
    /// Arc length from vertex 0 to vertex k.
    cum: Vec<f64>,
    total_length: f64,
    diameter: f64,
    double_points: Vec<DoublePoint>,
    /// All 2n passages sorted by arc length.
    passages: Vec<Passage>,
}

impl UnicursalCurve {
    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn double_points(&self) -> &[DoublePoint] {
        &self.double_points
    }

    pub fn passages(&self) -> &[Passage] {
        &self.passages
    }

    /// Double point count (chords of the Gauss diagram).
    pub fn n(&self) -> usize {
        self.double_points.len()
    }

    pub fn total_length(&self) -> f64 {
        self.total_length
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    pub fn edge_len(&self, e: usize) -> f64 {
        let m = self.vertices.len();
        (self.vertices[(e + 1) % m] - self.vertices[e]).norm()
    }

    pub fn edge_dir(&self, e: usize) -> Vec2 {
        let m = self.vertices.len();
        (self.vertices[(e + 1) % m] - self.vertices[e]).normalized()
    }

    /// Tangent direction at a passage (per-segment constant).
    pub fn passage_dir(&self, p: usize) -> Vec2 {
        self.edge_dir(self.passages[p].edge)
    }
}

/// Finds and classifies all self-intersections. Near-tangencies, crossings
/// at vertices, and crossings too close together (triple points) are
/// rejected as genericity violations with a diagnostic.
pub fn analyze_curve(input: &PlaneCurveInput) -> Result<UnicursalCurve> {
    let vertices = input.vertices.clone();
    let m = vertices.len();
    let mut cum = Vec::with_capacity(m + 1);
    let mut acc = 0.0;
    for i in 0..m {
        cum.push(acc);
        acc += (vertices[(i + 1) % m] - vertices[i]).norm();
    }
    cum.push(acc);
    let total_length = acc;
    let diameter = crate::geom::polyline_diameter2(&vertices);

    // consecutive edges folding straight back form a zero-angle tangency
    for i in 0..m {
        let d0 = self_edge(&vertices, i);
        let d1 = self_edge(&vertices, (i + 1) % m);
        let sin = d0.normalized().cross(d1.normalized()).abs();
        if sin < SIN_TOL && d0.dot(d1) < 0.0 {
            return Err(Error::Genericity(format!(
                "edges {} and {} fold straight back (self-tangency)",
                i,
                (i + 1) % m
            )));
        }
    }

    // a vertex lying on a non-incident edge is a crossing at a vertex
    for vtx in 0..m {
        for e in 0..m {
            if e == vtx || (e + 1) % m == vtx {
                continue;
            }
            let a = vertices[e];
            let b = vertices[(e + 1) % m];
            let len = (b - a).norm();
            if point_segment_distance(vertices[vtx], a, b) < VERTEX_FRAC_TOL * len {
                return Err(Error::Genericity(format!(
                    "vertex {vtx} lies on edge {e} (crossing at a vertex)"
                )));
            }
        }
    }

    let raw = collect_crossings(&vertices);
    let mut crossings = Vec::new();
    for (i, j, t, u) in raw {
        let di = self_edge(&vertices, i);
        let dj = self_edge(&vertices, j);
        let sin = di.normalized().cross(dj.normalized()).abs();
        if sin < SIN_TOL {
            return Err(Error::Genericity(format!(
                "edges {i} and {j} cross at angle with |sin| = {sin:.2e} (near-tangency)"
            )));
        }
        if t < VERTEX_FRAC_TOL || 1.0 - t < VERTEX_FRAC_TOL || u < VERTEX_FRAC_TOL
            || 1.0 - u < VERTEX_FRAC_TOL
        {
            return Err(Error::Genericity(format!(
                "edges {i} and {j} cross within tolerance of a vertex"
            )));
        }
        let p = vertices[i] + di * t;
        crossings.push((i, t, j, u, p));
    }

    for a in 0..crossings.len() {
        for b in (a + 1)..crossings.len() {
            if (crossings[a].4 - crossings[b].4).norm() < SEPARATION_TOL * diameter {
                return Err(Error::Genericity(format!(
                    "two crossings within {SEPARATION_TOL:.0e} * diameter of each other \
                     (triple point or unresolvable crossing pair)"
                )));
            }
        }
    }

    // assemble passages sorted along the traversal, then number double
    // points by first encounter
    let mut passages: Vec<(usize, f64, usize, f64)> = Vec::new(); // (raw dp, arclen, edge, t)
    for (k, &(i, t, j, u, _)) in crossings.iter().enumerate() {
        let li = (vertices[(i + 1) % m] - vertices[i]).norm();
        let lj = (vertices[(j + 1) % m] - vertices[j]).norm();
        passages.push((k, cum[i] + t * li, i, t));
        passages.push((k, cum[j] + u * lj, j, u));
    }
    passages.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap());

    let ncross = crossings.len();
    let mut first_pos = vec![usize::MAX; ncross];
    let mut order = Vec::new();
    for (pos, &(raw_dp, ..)) in passages.iter().enumerate() {
        if first_pos[raw_dp] == usize::MAX {
            first_pos[raw_dp] = pos;
            order.push(raw_dp);
        }
    }
    let mut renum = vec![usize::MAX; ncross];
    for (new_id, &raw_dp) in order.iter().enumerate() {
        renum[raw_dp] = new_id;
    }

    let passage_list: Vec<Passage> = passages
        .iter()
        .map(|&(raw_dp, arclen, edge, t)| Passage {
            dp: renum[raw_dp],
            edge,
            t,
            arclen,
        })
        .collect();

    let mut double_points = vec![
        DoublePoint {
            position: v2(0.0, 0.0),
            passages: [usize::MAX; 2],
            frame_sign: 0,
        };
        ncross
    ];
    for (pos, p) in passage_list.iter().enumerate() {
        let dp = &mut double_points[p.dp];
        if dp.passages[0] == usize::MAX {
            dp.passages[0] = pos;
        } else {
            dp.passages[1] = pos;
        }
    }
    for (new_id, &raw_dp) in order.iter().enumerate() {
        double_points[new_id].position = crossings[raw_dp].4;
    }

    let curve = UnicursalCurve {
        vertices,
        cum,
        total_length,
        diameter,
        double_points,
        passages: passage_list,
    };
    let mut frames = Vec::new();
    for dp in &curve.double_points {
        let v1 = curve.passage_dir(dp.passages[0]);
        let v_2 = curve.passage_dir(dp.passages[1]);
        frames.push(if v1.cross(v_2) > 0.0 { 1i8 } else { -1i8 });
    }
    let mut curve = curve;
    for (dp, f) in curve.double_points.iter_mut().zip(frames) {
        dp.frame_sign = f;
    }
    Ok(curve)
}

fn self_edge(vertices: &[Vec2], e: usize) -> Vec2 {
    vertices[(e + 1) % vertices.len()] - vertices[e]
}

/// All proper crossings between non-adjacent edges, in (outer edge, inner
/// edge) order. Runs the pair scan on rayon when the `parallel` feature is
/// enabled; the collection order is identical either way.
fn collect_crossings(vertices: &[Vec2]) -> Vec<(usize, usize, f64, f64)> {
    let m = vertices.len();
    let scan = |i: usize| {
        let mut found = Vec::new();
        let a = vertices[i];
        let b = vertices[(i + 1) % m];
        for j in (i + 2)..m {
            if i == 0 && j == m - 1 {
                continue; // wraparound-adjacent
            }
            let c = vertices[j];
            let d = vertices[(j + 1) % m];
            if let Some((t, u)) = segment_intersection(a, b, c, d) {
                found.push((i, j, t, u));
            }
        }
        found
    };
    #[cfg(feature = "parallel")]
    let per_edge: Vec<Vec<(usize, usize, f64, f64)>> = {
        use rayon::prelude::*;
        (0..m).into_par_iter().map(scan).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let per_edge: Vec<Vec<(usize, usize, f64, f64)>> = (0..m).map(scan).collect();
    per_edge.into_iter().flatten().collect()
}

// ---------------------------------------------------------------------------
// Gauss diagram
// ---------------------------------------------------------------------------

/// The unsigned chord matching of a unicursal curve: 2n traversal positions
/// paired by double point. Signs are attached afterwards, either from a
/// chosen over/under resolution or externally.
#[derive(Debug, Clone)]
pub struct ChordMatching {
    chord_at: Vec<usize>,
}

impl ChordMatching {
    pub fn n(&self) -> usize {
        self.chord_at.len() / 2
    }

    pub fn positions(&self) -> &[usize] {
        &self.chord_at
    }

    pub fn signed(&self, signs: Vec<Sign>) -> SignedChordDiagram {
        SignedChordDiagram::new(self.chord_at.clone(), signs)
    }
}

pub fn gauss_diagram(u: &UnicursalCurve) -> ChordMatching {
    ChordMatching {
        chord_at: u.passages.iter().map(|p| p.dp).collect(),
    }
}

/// Signed diagram of the descending (first visit over) resolution: the
/// crossing signs are exactly the branch frame signs.
pub fn descending_signed_diagram(u: &UnicursalCurve) -> SignedChordDiagram {
    let signs = u
        .double_points
        .iter()
        .map(|dp| Sign::from_value(dp.frame_sign as i64))
        .collect();
    gauss_diagram(u).signed(signs)
}

// ---------------------------------------------------------------------------
// Windings, faces, indices
// ---------------------------------------------------------------------------

/// Face arrangement with winding numbers; see [`arrangement`].
pub fn face_windings(u: &UnicursalCurve) -> Result<FaceMap> {
    arrangement::build(u).map(|a| a.face_map)
}

pub fn vanishing_triangles(u: &UnicursalCurve) -> Result<Vec<VanishingTriangle>> {
    arrangement::build(u).map(|a| a.triangles)
}

/// Winding number of the full curve around `p`, certified to be integral.
pub(crate) fn certified_winding(u: &UnicursalCurve, p: Vec2) -> Result<i64> {
    let (w, res) = winding_number(&u.vertices, p);
    if res > WINDING_RESIDUAL_TOL {
        return Err(Error::Consistency(format!(
            "winding angle sum at ({}, {}) is {res:.2e} turns away from an integer",
            p.x, p.y
        )));
    }
    Ok(w)
}

/// The two branches produced by the oriented surgery at double point `i`,
/// ordered by the frame rule: the branch whose outgoing tangent comes first
/// in a positively oriented frame is first. Each branch is a closed polyline
/// avoiding the double point (local rays truncated, ends bridged).
pub fn surgered_branches(u: &UnicursalCurve, i: usize) -> (Vec<Vec2>, Vec<Vec2>) {
    let dp = &u.double_points[i];
    let x = dp.position;
    let p1 = &u.passages[dp.passages[0]];
    let p2 = &u.passages[dp.passages[1]];
    let v1 = u.edge_dir(p1.edge);
    let v_2 = u.edge_dir(p2.edge);

    // truncation offset: a fraction of the shorter local edge, also limited
    // by the room left on each of the four local rays
    let mut delta = 1e-3 * u.edge_len(p1.edge).min(u.edge_len(p2.edge));
    for p in [p1, p2] {
        let len = u.edge_len(p.edge);
        delta = delta.min(0.5 * p.t * len).min(0.5 * (1.0 - p.t) * len);
    }

    let branch = |from: &Passage, to: &Passage, vout: Vec2, vin: Vec2| -> Vec<Vec2> {
        let mut pts = vec![x + vout * delta];
        pts.extend(vertices_between(u, from.arclen, to.arclen));
        pts.push(x - vin * delta);
        pts
    };
    // branch A runs from the first passage to the second, branch B wraps
    let a = branch(p1, p2, v1, v_2);
    let b = branch(p2, p1, v_2, v1);
    if dp.frame_sign > 0 {
        (a, b)
    } else {
        (b, a)
    }
}

/// Polyline vertices with arc length strictly inside (from, to), cyclically,
/// in traversal order.
pub(crate) fn vertices_between(u: &UnicursalCurve, from: f64, to: f64) -> Vec<Vec2> {
    let m = u.vertices.len();
    let mut out = Vec::new();
    if from < to {
        for k in 0..m {
            if u.cum[k] > from && u.cum[k] < to {
                out.push(u.vertices[k]);
            }
        }
    } else {
        for k in 0..m {
            if u.cum[k] > from {
                out.push(u.vertices[k]);
            }
        }
        for k in 0..m {
            if u.cum[k] < to {
                out.push(u.vertices[k]);
            }
        }
    }
    out
}

/// Index of a double point: perform the oriented surgery, order the two
/// branches by the frame rule, and combine their winding numbers around the
/// point as `4*w1 - 4*w2 - 2`.
pub fn double_point_index(u: &UnicursalCurve, i: usize) -> Result<i64> {
    let dp = &u.double_points[i];
    let (c1, c2) = surgered_branches(u, i);
    let w = |poly: &[Vec2]| -> Result<i64> {
        let (w, res) = winding_number(poly, dp.position);
        if res > WINDING_RESIDUAL_TOL {
            return Err(Error::Consistency(format!(
                "surgery winding at double point {i} has residual {res:.2e}"
            )));
        }
        Ok(w)
    };
    Ok(4 * w(&c1)? - 4 * w(&c2)? - 2)
}

/// Turning number of the curve (index of the tangent map).
pub fn whitney_index(u: &UnicursalCurve) -> Result<i64> {
    let (w, res) = turning_number(&u.vertices);
    if res > WINDING_RESIDUAL_TOL {
        return Err(Error::Consistency(format!(
            "turning angle sum has residual {res:.2e}"
        )));
    }
    Ok(w)
}

/// The index-type invariants `I+- = (sum of indices +- 2n) / 4`.
pub fn i_pm(u: &UnicursalCurve) -> Result<(Rational, Rational)> {
    let n = u.n() as i64;
    let mut sum = 0i64;
    for i in 0..u.n() {
        sum += double_point_index(u, i)?;
    }
    Ok((rat(sum + 2 * n, 4), rat(sum - 2 * n, 4)))
}

/// The basic invariant `alpha = n/8 + (c+ - c-)/4`, with the pair counts
/// taken on the signed chord diagram of the descending (unknot) resolution.
pub fn alpha(u: &UnicursalCurve) -> Rational {
    let d = descending_signed_diagram(u);
    rat(u.n() as i64, 8) + rat(pair_count_difference(&d), 4)
}

/// Everything at once; the St and J invariants are assembled from `I-` and
/// `alpha` through `St = I- + 8a`, `J- = -2I- - 24a`, `J+ = n - 2I- - 24a`.
#[derive(Debug, Clone, PartialEq)]
pub struct ArnoldReport {
    pub n: usize,
    pub alpha: Rational,
    pub i_plus: Rational,
    pub i_minus: Rational,
    pub st: Rational,
    pub j_plus: Rational,
    pub j_minus: Rational,
    pub whitney_index: i64,
    pub per_double_point_index: Vec<i64>,
}

pub fn arnold_invariants(u: &UnicursalCurve) -> Result<ArnoldReport> {
    let a = alpha(u);
    let (i_plus, i_minus) = i_pm(u)?;
    let indices: Vec<i64> = (0..u.n())
        .map(|i| double_point_index(u, i))
        .collect::<Result<_>>()?;
    let st = i_minus + rat(8, 1) * a;
    let j_minus = rat(-2, 1) * i_minus - rat(24, 1) * a;
    let j_plus = rat(u.n() as i64, 1) + j_minus;
    Ok(ArnoldReport {
        n: u.n(),
        alpha: a,
        i_plus,
        i_minus,
        st,
        j_plus,
        j_minus,
        whitney_index: whitney_index(u)?,
        per_double_point_index: indices,
    })
}

// ---------------------------------------------------------------------------
// Knot diagrams from projections
// ---------------------------------------------------------------------------

/// Reads a knot diagram off the (x, y) projection of a closed space
/// polyline: the strand with larger z at each crossing passes over, and the
/// crossing sign follows from the branch frame and the over choice.
pub fn knot_diagram_from_projection(points: &[Vec3]) -> Result<KnotDiagram> {
    let shadow = PlaneCurveInput::new(points.iter().map(|p| v2(p.x, p.y)).collect())?;
    let u = analyze_curve(&shadow)?;

    // z at a passage, interpolated on the 3D polyline
    let height = |p: &Passage| -> f64 {
        let a = points[p.edge];
        let b = points[(p.edge + 1) % points.len()];
        a.z + (b.z - a.z) * p.t
    };

    let mut raw = Vec::with_capacity(u.passages.len());
    for (pos, p) in u.passages().iter().enumerate() {
        let dp = &u.double_points[p.dp];
        let z_first = height(&u.passages[dp.passages[0]]);
        let z_second = height(&u.passages[dp.passages[1]]);
        if z_first == z_second {
            return Err(Error::Genericity(format!(
                "double point {} projects from equal heights",
                p.dp
            )));
        }
        let first_over = z_first > z_second;
        let is_first = dp.passages[0] == pos;
        let pass = if is_first == first_over {
            Pass::Over
        } else {
            Pass::Under
        };
        let sign = if first_over {
            dp.frame_sign
        } else {
            -dp.frame_sign
        };
        raw.push((p.dp as u32 + 1, pass, Sign::from_value(sign as i64)));
    }
    KnotDiagram::new(raw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codecs::PlaneCurveInput;
    use crate::fixtures;
    use crate::geom::winding_number_ray;

    #[test]
    fn convex_polygon_has_no_double_points() {
        let u = analyze_curve(&fixtures::circle(64)).unwrap();
        assert_eq!(u.n(), 0);
        assert_eq!(whitney_index(&u).unwrap(), 1);
        assert_eq!(alpha(&u), rat(0, 1));
    }

    #[test]
    fn lemniscate_has_one_double_point() {
        let u = analyze_curve(&fixtures::lemniscate(200)).unwrap();
        assert_eq!(u.n(), 1);
        assert_eq!(whitney_index(&u).unwrap(), 0);
        assert_eq!(alpha(&u), rat(1, 8));
    }

    #[test]
    fn trefoil_shadow_chords_all_interleave() {
        let u = analyze_curve(&fixtures::trefoil_shadow(480)).unwrap();
        assert_eq!(u.n(), 3);
        let d = descending_signed_diagram(&u);
        for a in 0..3 {
            for b in (a + 1)..3 {
                assert!(crate::chords::chords_intersect(&d, a, b));
            }
        }
        assert_eq!(alpha(&u), rat(1, 8));
    }

    #[test]
    fn near_tangency_rejected() {
        // two long horizontal strands almost touching
        let c = PlaneCurveInput::new(vec![
            v2(-1.0, 0.0),
            v2(1.0, 0.0),
            v2(1.0, 1e-12),
            v2(-1.0, 1e-12),
            v2(-1.0, 1.0),
            v2(1.5, 1.0),
            v2(1.5, -1.0),
            v2(-1.5, -1.0),
            v2(-1.5, 0.5),
        ])
        .unwrap();
        match analyze_curve(&c) {
            Err(Error::Genericity(_)) => {}
            other => panic!("expected genericity violation, got {other:?}"),
        }
    }

    #[test]
    fn kink_index_is_two() {
        let u = analyze_curve(&fixtures::kink_curve(240)).unwrap();
        assert_eq!(u.n(), 1);
        assert_eq!(double_point_index(&u, 0).unwrap(), 2);
        let (ip, im) = i_pm(&u).unwrap();
        assert_eq!(im, rat(0, 1));
        assert_eq!(ip, rat(1, 1));
        assert_eq!(alpha(&u), rat(1, 8));
        let r = arnold_invariants(&u).unwrap();
        assert_eq!(r.st, rat(1, 1));
        assert_eq!(r.j_minus, rat(-3, 1));
        assert_eq!(r.j_plus, rat(-2, 1));
    }

    #[test]
    fn surgery_winding_matches_ray_oracle() {
        let u = analyze_curve(&fixtures::trefoil_shadow(480)).unwrap();
        for i in 0..u.n() {
            let (c1, c2) = surgered_branches(&u, i);
            let x = u.double_points()[i].position;
            for c in [&c1, &c2] {
                let (w, _) = winding_number(c, x);
                assert_eq!(w, winding_number_ray(c, x));
            }
        }
    }

    #[test]
    fn figure_eight_indices() {
        let u = analyze_curve(&fixtures::lemniscate(200)).unwrap();
        let i = double_point_index(&u, 0).unwrap();
        assert!(i.abs() <= 10);
        let (ip, im) = i_pm(&u).unwrap();
        assert_eq!(ip - im, rat(1, 1));
    }

    #[test]
    fn two_kink_circle_alpha() {
        let u = analyze_curve(&fixtures::two_kink_circle(360)).unwrap();
        assert_eq!(u.n(), 2);
        assert_eq!(alpha(&u), rat(1, 4));
    }

    #[test]
    fn orientation_reversal_preserves_report() {
        for c in [fixtures::lemniscate(200), fixtures::trefoil_shadow(480)] {
            let fwd = arnold_invariants(&analyze_curve(&c).unwrap()).unwrap();
            let rev = arnold_invariants(&analyze_curve(&c.reversed()).unwrap()).unwrap();
            assert_eq!(fwd.alpha, rev.alpha);
            assert_eq!(fwd.st, rev.st);
            assert_eq!(fwd.j_plus, rev.j_plus);
            assert_eq!(fwd.j_minus, rev.j_minus);
            assert_eq!(fwd.i_minus, rev.i_minus);
        }
    }

    #[test]
    fn alpha_similarity_invariant() {
        let base = fixtures::trefoil_shadow(480);
        let a0 = alpha(&analyze_curve(&base).unwrap());
        let moved = PlaneCurveInput::new(
            base.vertices
                .iter()
                .map(|p| {
                    let (s, c) = (0.7f64.sin(), 0.7f64.cos());
                    v2(
                        2.5 * (c * p.x - s * p.y) + 10.0,
                        2.5 * (s * p.x + c * p.y) - 3.0,
                    )
                })
                .collect(),
        )
        .unwrap();
        assert_eq!(alpha(&analyze_curve(&moved).unwrap()), a0);
    }

    #[test]
    fn projection_of_torus_knot_gives_trefoil() {
        use crate::codecs::{resolve_space_curve, BuiltinSpec, SpaceCurveInput};
        let pts = resolve_space_curve(&SpaceCurveInput::Builtin(BuiltinSpec {
            name: "torus_knot".into(),
            p: Some(2),
            q: Some(3),
            major_radius: Some(2.0),
            minor_radius: Some(1.0),
            samples: Some(900),
        }))
        .unwrap();
        let d = knot_diagram_from_projection(&pts).unwrap();
        assert_eq!(d.n(), 3);
        assert_eq!(crate::knots::v2_chords(&d), rat(23, 24));
    }
}
