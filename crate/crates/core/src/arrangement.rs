//! Half-edge arrangement of a unicursal curve: the curve is split into 2n
//! arcs at its double points; faces are orbits of the left-hand traversal
//! rule at the 4-valent vertices. Winding numbers are computed by signed
//! angle summation around a certified representative point inside each face.

use crate::error::{Error, Result};
use crate::geom::{point_segment_distance, signed_angle, Vec2};
use crate::plane::UnicursalCurve;

const TAU: f64 = 2.0 * std::f64::consts::PI;
const TURNING_RESIDUAL_TOL: f64 = 1e-6;
/// Faces whose best interior clearance is below this fraction of the curve
/// diameter cannot host a certified representative point.
const FACE_CLEARANCE_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct Face {
    pub id: usize,
    pub representative: Vec2,
    pub winding: i64,
    pub unbounded: bool,
    /// Number of boundary half-edges (arcs counted with multiplicity).
    pub degree: usize,
    /// Double points on the face boundary, one per corner in cycle order.
    pub corners: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct FaceMap {
    pub faces: Vec<Face>,
    pub unbounded_face: usize,
    /// Pairs of face ids separated by one arc of the curve, as
    /// (left of the directed arc, right of the directed arc).
    pub adjacency: Vec<(usize, usize)>,
}

/// A triangular face (exactly three boundary arcs and three double-point
/// corners, nothing inside) with its combinatorial sign: (-1)^q where q
/// counts the sides whose own direction matches the orientation induced by
/// the traversal ordering of the sides.
#[derive(Debug, Clone)]
pub struct VanishingTriangle {
    pub face: usize,
    pub sign: i8,
    pub corners: [usize; 3],
}

pub struct Arrangement {
    pub face_map: FaceMap,
    pub triangles: Vec<VanishingTriangle>,
}

pub fn build(u: &UnicursalCurve) -> Result<Arrangement> {
    if u.n() == 0 {
        return build_simple(u);
    }

    let arcs = split_arcs(u);
    let n2 = arcs.len(); // = 2n
    debug_assert_eq!(n2, 2 * u.n());

    // rotation system: at every double point, the four arc-ends sorted by
    // outgoing angle. An end is (arc, at_start).
    #[derive(Clone, Copy, PartialEq)]
    struct End {
        arc: usize,
        at_start: bool,
    }
    let mut ring: Vec<Vec<(f64, End)>> = vec![Vec::new(); u.n()];
    for (k, arc) in arcs.iter().enumerate() {
        let out_dir = arc.points[1] - arc.points[0];
        let last = arc.points.len() - 1;
        let in_dir = arc.points[last - 1] - arc.points[last];
        ring[arc.from_dp].push((
            out_dir.y.atan2(out_dir.x),
            End {
                arc: k,
                at_start: true,
            },
        ));
        ring[arc.to_dp].push((
            in_dir.y.atan2(in_dir.x),
            End {
                arc: k,
                at_start: false,
            },
        ));
    }
    for r in ring.iter_mut() {
        debug_assert_eq!(r.len(), 4);
        r.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    }

    // half-edge h = 2*arc + dir, dir 0 = forward (curve direction)
    let he_count = 2 * n2;
    let target_end = |h: usize| -> (usize, End) {
        let (arc, fwd) = (h / 2, h % 2 == 0);
        if fwd {
            (
                arcs[arc].to_dp,
                End {
                    arc,
                    at_start: false,
                },
            )
        } else {
            (
                arcs[arc].from_dp,
                End {
                    arc,
                    at_start: true,
                },
            )
        }
    };
    let he_from_end = |e: End| -> usize {
        if e.at_start {
            2 * e.arc // leaves along the arc forward
        } else {
            2 * e.arc + 1 // leaves along the arc backward
        }
    };
    let next = |h: usize| -> usize {
        let (node, e_arr) = target_end(h);
        let r = &ring[node];
        let idx = r
            .iter()
            .position(|(_, e)| *e == e_arr)
            .expect("arriving end registered at node");
        // clockwise next in the counterclockwise-sorted ring
        let e_next = r[(idx + r.len() - 1) % r.len()].1;
        he_from_end(e_next)
    };

    // face orbits
    let mut face_of = vec![usize::MAX; he_count];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for h0 in 0..he_count {
        if face_of[h0] != usize::MAX {
            continue;
        }
        let id = cycles.len();
        let mut cycle = Vec::new();
        let mut h = h0;
        loop {
            face_of[h] = id;
            cycle.push(h);
            h = next(h);
            if h == h0 {
                break;
            }
        }
        cycles.push(cycle);
    }

    if cycles.len() != u.n() + 2 {
        return Err(Error::Consistency(format!(
            "arrangement has {} faces, expected n + 2 = {}",
            cycles.len(),
            u.n() + 2
        )));
    }

    // total turning identifies the unbounded face (-1 turn vs +1)
    let he_points = |h: usize| -> Vec<Vec2> {
        let (arc, fwd) = (h / 2, h % 2 == 0);
        if fwd {
            arcs[arc].points.clone()
        } else {
            arcs[arc].points.iter().rev().copied().collect()
        }
    };
    let mut unbounded = usize::MAX;
    for (id, cycle) in cycles.iter().enumerate() {
        let mut turn = 0.0;
        for (ci, &h) in cycle.iter().enumerate() {
            let pts = he_points(h);
            for w in pts.windows(3) {
                turn += signed_angle(w[1] - w[0], w[2] - w[1]);
            }
            let nxt = he_points(cycle[(ci + 1) % cycle.len()]);
            let m = pts.len();
            turn += signed_angle(pts[m - 1] - pts[m - 2], nxt[1] - nxt[0]);
        }
        let turns = turn / TAU;
        let rounded = turns.round();
        if (turns - rounded).abs() > TURNING_RESIDUAL_TOL {
            return Err(Error::Consistency(format!(
                "face {id} turning {turns} is not an integer"
            )));
        }
        match rounded as i64 {
            1 => {}
            -1 => {
                if unbounded != usize::MAX {
                    return Err(Error::Consistency(
                        "two faces claim to be unbounded".into(),
                    ));
                }
                unbounded = id;
            }
            other => {
                return Err(Error::Consistency(format!(
                    "face {id} has total turning {other}, expected +-1"
                )));
            }
        }
    }
    if unbounded == usize::MAX {
        return Err(Error::Consistency("no unbounded face found".into()));
    }

    // representative points: best-clearance left offset from a boundary
    // segment midpoint
    let all_segments: Vec<(Vec2, Vec2)> = {
        let v = u.vertices();
        let m = v.len();
        (0..m).map(|i| (v[i], v[(i + 1) % m])).collect()
    };
    let mut faces = Vec::new();
    for (id, cycle) in cycles.iter().enumerate() {
        let mut best: Option<(f64, Vec2)> = None;
        for &h in cycle {
            let pts = he_points(h);
            for w in pts.windows(2) {
                let mid = (w[0] + w[1]) * 0.5;
                let seg_dir = w[1] - w[0];
                let mut clearance = f64::INFINITY;
                for &(a, b) in &all_segments {
                    // skip the segment the midpoint lies on
                    if point_segment_distance(mid, a, b) < 1e-12 * u.diameter() {
                        continue;
                    }
                    clearance = clearance.min(point_segment_distance(mid, a, b));
                }
                if best.as_ref().map_or(true, |(d, _)| clearance > *d) {
                    let left = crate::geom::v2(-seg_dir.y, seg_dir.x).normalized();
                    best = Some((clearance, mid + left * (clearance * 0.5)));
                }
            }
        }
        let (clearance, rep) = best.expect("face has at least one segment");
        if clearance < FACE_CLEARANCE_TOL * u.diameter() {
            return Err(Error::Genericity(format!(
                "face {id} is too small to place a representative point"
            )));
        }
        let winding = crate::plane::certified_winding(u, rep)?;
        let mut corners: Vec<usize> = cycle.iter().map(|&h| target_end(h).0).collect();
        let degree = cycle.len();
        corners.dedup();
        faces.push(Face {
            id,
            representative: rep,
            winding,
            unbounded: id == unbounded,
            degree,
            corners,
        });
    }

    if faces[unbounded].winding != 0 {
        return Err(Error::Consistency(format!(
            "unbounded face has winding {}",
            faces[unbounded].winding
        )));
    }

    // adjacency across each arc: left face of forward, left face of backward
    let adjacency: Vec<(usize, usize)> = (0..n2)
        .map(|arc| (face_of[2 * arc], face_of[2 * arc + 1]))
        .collect();

    // triangles: degree-3 bounded-or-unbounded faces with 3 distinct corners
    let mut triangles = Vec::new();
    for (id, cycle) in cycles.iter().enumerate() {
        if cycle.len() != 3 {
            continue;
        }
        let corner_list: Vec<usize> = cycle.iter().map(|&h| target_end(h).0).collect();
        let mut sorted = corner_list.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != 3 {
            continue;
        }
        let arcs_in_cycle: [usize; 3] = [cycle[0] / 2, cycle[1] / 2, cycle[2] / 2];
        let fwd: [bool; 3] = [cycle[0] % 2 == 0, cycle[1] % 2 == 0, cycle[2] % 2 == 0];
        // does the cycle visit the sides in the cyclic order of the curve's
        // traversal (arc indices ascending cyclically)?
        let (a, b, c) = (arcs_in_cycle[0], arcs_in_cycle[1], arcs_in_cycle[2]);
        let ordering_matches = (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
        let q = fwd
            .iter()
            .filter(|&&f| if ordering_matches { f } else { !f })
            .count();
        triangles.push(VanishingTriangle {
            face: id,
            sign: if q % 2 == 0 { 1 } else { -1 },
            corners: [corner_list[0], corner_list[1], corner_list[2]],
        });
    }

    Ok(Arrangement {
        face_map: FaceMap {
            faces,
            unbounded_face: unbounded,
            adjacency,
        },
        triangles,
    })
}

/// Simple closed curve: two faces, no triangles.
fn build_simple(u: &UnicursalCurve) -> Result<Arrangement> {
    let v = u.vertices();
    let m = v.len();
    // representative inside: left-offset from the segment midpoint with the
    // best clearance, on whichever side has nonzero winding
    let mut best: Option<(f64, Vec2, Vec2)> = None;
    for i in 0..m {
        let (a, b) = (v[i], v[(i + 1) % m]);
        let mid = (a + b) * 0.5;
        let mut clearance = f64::INFINITY;
        for j in 0..m {
            if j == i {
                continue;
            }
            clearance = clearance.min(point_segment_distance(mid, v[j], v[(j + 1) % m]));
        }
        if best.as_ref().map_or(true, |(d, _, _)| clearance > *d) {
            let left = crate::geom::v2(-(b - a).y, (b - a).x).normalized();
            best = Some((clearance, mid, left));
        }
    }
    let (clearance, mid, left) = best.unwrap();
    if clearance < FACE_CLEARANCE_TOL * u.diameter() {
        return Err(Error::Genericity(
            "curve too thin to place representative points".into(),
        ));
    }
    let p_left = mid + left * (clearance * 0.5);
    let p_right = mid - left * (clearance * 0.5);
    let w_left = crate::plane::certified_winding(u, p_left)?;
    let w_right = crate::plane::certified_winding(u, p_right)?;
    let (inside, outside, w_in) = if w_left == 0 {
        (p_right, p_left, w_right)
    } else {
        (p_left, p_right, w_left)
    };
    if w_in == 0 {
        return Err(Error::Consistency(
            "simple curve with zero winding on both sides".into(),
        ));
    }
    let faces = vec![
        Face {
            id: 0,
            representative: inside,
            winding: w_in,
            unbounded: false,
            degree: 1,
            corners: vec![],
        },
        Face {
            id: 1,
            representative: outside,
            winding: 0,
            unbounded: true,
            degree: 1,
            corners: vec![],
        },
    ];
    Ok(Arrangement {
        face_map: FaceMap {
            faces,
            unbounded_face: 1,
            adjacency: vec![(0, 1)],
        },
        triangles: Vec::new(),
    })
}

struct Arc {
    from_dp: usize,
    to_dp: usize,
    /// Polyline including both double-point endpoints.
    points: Vec<Vec2>,
}

/// Splits the curve at its passages into 2n arcs in traversal order; arc k
/// runs from passage k to passage k+1.
fn split_arcs(u: &UnicursalCurve) -> Vec<Arc> {
    let ps = u.passages();
    let n2 = ps.len();
    let mut arcs = Vec::with_capacity(n2);
    for k in 0..n2 {
        let from = &ps[k];
        let to = &ps[(k + 1) % n2];
        let mut points = vec![u.double_points()[from.dp].position];
        points.extend(crate::plane::vertices_between(u, from.arclen, to.arclen));
        points.push(u.double_points()[to.dp].position);
        arcs.push(Arc {
            from_dp: from.dp,
            to_dp: to.dp,
            points,
        });
    }
    arcs
}
