//! Small 2D/3D vector and segment primitives shared by the geometry and
//! integration modules.

use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

pub const fn v2(x: f64, y: f64) -> Vec2 {
    Vec2 { x, y }
}

impl Vec2 {
    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product; positive when `o` lies
    /// counterclockwise of `self`.
    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn normalized(self) -> Vec2 {
        let n = self.norm();
        v2(self.x / n, self.y / n)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        v2(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        v2(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, s: f64) -> Vec2 {
        v2(self.x * s, self.y * s)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        v2(-self.x, -self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

pub const fn v3(x: f64, y: f64, z: f64) -> Vec3 {
    Vec3 { x, y, z }
}

impl Vec3 {
    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Vec3) -> Vec3 {
        v3(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        v3(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        v3(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        v3(self.x * s, self.y * s, self.z * s)
    }
}

/// Mixed (scalar triple) product [a, b, c] = a . (b x c).
pub fn mixed(a: Vec3, b: Vec3, c: Vec3) -> f64 {
    a.dot(b.cross(c))
}

/// Signed angle from `a` to `b` in (-pi, pi].
pub fn signed_angle(a: Vec2, b: Vec2) -> f64 {
    a.cross(b).atan2(a.dot(b))
}

/// Winding number of the closed polyline `poly` around `p`, as the total
/// subtended angle divided by 2*pi. Returns (rounded integer, residual).
///
/// Each straight segment subtends less than pi at any point not on it, so
/// summing per-segment signed angles is exact up to float noise.
pub fn winding_number(poly: &[Vec2], p: Vec2) -> (i64, f64) {
    let mut total = 0.0;
    let n = poly.len();
    for i in 0..n {
        let a = poly[i] - p;
        let b = poly[(i + 1) % n] - p;
        total += signed_angle(a, b);
    }
    let turns = total / (2.0 * std::f64::consts::PI);
    let rounded = turns.round();
    (rounded as i64, (turns - rounded).abs())
}

/// Independent winding-number computation by signed crossings of the
/// horizontal ray through `p` toward +x. Used as an oracle against the
/// angle-summation route.
pub fn winding_number_ray(poly: &[Vec2], p: Vec2) -> i64 {
    let mut w = 0i64;
    let n = poly.len();
    for i in 0..n {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        let (ya, yb) = (a.y - p.y, b.y - p.y);
        if ya <= 0.0 && yb > 0.0 {
            // upward crossing; check it happens right of p
            let t = ya / (ya - yb);
            if a.x + t * (b.x - a.x) > p.x {
                w += 1;
            }
        } else if ya > 0.0 && yb <= 0.0 {
            let t = ya / (ya - yb);
            if a.x + t * (b.x - a.x) > p.x {
                w -= 1;
            }
        }
    }
    w
}

/// Total turning of a closed polyline (sum of exterior angles / 2*pi).
pub fn turning_number(poly: &[Vec2]) -> (i64, f64) {
    let n = poly.len();
    let mut total = 0.0;
    for i in 0..n {
        let d0 = poly[(i + 1) % n] - poly[i];
        let d1 = poly[(i + 2) % n] - poly[(i + 1) % n];
        total += signed_angle(d0, d1);
    }
    let turns = total / (2.0 * std::f64::consts::PI);
    let rounded = turns.round();
    (rounded as i64, (turns - rounded).abs())
}

/// Closest distance between point `p` and segment `[a, b]`.
pub fn point_segment_distance(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let ab = b - a;
    let t = ((p - a).dot(ab) / ab.norm_sq()).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

pub fn point_segment_distance3(p: Vec3, a: Vec3, b: Vec3) -> f64 {
    let ab = b - a;
    let t = ((p - a).dot(ab) / ab.norm_sq()).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Closest distance between two 3D segments.
pub fn segment_segment_distance3(p1: Vec3, q1: Vec3, p2: Vec3, q2: Vec3) -> f64 {
    let d1 = q1 - p1;
    let d2 = q2 - p2;
    let r = p1 - p2;
    let a = d1.norm_sq();
    let e = d2.norm_sq();
    let f = d2.dot(r);
    let (mut s, mut t);
    let c = d1.dot(r);
    let b = d1.dot(d2);
    let denom = a * e - b * b;
    if denom > 1e-300 {
        s = ((b * f - c * e) / denom).clamp(0.0, 1.0);
    } else {
        s = 0.0;
    }
    t = (b * s + f) / e;
    if t < 0.0 {
        t = 0.0;
        s = (-c / a).clamp(0.0, 1.0);
    } else if t > 1.0 {
        t = 1.0;
        s = ((b - c) / a).clamp(0.0, 1.0);
    }
    let c1 = p1 + d1 * s;
    let c2 = p2 + d2 * t;
    (c1 - c2).norm()
}

/// Proper-crossing test for two 2D segments. Returns the intersection
/// parameters (t on ab, u on cd) when the open segments cross transversally.
pub fn segment_intersection(a: Vec2, b: Vec2, c: Vec2, d: Vec2) -> Option<(f64, f64)> {
    let r = b - a;
    let s = d - c;
    let denom = r.cross(s);
    if denom == 0.0 {
        return None;
    }
    let qp = c - a;
    let t = qp.cross(s) / denom;
    let u = qp.cross(r) / denom;
    if t > 0.0 && t < 1.0 && u > 0.0 && u < 1.0 {
        Some((t, u))
    } else {
        None
    }
}

pub fn polyline_length2(poly: &[Vec2]) -> f64 {
    let n = poly.len();
    (0..n).map(|i| (poly[(i + 1) % n] - poly[i]).norm()).sum()
}

pub fn polyline_diameter2(poly: &[Vec2]) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..poly.len() {
        for j in (i + 1)..poly.len() {
            d = d.max((poly[j] - poly[i]).norm());
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn winding_of_square() {
        let sq = vec![v2(1.0, 1.0), v2(-1.0, 1.0), v2(-1.0, -1.0), v2(1.0, -1.0)];
        let (w, res) = winding_number(&sq, v2(0.1, -0.2));
        assert_eq!(w, 1);
        assert!(res < 1e-12);
        assert_eq!(winding_number_ray(&sq, v2(0.1, -0.2)), 1);
        let (w_out, _) = winding_number(&sq, v2(3.0, 0.0));
        assert_eq!(w_out, 0);
    }

    #[test]
    fn turning_of_polygons() {
        let ccw = vec![v2(1.0, 0.0), v2(0.0, 1.0), v2(-1.0, 0.0), v2(0.0, -1.0)];
        assert_eq!(turning_number(&ccw).0, 1);
        let cw: Vec<Vec2> = ccw.iter().rev().copied().collect();
        assert_eq!(turning_number(&cw).0, -1);
    }

    #[test]
    fn segment_crossing() {
        let hit = segment_intersection(v2(-1.0, 0.0), v2(1.0, 0.0), v2(0.0, -1.0), v2(0.0, 1.0));
        let (t, u) = hit.unwrap();
        assert!((t - 0.5).abs() < 1e-15 && (u - 0.5).abs() < 1e-15);
        assert!(
            segment_intersection(v2(0.0, 0.0), v2(1.0, 0.0), v2(0.0, 1.0), v2(1.0, 1.0)).is_none()
        );
    }
}
