//! Canonical test and demo curves: simple closed curves, curves with a
//! prescribed small number of double points, before/after pairs for the
//! elementary moves, and randomized generic curves for property suites.
//!
//! All constructors take a sample count and use an irrational-ish phase so
//! that crossings land strictly inside polyline edges.

use rand::Rng;

use crate::codecs::PlaneCurveInput;
use crate::error::Result;
use crate::geom::{v2, v3, Vec2, Vec3};
use crate::plane::{analyze_curve, UnicursalCurve};

const TAU: f64 = 2.0 * std::f64::consts::PI;

fn sampled(n: usize, phase: f64, f: impl Fn(f64) -> Vec2) -> PlaneCurveInput {
    let pts = (0..n)
        .map(|k| f(TAU * (k as f64 + phase) / n as f64))
        .collect();
    PlaneCurveInput::new(pts).expect("fixture curves are valid polylines")
}

/// Unit circle, counterclockwise.
pub fn circle(samples: usize) -> PlaneCurveInput {
    sampled(samples, 0.0, |t| v2(t.cos(), t.sin()))
}

/// Axis-ratio rx : ry ellipse, counterclockwise.
pub fn ellipse(rx: f64, ry: f64, samples: usize) -> PlaneCurveInput {
    sampled(samples, 0.0, |t| v2(rx * t.cos(), ry * t.sin()))
}

/// Unit square as a 4-vertex polyline.
pub fn square() -> PlaneCurveInput {
    PlaneCurveInput::new(vec![
        v2(1.0, 1.0),
        v2(-1.0, 1.0),
        v2(-1.0, -1.0),
        v2(1.0, -1.0),
    ])
    .unwrap()
}

/// Figure-eight curve with one double point at the origin.
pub fn lemniscate(samples: usize) -> PlaneCurveInput {
    sampled(samples, 0.31, |t| v2(t.sin(), t.sin() * t.cos()))
}

/// Circle with one positive kink (index-2 curve): a limacon with an inner
/// loop of the same rotational sense.
pub fn kink_curve(samples: usize) -> PlaneCurveInput {
    sampled(samples, 0.5, |t| {
        let r = 1.0 + 1.8 * t.cos();
        v2(r * t.cos(), r * t.sin())
    })
}

/// Circle with two disjoint same-sense kinks (index-3 epicyclic curve).
pub fn two_kink_circle(samples: usize) -> PlaneCurveInput {
    sampled(samples, 0.37, |t| {
        v2(
            t.cos() + 0.55 * (3.0 * t).cos(),
            t.sin() + 0.55 * (3.0 * t).sin(),
        )
    })
}

/// The standard 3-crossing trefoil shadow: the (2,3) torus-knot projection,
/// mirrored so that the alternating over/under assignment carries all-plus
/// signs.
pub fn trefoil_shadow(samples: usize) -> PlaneCurveInput {
    sampled(samples, 0.37, |t| {
        let r = 2.0 + (3.0 * t).cos();
        v2(r * (2.0 * t).cos(), -r * (2.0 * t).sin())
    })
}

/// Three-fold symmetric trefoil-shadow family: the central triangle
/// degenerates to a triple point at `a = 1` and reopens flipped beyond it.
pub fn triangle_family(a: f64, samples: usize) -> PlaneCurveInput {
    sampled(samples, 0.23, |t| {
        v2(
            t.cos() + a * (2.0 * t).cos(),
            t.sin() - a * (2.0 * t).sin(),
        )
    })
}

/// Before/after pair for a triple-point move: same curve family on the two
/// sides of the triple point.
pub fn triple_point_pair(samples: usize) -> (PlaneCurveInput, PlaneCurveInput) {
    (triangle_family(0.85, samples), triangle_family(1.15, samples))
}

/// Before/after pair for a direct self-tangency move: a two-revolution
/// spiral whose outer revolution is dented inward across the inner one,
/// creating two double points on parallel same-direction strands.
pub fn direct_tangency_pair(samples: usize) -> (PlaneCurveInput, PlaneCurveInput) {
    let spiral = move |dent: f64| {
        let pts = (0..samples)
            .map(|k| {
                let phi = 2.0 * TAU * (k as f64 + 0.5) / samples as f64;
                let mut r = 1.0 + 0.25 * phi / TAU;
                if dent > 0.0 && phi > TAU {
                    let x = (phi - 3.0 * std::f64::consts::PI) / 0.9;
                    if x.abs() < 1.0 {
                        r -= dent * (std::f64::consts::FRAC_PI_2 * x).cos().powi(2);
                    }
                }
                v2(r * phi.cos(), r * phi.sin())
            })
            .collect();
        PlaneCurveInput::new(pts).expect("spiral is a valid polyline")
    };
    (spiral(0.0), spiral(0.35))
}

/// Before/after pair for an inverse self-tangency move: a circle whose top
/// arc is pushed down through the bottom arc, creating two double points on
/// antiparallel strands.
pub fn inverse_tangency_pair(samples: usize) -> (PlaneCurveInput, PlaneCurveInput) {
    let pushed = move |depth: f64| {
        sampled(samples, 0.41, |t| {
            let (x, y) = (t.cos(), t.sin());
            let dx = x / 1.1;
            if y > 0.0 && dx.abs() < 1.0 {
                let ramp = (y / 0.3).min(1.0);
                let bump = (std::f64::consts::FRAC_PI_2 * dx).cos().powi(2);
                v2(x, y - depth * bump * ramp)
            } else {
                v2(x, y)
            }
        })
    };
    (pushed(0.0), pushed(2.3))
}

/// A wavy but embedded unknot in space, isotopic to the round circle.
pub fn wavy_unknot(samples: usize) -> Vec<Vec3> {
    (0..samples)
        .map(|k| {
            let t = TAU * k as f64 / samples as f64;
            v3(t.cos(), t.sin(), 0.3 * (3.0 * t).sin())
        })
        .collect()
}

/// Standard Hopf pair: the unit circle in the xy-plane and a unit circle in
/// the xz-plane through its center.
pub fn hopf_pair(samples: usize) -> (Vec<Vec3>, Vec<Vec3>) {
    let a = (0..samples)
        .map(|k| {
            let t = TAU * k as f64 / samples as f64;
            v3(t.cos(), t.sin(), 0.0)
        })
        .collect();
    let b = (0..samples)
        .map(|k| {
            let t = TAU * k as f64 / samples as f64;
            v3(1.0 + t.cos(), 0.0, t.sin())
        })
        .collect();
    (a, b)
}

/// Two far-apart unlinked circles.
pub fn distant_circles(samples: usize) -> (Vec<Vec3>, Vec<Vec3>) {
    let a = (0..samples)
        .map(|k| {
            let t = TAU * k as f64 / samples as f64;
            v3(t.cos(), t.sin(), 0.0)
        })
        .collect();
    let b = (0..samples)
        .map(|k| {
            let t = TAU * k as f64 / samples as f64;
            v3(10.0 + t.cos(), 0.0, t.sin())
        })
        .collect();
    (a, b)
}

/// Random closed trigonometric curve with up to `max_n` double points,
/// resampled until it passes the genericity checks. Returns the analyzed
/// curve together with its polyline.
pub fn random_generic_curve<R: Rng>(
    rng: &mut R,
    max_n: usize,
    samples: usize,
) -> (PlaneCurveInput, UnicursalCurve) {
    loop {
        let mut ax = [0.0; 4];
        let mut bx = [0.0; 4];
        let mut ay = [0.0; 4];
        let mut by = [0.0; 4];
        for j in 0..4 {
            let scale = 1.0 / (j as f64 + 1.0).powf(1.3);
            ax[j] = rng.gen_range(-1.0..1.0) * scale;
            bx[j] = rng.gen_range(-1.0..1.0) * scale;
            ay[j] = rng.gen_range(-1.0..1.0) * scale;
            by[j] = rng.gen_range(-1.0..1.0) * scale;
        }
        // keep a dominant embedded component so curves stay tame
        ax[0] += 1.2f64.copysign(ax[0]);
        by[0] += 1.2f64.copysign(by[0]);
        let phase = rng.gen_range(0.0..1.0);
        let pts: Vec<Vec2> = (0..samples)
            .map(|k| {
                let t = TAU * (k as f64 + phase) / samples as f64;
                let mut x = 0.0;
                let mut y = 0.0;
                for j in 0..4 {
                    let jt = (j as f64 + 1.0) * t;
                    x += ax[j] * jt.cos() + bx[j] * jt.sin();
                    y += ay[j] * jt.cos() + by[j] * jt.sin();
                }
                v2(x, y)
            })
            .collect();
        let Ok(curve) = PlaneCurveInput::new(pts) else {
            continue;
        };
        match analyze_curve(&curve) {
            Ok(u) if u.n() <= max_n => return (curve, u),
            _ => continue,
        }
    }
}

/// Finds a random generic curve with exactly `n` double points.
pub fn random_curve_with_n<R: Rng>(
    rng: &mut R,
    n: usize,
    samples: usize,
) -> (PlaneCurveInput, UnicursalCurve) {
    loop {
        let (c, u) = random_generic_curve(rng, n + 4, samples);
        if u.n() == n {
            return (c, u);
        }
    }
}

/// Analyze a fixture, panicking on genericity failures (fixtures are tuned
/// to be generic).
pub fn analyzed(c: &PlaneCurveInput) -> Result<UnicursalCurve> {
    analyze_curve(c)
}
