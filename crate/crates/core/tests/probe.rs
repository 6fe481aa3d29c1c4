// temporary exploration (deleted before finishing)
use curveint::fixtures::*;
use curveint::plane::*;

fn report(name: &str, c: &curveint::codecs::PlaneCurveInput) {
    match analyze_curve(c) {
        Ok(u) => {
            let r = arnold_invariants(&u).unwrap();
            let fm = face_windings(&u).unwrap();
            let tri = vanishing_triangles(&u).unwrap();
            let ws: Vec<i64> = fm.faces.iter().map(|f| f.winding).collect();
            println!("{name}: n={} alpha={} Iminus={} St={} J+={} J-={} whitney={} windings={:?} tris={:?}",
                r.n, r.alpha, r.i_minus, r.st, r.j_plus, r.j_minus, r.whitney_index, ws,
                tri.iter().map(|t| (t.face, t.sign, fm.faces[t.face].unbounded)).collect::<Vec<_>>());
        }
        Err(e) => println!("{name}: ERROR {e}"),
    }
}

#[test]
fn probe_fixtures() {
    report("circle", &circle(64));
    report("lemniscate", &lemniscate(200));
    report("kink", &kink_curve(240));
    report("two_kink", &two_kink_circle(360));
    report("trefoil_shadow", &trefoil_shadow(480));
    let (b, a) = triple_point_pair(600);
    report("tri_before(a=0.85)", &b);
    report("tri_after(a=1.15)", &a);
    let (b, a) = direct_tangency_pair(720);
    report("dir_before", &b);
    report("dir_after", &a);
    let (b, a) = inverse_tangency_pair(360);
    report("inv_before", &b);
    report("inv_after", &a);
}
