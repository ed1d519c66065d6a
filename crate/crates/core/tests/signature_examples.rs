use ratinv::frontend::{parse_polynomial, parse_rational};
use ratinv::invariants::{check_invariance, AlgebraicGroupAction};
use ratinv::poly::{rat, ratio, Table, VarRole, VarTable};
use ratinv::signature::*;

fn t() -> Table {
    VarTable::with_role(["t"], VarRole::CurveParam).unwrap()
}

fn p() -> Table {
    VarTable::with_role(["p"], VarRole::CurveParam).unwrap()
}

fn curve(x: &str, y: &str) -> ParametricCurve {
    ParametricCurve::new(
        parse_rational(x, &t()).unwrap(),
        parse_rational(y, &t()).unwrap(),
    )
    .unwrap()
}

fn se2() -> AlgebraicGroupAction {
    let tb = VarTable::new([
        ("c", VarRole::GroupParam),
        ("s", VarRole::GroupParam),
        ("a", VarRole::GroupParam),
        ("b", VarRole::GroupParam),
        ("x", VarRole::Source),
        ("y", VarRole::Source),
    ])
    .unwrap();
    AlgebraicGroupAction::new(
        &["c", "s", "a", "b"],
        &["x", "y"],
        &["X", "Y"],
        vec![parse_polynomial("c^2 + s^2 - 1", &tb).unwrap()],
        vec![rat(1), rat(0), rat(0), rat(0)],
        vec![
            parse_rational("c*x - s*y + a", &tb).unwrap(),
            parse_rational("s*x + c*y + b", &tb).unwrap(),
        ],
        None,
    )
    .unwrap()
}

#[test]
fn se2_prolongation() {
    let j2 = prolong_action(&se2(), 2).unwrap();
    let tb = j2.table();
    assert_eq!(
        j2.components()[2],
        parse_rational("(s + c*y_1)/(c - s*y_1)", tb).unwrap()
    );
    assert_eq!(
        j2.components()[3],
        parse_rational("y_2/(c - s*y_1)^3", tb).unwrap()
    );
}

#[test]
fn euclidean_pair_invariant() {
    let j3 = prolong_action(&se2(), 3).unwrap();
    let pair = euclidean_classifying_pair();
    assert!(check_invariance(&j3, pair.inv1()).unwrap());
    assert!(check_invariance(&j3, pair.inv2()).unwrap());
    let y1 = parse_rational("y_1", pair.context().table()).unwrap();
    assert!(!check_invariance(&j3, &y1).unwrap());
}

#[test]
fn gamma_lifts_and_signatures() {
    let g1 = curve("t^2 - 1", "t^3 - t");
    let lift = lift_curve(&g1, 3).unwrap();
    let tb = t();
    assert_eq!(lift[0], parse_rational("(3*t^2 - 1)/(2*t)", &tb).unwrap());
    assert_eq!(lift[1], parse_rational("(3*t^2 + 1)/(4*t^3)", &tb).unwrap());
    assert_eq!(
        lift[2],
        parse_rational("-(3*t^2 + 3)/(8*t^5)", &tb).unwrap()
    );
    let pair = euclidean_classifying_pair();
    let (k2, ks) = signature_parametrization(&g1, &pair).unwrap();
    assert_eq!(
        k2,
        parse_rational("(6*t^2 + 2)^2/(9*t^4 - 2*t^2 + 1)^3", &tb).unwrap()
    );
    assert_eq!(
        ks,
        parse_rational("-24*t*(9*t^4 + 4*t^2 - 1)/(9*t^4 - 2*t^2 + 1)^3", &tb).unwrap()
    );

    let g2 = curve("t^2", "t^3");
    let (k2, ks) = signature_parametrization(&g2, &pair).unwrap();
    assert_eq!(k2, parse_rational("36/(t^2*(9*t^2 + 4)^3)", &tb).unwrap());
    assert_eq!(
        ks,
        parse_rational("-24*(9*t^2 + 1)/((9*t^2 + 4)^3*t^3)", &tb).unwrap()
    );

    let s1 = curve_signature(&g1, &pair).unwrap();
    let s2 = curve_signature(&g2, &pair).unwrap();
    assert!(!signatures_equal(&s1, &s2));
    let moved = g1
        .transform(&se2(), &[ratio(3, 5), ratio(4, 5), rat(1), rat(2)])
        .unwrap();
    let s3 = curve_signature(&moved, &pair).unwrap();
    assert!(signatures_equal(&s1, &s3));
}

#[test]
fn quartic_signatures() {
    let pb = p();
    let bf = binary_form_classifying_pair(4).unwrap();
    let phi = ParametricCurve::new(
        parse_rational("p", &pb).unwrap(),
        parse_rational("p^4 + 1", &pb).unwrap(),
    )
    .unwrap();
    let ctx = bf.pair.context();
    assert_eq!(
        restrict_to_curve(ctx, &bf.h, &phi).unwrap(),
        parse_rational("12*p^2", &pb).unwrap()
    );
    assert_eq!(
        restrict_to_curve(ctx, &bf.t, &phi).unwrap(),
        parse_rational("-24*p*(p^4 - 1)", &pb).unwrap()
    );
    let (a, b) = signature_parametrization(&phi, &bf.pair).unwrap();
    assert_eq!(a, parse_rational("(p^4 - 1)^2/(3*p^4)", &pb).unwrap());
    assert_eq!(b, parse_rational("(p^8 - p^4 + 1)/(6*p^4)", &pb).unwrap());

    let s1 = form_signature(4, &parse_polynomial("p^4 + 1", &pb).unwrap()).unwrap();
    assert_eq!(s1.implicit.as_ref().unwrap().to_string(), "3*T1 - 6*T2 + 1");
    let s2 = form_signature(4, &parse_polynomial("p^4 + p^2 + 1", &pb).unwrap()).unwrap();
    assert_eq!(
        s2.sigma1,
        parse_rational("324*p^2*(p^4 - 1)^2/(2*p^4 + 11*p^2 + 2)^3", &pb).unwrap()
    );
    let cubic = parse_polynomial(
        "9800*T2^3 - 19773*T1^2 + 79092*T1*T2 - 64392*T2^2 - 13182*T1 + 33714*T2 - 972",
        &signature_table(),
    )
    .unwrap();
    assert_eq!(s2.implicit.as_ref().unwrap(), &cubic);
}

fn form(phi: &str) -> SignatureCurve {
    form_signature(4, &parse_polynomial(phi, &p()).unwrap()).unwrap()
}

#[test]
fn quartic_second_parametrization() {
    let s = form("p^4 + p^2 + 1");
    let expected = parse_rational(
        "3*(16*p^8 + 20*p^6 + 9*p^4 + 20*p^2 + 16)/(2*(2*p^4 + 11*p^2 + 2)^2)",
        &p(),
    )
    .unwrap();
    assert_eq!(s.sigma2, expected);
}

#[test]
fn quartic_equivalences() {
    assert!(signatures_equal(&form("p^4 + 1"), &form("p^4 - 1")));
    assert!(signatures_equal(
        &form("p^4 + p^2 + 1"),
        &form("p^4 - p^2 + 1")
    ));
    assert!(!signatures_equal(&form("p^4 + 1"), &form("p^4 + p^2 + 1")));
}

#[test]
fn vanishing_hessian_is_exceptional() {
    let r = form_signature(4, &parse_polynomial("(p + 1)^4", &p()).unwrap());
    assert!(matches!(r, Err(ratinv::Error::ExceptionalCurve(_))));
}

#[test]
fn circle_signature_is_a_point() {
    let c = curve("(1 - t^2)/(1 + t^2)", "2*t/(1 + t^2)");
    let s = curve_signature(&c, &euclidean_classifying_pair()).unwrap();
    assert!(s.degenerate);
    assert_eq!(s.point(), Some((rat(1), rat(0))));
    let bigger = curve("2*(1 - t^2)/(1 + t^2)", "4*t/(1 + t^2)");
    let s2 = curve_signature(&bigger, &euclidean_classifying_pair()).unwrap();
    assert_eq!(s2.point(), Some((ratio(1, 4), rat(0))));
    assert!(!signatures_equal(&s, &s2));
}

/// The planar action induced on graphs of inhomogeneous forms of degree 4.
fn projective_plane_action() -> AlgebraicGroupAction {
    let tb = VarTable::new([
        ("a11", VarRole::GroupParam),
        ("a12", VarRole::GroupParam),
        ("a21", VarRole::GroupParam),
        ("a22", VarRole::GroupParam),
        ("p", VarRole::Source),
        ("q", VarRole::Source),
    ])
    .unwrap();
    AlgebraicGroupAction::new(
        &["a11", "a12", "a21", "a22"],
        &["p", "q"],
        &["P", "Q"],
        vec![],
        vec![rat(1), rat(0), rat(0), rat(1)],
        vec![
            parse_rational("(a11*p + a12)/(a21*p + a22)", &tb).unwrap(),
            parse_rational("q/(a21*p + a22)^4", &tb).unwrap(),
        ],
        None,
    )
    .unwrap()
}

#[test]
fn quartic_pair_is_invariant() {
    use rand::SeedableRng;
    let j4 = prolong_action(&projective_plane_action(), 4).unwrap();
    let bf = binary_form_classifying_pair(4).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let src = j4.source_table().unwrap();
    for _ in 0..4 {
        let g = ratinv::invariants::GroupSampler::GL2.sample(&mut rng);
        let Ok(images) = j4.specialize(&g) else {
            continue;
        };
        for f in [bf.pair.inv1(), bf.pair.inv2()] {
            let f = f.embed(&src).unwrap();
            assert_eq!(f.compose(&images, &src).unwrap(), f);
        }
    }
}

fn moebius(a: i64, b: i64, c: i64, d: i64) -> ratinv::poly::RationalFunction {
    parse_rational(&format!("(({a})*t + ({b}))/(({c})*t + ({d}))"), &t()).unwrap()
}

#[test]
fn signature_survives_reparametrization() {
    use rand::{Rng, SeedableRng};
    let pair = euclidean_classifying_pair();
    let g2 = curve("t^2", "t^3");
    let base = curve_signature(&g2, &pair).unwrap();
    let g1 = curve("t^2 - 1", "t^3 - t");
    let moved = g1.reparametrize(&moebius(2, 1, 1, -3)).unwrap();
    assert!(signatures_equal(
        &curve_signature(&g1, &pair).unwrap(),
        &curve_signature(&moved, &pair).unwrap()
    ));
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let mut done = 0;
    while done < 10 {
        let (a, b, c, d) = (
            rng.gen_range(-5..=5),
            rng.gen_range(-5..=5),
            rng.gen_range(-5..=5),
            rng.gen_range(-5..=5),
        );
        if a * d - b * c == 0 {
            continue;
        }
        let r = g2.reparametrize(&moebius(a, b, c, d)).unwrap();
        assert!(
            signatures_equal(&base, &curve_signature(&r, &pair).unwrap()),
            "({a}t+{b})/({c}t+{d})"
        );
        done += 1;
    }
}

#[test]
fn signature_survives_random_motions() {
    use rand::SeedableRng;
    let pair = euclidean_classifying_pair();
    let g1 = curve("t^2 - 1", "t^3 - t");
    let base = curve_signature(&g1, &pair).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for _ in 0..3 {
        let g = ratinv::invariants::GroupSampler::SE2.sample(&mut rng);
        let moved = g1.transform(&se2(), &g).unwrap();
        assert!(signatures_equal(
            &base,
            &curve_signature(&moved, &pair).unwrap()
        ));
    }
}

#[test]
fn resultant_agrees_with_elimination() {
    let tb = t();
    let cases = [
        ("t", "t^2"),
        ("t^2", "t^4"),
        (
            "36/(t^2*(9*t^2 + 4)^3)",
            "-24*(9*t^2 + 1)/((9*t^2 + 4)^3*t^3)",
        ),
        ("(p^4 - 1)^2/(3*p^4)", "(p^8 - p^4 + 1)/(6*p^4)"),
        ("(t^2 + 1)/(t - 2)", "t/(t^2 - 3)"),
        ("1/t", "(t + 1)/(t^2 + 1)"),
        ("3", "t^2 + 1"),
    ];
    for (a, b) in cases {
        let (a, b) = (a.replace('p', "t"), b.replace('p', "t"));
        let a = parse_rational(&a, &tb).unwrap();
        let b = parse_rational(&b, &tb).unwrap();
        assert_eq!(
            implicitize(&a, &b).unwrap(),
            implicitize_by_elimination(&a, &b).unwrap(),
            "{a} {b}"
        );
    }
}
