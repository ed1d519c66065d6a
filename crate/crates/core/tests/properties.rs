use std::cmp::Ordering;

use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ratinv::frontend::{builtin_spec, parse_polynomial, parse_rational, ActionSpecDocument};
use ratinv::groebner::{GPoly, GroebnerBasis, Ideal};
use ratinv::invariants::{
    check_invariance, extended_graph_basis, extract_generating_invariants, graph_section_basis,
    rewrite_by_replacement, GroupSampler,
};
use ratinv::poly::{
    gcd, ratio, BigRational, Monomial, MonomialOrder, Polynomial, RationalFunction, Table, VarRole,
    VarTable,
};
use ratinv::signature::{
    implicitize, implicitize_by_elimination, lift_curve, prolong_action, ParametricCurve,
};

fn xyz() -> Table {
    VarTable::with_role(["x", "y", "z"], VarRole::Source).unwrap()
}

fn xy() -> Table {
    VarTable::with_role(["x", "y"], VarRole::Source).unwrap()
}

fn t_table() -> Table {
    VarTable::with_role(["t"], VarRole::CurveParam).unwrap()
}

/// Terms with total degree at most `deg` in `n` variables.
fn poly(n: usize, deg: u32, max_terms: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    let mono = prop::collection::vec(0..=deg, n)
        .prop_filter("degree", move |e| e.iter().sum::<u32>() <= deg);
    prop::collection::vec((mono, -3i64..=3), 1..=max_terms)
}

fn build(table: &Table, terms: &[(Vec<u32>, i64)]) -> Polynomial {
    Polynomial::from_terms(
        table,
        terms
            .iter()
            .map(|(e, c)| (Monomial::from_exponents(e.clone()), ratio(*c, 1))),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in poly(3, 3, 4), g in poly(3, 3, 4), h in poly(3, 2, 3)) {
        let t = xyz();
        let (f, g, h) = (build(&t, &f), build(&t, &g), build(&t, &h));
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&(&f - &f), &Polynomial::zero(&t));
    }

    #[test]
    fn printed_values_reparse(f in poly(3, 3, 5), g in poly(3, 2, 3)) {
        let t = xyz();
        let (f, g) = (build(&t, &f), build(&t, &g));
        prop_assert_eq!(parse_polynomial(&f.to_string(), &t).unwrap(), f.clone());
        if !g.is_zero() {
            let r = RationalFunction::new(f, g).unwrap();
            prop_assert_eq!(parse_rational(&r.to_string(), &t).unwrap(), r);
        }
    }

    #[test]
    fn gcd_divides_and_cofactors_are_coprime(f in poly(2, 2, 3), g in poly(2, 2, 3), h in poly(2, 2, 3)) {
        let t = xy();
        let (f, g, h) = (build(&t, &f), build(&t, &g), build(&t, &h));
        prop_assume!(!h.is_zero() && !(f.is_zero() && g.is_zero()));
        let (a, b) = (&f * &h, &g * &h);
        let d = gcd(&a, &b).unwrap();
        let qa = a.exact_div(&d).unwrap();
        let qb = b.exact_div(&d).unwrap();
        prop_assert_eq!(&(&qa * &d), &a);
        prop_assert_eq!(&(&qb * &d), &b);
        prop_assert!(gcd(&qa, &qb).unwrap().is_constant());
        prop_assert!(d.exact_div(&h).is_ok());
    }

    #[test]
    fn derivative_rules_and_numeric_probe(
        f in poly(2, 2, 3), g in poly(2, 2, 3), u in poly(2, 2, 3), v in poly(2, 1, 2),
        pts in prop::collection::vec((-3i64..=3, -3i64..=3), 3),
    ) {
        let t = xy();
        let (f, g, u, v) = (build(&t, &f), build(&t, &g), build(&t, &u), build(&t, &v));
        prop_assume!(!g.is_zero() && !v.is_zero());
        let p = RationalFunction::new(f, g).unwrap();
        let q = RationalFunction::new(u, v).unwrap();
        let dp = p.derivative(0);
        let dq = q.derivative(0);
        let lhs = p.checked_mul(&q).unwrap().derivative(0);
        let rhs = dp.checked_mul(&q).unwrap().checked_add(&p.checked_mul(&dq).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let sum = p.checked_add(&q).unwrap().derivative(1);
        prop_assert_eq!(sum, p.derivative(1).checked_add(&q.derivative(1)).unwrap());

        let h = ratio(1, 100_000);
        for (x0, y0) in pts {
            let (x0, y0) = (ratio(x0, 1), ratio(y0, 1));
            let at = |x: BigRational| p.evaluate(&[x, y0.clone()]);
            let (Some(exact), Some(hi), Some(lo)) = (dp.evaluate(&[x0.clone(), y0.clone()]), at(&x0 + &h), at(&x0 - &h)) else {
                continue;
            };
            if p.den().evaluate(&[x0.clone(), y0.clone()]).is_zero() {
                continue;
            }
            let numeric = (hi - lo).to_f64().unwrap() / (2.0 * h.to_f64().unwrap());
            let exact = exact.to_f64().unwrap();
            prop_assert!((numeric - exact).abs() <= 1e-6 * exact.abs().max(1.0), "{} vs {}", numeric, exact);
        }
    }
}

/// Naive Buchberger on exponent vectors: every pair, no criteria.
mod naive {
    use super::*;

    pub type P = Vec<(Vec<u32>, BigRational)>;

    pub fn lex(a: &[u32], b: &[u32]) -> Ordering {
        a.cmp(b)
    }

    pub fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
        let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
        da.cmp(&db).then_with(|| {
            for i in (0..a.len()).rev() {
                if a[i] != b[i] {
                    return b[i].cmp(&a[i]);
                }
            }
            Ordering::Equal
        })
    }

    pub type Cmp = fn(&[u32], &[u32]) -> Ordering;

    fn normalize(cmp: Cmp, mut p: P) -> P {
        p.sort_by(|a, b| cmp(&b.0, &a.0));
        let mut out: P = Vec::new();
        for (m, c) in p {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        out
    }

    fn times(p: &P, m: &[u32], c: &BigRational) -> P {
        p.iter()
            .map(|(e, d)| (e.iter().zip(m).map(|(x, y)| x + y).collect(), d * c))
            .collect()
    }

    fn divides(a: &[u32], b: &[u32]) -> bool {
        a.iter().zip(b).all(|(x, y)| x <= y)
    }

    fn minus(a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn reduce(cmp: Cmp, mut p: P, g: &[P]) -> P {
        let mut rest: P = Vec::new();
        while let Some((m, c)) = p.first().cloned() {
            match g.iter().find(|q| divides(&q[0].0, &m)) {
                Some(q) => {
                    let f = -(&c / &q[0].1);
                    let mut s = p.clone();
                    s.extend(times(q, &minus(&m, &q[0].0), &f));
                    p = normalize(cmp, s);
                }
                None => {
                    rest.push((m, c));
                    p.remove(0);
                }
            }
        }
        rest
    }

    pub fn reduced_basis(cmp: Cmp, gens: Vec<P>) -> Vec<P> {
        let mut g: Vec<P> = gens
            .into_iter()
            .map(|p| normalize(cmp, p))
            .filter(|p| !p.is_empty())
            .collect();
        let mut pairs: Vec<(usize, usize)> = (0..g.len())
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .collect();
        while let Some((i, j)) = pairs.pop() {
            let (a, b) = (&g[i], &g[j]);
            let l: Vec<u32> = a[0].0.iter().zip(&b[0].0).map(|(x, y)| *x.max(y)).collect();
            let mut s = times(a, &minus(&l, &a[0].0), &a[0].1.recip());
            s.extend(times(b, &minus(&l, &b[0].0), &-b[0].1.recip()));
            let h = reduce(cmp, normalize(cmp, s), &g);
            if !h.is_empty() {
                let k = g.len();
                pairs.extend((0..k).map(|i| (i, k)));
                g.push(h);
            }
        }
        let mut min: Vec<P> = Vec::new();
        for (k, p) in g.iter().enumerate() {
            let covered = g
                .iter()
                .enumerate()
                .any(|(l, q)| l != k && divides(&q[0].0, &p[0].0) && (q[0].0 != p[0].0 || l < k));
            if !covered {
                min.push(p.clone());
            }
        }
        let mut out: Vec<P> = (0..min.len())
            .map(|k| {
                let others: Vec<P> = min
                    .iter()
                    .enumerate()
                    .filter(|(l, _)| *l != k)
                    .map(|(_, q)| q.clone())
                    .collect();
                let mut p = vec![min[k][0].clone()];
                p.extend(reduce(cmp, min[k][1..].to_vec(), &others));
                monic(p)
            })
            .collect();
        out.sort_by(|a, b| cmp(&b[0].0, &a[0].0));
        out
    }

    pub fn monic(p: P) -> P {
        let lc = p[0].1.clone();
        p.into_iter().map(|(m, c)| (m, c / &lc)).collect()
    }

    pub fn from(cmp: Cmp, p: &Polynomial) -> P {
        normalize(
            cmp,
            p.terms()
                .iter()
                .map(|(m, c)| (m.exponents().to_vec(), c.clone()))
                .collect(),
        )
    }
}

fn ideal() -> impl Strategy<Value = Vec<Vec<(Vec<u32>, i64)>>> {
    prop::collection::vec(poly(3, 2, 3), 1..=3)
}

fn library_basis(
    gens: &[Polynomial],
    order: MonomialOrder,
) -> GroebnerBasis<ratinv::groebner::Rationals> {
    GroebnerBasis::of_polynomials(&xyz(), order, gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn groebner_bases_are_reduced_and_stable(gens in ideal()) {
        let t = xyz();
        let gens: Vec<Polynomial> = gens.iter().map(|g| build(&t, g)).collect();
        for order in [MonomialOrder::lex(vec![0, 1, 2]).unwrap(), MonomialOrder::degrevlex(vec![0, 1, 2]).unwrap()] {
            let gb = library_basis(&gens, order.clone());
            prop_assert!(gb.is_groebner());
            for g in &gens {
                prop_assert!(gb.reduce(g).unwrap().is_zero());
            }
            let again = library_basis(&gb.polynomials(), order);
            prop_assert_eq!(again.polynomials(), gb.polynomials());
        }
    }

    #[test]
    fn groebner_bases_match_naive_buchberger(gens in ideal()) {
        let t = xyz();
        let gens: Vec<Polynomial> = gens.iter().map(|g| build(&t, g)).collect();
        let cases: [(MonomialOrder, naive::Cmp); 2] = [
            (MonomialOrder::lex(vec![0, 1, 2]).unwrap(), naive::lex),
            (MonomialOrder::degrevlex(vec![0, 1, 2]).unwrap(), naive::degrevlex),
        ];
        for (order, cmp) in cases {
            let oracle = naive::reduced_basis(cmp, gens.iter().map(|g| naive::from(cmp, g)).collect());
            let mut ours: Vec<naive::P> = library_basis(&gens, order)
                .polynomials()
                .iter()
                .map(|p| naive::monic(naive::from(cmp, p)))
                .collect();
            ours.sort_by(|a, b| cmp(&b[0].0, &a[0].0));
            let stairs = |b: &[naive::P]| b.iter().map(|p| p[0].0.clone()).collect::<Vec<_>>();
            prop_assert_eq!(stairs(&ours), stairs(&oracle));
            prop_assert_eq!(ours, oracle);
        }
    }

    #[test]
    fn elimination_is_order_independent(gens in ideal()) {
        let t = xyz();
        let gens: Vec<Polynomial> = gens.iter().map(|g| build(&t, g)).collect();
        let by_block = Ideal::new(&t, gens.clone()).unwrap().eliminate(&[0], None).unwrap();
        let sub = t.select(&[1, 2]).unwrap();
        let lex = library_basis(&gens, MonomialOrder::lex(vec![0, 1, 2]).unwrap());
        let kept: Vec<Polynomial> = lex
            .polynomials()
            .into_iter()
            .filter(|p| !p.has_var(0))
            .map(|p| p.embed(&sub).unwrap())
            .collect();
        let by_lex = GroebnerBasis::of_polynomials(&sub, MonomialOrder::degrevlex(vec![0, 1]).unwrap(), &kept).unwrap();
        let mut a: Vec<String> = by_block.generators().iter().map(|p| p.to_string()).collect();
        let mut b: Vec<String> = by_lex.polynomials().iter().map(|p| p.to_string()).collect();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }
}

fn builtin(name: &str) -> ActionSpecDocument {
    ActionSpecDocument::parse(builtin_spec(name).unwrap()).unwrap()
}

fn eval_gpoly(
    p: &GPoly<RationalFunction>,
    z: &[BigRational],
    zz: &[BigRational],
) -> Option<BigRational> {
    let mut acc = BigRational::zero();
    for (m, c) in p.terms() {
        let mut v = c.evaluate(z)?;
        for (x, e) in zz.iter().zip(m.exponents()) {
            for _ in 0..*e {
                v *= x;
            }
        }
        acc += v;
    }
    Some(acc)
}

fn point(rng: &mut ChaCha8Rng, n: usize) -> Vec<BigRational> {
    use rand::Rng;
    (0..n)
        .map(|_| ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3)))
        .collect()
}

#[test]
fn specialization_is_sound() {
    let cases = [
        ("scaling", None, GroupSampler::Scaling),
        ("sl2-b2", None, GroupSampler::SL2),
        ("sl2-b3", Some("C0"), GroupSampler::SL2),
        ("so3", Some("X, Y"), GroupSampler::SO3),
        ("scaling", Some("X^2 + Y^2 - 1"), GroupSampler::Scaling),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, section, sampler) in cases {
        let doc = builtin(name);
        let act = doc.action().unwrap();
        let n = act.nsource();
        let graph = extended_graph_basis(&act, None).unwrap();
        let sec = section.map(|s| {
            let t = doc.target_table().unwrap();
            let gens = s
                .split(',')
                .map(|g| parse_polynomial(g, &t).unwrap())
                .collect();
            graph_section_basis(
                &act,
                &ratinv::invariants::CrossSection::new(&act, gens).unwrap(),
                None,
            )
            .unwrap()
        });
        let mut points = 0;
        while points < 5 {
            let z0 = point(&mut rng, n);
            let mut moved = Vec::new();
            for _ in 0..3 {
                let g0 = sampler.sample(&mut rng);
                let comps = act.specialize(&g0).unwrap();
                let w: Option<Vec<BigRational>> = comps.iter().map(|c| c.evaluate(&z0)).collect();
                moved.extend(w);
            }
            let Some(at_z0) = graph
                .basis
                .elements()
                .iter()
                .map(|p| eval_gpoly(p, &z0, &z0))
                .collect::<Option<Vec<_>>>()
            else {
                continue;
            };
            assert!(at_z0.iter().all(|v| v.is_zero()), "{name}");
            points += 1;
            for w in &moved {
                for p in graph.basis.elements() {
                    if let Some(v) = eval_gpoly(p, &z0, w) {
                        assert!(v.is_zero(), "{name}: O^e at (z0, g0 z0)");
                    }
                }
                if let Some(b) = &sec {
                    for p in b.basis.elements() {
                        for (_, c) in p.terms() {
                            if let (Some(a), Some(b)) = (c.evaluate(&z0), c.evaluate(w)) {
                                assert_eq!(
                                    a, b,
                                    "{name}: coefficient {c} is not constant on the orbit"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn extracted_generators_are_invariant() {
    for (name, section) in [
        ("so3", "X, Y"),
        ("sl2-b3", "C0"),
        ("scaling-modified", "X - 1"),
    ] {
        let doc = builtin(name);
        let act = doc.action().unwrap();
        let t = doc.target_table().unwrap();
        let gens = section
            .split(',')
            .map(|g| parse_polynomial(g, &t).unwrap())
            .collect();
        let cs = ratinv::invariants::CrossSection::new(&act, gens).unwrap();
        let set =
            extract_generating_invariants(&graph_section_basis(&act, &cs, None).unwrap().basis);
        assert!(!set.invariants.is_empty());
        for g in &set.invariants {
            assert!(check_invariance(&act, g).unwrap(), "{name}: {g}");
        }
    }
}

#[test]
fn scaling_sections_generate_the_same_field() {
    let doc = builtin("scaling");
    let act = doc.action().unwrap();
    let t = doc.target_table().unwrap();
    let set = |s: &str| {
        let cs =
            ratinv::invariants::CrossSection::new(&act, vec![parse_polynomial(s, &t).unwrap()])
                .unwrap();
        extract_generating_invariants(&graph_section_basis(&act, &cs, None).unwrap().basis)
    };
    let rational = set("X - 1");
    let circle = set("X^2 + Y^2 - 1");
    for g in circle.invariants.iter().chain(&rational.invariants) {
        assert!(check_invariance(&act, g).unwrap());
        let r = rewrite_by_replacement(&rational, g).unwrap();
        assert!(!r.expression.is_zero());
    }
}

#[test]
fn prolongation_commutes_with_lifting() {
    let doc = builtin("se2");
    let base = doc.action().unwrap();
    let j3 = prolong_action(&base, 3).unwrap();
    let t = t_table();
    let curve = ParametricCurve::new(
        parse_rational("t^2 - 1", &t).unwrap(),
        parse_rational("t^3 - t", &t).unwrap(),
    )
    .unwrap();
    let g0 = [ratio(3, 5), ratio(4, 5), ratio(1, 1), ratio(2, 1)];
    let mut images = vec![curve.x().clone(), curve.y().clone()];
    images.extend(lift_curve(&curve, 3).unwrap());
    let pushed: Vec<RationalFunction> = j3
        .specialize(&g0)
        .unwrap()
        .iter()
        .map(|c| c.compose(&images, &t).unwrap())
        .collect();
    let moved = curve.transform(&base, &g0).unwrap();
    let mut expected = vec![moved.x().clone(), moved.y().clone()];
    expected.extend(lift_curve(&moved, 3).unwrap());
    assert_eq!(pushed, expected);
}

fn sigma() -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
    (
        prop::collection::vec(-3i64..=3, 1..=3),
        prop::collection::vec(-3i64..=3, 1..=2),
    )
}

fn univariate(t: &Table, (num, den): &(Vec<i64>, Vec<i64>)) -> Option<RationalFunction> {
    let p = |cs: &[i64]| {
        build(
            t,
            &cs.iter()
                .enumerate()
                .map(|(i, c)| (vec![i as u32], *c))
                .collect::<Vec<_>>(),
        )
    };
    let d = p(den);
    if d.is_zero() {
        return None;
    }
    RationalFunction::new(p(num), d).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn implicitization_agrees_with_elimination(a in sigma(), b in sigma()) {
        let t = t_table();
        let (Some(s1), Some(s2)) = (univariate(&t, &a), univariate(&t, &b)) else { return Ok(()) };
        prop_assume!(!(s1.is_constant() && s2.is_constant()));
        let fast = implicitize(&s1, &s2).unwrap();
        let slow = implicitize_by_elimination(&s1, &s2).unwrap();
        prop_assert_eq!(&fast, &slow);
        prop_assert!(fast.leading_coefficient().is_positive());
        let on_curve = RationalFunction::from_poly(fast).compose(&[s1, s2], &t).unwrap();
        prop_assert!(on_curve.is_zero());
    }
}
