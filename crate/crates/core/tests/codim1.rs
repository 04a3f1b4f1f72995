use cremona_core::birmap::{parse_affine_map, AffineMap, MapError};
use cremona_core::codim1::*;
use cremona_core::exactpoly::{q, qq, Polynomial, Rational, Ring};
use cremona_core::report::Suite;
use proptest::prelude::*;

fn plane() -> Ring {
    Ring::new(&["x1", "x2"], &[] as &[&str])
}

fn affine(ring: &Ring, s: &str) -> AffineMap {
    parse_affine_map(ring, s).unwrap()
}

fn check(s: Suite) {
    let r = s.run();
    print!("{}", r.render());
    assert!(r.all_pass(), "{}", r.render());
}

#[test]
fn psi_l_inversion_example() {
    let f = affine(&plane(), "(1/x1, 1/x2)");
    let got = psi_l(1, &f).unwrap();
    let r3 = Ring::new(&["x1", "x2", "x3"], &[] as &[&str]);
    assert!(got.equal(&affine(&r3, "(1/x1, 1/x2, x1^2*x2^2*x3)")).unwrap(), "{}", got.render());
}

#[test]
fn psi_l_zero_is_standard() {
    let f = affine(&plane(), "(x1 + x2^2, x2)");
    let got = psi_l(0, &f).unwrap();
    let r3 = Ring::new(&["x1", "x2", "x3"], &[] as &[&str]);
    assert!(got.equal(&affine(&r3, "(x1 + x2^2, x2, x3)")).unwrap());
}

#[test]
fn degenerate_jacobian_is_rejected() {
    let f = affine(&plane(), "(x1 + x2, 2*x1 + 2*x2)");
    assert_eq!(psi_l(1, &f).unwrap_err(), MapError::DegenerateJacobian);
    assert_eq!(psi_b(&f).unwrap_err(), MapError::DegenerateJacobian);
}

#[test]
fn psi_b_diagonal() {
    let r = Ring::new(&["x1", "x2"], &["a", "b"]);
    let got = psi_b(&affine(&r, "(a*x1, b*x2)")).unwrap();
    let r3 = Ring::new(&["x1", "x2", "x3"], &["a", "b"]);
    assert!(got.equal(&affine(&r3, "(a*x1, b*x2, b*x3/a)")).unwrap(), "{}", got.render());
}

#[test]
fn psi_b_identity() {
    let got = psi_b(&AffineMap::identity(&plane())).unwrap();
    assert!(got.is_identity());
}

#[test]
fn psi_b_of_inversion() {
    let got = psi_b(&affine(&plane(), "(1/x1, 1/x2)")).unwrap();
    let r3 = Ring::new(&["x1", "x2", "x3"], &[] as &[&str]);
    assert!(got.equal(&affine(&r3, "(1/x1, 1/x2, x1^2*x3/x2^2)")).unwrap(), "{}", got.render());
}

#[test]
fn sigma_n_matches_inversion() {
    assert_eq!(sigma_n(2).render(), "[x1*x2 : x0*x2 : x0*x1]");
    assert!(sigma_n(3).compose(&sigma_n(3)).unwrap().is_identity());
}

#[test]
fn cross_ratio_convention() {
    let l = LineInP3::from_rationals([1, 2, 3, 4].map(q), [1, 1, 1, 1].map(q)).unwrap();
    assert_eq!(cross_ratio(&l).unwrap().eval(&[]).unwrap(), Some(qq(4, 3)));
}

/// `t = (0, 1, ∞, r)`: points with `q2 = 0` sit at infinity.
#[test]
fn cross_ratio_with_point_at_infinity() {
    let r = qq(7, 2);
    let l = LineInP3::from_rationals([q(0), q(-1), q(1), -r.clone()], [q(1), q(1), q(0), q(1)]);
    let l = l.unwrap();
    let got = cross_ratio(&l).unwrap().eval(&[]).unwrap().unwrap();
    assert_eq!(got, (r.clone() - q(1)) / r);
}

#[test]
fn cross_ratio_errors() {
    let inside = LineInP3::from_rationals([0, 1, 2, 3].map(q), [0, 3, 1, 1].map(q)).unwrap();
    assert_eq!(cross_ratio(&inside).unwrap_err(), MapError::LineInHyperplane(0));
    let coincide = LineInP3::from_rationals([1, 1, 3, 4].map(q), [1, 1, 1, 1].map(q)).unwrap();
    assert_eq!(cross_ratio(&coincide).unwrap_err(), MapError::CoincidentIntersections);
    let same = LineInP3::from_rationals([1, 2, 3, 4].map(q), [2, 4, 6, 8].map(q));
    assert_eq!(same.unwrap_err(), MapError::ProportionalPoints);
}

/// Direct computation on the general line: a transposition of two
/// coordinates acts by an involution of the anharmonic group.
#[test]
fn transpositions_act_by_involutions() {
    assert_eq!(anharmonic_action(&tau1_p3()).unwrap(), Some(Anharmonic::OneMinus));
    assert_eq!(anharmonic_action(&tau2_p3()).unwrap(), Some(Anharmonic::OverRMinusOne));
    for pi in [[1, 0, 2, 3], [0, 2, 1, 3], [0, 1, 3, 2]] {
        assert_eq!(anharmonic_action(&coordinate_permutation(pi)).unwrap().unwrap().order(), 2);
    }
}

#[test]
fn three_cycles_act_with_order_three() {
    for pi in [[1, 2, 0, 3], [2, 0, 1, 3], [0, 2, 3, 1], [3, 1, 0, 2]] {
        let a = anharmonic_action(&coordinate_permutation(pi)).unwrap().unwrap();
        assert_eq!(a.order(), 3, "{pi:?} gives {}", a.formula());
    }
}

#[test]
fn codim1_relations() {
    check(relation_check_codim1());
}

#[test]
fn homomorphisms() {
    check(psi_homomorphism_suite(11, 10));
}

#[test]
fn gl3z() {
    check(gl3z_identity_suite());
}

fn small() -> impl Strategy<Value = i64> {
    -6i64..=6
}

fn line_strategy() -> impl Strategy<Value = ([i64; 4], [i64; 4])> {
    (prop::array::uniform4(small()), prop::array::uniform4(small()))
}

fn line(p: [i64; 4], qv: [i64; 4]) -> Option<LineInP3> {
    LineInP3::from_rationals(p.map(q), qv.map(q)).ok()
}

fn value(l: &LineInP3) -> Option<Rational> {
    cross_ratio(l).ok().map(|r| r.eval(&[]).unwrap().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mobius_reparametrization(pq in line_strategy(), m in prop::array::uniform4(small())) {
        let (p, qv) = pq;
        prop_assume!(m[0] * m[3] - m[1] * m[2] != 0);
        let l = line(p, qv);
        prop_assume!(l.is_some());
        let r = value(l.as_ref().unwrap());
        prop_assume!(r.is_some());
        let p2: [i64; 4] = core::array::from_fn(|i| m[0] * p[i] + m[1] * qv[i]);
        let q2: [i64; 4] = core::array::from_fn(|i| m[2] * p[i] + m[3] * qv[i]);
        let l2 = line(p2, q2).unwrap();
        prop_assert_eq!(value(&l2), r);
    }

    #[test]
    fn klein_four_invariance(pq in line_strategy(), k in 0usize..3) {
        let (p, qv) = pq;
        let l = line(p, qv);
        prop_assume!(l.is_some());
        let l = l.unwrap();
        let r = value(&l);
        prop_assume!(r.is_some());
        let pi = [[1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]][k];
        let moved = l.transform(&coordinate_permutation(pi)).unwrap();
        prop_assert_eq!(value(&moved), r);
    }

    #[test]
    fn psi_l_zero_keeps_last_coordinate(e in prop::array::uniform4(-2i64..=2), c in -3i64..=3) {
        let r = plane();
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let lin = |a: i64, b: i64| &x.scale(&q(a)) + &y.scale(&q(b));
        let f = AffineMap::from_polys(&r, vec![&lin(e[0], e[1]) + &y.pow(3).scale(&q(c)), lin(e[2], e[3])]).unwrap();
        prop_assume!(!f.jacobian_det().unwrap().is_zero());
        let g = psi_l(0, &f).unwrap();
        prop_assert_eq!(g.components()[2].render_with(g.ring().names()), "x3");
    }

    #[test]
    fn psi_l_composes(a in 0usize..4, l in 0u32..3) {
        let maps = ["(x1 + x2^2, x2)", "(x2, x1)", "(2*x1, x1 + 3*x2)", "(1/x1, x2/x1)"];
        let (f, g) = (affine(&plane(), maps[a]), affine(&plane(), maps[(a + 1) % 4]));
        let lhs = psi_l(l, &f.compose(&g).unwrap()).unwrap();
        let rhs = psi_l(l, &f).unwrap().compose(&psi_l(l, &g).unwrap()).unwrap();
        prop_assert!(lhs.equal(&rhs).unwrap());
    }
}
