use cremona_core::birmap::{
    matrix_group_check, monomial_map, parse_affine_map, parse_multi_map, parse_projective_map, IntMatrix, MapError,
    MatrixFactor, MultiProjectiveMap, ProjectiveMap, QMatrix,
};
use cremona_core::exactpoly::{parse_polynomial, q, qq, Polynomial, Rational, Ring};
use proptest::prelude::*;

fn pm(r: &Ring, s: &str) -> ProjectiveMap {
    parse_projective_map(r, s).unwrap()
}

fn im(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(rows).unwrap()
}

fn p2() -> Ring {
    Ring::indexed("x", 3)
}

fn p5() -> Ring {
    Ring::indexed("x", 6)
}

fn p2p2() -> Ring {
    Ring::new(&["x0", "x1", "x2", "y0", "y1", "y2"], &[] as &[&str])
}

fn sigma() -> ProjectiveMap {
    pm(&p2(), "[x1*x2 : x0*x2 : x0*x1]")
}

fn sigma6() -> ProjectiveMap {
    pm(&p5(), "[x1*x2 : x0*x2 : x0*x1 : x0*x3 : x1*x4 : x2*x5]")
}

fn adjugate() -> ProjectiveMap {
    pm(
        &p5(),
        "[x1*x2 - x3^2 : x0*x2 - x4^2 : x0*x1 - x5^2 : x4*x5 - x0*x3 : x3*x5 - x1*x4 : x3*x4 - x2*x5]",
    )
}

fn sigma6_dual() -> ProjectiveMap {
    let q0 = "(x1*x2 - x3^2)";
    let q1 = "(x0*x2 - x4^2)";
    let q2 = "(x0*x1 - x5^2)";
    let s = format!(
        "[{q0}^2*x0 : {q1}^2*x1 : {q2}^2*x2 : {q1}*{q2}*x3 : {q0}*{q2}*x4 : {q0}*{q1}*x5]"
    );
    pm(&p5(), &s)
}

fn secant() -> Polynomial {
    parse_polynomial(&p5(), "x0*x1*x2 + 2*x3*x4*x5 - x0*x3^2 - x1*x4^2 - x2*x5^2").unwrap()
}

fn rho() -> MultiProjectiveMap {
    parse_multi_map(&p2p2(), &[3, 3], "([x2*y0 : x0*y1 : x2*y1], [x0*y1^2 : x1*y2^2 : x2*y1*y2])").unwrap()
}

fn rho_inv() -> MultiProjectiveMap {
    parse_multi_map(&p2p2(), &[3, 3], "([x1^2*y2^2 : x2^2*y0*y1 : x1*x2*y2^2], [x0*y0 : x2*y0 : x1*y2])").unwrap()
}

#[test]
fn reduce_removes_common_factor() {
    let f = pm(&p2(), "[x0*x1*x2*x0 : x0*x1*x2*x1 : x0*x1*x2*x2]");
    assert_eq!(f.reduce(), ProjectiveMap::identity(2));
    assert_eq!(sigma().reduce(), sigma());
}

#[test]
fn raw_sigma_square_reduces_to_identity() {
    let s = sigma();
    let raw: Vec<Polynomial> =
        s.components().iter().map(|c| c.substitute(s.components()).unwrap()).collect();
    let unreduced = ProjectiveMap::new(&p2(), raw).unwrap();
    assert_eq!(unreduced.components()[0], parse_polynomial(&p2(), "x0^2*x1*x2").unwrap());
    assert!(unreduced.reduce().is_identity());
    assert_eq!(unreduced.reduce(), ProjectiveMap::identity(2));
}

#[test]
fn involutions_compose_to_identity() {
    assert!(sigma().compose(&sigma()).unwrap().is_identity());
    assert!(sigma6().compose(&sigma6()).unwrap().is_identity());
    assert!(adjugate().compose(&adjugate()).unwrap().is_identity());
}

#[test]
fn composing_across_spaces_fails() {
    let e = sigma().compose(&sigma6()).unwrap_err();
    assert!(matches!(e, MapError::SpaceMismatch { .. }));
    assert_eq!(e.to_string(), "cannot compose: source is P^2, target is P^5");
}

#[test]
fn projective_equality() {
    let r = Ring::indexed("x", 2);
    assert!(pm(&r, "[x0 : x1]").equal_up_to_scalar(&pm(&r, "[2*x0 : 2*x1]")).unwrap());
    assert!(!pm(&r, "[x0 : x1]").equal_up_to_scalar(&pm(&r, "[x1 : x0]")).unwrap());
    assert!(matches!(
        pm(&r, "[x0 : x1]").equal_up_to_scalar(&ProjectiveMap::identity(2)),
        Err(MapError::ShapeMismatch)
    ));
}

#[test]
fn rho_and_its_inverse() {
    let id = MultiProjectiveMap::identity(&p2p2(), &[3, 3]).unwrap();
    assert!(rho().compose(&rho_inv()).unwrap().equal_up_to_scalar(&id).unwrap());
    assert!(rho_inv().compose(&rho()).unwrap().is_identity());
    assert_eq!(rho().multidegree(0), vec![1, 1]);
    assert_eq!(rho().multidegree(1), vec![1, 2]);
}

#[test]
fn degrees_of_named_maps() {
    assert_eq!(sigma().degree(), 2);
    assert_eq!(adjugate().degree(), 2);
    assert_eq!(sigma6().degree(), 2);
    assert_eq!(sigma6_dual().degree(), 5);
}

#[test]
fn involution_degree_sequence() {
    let seq = sigma().degree_sequence(6).unwrap();
    assert_eq!(seq.degrees, vec![2, 1, 2, 1, 2, 1]);
    let r = Ring::indexed("x", 2);
    assert!(matches!(pm(&r, "[x0 : x1 : x0]").degree_sequence(2), Err(MapError::NotSelfMap)));
}

#[test]
fn henon_like_degree_growth() {
    // Hénon map (X, Y) -> (X^2 + Y, X).
    let f = pm(&p2(), "[x0^2 : x0*x2 + x1^2 : x0*x1]");
    assert_eq!(f.degree_sequence(4).unwrap().degrees, vec![2, 4, 8, 16]);
}

#[test]
fn matrices_give_linear_maps() {
    assert_eq!(ProjectiveMap::from_matrix(&QMatrix::identity(3)).unwrap(), ProjectiveMap::identity(2));
    let swap = QMatrix::from_i64(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
    assert_eq!(ProjectiveMap::from_matrix(&swap).unwrap(), pm(&p2(), "[x2 : x1 : x0]"));
    let h = QMatrix::from_i64(&[&[-1, 0, 1], &[0, -1, 1], &[0, 0, 1]]);
    assert_eq!(ProjectiveMap::from_matrix(&h).unwrap(), pm(&p2(), "[x2 - x0 : x2 - x1 : x2]"));
    let singular = QMatrix::from_i64(&[&[1, 2], &[2, 4]]);
    assert_eq!(ProjectiveMap::from_matrix(&singular), Err(MapError::SingularMatrix));
}

#[test]
fn sigma_h_has_order_three() {
    let h = ProjectiveMap::from_matrix(&QMatrix::from_i64(&[&[-1, 0, 1], &[0, -1, 1], &[0, 0, 1]])).unwrap();
    let sh = sigma().compose(&h).unwrap();
    assert!(!sh.is_identity());
    assert!(!sh.pow(2).unwrap().is_identity());
    assert!(sh.pow(3).unwrap().is_identity());
}

#[test]
fn diagonal_maps() {
    let one = ProjectiveMap::diagonal(&[q(1), q(1), q(1)]).unwrap();
    assert!(one.is_identity());
    assert_eq!(ProjectiveMap::diagonal(&[q(1), q(0), q(2)]), Err(MapError::ZeroScale));
    let d = ProjectiveMap::diagonal(&[q(2), qq(-1, 3), q(5)]).unwrap();
    let dinv = ProjectiveMap::diagonal(&[qq(1, 2), q(-3), qq(1, 5)]).unwrap();
    let lhs = sigma().compose(&d).unwrap().compose(&sigma()).unwrap();
    assert!(lhs.equal_up_to_scalar(&dinv).unwrap());
}

#[test]
fn monomial_examples() {
    let swap = monomial_map(&im(&[&[0, 1], &[1, 0]])).unwrap();
    assert_eq!(swap.render(), "(x2, x1)");
    assert!(swap.compose(&swap).unwrap().is_identity());
    let minus = monomial_map(&im(&[&[-1, 0], &[0, -1]])).unwrap();
    assert_eq!(minus.render(), "(1/x1, 1/x2)");
    let r = Ring::indexed("x", 3);
    let projective = minus.to_projective_on(&r).unwrap();
    assert!(projective.equal_up_to_scalar(&sigma()).unwrap());
    assert_eq!(minus.degree().unwrap(), 2);
}

#[test]
fn charts() {
    let a = sigma().to_affine_chart(0).unwrap();
    assert_eq!(a.render(), "(1/x1, 1/x2)");
    let b = sigma6().to_affine_chart(5).unwrap();
    assert_eq!(b.render(), "(x1, x0, x0*x1/x2, x0*x3/x2, x1*x4/x2)");
    assert!(b.to_projective_on(&p5()).unwrap().equal_up_to_scalar(&sigma6()).unwrap());
    let r = Ring::indexed("x", 2);
    assert_eq!(pm(&r, "[0 : x1]").to_affine_chart(0).unwrap_err(), MapError::UndefinedOnChart(0));
}

#[test]
fn affine_literals() {
    let r = Ring::new(&["X", "Y"], &[] as &[&str]);
    let f = parse_affine_map(&r, "(X, X*Y)").unwrap();
    let g = parse_affine_map(&r, "(X, Y/X)").unwrap();
    assert!(f.compose(&g).unwrap().is_identity());
    assert_eq!(f.jacobian_det().unwrap().to_string(), "X");
    assert_eq!(f.degree().unwrap(), 2);
    assert_eq!(f.eval(&[q(2), q(3)]).unwrap(), Some(vec![q(2), q(6)]));
    assert_eq!(g.eval(&[q(0), q(3)]).unwrap(), None);
}

#[test]
fn secant_pullbacks() {
    let f = secant();
    let pb = sigma6().pullback_hypersurface(&f, &[]).unwrap();
    assert!(pb.is_invariant());
    let cof = pb.quotient.unwrap();
    assert_eq!(cof.normalized(), parse_polynomial(&p5(), "x0*x1*x2").unwrap());
    assert!(sigma6_dual().pullback_hypersurface(&f, &[]).unwrap().is_invariant());
    let x0 = Polynomial::var(&p5(), 0);
    let id = ProjectiveMap::identity(5).pullback_hypersurface(&x0, &[]).unwrap();
    assert_eq!(id.quotient, Some(Polynomial::one(&p5())));
    let divisors: Vec<Polynomial> = (0..3).map(|i| Polynomial::var(&p5(), i)).collect();
    let pb = sigma6().pullback_hypersurface(&f, &divisors).unwrap();
    assert_eq!(pb.multiplicities, vec![1, 1, 1]);
    assert!(pb.residual.unwrap().is_constant());
    assert_eq!(
        sigma6().pullback_hypersurface(&Polynomial::zero(&p5()), &[]).unwrap_err(),
        MapError::ZeroHypersurface
    );
}

#[test]
fn contractions() {
    assert!(sigma6().image_in_subspace(0, &[1, 2, 3]));
    assert!(sigma6().image_in_subspace(1, &[0, 2, 4]));
    assert!(sigma6().image_in_subspace(2, &[0, 1, 5]));
    assert!(!sigma6().image_in_subspace(0, &[0]));
    assert!(!ProjectiveMap::identity(5).image_in_subspace(3, &[1]));
}

#[test]
fn integer_matrix_words() {
    let a = im(&[&[1, 0, 0], &[0, 1, 0], &[0, -1, 1]]);
    let b = im(&[&[-1, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
    let s1 = im(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
    let s2 = im(&[&[0, -1, 1], &[0, -1, 0], &[1, -1, 0]]);
    let t = im(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]]);
    let w = [
        MatrixFactor::plain(&a),
        MatrixFactor::plain(&s2),
        MatrixFactor::plain(&b),
        MatrixFactor::plain(&s2),
        MatrixFactor::inv(&b),
        MatrixFactor::inv(&a),
    ];
    assert_eq!(matrix_group_check(&w).unwrap(), s1.mul(&t).unwrap());

    let c = im(&[&[-1, 2], &[0, 1]]);
    let d = im(&[&[-1, 0], &[-1, 1]]);
    let e = im(&[&[0, 1], &[1, 0]]);
    let bb = im(&[&[1, 1], &[0, 1]]);
    let w = [MatrixFactor::plain(&d), MatrixFactor::plain(&c), MatrixFactor::plain(&e), MatrixFactor::inv(&d)];
    assert_eq!(matrix_group_check(&w).unwrap(), bb);

    let m = im(&[&[2, 1], &[1, 1]]);
    let w = [MatrixFactor::plain(&m), MatrixFactor::inv(&m)];
    assert!(matrix_group_check(&w).unwrap().is_identity());
    let two = im(&[&[2, 0], &[0, 1]]);
    assert_eq!(matrix_group_check(&[MatrixFactor::inv(&two)]), Err(MapError::NotUnimodular));
}

#[test]
fn literal_errors() {
    assert!(parse_projective_map(&p2(), "[x0 : x1 : ").is_err());
    assert!(parse_projective_map(&p2(), "[x0 : x1^2 : x2]").is_err());
    assert!(matches!(parse_projective_map(&p2(), "[0 : 0 : 0]"), Err(MapError::ZeroMap)));
    assert!(parse_multi_map(&p2p2(), &[3, 3], "([x0 : x1*y0 : x2])").is_err());
}

#[test]
fn literal_round_trip() {
    for m in [sigma(), sigma6(), adjugate()] {
        let again = parse_projective_map(m.ring(), &m.render()).unwrap();
        assert_eq!(again, m);
    }
    let r = rho();
    assert_eq!(parse_multi_map(&p2p2(), &[3, 3], &r.render()).unwrap(), r);
}

// Random maps for the property tests.

fn small_matrix(n: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(-3i64..=3, n * n)
        .prop_map(move |v| {
            let rows: Vec<Vec<Rational>> = v.chunks(n).map(|r| r.iter().map(|&x| q(x)).collect()).collect();
            QMatrix::from_rows(&rows).unwrap()
        })
        .prop_filter("invertible", |m| m.det() != q(0))
}

fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    // Products of a few elementary matrices and sign changes.
    prop::collection::vec((0..n, 0..n, -2i64..=2, any::<bool>()), 1..5).prop_map(move |ops| {
        let mut m = IntMatrix::identity(n);
        for (i, j, k, flip) in ops {
            let mut e = IntMatrix::identity(n).rows();
            if i != j {
                e[i][j] = k;
            } else if flip {
                e[i][i] = -1;
            }
            m = m.mul(&IntMatrix::from_vecs(&e).unwrap()).unwrap();
        }
        m
    })
}

fn cremona_element() -> impl Strategy<Value = ProjectiveMap> {
    (small_matrix(3), small_matrix(3), any::<bool>()).prop_map(|(a, b, quad)| {
        let la = ProjectiveMap::from_matrix(&a).unwrap();
        let lb = ProjectiveMap::from_matrix(&b).unwrap();
        if quad {
            la.compose(&sigma()).unwrap().compose(&lb).unwrap()
        } else {
            la.compose(&lb).unwrap()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reduce_is_idempotent(f in cremona_element(), k in -2i64..=2) {
        let scaled: Vec<Polynomial> = f
            .components()
            .iter()
            .map(|c| c * &parse_polynomial(&p2(), &format!("x0 + {k}*x1 + x2")).unwrap())
            .collect();
        let raw = ProjectiveMap::new(&p2(), scaled).unwrap();
        let r = raw.reduce();
        prop_assert_eq!(r.reduce(), r.clone());
        prop_assert!(raw.equal_up_to_scalar(&r).unwrap());
        prop_assert_eq!(r, f.reduce());
    }

    #[test]
    fn composition_is_associative(f in cremona_element(), g in cremona_element(), h in cremona_element()) {
        let a = f.compose(&g).unwrap().compose(&h).unwrap();
        let b = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn composition_degree_bound(f in cremona_element(), g in cremona_element(), m in small_matrix(3)) {
        let fg = f.compose(&g).unwrap();
        prop_assert!(fg.degree() <= f.degree() * g.degree());
        let l = ProjectiveMap::from_matrix(&m).unwrap();
        prop_assert_eq!(l.compose(&f).unwrap().degree(), f.degree());
    }

    #[test]
    fn linear_maps_form_a_group(m in small_matrix(3), n in small_matrix(3)) {
        let lhs = ProjectiveMap::from_matrix(&m).unwrap().compose(&ProjectiveMap::from_matrix(&n).unwrap()).unwrap();
        let rhs = ProjectiveMap::from_matrix(&m.mul(&n)).unwrap();
        prop_assert_eq!(lhs.clone(), rhs);
        let inv = ProjectiveMap::from_matrix(&m.inverse().unwrap()).unwrap();
        prop_assert!(ProjectiveMap::from_matrix(&m).unwrap().compose(&inv).unwrap().is_identity());
    }

    #[test]
    fn monomial_functor_2(a in unimodular(2), b in unimodular(2)) {
        let lhs = monomial_map(&a).unwrap().compose(&monomial_map(&b).unwrap()).unwrap();
        let rhs = monomial_map(&a.mul(&b).unwrap()).unwrap();
        prop_assert!(lhs.equal(&rhs).unwrap());
    }

    #[test]
    fn monomial_functor_3(a in unimodular(3), b in unimodular(3)) {
        let lhs = monomial_map(&a).unwrap().compose(&monomial_map(&b).unwrap()).unwrap();
        let rhs = monomial_map(&a.mul(&b).unwrap()).unwrap();
        prop_assert!(lhs.equal(&rhs).unwrap());
        let inv = monomial_map(&a.inverse().unwrap()).unwrap();
        prop_assert!(monomial_map(&a).unwrap().compose(&inv).unwrap().is_identity());
    }

    #[test]
    fn chart_round_trip(f in cremona_element(), c in 0usize..3) {
        prop_assume!(!f.components()[c].is_zero());
        let a = f.to_affine_chart(c).unwrap();
        let back = a.to_projective_on(f.ring()).unwrap();
        prop_assert!(back.equal_up_to_scalar(&f).unwrap());
        prop_assert_eq!(back, f.reduce());
    }

    #[test]
    fn diagonal_inverted_by_sigma(a in 1i64..20, b in -20i64..-1, c in 1i64..7) {
        let d = ProjectiveMap::diagonal(&[q(a), q(b), qq(c, 7)]).unwrap();
        let dinv = ProjectiveMap::diagonal(&[qq(1, a), qq(1, b), qq(7, c)]).unwrap();
        let lhs = sigma().compose(&d).unwrap().compose(&sigma()).unwrap();
        prop_assert!(lhs.equal_up_to_scalar(&dinv).unwrap());
    }
}
