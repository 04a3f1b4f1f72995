use cremona_core::exactpoly::{
    jacobian_det, parse_polynomial, parse_rational_function, q, qq, PolyError, Polynomial, RationalFunction, Ring,
};
use proptest::prelude::*;

fn ring(n: usize) -> Ring {
    Ring::indexed("x", n)
}

fn p(r: &Ring, s: &str) -> Polynomial {
    parse_polynomial(r, s).unwrap()
}

fn rf(r: &Ring, s: &str) -> RationalFunction {
    parse_rational_function(r, s).unwrap()
}

#[test]
fn addition_examples() {
    let r = ring(3);
    assert_eq!(p(&r, "x0^2 + x1") + p(&r, "-x1"), p(&r, "x0^2"));
    assert_eq!(p(&r, "x1*x2 + x0") + Polynomial::zero(&r), p(&r, "x1*x2 + x0"));
    assert_eq!((p(&r, "x1*x2") + p(&r, "x0*x2")).len(), 2);
}

#[test]
fn ring_mismatch_is_an_error() {
    let a = Polynomial::var(&ring(2), 0);
    let b = Polynomial::var(&ring(3), 0);
    assert_eq!(a.checked_add(&b), Err(PolyError::RingMismatch));
    assert_eq!(a.checked_mul(&b), Err(PolyError::RingMismatch));
}

#[test]
fn multiplication_examples() {
    let r = ring(6);
    assert_eq!(p(&r, "x0 + x1") * p(&r, "x0 - x1"), p(&r, "x0^2 - x1^2"));
    assert_eq!(p(&r, "x5") * p(&r, "x5"), p(&r, "x5^2"));
    let a = p(&r, "3*x0 - 1/2*x4");
    assert_eq!(&a * &Polynomial::one(&r), a);
}

#[test]
fn exact_division_examples() {
    let r = ring(2);
    let q1 = p(&r, "x0^2 - x1^2").exact_div(&p(&r, "x0 - x1")).unwrap();
    assert_eq!(q1, Some(p(&r, "x0 + x1")));
    assert_eq!(p(&r, "x0^2 + x1^2").exact_div(&p(&r, "x0 - x1")).unwrap(), None);
    assert_eq!(p(&r, "x0").exact_div(&Polynomial::zero(&r)), Err(PolyError::DivisionByZero));
    let half = p(&r, "x0 + 1/3*x1").exact_div(&p(&r, "2*x0 + 2/3*x1")).unwrap();
    assert_eq!(half, Some(Polynomial::constant(&r, qq(1, 2))));
}

#[test]
fn gcd_examples() {
    let r = ring(2);
    let g = p(&r, "x0^2 - x1^2").gcd(&p(&r, "x0^2 + 2*x0*x1 + x1^2")).unwrap();
    assert_eq!(g, p(&r, "x0 + x1"));
    assert!(p(&r, "x0^3 - x1").gcd(&Polynomial::one(&r)).unwrap().is_one());
    assert_eq!(p(&r, "-4*x0 + 6*x1").gcd(&Polynomial::zero(&r)).unwrap(), p(&r, "3*x1 - 2*x0"));
    assert_eq!(Polynomial::zero(&r).gcd(&Polynomial::zero(&r)), Err(PolyError::UndefinedGcd));
}

#[test]
fn gcd_normalizes_sign_and_content() {
    let r = ring(3);
    let g = p(&r, "-6*x0*x2 + 9*x1^2").gcd(&p(&r, "(-2*x0*x2 + 3*x1^2)*(x0 + x2)")).unwrap();
    assert_eq!(g.to_string(), "2*x0*x2 - 3*x1^2");
}

#[test]
fn high_degree_gcd_matches_the_remainder_sequence() {
    let r = ring(4);
    let f = p(&r, "x0*x1 - x2^2 + 3*x3*x0");
    let g = p(&r, "x1^3 - 2*x0*x2*x3 + x3^3");
    let h1 = p(&r, "x0 + x1 + x2 + x3");
    let h2 = p(&r, "x0^2 - 5*x3*x2");
    let a = &(&f * &g).pow(2) * &h1;
    let b = &(&f * &g) * &(&h2 * &g);
    let want = (&f * &g.pow(2)).normalized();
    let fast = a.gcd(&b).unwrap();
    let slow = a.gcd_prs(&b).unwrap();
    assert_eq!(fast, want);
    assert_eq!(slow, want);
}

#[test]
fn gcd_with_symbolic_constants() {
    let r = Ring::new(&["x0", "x1"], &["a", "b"]);
    let f = p(&r, "a*x0 - b*x1");
    let a = &f * &p(&r, "x0 + a");
    let b = &f * &p(&r, "x1 - b^2");
    assert_eq!(a.gcd(&b).unwrap(), -f);
}

#[test]
fn substitution_examples() {
    let r = ring(2);
    let xy = p(&r, "x0*x1");
    assert_eq!(xy.substitute(&[p(&r, "x1"), p(&r, "x0")]).unwrap(), xy);
    assert_eq!(p(&r, "x0 + x1").substitute(&[p(&r, "x0^2"), p(&r, "x1^2")]).unwrap(), p(&r, "x0^2 + x1^2"));
    let err = xy.substitute(&[p(&r, "x1")]);
    assert_eq!(err, Err(PolyError::ArityMismatch { expected: 2, found: 1 }));
}

#[test]
fn rational_substitution() {
    let r = ring(2);
    let f = rf(&r, "x0^2 + x0*x1 + 3");
    let got = f.substitute(&[rf(&r, "1/x0"), rf(&r, "x1/x0")]).unwrap();
    assert_eq!(got, rf(&r, "(1 + x1 + 3*x0^2)/x0^2"));
}

#[test]
fn partial_derivative_examples() {
    let r = ring(2);
    assert_eq!(p(&r, "x0^2").partial_derivative(0).unwrap(), p(&r, "2*x0"));
    assert!(p(&r, "x1").partial_derivative(0).unwrap().is_zero());
    assert_eq!(p(&r, "x1").partial_derivative(2), Err(PolyError::IndexOutOfRange { index: 2, len: 2 }));
}

#[test]
fn homogeneous_degree_examples() {
    let r = ring(3);
    assert_eq!(p(&r, "x1*x2").homogeneous_degree(), Ok(Some(2)));
    assert_eq!(p(&r, "x0 + x1*x2").homogeneous_degree(), Ok(None));
    assert_eq!(Polynomial::zero(&r).homogeneous_degree(), Err(PolyError::ZeroPolynomial));
    let c = Ring::new(&["x0", "x1"], &["lambda1"]);
    assert_eq!(p(&c, "lambda1^3*x0 + x1").homogeneous_degree(), Ok(Some(1)));
}

#[test]
fn jacobian_examples() {
    let r = ring(2);
    let one = jacobian_det(&[rf(&r, "x0 + x1^2"), rf(&r, "x1")]).unwrap();
    assert_eq!(one, RationalFunction::one(&r));
    let inv = jacobian_det(&[rf(&r, "1/x0"), rf(&r, "1/x1")]).unwrap();
    assert_eq!(inv, rf(&r, "1/(x0^2*x1^2)"));
    assert!(matches!(jacobian_det(&[rf(&r, "x0")]), Err(PolyError::NotSquare { .. })));
}

#[test]
fn rendering_is_canonical() {
    let r = ring(6);
    assert_eq!(p(&r, "-x0*x3^2 + 2*x3*x4*x5").to_string(), "2*x3*x4*x5 - x0*x3^2");
    assert_eq!(p(&r, "x3*x4 - x2*x5").to_string(), "-x2*x5 + x3*x4");
    assert_eq!(p(&r, "1/2*x1 - 7").to_string(), "1/2*x1 - 7");
    assert_eq!(rf(&r, "(x2 - x1)/(x2 - 1)").to_string(), "(x2 - x1)/(x2 - 1)");
    assert_eq!(rf(&r, "x0*x1/x2").to_string(), "x0*x1/x2");
    assert_eq!(rf(&r, "1/(2*x1)").to_string(), "1/2/x1");
}

#[test]
fn rational_function_normalization() {
    let r = ring(2);
    let f = RationalFunction::new(p(&r, "2*x0^2 - 2*x0*x1"), p(&r, "-4*x0")).unwrap();
    assert_eq!(f.numerator(), &p(&r, "-1/2*x0 + 1/2*x1"));
    assert_eq!(f.denominator(), &Polynomial::one(&r));
    let g = RationalFunction::new(p(&r, "x1"), p(&r, "-3*x0 + 3*x1^2")).unwrap();
    assert_eq!(g.denominator(), &p(&r, "x1^2 - x0"));
    assert_eq!(g.numerator(), &p(&r, "1/3*x1"));
    assert_eq!(g.normalized(), g);
}

#[test]
fn evaluation() {
    let r = ring(3);
    let f = p(&r, "x0^2 - 1/2*x1*x2");
    assert_eq!(f.eval(&[q(3), q(2), qq(-1, 5)]).unwrap(), qq(46, 5));
    assert_eq!(rf(&r, "1/(x0 - x1)").eval(&[q(1), q(1), q(0)]).unwrap(), None);
}

fn small_poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
    let term = (prop::collection::vec(0u16..=2, nvars), -4i64..=4);
    prop::collection::vec(term, 0..=6).prop_map(move |ts| {
        let r = ring(nvars);
        let terms: Vec<(&[u16], i64)> = ts.iter().map(|(e, c)| (e.as_slice(), *c)).collect();
        Polynomial::from_exponents(&r, &terms)
    })
}

fn small_nonzero(nvars: usize) -> impl Strategy<Value = Polynomial> {
    small_poly(nvars).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in small_poly(4), b in small_poly(4), c in small_poly(4)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn division_inverts_multiplication(a in small_poly(4), b in small_nonzero(4)) {
        let prod = &a * &b;
        prop_assert_eq!(prod.exact_div(&b).unwrap(), Some(a));
    }

    #[test]
    fn gcd_divides_both(a in small_nonzero(3), b in small_nonzero(3), g in small_nonzero(3)) {
        let x = &a * &g;
        let y = &b * &g;
        let d = x.gcd(&y).unwrap();
        prop_assert!(x.exact_div(&d).unwrap().is_some());
        prop_assert!(y.exact_div(&d).unwrap().is_some());
        prop_assert!(d.exact_div(&g).unwrap().is_some());
        prop_assert_eq!(&d, &x.gcd_prs(&y).unwrap());
    }

    #[test]
    fn normalization_is_idempotent(a in small_poly(3), b in small_nonzero(3)) {
        let f = RationalFunction::new(a, b).unwrap();
        prop_assert_eq!(f.normalized(), f);
    }

    #[test]
    fn substitution_composes(p0 in small_poly(2), f0 in small_poly(2), f1 in small_poly(2), g0 in small_poly(2), g1 in small_poly(2)) {
        let g = [g0, g1];
        let fg = [f0.substitute(&g).unwrap(), f1.substitute(&g).unwrap()];
        let lhs = p0.substitute(&[f0, f1]).unwrap().substitute(&g).unwrap();
        prop_assert_eq!(lhs, p0.substitute(&fg).unwrap());
    }

    #[test]
    fn render_parse_round_trip(a in small_poly(4)) {
        let r = ring(4);
        prop_assert_eq!(parse_polynomial(&r, &a.to_string()).unwrap(), a);
    }
}
