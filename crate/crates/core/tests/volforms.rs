use cremona_core::birmap::{parse_affine_map, AffineMap};
use cremona_core::exactpoly::{parse_rational_function, RationalFunction, Ring};
use cremona_core::volforms::*;
use proptest::prelude::*;

fn plane() -> Ring {
    Ring::new(&["x1", "x2"], &[] as &[&str])
}

#[test]
fn pullback_by_identity() {
    let r = plane();
    let w = TopForm::new(0, parse_rational_function(&r, "x1/(x2 + 1)").unwrap());
    assert!(w.pullback(&AffineMap::identity(&r)).unwrap().equal(&w).unwrap());
}

#[test]
fn pullback_by_diagonal() {
    let r = Ring::new(&["x1", "x2"], &["a", "b"]);
    let f = parse_affine_map(&r, "(a*x1, b*x2)").unwrap();
    let p = TopForm::unit(&plane(), 0).pullback(&f).unwrap();
    let want = TopForm::new(0, parse_rational_function(&r, "a*b").unwrap());
    assert!(p.equal(&want).unwrap());
}

#[test]
fn arity_is_checked() {
    let r = Ring::new(&["x1", "x2", "x3"], &[] as &[&str]);
    assert!(TopForm::unit(&plane(), 0).pullback(&AffineMap::identity(&r)).is_err());
}

#[test]
fn omega_suite_passes() {
    let r = omega_invariance_suite(11).run();
    assert!(r.all_pass(), "{}", r.render());
    assert_eq!(r.entries.len(), 7);
}

#[test]
fn omega_coefficient() {
    let w = omega();
    assert_eq!(w.dim(), 5);
    assert_eq!(w.chart(), OMEGA_CHART);
    assert!(w.coefficient().numerator().is_one());
}

fn small_map() -> impl Strategy<Value = AffineMap> {
    // Triangular polynomial automorphisms composed with a linear part.
    (-3i64..=3, -3i64..=3, 1i64..=3, 0u32..=3, prop_oneof![Just(1i64), Just(-1), Just(2)]).prop_map(|(a, b, c, e, d)| {
        let s = format!("({d}*x1 + {a}, {c}*x2 + {b}*x1^{e} + x1)");
        parse_affine_map(&plane(), &s).unwrap()
    })
}

fn small_form() -> impl Strategy<Value = TopForm> {
    (1i64..=4, -2i64..=2, 0u32..=2).prop_map(|(a, b, e)| {
        let r = plane();
        let c = parse_rational_function(&r, &format!("(x1^{e} + {b})/(x2^2 + {a})")).unwrap();
        TopForm::new(0, c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pullback_is_contravariant(f in small_map(), g in small_map(), w in small_form()) {
        let lhs = w.pullback(&f.compose(&g).unwrap()).unwrap();
        let rhs = w.pullback(&f).unwrap().pullback(&g).unwrap();
        prop_assert!(lhs.equal(&rhs).unwrap());
    }

    #[test]
    fn unit_pullback_is_jacobian(f in small_map()) {
        let p = TopForm::unit(&plane(), 0).pullback(&f).unwrap();
        let j: RationalFunction = f.jacobian_det().unwrap();
        prop_assert!(p.equal(&TopForm::new(0, j)).unwrap());
        prop_assert!(!p.coefficient().is_zero());
    }
}
