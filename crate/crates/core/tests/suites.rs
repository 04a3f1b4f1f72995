use cremona_core::gizatullin::*;
use cremona_core::report::Suite;

fn check(s: Suite) {
    let t = std::time::Instant::now();
    let r = s.run();
    print!("{}", r.render());
    println!("({:.2}s)", t.elapsed().as_secs_f64());
    assert!(r.all_pass(), "{}", r.render());
}

#[test]
fn relations() {
    check(relation_suite(1));
}

#[test]
fn homomorphism() {
    check(homomorphism_suite(2, 20));
}

#[test]
fn dual() {
    check(dual_suite(3));
}

#[test]
fn printed() {
    check(printed_formula_suite());
}

#[test]
fn equivariance() {
    check(equivariance_suite(4, 10));
}

#[test]
fn secant_invariance() {
    check(secant_invariance_suite());
}

#[test]
fn contraction() {
    check(contraction_suite());
}

#[test]
fn ab_family() {
    check(ab_family_suite(8, 5));
}

#[test]
fn aut_a2_degrees() {
    check(aut_a2_degree_suite(&default_degree_specs(), 5));
}

#[test]
fn degree_lower_bound() {
    check(degree_lower_bound_suite(default_lower_bound_words(6), Some(6)));
}

#[test]
fn chi_growth() {
    check(chi_growth_suite(10, 8));
}
