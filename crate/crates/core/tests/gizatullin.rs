use cremona_core::birmap::{MultiProjectiveMap, PolyMatrix, ProjectiveMap, QMatrix};
use cremona_core::exactpoly::{parse_polynomial, Polynomial, Ring};
use cremona_core::gizatullin::*;

fn eq(a: &ProjectiveMap, b: &ProjectiveMap) -> bool {
    a.equal_up_to_scalar(b).unwrap()
}

#[test]
fn word_acts_on_the_plane() {
    assert!(eq(&fword().to_map().unwrap(), &f_map()));
    assert!(Cr2Word::identity().to_map().unwrap().is_identity());
    let s = s_word().to_map().unwrap().to_affine_chart(0).unwrap();
    assert_eq!(s.render(), "(x1, x1*x2)");
}

#[test]
fn phi_generators() {
    assert_eq!(phi(&Cr2Word::sigma()).unwrap(), phi_sigma());
    assert!(phi(&Cr2Word::identity()).unwrap().is_identity());
    assert!(eq(&phi(&fword()).unwrap(), &phi_f_printed()));
}

#[test]
fn dual_generators() {
    let ad = adjugate_map();
    assert!(ad.compose(&ad).unwrap().is_identity());
    let conj = ad.compose(&phi_sigma()).unwrap().compose(&ad).unwrap();
    assert!(eq(&conj, &phi_dual_sigma()));
    assert_eq!(phi_dual(&Cr2Word::sigma()).unwrap(), phi_dual_sigma());
}

#[test]
fn dual_of_fword() {
    assert!(eq(&phi_dual(&fword()).unwrap(), &phi_dual_f_printed()));
}

#[test]
fn chi_of_fword() {
    assert!(eq(&chi(1, &fword()).unwrap(), &chi1_f_printed()));
    assert!(eq(&chi(2, &fword()).unwrap(), &chi2_f_printed()));
    assert!(chi(1, &Cr2Word::identity()).unwrap().is_identity());
}

#[test]
fn rho_straightens_diagonals() {
    let k = Ring::constants(&["a", "b", "c"]);
    let d: Vec<Polynomial> = (0..3).map(|i| Polynomial::var(&k, i)).collect();
    let w = Cr2Word::symbolic(PolyMatrix::diagonal(&k, d).unwrap()).unwrap();
    let r = cremona_core::birmap::parse_multi_map(
        &product_ring().with_constants_of(&k),
        &[3, 3],
        "([a*x0 : b*x1 : c*x2], [y0 : y1 : y2])",
    )
    .unwrap();
    let got = rho_conjugate(&psi(1, &w).unwrap()).unwrap();
    assert!(got.equal_up_to_scalar(&r).unwrap());
    let r2 = cremona_core::birmap::parse_multi_map(
        &product_ring().with_constants_of(&k),
        &[3, 3],
        "([b*c*x0 : a*c*x1 : a*b*x2], [y0 : y1 : y2])",
    )
    .unwrap();
    let got2 = rho_conjugate(&psi(2, &w).unwrap()).unwrap();
    assert!(got2.equal_up_to_scalar(&r2).unwrap());
}

#[test]
fn projection_pair() {
    let a = projection_a();
    let ai = projection_a_inv();
    let id = MultiProjectiveMap::identity(&product_ring(), &[3, 3]).unwrap();
    assert!(a.compose(&ai).unwrap().equal_up_to_scalar(&id).unwrap());
    let fa = ai.pullback(&secant_cubic()).unwrap();
    assert!(fa.is_zero());
}

#[test]
fn secant_restricts_to_veronese() {
    let sd = secant().compose(&diagonal_embedding()).unwrap();
    let v = veronese();
    assert!(sd.equal_up_to_scalar(v.as_multi()).unwrap());
    let bad = secant_misprint().compose(&diagonal_embedding()).unwrap();
    assert!(!bad.equal_up_to_scalar(v.as_multi()).unwrap());
    let fv = veronese().as_multi().pullback(&secant_cubic()).unwrap();
    assert!(fv.is_zero());
}

#[test]
fn sigma_h_relation_on_conics() {
    let w = Cr2Word::sigma().then(&h_word());
    assert!(phi(&w.pow(3)).unwrap().is_identity());
}

#[test]
fn sigma_h_relation_dual() {
    let w = Cr2Word::sigma().then(&h_word());
    assert!(phi_dual(&w.pow(3)).unwrap().is_identity());
}

#[test]
fn misc_polys() {
    let f = secant_cubic();
    assert_eq!(f, parse_polynomial(&conic_ring(), "x0*x1*x2 + 2*x3*x4*x5 - x0*x3^2 - x1*x4^2 - x2*x5^2").unwrap());
    let _ = QMatrix::identity(3);
}

#[test]
fn ab_small_values() {
    let r = conic_chart_ring();
    let t = ab_table(&r, 2);
    assert_eq!(t[2].a, parse_polynomial(&r, "4*x5").unwrap());
    assert_eq!(t[2].b, parse_polynomial(&r, "2*x5^2 - x1").unwrap());
    assert_eq!(ab_bracket(&t, 2, 2), parse_polynomial(&r, "2*x1").unwrap());
}

#[test]
fn phi_of_s_matches_printed() {
    assert!(phi_s_affine().unwrap().equal(&phi_s_printed()).unwrap());
    assert!(phi_s_inv_affine().unwrap().equal(&phi_s_inv_printed()).unwrap());
}

#[test]
fn elementary_closed_form() {
    let k = Ring::constants(&["lambda"]);
    let l = Polynomial::var(&k, 0);
    let rec = phi_elementary_by_recursion(5, &l).unwrap();
    for (n, m) in rec.iter().enumerate() {
        assert!(m.equal(&phi_elementary(n)).unwrap(), "n = {n}: {m}");
    }
    for n in 0..=2 {
        let w = phi(&elementary_word(n, &l).unwrap()).unwrap().to_affine_chart(0).unwrap();
        assert!(w.equal(&phi_elementary(n)).unwrap(), "word n = {n}");
    }
}
