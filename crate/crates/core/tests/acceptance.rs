//! One line per acceptance criterion. Runs without the test harness so the
//! lines are always shown; exits nonzero if any criterion fails.

use std::time::Instant;

use cremona_core::birmap::{parse_multi_map, parse_projective_map, MapError, MultiProjectiveMap, PolyMatrix};
use cremona_core::codim1::{cross_ratio_action_suite, gl3z_identity_suite, psi_homomorphism_suite, relation_check_codim1};
use cremona_core::exactpoly::{Polynomial, Ring};
use cremona_core::gizatullin::*;
use cremona_core::report::{Report, Suite};
use cremona_core::volforms::omega_invariance_suite;

const GOLDEN: &str = include_str!("golden/printed.txt");

fn diagonal_word() -> Cr2Word {
    let k = Ring::constants(&["a", "b", "c"]);
    let d: Vec<Polynomial> = (0..3).map(|i| Polynomial::var(&k, i)).collect();
    Cr2Word::symbolic(PolyMatrix::diagonal(&k, d).unwrap()).unwrap()
}

/// The map a golden line is compared against, recomputed from words.
fn recompute(id: &str) -> Result<MultiProjectiveMap, MapError> {
    let f = fword();
    Ok(match id {
        "phi-sigma" => phi(&Cr2Word::sigma())?.into_multi(),
        "dual-sigma" => phi_dual(&Cr2Word::sigma())?.into_multi(),
        "ad" => adjugate_from_minors()?.into_multi(),
        "phi-f" => phi(&f)?.into_multi(),
        "dual-f" => phi_dual(&f)?.into_multi(),
        "chi1-f" => chi(1, &f)?.into_multi(),
        "chi2-f" => chi(2, &f)?.into_multi(),
        "rho-psi1-diagonal" => rho_conjugate(&psi(1, &diagonal_word())?)?,
        "rho-psi2-diagonal" => rho_conjugate(&psi(2, &diagonal_word())?)?,
        _ => return Err(MapError::Other(format!("no recomputation for `{id}`"))),
    })
}

fn golden_suite() -> Suite {
    let mut s = Suite::new("golden");
    for line in GOLDEN.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')) {
        let parts: Vec<String> = line.splitn(4, " ; ").map(str::to_string).collect();
        let [id, ring, anchor, literal] = <[String; 4]>::try_from(parts).expect("four fields");
        s.add(id.clone(), anchor, move || {
            let want = match ring.as_str() {
                "conic" => parse_projective_map(&conic_ring(), &literal)?.into_multi(),
                "fibre" => parse_projective_map(&fibre_ring(), &literal)?.into_multi(),
                "product-abc" => {
                    let r = product_ring().with_constants_of(&Ring::constants(&["a", "b", "c"]));
                    parse_multi_map(&r, &[3, 3], &literal)?
                }
                other => return Err(MapError::Other(format!("unknown ring `{other}`"))),
            };
            let got = recompute(&id)?;
            Ok(cremona_core::report::Outcome::expect(got.equal_up_to_scalar(&want)?, || got.render()))
        });
    }
    s
}

struct Criterion {
    number: u32,
    title: &'static str,
    suites: fn() -> Vec<Suite>,
}

const CRITERIA: &[Criterion] = &[
    Criterion { number: 1, title: "relations of phi and phi_dual; naive candidate is not a relation", suites: || vec![relation_suite(1)] },
    Criterion { number: 2, title: "phi is a homomorphism on 20 random words", suites: || vec![homomorphism_suite(2, 20)] },
    Criterion { number: 3, title: "adjugate conjugation", suites: || vec![dual_suite(3)] },
    Criterion { number: 4, title: "printed formulas recomputed from words", suites: || vec![golden_suite(), printed_formula_suite()] },
    Criterion { number: 5, title: "Veronese and secant equivariance", suites: || vec![equivariance_suite(4, 10)] },
    Criterion { number: 6, title: "secant cubic invariance and contractions", suites: || vec![secant_invariance_suite(), contraction_suite()] },
    Criterion { number: 7, title: "volume form invariance", suites: || vec![omega_invariance_suite(11)] },
    Criterion { number: 8, title: "degree growth of chi1(f), bounded conjugate of chi2(f)", suites: || vec![chi_growth_suite(10, 8)] },
    Criterion { number: 9, title: "A_n, B_n recursion and degree bracket", suites: || vec![ab_family_suite(8, 5)] },
    Criterion {
        number: 10,
        title: "degrees on automorphisms of the affine plane",
        suites: || vec![aut_a2_degree_suite(&default_degree_specs(), 5), degree_lower_bound_suite(default_lower_bound_words(6), Some(6))],
    },
    Criterion {
        number: 11,
        title: "codimension one: psi homomorphisms, relations, GL3(Z) identities, cross-ratio action",
        suites: || vec![psi_homomorphism_suite(11, 10), relation_check_codim1(), gl3z_identity_suite(), cross_ratio_action_suite()],
    },
];

fn main() {
    let mut red = Vec::new();
    for c in CRITERIA {
        let t = Instant::now();
        let reports: Vec<Report> = (c.suites)().iter().map(Suite::run).collect();
        let (pass, fail): (usize, usize) = reports.iter().fold((0, 0), |(p, f), r| (p + r.passed(), f + r.failed()));
        let status = if fail == 0 { "PASS" } else { "FAIL" };
        println!("criterion {:>2}: {status}  {} ({pass} passed, {fail} failed, {:.1}s)", c.number, c.title, t.elapsed().as_secs_f64());
        for r in &reports {
            for e in r.failures() {
                println!("    {}/{}: {}", r.suite, e.id, e.witness.as_deref().unwrap_or("no witness"));
            }
        }
        if fail > 0 {
            red.push(c.number);
        }
    }
    if !red.is_empty() {
        println!("failing criteria: {red:?}");
        std::process::exit(1);
    }
}
