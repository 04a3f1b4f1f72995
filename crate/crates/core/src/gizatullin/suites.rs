//! Verification suites over the named maps.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::conic::{conic_ring, secant_cubic, symmetric_matrix, CONIC_ENTRIES};
use super::elementary::*;
use super::embed::{chi, phi, phi_dual, psi, rho_conjugate};
use super::maps::*;
use super::sample::Sampler;
use super::word::Cr2Word;
use crate::birmap::{parse_multi_map, MapError, MultiProjectiveMap, PolyMatrix, ProjectiveMap, QMatrix};
use crate::exactpoly::{q, Polynomial, Rational, Ring};
use crate::report::{Outcome, Suite};

/// Pass when the maps agree up to a scalar; the witness shows both.
pub fn same(got: &ProjectiveMap, want: &ProjectiveMap) -> Result<Outcome, MapError> {
    same_multi(got.as_multi(), want.as_multi())
}

pub fn same_multi(got: &MultiProjectiveMap, want: &MultiProjectiveMap) -> Result<Outcome, MapError> {
    let ok = got.equal_up_to_scalar(want)?;
    Ok(Outcome::expect(ok, || format!("got {got}, expected {want}")))
}

fn identity(m: &ProjectiveMap) -> Outcome {
    Outcome::expect(m.is_identity(), || format!("not the identity: {m}"))
}

fn single(m: &QMatrix) -> Cr2Word {
    Cr2Word::linear(m).expect("invertible")
}

fn permutations() -> Vec<QMatrix> {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    perms
        .iter()
        .map(|p| {
            let rows: Vec<Vec<Rational>> = (0..3).map(|i| (0..3).map(|j| q((p[i] == j) as i64)).collect()).collect();
            QMatrix::from_rows(&rows).expect("square")
        })
        .collect()
}

fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
}

fn render_point(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(|c| format!("{c}")).collect();
    format!("[{}]", parts.join(" : "))
}

/// A rational point moved by `f³`, which shows `f³ ≠ id`. Searches a few
/// small points that stay away from the indeterminacy.
pub fn cube_witness(f: &ProjectiveMap) -> Result<Option<String>, MapError> {
    let n = f.ring().coords();
    let mut s = Sampler::new(7);
    for _ in 0..50 {
        let p: Vec<Rational> = (0..n).map(|_| q(s.int(-9, 9))).collect();
        let mut cur = p.clone();
        let mut defined = true;
        for _ in 0..3 {
            match f.eval(&cur)? {
                Some(v) if v.iter().any(|c| *c != q(0)) => cur = v,
                _ => {
                    defined = false;
                    break;
                }
            }
        }
        if defined && !proportional(&p, &cur) {
            return Ok(Some(format!("{} maps to {}", render_point(&p), render_point(&cur))));
        }
    }
    Ok(None)
}

/// Passes when some point exhibits `f³ ≠ id`.
fn cube_moves(f: &ProjectiveMap) -> Result<Outcome, MapError> {
    Ok(match cube_witness(f)? {
        Some(w) => Outcome::pass_with(w),
        None => Outcome::fail("no rational point moved by the cube"),
    })
}

type Image = fn(&Cr2Word) -> Result<ProjectiveMap, MapError>;

fn relations_for(suite: &mut Suite, tag: &'static str, image: Image, seed: u64) {
    for (k, t) in permutations().into_iter().enumerate() {
        suite.add(
            format!("{tag}-sigma-commutes-perm-{k}"),
            "the standard involution commutes with coordinate permutations",
            move || {
                let (s, p) = (image(&Cr2Word::sigma())?, image(&single(&t))?);
                same(&s.compose(&p)?, &p.compose(&s)?)
            },
        );
    }
    let mut rng = Sampler::new(seed);
    for k in 0..5 {
        let d = rng.diagonal();
        suite.add(
            format!("{tag}-sigma-inverts-diagonal-{k}"),
            "the standard involution conjugates a diagonal map to its inverse",
            move || {
                let s = image(&Cr2Word::sigma())?;
                let lhs = s.compose(&image(&single(&d))?)?.compose(&s)?;
                same(&lhs, &image(&single(&d.inverse()?))?)
            },
        );
    }
    suite.add(format!("{tag}-sigma-h-cubed"), "(σh)³ = id with h = [x2 - x0 : x2 - x1 : x2]", move || {
        let a = image(&Cr2Word::sigma())?.compose(&image(&h_word())?)?;
        Ok(identity(&a.pow(3)?))
    });
}

/// Generator relations under `Φ` and `Φ^∨`, plus the failure of the
/// coordinatewise inversion of ℙ⁵ to satisfy the third one.
pub fn relation_suite(seed: u64) -> Suite {
    let mut s = Suite::new("relations").with_seed(seed);
    relations_for(&mut s, "phi", phi, seed);
    relations_for(&mut s, "dual", phi_dual, seed);
    s.add("naive-inversion-breaks-sigma-h", "coordinatewise inversion composed with φ(h) has cube ≠ id", || {
        cube_moves(&naive_inversion().compose(&phi(&h_word())?)?)
    });
    s
}

/// `Φ(w₁w₂) = Φ(w₁)∘Φ(w₂)`; the product is normalized first, so merged
/// linear letters and cancelled `σσ` pairs are exercised.
pub fn homomorphism_suite(seed: u64, pairs: usize) -> Suite {
    let mut s = Suite::new("homomorphism").with_seed(seed);
    let mut rng = Sampler::new(seed);
    for k in 0..pairs {
        let (a, b) = (rng.word(4, 2), rng.word(4, 2));
        s.add(format!("phi-hom-{k:02}"), "φ is a group homomorphism on sampled words", move || {
            same(&phi(&a.then(&b).normalize())?, &phi(&a)?.compose(&phi(&b)?)?)
        });
    }
    s
}

/// The adjugate involution and how it conjugates `Φ` to `Φ^∨`.
pub fn dual_suite(seed: u64) -> Suite {
    let mut s = Suite::new("dual").with_seed(seed);
    s.add("ad-involution", "the adjugate map is an involution", || {
        let ad = adjugate_map();
        Ok(identity(&ad.compose(&ad)?))
    });
    s.add("ad-degree", "the adjugate map is quadratic", || {
        let d = adjugate_map().degree();
        Ok(Outcome::expect(d == 2, || format!("degree {d}")))
    });
    let mut rng = Sampler::new(seed);
    for k in 0..5 {
        let g = rng.unimodular();
        s.add(format!("ad-conjugates-{k}"), "Ad∘φ(g)∘Ad = φ(ᵗg⁻¹) for unimodular g", move || {
            let ad = adjugate_map();
            let lhs = ad.compose(&phi(&single(&g.to_qmatrix()))?)?.compose(&ad)?;
            let alpha = g.inverse()?.transpose().to_qmatrix();
            same(&lhs, &phi(&single(&alpha))?)
        });
    }
    for k in 0..5 {
        let w = rng.word(3, 1);
        s.add(format!("dual-is-conjugate-{k}"), "Φ^∨(w) = Ad∘Φ(w)∘Ad on sampled words", move || {
            let ad = adjugate_map();
            same(&phi_dual(&w)?, &ad.compose(&phi(&w)?)?.compose(&ad)?)
        });
    }
    s
}

/// The adjugate computed from 2×2 minors of the symmetric matrix.
pub fn adjugate_from_minors() -> Result<ProjectiveMap, MapError> {
    let r = conic_ring();
    let x = symmetric_matrix(&r);
    let minor = |i: usize, j: usize| {
        let rows: Vec<usize> = (0..3).filter(|&k| k != i).collect();
        let cols: Vec<usize> = (0..3).filter(|&k| k != j).collect();
        &(&x[rows[0]][cols[0]] * &x[rows[1]][cols[1]]) - &(&x[rows[0]][cols[1]] * &x[rows[1]][cols[0]])
    };
    let comps = CONIC_ENTRIES
        .iter()
        .map(|&(i, j)| if (i + j) % 2 == 0 { minor(j, i) } else { -minor(j, i) })
        .collect();
    ProjectiveMap::from_components_reduced(&r, comps)
}

fn diagonal_word() -> (Ring, Cr2Word) {
    let k = Ring::constants(&["a", "b", "c"]);
    let d: Vec<Polynomial> = (0..3).map(|i| Polynomial::var(&k, i)).collect();
    (k.clone(), Cr2Word::symbolic(PolyMatrix::diagonal(&k, d).expect("square")).expect("generic"))
}

/// Recomputes the displayed formulas from words.
pub fn printed_formula_suite() -> Suite {
    let mut s = Suite::new("printed");
    s.add("phi-sigma", "printed image of σ on conics", || same(&phi(&Cr2Word::sigma())?, &phi_sigma()));
    s.add("phi-sigma-veronese", "the printed Φ(σ) restricts to σ on the Veronese surface", || {
        same(&phi_sigma().compose(&veronese())?, &veronese().compose(&sigma())?)
    });
    s.add("dual-sigma", "printed six quintics of Φ^∨(σ)", || {
        let ad = adjugate_map();
        same(&ad.compose(&phi_sigma())?.compose(&ad)?, &phi_dual_sigma())
    });
    s.add("ad", "printed adjugate map", || same(&adjugate_from_minors()?, &adjugate_map()));
    s.add("phi-f", "printed Φ(f) for f = [XY : YZ : Z²]", || same(&phi(&fword())?, &phi_f_printed()));
    s.add("dual-f", "printed Φ^∨(f) = [g0 : … : g5]", || same(&phi_dual(&fword())?, &phi_dual_f_printed()));
    s.add("fword", "f = τ1 g0 σ g0 σ g0 τ2 is [XY : YZ : Z²]", || same(&fword().to_map()?, &f_map()));
    s.add("chi1-f", "printed χ1(f)", || same(&chi(1, &fword())?, &chi1_f_printed()));
    s.add("chi2-f", "printed χ2(f)", || same(&chi(2, &fword())?, &chi2_f_printed()));
    s.add("rho-psi1-diagonal", "ρ straightens Ψ1 of a diagonal map to ([ax0 : bx1 : cx2], id)", || {
        let (k, w) = diagonal_word();
        let want = parse_multi_map(&product_ring().with_constants_of(&k), &[3, 3], "([a*x0 : b*x1 : c*x2], [y0 : y1 : y2])")?;
        same_multi(&rho_conjugate(&psi(1, &w)?)?, &want)
    });
    s.add("rho-psi2-diagonal", "ρ straightens Ψ2 of a diagonal map to ([x0/a : x1/b : x2/c], id)", || {
        let (k, w) = diagonal_word();
        let want =
            parse_multi_map(&product_ring().with_constants_of(&k), &[3, 3], "([b*c*x0 : a*c*x1 : a*b*x2], [y0 : y1 : y2])")?;
        same_multi(&rho_conjugate(&psi(2, &w)?)?, &want)
    });
    s
}

/// `w × w` on `ℙ² × ℙ²`.
pub fn product_action(m: &ProjectiveMap) -> Result<MultiProjectiveMap, MapError> {
    let ring = product_ring().with_constants_of(m.ring());
    let block = |offset: usize| -> Result<Vec<Polynomial>, MapError> {
        let images: Vec<Polynomial> = (0..3).map(|i| Polynomial::var(&ring, offset + i)).collect();
        m.components().iter().map(|p| Ok(p.substitute(&images)?.embed(&ring)?)).collect()
    };
    let blocks = alloc::vec![block(0)?, block(3)?];
    MultiProjectiveMap::new(&ring, &[3, 3], blocks)
}

fn equivariance_checks(s: &mut Suite, name: String, w: Cr2Word) {
    let w2 = w.clone();
    s.add(format!("veronese-{name}"), "Φ(w)∘v = v∘w", move || {
        let m = w.to_map()?;
        same(&phi(&w)?.compose(&veronese())?, &veronese().compose(&m)?)
    });
    s.add(format!("secant-{name}"), "Φ(w)∘s = s∘(w×w)", move || {
        let lhs = phi(&w2)?.as_multi().compose(&secant())?;
        same_multi(&lhs, &secant().compose(&product_action(&w2.to_map()?)?)?)
    });
}

/// Equivariance of the Veronese and secant morphisms.
pub fn equivariance_suite(seed: u64, samples: usize) -> Suite {
    let mut s = Suite::new("equivariance").with_seed(seed);
    let gens: [(&str, Cr2Word); 6] = [
        ("sigma", Cr2Word::sigma()),
        ("h", h_word()),
        ("g0", single(&g0_matrix())),
        ("tau1", single(&tau1_matrix())),
        ("tau2", single(&tau2_matrix())),
        ("fword", fword()),
    ];
    for (n, w) in gens {
        equivariance_checks(&mut s, n.into(), w);
    }
    let mut rng = Sampler::new(seed);
    for k in 0..samples {
        equivariance_checks(&mut s, format!("sample-{k:02}"), rng.word(4, 2));
    }
    s.add("secant-diagonal", "s∘Δ = v", || same_multi(&secant().compose(&diagonal_embedding())?, veronese().as_multi()));
    s.add("secant-misprint-rejected", "the form ½(YW + UZ) fails s∘Δ = v", || {
        let ok = !secant_misprint().compose(&diagonal_embedding())?.equal_up_to_scalar(veronese().as_multi())?;
        Ok(Outcome::expect(ok, || "the misprinted secant also restricts to v".into()))
    });
    s
}

fn quadrics() -> [Polynomial; 3] {
    let r = conic_ring();
    let x = |i| Polynomial::var(&r, i);
    [&(&x(1) * &x(2)) - &x(3).pow(2), &(&x(0) * &x(2)) - &x(4).pow(2), &(&x(0) * &x(1)) - &x(5).pow(2)]
}

/// The secant cubic is preserved, with the expected cofactors.
pub fn secant_invariance_suite() -> Suite {
    let mut s = Suite::new("secant-invariance");
    s.add("phi-sigma", "F divides F∘Φ(σ) with cofactor x0x1x2", || {
        let r = conic_ring();
        let pb = phi_sigma().pullback_hypersurface(&secant_cubic(), &[])?;
        let want = (0..3).fold(Polynomial::one(&r), |a, i| &a * &Polynomial::var(&r, i));
        Ok(match pb.quotient {
            Some(qt) => Outcome::expect(qt.normalized() == want.normalized(), || format!("cofactor {qt}")),
            None => Outcome::fail("F does not divide F∘Φ(σ)"),
        })
    });
    s.add("dual-sigma", "F divides F∘Φ^∨(σ) with cofactor a product of the quadrics Gi", || {
        let pb = phi_dual_sigma().pullback_hypersurface(&secant_cubic(), &quadrics())?;
        Ok(match (&pb.quotient, &pb.residual) {
            (Some(_), Some(r)) => Outcome::expect(r.is_constant(), || format!("left over {r}"))
                .and(Outcome::pass_with(format!("multiplicities {:?}", pb.multiplicities))),
            _ => Outcome::fail("F does not divide F∘Φ^∨(σ)"),
        })
    });
    s.add("a-inverse-in-secant", "A⁻¹ lands in the secant cubic", || {
        let p = projection_a_inv().pullback(&secant_cubic())?;
        Ok(Outcome::expect(p.is_zero(), || format!("F∘A⁻¹ = {p}")))
    });
    s.add("a-after-a-inverse", "A∘A⁻¹ = id", || {
        let id = MultiProjectiveMap::identity(&product_ring(), &[3, 3])?;
        same_multi(&projection_a().compose(&projection_a_inv())?, &id)
    });
    s.add("veronese-in-secant", "F∘v = 0", || {
        let p = veronese().as_multi().pullback(&secant_cubic())?;
        Ok(Outcome::expect(p.is_zero(), || format!("F∘v = {p}")))
    });
    s
}

/// `Φ(σ)` maps `Hᵢ = {xᵢ = 0}` into the plane `Eᵢ`.
pub fn contraction_suite() -> Suite {
    let planes: [(usize, [usize; 3]); 3] = [(0, [1, 2, 3]), (1, [0, 2, 4]), (2, [0, 1, 5])];
    let mut s = Suite::new("contraction");
    for (i, e) in planes {
        s.add(format!("h{i}-onto-e{i}"), "Φ(σ) contracts the hyperplane Hi onto the plane Ei", move || {
            Ok(Outcome::expect(phi_sigma().image_in_subspace(i, &e), || format!("H{i} is not sent into E{i}")))
        });
    }
    s
}

/// The recursions for `Aₙ, Bₙ`, the bracket degree bound, and the closed
/// form of `Φ(fₙ^λ)` against word evaluation.
pub fn ab_family_suite(n_max: usize, closed_form_max: usize) -> Suite {
    let mut s = Suite::new("ab-family");
    s.add("ab-initial", "A2 = 4x5, B2 = 2x5² - x1, A2B1 - A1B2 = 2x1", || {
        let r = conic_chart_ring();
        let t = ab_table(&r, 2);
        let p = |src: &str| crate::exactpoly::parse_polynomial(&r, src);
        let ok = t[2].a == p("4*x5")? && t[2].b == p("2*x5^2 - x1")? && ab_bracket(&t, 2, 2) == p("2*x1")?;
        Ok(Outcome::expect(ok, || format!("A2 = {}, B2 = {}", t[2].a, t[2].b)))
    });
    s.add("ab-degrees", "deg An = n - 1 and deg Bn = n", move || {
        let t = ab_table(&conic_chart_ring(), n_max);
        for f in t.iter().skip(1) {
            if f.a.degree() != Some(f.n as u32 - 1) || f.b.degree() != Some(f.n as u32) {
                return Ok(Outcome::fail(format!("n = {}: A = {}, B = {}", f.n, f.a, f.b)));
            }
        }
        Ok(Outcome::pass())
    });
    s.add("ab-bracket-degree", "deg(AnB(m-1) - A(n-1)Bm) < max(m, n)", move || {
        let t = ab_table(&conic_chart_ring(), n_max);
        for n in 1..=n_max {
            for m in 1..=n_max {
                let d = ab_bracket(&t, n, m).degree().unwrap_or(0) as usize;
                if d >= n.max(m) {
                    return Ok(Outcome::fail(format!("n = {n}, m = {m}: degree {d}")));
                }
            }
        }
        Ok(Outcome::pass())
    });
    s.add("ab-bracket-recursion", "bracket(n, m) = x1·bracket(n - 1, m - 1)", move || {
        let r = conic_chart_ring();
        let t = ab_table(&r, n_max);
        let x1 = Polynomial::named(&r, "x1")?;
        for n in 2..=n_max {
            for m in 2..=n_max {
                if ab_bracket(&t, n, m) != &x1 * &ab_bracket(&t, n - 1, m - 1) {
                    return Ok(Outcome::fail(format!("n = {n}, m = {m}")));
                }
            }
        }
        Ok(Outcome::pass())
    });
    s.add("phi-s", "printed Φ(s) and Φ(s⁻¹) for s = (X, XY)", || {
        let ok = phi_s_affine()?.equal(&phi_s_printed())? && phi_s_inv_affine()?.equal(&phi_s_inv_printed())?;
        Ok(Outcome::expect(ok, || format!("Φ(s) = {}", phi_s_affine().map(|m| m.render()).unwrap_or_default())))
    });
    s.add("s-word", "the word τ1 f τ1 is s = (X, XY)", || {
        let m = s_word().to_map()?.to_affine_chart(0)?;
        Ok(Outcome::expect(m.render() == "(x1, x1*x2)", || m.render()))
    });
    for n in 0..=closed_form_max {
        s.add(format!("phi-f{n}-recursion"), "closed form of Φ(fn^λ) against Φ(s)Φ(f(n-1)^λ)Φ(s)⁻¹", move || {
            let l = Polynomial::var(&Ring::constants(&["lambda"]), 0);
            let got = phi_elementary_by_recursion(n, &l)?.pop().expect("nonempty");
            Ok(Outcome::expect(got.equal(&phi_elementary(n))?, || format!("got {got}")))
        });
        s.add(format!("phi-f{n}-word"), "closed form of Φ(fn^λ) against Φ of the word sⁿ f0^λ s⁻ⁿ", move || {
            let l = Polynomial::var(&Ring::constants(&["lambda"]), 0);
            let w = elementary_word(n, &l)?;
            let got = phi(&w)?.to_affine_chart(0)?;
            Ok(Outcome::expect(got.equal(&phi_elementary(n))?, || format!("got {got}")))
        });
    }
    s
}

/// Default elementary products `f₁^{λ₁}⋯fₙ^{λₙ}`.
pub fn default_degree_specs() -> Vec<Vec<i64>> {
    alloc::vec![
        alloc::vec![0, 1],
        alloc::vec![1, 0, 2],
        alloc::vec![3, -1, 0, 1],
        alloc::vec![0, 0, 0, 0, -2],
        alloc::vec![1, 1, 1, 1, 1, 1],
        alloc::vec![1],
    ]
}

/// Degrees of `Φ` on polynomial automorphisms of the plane.
pub fn aut_a2_degree_suite(specs: &[Vec<i64>], seed: u64) -> Suite {
    let mut s = Suite::new("aut-a2-degrees").with_seed(seed);
    let mut rng = Sampler::new(seed);
    for k in 0..5 {
        let g = rng.affine_linear();
        s.add(format!("affine-{k}"), "Φ maps affine-linear maps of the plane to affine-linear maps", move || {
            let m = phi(&single(&g))?.to_affine_chart(0)?;
            Ok(Outcome::expect(m.is_affine_linear(), || m.render()))
        });
    }
    for (k, spec) in specs.iter().enumerate() {
        let spec = spec.clone();
        s.add(format!("elementary-{k}"), "Φ(f) is a polynomial automorphism and deg Φ(f) = deg f", move || {
            let n = spec.len() as u32;
            if spec.last().copied().unwrap_or(0) == 0 || n > 6 {
                return Err(MapError::Other("a spec needs 1 to 6 entries and a nonzero last one".into()));
            }
            let k0 = Ring::constants(&[] as &[&str]);
            let ls: Vec<Polynomial> = spec.iter().map(|&v| Polynomial::integer(&k0, v)).collect();
            let (f, image) = elementary_product(&ls)?;
            let df = polynomial_degree(&f);
            let dp = polynomial_degree(&image);
            let det = image.jacobian_det()?;
            let unit = det.as_polynomial().is_some_and(|p| p.is_constant() && !p.is_zero());
            let ok = df == Some(n) && dp == Some(n) && unit;
            Ok(Outcome::expect(ok, || format!("deg f = {df:?}, deg Φ(f) = {dp:?}, jacobian {det}")))
        });
    }
    s
}

/// Sample words for the degree comparison.
pub fn default_lower_bound_words(seed: u64) -> Vec<(String, Cr2Word)> {
    let mut out = alloc::vec![
        ("sigma".into(), Cr2Word::sigma()),
        ("fword".into(), fword()),
        ("sigma-h".into(), Cr2Word::sigma().then(&h_word())),
    ];
    let mut rng = Sampler::new(seed);
    for k in 0..7 {
        out.push((format!("sample-{k}"), rng.word(6, 3)));
    }
    out
}

/// `deg w ≤ deg Φ(w)`.
pub fn degree_lower_bound_suite(words: Vec<(String, Cr2Word)>, seed: Option<u64>) -> Suite {
    let mut s = Suite::new("degree-lower-bound");
    s.seed = seed;
    for (name, w) in words {
        s.add(format!("lower-bound-{name}"), "deg w ≤ deg Φ(w)", move || {
            let (a, b) = (w.to_map()?.degree(), phi(&w)?.degree());
            let note = format!("{a} ≤ {b}");
            Ok(if a <= b { Outcome::pass_with(note) } else { Outcome::fail(note) })
        });
    }
    s
}

/// Degree growth of `χ₁(f)` against boundedness of `A′χ₂(f)²A′⁻¹`.
pub fn chi_growth_suite(chi1_max: usize, chi2_max: usize) -> Suite {
    let mut s = Suite::new("chi-growth");
    s.add("chi1-unbounded", "deg χ1(f)ⁿ strictly increasing with eventually constant differences", move || {
        let seq = chi(1, &fword())?.degree_sequence(chi1_max)?;
        let d = seq.first_differences();
        let tail = &d[1.min(d.len())..];
        let increasing = tail.iter().all(|&x| x > 0);
        let settled = d.len() >= 3 && d[d.len() - 3..].windows(2).all(|w| w[0] == w[1]);
        Ok(Outcome::expect(increasing && settled, || format!("degrees {:?}", seq.degrees)))
    });
    s.add("chi2-square-printed", "printed A′χ2(f)²A′⁻¹", || {
        let c = chi(2, &fword())?;
        same(&a_prime().compose(&c.compose(&c)?)?.compose(&a_prime_inv())?, &chi2_f_square_conjugate_printed())
    });
    s.add("chi2-bounded", "deg (A′χ2(f)²A′⁻¹)ⁿ = 5", move || {
        let c = chi(2, &fword())?;
        let m = a_prime().compose(&c.compose(&c)?)?.compose(&a_prime_inv())?;
        let seq = m.degree_sequence(chi2_max)?;
        Ok(Outcome::expect(seq.degrees.iter().all(|&d| d == 5), || format!("degrees {:?}", seq.degrees)))
    });
    s
}
