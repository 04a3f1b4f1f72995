//! Embeddings of Cremona groups into one dimension higher, the cross-ratio
//! obstruction on lines of ℙ³, and the integer-matrix identities used
//! alongside them.

mod cross;
mod psi;

pub use cross::{anharmonic_action, coordinate_permutation, cross_ratio, tau1_p3, tau2_p3, Anharmonic, LineInP3};
pub use psi::{psi_b, psi_l};

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::birmap::{matrix_group_check, monomial_map, AffineMap, IntMatrix, MapError, MatrixFactor, ProjectiveMap, QMatrix};
use crate::exactpoly::{q, Polynomial, RationalFunction, Ring};
use crate::gizatullin::{cube_witness, h_matrix, sigma, Sampler};
use crate::report::{Outcome, Suite};

/// `σₙ = [∏_{j≠0} xⱼ : … : ∏_{j≠n} xⱼ]` on ℙⁿ.
pub fn sigma_n(n: usize) -> ProjectiveMap {
    let ring = Ring::indexed("x", n + 1);
    let comps = (0..=n)
        .map(|i| (0..=n).filter(|&j| j != i).fold(Polynomial::one(&ring), |acc, j| &acc * &Polynomial::var(&ring, j)))
        .collect();
    ProjectiveMap::new(&ring, comps).expect("homogeneous")
}

/// Matrix of `gₙ = [xₙ−x₀ : xₙ−x₁ : … : xₙ−x_{n−1} : xₙ]`.
pub fn g_n_matrix(n: usize) -> QMatrix {
    let rows: Vec<Vec<i64>> = (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| match (j == n, i == j) {
                    (true, _) => 1,
                    (false, true) => -1,
                    (false, false) => 0,
                })
                .collect()
        })
        .collect();
    let r: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    QMatrix::from_i64(&r)
}

fn identity_outcome(m: &ProjectiveMap) -> Outcome {
    Outcome::expect(m.is_identity(), || format!("not the identity: {m}"))
}

fn affine_identity(m: &AffineMap) -> Outcome {
    Outcome::expect(m.is_identity(), || format!("not the identity: {}", m.render()))
}

/// `σₙ∘g` for the linear map `g`.
fn sigma_times(n: usize, g: &QMatrix) -> Result<ProjectiveMap, MapError> {
    let s = sigma_n(n);
    let g = ProjectiveMap::from_matrix_on(s.ring(), g)?;
    s.compose(&g)
}

/// `σ` and `h` in the chart `x0 = 1`.
fn sigma_h_affine() -> Result<(AffineMap, AffineMap), MapError> {
    let s = sigma();
    let h = ProjectiveMap::from_matrix_on(s.ring(), &h_matrix())?;
    Ok((s.to_affine_chart(0)?, h.to_affine_chart(0)?))
}

fn lifted_sigma_h_cubed(lift: &dyn Fn(&AffineMap) -> Result<AffineMap, MapError>) -> Result<Outcome, MapError> {
    let (s, h) = sigma_h_affine()?;
    let m = lift(&s)?.compose(&lift(&h)?)?.pow(3)?;
    Ok(affine_identity(&m))
}

/// `(σₙgₙ)³ = id` and `(σₙα(gₙ))³ ≠ id` for `n = 2, 3`, and the lifts of
/// `(σh)³ = id` to 𝔸³.
pub fn relation_check_codim1() -> Suite {
    let mut s = Suite::new("codim1-relations");
    for n in [2usize, 3] {
        s.add(format!("sigma-g-cubed-n{n}"), "(σₙgₙ)³ = id", move || {
            Ok(identity_outcome(&sigma_times(n, &g_n_matrix(n))?.pow(3)?))
        });
        s.add(format!("sigma-alpha-g-cubed-n{n}"), "(σₙα(gₙ))³ ≠ id with α(g) = ᵗg⁻¹", move || {
            let base = sigma_times(n, &g_n_matrix(n).inverse_transpose()?)?;
            let cube = base.pow(3)?;
            if cube.is_identity() {
                return Ok(Outcome::fail("the twisted cube is the identity"));
            }
            Ok(Outcome::pass_with(match cube_witness(&base)? {
                Some(w) => w,
                None => format!("cube is {cube}"),
            }))
        });
    }
    for l in 0..3u32 {
        s.add(format!("psi{l}-sigma-h-cubed"), "the l-twisted lift of (σh)³ is the identity", move || {
            lifted_sigma_h_cubed(&|f| psi_l(l, f))
        });
    }
    s.add("psib-sigma-h-cubed", "the lift to tangent directions of (σh)³ is the identity", || {
        lifted_sigma_h_cubed(&psi_b)
    });
    s
}

fn random_unimodular(rng: &mut Sampler, n: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for _ in 0..n + 1 {
        let (i, j) = (rng.int(0, n as i64 - 1) as usize, rng.int(0, n as i64 - 1) as usize);
        if i == j {
            continue;
        }
        let mut rows = IntMatrix::identity(n).rows();
        rows[i][j] = rng.nonzero(1);
        m = m.mul(&IntMatrix::from_vecs(&rows).expect("square")).expect("small entries");
    }
    m
}

/// `x ↦ Mx + b` on `x1..xn`, `M` invertible with small entries.
fn random_affine(rng: &mut Sampler, n: usize, translate: bool) -> AffineMap {
    let ring = Ring::new(&(1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>(), &[] as &[&str]);
    loop {
        let comps: Vec<Polynomial> = (0..n)
            .map(|_| {
                let b = if translate { rng.int(-3, 3) } else { 0 };
                (0..n).fold(Polynomial::integer(&ring, b), |acc, j| &acc + &Polynomial::var(&ring, j).scale(&q(rng.int(-2, 2))))
            })
            .collect();
        let f = AffineMap::from_polys(&ring, comps).expect("n components");
        if !f.jacobian_det().map(|j| j.is_zero()).unwrap_or(true) {
            return f;
        }
    }
}

fn random_monomial(rng: &mut Sampler, n: usize) -> AffineMap {
    monomial_map(&random_unimodular(rng, n)).expect("small exponents")
}

fn homomorphic(lift: &dyn Fn(&AffineMap) -> Result<AffineMap, MapError>, f: &AffineMap, g: &AffineMap) -> Result<Outcome, MapError> {
    let lhs = lift(&f.compose(g)?)?;
    let rhs = lift(f)?.compose(&lift(g)?)?;
    Ok(Outcome::expect(lhs.equal(&rhs)?, || format!("lift of the product {} but product of lifts {}", lhs.render(), rhs.render())))
}

/// Sampled pairs: `psi_l` on monomial and affine maps of 𝔸ⁿ, `2 ≤ n ≤ 4`,
/// and `psi_b` on linear maps of 𝔸².
pub fn psi_homomorphism_suite(seed: u64, pairs: usize) -> Suite {
    let mut s = Suite::new("codim1-homomorphism").with_seed(seed);
    let mut rng = Sampler::new(seed);
    for k in 0..pairs {
        let n = rng.int(2, 4) as usize;
        let l = rng.int(0, 3) as u32;
        let pick = |rng: &mut Sampler| {
            if rng.int(0, 1) == 0 {
                random_monomial(rng, n)
            } else {
                random_affine(rng, n, true)
            }
        };
        let (f, g) = (pick(&mut rng), pick(&mut rng));
        s.add(format!("psil-pair-{k:02}"), "the l-twisted lift is a homomorphism", move || {
            homomorphic(&|m| psi_l(l, m), &f, &g)
        });
    }
    for k in 0..pairs {
        let (f, g) = (random_affine(&mut rng, 2, false), random_affine(&mut rng, 2, false));
        s.add(format!("psib-pair-{k:02}"), "the lift to tangent directions is a homomorphism", move || {
            homomorphic(&psi_b, &f, &g)
        });
    }
    s
}

fn int(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(rows).expect("square")
}

pub fn s1_matrix() -> IntMatrix {
    int(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]])
}

pub fn s2_matrix() -> IntMatrix {
    int(&[&[0, -1, 1], &[0, -1, 0], &[1, -1, 0]])
}

pub fn t_matrix() -> IntMatrix {
    int(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]])
}

/// The conjugating pair `A`, `B` of the `GL₃(ℤ)` identity.
pub fn lemma_ab_matrices() -> (IntMatrix, IntMatrix) {
    (int(&[&[1, 0, 0], &[0, 1, 0], &[0, -1, 1]]), int(&[&[-1, 1, 0], &[0, 0, 1], &[1, 0, 0]]))
}

/// `n×n` matrix equal to `block` in the top-left corner and the identity
/// elsewhere.
fn padded(block: [[i64; 2]; 2], n: usize) -> IntMatrix {
    let mut rows = IntMatrix::identity(n).rows();
    for i in 0..2 {
        for j in 0..2 {
            rows[i][j] = block[i][j];
        }
    }
    IntMatrix::from_vecs(&rows).expect("square")
}

/// `B, C, D, E` of the generator lemma in `GLₙ(ℤ)`.
pub fn appendix_matrices(n: usize) -> [IntMatrix; 4] {
    [
        padded([[1, 1], [0, 1]], n),
        padded([[-1, 2], [0, 1]], n),
        padded([[-1, 0], [-1, 1]], n),
        padded([[0, 1], [1, 0]], n),
    ]
}

fn expect_matrix(got: &IntMatrix, want: &IntMatrix) -> Outcome {
    Outcome::expect(got == want, || format!("got {}, expected {}", got.render(), want.render()))
}

/// The `GL₃(ℤ)` identity `A(s₂(Bs₂B⁻¹))A⁻¹ = s₁T`, the orders of `s₁`,
/// `s₂`, `T`, and `DCED⁻¹ = B` both as matrices and as monomial maps.
pub fn gl3z_identity_suite() -> Suite {
    let mut s = Suite::new("gl3z");
    s.add("conjugate-product", "A(s₂(Bs₂B⁻¹))A⁻¹ = s₁T", || {
        let (a, b) = lemma_ab_matrices();
        let s2 = s2_matrix();
        let word = [
            MatrixFactor::plain(&a),
            MatrixFactor::plain(&s2),
            MatrixFactor::plain(&b),
            MatrixFactor::plain(&s2),
            MatrixFactor::inv(&b),
            MatrixFactor::inv(&a),
        ];
        Ok(expect_matrix(&matrix_group_check(&word)?, &s1_matrix().mul(&t_matrix())?))
    });
    let orders: [(&str, fn() -> IntMatrix, i32); 3] = [("s1", s1_matrix, 3), ("s2", s2_matrix, 2), ("t", t_matrix, 2)];
    for (name, m, k) in orders {
        s.add(format!("order-{name}"), format!("{name} has order {k}"), move || {
            let m = m();
            let lower = (1..k).map(|e| m.pow(e)).collect::<Result<Vec<_>, _>>()?;
            let top = m.pow(k)?;
            Ok(Outcome::expect(top.is_identity() && !lower.iter().any(IntMatrix::is_identity), || {
                format!("{name}^{k} = {}", top.render())
            }))
        });
    }
    for n in [2usize, 3, 4] {
        s.add(format!("dce-n{n}"), "DCED⁻¹ = B", move || {
            let [b, c, d, e] = appendix_matrices(n);
            let word = [MatrixFactor::plain(&d), MatrixFactor::plain(&c), MatrixFactor::plain(&e), MatrixFactor::inv(&d)];
            Ok(expect_matrix(&matrix_group_check(&word)?, &b))
        });
    }
    s.add("dce-monomial-maps", "f_B = f_D f_C f_E f_D⁻¹ as maps of 𝔸²", || {
        let [b, c, d, e] = appendix_matrices(2);
        let f = |m: &IntMatrix| monomial_map(m);
        let lhs = f(&d)?.compose(&f(&c)?)?.compose(&f(&e)?)?.compose(&f(&d.inverse()?)?)?;
        let want = f(&b)?;
        Ok(Outcome::expect(lhs.equal(&want)?, || format!("got {}, expected {}", lhs.render(), want.render())))
    });
    s
}

fn render_value(r: &RationalFunction) -> String {
    format!("{r}")
}

fn action_outcome(m: &QMatrix, want: impl Fn(Anharmonic) -> bool, claim: &str) -> Result<Outcome, MapError> {
    Ok(match anharmonic_action(m)? {
        Some(a) if want(a) => Outcome::pass_with(format!("cr becomes {}", a.formula())),
        Some(a) => Outcome::fail(format!("cr becomes {}, of order {}; {claim} fails", a.formula(), a.order())),
        None => Outcome::fail("image cross ratio is not an anharmonic value of cr"),
    })
}

/// Cross ratio of a symbolic general line after `m`, compared with the
/// original.
fn moved(m: &QMatrix) -> Result<(RationalFunction, RationalFunction), MapError> {
    let l = LineInP3::general();
    Ok((cross_ratio(&l)?, cross_ratio(&l.transform(m)?)?))
}

/// The action of `τ₁ = [x3:x1:x2:x0]` and `τ₂ = [x2:x1:x0:x3]` on the cross
/// ratio of a general line, as claimed: `τ₁` fixes it and `τ₂` moves it
/// with order 3.
pub fn cross_ratio_action_suite() -> Suite {
    let mut s = Suite::new("crossratio-action");
    s.add("convention", "(t₀,t₁;t₂,t₃) for p = (1,2,3,4), q = (1,1,1,1) is 4/3", || {
        let l = LineInP3::from_rationals([1, 2, 3, 4].map(q), [1, 1, 1, 1].map(q))?;
        let r = cross_ratio(&l)?;
        let want = RationalFunction::constant(r.ring(), crate::exactpoly::qq(4, 3));
        Ok(Outcome::expect(r == want, || render_value(&r)))
    });
    s.add("diagonal-fixes-cr", "the diagonal torus of PGL₄ fixes cr", || {
        let d = QMatrix::diagonal(&[q(2), q(-3), q(5), q(7)]);
        action_outcome(&d, |a| a == Anharmonic::Identity, "invariance")
    });
    s.add("double-transpositions-fix-cr", "double transpositions fix cr", || {
        let mut out = Outcome::pass();
        for pi in [[1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]] {
            out = out.and(action_outcome(&coordinate_permutation(pi), |a| a == Anharmonic::Identity, "invariance")?);
        }
        Ok(out)
    });
    s.add("tau1-fixes-cr", "τ₁ = [x3:x1:x2:x0] leaves cr invariant", || {
        action_outcome(&tau1_p3(), |a| a == Anharmonic::Identity, "invariance under τ₁")
    });
    s.add("tau2-moves-cr", "cr∘τ₂ ≠ cr", || {
        let (r, t) = moved(&tau2_p3())?;
        Ok(Outcome::expect(r != t, || format!("cr∘τ₂ = cr = {r}")))
    });
    s.add("tau2-squared-moves-cr", "cr∘τ₂² ≠ cr", || {
        let t2 = tau2_p3();
        let (r, t) = moved(&t2.mul(&t2))?;
        Ok(Outcome::expect(r != t, || "τ₂² = id, so cr∘τ₂² = cr".into()))
    });
    s.add("tau2-order-3", "τ₂ acts on cr by an anharmonic map of order 3", || {
        action_outcome(&tau2_p3(), |a| a.order() == 3, "order 3")
    });
    s.add("tau2-cubed-fixes-cr", "cr∘τ₂³ = cr via the order-3 action", || {
        let t2 = tau2_p3();
        let (r, t) = moved(&t2.mul(&t2).mul(&t2))?;
        let (_, once) = moved(&t2)?;
        Ok(Outcome::expect(r == t && once != r, || {
            format!("τ₂³ = τ₂ on ℙ³, so cr∘τ₂³ = cr∘τ₂ = {}", render_value(&t))
        }))
    });
    s
}
