//! Polynomial automorphisms of the affine plane, seen in the chart
//! `x0 = 1` of ℙ², and their images in the chart `x0 = 1` of the space of
//! conics.

use alloc::vec::Vec;

use super::embed::phi;
use super::maps::s_word;
use super::word::Cr2Word;
use crate::birmap::{parse_affine_map, AffineMap, MapError, PolyMatrix, ProjectiveMap};
use crate::exactpoly::{Polynomial, RationalFunction, Ring};

/// Affine coordinates `x1..x5` of the conic chart `x0 = 1`.
pub fn conic_chart_ring() -> Ring {
    Ring::new(&["x1", "x2", "x3", "x4", "x5"], &[] as &[&str])
}

/// The pair `Aₙ, Bₙ` in `x1, x5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ABFamily {
    pub n: usize,
    pub a: Polynomial,
    pub b: Polynomial,
}

/// `Aₙ, Bₙ` for `n = 0..=n_max`, over `ring` (which must contain `x1, x5`).
pub fn ab_table(ring: &Ring, n_max: usize) -> Vec<ABFamily> {
    let x1 = Polynomial::named(ring, "x1").expect("x1 in ring");
    let x5 = Polynomial::named(ring, "x5").expect("x5 in ring");
    let two_x5 = &x5 * &Polynomial::integer(ring, 2);
    let mut out: Vec<ABFamily> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let (a, b) = match n {
            0 => (Polynomial::zero(ring), Polynomial::one(ring)),
            1 => (Polynomial::integer(ring, 2), x5.clone()),
            _ => {
                let (p, q) = (&out[n - 1], &out[n - 2]);
                (&(&two_x5 * &p.a) - &(&x1 * &q.a), &(&two_x5 * &p.b) - &(&x1 * &q.b))
            }
        };
        out.push(ABFamily { n, a, b });
    }
    out
}

pub fn ab_family(n: usize) -> ABFamily {
    ab_table(&conic_chart_ring(), n).pop().expect("nonempty")
}

/// `x1·A_{n−1}` and `x1·B_{n−1}`, continuing the recursion one step below
/// zero for `n = 0`: `x1·A₋₁ = −2`, `x1·B₋₁ = x5`.
fn shifted(table: &[ABFamily], n: usize, ring: &Ring) -> (Polynomial, Polynomial) {
    let x1 = Polynomial::named(ring, "x1").expect("x1 in ring");
    match n {
        0 => (Polynomial::integer(ring, -2), Polynomial::named(ring, "x5").expect("x5 in ring")),
        _ => (&x1 * &table[n - 1].a, &x1 * &table[n - 1].b),
    }
}

/// Closed form of `Φ(fₙ^λ)` for `fₙ^λ = (X, Y + λXⁿ)`, with `λ` any
/// polynomial in constants.
pub fn phi_elementary_at(n: usize, lambda: &Polynomial) -> Result<AffineMap, MapError> {
    if lambda.ring().coords() != 0 {
        return Err(MapError::Other("lambda must be a constant".into()));
    }
    let ring = conic_chart_ring().with_constants_of(lambda.ring());
    let l = lambda.embed(&ring)?;
    let x = |i: usize| Polynomial::var(&ring, i - 1);
    let table = ab_table(&ring, n);
    let (x1a, x1b) = shifted(&table, n, &ring);
    let (an, bn) = (&table[n].a, &table[n].b);
    let c2 = &(&(&(&l * &l) * &x(1).pow(n as u32)) + &(&(&l * &x(3)) * an)) - &(&(&l * &x(4)) * &x1a);
    let comps = alloc::vec![
        x(1),
        &x(2) + &c2,
        &x(3) + &(&l * &x1b),
        &x(4) + &(&l * bn),
        x(5),
    ];
    AffineMap::from_polys(&ring, comps)
}

/// Same with a symbolic constant `lambda`.
pub fn phi_elementary(n: usize) -> AffineMap {
    let k = Ring::constants(&["lambda"]);
    phi_elementary_at(n, &Polynomial::var(&k, 0)).expect("constant")
}

/// `f₀^λ = (X, Y + λ)` as a linear letter.
pub fn translation_word(lambda: &Polynomial) -> Result<Cr2Word, MapError> {
    let k = lambda.ring();
    let (o, z) = (Polynomial::one(k), Polynomial::zero(k));
    let rows = alloc::vec![
        alloc::vec![o.clone(), z.clone(), z.clone()],
        alloc::vec![z.clone(), o.clone(), z.clone()],
        alloc::vec![lambda.clone(), z.clone(), o],
    ];
    Cr2Word::symbolic(PolyMatrix::from_rows(k, rows)?)
}

/// `sⁿ f₀^λ s⁻ⁿ`, which is `(X, Y + λXⁿ)`.
pub fn elementary_word(n: usize, lambda: &Polynomial) -> Result<Cr2Word, MapError> {
    let s = s_word();
    let sn = s.pow(n as i32);
    Ok(Cr2Word::product(&[&sn, &translation_word(lambda)?, &sn.inverse()]))
}

/// `Φ(s)` in the conic chart.
pub fn phi_s_affine() -> Result<AffineMap, MapError> {
    phi(&s_word())?.to_affine_chart(0)
}

pub fn phi_s_inv_affine() -> Result<AffineMap, MapError> {
    phi(&s_word().inverse())?.to_affine_chart(0)
}

pub fn phi_s_printed() -> AffineMap {
    parse_affine_map(&conic_chart_ring(), "(x1, x1*x2, x1*x4, 2*x4*x5 - x3, x5)").expect("built-in formula")
}

pub fn phi_s_inv_printed() -> AffineMap {
    parse_affine_map(&conic_chart_ring(), "(x1, x2/x1, 2*x3*x5/x1 - x4, x3/x1, x5)").expect("built-in formula")
}

/// `Φ(fₙ^λ)` by the recursion `Φ(fₙ) = Φ(s)∘Φ(fₙ₋₁)∘Φ(s)⁻¹`, starting
/// from `Φ(f₀^λ)` computed from the translation letter. Entry `k` is
/// `Φ(f_k^λ)`.
pub fn phi_elementary_by_recursion(n_max: usize, lambda: &Polynomial) -> Result<Vec<AffineMap>, MapError> {
    let s = phi_s_affine()?;
    let si = phi_s_inv_affine()?;
    let mut cur = phi(&translation_word(lambda)?)?.to_affine_chart(0)?;
    let mut out = alloc::vec![cur.clone()];
    for _ in 0..n_max {
        cur = s.compose(&cur)?.compose(&si)?;
        out.push(cur.clone());
    }
    Ok(out)
}

/// `(X, Y + Σ λᵢ Xⁱ)` and its image: the product `f₁^{λ₁}⋯fₙ^{λₙ}` of
/// elementary maps, which commute.
pub fn elementary_product(lambdas: &[Polynomial]) -> Result<(AffineMap, AffineMap), MapError> {
    let k = lambdas
        .iter()
        .fold(Ring::constants(&[] as &[&str]), |r, l| r.with_constants_of(l.ring()));
    let plane = Ring::new(&["x1", "x2"], &[] as &[&str]).with_constants_of(&k);
    let (x, y) = (Polynomial::var(&plane, 0), Polynomial::var(&plane, 1));
    let mut second = y;
    let mut image = AffineMap::identity(&conic_chart_ring().with_constants_of(&k));
    for (i, l) in lambdas.iter().enumerate() {
        let l = l.embed(&k)?;
        second = &second + &(&l.embed(&plane)? * &x.pow(i as u32 + 1));
        image = phi_elementary_at(i + 1, &l)?.compose(&image)?;
    }
    let f = AffineMap::from_polys(&plane, alloc::vec![x, second])?;
    Ok((f, image))
}

/// Largest total degree of a polynomial map's components.
pub fn polynomial_degree(f: &AffineMap) -> Option<u32> {
    let mut d = 0;
    for c in f.components() {
        d = d.max(c.as_polynomial()?.degree().unwrap_or(0));
    }
    Some(d)
}

/// Embeds a plane map given in the chart `x0 = 1` back into ℙ².
pub fn plane_map(f: &AffineMap) -> Result<ProjectiveMap, MapError> {
    let pring = Ring::indexed("x", 3).with_constants_of(f.ring());
    f.to_projective_on(&pring)
}

/// `AₙB_{m−1} − A_{n−1}Bₘ`.
pub fn ab_bracket(table: &[ABFamily], n: usize, m: usize) -> Polynomial {
    &(&table[n].a * &table[m - 1].b) - &(&table[n - 1].a * &table[m].b)
}

/// Denominators that are constants: the map is polynomial up to scaling.
pub fn is_polynomial_map(f: &AffineMap) -> bool {
    f.components().iter().all(|c: &RationalFunction| c.is_coordinate_polynomial())
}
