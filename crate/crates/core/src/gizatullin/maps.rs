//! Named maps with fixed formulas.

use alloc::string::String;
use alloc::vec::Vec;

use super::conic::conic_ring;
use super::word::Cr2Word;
use crate::birmap::{parse_multi_map, parse_projective_map, MultiProjectiveMap, ProjectiveMap, QMatrix};
use crate::exactpoly::{Polynomial, Ring};

fn proj(ring: &Ring, s: &str) -> ProjectiveMap {
    parse_projective_map(ring, s).expect("built-in formula")
}

fn multi(ring: &Ring, source: &[usize], s: &str) -> MultiProjectiveMap {
    parse_multi_map(ring, source, s).expect("built-in formula")
}

/// Coordinates `x0, x1, x2` of the plane.
pub fn plane_ring() -> Ring {
    Ring::indexed("x", 3)
}

/// Coordinates `y0, y1, y2` of the second factor.
pub fn fibre_ring() -> Ring {
    Ring::indexed("y", 3)
}

/// `x0, x1, x2, y0, y1, y2` for `ℙ² × ℙ²`.
pub fn product_ring() -> Ring {
    Ring::new(&["x0", "x1", "x2", "y0", "y1", "y2"], &[] as &[&str])
}

pub fn sigma() -> ProjectiveMap {
    proj(&plane_ring(), "[x1*x2 : x0*x2 : x0*x1]")
}

/// Image of `σ` on conics.
pub fn phi_sigma() -> ProjectiveMap {
    proj(&conic_ring(), "[x1*x2 : x0*x2 : x0*x1 : x3*x0 : x4*x1 : x5*x2]")
}

/// Dual image of `σ`, six quintics.
pub fn phi_dual_sigma() -> ProjectiveMap {
    let (q0, q1, q2) = ("(x1*x2 - x3^2)", "(x0*x2 - x4^2)", "(x0*x1 - x5^2)");
    let s = alloc::format!("[{q0}^2*x0 : {q1}^2*x1 : {q2}^2*x2 : {q1}*{q2}*x3 : {q0}*{q2}*x4 : {q0}*{q1}*x5]");
    proj(&conic_ring(), &s)
}

/// Conic to dual conic: the adjugate matrix.
pub fn adjugate_map() -> ProjectiveMap {
    proj(
        &conic_ring(),
        "[x1*x2 - x3^2 : x0*x2 - x4^2 : x0*x1 - x5^2 : x4*x5 - x0*x3 : x3*x5 - x1*x4 : x3*x4 - x2*x5]",
    )
}

/// `[X² : Y² : Z² : YZ : XZ : XY]`.
pub fn veronese() -> ProjectiveMap {
    proj(&plane_ring(), "[x0^2 : x1^2 : x2^2 : x1*x2 : x0*x2 : x0*x1]")
}

/// The pair of points `([X:Y:Z], [U:V:W])` to the conic `ℓ₁ℓ₂`, with the
/// symmetric middle terms.
pub fn secant() -> MultiProjectiveMap {
    multi(
        &product_ring(),
        &[3, 3],
        "[x0*y0 : x1*y1 : x2*y2 : 1/2*x1*y2 + 1/2*y1*x2 : 1/2*x0*y2 + 1/2*x2*y0 : 1/2*x0*y1 + 1/2*x1*y0]",
    )
}

/// The secant map with fourth coordinate `½(YW + UZ)`, as it is sometimes
/// printed. It is not symmetric and fails `s∘Δ = v`.
pub fn secant_misprint() -> MultiProjectiveMap {
    multi(
        &product_ring(),
        &[3, 3],
        "[x0*y0 : x1*y1 : x2*y2 : 1/2*x1*y2 + 1/2*y0*x2 : 1/2*x0*y2 + 1/2*x2*y0 : 1/2*x0*y1 + 1/2*x1*y0]",
    )
}

/// Diagonal `ℙ² → ℙ² × ℙ²`.
pub fn diagonal_embedding() -> MultiProjectiveMap {
    multi(&plane_ring(), &[3], "([x0 : x1 : x2], [x0 : x1 : x2])")
}

/// Projection of ℙ⁵ onto the planes `E₁ = {x0 = x4 = x5 = 0}` and
/// `E₂ = {x1 = x2 = x3 = 0}`.
pub fn projection_a() -> MultiProjectiveMap {
    multi(&conic_ring(), &[6], "([x1 : x2 : x3], [x0 : x4 : x5])")
}

/// Inverse of the projection on the secant cubic.
pub fn projection_a_inv() -> MultiProjectiveMap {
    let p1 = "(x0*y1^2 + x1*y2^2 - 2*x2*y1*y2)";
    let p2 = "y0*(x0*x1 - x2^2)";
    let s = alloc::format!("[{p2}*y0 : {p1}*x0 : {p1}*x1 : {p1}*x2 : {p2}*y1 : {p2}*y2]");
    multi(&product_ring(), &[3, 3], &s)
}

pub fn rho() -> MultiProjectiveMap {
    multi(&product_ring(), &[3, 3], "([x2*y0 : x0*y1 : x2*y1], [x0*y1^2 : x1*y2^2 : x2*y1*y2])")
}

pub fn rho_inv() -> MultiProjectiveMap {
    multi(&product_ring(), &[3, 3], "([x1^2*y2^2 : x2^2*y0*y1 : x1*x2*y2^2], [x0*y0 : x2*y0 : x1*y2])")
}

/// `[y0 - y2 : y1 - y2 : y2]`.
pub fn a_prime() -> ProjectiveMap {
    proj(&fibre_ring(), "[y0 - y2 : y1 - y2 : y2]")
}

pub fn a_prime_inv() -> ProjectiveMap {
    proj(&fibre_ring(), "[y0 + y2 : y1 + y2 : y2]")
}

/// `[1/x0 : … : 1/x5]` with denominators cleared.
pub fn naive_inversion() -> ProjectiveMap {
    let r = conic_ring();
    let comps = (0..6)
        .map(|i| {
            let mut p = Polynomial::one(&r);
            for j in (0..6).filter(|&j| j != i) {
                p = &p * &Polynomial::var(&r, j);
            }
            p
        })
        .collect();
    ProjectiveMap::new(&r, comps).expect("quintics")
}

pub fn h_matrix() -> QMatrix {
    QMatrix::from_i64(&[&[-1, 0, 1], &[0, -1, 1], &[0, 0, 1]])
}

pub fn g0_matrix() -> QMatrix {
    QMatrix::from_i64(&[&[-1, 1, 0], &[0, 1, 0], &[0, 0, 1]])
}

pub fn tau1_matrix() -> QMatrix {
    QMatrix::from_i64(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])
}

pub fn tau2_matrix() -> QMatrix {
    QMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])
}

fn lin(m: &QMatrix) -> Cr2Word {
    Cr2Word::linear(m).expect("invertible")
}

pub fn h_word() -> Cr2Word {
    lin(&h_matrix())
}

/// `τ₁ g₀ σ g₀ σ g₀ τ₂`, equal to `[XY : YZ : Z²]`.
pub fn fword() -> Cr2Word {
    let (t1, g0, t2, s) = (lin(&tau1_matrix()), lin(&g0_matrix()), lin(&tau2_matrix()), Cr2Word::sigma());
    Cr2Word::product(&[&t1, &g0, &s, &g0, &s, &g0, &t2])
}

/// `s = (X, XY)` in the chart `x0 = 1`, as the word `τ₁ f τ₁`.
pub fn s_word() -> Cr2Word {
    let t1 = lin(&tau1_matrix());
    Cr2Word::product(&[&t1, &fword(), &t1])
}

/// `[XY : YZ : Z²]`.
pub fn f_map() -> ProjectiveMap {
    proj(&plane_ring(), "[x0*x1 : x1*x2 : x2^2]")
}

pub fn phi_f_printed() -> ProjectiveMap {
    proj(&conic_ring(), "[x0*x1 : x1*x2 : x2^2 : x2*x3 : -x2*x5 + 2*x3*x4 : x1*x4]")
}

pub fn phi_dual_f_printed() -> ProjectiveMap {
    let g: [&str; 6] = [
        "(x0*x1 - x5^2)^2*x0",
        "x0^2*x1^2*x2 - 2*x0*x1*x2*x5^2 - 4*x0*x1*x3*x4*x5 + 4*x0*x3^2*x5^2 + 4*x1*x4^2*x5^2 + x2*x5^4 - 4*x3*x4*x5^3",
        "(x0*x2 - x4^2)^2*x1",
        "(x0*x2 - x4^2)*(x0*x1*x3 - 2*x1*x4*x5 + x3*x5^2)",
        "-(x0*x2 - x4^2)*(x0*x1 - x5^2)*x5",
        "(x0*x1 - x5^2)*(x0*x1*x4 - 2*x0*x3*x5 + x4*x5^2)",
    ];
    proj(&conic_ring(), &alloc::format!("[{}]", g.join(" : ")))
}

pub fn chi1_f_printed() -> ProjectiveMap {
    proj(&fibre_ring(), "[(y1 - 2*y2)^2 : y0*y1 : -y2*(y1 - 2*y2)]")
}

pub fn chi2_f_printed() -> ProjectiveMap {
    proj(
        &fibre_ring(),
        "[y0^2*y1 + 4*y0*y1^2 - 6*y0*y1*y2 - 3*y1*y2^2 + 4*y2^3 : y0*(y0 + 2*y1 - 3*y2)^2 : \
         (2*y0*y1 - y0*y2 - y2^2)*(y0 + 2*y1 - 3*y2)]",
    )
}

/// `A′ χ₂(f)² A′⁻¹`.
pub fn chi2_f_square_conjugate_printed() -> ProjectiveMap {
    let p = "(6*y1^2*y2 + 7*y2*y0*y1 + 6*y0*y1^2 + 2*y0^2*y2 + 2*y0^2*y1)";
    let s = alloc::format!(
        "[-y0^2*y1^2*(2*y1 + y0) : y0^2*y1^2*(3*y1 + 2*y0) : {p}*(3*y1 + 2*y0)*(2*y1 + y0)]"
    );
    proj(&fibre_ring(), &s)
}

/// A named object from the registry.
#[derive(Clone, Debug)]
pub enum Named {
    Map(ProjectiveMap),
    Multi(MultiProjectiveMap),
    Word(Cr2Word),
}

/// Every registered name with a one-line description.
pub const REGISTRY: &[(&str, &str)] = &[
    ("sigma", "standard quadratic involution of the plane"),
    ("phi(sigma)", "image of sigma acting on conics"),
    ("phi_dual(sigma)", "dual image of sigma, six quintics"),
    ("ad", "adjugate involution of the space of conics"),
    ("veronese", "Veronese surface embedding"),
    ("secant", "pair of lines to their product conic"),
    ("A", "projection of conic space onto E1 and E2"),
    ("Ainv", "inverse of A on the secant cubic"),
    ("rho", "fibration of P2 x P2 by D2-orbits"),
    ("rhoinv", "inverse of rho"),
    ("h", "[x2 - x0 : x2 - x1 : x2]"),
    ("g0", "[x1 - x0 : x1 : x2]"),
    ("tau1", "[x2 : x1 : x0]"),
    ("tau2", "[x1 : x2 : x0]"),
    ("fword", "[XY : YZ : Z^2] as a word in linear maps and sigma"),
    ("sword", "(X, XY) as a word"),
    ("Aprime", "[y0 - y2 : y1 - y2 : y2]"),
    ("naive", "[1/x0 : ... : 1/x5]"),
];

/// Looks a name up; `None` when unknown.
pub fn named(name: &str) -> Option<Named> {
    Some(match name {
        "sigma" => Named::Word(Cr2Word::sigma()),
        "phi(sigma)" => Named::Map(phi_sigma()),
        "phi_dual(sigma)" => Named::Map(phi_dual_sigma()),
        "ad" => Named::Map(adjugate_map()),
        "veronese" => Named::Map(veronese()),
        "secant" => Named::Multi(secant()),
        "A" => Named::Multi(projection_a()),
        "Ainv" => Named::Multi(projection_a_inv()),
        "rho" => Named::Multi(rho()),
        "rhoinv" => Named::Multi(rho_inv()),
        "h" => Named::Word(h_word()),
        "g0" => Named::Word(lin(&g0_matrix())),
        "tau1" => Named::Word(lin(&tau1_matrix())),
        "tau2" => Named::Word(lin(&tau2_matrix())),
        "fword" => Named::Word(fword()),
        "sword" => Named::Word(s_word()),
        "Aprime" => Named::Map(a_prime()),
        "naive" => Named::Map(naive_inversion()),
        _ => return None,
    })
}

/// Names in registry order.
pub fn names() -> Vec<String> {
    REGISTRY.iter().map(|(n, _)| String::from(*n)).collect()
}
