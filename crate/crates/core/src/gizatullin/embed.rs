use alloc::vec::Vec;

use super::conic::{conic_action_on, conic_ring};
use super::maps::{fibre_ring, phi_dual_sigma, phi_sigma, projection_a, projection_a_inv, rho, rho_inv};
use super::word::{evaluate, Cr2Word, Generator};
use crate::birmap::{MapError, MultiProjectiveMap, ProjectiveMap};
use crate::exactpoly::{Polynomial, Ring};

fn conic_ring_for(w: &Cr2Word) -> Ring {
    conic_ring().with_constants_of(&w.constants())
}

/// The word acting on conics: a linear `g` acts by `X ↦ g·X·ᵗg`, `σ` by
/// its fixed quadratic image.
pub fn phi(w: &Cr2Word) -> Result<ProjectiveMap, MapError> {
    let ring = conic_ring_for(w);
    evaluate(w, &ring, |t, r| match t.effective_matrix() {
        None => Ok(phi_sigma()),
        Some(m) => conic_action_on(r, &m),
    })
}

/// Same with every linear `g` replaced by `ᵗg⁻¹` and `σ` by its dual image.
pub fn phi_dual(w: &Cr2Word) -> Result<ProjectiveMap, MapError> {
    let ring = conic_ring_for(w);
    evaluate(w, &ring, |t, r| match (&t.generator, t.inverse) {
        (Generator::Sigma, _) => Ok(phi_dual_sigma()),
        // det(g)·ᵗg⁻¹ and ᵗg give the same conic maps as ᵗg⁻¹ and ᵗg.
        (Generator::Linear(m), false) => conic_action_on(r, &m.cofactor()),
        (Generator::Linear(m), true) => conic_action_on(r, &m.transpose()),
    })
}

/// `A ∘ Φ(w) ∘ A⁻¹` for `i = 1`, with `Φ^∨` for `i = 2`.
pub fn psi(i: u8, w: &Cr2Word) -> Result<MultiProjectiveMap, MapError> {
    let inner = match i {
        1 => phi(w)?,
        2 => phi_dual(w)?,
        _ => return Err(MapError::Other(alloc::format!("no embedding psi{i}"))),
    };
    psi_of(&inner)
}

/// `A ∘ f ∘ A⁻¹` for a self-map `f` of the space of conics.
pub fn psi_of(f: &ProjectiveMap) -> Result<MultiProjectiveMap, MapError> {
    projection_a().compose(f.as_multi())?.compose(&projection_a_inv())
}

/// `ρ ∘ m ∘ ρ⁻¹`.
pub fn rho_conjugate(m: &MultiProjectiveMap) -> Result<MultiProjectiveMap, MapError> {
    rho().compose(m)?.compose(&rho_inv())
}

/// The action on the second factor after straightening by `ρ`.
pub fn chi(i: u8, w: &Cr2Word) -> Result<ProjectiveMap, MapError> {
    second_factor(&rho_conjugate(&psi(i, w)?)?)
}

/// Second block of a map of `ℙ² × ℙ²` that only depends on `y0, y1, y2`,
/// as a map of the plane in those coordinates.
pub fn second_factor(m: &MultiProjectiveMap) -> Result<ProjectiveMap, MapError> {
    if m.source_blocks() != [3, 3] || m.blocks().len() != 2 {
        return Err(MapError::ShapeMismatch);
    }
    let block = m.block(1);
    if block.iter().any(|p| (0..3).any(|v| p.uses_variable(v))) {
        return Err(MapError::FibrationNotPreserved);
    }
    let target = fibre_ring().with_constants_of(m.ring());
    let mut images: Vec<Polynomial> = (0..3).map(|_| Polynomial::zero(&target)).collect();
    images.extend((0..3).map(|j| Polynomial::var(&target, j)));
    let comps = block.iter().map(|p| p.substitute(&images)).collect::<Result<Vec<_>, _>>()?;
    ProjectiveMap::from_components_reduced(&target, comps)
}
