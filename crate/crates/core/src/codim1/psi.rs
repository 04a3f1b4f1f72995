//! Lifts of self-maps of 𝔸ⁿ to 𝔸ⁿ⁺¹ using the differential.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::birmap::{AffineMap, MapError};
use crate::exactpoly::{RationalFunction, Ring};

/// `ring` with one more coordinate, named `x{n+1}` when that is free.
fn extended(ring: &Ring) -> Ring {
    let mut names: Vec<String> = ring.coord_names().to_vec();
    let mut fresh = format!("x{}", names.len() + 1);
    let mut k = 0;
    while ring.index_of(&fresh).is_some() {
        k += 1;
        fresh = format!("t{k}");
    }
    names.push(fresh);
    ring.with_coords(&names)
}

fn self_map(f: &AffineMap) -> Result<(), MapError> {
    if f.dim() != f.source_dim() {
        return Err(MapError::NotSelfMap);
    }
    Ok(())
}

/// `(f(x), J(f)^{-l}·x_{n+1})`, with `J(f)` the Jacobian determinant.
pub fn psi_l(l: u32, f: &AffineMap) -> Result<AffineMap, MapError> {
    self_map(f)?;
    let j = f.jacobian_det()?;
    if j.is_zero() {
        return Err(MapError::DegenerateJacobian);
    }
    let ring = extended(f.ring()).with_constants_of(j.ring());
    let n = f.source_dim();
    let mut comps: Vec<RationalFunction> = f.components().iter().map(|c| c.embed(&ring)).collect::<Result<_, _>>()?;
    let twist = j.embed(&ring)?.pow(-(l as i32))?;
    comps.push(twist.checked_mul(&RationalFunction::var(&ring, n))?);
    AffineMap::new(&ring, comps)
}

/// Action on the slope `x3` of tangent directions `(1, x3)`:
/// `x3 ↦ (J21 + J22·x3)/(J11 + J12·x3)` with `Jij = ∂fᵢ/∂xⱼ`.
pub fn psi_b(f: &AffineMap) -> Result<AffineMap, MapError> {
    self_map(f)?;
    if f.dim() != 2 {
        return Err(MapError::ShapeMismatch);
    }
    if f.jacobian_det()?.is_zero() {
        return Err(MapError::DegenerateJacobian);
    }
    let ring = extended(f.ring());
    let mut jac = Vec::with_capacity(4);
    for c in f.components() {
        for v in 0..2 {
            jac.push(c.partial_derivative(v)?.embed(&ring)?);
        }
    }
    let slope = RationalFunction::var(&ring, 2);
    let num = jac[2].checked_add(&jac[3].checked_mul(&slope)?)?;
    let den = jac[0].checked_add(&jac[1].checked_mul(&slope)?)?;
    let mut comps: Vec<RationalFunction> = f.components().iter().map(|c| c.embed(&ring)).collect::<Result<_, _>>()?;
    comps.push(num.checked_div(&den)?);
    AffineMap::new(&ring, comps)
}
