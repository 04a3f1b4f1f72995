//! Conics as points of ℙ⁵: the symmetric matrix `(aᵢⱼ)` is stored as
//! `[a00 : a11 : a22 : a12 : a02 : a01]`.

use alloc::vec::Vec;

use crate::birmap::{MapError, PolyMatrix, ProjectiveMap};
use crate::exactpoly::{Polynomial, Ring};

/// Matrix position of each ℙ⁵ coordinate.
pub const CONIC_ENTRIES: [(usize, usize); 6] = [(0, 0), (1, 1), (2, 2), (1, 2), (0, 2), (0, 1)];

/// ℙ⁵ coordinate holding matrix entry `(i, j)`.
pub fn conic_index(i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    CONIC_ENTRIES.iter().position(|&e| e == (i, j)).expect("indices below 3")
}

/// Coordinates `x0..x5` of the space of conics.
pub fn conic_ring() -> Ring {
    Ring::indexed("x", 6)
}

/// The symmetric matrix of coordinate variables over `ring`.
pub fn symmetric_matrix(ring: &Ring) -> [[Polynomial; 3]; 3] {
    core::array::from_fn(|i| core::array::from_fn(|j| Polynomial::var(ring, conic_index(i, j))))
}

/// `X ↦ g·X·ᵗg` with `g` acting on ℙ² by `x ↦ g·x`.
pub fn conic_action(g: &PolyMatrix) -> Result<ProjectiveMap, MapError> {
    conic_action_on(&conic_ring(), g)
}

pub fn conic_action_on(ring: &Ring, g: &PolyMatrix) -> Result<ProjectiveMap, MapError> {
    if g.size() != 3 || ring.coords() != 6 {
        return Err(MapError::ShapeMismatch);
    }
    if g.is_singular() {
        return Err(MapError::SingularMatrix);
    }
    let ring = ring.with_constants_of(g.ring());
    let x = symmetric_matrix(&ring);
    let gm: Vec<Vec<Polynomial>> =
        (0..3).map(|i| (0..3).map(|j| g.get(i, j).embed(&ring)).collect::<Result<_, _>>()).collect::<Result<_, _>>()?;
    let comps = CONIC_ENTRIES
        .iter()
        .map(|&(i, j)| {
            let mut s = Polynomial::zero(&ring);
            for k in 0..3 {
                for l in 0..3 {
                    if gm[i][k].is_zero() || gm[j][l].is_zero() {
                        continue;
                    }
                    s = &s + &(&(&gm[i][k] * &gm[j][l]) * &x[k][l]);
                }
            }
            s
        })
        .collect();
    ProjectiveMap::from_components_reduced(&ring, comps)
}

/// Determinant of the symmetric coordinate matrix: the cubic of singular
/// conics.
pub fn secant_cubic() -> Polynomial {
    let r = conic_ring();
    let x = symmetric_matrix(&r);
    let rows: Vec<Vec<Polynomial>> = x.iter().map(|row| row.to_vec()).collect();
    crate::exactpoly::determinant(&rows)
}
