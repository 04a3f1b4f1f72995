use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::matrix::QMatrix;
use super::projective::ProjectiveMap;
use super::MapError;
use crate::exactpoly::{Polynomial, Rational, Ring};

/// Square matrix whose entries are polynomials in symbolic constants only,
/// e.g. `diag(a, b, c)`. Projective constructions only need it up to a
/// scalar, so the adjugate stands in for the inverse.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    n: usize,
    a: Vec<Polynomial>,
}

impl PolyMatrix {
    /// Entries must live in `ring`, which has no coordinates.
    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Polynomial>>) -> Result<PolyMatrix, MapError> {
        if ring.coords() != 0 {
            return Err(MapError::Other("matrix entries may only involve constants".into()));
        }
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(MapError::NotSquare);
        }
        let a = rows.into_iter().flatten().map(|p| p.embed(ring)).collect::<Result<Vec<_>, _>>()?;
        Ok(PolyMatrix { ring: ring.clone(), n, a })
    }

    pub fn from_qmatrix(m: &QMatrix) -> PolyMatrix {
        let ring = Ring::constants(&[] as &[&str]);
        let n = m.size();
        let a = (0..n * n).map(|k| Polynomial::constant(&ring, m.get(k / n, k % n).clone())).collect();
        PolyMatrix { ring, n, a }
    }

    pub fn identity(n: usize) -> PolyMatrix {
        PolyMatrix::from_qmatrix(&QMatrix::identity(n))
    }

    /// `diag(c₀, …)` from constant polynomials.
    pub fn diagonal(ring: &Ring, d: Vec<Polynomial>) -> Result<PolyMatrix, MapError> {
        let n = d.len();
        let mut rows: Vec<Vec<Polynomial>> = (0..n).map(|_| (0..n).map(|_| Polynomial::zero(ring)).collect()).collect();
        for (i, v) in d.into_iter().enumerate() {
            rows[i][i] = v;
        }
        PolyMatrix::from_rows(ring, rows)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.a[i * self.n + j]
    }

    /// Same entries over a ring with more constants.
    pub fn embed(&self, ring: &Ring) -> Result<PolyMatrix, MapError> {
        let a = self.a.iter().map(|p| p.embed(ring)).collect::<Result<Vec<_>, _>>()?;
        Ok(PolyMatrix { ring: ring.clone(), n: self.n, a })
    }

    /// Rational matrix when no constant occurs.
    pub fn to_qmatrix(&self) -> Option<QMatrix> {
        let rows: Option<Vec<Vec<Rational>>> =
            (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).constant_value()).collect()).collect();
        QMatrix::from_rows(&rows?).ok()
    }

    pub fn transpose(&self) -> PolyMatrix {
        let n = self.n;
        let a = (0..n * n).map(|k| self.get(k % n, k / n).clone()).collect();
        PolyMatrix { ring: self.ring.clone(), n, a }
    }

    pub fn mul(&self, o: &PolyMatrix) -> Result<PolyMatrix, MapError> {
        if self.n != o.n {
            return Err(MapError::ShapeMismatch);
        }
        let ring = self.ring.with_constants_of(&o.ring);
        let (x, y) = (self.embed(&ring)?, o.embed(&ring)?);
        let n = self.n;
        let mut a = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut s = Polynomial::zero(&ring);
                for k in 0..n {
                    s = &s + &(x.get(i, k) * y.get(k, j));
                }
                a.push(s);
            }
        }
        Ok(PolyMatrix { ring, n, a })
    }

    fn minor(&self, r: usize, c: usize) -> Vec<Vec<Polynomial>> {
        (0..self.n)
            .filter(|&i| i != r)
            .map(|i| (0..self.n).filter(|&j| j != c).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    pub fn det(&self) -> Polynomial {
        let rows: Vec<Vec<Polynomial>> = (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect()).collect();
        if self.n == 0 {
            return Polynomial::one(&self.ring);
        }
        crate::exactpoly::determinant(&rows)
    }

    /// `adj(M)`, so that `M · adj(M) = det(M) · I`.
    pub fn adjugate(&self) -> PolyMatrix {
        let n = self.n;
        if n == 1 {
            return PolyMatrix::from_rows(&self.ring, alloc::vec![alloc::vec![Polynomial::one(&self.ring)]]).unwrap();
        }
        let mut a = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let m = crate::exactpoly::determinant(&self.minor(j, i));
                a.push(if (i + j) % 2 == 0 { m } else { -m });
            }
        }
        PolyMatrix { ring: self.ring.clone(), n, a }
    }

    /// `det(M)·ᵗM⁻¹`, the cofactor matrix.
    pub fn cofactor(&self) -> PolyMatrix {
        self.adjugate().transpose()
    }

    pub fn is_singular(&self) -> bool {
        self.det().is_zero()
    }

    /// Linear map `[row₀·x : … ]` on `x0..x(n-1)` plus the constants.
    pub fn to_map(&self) -> Result<ProjectiveMap, MapError> {
        let ring = Ring::indexed("x", self.n).with_constants_of(&self.ring);
        self.to_map_on(&ring)
    }

    pub fn to_map_on(&self, ring: &Ring) -> Result<ProjectiveMap, MapError> {
        if ring.coords() != self.n {
            return Err(MapError::ShapeMismatch);
        }
        if self.is_singular() {
            return Err(MapError::SingularMatrix);
        }
        let ring = ring.with_constants_of(&self.ring);
        let comps = (0..self.n)
            .map(|i| {
                let mut s = Polynomial::zero(&ring);
                for j in 0..self.n {
                    s = &s + &(&self.get(i, j).embed(&ring)? * &Polynomial::var(&ring, j));
                }
                Ok(s)
            })
            .collect::<Result<Vec<_>, MapError>>()?;
        ProjectiveMap::from_components_reduced(&ring, comps)
    }

    pub fn render(&self) -> String {
        let names = self.ring.names();
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                let e: Vec<String> = (0..self.n).map(|j| self.get(i, j).render_with(names)).collect();
                alloc::format!("[{}]", e.join(", "))
            })
            .collect();
        alloc::format!("[{}]", rows.join(", "))
    }
}

impl From<&QMatrix> for PolyMatrix {
    fn from(m: &QMatrix) -> PolyMatrix {
        PolyMatrix::from_qmatrix(m)
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
