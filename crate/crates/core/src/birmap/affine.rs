use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::matrix::IntMatrix;
use super::projective::ProjectiveMap;
use super::MapError;
use crate::exactpoly::{jacobian_det, Polynomial, Rational, RationalFunction, Ring};

/// Rational map `𝔸ⁿ ⇢ 𝔸ᵐ`, one rational function per target
/// coordinate. `chart` records which homogeneous coordinate was set to 1,
/// which only matters when going back to projective space.
#[derive(Clone, PartialEq, Eq)]
pub struct AffineMap {
    ring: Ring,
    comps: Vec<RationalFunction>,
    chart: usize,
}

impl AffineMap {
    pub fn new(ring: &Ring, comps: Vec<RationalFunction>) -> Result<AffineMap, MapError> {
        AffineMap::new_in_chart(ring, comps, 0)
    }

    pub fn new_in_chart(ring: &Ring, comps: Vec<RationalFunction>, chart: usize) -> Result<AffineMap, MapError> {
        if comps.is_empty() || chart > ring.coords() {
            return Err(MapError::ShapeMismatch);
        }
        let comps = comps.iter().map(|c| c.embed(ring)).collect::<Result<Vec<_>, _>>()?;
        Ok(AffineMap { ring: ring.clone(), comps, chart })
    }

    /// Polynomial components.
    pub fn from_polys(ring: &Ring, comps: Vec<Polynomial>) -> Result<AffineMap, MapError> {
        AffineMap::new(ring, comps.into_iter().map(RationalFunction::from_poly).collect())
    }

    pub fn identity(ring: &Ring) -> AffineMap {
        let comps = (0..ring.coords()).map(|i| RationalFunction::var(ring, i)).collect();
        AffineMap { ring: ring.clone(), comps, chart: 0 }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn components(&self) -> &[RationalFunction] {
        &self.comps
    }

    pub fn chart(&self) -> usize {
        self.chart
    }

    pub fn with_chart(mut self, chart: usize) -> AffineMap {
        self.chart = chart;
        self
    }

    /// Dimension of the target.
    pub fn dim(&self) -> usize {
        self.comps.len()
    }

    /// Dimension of the source.
    pub fn source_dim(&self) -> usize {
        self.ring.coords()
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &AffineMap) -> Result<AffineMap, MapError> {
        if self.source_dim() != g.dim() {
            return Err(MapError::SpaceMismatch {
                source_space: alloc::format!("A^{}", self.source_dim()),
                target_space: alloc::format!("A^{}", g.dim()),
            });
        }
        let ring = g.ring.with_constants_of(&self.ring);
        let images = g.comps.iter().map(|c| c.embed(&ring)).collect::<Result<Vec<_>, _>>()?;
        let comps = self
            .comps
            .iter()
            .map(|c| Ok(c.substitute(&images)?.embed(&ring)?))
            .collect::<Result<Vec<_>, MapError>>()?;
        Ok(AffineMap { ring, comps, chart: self.chart })
    }

    pub fn pow(&self, k: u32) -> Result<AffineMap, MapError> {
        if self.source_dim() != self.dim() {
            return Err(MapError::NotSelfMap);
        }
        let mut acc = AffineMap::identity(&self.ring).with_chart(self.chart);
        for _ in 0..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Componentwise equality; coordinates matched by position.
    pub fn equal(&self, o: &AffineMap) -> Result<bool, MapError> {
        if self.dim() != o.dim() || self.source_dim() != o.source_dim() {
            return Err(MapError::ShapeMismatch);
        }
        let ring = self.ring.with_constants_of(&o.ring);
        for (a, b) in self.comps.iter().zip(&o.comps) {
            if a.rename_coords(&ring)? != b.rename_coords(&ring)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_identity(&self) -> bool {
        self.source_dim() == self.dim() && self.equal(&AffineMap::identity(&self.ring)).unwrap_or(false)
    }

    pub fn jacobian_det(&self) -> Result<RationalFunction, MapError> {
        Ok(jacobian_det(&self.comps)?)
    }

    /// `None` where some denominator vanishes.
    pub fn eval(&self, point: &[Rational]) -> Result<Option<Vec<Rational>>, MapError> {
        let mut out = Vec::with_capacity(self.dim());
        for c in &self.comps {
            match c.eval(point)? {
                Some(v) => out.push(v),
                None => return Ok(None),
            }
        }
        Ok(Some(out))
    }

    pub fn is_polynomial(&self) -> bool {
        self.comps.iter().all(|c| c.is_polynomial())
    }

    /// Every component has degree at most one.
    pub fn is_affine_linear(&self) -> bool {
        self.comps.iter().all(|c| c.as_polynomial().is_some_and(|p| p.degree().unwrap_or(0) <= 1))
    }

    /// Homogenization in `x0..xn`, the chart coordinate inserted at
    /// position `chart` on both sides.
    pub fn to_projective(&self) -> Result<ProjectiveMap, MapError> {
        let pring = Ring::indexed("x", self.source_dim() + 1).with_constants_of(&self.ring);
        self.to_projective_on(&pring)
    }

    /// Same, with explicit homogeneous coordinates.
    pub fn to_projective_on(&self, pring: &Ring) -> Result<ProjectiveMap, MapError> {
        let n = self.source_dim();
        let m = self.dim();
        let c = self.chart;
        if pring.coords() != n + 1 || c > m {
            return Err(MapError::ShapeMismatch);
        }
        let pring = pring.with_constants_of(&self.ring);
        let zc = Polynomial::var(&pring, c);
        let images: Vec<RationalFunction> = (0..=n)
            .filter(|&k| k != c)
            .map(|k| RationalFunction::new(Polynomial::var(&pring, k), zc.clone()))
            .collect::<Result<_, _>>()?;
        let mut parts: Vec<RationalFunction> = Vec::with_capacity(m + 1);
        let mut it = self.comps.iter();
        for k in 0..=m {
            if k == c {
                parts.push(RationalFunction::one(&pring));
            } else {
                let r = it.next().expect("one component per coordinate");
                parts.push(r.substitute(&images)?.embed(&pring)?);
            }
        }
        let mut lcm = Polynomial::one(&pring);
        for r in &parts {
            let d = r.denominator();
            let g = lcm.gcd(d)?;
            lcm = &lcm * &d.exact_div(&g)?.expect("gcd divides");
        }
        let comps: Vec<Polynomial> = parts
            .iter()
            .map(|r| {
                let m = lcm.exact_div(r.denominator()).map(|q| q.expect("lcm is a multiple"));
                m.map(|m| r.numerator() * &m)
            })
            .collect::<Result<_, _>>()?;
        ProjectiveMap::from_components_reduced(&pring, comps)
    }

    /// Degree of the homogenized map.
    pub fn degree(&self) -> Result<u32, MapError> {
        Ok(self.to_projective()?.degree())
    }

    pub fn render(&self) -> String {
        let names = self.ring.names();
        let parts: Vec<String> = self.comps.iter().map(|c| c.render_with(names)).collect();
        alloc::format!("({})", parts.join(", "))
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffineMap({})", self.render())
    }
}

/// `xᵢ ↦ ∏ⱼ xⱼ^{mᵢⱼ}` on `x1..xn`. Invertible matrices give birational
/// maps, and `monomial_map(A·B) = monomial_map(A) ∘ monomial_map(B)`.
pub fn monomial_map(m: &IntMatrix) -> Result<AffineMap, MapError> {
    let n = m.size();
    let names: Vec<String> = (1..=n).map(|i| alloc::format!("x{i}")).collect();
    let ring = Ring::new(&names, &[] as &[&str]);
    let mut comps = Vec::with_capacity(n);
    for i in 0..n {
        let mut num = alloc::vec![0u16; n];
        let mut den = alloc::vec![0u16; n];
        for j in 0..n {
            let e = m.get(i, j);
            let mag = u16::try_from(e.unsigned_abs()).map_err(|_| MapError::Overflow)?;
            if e >= 0 {
                num[j] = mag;
            } else {
                den[j] = mag;
            }
        }
        let p = Polynomial::from_exponents(&ring, &[(&num, 1)]);
        let q = Polynomial::from_exponents(&ring, &[(&den, 1)]);
        comps.push(RationalFunction::new(p, q)?);
    }
    AffineMap::new(&ring, comps)
}
