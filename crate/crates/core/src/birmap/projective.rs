use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use super::affine::AffineMap;
use super::matrix::QMatrix;
use super::multi::{reduce_block, MultiProjectiveMap};
use super::MapError;
use crate::exactpoly::{Monomial, Polynomial, Rational, RationalFunction, Ring};

/// Rational map `ℙⁿ ⇢ ℙᵐ` given by homogeneous components of one degree.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjectiveMap(MultiProjectiveMap);

impl ProjectiveMap {
    /// Checks homogeneity; does not reduce.
    pub fn new(ring: &Ring, comps: Vec<Polynomial>) -> Result<ProjectiveMap, MapError> {
        Ok(ProjectiveMap(MultiProjectiveMap::new(ring, &[ring.coords()], vec![comps])?))
    }

    /// Identity of `ℙⁿ` in coordinates `x0..xn`.
    pub fn identity(n: usize) -> ProjectiveMap {
        ProjectiveMap::identity_on(&Ring::indexed("x", n + 1))
    }

    pub fn identity_on(ring: &Ring) -> ProjectiveMap {
        ProjectiveMap(MultiProjectiveMap::identity(ring, &[ring.coords()]).expect("nonempty ring"))
    }

    /// Linear map `[row₀·x : … : rowₙ·x]`, reduced.
    pub fn from_matrix(m: &QMatrix) -> Result<ProjectiveMap, MapError> {
        ProjectiveMap::from_matrix_on(&Ring::indexed("x", m.size()), m)
    }

    pub fn from_matrix_on(ring: &Ring, m: &QMatrix) -> Result<ProjectiveMap, MapError> {
        if m.size() != ring.coords() {
            return Err(MapError::ShapeMismatch);
        }
        if m.det().is_zero() {
            return Err(MapError::SingularMatrix);
        }
        let comps = (0..m.size())
            .map(|i| {
                Polynomial::from_terms(
                    ring,
                    (0..m.size()).map(|j| (Monomial::var(ring.len(), j), m.get(i, j).clone())),
                )
            })
            .collect();
        Ok(ProjectiveMap::new(ring, comps)?.reduce())
    }

    /// `[c₀x₀ : … : cₙxₙ]`.
    pub fn diagonal(c: &[Rational]) -> Result<ProjectiveMap, MapError> {
        if c.iter().any(|v| v.is_zero()) {
            return Err(MapError::ZeroScale);
        }
        ProjectiveMap::from_matrix(&QMatrix::diagonal(c))
    }

    pub fn as_multi(&self) -> &MultiProjectiveMap {
        &self.0
    }

    pub fn into_multi(self) -> MultiProjectiveMap {
        self.0
    }

    /// Single source and target factor required.
    pub fn from_multi(m: MultiProjectiveMap) -> Result<ProjectiveMap, MapError> {
        if m.source_blocks().len() != 1 || m.blocks().len() != 1 {
            return Err(MapError::ShapeMismatch);
        }
        Ok(ProjectiveMap(m))
    }

    pub fn ring(&self) -> &Ring {
        self.0.ring()
    }

    pub fn components(&self) -> &[Polynomial] {
        self.0.block(0)
    }

    /// `n` for a map defined on `ℙⁿ`.
    pub fn source_dim(&self) -> usize {
        self.ring().coords() - 1
    }

    pub fn target_dim(&self) -> usize {
        self.components().len() - 1
    }

    pub fn is_self_map(&self) -> bool {
        self.source_dim() == self.target_dim()
    }

    pub fn reduce(&self) -> ProjectiveMap {
        ProjectiveMap(self.0.reduce())
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &ProjectiveMap) -> Result<ProjectiveMap, MapError> {
        Ok(ProjectiveMap(self.0.compose(&g.0)?))
    }

    pub fn pow(&self, k: u32) -> Result<ProjectiveMap, MapError> {
        if !self.is_self_map() {
            return Err(MapError::NotSelfMap);
        }
        let mut acc = ProjectiveMap::identity_on(self.ring());
        for _ in 0..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    pub fn equal_up_to_scalar(&self, o: &ProjectiveMap) -> Result<bool, MapError> {
        self.0.equal_up_to_scalar(&o.0)
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    /// Common degree of the reduced components.
    pub fn degree(&self) -> u32 {
        self.reduce().0.multidegree(0)[0]
    }

    /// Degrees of `f, f², …, f^count`.
    pub fn degree_sequence(&self, count: usize) -> Result<DegreeSequence, MapError> {
        if !self.is_self_map() {
            return Err(MapError::NotSelfMap);
        }
        let f = self.reduce();
        let mut it = f.clone();
        let mut degrees = Vec::with_capacity(count);
        for k in 0..count {
            if k > 0 {
                it = f.compose(&it)?;
            }
            degrees.push(it.degree());
        }
        Ok(DegreeSequence { degrees })
    }

    /// Substitutes `x_chart = 1`; the affine coordinates keep the names of
    /// the remaining homogeneous ones.
    pub fn to_affine_chart(&self, chart: usize) -> Result<AffineMap, MapError> {
        let n = self.ring().coords();
        if chart >= n || chart > self.target_dim() {
            return Err(MapError::ShapeMismatch);
        }
        let den = &self.components()[chart];
        if den.is_zero() {
            return Err(MapError::UndefinedOnChart(chart));
        }
        let names: Vec<&str> = (0..n).filter(|&i| i != chart).map(|i| self.ring().name(i)).collect();
        let aring = Ring::new(&names, self.ring().constant_names());
        let images: Vec<Polynomial> = (0..n)
            .map(|i| match i.cmp(&chart) {
                core::cmp::Ordering::Less => Polynomial::var(&aring, i),
                core::cmp::Ordering::Equal => Polynomial::one(&aring),
                core::cmp::Ordering::Greater => Polynomial::var(&aring, i - 1),
            })
            .collect();
        let d = den.substitute(&images)?;
        let comps = self
            .components()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != chart)
            .map(|(_, p)| RationalFunction::new(p.substitute(&images)?, d.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        AffineMap::new_in_chart(&aring, comps, chart)
    }

    /// `H ∘ f`, whether `H` divides it, and the multiplicity of each
    /// candidate divisor in the cofactor. The quotient is only formed for
    /// self-maps.
    pub fn pullback_hypersurface(&self, h: &Polynomial, divisors: &[Polynomial]) -> Result<Pullback, MapError> {
        if h.is_zero() {
            return Err(MapError::ZeroHypersurface);
        }
        if h.homogeneous_degree()?.is_none() {
            return Err(MapError::NotHomogeneous(0));
        }
        let pulled = self.0.pullback(h)?;
        let ring = pulled.ring().clone();
        let quotient = if self.is_self_map() && !pulled.is_zero() {
            let hs = h.rename_coords(&ring)?;
            pulled.exact_div(&hs)?
        } else {
            None
        };
        let mut multiplicities = Vec::with_capacity(divisors.len());
        let mut residual = quotient.clone();
        if let Some(r) = residual.as_mut() {
            for d in divisors {
                let d = d.rename_coords(&ring)?;
                let mut k = 0;
                while !d.is_constant() {
                    match r.exact_div(&d)? {
                        Some(q) => {
                            *r = q;
                            k += 1;
                        }
                        None => break,
                    }
                }
                multiplicities.push(k);
            }
        }
        Ok(Pullback { pulled, quotient, multiplicities, residual })
    }

    /// Restricts to `x_hyperplane = 0` and checks that the listed target
    /// components vanish there while the restriction stays defined.
    pub fn image_in_subspace(&self, hyperplane: usize, vanishing: &[usize]) -> bool {
        if hyperplane >= self.ring().coords() || vanishing.iter().any(|&j| j > self.target_dim()) {
            return false;
        }
        let restricted: Vec<Polynomial> =
            self.components().iter().map(|p| p.specialize(hyperplane, &Rational::zero())).collect();
        if restricted.iter().all(|p| p.is_zero()) {
            return false;
        }
        !vanishing.is_empty() && vanishing.iter().all(|&j| restricted[j].is_zero())
    }

    /// Value at a point of the full ring; `None` at indeterminacy.
    pub fn eval(&self, point: &[Rational]) -> Result<Option<Vec<Rational>>, MapError> {
        Ok(self.0.eval(point)?.map(|mut v| v.remove(0)))
    }

    pub fn rename(&self, ring: &Ring) -> Result<ProjectiveMap, MapError> {
        Ok(ProjectiveMap(self.0.rename(ring)?))
    }

    /// Same map with each component replaced, then reduced.
    pub fn from_components_reduced(ring: &Ring, comps: Vec<Polynomial>) -> Result<ProjectiveMap, MapError> {
        let m = ProjectiveMap::new(ring, comps)?;
        let b = reduce_block(m.components(), &[ring.coords()]);
        Ok(ProjectiveMap(MultiProjectiveMap::from_parts(ring.clone(), vec![ring.coords()], vec![b])))
    }

    pub fn render(&self) -> String {
        self.0.render()
    }
}

impl fmt::Display for ProjectiveMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for ProjectiveMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjectiveMap({})", self.render())
    }
}

impl From<ProjectiveMap> for MultiProjectiveMap {
    fn from(p: ProjectiveMap) -> MultiProjectiveMap {
        p.0
    }
}

/// Result of pulling a hypersurface back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pullback {
    /// `H ∘ f`.
    pub pulled: Polynomial,
    /// `(H ∘ f) / H` when `H` divides it.
    pub quotient: Option<Polynomial>,
    /// Multiplicity of each candidate divisor in the quotient.
    pub multiplicities: Vec<u32>,
    /// The quotient after removing the candidate divisors.
    pub residual: Option<Polynomial>,
}

impl Pullback {
    pub fn is_invariant(&self) -> bool {
        self.quotient.is_some()
    }
}

/// Degrees of the reduced iterates `f, f², …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence {
    pub degrees: Vec<u32>,
}

impl DegreeSequence {
    pub fn first_differences(&self) -> Vec<i64> {
        self.degrees.windows(2).map(|w| w[1] as i64 - w[0] as i64).collect()
    }

    pub fn is_bounded_by(&self, bound: u32) -> bool {
        self.degrees.iter().all(|&d| d <= bound)
    }
}
