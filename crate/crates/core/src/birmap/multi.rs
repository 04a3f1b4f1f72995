use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use super::{space_name, MapError};
use crate::exactpoly::{Polynomial, Rational, Ring};

/// Rational map `ℙ^{a₀} × … ⇢ ℙ^{b₀} × …`, one tuple of components per
/// target factor.
///
/// The ring's coordinates are the concatenated source factors; trailing
/// ring variables are symbolic constants. Within a target factor all
/// components share one multidegree.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiProjectiveMap {
    ring: Ring,
    source: Vec<usize>,
    blocks: Vec<Vec<Polynomial>>,
}

impl MultiProjectiveMap {
    /// Checks shapes and homogeneity; does not reduce.
    pub fn new(ring: &Ring, source: &[usize], blocks: Vec<Vec<Polynomial>>) -> Result<MultiProjectiveMap, MapError> {
        if source.iter().sum::<usize>() != ring.coords() || source.contains(&0) {
            return Err(MapError::ShapeMismatch);
        }
        let mut out: Vec<Vec<Polynomial>> = Vec::with_capacity(blocks.len());
        let mut index = 0;
        for block in blocks {
            if block.is_empty() {
                return Err(MapError::ShapeMismatch);
            }
            let mut common: Option<Vec<u32>> = None;
            let mut converted = Vec::with_capacity(block.len());
            for p in block {
                let p = p.embed(ring)?;
                if !p.is_zero() {
                    let d = multidegree(&p, source).ok_or(MapError::NotHomogeneous(index))?;
                    match &common {
                        None => common = Some(d),
                        Some(c) if *c == d => {}
                        Some(_) => return Err(MapError::NotHomogeneous(index)),
                    }
                }
                converted.push(p);
                index += 1;
            }
            if common.is_none() {
                return Err(MapError::ZeroMap);
            }
            out.push(converted);
        }
        if out.is_empty() {
            return Err(MapError::ShapeMismatch);
        }
        Ok(MultiProjectiveMap { ring: ring.clone(), source: source.to_vec(), blocks: out })
    }

    /// Identity of `ℙ^{b₀-1} × …` on the coordinates of `ring`.
    pub fn identity(ring: &Ring, source: &[usize]) -> Result<MultiProjectiveMap, MapError> {
        let mut blocks = Vec::new();
        let mut k = 0;
        for &b in source {
            blocks.push((k..k + b).map(|i| Polynomial::var(ring, i)).collect());
            k += b;
        }
        MultiProjectiveMap::new(ring, source, blocks)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Number of homogeneous coordinates of each source factor.
    pub fn source_blocks(&self) -> &[usize] {
        &self.source
    }

    /// Number of homogeneous coordinates of each target factor.
    pub fn target_blocks(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    pub fn blocks(&self) -> &[Vec<Polynomial>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[Polynomial] {
        &self.blocks[i]
    }

    /// Degrees of target factor `i` in each source factor.
    pub fn multidegree(&self, i: usize) -> Vec<u32> {
        let p = self.blocks[i].iter().find(|p| !p.is_zero()).expect("nonzero block");
        multidegree(p, &self.source).expect("validated")
    }

    /// Divides each target factor by the gcd of its components and fixes
    /// the remaining scalar.
    pub fn reduce(&self) -> MultiProjectiveMap {
        let blocks = self.blocks.iter().map(|b| reduce_block(b, &self.source)).collect();
        MultiProjectiveMap { ring: self.ring.clone(), source: self.source.clone(), blocks }
    }

    pub fn is_reduced(&self) -> bool {
        *self == self.reduce()
    }

    /// `self ∘ g`, reduced.
    pub fn compose(&self, g: &MultiProjectiveMap) -> Result<MultiProjectiveMap, MapError> {
        let gt = g.target_blocks();
        if self.source != gt {
            return Err(MapError::SpaceMismatch { source_space: space_name(&self.source), target_space: space_name(&gt) });
        }
        let images: Vec<Polynomial> = g.blocks.iter().flatten().cloned().collect();
        let ring = g.ring.with_constants_of(&self.ring);
        let images: Vec<Polynomial> = images.iter().map(|p| p.embed(&ring)).collect::<Result<_, _>>()?;
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for b in &self.blocks {
            let mut out = Vec::with_capacity(b.len());
            for p in b {
                out.push(p.substitute(&images)?.embed(&ring)?);
            }
            blocks.push(reduce_block(&out, &g.source));
        }
        Ok(MultiProjectiveMap { ring, source: g.source.clone(), blocks })
    }

    /// `fᵢ gⱼ = fⱼ gᵢ` inside every target factor.
    pub fn equal_up_to_scalar(&self, o: &MultiProjectiveMap) -> Result<bool, MapError> {
        if self.source != o.source || self.target_blocks() != o.target_blocks() {
            return Err(MapError::ShapeMismatch);
        }
        let ring = self.ring.with_constants_of(&o.ring);
        for (a, b) in self.blocks.iter().zip(&o.blocks) {
            let a: Vec<Polynomial> = a.iter().map(|p| p.rename_coords(&ring)).collect::<Result<_, _>>()?;
            let b: Vec<Polynomial> = b.iter().map(|p| p.rename_coords(&ring)).collect::<Result<_, _>>()?;
            if !proportional(&a, &b) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_identity(&self) -> bool {
        if self.source != self.target_blocks() {
            return false;
        }
        let id = MultiProjectiveMap::identity(&self.ring, &self.source).expect("valid shape");
        self.equal_up_to_scalar(&id).unwrap_or(false)
    }

    /// Composition `h ∘ self` for a polynomial `h` in the concatenated
    /// target coordinates.
    pub fn pullback(&self, h: &Polynomial) -> Result<Polynomial, MapError> {
        let images: Vec<Polynomial> = self.blocks.iter().flatten().cloned().collect();
        Ok(h.substitute(&images)?)
    }

    /// Values at a point that assigns every ring variable (constants
    /// included); `None` when some target factor is undefined there.
    pub fn eval(&self, point: &[Rational]) -> Result<Option<Vec<Vec<Rational>>>, MapError> {
        let mut out = Vec::with_capacity(self.blocks.len());
        for b in &self.blocks {
            let v: Vec<Rational> = b.iter().map(|p| p.eval(point)).collect::<Result<_, _>>()?;
            if v.iter().all(|x| x.is_zero()) {
                return Ok(None);
            }
            out.push(v);
        }
        Ok(Some(out))
    }

    /// Coordinates renamed by position, constants matched by name.
    pub fn rename(&self, ring: &Ring) -> Result<MultiProjectiveMap, MapError> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|p| p.rename_coords(ring)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MultiProjectiveMap { ring: ring.clone(), source: self.source.clone(), blocks })
    }

    /// Reassembles without checks; the caller keeps the invariants.
    pub(crate) fn from_parts(ring: Ring, source: Vec<usize>, blocks: Vec<Vec<Polynomial>>) -> MultiProjectiveMap {
        MultiProjectiveMap { ring, source, blocks }
    }

    pub fn render(&self) -> String {
        let names = self.ring.names();
        let parts: Vec<String> = self.blocks.iter().map(|b| render_block(b, names)).collect();
        if parts.len() == 1 {
            parts.into_iter().next().unwrap()
        } else {
            alloc::format!("({})", parts.join(", "))
        }
    }
}

pub(crate) fn render_block(b: &[Polynomial], names: &[String]) -> String {
    let comps: Vec<String> = b.iter().map(|p| p.render_with(names)).collect();
    alloc::format!("[{}]", comps.join(" : "))
}

impl fmt::Display for MultiProjectiveMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for MultiProjectiveMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiProjectiveMap({})", self.render())
    }
}

fn multidegree(p: &Polynomial, source: &[usize]) -> Option<Vec<u32>> {
    let mut out = Vec::with_capacity(source.len());
    let mut k = 0;
    for &b in source {
        out.push(p.block_degree(k..k + b)?);
        k += b;
    }
    Some(out)
}

/// Common factor removed, scalar fixed.
pub(crate) fn reduce_block(b: &[Polynomial], source: &[usize]) -> Vec<Polynomial> {
    Polynomial::reduce_tuple(b, source).expect("block has a nonzero component")
}

/// `a` and `b` agree up to a nonzero scalar (a rational function).
pub(crate) fn proportional(a: &[Polynomial], b: &[Polynomial]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let Some(i) = a.iter().position(|p| !p.is_zero()) else {
        return b.iter().all(|p| p.is_zero());
    };
    if b[i].is_zero() {
        return false;
    }
    if Polynomial::normalize_tuple(a) == Polynomial::normalize_tuple(b) {
        return true;
    }
    (0..a.len()).all(|j| j == i || &a[i] * &b[j] == &a[j] * &b[i])
}
