use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

/// Variable names of a polynomial ring.
///
/// The first `coords` variables are coordinates. The remaining ones are
/// symbolic constants: they count as coefficients for degree and
/// homogeneity, and are matched by name when rings are joined.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

#[derive(PartialEq, Eq, Hash)]
struct RingData {
    names: Vec<String>,
    coords: usize,
}

impl Ring {
    pub fn new<S: AsRef<str>, T: AsRef<str>>(coords: &[S], constants: &[T]) -> Ring {
        let mut names: Vec<String> = coords.iter().map(|s| s.as_ref().to_string()).collect();
        names.extend(constants.iter().map(|s| s.as_ref().to_string()));
        Ring(Arc::new(RingData { names, coords: coords.len() }))
    }

    /// `prefix0 .. prefix{n}`, no constants.
    pub fn indexed(prefix: &str, count: usize) -> Ring {
        let names: Vec<String> = (0..count).map(|i| alloc::format!("{prefix}{i}")).collect();
        Ring::new(&names, &[] as &[&str])
    }

    /// A ring whose variables are all symbolic constants.
    pub fn constants<S: AsRef<str>>(names: &[S]) -> Ring {
        Ring::new(&[] as &[&str], names)
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.names.is_empty()
    }

    pub fn coords(&self) -> usize {
        self.0.coords
    }

    pub fn constant_count(&self) -> usize {
        self.0.names.len() - self.0.coords
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn coord_names(&self) -> &[String] {
        &self.0.names[..self.0.coords]
    }

    pub fn constant_names(&self) -> &[String] {
        &self.0.names[self.0.coords..]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    pub fn is_constant(&self, i: usize) -> bool {
        i >= self.0.coords
    }

    /// Same coordinates as `self`, constants of `self` followed by the new
    /// constants of `other`.
    pub fn with_constants_of(&self, other: &Ring) -> Ring {
        let extra: Vec<&String> = other
            .constant_names()
            .iter()
            .filter(|n| !self.constant_names().contains(n))
            .collect();
        if extra.is_empty() {
            return self.clone();
        }
        let mut consts: Vec<String> = self.constant_names().to_vec();
        consts.extend(extra.into_iter().cloned());
        Ring::new(self.coord_names(), &consts)
    }

    /// Different coordinate names, same constants.
    pub fn with_coords<S: AsRef<str>>(&self, coords: &[S]) -> Ring {
        let coords: Vec<String> = coords.iter().map(|s| s.as_ref().to_string()).collect();
        Ring::new(&coords, self.constant_names())
    }

    /// Drops the constants that are not in `keep`.
    pub fn restrict_constants(&self, keep: &[bool]) -> Ring {
        let consts: Vec<String> = self
            .constant_names()
            .iter()
            .zip(keep)
            .filter(|(_, k)| **k)
            .map(|(n, _)| n.clone())
            .collect();
        Ring::new(self.coord_names(), &consts)
    }

    pub fn same_coords(&self, other: &Ring) -> bool {
        self.coord_names() == other.coord_names()
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({:?}", self.coord_names())?;
        if self.constant_count() > 0 {
            write!(f, "; {:?}", self.constant_names())?;
        }
        write!(f, ")")
    }
}
