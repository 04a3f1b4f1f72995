use core::cmp::Ordering;
use core::hash::{Hash, Hasher};
use smallvec::SmallVec;

/// Exponent vector. Ordered by total degree, ties broken by comparing
/// exponents starting from the last variable.
#[derive(Clone, Debug)]
pub struct Monomial {
    exps: SmallVec<[u16; 8]>,
    deg: u32,
}

impl Monomial {
    pub fn one(len: usize) -> Monomial {
        Monomial { exps: SmallVec::from_elem(0, len), deg: 0 }
    }

    pub fn from_exponents(exps: &[u16]) -> Monomial {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps: SmallVec::from_slice(exps), deg }
    }

    pub fn var(len: usize, i: usize) -> Monomial {
        let mut m = Monomial::one(len);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    /// Degree in the first `coords` variables.
    pub fn partial_degree(&self, coords: usize) -> u32 {
        self.exps[..coords].iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, deg: self.deg + other.deg }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect();
        Monomial { exps, deg: self.deg - other.deg }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 8]> =
            self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let exps = self.exps.iter().map(|&e| e * k as u16).collect();
        Monomial { exps, deg: self.deg * k }
    }

    pub fn set_exponent(&mut self, i: usize, e: u16) {
        self.deg = self.deg - self.exps[i] as u32 + e as u32;
        self.exps[i] = e;
    }

    /// Exponents rearranged: position `j` of the result takes exponent
    /// `src[j]` of `self` (or zero for `None`).
    pub fn remap(&self, src: &[Option<usize>]) -> Monomial {
        let exps: SmallVec<[u16; 8]> =
            src.iter().map(|s| s.map_or(0, |i| self.exps[i])).collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Monomial) -> bool {
        self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| {
            for (a, b) in self.exps.iter().rev().zip(other.exps.iter().rev()) {
                if a != b {
                    return a.cmp(b);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_breaks_ties_from_last_variable() {
        let a = Monomial::from_exponents(&[0, 0, 0, 1, 1, 1]);
        let b = Monomial::from_exponents(&[1, 0, 0, 2, 0, 0]);
        assert!(a > b);
        let c = Monomial::from_exponents(&[0, 0, 1, 0, 0, 1]);
        let d = Monomial::from_exponents(&[0, 0, 0, 1, 1, 0]);
        assert!(c > d);
        assert!(Monomial::from_exponents(&[3, 0]) < Monomial::from_exponents(&[1, 3]));
    }

    #[test]
    fn divisibility() {
        let a = Monomial::from_exponents(&[1, 2, 0]);
        let b = Monomial::from_exponents(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(b.div(&a), Monomial::from_exponents(&[1, 0, 1]));
        assert_eq!(a.gcd(&Monomial::from_exponents(&[0, 5, 3])), Monomial::from_exponents(&[0, 2, 0]));
    }
}
