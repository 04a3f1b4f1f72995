//! Integer-coefficient polynomials used as the working representation for
//! multiplication, exact division and gcd.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{AddAssign, SubAssign};

use hashbrown::HashMap;
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::monomial::Monomial;

/// Terms sorted in descending monomial order, coefficients nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly {
    pub nvars: usize,
    pub terms: Vec<(Monomial, BigInt)>,
}

impl IntPoly {
    pub fn zero(nvars: usize) -> IntPoly {
        IntPoly { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero(nvars);
        }
        IntPoly { nvars, terms: alloc::vec![(Monomial::one(nvars), c)] }
    }

    /// Builds from unsorted terms, merging duplicates.
    pub fn from_terms(nvars: usize, mut terms: Vec<(Monomial, BigInt)>) -> IntPoly {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, BigInt)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        IntPoly { nvars, terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    pub fn degree_in(&self, v: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<u16> {
        let mut d = alloc::vec![0u16; self.nvars];
        for (m, _) in &self.terms {
            for (di, &e) in d.iter_mut().zip(m.exponents()) {
                *di = (*di).max(e);
            }
        }
        d
    }

    /// Gcd of the coefficients, carrying the sign of the leading one.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.terms.first().is_some_and(|t| t.1.is_negative()) {
            -g
        } else {
            g
        }
    }

    pub fn scale_div(&self, c: &BigInt) -> IntPoly {
        IntPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a / c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero(self.nvars);
        }
        IntPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        if c.is_one() {
            self.clone()
        } else {
            self.scale_div(&c)
        }
    }

    /// Gcd of all monomials in the support.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let mut g = match it.next() {
            Some((m, _)) => m.clone(),
            None => return Monomial::one(self.nvars),
        };
        for (m, _) in it {
            if g.is_one() {
                break;
            }
            g = g.gcd(m);
        }
        g
    }

    pub fn div_monomial(&self, m: &Monomial) -> IntPoly {
        IntPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, c)| (t.div(m), c.clone())).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> IntPoly {
        IntPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        merge(self, other, false)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        merge(self, other, true)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero(self.nvars);
        }
        let (a, b) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        if a.terms.len() == 1 {
            let (m, c) = &a.terms[0];
            return IntPoly {
                nvars: self.nvars,
                terms: b.terms.iter().map(|(t, d)| (t.mul(m), d * c)).collect(),
            };
        }
        let bits = max_bits(a) + max_bits(b) + (usize::BITS - a.terms.len().leading_zeros()) as u64;
        if bits < 126 {
            mul_small(a, b)
        } else {
            mul_big(a, b)
        }
    }

    pub fn pow(&self, mut k: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::constant(self.nvars, BigInt::one());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `Some(q)` with `self = q * b`, or `None` if `b` does not divide `self`
    /// over the integers.
    pub fn exact_div(&self, b: &IntPoly) -> Option<IntPoly> {
        assert!(!b.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero(self.nvars));
        }
        if b.terms.len() == 1 {
            let (bm, bc) = &b.terms[0];
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !bm.divides(m) {
                    return None;
                }
                let (q, r) = c.div_rem(bc);
                if !r.is_zero() {
                    return None;
                }
                terms.push((m.div(bm), q));
            }
            return Some(IntPoly { nvars: self.nvars, terms });
        }
        let da = self.degrees();
        let db = b.degrees();
        if db.iter().zip(&da).any(|(x, y)| x > y) {
            return None;
        }
        if !b.lm().divides(self.lm()) || !b.terms.last().unwrap().0.divides(&self.terms.last().unwrap().0) {
            return None;
        }
        if let Some(res) = div_generic::<Small>(self, b) {
            return res;
        }
        div_generic::<BigInt>(self, b).expect("big division never overflows")
    }
}

fn merge(a: &IntPoly, b: &IntPoly, negate: bool) -> IntPoly {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() && j < b.terms.len() {
        let (am, ac) = &a.terms[i];
        let (bm, bc) = &b.terms[j];
        match am.cmp(bm) {
            core::cmp::Ordering::Greater => {
                out.push((am.clone(), ac.clone()));
                i += 1;
            }
            core::cmp::Ordering::Less => {
                out.push((bm.clone(), if negate { -bc } else { bc.clone() }));
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                let c = if negate { ac - bc } else { ac + bc };
                if !c.is_zero() {
                    out.push((am.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a.terms[i..].iter().cloned());
    out.extend(b.terms[j..].iter().map(|(m, c)| (m.clone(), if negate { -c } else { c.clone() })));
    IntPoly { nvars: a.nvars, terms: out }
}

fn max_bits(p: &IntPoly) -> u64 {
    p.terms.iter().map(|(_, c)| c.bits()).max().unwrap_or(0)
}

fn mul_small(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let ai: Vec<i128> = a.terms.iter().map(|(_, c)| c.to_i128().unwrap()).collect();
    let bi: Vec<i128> = b.terms.iter().map(|(_, c)| c.to_i128().unwrap()).collect();
    let mut acc: HashMap<Monomial, i128> = HashMap::with_capacity(a.terms.len() * 4 + b.terms.len());
    for ((am, _), ac) in a.terms.iter().zip(&ai) {
        for ((bm, _), bc) in b.terms.iter().zip(&bi) {
            *acc.entry(am.mul(bm)).or_insert(0) += ac * bc;
        }
    }
    let mut terms: Vec<(Monomial, BigInt)> =
        acc.into_iter().filter(|(_, c)| *c != 0).map(|(m, c)| (m, BigInt::from(c))).collect();
    terms.sort_unstable_by(|x, y| y.0.cmp(&x.0));
    IntPoly { nvars: a.nvars, terms }
}

fn mul_big(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(a.terms.len() * 4 + b.terms.len());
    for (am, ac) in &a.terms {
        for (bm, bc) in &b.terms {
            let m = am.mul(bm);
            let p = ac * bc;
            match acc.get_mut(&m) {
                Some(c) => *c += p,
                None => {
                    acc.insert(m, p);
                }
            }
        }
    }
    let mut terms: Vec<(Monomial, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    terms.sort_unstable_by(|x, y| y.0.cmp(&x.0));
    IntPoly { nvars: a.nvars, terms }
}

/// Coefficient arithmetic for division; `None` signals overflow.
trait DivCoef: Clone + Sized {
    fn from_big(c: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn is_zero_c(&self) -> bool;
    fn div_exact(&self, d: &Self) -> Option<Option<Self>>;
    fn sub_mul(&mut self, a: &Self, b: &Self) -> Option<()>;
    fn neg_mul(a: &Self, b: &Self) -> Option<Self>;
}

#[derive(Clone, Copy)]
struct Small(i128);

impl DivCoef for Small {
    fn from_big(c: &BigInt) -> Option<Self> {
        if c.bits() > 100 {
            return None;
        }
        c.to_i128().map(Small)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(self.0)
    }
    fn is_zero_c(&self) -> bool {
        self.0 == 0
    }
    fn div_exact(&self, d: &Self) -> Option<Option<Self>> {
        if self.0 % d.0 != 0 {
            Some(None)
        } else {
            Some(Some(Small(self.0 / d.0)))
        }
    }
    fn sub_mul(&mut self, a: &Self, b: &Self) -> Option<()> {
        let p = a.0.checked_mul(b.0)?;
        self.0 = self.0.checked_sub(p)?;
        if self.0.unsigned_abs() > (1u128 << 110) {
            return None;
        }
        Some(())
    }
    fn neg_mul(a: &Self, b: &Self) -> Option<Self> {
        a.0.checked_mul(b.0).and_then(|p| p.checked_neg()).map(Small)
    }
}

impl DivCoef for BigInt {
    fn from_big(c: &BigInt) -> Option<Self> {
        Some(c.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn is_zero_c(&self) -> bool {
        self.is_zero()
    }
    fn div_exact(&self, d: &Self) -> Option<Option<Self>> {
        let (q, r) = self.div_rem(d);
        Some(if r.is_zero() { Some(q) } else { None })
    }
    fn sub_mul(&mut self, a: &Self, b: &Self) -> Option<()> {
        if a.sign() == Sign::NoSign || b.sign() == Sign::NoSign {
            return Some(());
        }
        SubAssign::sub_assign(self, a * b);
        Some(())
    }
    fn neg_mul(a: &Self, b: &Self) -> Option<Self> {
        let mut p = a * b;
        p = -p;
        Some(p)
    }
}

/// Outer `None`: overflow in the coefficient type. Inner `None`: indivisible.
fn div_generic<C: DivCoef>(a: &IntPoly, b: &IntPoly) -> Option<Option<IntPoly>> {
    let mut rem: BTreeMap<Monomial, C> = BTreeMap::new();
    for (m, c) in &a.terms {
        rem.insert(m.clone(), C::from_big(c)?);
    }
    let mut bt: Vec<(Monomial, C)> = Vec::with_capacity(b.terms.len());
    for (m, c) in &b.terms {
        bt.push((m.clone(), C::from_big(c)?));
    }
    let (blm, blc) = bt[0].clone();
    let mut q: Vec<(Monomial, BigInt)> = Vec::new();
    while let Some((m, c)) = rem.pop_last() {
        if !blm.divides(&m) {
            return Some(None);
        }
        let qc = match c.div_exact(&blc)? {
            Some(qc) => qc,
            None => return Some(None),
        };
        let qm = m.div(&blm);
        for (tm, tc) in &bt[1..] {
            let key = tm.mul(&qm);
            match rem.get_mut(&key) {
                Some(r) => {
                    r.sub_mul(tc, &qc)?;
                    if r.is_zero_c() {
                        rem.remove(&key);
                    }
                }
                None => {
                    rem.insert(key, C::neg_mul(tc, &qc)?);
                }
            }
        }
        q.push((qm, qc.to_big()));
    }
    Some(Some(IntPoly { nvars: a.nvars, terms: q }))
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        *self = self.add(rhs);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(&[u16], i64)]) -> IntPoly {
        let n = terms[0].0.len();
        IntPoly::from_terms(n, terms.iter().map(|(e, c)| (Monomial::from_exponents(e), BigInt::from(*c))).collect())
    }

    #[test]
    fn difference_of_squares_divides() {
        let a = p(&[(&[2, 0], 1), (&[0, 2], -1)]);
        let b = p(&[(&[1, 0], 1), (&[0, 1], -1)]);
        let q = a.exact_div(&b).unwrap();
        assert_eq!(q, p(&[(&[1, 0], 1), (&[0, 1], 1)]));
        let c = p(&[(&[2, 0], 1), (&[0, 2], 1)]);
        assert!(c.exact_div(&b).is_none());
    }

    #[test]
    fn big_coefficients_take_the_slow_path() {
        let big: BigInt = BigInt::from(1u8) << 200usize;
        let a = IntPoly::from_terms(1, alloc::vec![(Monomial::from_exponents(&[1]), big.clone()), (Monomial::one(1), BigInt::from(3))]);
        let sq = a.mul(&a);
        assert_eq!(sq.terms.len(), 3);
        assert_eq!(sq.exact_div(&a).unwrap(), a);
    }
}
