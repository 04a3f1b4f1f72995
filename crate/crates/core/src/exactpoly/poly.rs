use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gcd;
use super::interp;
use super::intpoly::IntPoly;
use super::monomial::Monomial;
use super::ring::Ring;
use super::{PolyError, Rational};

/// Exact multivariate polynomial over the rationals.
///
/// Stored as an integer polynomial over a positive common denominator whose
/// gcd with the integer content is one.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    num: IntPoly,
    den: BigInt,
}

impl Polynomial {
    pub(crate) fn from_int(ring: &Ring, num: IntPoly, den: BigInt) -> Polynomial {
        debug_assert_eq!(num.nvars, ring.len());
        let mut p = Polynomial { ring: ring.clone(), num, den };
        p.fix();
        p
    }

    fn fix(&mut self) {
        if self.num.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            self.num = self.num.neg();
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for (_, c) in &self.num.terms {
            g = g.gcd(c);
            if g.is_one() {
                return;
            }
        }
        self.num = self.num.scale_div(&g);
        self.den = &self.den / &g;
    }

    pub(crate) fn int_num(&self) -> &IntPoly {
        &self.num
    }

    pub(crate) fn int_den(&self) -> &BigInt {
        &self.den
    }

    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial { ring: ring.clone(), num: IntPoly::zero(ring.len()), den: BigInt::one() }
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Polynomial::integer(ring, 1)
    }

    pub fn integer(ring: &Ring, c: i64) -> Polynomial {
        Polynomial::constant(ring, Rational::from_integer(BigInt::from(c)))
    }

    pub fn constant(ring: &Ring, c: Rational) -> Polynomial {
        let (n, d) = c.into_raw();
        Polynomial::from_int(ring, IntPoly::constant(ring.len(), n), d)
    }

    /// The `i`-th variable. Panics when out of range.
    pub fn var(ring: &Ring, i: usize) -> Polynomial {
        assert!(i < ring.len(), "variable index {i} out of range");
        Polynomial {
            ring: ring.clone(),
            num: IntPoly { nvars: ring.len(), terms: vec![(Monomial::var(ring.len(), i), BigInt::one())] },
            den: BigInt::one(),
        }
    }

    pub fn named(ring: &Ring, name: &str) -> Result<Polynomial, PolyError> {
        ring.index_of(name)
            .map(|i| Polynomial::var(ring, i))
            .ok_or_else(|| PolyError::UnknownVariable(name.into()))
    }

    pub fn from_terms<I>(ring: &Ring, terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let terms: Vec<(Monomial, Rational)> = terms.into_iter().filter(|t| !t.1.is_zero()).collect();
        let mut den = BigInt::one();
        for (m, c) in &terms {
            assert_eq!(m.len(), ring.len(), "monomial length differs from ring");
            den = den.lcm(c.denom());
        }
        let int_terms = terms
            .into_iter()
            .map(|(m, c)| {
                let f = &den / c.denom();
                (m, c.numer() * f)
            })
            .collect();
        Polynomial::from_int(ring, IntPoly::from_terms(ring.len(), int_terms), den)
    }

    /// Integer terms from exponent slices; handy for literals.
    pub fn from_exponents(ring: &Ring, terms: &[(&[u16], i64)]) -> Polynomial {
        let t = terms
            .iter()
            .map(|(e, c)| (Monomial::from_exponents(e), BigInt::from(*c)))
            .collect();
        Polynomial::from_int(ring, IntPoly::from_terms(ring.len(), t), BigInt::one())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Terms in descending order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Rational)> + '_ {
        self.num.terms.iter().map(move |(m, c)| (m, Rational::new(c.clone(), self.den.clone())))
    }

    pub fn len(&self) -> usize {
        self.num.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.terms.len() == 1 && self.num.terms[0].0.is_one() && self.num.terms[0].1.is_one()
    }

    /// True for constants in the strict sense: no variables at all.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant()
    }

    /// True when no coordinate variable occurs (symbolic constants allowed).
    pub fn is_coordinate_free(&self) -> bool {
        let k = self.ring.coords();
        self.num.terms.iter().all(|(m, _)| m.partial_degree(k) == 0)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        self.is_constant().then(|| Rational::new(self.num.terms[0].1.clone(), self.den.clone()))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.num.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<Rational> {
        self.num.terms.first().map(|t| Rational::new(t.1.clone(), self.den.clone()))
    }

    /// Maximum degree in the coordinate variables.
    pub fn degree(&self) -> Option<u32> {
        let k = self.ring.coords();
        self.num.terms.iter().map(|(m, _)| m.partial_degree(k)).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.num.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, i: usize) -> u16 {
        self.num.degree_in(i)
    }

    /// Common coordinate degree of all terms, `None` if they differ.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let k = self.ring.coords();
        let d = self.num.terms[0].0.partial_degree(k);
        Ok(self.num.terms.iter().all(|(m, _)| m.partial_degree(k) == d).then_some(d))
    }

    /// Degree in the coordinates with indices in `range`, if homogeneous there.
    pub fn block_degree(&self, range: core::ops::Range<usize>) -> Option<u32> {
        let deg = |m: &Monomial| m.exponents()[range.clone()].iter().map(|&e| e as u32).sum::<u32>();
        let d = deg(&self.num.terms.first()?.0);
        self.num.terms.iter().all(|(m, _)| deg(m) == d).then_some(d)
    }

    pub fn uses_variable(&self, i: usize) -> bool {
        self.num.terms.iter().any(|(m, _)| m.exponent(i) > 0)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        if self.den == other.den {
            return Ok(Polynomial::from_int(&self.ring, self.num.add(&other.num), self.den.clone()));
        }
        let num = self.num.scale(&other.den).add(&other.num.scale(&self.den));
        Ok(Polynomial::from_int(&self.ring, num, &self.den * &other.den))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        Ok(Polynomial::from_int(&self.ring, self.num.mul(&other.num), &self.den * &other.den))
    }

    fn neg_ref(&self) -> Polynomial {
        Polynomial { ring: self.ring.clone(), num: self.num.neg(), den: self.den.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::from_int(&self.ring, self.num.scale(c.numer()), &self.den * c.denom())
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        Polynomial::from_int(&self.ring, self.num.pow(k), num_traits::pow(self.den.clone(), k as usize))
    }

    /// `Ok(Some(q))` when `self = b * q`, `Ok(None)` when `b` does not divide.
    pub fn exact_div(&self, b: &Polynomial) -> Result<Option<Polynomial>, PolyError> {
        self.check_ring(b)?;
        if b.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        // Over Q divisibility only depends on the primitive part of b.
        let bc = b.num.content();
        let bp = b.num.scale_div(&bc);
        Ok(self.num.exact_div(&bp).map(|q| {
            let c = Rational::new(b.den.clone(), bc);
            Polynomial::from_int(&self.ring, q, self.den.clone()).scale(&c)
        }))
    }

    /// Greatest common divisor, integer-primitive with positive leading coefficient.
    pub fn gcd(&self, b: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(b)?;
        if self.is_zero() && b.is_zero() {
            return Err(PolyError::UndefinedGcd);
        }
        Ok(Polynomial::from_int(&self.ring, gcd::gcd(&self.num, &b.num), BigInt::one()))
    }

    /// Gcd of several polynomials of one ring, plus `p / g` for each input.
    pub fn gcd_many(ps: &[Polynomial]) -> Result<(Polynomial, Vec<Polynomial>), PolyError> {
        let ring = match ps.first() {
            Some(p) => p.ring.clone(),
            None => return Err(PolyError::UndefinedGcd),
        };
        if ps.iter().any(|p| p.ring != ring) {
            return Err(PolyError::RingMismatch);
        }
        if ps.iter().all(|p| p.is_zero()) {
            return Err(PolyError::UndefinedGcd);
        }
        let nums: Vec<IntPoly> = ps.iter().map(|p| p.num.clone()).collect();
        let (g, qs) = gcd::gcd_many(&nums);
        let quotients = qs.into_iter().zip(ps).map(|(q, p)| Polynomial::from_int(&ring, q, p.den.clone())).collect();
        Ok((Polynomial::from_int(&ring, g, BigInt::one()), quotients))
    }

    /// A projective tuple divided by the gcd of its components and
    /// normalized; `blocks` are the sizes of the coordinate groups in which
    /// the components are homogeneous, the remaining variables are free.
    pub fn reduce_tuple(ps: &[Polynomial], blocks: &[usize]) -> Result<Vec<Polynomial>, PolyError> {
        let ring = match ps.first() {
            Some(p) => p.ring.clone(),
            None => return Err(PolyError::UndefinedGcd),
        };
        if ps.iter().any(|p| p.ring != ring) {
            return Err(PolyError::RingMismatch);
        }
        if ps.iter().all(|p| p.is_zero()) {
            return Err(PolyError::UndefinedGcd);
        }
        let den = ps.iter().fold(BigInt::one(), |d, p| d.lcm(&p.den));
        let nums: Vec<IntPoly> = ps.iter().map(|p| p.num.scale(&(&den / &p.den))).collect();
        let terms: usize = nums.iter().map(|n| n.terms.len()).sum();
        let covered: usize = blocks.iter().sum();
        let fast = if terms > INTERP_THRESHOLD && covered <= ring.len() {
            let mut groups = Vec::with_capacity(blocks.len());
            let mut start = 0;
            for &b in blocks {
                groups.push((start, start + b));
                start += b;
            }
            interp::reduce_tuple(&nums, &groups)
        } else {
            None
        };
        let qs = match fast {
            Some(qs) => qs,
            None => gcd::gcd_many(&nums).1,
        };
        let out: Vec<Polynomial> = qs.into_iter().map(|q| Polynomial::from_int(&ring, q, BigInt::one())).collect();
        Ok(Polynomial::normalize_tuple(&out))
    }

    /// Rescales a tuple by one rational so that all coefficients are
    /// coprime integers and the first nonzero entry has positive leading
    /// coefficient.
    pub fn normalize_tuple(ps: &[Polynomial]) -> Vec<Polynomial> {
        let den = ps.iter().fold(BigInt::one(), |d, p| d.lcm(&p.den));
        let scaled: Vec<IntPoly> = ps.iter().map(|p| p.num.scale(&(&den / &p.den))).collect();
        let mut content = BigInt::zero();
        for n in &scaled {
            for (_, c) in &n.terms {
                content = content.gcd(c);
            }
        }
        if content.is_zero() {
            return ps.to_vec();
        }
        if scaled.iter().find(|n| !n.is_zero()).is_some_and(|n| n.lc().is_negative()) {
            content = -content;
        }
        scaled
            .into_iter()
            .zip(ps)
            .map(|(n, p)| Polynomial { ring: p.ring.clone(), num: n.scale_div(&content), den: BigInt::one() })
            .collect()
    }

    /// Same oracle computation through the remainder-sequence algorithm.
    pub fn gcd_prs(&self, b: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(b)?;
        if self.is_zero() && b.is_zero() {
            return Err(PolyError::UndefinedGcd);
        }
        Ok(Polynomial::from_int(&self.ring, gcd::gcd_prs(&self.num, &b.num), BigInt::one()))
    }

    /// `(c, p)` with `self = c * p`, `p` integer-primitive with positive
    /// leading coefficient. Zero maps to `(0, 0)`.
    pub fn primitive_part(&self) -> (Rational, Polynomial) {
        if self.is_zero() {
            return (Rational::zero(), self.clone());
        }
        let c = self.num.content();
        let p = Polynomial { ring: self.ring.clone(), num: self.num.scale_div(&c), den: BigInt::one() };
        (Rational::new(c, self.den.clone()), p)
    }

    pub fn normalized(&self) -> Polynomial {
        self.primitive_part().1
    }

    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial, PolyError> {
        if i >= self.ring.len() {
            return Err(PolyError::IndexOutOfRange { index: i, len: self.ring.len() });
        }
        let terms = self
            .num
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(i) > 0)
            .map(|(m, c)| {
                let e = m.exponent(i);
                let mut m = m.clone();
                m.set_exponent(i, e - 1);
                (m, c * BigInt::from(e))
            })
            .collect();
        Ok(Polynomial::from_int(&self.ring, IntPoly::from_terms(self.ring.len(), terms), self.den.clone()))
    }

    /// Replaces each coordinate variable by the matching image. Constants
    /// are carried over by name into the images' ring (extended if needed).
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        let k = self.ring.coords();
        if images.len() != k {
            return Err(PolyError::ArityMismatch { expected: k, found: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.ring.with_constants_of(&self.ring),
            None => self.ring.clone(),
        };
        let mut imgs: Vec<(IntPoly, BigInt)> = Vec::with_capacity(self.ring.len());
        for p in images {
            let q = p.embed(&target)?;
            imgs.push((q.num, q.den));
        }
        for name in self.ring.constant_names() {
            let q = Polynomial::named(&target, name)?;
            imgs.push((q.num, q.den));
        }
        // Fold image denominators into the coefficients of self.
        let mut scaled = self.num.clone();
        let mut den = self.den.clone();
        if imgs.iter().any(|(_, d)| !d.is_one()) {
            let maxe: Vec<u16> = self.num.degrees();
            let mut total = BigInt::one();
            for (i, &e) in maxe.iter().enumerate() {
                total *= num_traits::pow(imgs[i].1.clone(), e as usize);
            }
            for (m, c) in &mut scaled.terms {
                let mut f = total.clone();
                for (i, &e) in m.exponents().iter().enumerate() {
                    if e > 0 {
                        f /= num_traits::pow(imgs[i].1.clone(), e as usize);
                    }
                }
                *c *= f;
            }
            den *= total;
        }
        let nums: Vec<IntPoly> = imgs.into_iter().map(|(n, _)| n).collect();
        let out = substitute_int(&scaled, target.len(), false, &mut |i, e| nums[i].pow(e as u32));
        Ok(Polynomial::from_int(&target, out, den))
    }

    /// Evaluation at a point giving a value to every variable of the ring.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.ring.len() {
            return Err(PolyError::ArityMismatch { expected: self.ring.len(), found: point.len() });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.num.terms {
            let mut t = Rational::from_integer(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[i].clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc / Rational::from_integer(self.den.clone()))
    }

    /// Re-expresses `self` in `target`, matching every variable by name.
    pub fn embed(&self, target: &Ring) -> Result<Polynomial, PolyError> {
        if &self.ring == target {
            return Ok(self.clone());
        }
        let mut src: Vec<Option<usize>> = vec![None; target.len()];
        for (i, name) in self.ring.names().iter().enumerate() {
            if !self.uses_variable(i) {
                continue;
            }
            let j = target.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.clone()))?;
            src[j] = Some(i);
        }
        Ok(self.remap(target, &src))
    }

    /// Coordinates matched by position, constants by name.
    pub fn rename_coords(&self, target: &Ring) -> Result<Polynomial, PolyError> {
        if self.ring.coords() != target.coords() {
            return Err(PolyError::ArityMismatch { expected: target.coords(), found: self.ring.coords() });
        }
        let mut src: Vec<Option<usize>> = vec![None; target.len()];
        for (i, s) in src.iter_mut().enumerate().take(target.coords()) {
            *s = Some(i);
        }
        for (i, name) in self.ring.constant_names().iter().enumerate() {
            let i = i + self.ring.coords();
            if !self.uses_variable(i) {
                continue;
            }
            let j = target.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.clone()))?;
            src[j] = Some(i);
        }
        Ok(self.remap(target, &src))
    }

    fn remap(&self, target: &Ring, src: &[Option<usize>]) -> Polynomial {
        let terms = self.num.terms.iter().map(|(m, c)| (m.remap(src), c.clone())).collect();
        Polynomial::from_int(target, IntPoly::from_terms(target.len(), terms), self.den.clone())
    }

    /// Substitutes `value` for variable `i`, leaving the ring unchanged.
    pub fn specialize(&self, i: usize, value: &Rational) -> Polynomial {
        let mut terms = Vec::with_capacity(self.num.terms.len());
        let mut den = self.den.clone();
        let e_max = self.num.degree_in(i);
        den *= num_traits::pow(value.denom().clone(), e_max as usize);
        for (m, c) in &self.num.terms {
            let e = m.exponent(i) as usize;
            let f = num_traits::pow(value.numer().clone(), e)
                * num_traits::pow(value.denom().clone(), e_max as usize - e);
            let mut m = m.clone();
            m.set_exponent(i, 0);
            terms.push((m, c * f));
        }
        Polynomial::from_int(&self.ring, IntPoly::from_terms(self.ring.len(), terms), den)
    }

    /// Renders with the given variable names instead of the ring's.
    pub fn render_with(&self, names: &[String]) -> String {
        let mut s = String::new();
        if self.is_zero() {
            s.push('0');
            return s;
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = render_monomial(m, names);
            if mono.is_empty() {
                s.push_str(&alloc::format!("{a}"));
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&alloc::format!("{a}*{mono}"));
            }
        }
        s
    }
}

fn render_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(alloc::format!("{}^{}", names[i], e)),
        }
    }
    parts.join("*")
}

/// Evaluates `p` at polynomial images supplied through `power(i, e)`, which
/// returns image `i` raised to `e` (or any factor of the same shape).
/// With `homogenize`, exponent zero also gets a factor `power(i, 0)` for
/// every variable that occurs in `p`.
/// Below this many terms a gcd is cheaper than interpolation.
const INTERP_THRESHOLD: usize = 600;

pub(crate) fn substitute_int(
    p: &IntPoly,
    nvars_out: usize,
    homogenize: bool,
    power: &mut dyn FnMut(usize, u16) -> IntPoly,
) -> IntPoly {
    if p.is_zero() {
        return IntPoly::zero(nvars_out);
    }
    let mut table: hashbrown::HashMap<(usize, u16), IntPoly> = hashbrown::HashMap::new();
    for (m, _) in &p.terms {
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 && !table.contains_key(&(i, e)) {
                table.insert((i, e), power(i, e));
                if homogenize && !table.contains_key(&(i, 0)) {
                    table.insert((i, 0), power(i, 0));
                }
            }
        }
    }
    let terms: Vec<&(Monomial, BigInt)> = p.terms.iter().collect();
    subst_rec(&terms, p.nvars, nvars_out, &table)
}

fn subst_rec(
    terms: &[&(Monomial, BigInt)],
    j: usize,
    nvars_out: usize,
    table: &hashbrown::HashMap<(usize, u16), IntPoly>,
) -> IntPoly {
    if j == 0 {
        let c: BigInt = terms.iter().map(|t| t.1.clone()).sum();
        return IntPoly::constant(nvars_out, c);
    }
    let v = j - 1;
    if terms.iter().all(|t| t.0.exponent(v) == 0) {
        let inner = subst_rec(terms, v, nvars_out, table);
        return match table.get(&(v, 0)) {
            Some(f) => inner.mul(f),
            None => inner,
        };
    }
    let mut groups: alloc::collections::BTreeMap<u16, Vec<&(Monomial, BigInt)>> = Default::default();
    for t in terms {
        groups.entry(t.0.exponent(v)).or_default().push(t);
    }
    let mut acc = IntPoly::zero(nvars_out);
    for (e, g) in groups {
        let inner = subst_rec(&g, v, nvars_out, table);
        match table.get(&(v, e)) {
            Some(f) => acc = acc.add(&inner.mul(f)),
            None => acc = acc.add(&inner),
        }
    }
    acc
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(self.ring.names()))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("operands live in different rings")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}
