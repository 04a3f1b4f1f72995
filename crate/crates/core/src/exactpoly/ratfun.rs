use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::intpoly::IntPoly;
use super::poly::{substitute_int, Polynomial};
use super::ring::Ring;
use super::{PolyError, Rational};

/// Quotient of two polynomials with no common factor. The denominator is
/// integer-primitive with positive leading coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<RationalFunction, PolyError> {
        if num.ring() != den.ring() {
            return Err(PolyError::RingMismatch);
        }
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(RationalFunction::reduce(num, den))
    }

    fn reduce(num: Polynomial, den: Polynomial) -> RationalFunction {
        if num.is_zero() {
            let one = Polynomial::one(num.ring());
            return RationalFunction { num, den: one };
        }
        if let Some(c) = den.constant_value() {
            let one = Polynomial::one(num.ring());
            return RationalFunction { num: num.scale(&c.recip()), den: one };
        }
        let g = num.gcd(&den).expect("nonzero operands");
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap().unwrap(), den.exact_div(&g).unwrap().unwrap())
        };
        let (c, den) = den.primitive_part();
        RationalFunction { num: num.scale(&c.recip()), den }
    }

    pub fn from_poly(p: Polynomial) -> RationalFunction {
        let one = Polynomial::one(p.ring());
        RationalFunction { num: p, den: one }
    }

    pub fn zero(ring: &Ring) -> RationalFunction {
        RationalFunction::from_poly(Polynomial::zero(ring))
    }

    pub fn one(ring: &Ring) -> RationalFunction {
        RationalFunction::from_poly(Polynomial::one(ring))
    }

    pub fn var(ring: &Ring, i: usize) -> RationalFunction {
        RationalFunction::from_poly(Polynomial::var(ring, i))
    }

    pub fn constant(ring: &Ring, c: Rational) -> RationalFunction {
        RationalFunction::from_poly(Polynomial::constant(ring, c))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn ring(&self) -> &Ring {
        self.num.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Denominator is a rational number.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Denominator free of coordinate variables (symbolic constants allowed).
    pub fn is_coordinate_polynomial(&self) -> bool {
        self.den.is_coordinate_free()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn into_parts(self) -> (Polynomial, Polynomial) {
        (self.num, self.den)
    }

    /// Re-runs normalization; a no-op on values built through the API.
    pub fn normalized(&self) -> RationalFunction {
        RationalFunction::reduce(self.num.clone(), self.den.clone())
    }

    pub fn checked_add(&self, o: &RationalFunction) -> Result<RationalFunction, PolyError> {
        if self.den == o.den {
            return RationalFunction::new(self.num.checked_add(&o.num)?, self.den.clone());
        }
        let n = self.num.checked_mul(&o.den)?.checked_add(&o.num.checked_mul(&self.den)?)?;
        RationalFunction::new(n, self.den.checked_mul(&o.den)?)
    }

    pub fn checked_sub(&self, o: &RationalFunction) -> Result<RationalFunction, PolyError> {
        self.checked_add(&-o)
    }

    pub fn checked_mul(&self, o: &RationalFunction) -> Result<RationalFunction, PolyError> {
        if self.den.is_one() && o.den.is_one() {
            return Ok(RationalFunction::from_poly(self.num.checked_mul(&o.num)?));
        }
        RationalFunction::new(self.num.checked_mul(&o.num)?, self.den.checked_mul(&o.den)?)
    }

    pub fn checked_div(&self, o: &RationalFunction) -> Result<RationalFunction, PolyError> {
        self.checked_mul(&o.inverse()?)
    }

    pub fn inverse(&self) -> Result<RationalFunction, PolyError> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rational) -> RationalFunction {
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, k: i32) -> Result<RationalFunction, PolyError> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let e = k.unsigned_abs();
        Ok(RationalFunction { num: base.num.pow(e), den: base.den.pow(e) })
    }

    pub fn partial_derivative(&self, i: usize) -> Result<RationalFunction, PolyError> {
        let dn = self.num.partial_derivative(i)?;
        if self.den.is_one() {
            return Ok(RationalFunction::from_poly(dn));
        }
        let dd = self.den.partial_derivative(i)?;
        let top = &dn * &self.den - &self.num * &dd;
        RationalFunction::new(top, self.den.pow(2))
    }

    /// Evaluation; `None` when the denominator vanishes at the point.
    pub fn eval(&self, point: &[Rational]) -> Result<Option<Rational>, PolyError> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Ok(None);
        }
        Ok(Some(self.num.eval(point)? / d))
    }

    /// Replaces every coordinate variable by the matching image.
    pub fn substitute(&self, images: &[RationalFunction]) -> Result<RationalFunction, PolyError> {
        let k = self.ring().coords();
        if images.len() != k {
            return Err(PolyError::ArityMismatch { expected: k, found: images.len() });
        }
        let target = match images.first() {
            Some(r) => r.ring().with_constants_of(self.ring()),
            None => self.ring().clone(),
        };
        let mut nums: Vec<IntPoly> = Vec::new();
        let mut dens: Vec<IntPoly> = Vec::new();
        for r in images {
            let n = r.num.embed(&target)?;
            let d = r.den.embed(&target)?;
            // n/d with n = a/p, d = b/q over the integers gives (a q)/(b p).
            nums.push(n.int_num().scale(d.int_den()));
            dens.push(d.int_num().scale(n.int_den()));
        }
        for name in self.ring().constant_names() {
            let v = Polynomial::named(&target, name)?;
            nums.push(v.int_num().clone());
            dens.push(IntPoly::constant(target.len(), BigInt::one()));
        }
        let en = self.num.int_num().degrees();
        let ed = self.den.int_num().degrees();
        let top: Vec<u16> = en.iter().zip(&ed).map(|(a, b)| *a.max(b)).collect();
        let side = |p: &Polynomial, e: &[u16]| -> IntPoly {
            let mut s = substitute_int(p.int_num(), target.len(), true, &mut |i, k| {
                if dens[i].is_constant() {
                    nums[i].pow(k as u32).scale(&num_traits::pow(dens[i].terms[0].1.clone(), (e[i] - k) as usize))
                } else {
                    nums[i].pow(k as u32).mul(&dens[i].pow((e[i] - k) as u32))
                }
            });
            for (i, (&t, &ei)) in top.iter().zip(e).enumerate() {
                if t > ei && !s.is_zero() {
                    s = s.mul(&dens[i].pow((t - ei) as u32));
                }
            }
            s
        };
        let sn = side(&self.num, &en);
        let sd = side(&self.den, &ed);
        let n = Polynomial::from_int(&target, sn, self.num.int_den().clone());
        let d = Polynomial::from_int(&target, sd, self.den.int_den().clone());
        RationalFunction::new(n, d)
    }

    pub fn embed(&self, target: &Ring) -> Result<RationalFunction, PolyError> {
        Ok(RationalFunction { num: self.num.embed(target)?, den: self.den.embed(target)? })
    }

    pub fn rename_coords(&self, target: &Ring) -> Result<RationalFunction, PolyError> {
        Ok(RationalFunction { num: self.num.rename_coords(target)?, den: self.den.rename_coords(target)? })
    }

    pub fn render_with(&self, names: &[String]) -> String {
        let n = self.num.render_with(names);
        if self.den.is_one() {
            return n;
        }
        let d = self.den.render_with(names);
        let simple_den = self.den.len() == 1
            && self.den.leading_coefficient().is_some_and(|c| c.is_one())
            && self.den.leading_monomial().is_some_and(|m| m.exponents().iter().filter(|&&e| e > 0).count() == 1);
        let n = if self.num.len() > 1 { alloc::format!("({n})") } else { n };
        let d = if simple_den { d } else { alloc::format!("({d})") };
        alloc::format!("{n}/{d}")
    }
}

impl Polynomial {
    /// Substitution of rational images.
    pub fn substitute_rational(&self, images: &[RationalFunction]) -> Result<RationalFunction, PolyError> {
        RationalFunction::from_poly(self.clone()).substitute(images)
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> RationalFunction {
        RationalFunction::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(self.ring().names()))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                self.$checked(rhs).expect("incompatible rational functions")
            }
        }
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
        impl $tr<RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}
