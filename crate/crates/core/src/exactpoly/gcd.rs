use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::intpoly::IntPoly;
use super::modular::modular_gcd;
use super::monomial::Monomial;

/// Primitive gcd with positive leading coefficient, plus cofactors
/// `a / g` and `b / g` (up to the integer contents of `a` and `b`).
pub(crate) fn gcd_cofactors(a: &IntPoly, b: &IntPoly) -> (IntPoly, IntPoly, IntPoly) {
    let n = a.nvars;
    if a.is_zero() {
        let g = b.primitive();
        let qb = b.exact_div(&g).unwrap();
        return (g, IntPoly::zero(n), qb);
    }
    if b.is_zero() {
        let g = a.primitive();
        let qa = a.exact_div(&g).unwrap();
        return (g, qa, IntPoly::zero(n));
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mg = ma.gcd(&mb);
    let a1 = a.div_monomial(&ma);
    let b1 = b.div_monomial(&mb);
    let (ca, cb) = (a1.content(), b1.content());
    let a1 = a1.scale_div(&ca);
    let b1 = b1.scale_div(&cb);
    let (core, qa, qb) = if a1.is_constant() || b1.is_constant() {
        (IntPoly::constant(n, BigInt::one()), a1, b1)
    } else if a1 == b1 {
        let one = IntPoly::constant(n, BigInt::one());
        (a1, one.clone(), one)
    } else {
        match modular_gcd(&a1, &b1) {
            Some(r) => r,
            None => {
                let g = gcd_prs(&a1, &b1);
                let qa = a1.exact_div(&g).expect("prs gcd divides");
                let qb = b1.exact_div(&g).expect("prs gcd divides");
                (g, qa, qb)
            }
        }
    };
    let g = core.mul_monomial(&mg);
    let qa = qa.mul_monomial(&ma.div(&mg)).scale(&ca);
    let qb = qb.mul_monomial(&mb.div(&mg)).scale(&cb);
    (g, qa, qb)
}

pub(crate) fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    gcd_cofactors(a, b).0
}

/// Gcd of many polynomials together with every cofactor.
pub(crate) fn gcd_many(ps: &[IntPoly]) -> (IntPoly, Vec<IntPoly>) {
    let n = ps.first().map_or(0, |p| p.nvars);
    let nonzero: Vec<&IntPoly> = ps.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return (IntPoly::zero(n), ps.to_vec());
    }
    if nonzero.len() == 1 {
        let g = nonzero[0].primitive();
        let qs = ps.iter().map(|p| p.exact_div(&g).unwrap()).collect();
        return (g, qs);
    }
    // Shortcut: a common monomial content, then a random combination.
    let mut mono = nonzero[0].monomial_content();
    for p in &nonzero[1..] {
        mono = mono.gcd(&p.monomial_content());
    }
    let stripped: Vec<IntPoly> = ps.iter().map(|p| p.div_monomial(&mono)).collect();
    let mut order: Vec<usize> = (0..ps.len()).filter(|&i| !ps[i].is_zero()).collect();
    order.sort_by_key(|&i| ps[i].terms.len());
    let first = &stripped[order[0]];
    let g = if order.len() == 2 {
        gcd(first, &stripped[order[1]])
    } else {
        let mut comb = IntPoly::zero(n);
        for (k, &i) in order[1..].iter().enumerate() {
            comb = comb.add(&stripped[i].scale(&BigInt::from(1 + 2 * k as i64 + (k * k) as i64)));
        }
        gcd(first, &comb)
    };
    let mut g = g;
    let mut quotients: Vec<Option<IntPoly>> = stripped.iter().map(|p| p.exact_div(&g)).collect();
    if quotients.iter().any(|q| q.is_none()) {
        g = first.clone();
        for &i in &order[1..] {
            if g.is_constant() {
                break;
            }
            g = gcd(&g, &stripped[i]);
        }
        g = g.primitive();
        quotients = stripped.iter().map(|p| p.exact_div(&g)).collect();
    }
    let qs = quotients.into_iter().map(|q| q.expect("gcd divides every entry")).collect();
    (g.mul_monomial(&mono), qs)
}

/// Coefficient of `v^k`, as a polynomial in the remaining variables.
fn coeff_in(a: &IntPoly, v: usize, k: u16) -> IntPoly {
    let terms = a
        .terms
        .iter()
        .filter(|(m, _)| m.exponent(v) == k)
        .map(|(m, c)| {
            let mut m = m.clone();
            m.set_exponent(v, 0);
            (m, c.clone())
        })
        .collect();
    IntPoly::from_terms(a.nvars, terms)
}

fn content_in(a: &IntPoly, v: usize) -> IntPoly {
    let d = a.degree_in(v);
    let mut g = IntPoly::zero(a.nvars);
    for k in (0..=d).rev() {
        let c = coeff_in(a, v, k);
        if c.is_zero() {
            continue;
        }
        g = gcd_prs(&g, &c);
        if g.is_constant() {
            break;
        }
    }
    g
}

fn var_power(n: usize, v: usize, k: u16) -> Monomial {
    let mut m = Monomial::one(n);
    m.set_exponent(v, k);
    m
}

/// Pseudo-remainder of `a` by `b` with respect to `v`.
fn prem(a: &IntPoly, b: &IntPoly, v: usize) -> IntPoly {
    let db = b.degree_in(v);
    let lb = coeff_in(b, v, db);
    let mut r = a.clone();
    loop {
        if r.is_zero() {
            return r;
        }
        let dr = r.degree_in(v);
        if dr < db {
            return r;
        }
        let lr = coeff_in(&r, v, dr);
        let shifted = b.mul(&lr).mul_monomial(&var_power(a.nvars, v, dr - db));
        r = r.mul(&lb).sub(&shifted);
    }
}

/// Recursive primitive polynomial remainder sequence. Slow; used as an
/// independent oracle and as the last-resort fallback.
pub(crate) fn gcd_prs(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let n = a.nvars;
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    let da = a.degrees();
    let db = b.degrees();
    let v = match (0..n).rev().find(|&i| da[i] > 0 || db[i] > 0) {
        Some(v) => v,
        None => return IntPoly::constant(n, BigInt::one()),
    };
    let one = IntPoly::constant(n, BigInt::one());
    if da[v] == 0 {
        let g = gcd_prs(a, &content_in(b, v));
        return if g.is_constant() { one } else { g };
    }
    if db[v] == 0 {
        let g = gcd_prs(&content_in(a, v), b);
        return if g.is_constant() { one } else { g };
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd_prs(&ca, &cb);
    let mut r0 = a.exact_div(&ca).unwrap();
    let mut r1 = b.exact_div(&cb).unwrap();
    if r0.degree_in(v) < r1.degree_in(v) {
        core::mem::swap(&mut r0, &mut r1);
    }
    let g = loop {
        let r = prem(&r0, &r1, v);
        if r.is_zero() {
            break r1;
        }
        if r.degree_in(v) == 0 {
            break one.clone();
        }
        let cr = content_in(&r, v);
        r0 = r1;
        r1 = r.exact_div(&cr).unwrap().primitive();
    };
    let g = if g.is_constant() { one.clone() } else { g.exact_div(&content_in(&g, v)).unwrap() };
    g.mul(&c).primitive()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(coeffs: &[i64]) -> IntPoly {
        let n = coeffs.len() - 1;
        let mut terms = Vec::new();
        for (i, &c) in coeffs.iter().enumerate() {
            let m = if i < n { Monomial::var(n, i) } else { Monomial::one(n) };
            terms.push((m, BigInt::from(c)));
        }
        IntPoly::from_terms(n, terms)
    }

    #[test]
    fn modular_and_prs_agree_on_a_product() {
        let f = lin(&[1, 2, -1, 3]);
        let g = lin(&[2, 0, 1, -1]);
        let h = lin(&[0, 1, 1, 1]);
        let a = f.mul(&g).mul(&g);
        let b = f.mul(&h).mul(&g);
        let m = gcd(&a, &b);
        let p = gcd_prs(&a, &b);
        assert_eq!(m, p);
        assert_eq!(m, f.mul(&g).primitive());
    }

    #[test]
    fn cofactors_reassemble() {
        let f = lin(&[3, -2, 5]);
        let a = f.mul(&lin(&[1, 1, 1])).scale(&BigInt::from(6));
        let b = f.mul(&lin(&[1, -1, 2])).scale(&BigInt::from(-4));
        let (g, qa, qb) = gcd_cofactors(&a, &b);
        assert_eq!(g.mul(&qa), a);
        assert_eq!(g.mul(&qb), b);
    }
}
