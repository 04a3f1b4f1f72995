//! Dense-recursive modular gcd (Brown's algorithm) over word-sized primes,
//! lifted to the integers by Chinese remaindering.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::intpoly::IntPoly;
use super::monomial::Monomial;

#[inline]
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}

fn invm(a: u64, p: u64) -> u64 {
    debug_assert!(a != 0);
    powm(a, p - 2, p)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powm(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulm(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Descending primes below 2^62.
pub(crate) struct Primes(u64);

impl Primes {
    pub fn new() -> Primes {
        Primes((1u64 << 62) - 1)
    }
}

impl Iterator for Primes {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        loop {
            self.0 -= 2;
            if is_prime(self.0) {
                return Some(self.0);
            }
        }
    }
}

/// SplitMix64; evaluation points only need to avoid a few bad values.
struct PointGen(u64);

impl PointGen {
    fn next(&mut self, p: u64) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        1 + z % (p - 1)
    }
}

/// Sparse polynomial over Z/p, terms in descending monomial order.
#[derive(Clone, Debug)]
struct ModPoly {
    terms: Vec<(Monomial, u64)>,
}

impl ModPoly {
    fn from_int(a: &IntPoly, p: u64) -> ModPoly {
        let pb = BigInt::from(p);
        let terms = a
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let r = c.mod_floor(&pb).to_u64().unwrap();
                (r != 0).then(|| (m.clone(), r))
            })
            .collect();
        ModPoly { terms }
    }

    fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    fn monic(mut self, p: u64) -> ModPoly {
        let inv = invm(self.terms[0].1, p);
        for t in &mut self.terms {
            t.1 = mulm(t.1, inv, p);
        }
        self
    }

    fn scale(mut self, c: u64, p: u64) -> ModPoly {
        for t in &mut self.terms {
            t.1 = mulm(t.1, c, p);
        }
        self
    }
}

/// Dense univariate polynomial, index = exponent, no trailing zeros.
type Dense = Vec<u64>;

fn trim(a: &mut Dense) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn ueval(a: &[u64], t: u64, p: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| addm(mulm(acc, t, p), c, p))
}

fn urem(a: &mut Dense, b: &[u64], p: u64) {
    let db = b.len() - 1;
    let inv = invm(b[db], p);
    while a.len() > db {
        let k = a.len() - 1;
        let f = mulm(a[k], inv, p);
        if f != 0 {
            for i in 0..=db {
                a[k - db + i] = subm(a[k - db + i], mulm(f, b[i], p), p);
            }
        }
        a.pop();
        trim(a);
    }
}

/// Monic gcd; the gcd of zero and zero is zero.
fn ugcd(a: &[u64], b: &[u64], p: u64) -> Dense {
    let mut x: Dense = a.to_vec();
    let mut y: Dense = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        urem(&mut x, &y, p);
        core::mem::swap(&mut x, &mut y);
    }
    if let Some(&l) = x.last() {
        let inv = invm(l, p);
        for c in &mut x {
            *c = mulm(*c, inv, p);
        }
    }
    x
}

/// Quotient of an exact division.
fn udiv(a: &[u64], b: &[u64], p: u64) -> Dense {
    let db = b.len() - 1;
    if a.len() <= db {
        return Vec::new();
    }
    let mut r: Dense = a.to_vec();
    let mut q = vec![0u64; a.len() - db];
    let inv = invm(b[db], p);
    for k in (db..r.len()).rev() {
        let f = mulm(r[k], inv, p);
        q[k - db] = f;
        if f != 0 {
            for i in 0..=db {
                r[k - db + i] = subm(r[k - db + i], mulm(f, b[i], p), p);
            }
        }
    }
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

fn umul(a: &[u64], b: &[u64], p: u64) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = addm(r[i + j], mulm(x, y, p), p);
        }
    }
    r
}

/// Coefficients in the variables other than `v`, each a dense polynomial in `v`.
type Recursive = BTreeMap<Monomial, Dense>;

fn to_recursive(a: &ModPoly, v: usize) -> Recursive {
    let mut r: Recursive = BTreeMap::new();
    for (m, c) in &a.terms {
        let e = m.exponent(v) as usize;
        let mut key = m.clone();
        key.set_exponent(v, 0);
        let d = r.entry(key).or_default();
        if d.len() <= e {
            d.resize(e + 1, 0);
        }
        d[e] = *c;
    }
    r
}

fn from_recursive(r: &Recursive, v: usize) -> ModPoly {
    let mut terms = Vec::new();
    for (key, d) in r {
        for (e, &c) in d.iter().enumerate() {
            if c != 0 {
                let mut m = key.clone();
                m.set_exponent(v, e as u16);
                terms.push((m, c));
            }
        }
    }
    terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
    ModPoly { terms }
}

fn eval_recursive(r: &Recursive, t: u64, p: u64) -> ModPoly {
    let mut terms: Vec<(Monomial, u64)> = r
        .iter()
        .filter_map(|(k, d)| {
            let c = ueval(d, t, p);
            (c != 0).then(|| (k.clone(), c))
        })
        .collect();
    terms.reverse();
    ModPoly { terms }
}

fn univariate_gcd(a: &ModPoly, b: &ModPoly, v: usize, p: u64) -> ModPoly {
    let dense = |x: &ModPoly| {
        let mut d: Dense = Vec::new();
        for (m, c) in &x.terms {
            let e = m.exponent(v) as usize;
            if d.len() <= e {
                d.resize(e + 1, 0);
            }
            d[e] = *c;
        }
        d
    };
    let g = ugcd(&dense(a), &dense(b), p);
    let len = a.terms[0].0.len();
    let mut terms: Vec<(Monomial, u64)> = Vec::new();
    for (e, &c) in g.iter().enumerate().rev() {
        if c != 0 {
            let mut m = Monomial::one(len);
            m.set_exponent(v, e as u16);
            terms.push((m, c));
        }
    }
    ModPoly { terms }
}

/// Monic gcd of two nonzero polynomials whose variables lie in `vars`.
fn pgcd(a: &ModPoly, b: &ModPoly, vars: &[usize], p: u64, rng: &mut PointGen) -> ModPoly {
    let len = a.terms[0].0.len();
    if a.is_constant() || b.is_constant() || vars.is_empty() {
        return ModPoly { terms: vec![(Monomial::one(len), 1)] };
    }
    if vars.len() == 1 {
        return univariate_gcd(a, b, vars[0], p);
    }
    let v = vars[vars.len() - 1];
    let rest = &vars[..vars.len() - 1];
    let mut ra = to_recursive(a, v);
    let mut rb = to_recursive(b, v);
    let content = |r: &Recursive| {
        let mut g: Dense = Vec::new();
        for d in r.values() {
            g = ugcd(&g, d, p);
            if g.len() == 1 {
                break;
            }
        }
        g
    };
    let ca = content(&ra);
    let cb = content(&rb);
    let c = ugcd(&ca, &cb, p);
    if ca.len() > 1 {
        for d in ra.values_mut() {
            *d = udiv(d, &ca, p);
        }
    }
    if cb.len() > 1 {
        for d in rb.values_mut() {
            *d = udiv(d, &cb, p);
        }
    }
    let lca = ra.last_key_value().unwrap().1.clone();
    let lcb = rb.last_key_value().unwrap().1.clone();
    let gamma = ugcd(&lca, &lcb, p);
    let deg_a = ra.values().map(|d| d.len() - 1).max().unwrap();
    let deg_b = rb.values().map(|d| d.len() - 1).max().unwrap();
    let bound = deg_a.min(deg_b) + gamma.len() - 1;

    let with_content = |h: ModPoly| -> ModPoly {
        if c.len() <= 1 {
            return h;
        }
        let hr = to_recursive(&h, v);
        let mut out: Recursive = BTreeMap::new();
        for (k, d) in hr {
            out.insert(k, umul(&d, &c, p));
        }
        from_recursive(&out, v).monic(p)
    };

    let mut h: Recursive = BTreeMap::new();
    let mut modulus: Dense = vec![1];
    let mut points = 0usize;
    let mut lead: Option<Monomial> = None;
    let mut attempts = 0usize;
    loop {
        attempts += 1;
        if attempts > 4 * (bound + 4) + 64 {
            // Extremely unlikely; treat as failure of this prime.
            return ModPoly { terms: Vec::new() };
        }
        let t = rng.next(p);
        if ueval(&lca, t, p) == 0 || ueval(&lcb, t, p) == 0 {
            continue;
        }
        let at = eval_recursive(&ra, t, p);
        let bt = eval_recursive(&rb, t, p);
        let g = pgcd(&at, &bt, rest, p, rng);
        if g.terms.is_empty() {
            return g;
        }
        if g.is_constant() {
            let mut one: Recursive = BTreeMap::new();
            one.insert(Monomial::one(len), vec![1]);
            return with_content(from_recursive(&one, v));
        }
        let lm = g.terms[0].0.clone();
        match lead.as_ref().map(|l| lm.cmp(l)) {
            Some(Ordering::Greater) => continue,
            Some(Ordering::Less) | None => {
                lead = Some(lm);
                h.clear();
                modulus = vec![1];
                points = 0;
            }
            Some(Ordering::Equal) => {}
        }
        let g = g.scale(ueval(&gamma, t, p), p);
        // Newton step: h += (g - h(t)) * modulus / modulus(t).
        let qt_inv = invm(ueval(&modulus, t, p), p);
        let mut keys: Vec<Monomial> = h.keys().cloned().collect();
        for (m, _) in &g.terms {
            if !h.contains_key(m) {
                keys.push(m.clone());
            }
        }
        let gmap: HashMap<&Monomial, u64> = g.terms.iter().map(|(m, c)| (m, *c)).collect();
        for k in keys {
            let cur = h.get(&k).map_or(0, |d| ueval(d, t, p));
            let target = gmap.get(&k).copied().unwrap_or(0);
            let delta = mulm(subm(target, cur, p), qt_inv, p);
            if delta != 0 {
                let d = h.entry(k).or_default();
                if d.len() < modulus.len() {
                    d.resize(modulus.len(), 0);
                }
                for (i, &q) in modulus.iter().enumerate() {
                    d[i] = addm(d[i], mulm(delta, q, p), p);
                }
                trim(d);
            }
        }
        h.retain(|_, d| !d.is_empty());
        modulus = umul(&modulus, &[subm(0, t, p), 1], p);
        points += 1;
        if points > bound {
            let ch = content(&h);
            if ch.len() > 1 {
                for d in h.values_mut() {
                    *d = udiv(d, &ch, p);
                }
            }
            let cand = from_recursive(&h, v).monic(p);
            return with_content(cand);
        }
    }
}

/// Gcd of two primitive integer polynomials without monomial content.
/// Returns the primitive gcd with positive leading coefficient together with
/// both cofactors, or `None` if the prime budget is exhausted.
pub(crate) fn modular_gcd(a: &IntPoly, b: &IntPoly) -> Option<(IntPoly, IntPoly, IntPoly)> {
    let nvars = a.nvars;
    let da = a.degrees();
    let db = b.degrees();
    let mut vars: Vec<usize> = (0..nvars).filter(|&i| da[i] > 0 || db[i] > 0).collect();
    // The last variable is peeled first; keep the biggest degrees innermost.
    vars.sort_by_key(|&i| core::cmp::Reverse(da[i].max(db[i])));
    let gamma = a.lc().gcd(b.lc());
    let mut rng = PointGen(0x5EED_1234_ABCD_0001);
    let mut lead: Option<Monomial> = None;
    let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
    let mut modulus = BigInt::one();
    let mut last_try: Option<Vec<(Monomial, BigInt)>> = None;
    for (count, p) in Primes::new().enumerate() {
        if count > 40 {
            return None;
        }
        let pb = BigInt::from(p);
        if (a.lc() % &pb).is_zero() || (b.lc() % &pb).is_zero() {
            continue;
        }
        let am = ModPoly::from_int(a, p);
        let bm = ModPoly::from_int(b, p);
        let g = pgcd(&am, &bm, &vars, p, &mut rng);
        if g.terms.is_empty() {
            continue;
        }
        if g.is_constant() {
            return Some((IntPoly::constant(nvars, BigInt::one()), a.clone(), b.clone()));
        }
        let lm = g.terms[0].0.clone();
        match lead.as_ref().map(|l| lm.cmp(l)) {
            Some(Ordering::Greater) => continue,
            Some(Ordering::Less) | None => {
                lead = Some(lm);
                acc.clear();
                modulus = BigInt::one();
                last_try = None;
            }
            Some(Ordering::Equal) => {}
        }
        let gp = (gamma.mod_floor(&pb)).to_u64().unwrap();
        let g = g.scale(gp, p);
        crt_step(&mut acc, &modulus, &g, p);
        modulus *= &pb;
        let half: BigInt = &modulus >> 1usize;
        let sym: Vec<(Monomial, BigInt)> = acc
            .iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| {
                let c = if *c > half { c - &modulus } else { c.clone() };
                (m.clone(), c)
            })
            .collect();
        if last_try.as_ref() == Some(&sym) {
            continue;
        }
        let cand = IntPoly { nvars, terms: sym.clone() }.primitive();
        last_try = Some(sym);
        if let Some(qa) = a.exact_div(&cand) {
            if let Some(qb) = b.exact_div(&cand) {
                return Some((cand, qa, qb));
            }
        }
    }
    None
}

fn crt_step(acc: &mut BTreeMap<Monomial, BigInt>, modulus: &BigInt, g: &ModPoly, p: u64) {
    let pb = BigInt::from(p);
    let m_mod_p = (modulus % &pb).to_u64().unwrap();
    let inv = invm(m_mod_p, p);
    let gmap: HashMap<&Monomial, u64> = g.terms.iter().map(|(m, c)| (m, *c)).collect();
    for (m, _) in &g.terms {
        acc.entry(m.clone()).or_insert_with(BigInt::zero);
    }
    for (m, c) in acc.iter_mut() {
        let target = gmap.get(m).copied().unwrap_or(0);
        let cur = c.mod_floor(&pb).to_u64().unwrap();
        let k = mulm(subm(target, cur, p), inv, p);
        if k != 0 {
            *c += modulus * BigInt::from(k);
        }
    }
    debug_assert!(acc.values().all(|c| !c.is_negative()));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_are_prime() {
        let ps: Vec<u64> = Primes::new().take(3).collect();
        assert!(ps.iter().all(|&p| is_prime(p) && p < (1 << 62)));
        assert!(ps[0] > ps[1]);
        assert!(!is_prime(561));
        assert!(is_prime(1_000_000_007));
    }

    #[test]
    fn univariate_dense_gcd() {
        let p = 1_000_000_007;
        // (x+1)(x+2) and (x+1)(x+3)
        let g = ugcd(&[2, 3, 1], &[3, 4, 1], p);
        assert_eq!(g, vec![1, 1]);
        assert_eq!(udiv(&[2, 3, 1], &[1, 1], p), vec![2, 1]);
    }
}
