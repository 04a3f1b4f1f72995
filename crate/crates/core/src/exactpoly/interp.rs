//! Reduced form of a tuple whose components share a large factor, found
//! without computing that factor.
//!
//! Mod a prime, the degree of the common factor is read off a random line.
//! At a random point the ratios `pᵢ/p₀` equal `qᵢ/q₀` for the reduced tuple
//! `q`, which pins the coefficients of `q` down by a linear system. The
//! image is lifted by rational reconstruction and then checked exactly.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::intpoly::IntPoly;
use super::modular::is_prime;
use super::monomial::Monomial;

/// Largest coefficient basis per component worth a dense solve.
const MAX_BASIS: usize = 900;
const MAX_PRIMES: usize = 8;

/// A prime below 2^31 with its Barrett constant.
#[derive(Clone, Copy)]
struct Fp {
    p: u64,
    m: u64,
}

impl Fp {
    fn new(p: u64) -> Fp {
        Fp { p, m: (u128::from(u64::MAX) / u128::from(p)) as u64 }
    }
}

#[inline]
fn mulm(a: u64, b: u64, f: Fp) -> u64 {
    let x = a * b;
    let q = ((u128::from(x) * u128::from(f.m)) >> 64) as u64;
    let r = x - q * f.p;
    if r >= f.p {
        r - f.p
    } else {
        r
    }
}

#[inline]
fn addm(a: u64, b: u64, p: Fp) -> u64 {
    let s = a + b;
    if s >= p.p {
        s - p.p
    } else {
        s
    }
}

#[inline]
fn subm(a: u64, b: u64, p: Fp) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p.p - b
    }
}

fn invm(a: u64, p: Fp) -> u64 {
    let (mut r, mut base, mut e) = (1u64, a, p.p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, base, p);
        }
        base = mulm(base, base, p);
        e >>= 1;
    }
    r
}

struct Rng(u64);

impl Rng {
    fn below(&mut self, p: u64) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        1 + z % (p - 1)
    }
}

/// A component reduced mod p, for evaluation against a flat power table.
/// Terms are sorted lexicographically so that each reuses the partial
/// product of the variables it shares with its predecessor.
struct Image {
    nvars: usize,
    /// First variable where term `t` differs from term `t - 1`.
    depth: Vec<u8>,
    /// `(variable, table index)` steps of term `t` from its depth on.
    steps: Vec<(u8, u32)>,
    start: Vec<u32>,
    coefs: Vec<u64>,
    /// Position of each sorted term in the input.
    order: Vec<u32>,
}

fn offsets(deg: &[u16]) -> Vec<u32> {
    let mut off = Vec::with_capacity(deg.len());
    let mut o = 0u32;
    for &d in deg {
        off.push(o);
        o += u32::from(d) + 1;
    }
    off
}

impl Image {
    fn new(a: &IntPoly, p: Fp, deg: &[u16]) -> Image {
        let pb = BigInt::from(p.p);
        let mut exps = Vec::with_capacity(a.terms.len());
        let mut coefs = Vec::with_capacity(a.terms.len());
        for (m, c) in &a.terms {
            let r = c.mod_floor(&pb).to_u64().unwrap();
            if r != 0 {
                exps.push(m.exponents());
                coefs.push(r);
            }
        }
        Image::build(&exps, coefs, deg)
    }

    fn monomials(b: &[Vec<u16>], deg: &[u16]) -> Image {
        let exps: Vec<&[u16]> = b.iter().map(|e| e.as_slice()).collect();
        Image::build(&exps, vec![1; b.len()], deg)
    }

    fn build(exps: &[&[u16]], coefs: Vec<u64>, deg: &[u16]) -> Image {
        let nvars = deg.len();
        let off = offsets(deg);
        let mut order: Vec<u32> = (0..exps.len() as u32).collect();
        order.sort_by(|&x, &y| exps[x as usize].cmp(exps[y as usize]));
        let mut depth = Vec::with_capacity(exps.len());
        let mut steps = Vec::new();
        let mut start = vec![0u32];
        let mut prev: Option<&[u16]> = None;
        for &t in &order {
            let e = exps[t as usize];
            let d = prev.map_or(0, |q| q.iter().zip(e).position(|(a, b)| a != b).unwrap_or(nvars));
            depth.push(d as u8);
            for (j, &k) in e.iter().enumerate().skip(d) {
                if k > 0 {
                    steps.push((j as u8, off[j] + u32::from(k)));
                }
            }
            start.push(steps.len() as u32);
            prev = Some(e);
        }
        let coefs = order.iter().map(|&t| coefs[t as usize]).collect();
        Image { nvars, depth, steps, start, coefs, order }
    }

    /// Calls `f(input position, value)` for every term.
    fn each(&self, tab: &[u64], p: Fp, mut f: impl FnMut(usize, u64)) {
        let n = self.nvars;
        let mut stack = vec![1u64; n + 1];
        for t in 0..self.coefs.len() {
            let d = self.depth[t] as usize;
            let mut steps = self.steps[self.start[t] as usize..self.start[t + 1] as usize].iter().peekable();
            for j in d..n {
                stack[j + 1] = match steps.peek() {
                    Some(&&(v, i)) if v as usize == j => {
                        steps.next();
                        mulm(stack[j], tab[i as usize], p)
                    }
                    _ => stack[j],
                };
            }
            f(self.order[t] as usize, mulm(self.coefs[t], stack[n], p));
        }
    }

    fn eval(&self, tab: &[u64], p: Fp) -> u64 {
        let mut acc = 0u128;
        self.each(tab, p, |_, v| acc += u128::from(v));
        (acc % u128::from(p.p)) as u64
    }

    fn terms(&self, tab: &[u64], p: Fp) -> Vec<u64> {
        let mut out = vec![0u64; self.coefs.len()];
        self.each(tab, p, |i, v| out[i] = v);
        out
    }
}

/// Flat table of `x[j]^e` for `e ≤ deg[j]`, laid out as in [`offsets`].
fn powers(x: &[u64], deg: &[u16], p: Fp) -> Vec<u64> {
    let mut out = Vec::with_capacity(deg.iter().map(|&d| d as usize + 1).sum());
    for (&v, &d) in x.iter().zip(deg) {
        let mut acc = 1u64;
        for _ in 0..=d {
            out.push(acc);
            acc = mulm(acc, v, p);
        }
    }
    out
}

/// Dense univariate polynomial from values at `1..=n`.
fn interpolate(vals: &[u64], p: Fp) -> Vec<u64> {
    let n = vals.len();
    let xs: Vec<u64> = (1..=n as u64).collect();
    // Newton divided differences.
    let mut c = vals.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = subm(c[i], c[i - 1], p);
            let den = subm(xs[i], xs[i - j], p);
            c[i] = mulm(num, invm(den, p), p);
        }
    }
    let mut poly = vec![0u64; n];
    for i in (0..n).rev() {
        // poly = poly * (s - xs[i]) + c[i]
        let mut next = vec![0u64; n];
        for k in 0..n {
            if poly[k] == 0 {
                continue;
            }
            if k + 1 < n {
                next[k + 1] = addm(next[k + 1], poly[k], p);
            }
            next[k] = subm(next[k], mulm(poly[k], xs[i], p), p);
        }
        next[0] = addm(next[0], c[i], p);
        poly = next;
    }
    trim(&mut poly);
    poly
}

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn upoly_rem(a: &[u64], b: &[u64], p: Fp) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = invm(b[db], p);
    while r.len() > db {
        let k = r.len() - 1;
        let f = mulm(r[k], inv, p);
        if f != 0 {
            for i in 0..=db {
                r[k - db + i] = subm(r[k - db + i], mulm(f, b[i], p), p);
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn upoly_gcd(a: &[u64], b: &[u64], p: Fp) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = upoly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut [Vec<u64>], ncols: usize, p: Fp) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(r) = (row..m.len()).find(|&r| m[r][col] != 0) else { continue };
        m.swap(row, r);
        let inv = invm(m[row][col], p);
        for v in m[row].iter_mut() {
            *v = mulm(*v, inv, p);
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col] == 0 {
                continue;
            }
            let f = other[col];
            for (v, &q) in other.iter_mut().zip(&pivot_row).skip(col) {
                if q != 0 {
                    *v = subm(*v, mulm(f, q, p), p);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

fn nullspace(mut m: Vec<Vec<u64>>, ncols: usize, p: Fp) -> Vec<Vec<u64>> {
    let pivots = rref(&mut m, ncols, p);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = subm(0, m[r][free], p);
        }
        basis.push(v);
    }
    basis
}

/// Exponent vectors with the given degree in each coordinate group and
/// total degree at most `rest` in the variables outside all groups.
fn basis(nvars: usize, groups: &[(usize, usize)], degs: &[u32], rest: u32) -> Vec<Vec<u16>> {
    let covered: usize = groups.iter().map(|g| g.1 - g.0).sum();
    let free: Vec<usize> = (groups.last().map_or(0, |g| g.1)..nvars).collect();
    debug_assert_eq!(covered + free.len(), nvars);
    let mut out = vec![vec![0u16; nvars]];
    for (g, &d) in groups.iter().zip(degs) {
        let vars: Vec<usize> = (g.0..g.1).collect();
        out = extend(out, &vars, d, true);
    }
    extend(out, &free, rest, false)
}

fn extend(prefixes: Vec<Vec<u16>>, vars: &[usize], d: u32, exact: bool) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    for pre in prefixes {
        let mut cur = pre.clone();
        fill(&mut cur, vars, d, exact, &mut out);
    }
    out
}

fn fill(cur: &mut Vec<u16>, vars: &[usize], left: u32, exact: bool, out: &mut Vec<Vec<u16>>) {
    match vars.split_first() {
        None => {
            if !exact || left == 0 {
                out.push(cur.clone());
            }
        }
        Some((&v, rest)) => {
            for e in (0..=left).rev() {
                if rest.is_empty() && exact && e != left {
                    continue;
                }
                cur[v] = e as u16;
                fill(cur, rest, left - e, exact, out);
            }
            cur[v] = 0;
        }
    }
}

struct Shape {
    /// Basis per component; empty for zero components.
    bases: Vec<Vec<Vec<u16>>>,
    pivot: usize,
}

fn group_degree(a: &IntPoly, g: (usize, usize)) -> Option<u32> {
    let mut it = a.terms.iter().map(|(m, _)| m.exponents()[g.0..g.1].iter().map(|&e| e as u32).sum::<u32>());
    let d = it.next()?;
    it.all(|e| e == d).then_some(d)
}

/// Degree in `s` of the gcd of the restrictions to `x + s·dir`, or `None`
/// if the line misses the top degree of the pivot component.
fn line_gcd_degree(
    imgs: &[Option<Image>],
    pivot: usize,
    pivot_deg: u32,
    x: &[u64],
    dir: &[u64],
    maxdeg: &[u16],
    degs: &[u32],
    p: Fp,
) -> Option<u32> {
    let top = degs.iter().zip(imgs).filter(|(_, m)| m.is_some()).map(|(&d, _)| d).max().unwrap_or(0);
    let pws: Vec<Vec<u64>> = (1..=top as u64 + 1)
        .map(|s| {
            let pt: Vec<u64> = x.iter().zip(dir).map(|(&a, &b)| addm(a, mulm(s, b, p), p)).collect();
            powers(&pt, maxdeg, p)
        })
        .collect();
    let mut g: Option<Vec<u64>> = None;
    for (i, img) in imgs.iter().enumerate() {
        let Some(img) = img else { continue };
        let n = degs[i] as usize + 1;
        let vals: Vec<u64> = pws[..n].iter().map(|pw| img.eval(pw, p)).collect();
        let r = interpolate(&vals, p);
        if i == pivot && r.len() != pivot_deg as usize + 1 {
            return None;
        }
        g = Some(match g {
            None => r,
            Some(g) => upoly_gcd(&g, &r, p),
        });
    }
    let g = g?;
    Some(g.len().saturating_sub(1) as u32)
}

fn max_degrees(raw: &[IntPoly], nvars: usize) -> Vec<u16> {
    let mut md = vec![0u16; nvars];
    for a in raw {
        for (m, _) in &a.terms {
            for (j, &e) in m.exponents().iter().enumerate() {
                md[j] = md[j].max(e);
            }
        }
    }
    md
}

fn total_degree(a: &IntPoly) -> u32 {
    a.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
}

/// Bases for the reduced components, or `Err(true)` when the tuple is
/// already reduced and `Err(false)` when this method does not apply.
fn find_shape(raw: &[IntPoly], groups: &[(usize, usize)], p: Fp, rng: &mut Rng) -> Result<Shape, bool> {
    let nvars = raw[0].nvars;
    let maxdeg = max_degrees(raw, nvars);
    let imgs: Vec<Option<Image>> = raw.iter().map(|a| (!a.is_zero()).then(|| Image::new(a, p, &maxdeg))).collect();
    let pivot = (0..raw.len()).filter(|&i| !raw[i].is_zero()).min_by_key(|&i| raw[i].terms.len()).ok_or(false)?;
    if imgs[pivot].as_ref().unwrap().coefs.len() != raw[pivot].terms.len() {
        return Err(false);
    }
    let tdeg: Vec<u32> = raw.iter().map(total_degree).collect();
    let mut gdeg: Vec<Vec<u32>> = Vec::new();
    for a in raw {
        if a.is_zero() {
            gdeg.push(vec![0; groups.len()]);
            continue;
        }
        gdeg.push(groups.iter().map(|&g| group_degree(a, g)).collect::<Option<Vec<_>>>().ok_or(false)?);
    }
    let attempt = |rng: &mut Rng, support: Option<(usize, usize)>, degs: &[u32], pdeg: u32| -> Option<u32> {
        for _ in 0..4 {
            let x: Vec<u64> = (0..nvars).map(|_| rng.below(p.p)).collect();
            let dir: Vec<u64> = (0..nvars)
                .map(|j| match support {
                    Some((lo, hi)) if j < lo || j >= hi => 0,
                    _ => rng.below(p.p),
                })
                .collect();
            if let Some(d) = line_gcd_degree(&imgs, pivot, pdeg, &x, &dir, &maxdeg, degs, p) {
                return Some(d);
            }
        }
        None
    };
    let d_all = attempt(rng, None, &tdeg, tdeg[pivot]).ok_or(false)?;
    if d_all == 0 {
        return Err(true);
    }
    let mut d_groups = Vec::with_capacity(groups.len());
    for (k, &g) in groups.iter().enumerate() {
        let degs: Vec<u32> = gdeg.iter().map(|d| d[k]).collect();
        d_groups.push(attempt(rng, Some(g), &degs, degs[pivot]).ok_or(false)?);
    }
    let mut bases = Vec::with_capacity(raw.len());
    for (i, a) in raw.iter().enumerate() {
        if a.is_zero() {
            bases.push(Vec::new());
            continue;
        }
        let dt = tdeg[i].checked_sub(d_all).ok_or(false)?;
        let dg: Vec<u32> =
            gdeg[i].iter().zip(&d_groups).map(|(&a, &b)| a.checked_sub(b)).collect::<Option<_>>().ok_or(false)?;
        let rest = dt.checked_sub(dg.iter().sum()).ok_or(false)?;
        let b = basis(nvars, groups, &dg, rest);
        if b.len() > MAX_BASIS || b.is_empty() {
            return Err(false);
        }
        bases.push(b);
    }
    Ok(Shape { bases, pivot })
}

/// Coefficients of every reduced component mod `p`, scaled so that the
/// entry `anchor` of the concatenation is one.
fn solve_image(raw: &[IntPoly], shape: &Shape, p: Fp, rng: &mut Rng, anchor: Option<usize>) -> Option<Vec<u64>> {
    let nvars = raw[0].nvars;
    let i0 = shape.pivot;
    let others: Vec<usize> = (0..raw.len()).filter(|&i| i != i0 && !raw[i].is_zero()).collect();
    let m0 = shape.bases[i0].len();
    let mmax = shape.bases.iter().map(|b| b.len()).max().unwrap();
    let mut k = mmax + 2;
    while others.iter().map(|&i| k - shape.bases[i].len()).sum::<usize>() < m0 + 4 {
        k += 1;
    }
    let maxdeg = max_degrees(raw, nvars);
    let bdeg: Vec<u16> = (0..nvars)
        .map(|j| shape.bases.iter().flatten().map(|e| e[j]).max().unwrap_or(0).max(maxdeg[j]))
        .collect();
    let imgs: Vec<Option<Image>> = raw.iter().map(|a| (!a.is_zero()).then(|| Image::new(a, p, &bdeg))).collect();
    // Sample points with ratio values.
    let mut pts: Vec<Vec<u64>> = Vec::with_capacity(k);
    let mut ratios: Vec<Vec<u64>> = vec![Vec::with_capacity(k); raw.len()];
    let mut tries = 0;
    while pts.len() < k {
        tries += 1;
        if tries > 4 * k + 20 {
            return None;
        }
        let x: Vec<u64> = (0..nvars).map(|_| rng.below(p.p)).collect();
        let pw = powers(&x, &bdeg, p);
        let v0 = imgs[i0].as_ref().unwrap().eval(&pw, p);
        if v0 == 0 {
            continue;
        }
        let inv = invm(v0, p);
        for &i in &others {
            ratios[i].push(mulm(imgs[i].as_ref().unwrap().eval(&pw, p), inv, p));
        }
        pts.push(pw);
    }
    let eval_basis = |b: &[Vec<u16>]| -> Vec<Vec<u64>> {
        let img = Image::monomials(b, &bdeg);
        pts.iter().map(|tab| img.terms(tab, p)).collect()
    };
    let v0 = eval_basis(&shape.bases[i0]);
    // Components sharing a basis share the evaluation matrix and its
    // left kernel.
    let mut cache: Vec<(usize, Vec<Vec<u64>>, Vec<Vec<u64>>)> = Vec::new();
    let mut eqs: Vec<Vec<u64>> = Vec::new();
    for &i in &others {
        let slot = match cache.iter().position(|(j, _, _)| shape.bases[*j] == shape.bases[i]) {
            Some(s) => s,
            None => {
                let v = eval_basis(&shape.bases[i]);
                let mi = shape.bases[i].len();
                let vt: Vec<Vec<u64>> = (0..mi).map(|c| v.iter().map(|row| row[c]).collect()).collect();
                let w = nullspace(vt, k, p);
                cache.push((i, v, w));
                cache.len() - 1
            }
        };
        let w = &cache[slot].2;
        for wrow in w {
            let mut acc = vec![0u128; m0];
            for (kk, &wk) in wrow.iter().enumerate() {
                let f = mulm(wk, ratios[i][kk], p);
                if f == 0 {
                    continue;
                }
                for (aj, &vj) in acc.iter_mut().zip(&v0[kk]) {
                    *aj += u128::from(f * vj);
                }
            }
            let e: Vec<u64> = acc.into_iter().map(|x| (x % u128::from(p.p)) as u64).collect();
            eqs.push(e);
        }
    }
    let kernel = nullspace(eqs, m0, p);
    if kernel.len() != 1 {
        return None;
    }
    let c0 = kernel.into_iter().next().unwrap();
    let q0vals: Vec<u64> = v0
        .iter()
        .map(|row| row.iter().zip(&c0).fold(0u64, |s, (&a, &b)| addm(s, mulm(a, b, p), p)))
        .collect();
    let mut coeffs: Vec<Vec<u64>> = vec![Vec::new(); raw.len()];
    coeffs[i0] = c0;
    // One elimination per shared basis, with a right-hand side per component.
    for (slot, (_, v, _)) in cache.iter().enumerate() {
        let members: Vec<usize> = others
            .iter()
            .copied()
            .filter(|&i| cache.iter().position(|(j, _, _)| shape.bases[*j] == shape.bases[i]) == Some(slot))
            .collect();
        let mi = v[0].len();
        let mut aug: Vec<Vec<u64>> = v
            .iter()
            .enumerate()
            .map(|(kk, row)| {
                let mut r = row.clone();
                r.extend(members.iter().map(|&i| mulm(ratios[i][kk], q0vals[kk], p)));
                r
            })
            .collect();
        let piv = rref(&mut aug, mi + members.len(), p);
        if piv.len() < mi || piv[..mi].iter().enumerate().any(|(r, &c)| r != c) || piv.len() > mi {
            return None;
        }
        for (t, &i) in members.iter().enumerate() {
            coeffs[i] = (0..mi).map(|r| aug[r][mi + t]).collect();
        }
    }
    let flat: Vec<u64> = coeffs.into_iter().flatten().collect();
    let a = match anchor {
        Some(a) => a,
        None => flat.iter().position(|&c| c != 0)?,
    };
    if flat[a] == 0 {
        return None;
    }
    let inv = invm(flat[a], p);
    Some(flat.into_iter().map(|c| mulm(c, inv, p)).collect())
}

/// `n/d ≡ a (mod m)` with `|n|, d` below `sqrt(m/2)`.
fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<(BigInt, BigInt)> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = core::mem::replace(&mut r1, r2);
        t0 = core::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    if t1.is_negative() {
        Some((-r1, -t1))
    } else {
        Some((r1, t1))
    }
}

/// Checks `raw = G·q` for one polynomial `G` and every component.
fn verify(raw: &[IntPoly], q: &[IntPoly], pivot: usize) -> bool {
    let c = q[pivot].content();
    let q0 = q[pivot].scale_div(&c);
    let Some(g) = raw[pivot].exact_div(&q0) else { return false };
    raw.iter().zip(q).enumerate().all(|(i, (a, b))| {
        if i == pivot {
            return true;
        }
        if a.is_zero() || b.is_zero() {
            return a.is_zero() && b.is_zero();
        }
        a.scale(&c) == g.mul(b)
    })
}

/// Primes just below 2^31, so products fit a machine word.
fn small_primes() -> impl Iterator<Item = u64> {
    (0..).map(|k| (1u64 << 31) - 1 - 2 * k).filter(|&n| is_prime(n))
}

/// The tuple divided by the gcd of its components, up to one rational
/// scalar; `None` when the method gives up and a gcd is needed.
pub(crate) fn reduce_tuple(raw: &[IntPoly], groups: &[(usize, usize)]) -> Option<Vec<IntPoly>> {
    let nvars = raw.first()?.nvars;
    if raw.iter().filter(|a| !a.is_zero()).count() < 2 {
        return None;
    }
    let mut rng = Rng(0x5EED_0F_CAFE);
    let mut primes = small_primes();
    let mut shape = None;
    for _ in 0..3 {
        let p = Fp::new(primes.next()?);
        match find_shape(raw, groups, p, &mut rng) {
            Ok(s) => {
                shape = Some(s);
                break;
            }
            Err(true) => return Some(raw.to_vec()),
            Err(false) => continue,
        }
    }
    let shape = shape?;
    let mut anchor = None;
    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = Vec::new();
    for _ in 0..MAX_PRIMES {
        let p = Fp::new(primes.next()?);
        let Some(img) = solve_image(raw, &shape, p, &mut rng, anchor) else { continue };
        if anchor.is_none() {
            anchor = img.iter().position(|&c| c != 0);
            acc = img.iter().map(|&c| BigInt::from(c)).collect();
            modulus = BigInt::from(p.p);
        } else {
            // Chinese remaindering, entry by entry.
            let pb = BigInt::from(p.p);
            let minv = BigInt::from(invm((&modulus % &pb).to_u64().unwrap(), p));
            for (a, &r) in acc.iter_mut().zip(&img) {
                let diff = (BigInt::from(r) - &*a).mod_floor(&pb);
                let t = (diff * &minv).mod_floor(&pb);
                *a = &*a + &modulus * t;
            }
            modulus *= &pb;
        }
        let Some(fracs) = acc.iter().map(|a| rational_reconstruct(a, &modulus)).collect::<Option<Vec<_>>>()
        else {
            continue;
        };
        let den = fracs.iter().fold(BigInt::one(), |d, (_, f)| d.lcm(f));
        let mut it = fracs.iter().map(|(n, d)| n * (&den / d));
        let q: Vec<IntPoly> = shape
            .bases
            .iter()
            .map(|b| {
                let terms = b.iter().map(|e| (Monomial::from_exponents(e), it.next().unwrap())).collect();
                IntPoly::from_terms(nvars, terms)
            })
            .collect();
        if verify(raw, &q, shape.pivot) {
            return Some(q);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(nvars: usize, terms: &[(&[u16], i64)]) -> IntPoly {
        IntPoly::from_terms(nvars, terms.iter().map(|(e, c)| (Monomial::from_exponents(e), BigInt::from(*c))).collect())
    }

    #[test]
    fn strips_a_common_factor() {
        // g = x0^2 + 3 x1 x2, q = (x0, 2 x1 - x2, x2)
        let g = poly(3, &[(&[2, 0, 0], 1), (&[0, 1, 1], 3)]);
        let q = [poly(3, &[(&[1, 0, 0], 1)]), poly(3, &[(&[0, 1, 0], 2), (&[0, 0, 1], -1)]), poly(3, &[(&[0, 0, 1], 1)])];
        let raw: Vec<IntPoly> = q.iter().map(|c| c.mul(&g)).collect();
        let got = reduce_tuple(&raw, &[(0, 3)]).unwrap();
        assert!(verify(&q, &got, 0));
        assert_eq!(total_degree(&got[0]), 1);
    }

    #[test]
    fn reduced_input_is_returned() {
        let raw = [poly(2, &[(&[1, 0], 1)]), poly(2, &[(&[0, 1], 1)])];
        assert_eq!(reduce_tuple(&raw, &[(0, 2)]).unwrap(), raw.to_vec());
    }

    #[test]
    fn reconstructs_fractions() {
        let m = BigInt::from(1_000_003u64);
        let a = (BigInt::from(3) * BigInt::from(invm(7, Fp::new(1_000_003)))).mod_floor(&m);
        assert_eq!(rational_reconstruct(&a, &m), Some((BigInt::from(3), BigInt::from(7))));
    }
}
