use alloc::vec::Vec;

use super::poly::Polynomial;
use super::ratfun::RationalFunction;
use super::PolyError;

/// Determinant of the Jacobian matrix of `f` with respect to the coordinate
/// variables of its ring.
pub fn jacobian_det(f: &[RationalFunction]) -> Result<RationalFunction, PolyError> {
    let n = f.len();
    let ring = match f.first() {
        Some(r) => r.ring().clone(),
        None => return Err(PolyError::NotSquare { rows: 0, cols: 0 }),
    };
    if ring.coords() != n {
        return Err(PolyError::NotSquare { rows: n, cols: ring.coords() });
    }
    if f.iter().any(|r| r.ring() != &ring) {
        return Err(PolyError::RingMismatch);
    }
    // Row i of the Jacobian is N_ij / d_i^2 with N_ij = d_i dn_i/dx_j - n_i dd_i/dx_j.
    let mut rows: Vec<Vec<Polynomial>> = Vec::with_capacity(n);
    let mut scale = Polynomial::one(&ring);
    for r in f {
        let (num, den) = (r.numerator(), r.denominator());
        let mut row = Vec::with_capacity(n);
        if den.is_one() {
            for j in 0..n {
                row.push(num.partial_derivative(j)?);
            }
        } else {
            for j in 0..n {
                row.push(&(den * &num.partial_derivative(j)?) - &(num * &den.partial_derivative(j)?));
            }
            scale = &scale * &den.pow(2);
        }
        rows.push(row);
    }
    let d = determinant(&rows);
    RationalFunction::new(d, scale)
}

/// Determinant by expansion along rows with memoized column subsets.
pub fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    let ring = m[0][0].ring().clone();
    // minors[mask] = determinant of the last popcount(mask) rows on the columns in mask.
    let mut minors: Vec<Option<Polynomial>> = alloc::vec![None; 1 << n];
    minors[0] = Some(Polynomial::one(&ring));
    for mask in 1usize..(1 << n) {
        let k = mask.count_ones() as usize;
        let row = n - k;
        let mut acc = Polynomial::zero(&ring);
        let mut sign_pos = true;
        for col in 0..n {
            if mask & (1 << col) == 0 {
                continue;
            }
            let entry = &m[row][col];
            if !entry.is_zero() {
                let minor = minors[mask & !(1 << col)].as_ref().unwrap();
                if !minor.is_zero() {
                    let t = entry * minor;
                    acc = if sign_pos { &acc + &t } else { &acc - &t };
                }
            }
            sign_pos = !sign_pos;
        }
        minors[mask] = Some(acc);
    }
    minors[(1 << n) - 1].take().unwrap()
}
