use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::MapError;
use crate::exactpoly::Rational;

/// Square matrix over the rationals, row major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    n: usize,
    a: Vec<Rational>,
}

impl QMatrix {
    pub fn identity(n: usize) -> QMatrix {
        let mut a = vec![Rational::zero(); n * n];
        for i in 0..n {
            a[i * n + i] = Rational::one();
        }
        QMatrix { n, a }
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Result<QMatrix, MapError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(MapError::NotSquare);
        }
        Ok(QMatrix { n, a: rows.iter().flatten().cloned().collect() })
    }

    /// Integer entries; panics unless `rows` is square.
    pub fn from_i64(rows: &[&[i64]]) -> QMatrix {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        QMatrix { n, a: rows.iter().flat_map(|r| r.iter().map(|&v| Rational::from_integer(v.into()))).collect() }
    }

    pub fn diagonal(d: &[Rational]) -> QMatrix {
        let mut m = QMatrix::identity(d.len());
        for (i, v) in d.iter().enumerate() {
            m.a[i * d.len() + i] = v.clone();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.a[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.a.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == QMatrix::identity(self.n)
    }

    pub fn mul(&self, o: &QMatrix) -> QMatrix {
        assert_eq!(self.n, o.n, "matrix sizes differ");
        let n = self.n;
        let mut a = vec![Rational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let x = &self.a[i * n + k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    a[i * n + j] += x * &o.a[k * n + j];
                }
            }
        }
        QMatrix { n, a }
    }

    pub fn transpose(&self) -> QMatrix {
        let n = self.n;
        let mut a = self.a.clone();
        for i in 0..n {
            for j in 0..n {
                a[j * n + i] = self.a[i * n + j].clone();
            }
        }
        QMatrix { n, a }
    }

    /// Gaussian elimination.
    pub fn det(&self) -> Rational {
        let n = self.n;
        let mut m = self.a.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m[r * n + c].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                for j in 0..n {
                    m.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m[c * n + c].clone();
            det *= &piv;
            for r in c + 1..n {
                let f = &m[r * n + c] / &piv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = &f * &m[c * n + j];
                    m[r * n + j] -= v;
                }
            }
        }
        det
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<QMatrix, MapError> {
        let n = self.n;
        let mut m = self.a.clone();
        let mut inv = QMatrix::identity(n).a;
        for c in 0..n {
            let p = (c..n).find(|&r| !m[r * n + c].is_zero()).ok_or(MapError::SingularMatrix)?;
            if p != c {
                for j in 0..n {
                    m.swap(p * n + j, c * n + j);
                    inv.swap(p * n + j, c * n + j);
                }
            }
            let piv = m[c * n + c].recip();
            for j in 0..n {
                m[c * n + j] *= &piv;
                inv[c * n + j] *= &piv;
            }
            for r in 0..n {
                if r == c || m[r * n + c].is_zero() {
                    continue;
                }
                let f = m[r * n + c].clone();
                for j in 0..n {
                    let (u, v) = (&f * &m[c * n + j], &f * &inv[c * n + j]);
                    m[r * n + j] -= u;
                    inv[r * n + j] -= v;
                }
            }
        }
        Ok(QMatrix { n, a: inv })
    }

    /// `ᵗg⁻¹`.
    pub fn inverse_transpose(&self) -> Result<QMatrix, MapError> {
        Ok(self.inverse()?.transpose())
    }

    pub fn render(&self) -> String {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let e: Vec<String> = r.iter().map(|v| alloc::format!("{v}")).collect();
                alloc::format!("[{}]", e.join(", "))
            })
            .collect();
        alloc::format!("[{}]", rows.join(", "))
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Square integer matrix with overflow-checked arithmetic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    a: Vec<i64>,
}

/// One factor of a matrix word: the matrix and whether it is inverted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFactor {
    pub matrix: IntMatrix,
    pub inverse: bool,
}

impl MatrixFactor {
    pub fn plain(matrix: &IntMatrix) -> MatrixFactor {
        MatrixFactor { matrix: matrix.clone(), inverse: false }
    }

    pub fn inv(matrix: &IntMatrix) -> MatrixFactor {
        MatrixFactor { matrix: matrix.clone(), inverse: true }
    }
}

impl IntMatrix {
    pub fn identity(n: usize) -> IntMatrix {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        IntMatrix { n, a }
    }

    pub fn from_rows(rows: &[&[i64]]) -> Result<IntMatrix, MapError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(MapError::NotSquare);
        }
        Ok(IntMatrix { n, a: rows.iter().flat_map(|r| r.iter().copied()).collect() })
    }

    pub fn from_vecs(rows: &[Vec<i64>]) -> Result<IntMatrix, MapError> {
        let rows: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        IntMatrix::from_rows(&rows)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.a[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, o: &IntMatrix) -> Result<IntMatrix, MapError> {
        if self.n != o.n {
            return Err(MapError::ShapeMismatch);
        }
        let n = self.n;
        let mut a = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut s: i64 = 0;
                for k in 0..n {
                    let t = self.a[i * n + k].checked_mul(o.a[k * n + j]).ok_or(MapError::Overflow)?;
                    s = s.checked_add(t).ok_or(MapError::Overflow)?;
                }
                a[i * n + j] = s;
            }
        }
        Ok(IntMatrix { n, a })
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.n;
        let mut a = self.a.clone();
        for i in 0..n {
            for j in 0..n {
                a[j * n + i] = self.a[i * n + j];
            }
        }
        IntMatrix { n, a }
    }

    /// Exact determinant (Bareiss fraction-free elimination).
    pub fn det(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<BigInt> = self.a.iter().map(|&v| BigInt::from(v)).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    m.swap(p * n + j, k * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j]) / &prev;
                    m[i * n + j] = v;
                }
            }
            prev = m[k * n + k].clone();
        }
        sign * &m[(n - 1) * n + (n - 1)]
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    /// Inverse of a matrix with determinant ±1, computed as the adjugate
    /// times the determinant.
    pub fn inverse(&self) -> Result<IntMatrix, MapError> {
        let d = self.det();
        if !d.abs().is_one() {
            return Err(MapError::NotUnimodular);
        }
        let n = self.n;
        let mut a = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(j, i).det();
                let sign = if (i + j) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                a[i * n + j] = (sign * minor * &d).to_i64().ok_or(MapError::Overflow)?;
            }
        }
        Ok(IntMatrix { n, a })
    }

    fn minor(&self, r: usize, c: usize) -> IntMatrix {
        let n = self.n;
        let mut a = Vec::with_capacity((n - 1) * (n - 1));
        for i in (0..n).filter(|&i| i != r) {
            for j in (0..n).filter(|&j| j != c) {
                a.push(self.a[i * n + j]);
            }
        }
        IntMatrix { n: n - 1, a }
    }

    pub fn pow(&self, k: i32) -> Result<IntMatrix, MapError> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = IntMatrix::identity(self.n);
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.n)
    }

    pub fn to_qmatrix(&self) -> QMatrix {
        let rows: Vec<Vec<Rational>> =
            self.rows().iter().map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect()).collect();
        QMatrix::from_rows(&rows).expect("square")
    }

    pub fn render(&self) -> String {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let e: Vec<String> = r.iter().map(|v| alloc::format!("{v}")).collect();
                alloc::format!("[{}]", e.join(", "))
            })
            .collect();
        alloc::format!("[{}]", rows.join(", "))
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Exact product of a word of integer matrices, left to right.
pub fn matrix_group_check(word: &[MatrixFactor]) -> Result<IntMatrix, MapError> {
    let n = word.first().map_or(0, |f| f.matrix.size());
    let mut acc = IntMatrix::identity(n);
    for f in word {
        let m = if f.inverse { f.matrix.inverse()? } else { f.matrix.clone() };
        acc = acc.mul(&m)?;
    }
    Ok(acc)
}
