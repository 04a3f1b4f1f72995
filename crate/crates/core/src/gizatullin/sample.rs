//! Seeded random words and matrices for the sampled checks.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::maps::{g0_matrix, h_matrix, tau1_matrix, tau2_matrix};
use super::word::Cr2Word;
use crate::birmap::{IntMatrix, QMatrix};
use crate::exactpoly::q;

/// Deterministic generator for one suite.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    pub fn nonzero(&mut self, bound: i64) -> i64 {
        loop {
            let v = self.int(-bound, bound);
            if v != 0 {
                return v;
            }
        }
    }

    /// Invertible integer matrix with entries in `[-bound, bound]`.
    pub fn matrix(&mut self, bound: i64) -> QMatrix {
        loop {
            let rows: Vec<Vec<i64>> = (0..3).map(|_| (0..3).map(|_| self.int(-bound, bound)).collect()).collect();
            let r: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let m = QMatrix::from_i64(&r);
            if m.det() != q(0) {
                return m;
            }
        }
    }

    /// Product of a few elementary matrices and a signed permutation, so
    /// the determinant is ±1.
    pub fn unimodular(&mut self) -> IntMatrix {
        let mut m = IntMatrix::identity(3);
        for _ in 0..3 {
            let (i, j) = (self.int(0, 2) as usize, self.int(0, 2) as usize);
            if i == j {
                continue;
            }
            let mut rows = IntMatrix::identity(3).rows();
            rows[i][j] = self.nonzero(2);
            m = m.mul(&IntMatrix::from_vecs(&rows).expect("square")).expect("small entries");
        }
        let mut p = [0usize, 1, 2];
        for k in (1..3).rev() {
            p.swap(k, self.int(0, k as i64) as usize);
        }
        let mut rows = alloc::vec![alloc::vec![0i64; 3]; 3];
        for (i, &j) in p.iter().enumerate() {
            rows[i][j] = if self.int(0, 1) == 0 { 1 } else { -1 };
        }
        m.mul(&IntMatrix::from_vecs(&rows).expect("square")).expect("small entries")
    }

    pub fn diagonal(&mut self) -> QMatrix {
        let d = [self.nonzero(5), self.nonzero(5), self.nonzero(5)];
        QMatrix::diagonal(&d.map(q))
    }

    /// A linear letter from a mix of the named matrices, diagonals and
    /// sparse elementary matrices; dense matrices between `σ` letters make
    /// the images on conics needlessly large.
    pub fn linear(&mut self) -> Cr2Word {
        let m = match self.int(0, 6) {
            0 => h_matrix(),
            1 => g0_matrix(),
            2 => tau1_matrix(),
            3 => tau2_matrix(),
            4 => self.diagonal(),
            _ => self.unimodular().to_qmatrix(),
        };
        Cr2Word::linear(&m).expect("invertible")
    }

    /// A dense letter, so it does not commute past `σ` and moves its
    /// base points off the coordinate points.
    pub fn mixing(&mut self) -> Cr2Word {
        loop {
            let m = self.matrix(2);
            if (0..3).all(|i| (0..3).all(|j| *m.get(i, j) != q(0))) {
                return Cr2Word::linear(&m).expect("invertible");
            }
        }
    }

    /// Word with at most `len` letters and at most `max_sigma` of them `σ`.
    /// No two `σ` are adjacent and each neighbour of a `σ` is a mixing
    /// letter, so the word rarely collapses.
    pub fn word(&mut self, len: usize, max_sigma: usize) -> Cr2Word {
        let n = self.int(1, len as i64) as usize;
        let mut is_sigma = alloc::vec![false; n];
        let mut count = 0;
        for i in 0..n {
            if count < max_sigma && (i == 0 || !is_sigma[i - 1]) && self.int(0, 2) > 0 {
                is_sigma[i] = true;
                count += 1;
            }
        }
        let mut w = Cr2Word::identity();
        for i in 0..n {
            let next_to_sigma = (i > 0 && is_sigma[i - 1]) || (i + 1 < n && is_sigma[i + 1]);
            let letter = if is_sigma[i] {
                Cr2Word::sigma()
            } else if next_to_sigma {
                self.mixing()
            } else {
                self.linear()
            };
            w = w.then(&letter);
        }
        w
    }

    /// Word of linear letters only.
    pub fn linear_word(&mut self, len: usize) -> Cr2Word {
        self.word(len, 0)
    }

    /// Affine-linear map of the chart `x0 = 1`: first row `(1, 0, 0)`.
    pub fn affine_linear(&mut self) -> QMatrix {
        loop {
            let mut rows = alloc::vec![alloc::vec![q(1), q(0), q(0)]];
            for _ in 0..2 {
                rows.push((0..3).map(|_| q(self.int(-3, 3))).collect());
            }
            let m = QMatrix::from_rows(&rows).expect("square");
            if m.det() != q(0) {
                return m;
            }
        }
    }
}
