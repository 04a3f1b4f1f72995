use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::birmap::{MapError, PolyMatrix, ProjectiveMap, QMatrix};
use crate::exactpoly::Ring;

/// Generator of the plane Cremona group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// Invertible 3×3 matrix, entries possibly in symbolic constants.
    Linear(PolyMatrix),
    /// `[x1*x2 : x0*x2 : x0*x1]`.
    Sigma,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub generator: Generator,
    pub inverse: bool,
}

impl Token {
    /// The matrix this token acts by, up to a scalar; `None` for `σ`.
    pub fn effective_matrix(&self) -> Option<PolyMatrix> {
        match (&self.generator, self.inverse) {
            (Generator::Sigma, _) => None,
            (Generator::Linear(m), false) => Some(m.clone()),
            (Generator::Linear(m), true) => Some(m.adjugate()),
        }
    }
}

/// Word in linear maps and `σ`, read as a composition: the leftmost letter
/// is applied last.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Cr2Word {
    tokens: Vec<Token>,
}

impl Cr2Word {
    pub fn identity() -> Cr2Word {
        Cr2Word { tokens: Vec::new() }
    }

    pub fn sigma() -> Cr2Word {
        Cr2Word { tokens: alloc::vec![Token { generator: Generator::Sigma, inverse: false }] }
    }

    pub fn linear(m: &QMatrix) -> Result<Cr2Word, MapError> {
        Cr2Word::symbolic(PolyMatrix::from_qmatrix(m))
    }

    pub fn symbolic(m: PolyMatrix) -> Result<Cr2Word, MapError> {
        if m.size() != 3 {
            return Err(MapError::ShapeMismatch);
        }
        if m.is_singular() {
            return Err(MapError::SingularMatrix);
        }
        Ok(Cr2Word { tokens: alloc::vec![Token { generator: Generator::Linear(m), inverse: false }] })
    }

    /// Validates every matrix and drops inverse flags on `σ`.
    pub fn from_tokens(tokens: Vec<Token>) -> Result<Cr2Word, MapError> {
        let mut out = Vec::with_capacity(tokens.len());
        for t in tokens {
            if let Generator::Linear(m) = &t.generator {
                if m.size() != 3 {
                    return Err(MapError::ShapeMismatch);
                }
                if m.is_singular() {
                    return Err(MapError::SingularMatrix);
                }
            }
            let inverse = t.inverse && matches!(t.generator, Generator::Linear(_));
            out.push(Token { generator: t.generator, inverse });
        }
        Ok(Cr2Word { tokens: out })
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// `self · o`, so `o` acts first.
    pub fn then(&self, o: &Cr2Word) -> Cr2Word {
        let mut tokens = self.tokens.clone();
        tokens.extend(o.tokens.iter().cloned());
        Cr2Word { tokens }
    }

    /// Product of several words.
    pub fn product(words: &[&Cr2Word]) -> Cr2Word {
        let mut tokens = Vec::new();
        for w in words {
            tokens.extend(w.tokens.iter().cloned());
        }
        Cr2Word { tokens }
    }

    pub fn inverse(&self) -> Cr2Word {
        let tokens = self
            .tokens
            .iter()
            .rev()
            .map(|t| match &t.generator {
                Generator::Sigma => t.clone(),
                Generator::Linear(_) => Token { generator: t.generator.clone(), inverse: !t.inverse },
            })
            .collect();
        Cr2Word { tokens }
    }

    /// Negative exponents use the inverse word.
    pub fn pow(&self, k: i32) -> Cr2Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut tokens = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            tokens.extend(base.tokens.iter().cloned());
        }
        Cr2Word { tokens }
    }

    /// Merges adjacent linear letters and cancels `σσ`.
    pub fn normalize(&self) -> Cr2Word {
        let mut out: Vec<Token> = Vec::new();
        for t in &self.tokens {
            let m = t.effective_matrix();
            match (out.last().and_then(|l| l.effective_matrix()), m) {
                (Some(prev), Some(cur)) => {
                    let merged = prev.mul(&cur).expect("3x3 matrices");
                    out.pop();
                    if !is_scalar(&merged) {
                        out.push(Token { generator: Generator::Linear(merged), inverse: false });
                    }
                }
                (None, None) if !out.is_empty() => {
                    out.pop();
                }
                (_, Some(cur)) => {
                    if !is_scalar(&cur) {
                        out.push(Token { generator: Generator::Linear(cur), inverse: false });
                    }
                }
                (_, None) => out.push(t.clone()),
            }
        }
        Cr2Word { tokens: out }
    }

    /// Symbolic constants used by the matrices, joined.
    pub fn constants(&self) -> Ring {
        let mut ring = Ring::constants(&[] as &[&str]);
        for t in &self.tokens {
            if let Generator::Linear(m) = &t.generator {
                ring = ring.with_constants_of(m.ring());
            }
        }
        ring
    }

    /// The plane map the word stands for, reduced.
    pub fn to_map(&self) -> Result<ProjectiveMap, MapError> {
        let ring = Ring::indexed("x", 3).with_constants_of(&self.constants());
        evaluate(self, &ring, |t, r| match t.effective_matrix() {
            None => Ok(sigma_on(r)),
            Some(m) => m.to_map_on(r),
        })
    }

    pub fn render(&self) -> String {
        if self.tokens.is_empty() {
            return "id".into();
        }
        let parts: Vec<String> = self
            .tokens
            .iter()
            .map(|t| match (&t.generator, t.inverse) {
                (Generator::Sigma, _) => "sigma".into(),
                (Generator::Linear(m), false) => alloc::format!("{m}"),
                (Generator::Linear(m), true) => alloc::format!("{m}^-1"),
            })
            .collect();
        parts.join(" . ")
    }
}

impl fmt::Display for Cr2Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn is_scalar(m: &PolyMatrix) -> bool {
    let n = m.size();
    (0..n).all(|i| (0..n).all(|j| if i == j { m.get(i, i) == m.get(0, 0) } else { m.get(i, j).is_zero() }))
}

pub(crate) fn sigma_on(ring: &Ring) -> ProjectiveMap {
    let x = |i| crate::exactpoly::Polynomial::var(ring, i);
    ProjectiveMap::new(ring, alloc::vec![&x(1) * &x(2), &x(0) * &x(2), &x(0) * &x(1)]).expect("quadratic")
}

/// Composes the images of the letters, rightmost first, in `ring`.
pub(crate) fn evaluate<F>(w: &Cr2Word, ring: &Ring, image: F) -> Result<ProjectiveMap, MapError>
where
    F: Fn(&Token, &Ring) -> Result<ProjectiveMap, MapError>,
{
    let mut acc = ProjectiveMap::identity_on(ring);
    for t in w.tokens.iter().rev() {
        acc = image(t, ring)?.compose(&acc)?;
    }
    Ok(acc)
}
