//! Map literals: `[p0 : … : pm]`, `([…], […])` and `(r1, …, rn)`.

use alloc::string::String;
use alloc::vec::Vec;

use super::affine::AffineMap;
use super::multi::MultiProjectiveMap;
use super::projective::ProjectiveMap;
use super::MapError;
use crate::exactpoly::{parse_polynomial, parse_rational_function, ParseError, Polynomial, Ring};

/// Splits at top-level occurrences of `sep`, returning pieces with their
/// byte offsets.
fn split_top(s: &str, sep: u8, base: usize) -> Result<Vec<(usize, &str)>, ParseError> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, b) in s.bytes().enumerate() {
        match b {
            b'(' | b'[' => depth += 1,
            b')' | b']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(ParseError::new(base + i, "unbalanced bracket"));
                }
            }
            _ if b == sep && depth == 0 => {
                out.push((base + start, &s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(ParseError::new(base + s.len(), "unbalanced bracket"));
    }
    out.push((base + start, &s[start..]));
    Ok(out)
}

/// Strips one pair of enclosing brackets.
fn strip(s: &str, open: char, close: char, base: usize) -> Result<(usize, &str), ParseError> {
    let lead = s.len() - s.trim_start().len();
    let t = s.trim();
    if t.len() < 2 || !t.starts_with(open) || !t.ends_with(close) {
        return Err(ParseError::new(base + lead, alloc::format!("expected `{open}…{close}`")));
    }
    let inner = &t[1..t.len() - 1];
    // Rejects `[a] : [b]`, where the outer brackets do not match each other.
    split_top(inner, b':', base + lead + 1)?;
    Ok((base + lead + 1, inner))
}

fn relocate(e: ParseError, offset: usize) -> ParseError {
    ParseError::new(e.position + offset, e.message)
}

fn block(ring: &Ring, s: &str, base: usize) -> Result<Vec<Polynomial>, ParseError> {
    let (b, inner) = strip(s, '[', ']', base)?;
    split_top(inner, b':', b)?
        .into_iter()
        .map(|(o, piece)| parse_polynomial(ring, piece).map_err(|e| relocate(e, o)))
        .collect()
}

/// `[p0 : … : pm]` with polynomials in the coordinates of `ring`.
pub fn parse_projective_map(ring: &Ring, s: &str) -> Result<ProjectiveMap, MapError> {
    ProjectiveMap::new(ring, block(ring, s, 0)?)
}

/// `([…], […], …)` for a source split into factors of the given sizes. A
/// bare `[…]` is accepted as a single target factor.
pub fn parse_multi_map(ring: &Ring, source: &[usize], s: &str) -> Result<MultiProjectiveMap, MapError> {
    let t = s.trim();
    let blocks = if t.starts_with('[') {
        alloc::vec![block(ring, s, 0)?]
    } else {
        let (b, inner) = strip(s, '(', ')', 0)?;
        split_top(inner, b',', b)?
            .into_iter()
            .map(|(o, piece)| block(ring, piece, o))
            .collect::<Result<Vec<_>, _>>()?
    };
    MultiProjectiveMap::new(ring, source, blocks)
}

/// `(r1, …, rn)` with rational functions in the coordinates of `ring`.
pub fn parse_affine_map(ring: &Ring, s: &str) -> Result<AffineMap, MapError> {
    let (b, inner) = strip(s, '(', ')', 0)?;
    let comps = split_top(inner, b',', b)?
        .into_iter()
        .map(|(o, piece)| parse_rational_function(ring, piece).map_err(|e| relocate(e, o)))
        .collect::<Result<Vec<_>, _>>()?;
    AffineMap::new(ring, comps)
}

/// Which of the three literal forms `s` looks like.
pub fn literal_kind(s: &str) -> &'static str {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).take(2).collect();
    if t.starts_with('[') {
        "projective"
    } else if t == "([" {
        "multi-projective"
    } else {
        "affine"
    }
}
