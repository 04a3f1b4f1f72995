//! Map expressions: `expr := term {"." term}`, `term := atom ["^" int]`.
//!
//! Atoms are registry names, function calls, map literals in brackets or
//! parentheses, or a parenthesized expression. Literal bodies are kept as
//! text and handed to the core literal parsers at evaluation time.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("at column {}: {message}", .position + 1)]
pub struct SyntaxError {
    /// Byte offset into the source.
    pub position: usize,
    pub message: String,
}

impl SyntaxError {
    fn new(position: usize, message: impl Into<String>) -> SyntaxError {
        SyntaxError { position, message: message.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Name { name: String, pos: usize },
    Call { name: String, args: Args, pos: usize },
    /// `[…]`, `([…], […])` or `(r1, …, rn)`.
    Literal { text: String, pos: usize },
    /// `a . b . c`, in source order.
    Compose(Vec<Expr>),
    Power { base: Box<Expr>, exp: i32 },
    Group(Box<Expr>),
}

/// Arguments, shaped by the function's signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Args {
    Map(Box<Expr>),
    IndexedMap(u32, Box<Expr>),
    /// Rows split at `;`, entries at `,`; entries stay text.
    Grid(Vec<Vec<String>>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Signature {
    Map,
    IndexedMap,
    Grid,
}

/// Functions understood by the parser, with a description each.
pub const FUNCTIONS: &[(&str, &str)] = &[
    ("phi", "phi(w): the word w acting on conics"),
    ("phi_dual", "phi_dual(w): the dual action on conics"),
    ("chi1", "chi1(w): action on the second factor after straightening psi1"),
    ("chi2", "chi2(w): same for psi2"),
    ("psi1", "psi1(w): phi(w) moved to P2 x P2"),
    ("psi2", "psi2(w): phi_dual(w) moved to P2 x P2"),
    ("psil", "psil(l, f): (f, J(f)^-l x_{n+1}) for f a map of affine n-space"),
    ("psib", "psib(f): f with its action on tangent slopes"),
    ("mat", "mat(a, b, c; d, e, f; g, h, i): linear map by rows"),
    ("mono", "mono(a, b; c, d): monomial map x_i -> prod x_j^m_ij"),
    ("crossratio", "crossratio(p0, p1, p2, p3; q0, q1, q2, q3): cross ratio of the line pq"),
];

fn signature(name: &str) -> Option<Signature> {
    Some(match name {
        "phi" | "phi_dual" | "chi1" | "chi2" | "psi1" | "psi2" | "psib" => Signature::Map,
        "psil" => Signature::IndexedMap,
        "mat" | "mono" | "crossratio" => Signature::Grid,
        _ => return None,
    })
}

pub fn parse(src: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser { src, pos: 0, base: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < src.len() {
        return Err(SyntaxError::new(p.pos, format!("unexpected `{}`", p.rest_char())));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    /// Offset of `src` within the original input.
    base: usize,
}

impl Parser<'_> {
    fn at(&self) -> usize {
        self.base + self.pos
    }

    fn err(&self, message: impl Into<String>) -> SyntaxError {
        SyntaxError::new(self.at(), message)
    }

    fn rest_char(&self) -> char {
        self.src[self.pos..].chars().next().unwrap_or(' ')
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src.as_bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.as_bytes().get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some(b'.') {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 { terms.pop().expect("one term") } else { Expr::Compose(terms) })
    }

    fn term(&mut self) -> Result<Expr, SyntaxError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        if self.src.as_bytes().get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.src.as_bytes().get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let text = &self.src[start..self.pos];
        let exp = text.parse::<i32>().map_err(|_| SyntaxError::new(self.base + start, "expected an integer exponent"))?;
        Ok(Expr::Power { base: Box::new(base), exp })
    }

    /// Index just past the bracket matching the one at `self.pos`.
    fn matching(&self) -> Result<usize, SyntaxError> {
        let bytes = self.src.as_bytes();
        let mut depth = 0i32;
        for (i, &b) in bytes.iter().enumerate().skip(self.pos) {
            match b {
                b'(' | b'[' => depth += 1,
                b')' | b']' => {
                    depth -= 1;
                    if depth == 0 {
                        return Ok(i + 1);
                    }
                }
                _ => {}
            }
        }
        Err(self.err("unbalanced bracket"))
    }

    fn atom(&mut self) -> Result<Expr, SyntaxError> {
        self.skip_ws();
        let pos = self.at();
        match self.peek() {
            Some(b'[') => {
                let end = self.matching()?;
                let text = self.src[self.pos..end].to_string();
                self.pos = end;
                Ok(Expr::Literal { text, pos })
            }
            Some(b'(') => {
                let end = self.matching()?;
                let inner = &self.src[self.pos + 1..end - 1];
                let start = self.pos;
                self.pos = end;
                if split_top(inner, b',').len() > 1 {
                    return Ok(Expr::Literal { text: self.src[start..end].to_string(), pos });
                }
                let mut sub = Parser { src: inner, pos: 0, base: self.base + start + 1 };
                let e = sub.expr()?;
                sub.skip_ws();
                if sub.pos < inner.len() {
                    return Err(sub.err(format!("unexpected `{}`", sub.rest_char())));
                }
                Ok(Expr::Group(Box::new(e)))
            }
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                let start = self.pos;
                while self.src.as_bytes().get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_') {
                    self.pos += 1;
                }
                let name = self.src[start..self.pos].to_string();
                if self.peek() != Some(b'(') {
                    return Ok(Expr::Name { name, pos });
                }
                let sig = signature(&name).ok_or_else(|| SyntaxError::new(pos, format!("unknown function `{name}`")))?;
                let end = self.matching()?;
                let inner_base = self.base + self.pos + 1;
                let inner = &self.src[self.pos + 1..end - 1];
                self.pos = end;
                let args = call_args(sig, inner, inner_base, pos)?;
                Ok(Expr::Call { name, args, pos })
            }
            Some(_) => Err(self.err(format!("expected a map, found `{}`", self.rest_char()))),
            None => Err(self.err("expected a map, found end of input")),
        }
    }
}

/// Pieces of `s` between top-level occurrences of `sep`, with offsets.
fn split_top(s: &str, sep: u8) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, b) in s.bytes().enumerate() {
        match b {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            _ if b == sep && depth == 0 => {
                out.push((start, &s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &s[start..]));
    out
}

fn sub_expr(s: &str, base: usize) -> Result<Expr, SyntaxError> {
    let mut p = Parser { src: s, pos: 0, base };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < s.len() {
        return Err(p.err(format!("unexpected `{}`", p.rest_char())));
    }
    Ok(e)
}

fn call_args(sig: Signature, inner: &str, base: usize, call: usize) -> Result<Args, SyntaxError> {
    match sig {
        Signature::Map => Ok(Args::Map(Box::new(sub_expr(inner, base)?))),
        Signature::IndexedMap => {
            let parts = split_top(inner, b',');
            if parts.len() != 2 {
                return Err(SyntaxError::new(call, "expected two arguments"));
            }
            let (o, l) = parts[0];
            let l = l.trim().parse::<u32>().map_err(|_| SyntaxError::new(base + o, "expected a non-negative integer"))?;
            let (o, m) = parts[1];
            Ok(Args::IndexedMap(l, Box::new(sub_expr(m, base + o)?)))
        }
        Signature::Grid => {
            let rows: Vec<Vec<String>> = split_top(inner, b';')
                .into_iter()
                .map(|(_, row)| split_top(row, b',').into_iter().map(|(_, e)| e.trim().to_string()).collect())
                .collect();
            if rows.iter().flatten().any(String::is_empty) {
                return Err(SyntaxError::new(call, "empty entry"));
            }
            Ok(Args::Grid(rows))
        }
    }
}

impl Expr {
    /// Source position of the leftmost atom.
    pub fn position(&self) -> usize {
        match self {
            Expr::Name { pos, .. } | Expr::Call { pos, .. } | Expr::Literal { pos, .. } => *pos,
            Expr::Compose(ts) => ts[0].position(),
            Expr::Power { base, .. } => base.position(),
            Expr::Group(e) => e.position(),
        }
    }

    /// Canonical text; parses back to the same tree up to positions.
    pub fn render(&self) -> String {
        match self {
            Expr::Name { name, .. } => name.clone(),
            Expr::Literal { text, .. } => text.trim().to_string(),
            Expr::Call { name, args, .. } => {
                let inner = match args {
                    Args::Map(e) => e.render(),
                    Args::IndexedMap(l, e) => format!("{l}, {}", e.render()),
                    Args::Grid(rows) => rows.iter().map(|r| r.join(", ")).collect::<Vec<_>>().join("; "),
                };
                format!("{name}({inner})")
            }
            Expr::Compose(ts) => ts.iter().map(Expr::render).collect::<Vec<_>>().join(" . "),
            Expr::Power { base, exp } => format!("{}^{exp}", base.render()),
            Expr::Group(e) => format!("({})", e.render()),
        }
    }

    /// The same tree with every position set to zero.
    pub fn strip_positions(&self) -> Expr {
        match self {
            Expr::Name { name, .. } => Expr::Name { name: name.clone(), pos: 0 },
            Expr::Literal { text, .. } => Expr::Literal { text: text.trim().to_string(), pos: 0 },
            Expr::Call { name, args, .. } => {
                let args = match args {
                    Args::Map(e) => Args::Map(Box::new(e.strip_positions())),
                    Args::IndexedMap(l, e) => Args::IndexedMap(*l, Box::new(e.strip_positions())),
                    Args::Grid(g) => Args::Grid(g.clone()),
                };
                Expr::Call { name: name.clone(), args, pos: 0 }
            }
            Expr::Compose(ts) => Expr::Compose(ts.iter().map(Expr::strip_positions).collect()),
            Expr::Power { base, exp } => Expr::Power { base: Box::new(base.strip_positions()), exp: *exp },
            Expr::Group(e) => Expr::Group(Box::new(e.strip_positions())),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
