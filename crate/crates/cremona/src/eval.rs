//! Elaboration of parsed expressions into maps.

use cremona_core::birmap::{
    monomial_map, parse_affine_map, parse_multi_map, parse_projective_map, AffineMap, IntMatrix, MapError,
    MultiProjectiveMap, PolyMatrix, ProjectiveMap, QMatrix,
};
use cremona_core::codim1::{cross_ratio, psi_b, psi_l, LineInP3};
use cremona_core::exactpoly::{parse_polynomial, Polynomial, Rational, RationalFunction, Ring};
use cremona_core::gizatullin::{
    a_prime_inv, chi, named, phi, phi_dual, projection_a, projection_a_inv, psi, rho, rho_inv, sigma, Cr2Word, Named,
};
use cremona_core::volforms::{omega, TopForm};

use crate::expr::{Args, Expr, SyntaxError};

#[derive(Debug, thiserror::Error)]
pub enum EvalError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("at column {}: {message}", .position + 1)]
    Type { position: usize, message: String },
    #[error("at column {}: {source}", .position + 1)]
    Map { position: usize, source: MapError },
}

fn type_error(position: usize, message: impl Into<String>) -> EvalError {
    EvalError::Type { position, message: message.into() }
}

trait At<T> {
    fn at(self, position: usize) -> Result<T, EvalError>;
}

impl<T, E: Into<MapError>> At<T> for Result<T, E> {
    fn at(self, position: usize) -> Result<T, EvalError> {
        self.map_err(|e| EvalError::Map { position, source: e.into() })
    }
}

/// What an expression evaluates to.
#[derive(Clone, Debug)]
pub enum Value {
    /// Word in linear maps and `σ`; kept symbolic until needed.
    Word(Cr2Word),
    Proj(ProjectiveMap),
    Multi(MultiProjectiveMap),
    Affine(AffineMap),
    Scalar(RationalFunction),
    Form(TopForm),
}

impl Value {
    pub fn space(&self) -> String {
        match self {
            Value::Word(_) => "self-map of P^2".into(),
            Value::Proj(m) => format!("map P^{} -> P^{}", m.source_dim(), m.target_dim()),
            Value::Multi(m) => {
                let src: Vec<String> = m.source_blocks().iter().map(|n| format!("P^{}", n - 1)).collect();
                let tgt: Vec<String> = m.target_blocks().iter().map(|n| format!("P^{}", n - 1)).collect();
                format!("map {} -> {}", src.join(" x "), tgt.join(" x "))
            }
            Value::Affine(m) => format!("map A^{} -> A^{}", m.source_dim(), m.dim()),
            Value::Scalar(_) => "scalar".into(),
            Value::Form(_) => "differential form".into(),
        }
    }

    /// Projective map, with words evaluated.
    pub fn to_projective(&self) -> Result<Option<ProjectiveMap>, MapError> {
        Ok(match self {
            Value::Word(w) => Some(w.to_map()?),
            Value::Proj(m) => Some(m.clone()),
            _ => None,
        })
    }

    pub fn render(&self) -> Result<String, MapError> {
        Ok(match self {
            Value::Word(w) => w.to_map()?.render(),
            Value::Proj(m) => m.render(),
            Value::Multi(m) => m.render(),
            Value::Affine(m) => m.render(),
            Value::Scalar(r) => format!("{r}"),
            Value::Form(f) => f.render(),
        })
    }

    /// Equality of maps up to a common scalar; words compare as maps.
    pub fn same_map(&self, o: &Value) -> Result<bool, MapError> {
        if let (Some(a), Some(b)) = (self.to_projective()?, o.to_projective()?) {
            return a.equal_up_to_scalar(&b);
        }
        Ok(match (self, o) {
            (Value::Multi(a), Value::Multi(b)) => a.equal_up_to_scalar(b)?,
            (Value::Affine(a), Value::Affine(b)) => a.equal(b)?,
            (Value::Scalar(a), Value::Scalar(b)) => a == b,
            (Value::Form(a), Value::Form(b)) => a.equal(b)?,
            _ => false,
        })
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EvalOptions {
    /// Read `a . b` as "a, then b".
    pub pipeline: bool,
}

pub fn evaluate(e: &Expr, opts: EvalOptions) -> Result<Value, EvalError> {
    Evaluator { opts }.eval(e)
}

struct Evaluator {
    opts: EvalOptions,
}

impl Evaluator {
    fn eval(&self, e: &Expr) -> Result<Value, EvalError> {
        match e {
            Expr::Name { name, pos } => lookup(name, *pos),
            Expr::Literal { text, pos } => literal(text, *pos),
            Expr::Group(inner) => self.eval(inner),
            Expr::Call { name, args, pos } => self.call(name, args, *pos),
            Expr::Compose(terms) => {
                let mut ordered: Vec<&Expr> = terms.iter().collect();
                if self.opts.pipeline {
                    ordered.reverse();
                }
                let mut acc = self.eval(ordered[0])?;
                for t in &ordered[1..] {
                    acc = compose(acc, self.eval(t)?, t.position())?;
                }
                Ok(acc)
            }
            Expr::Power { base, exp } => {
                if *exp < 0 {
                    let inv = self.inverse(base)?;
                    return power(inv, exp.unsigned_abs(), base.position());
                }
                power(self.eval(base)?, *exp as u32, base.position())
            }
        }
    }

    /// Constructive inverse: words invert letter by letter, registry pairs
    /// and involutions are looked up, calls invert their argument.
    fn inverse(&self, e: &Expr) -> Result<Value, EvalError> {
        let pos = e.position();
        match e {
            Expr::Group(inner) => self.inverse(inner),
            Expr::Compose(terms) => {
                let mut acc: Option<Value> = None;
                for t in terms.iter().rev() {
                    let inv = self.inverse(t)?;
                    acc = Some(match acc {
                        None => inv,
                        Some(a) if self.opts.pipeline => compose(inv, a, t.position())?,
                        Some(a) => compose(a, inv, t.position())?,
                    });
                }
                Ok(acc.expect("nonempty composition"))
            }
            Expr::Power { base, exp } => {
                if *exp < 0 {
                    return power(self.eval(base)?, exp.unsigned_abs(), pos);
                }
                power(self.inverse(base)?, *exp as u32, pos)
            }
            Expr::Name { name, .. } => match name.as_str() {
                "A" => Ok(Value::Multi(projection_a_inv())),
                "Ainv" => Ok(Value::Multi(projection_a())),
                "rho" => Ok(Value::Multi(rho_inv())),
                "rhoinv" => Ok(Value::Multi(rho())),
                "Aprime" => Ok(Value::Proj(a_prime_inv())),
                "ad" | "naive" => lookup(name, pos),
                _ => match lookup(name, pos)? {
                    Value::Word(w) => Ok(Value::Word(w.inverse())),
                    v => Err(type_error(pos, format!("`{name}` ({}) has no constructive inverse", v.space()))),
                },
            },
            Expr::Call { name, args, .. } => match (name.as_str(), args) {
                ("mono", Args::Grid(rows)) => {
                    let m = int_matrix(rows, pos)?.inverse().at(pos)?;
                    Ok(Value::Affine(monomial_map(&m).at(pos)?))
                }
                ("phi" | "phi_dual" | "chi1" | "chi2" | "psi1" | "psi2", Args::Map(arg)) => {
                    let w = self.word(arg)?.inverse();
                    apply_word_function(name, &w, pos)
                }
                ("psil", Args::IndexedMap(l, arg)) => {
                    let f = affine_of(self.inverse(arg)?, arg.position())?;
                    Ok(Value::Affine(psi_l(*l, &f).at(pos)?))
                }
                ("psib", Args::Map(arg)) => {
                    let f = affine_of(self.inverse(arg)?, arg.position())?;
                    Ok(Value::Affine(psi_b(&f).at(pos)?))
                }
                _ => match self.call(name, args, pos)? {
                    Value::Word(w) => Ok(Value::Word(w.inverse())),
                    v => Err(type_error(pos, format!("`{name}(…)` ({}) has no constructive inverse", v.space()))),
                },
            },
            Expr::Literal { .. } => match self.eval(e)? {
                Value::Word(w) => Ok(Value::Word(w.inverse())),
                v => match as_word(&v) {
                    Some(w) => Ok(Value::Word(w.inverse())),
                    None => Err(type_error(pos, format!("literal ({}) has no constructive inverse", v.space()))),
                },
            },
        }
    }

    fn word(&self, e: &Expr) -> Result<Cr2Word, EvalError> {
        let v = self.eval(e)?;
        as_word(&v).ok_or_else(|| {
            type_error(e.position(), format!("expected a word in linear maps and sigma, found a {}", v.space()))
        })
    }

    fn call(&self, name: &str, args: &Args, pos: usize) -> Result<Value, EvalError> {
        match (name, args) {
            ("phi" | "phi_dual" | "chi1" | "chi2" | "psi1" | "psi2", Args::Map(arg)) => {
                let w = self.word(arg)?;
                apply_word_function(name, &w, pos)
            }
            ("psil", Args::IndexedMap(l, arg)) => {
                let f = affine_of(self.eval(arg)?, arg.position())?;
                Ok(Value::Affine(psi_l(*l, &f).at(pos)?))
            }
            ("psib", Args::Map(arg)) => {
                let f = affine_of(self.eval(arg)?, arg.position())?;
                Ok(Value::Affine(psi_b(&f).at(pos)?))
            }
            ("mat", Args::Grid(rows)) => matrix_value(rows, pos),
            ("mono", Args::Grid(rows)) => Ok(Value::Affine(monomial_map(&int_matrix(rows, pos)?).at(pos)?)),
            ("crossratio", Args::Grid(rows)) => crossratio_value(rows, pos),
            _ => Err(type_error(pos, format!("bad arguments to `{name}`"))),
        }
    }
}

fn apply_word_function(name: &str, w: &Cr2Word, pos: usize) -> Result<Value, EvalError> {
    Ok(match name {
        "phi" => Value::Proj(phi(w).at(pos)?),
        "phi_dual" => Value::Proj(phi_dual(w).at(pos)?),
        "chi1" => Value::Proj(chi(1, w).at(pos)?),
        "chi2" => Value::Proj(chi(2, w).at(pos)?),
        "psi1" => Value::Multi(psi(1, w).at(pos)?),
        "psi2" => Value::Multi(psi(2, w).at(pos)?),
        _ => unreachable!("checked by the caller"),
    })
}

fn lookup(name: &str, pos: usize) -> Result<Value, EvalError> {
    if name == "omega" {
        return Ok(Value::Form(omega()));
    }
    if name == "id" {
        return Ok(Value::Word(Cr2Word::identity()));
    }
    match named(name) {
        Some(Named::Word(w)) => Ok(Value::Word(w)),
        Some(Named::Map(m)) => Ok(Value::Proj(m)),
        Some(Named::Multi(m)) => Ok(Value::Multi(m)),
        None => Err(type_error(pos, format!("unknown name `{name}`"))),
    }
}

/// A plane map read back as a word: `σ` itself or a linear map.
pub fn as_word(v: &Value) -> Option<Cr2Word> {
    match v {
        Value::Word(w) => Some(w.clone()),
        Value::Proj(m) if m.source_dim() == 2 && m.target_dim() == 2 => {
            if m.degree() == 1 {
                let rows: Option<Vec<Vec<Polynomial>>> = m
                    .components()
                    .iter()
                    .map(|c| (0..3).map(|j| c.partial_derivative(j).ok()).collect())
                    .collect();
                let k = Ring::constants(m.ring().constant_names());
                let rows: Option<Vec<Vec<Polynomial>>> =
                    rows?.iter().map(|r| r.iter().map(|p| p.embed(&k).ok()).collect()).collect();
                return Cr2Word::symbolic(PolyMatrix::from_rows(&k, rows?).ok()?).ok();
            }
            let s = sigma();
            let plain = m.rename(s.ring()).ok()?;
            plain.equal_up_to_scalar(&s).ok()?.then(Cr2Word::sigma)
        }
        _ => None,
    }
}

fn affine_of(v: Value, pos: usize) -> Result<AffineMap, EvalError> {
    match v {
        Value::Affine(a) => Ok(a),
        v => match v.to_projective().at(pos)? {
            Some(m) if m.is_self_map() => m.to_affine_chart(0).at(pos),
            _ => Err(type_error(pos, format!("expected a self-map of affine space, found a {}", v.space()))),
        },
    }
}

fn compose(a: Value, b: Value, pos: usize) -> Result<Value, EvalError> {
    let mismatch = |a: &Value, b: &Value| {
        type_error(pos, format!("cannot compose: left side is a {}, right side is a {}", a.space(), b.space()))
    };
    match (a, b) {
        (Value::Word(x), Value::Word(y)) => Ok(Value::Word(x.then(&y))),
        (Value::Affine(x), Value::Affine(y)) => Ok(Value::Affine(x.compose(&y).at(pos)?)),
        (a @ (Value::Scalar(_) | Value::Form(_) | Value::Affine(_)), b) | (a, b @ (Value::Scalar(_) | Value::Form(_) | Value::Affine(_))) => {
            Err(mismatch(&a, &b))
        }
        (a, b) => {
            let (pa, pb) = (a.to_projective().at(pos)?, b.to_projective().at(pos)?);
            match (pa, pb) {
                (Some(x), Some(y)) => Ok(Value::Proj(x.compose(&y).at(pos)?)),
                (x, y) => {
                    let mx = match (x, a) {
                        (Some(m), _) => m.into_multi(),
                        (None, Value::Multi(m)) => m,
                        (None, a) => return Err(type_error(pos, format!("cannot compose a {}", a.space()))),
                    };
                    let my = match (y, b) {
                        (Some(m), _) => m.into_multi(),
                        (None, Value::Multi(m)) => m,
                        (None, b) => return Err(type_error(pos, format!("cannot compose a {}", b.space()))),
                    };
                    let m = mx.compose(&my).at(pos)?;
                    Ok(match ProjectiveMap::from_multi(m.clone()) {
                        Ok(p) => Value::Proj(p),
                        Err(_) => Value::Multi(m),
                    })
                }
            }
        }
    }
}

fn power(v: Value, k: u32, pos: usize) -> Result<Value, EvalError> {
    match v {
        Value::Word(w) => Ok(Value::Word(w.pow(k as i32))),
        Value::Proj(m) => Ok(Value::Proj(m.pow(k).at(pos)?)),
        Value::Affine(m) => Ok(Value::Affine(m.pow(k).at(pos)?)),
        Value::Multi(m) => {
            if k == 0 {
                return Ok(Value::Multi(MultiProjectiveMap::identity(m.ring(), m.source_blocks()).at(pos)?));
            }
            let mut acc = m.clone();
            for _ in 1..k {
                acc = m.compose(&acc).at(pos)?;
            }
            Ok(Value::Multi(acc))
        }
        v => Err(type_error(pos, format!("cannot raise a {} to a power", v.space()))),
    }
}

const CONSTANTS: [&str; 10] = ["a", "b", "c", "d", "lambda1", "lambda2", "lambda3", "lambda4", "lambda5", "lambda6"];

/// Identifiers of a literal: highest `x` and `y` index, and constants.
struct Vars {
    x: Option<usize>,
    y: Option<usize>,
    constants: Vec<&'static str>,
}

fn scan(text: &str, pos: usize) -> Result<Vars, EvalError> {
    let mut v = Vars { x: None, y: None, constants: Vec::new() };
    let b = text.as_bytes();
    let mut i = 0;
    while i < b.len() {
        if !(b[i].is_ascii_alphabetic() || b[i] == b'_') {
            i += 1;
            continue;
        }
        let start = i;
        while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
            i += 1;
        }
        let id = &text[start..i];
        let index = |p: &str| id.strip_prefix(p).and_then(|d| d.parse::<usize>().ok()).filter(|&n| n <= 9);
        if let (Some(n), true) = (index("x"), id.len() == 2) {
            v.x = v.x.max(Some(n));
        } else if let (Some(n), true) = (index("y"), id.len() == 2) {
            v.y = v.y.max(Some(n));
        } else if let Some(c) = CONSTANTS.iter().find(|c| **c == id) {
            if !v.constants.contains(c) {
                v.constants.push(c);
            }
        } else {
            return Err(type_error(pos + start, format!("unknown variable `{id}`")));
        }
    }
    v.constants.sort_by_key(|c| CONSTANTS.iter().position(|k| k == c));
    Ok(v)
}

fn literal(text: &str, pos: usize) -> Result<Value, EvalError> {
    let vars = scan(text, pos)?;
    let xs = |n: usize| (0..n).map(|i| format!("x{i}")).collect::<Vec<_>>();
    let ys = |n: usize| (0..n).map(|i| format!("y{i}")).collect::<Vec<_>>();
    let t = text.trim();
    if t.starts_with('(') && !t[1..].trim_start().starts_with('[') {
        // Affine literal in x1..xn, n the number of components.
        let n = t[1..t.len() - 1].split(',').count();
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let ring = Ring::new(&names, &vars.constants);
        return Ok(Value::Affine(parse_affine_map(&ring, t).at(pos)?));
    }
    let (ring, source) = match (vars.x, vars.y) {
        (Some(nx), Some(ny)) => {
            let mut names = xs(nx + 1);
            names.extend(ys(ny + 1));
            (Ring::new(&names, &vars.constants), vec![nx + 1, ny + 1])
        }
        (None, Some(ny)) => (Ring::new(&ys(ny + 1), &vars.constants), vec![ny + 1]),
        (Some(nx), None) => (Ring::new(&xs(nx + 1), &vars.constants), vec![nx + 1]),
        (None, None) => return Err(type_error(pos, "literal uses no coordinates")),
    };
    if t.starts_with('[') && source.len() == 1 {
        return Ok(Value::Proj(parse_projective_map(&ring, t).at(pos)?));
    }
    let m = parse_multi_map(&ring, &source, t).at(pos)?;
    Ok(match ProjectiveMap::from_multi(m.clone()) {
        Ok(p) => Value::Proj(p),
        Err(_) => Value::Multi(m),
    })
}

fn constant_ring(rows: &[Vec<String>], pos: usize) -> Result<Ring, EvalError> {
    let mut found: Vec<&'static str> = Vec::new();
    for e in rows.iter().flatten() {
        let v = scan(e, pos)?;
        if v.x.is_some() || v.y.is_some() {
            return Err(type_error(pos, format!("entry `{e}` must be a constant")));
        }
        for c in v.constants {
            if !found.contains(&c) {
                found.push(c);
            }
        }
    }
    found.sort_by_key(|c| CONSTANTS.iter().position(|k| k == c));
    Ok(Ring::constants(&found))
}

fn grid(rows: &[Vec<String>], pos: usize) -> Result<Vec<Vec<Polynomial>>, EvalError> {
    let k = constant_ring(rows, pos)?;
    rows.iter()
        .map(|r| r.iter().map(|e| parse_polynomial(&k, e).map_err(MapError::from).at(pos)).collect())
        .collect()
}

fn square(rows: &[Vec<String>], pos: usize) -> Result<usize, EvalError> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(type_error(pos, "matrix must be square"));
    }
    Ok(n)
}

fn matrix_value(rows: &[Vec<String>], pos: usize) -> Result<Value, EvalError> {
    let n = square(rows, pos)?;
    let g = grid(rows, pos)?;
    let k = g[0][0].ring().clone();
    let rational: Option<Vec<Vec<Rational>>> = g.iter().map(|r| r.iter().map(Polynomial::constant_value).collect()).collect();
    if n == 3 {
        let m = PolyMatrix::from_rows(&k, g).at(pos)?;
        return Ok(Value::Word(Cr2Word::symbolic(m).at(pos)?));
    }
    let rows = rational.ok_or_else(|| type_error(pos, "symbolic entries need a 3x3 matrix"))?;
    Ok(Value::Proj(ProjectiveMap::from_matrix(&QMatrix::from_rows(&rows).at(pos)?).at(pos)?))
}

fn int_matrix(rows: &[Vec<String>], pos: usize) -> Result<IntMatrix, EvalError> {
    square(rows, pos)?;
    let ints: Result<Vec<Vec<i64>>, _> = rows.iter().map(|r| r.iter().map(|e| e.parse::<i64>()).collect()).collect();
    let ints = ints.map_err(|_| type_error(pos, "monomial matrix entries must be integers"))?;
    IntMatrix::from_vecs(&ints).at(pos)
}

fn crossratio_value(rows: &[Vec<String>], pos: usize) -> Result<Value, EvalError> {
    if rows.len() != 2 || rows.iter().any(|r| r.len() != 4) {
        return Err(type_error(pos, "expected crossratio(p0, p1, p2, p3; q0, q1, q2, q3)"));
    }
    let g = grid(rows, pos)?;
    let p: [Polynomial; 4] = g[0].clone().try_into().expect("four entries");
    let q: [Polynomial; 4] = g[1].clone().try_into().expect("four entries");
    let line = LineInP3::new(p, q).at(pos)?;
    Ok(Value::Scalar(cross_ratio(&line).at(pos)?))
}
