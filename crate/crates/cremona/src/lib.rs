//! Front end for the `cremona-core` algebra: a small expression language
//! for maps, the suite registry, and report output.

pub mod eval;
pub mod expr;
pub mod json;
pub mod suites;

pub use eval::{evaluate, EvalError, EvalOptions, Value};
pub use expr::{parse, Expr, SyntaxError};

/// Parses and evaluates in one step.
pub fn eval_str(src: &str, opts: EvalOptions) -> Result<Value, EvalError> {
    evaluate(&parse(src)?, opts)
}

/// Plain-text report, wrapped to `width` columns.
pub fn report_text(r: &suites::TimedReport, width: usize) -> String {
    let mut s = String::new();
    for t in &r.entries {
        let e = &t.entry;
        let status = if e.pass { "pass" } else { "FAIL" };
        let line = format!("{status}  {}  ({})  {} ms", e.id, e.anchor, t.ms);
        s.push_str(&wrap(&line, width, "      "));
        if let (false, Some(w)) = (e.pass, &e.witness) {
            s.push_str(&wrap(&format!("      {w}"), width, "      "));
        }
    }
    let seed = r.seed.map(|x| format!(" (seed {x})")).unwrap_or_default();
    s.push_str(&format!("{}{seed}: {} passed, {} failed\n", r.suite, r.passed(), r.failed()));
    s
}

/// Breaks `line` at spaces so no piece exceeds `width` where possible.
pub fn wrap(line: &str, width: usize, indent: &str) -> String {
    let mut out = String::new();
    let mut cur = String::new();
    for word in line.split(' ') {
        if !cur.is_empty() && cur.len() + 1 + word.len() > width && !cur.trim().is_empty() {
            out.push_str(cur.trim_end());
            out.push('\n');
            cur = indent.to_string();
        } else if !cur.is_empty() {
            cur.push(' ');
        }
        cur.push_str(word);
    }
    out.push_str(cur.trim_end());
    out.push('\n');
    out
}
