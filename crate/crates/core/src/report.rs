//! Named pass/fail checks grouped into suites.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::birmap::MapError;

/// Result of one check. Failures carry a rendering of what went wrong.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub pass: bool,
    pub witness: Option<String>,
}

impl Outcome {
    pub fn pass() -> Outcome {
        Outcome { pass: true, witness: None }
    }

    pub fn fail(witness: impl Into<String>) -> Outcome {
        Outcome { pass: false, witness: Some(witness.into()) }
    }

    /// Passes when `ok`; otherwise the witness is built lazily.
    pub fn expect(ok: bool, witness: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::pass()
        } else {
            Outcome::fail(witness())
        }
    }

    /// Passing outcome that still records a note, e.g. the computed value.
    pub fn pass_with(note: impl Into<String>) -> Outcome {
        Outcome { pass: true, witness: Some(note.into()) }
    }

    /// Conjunction; keeps the first failure's witness.
    pub fn and(self, o: Outcome) -> Outcome {
        if self.pass {
            o
        } else {
            self
        }
    }
}

type Runner = Box<dyn Fn() -> Result<Outcome, MapError> + Send + Sync>;

/// A check with a stable id and a short description of the claim it
/// exercises.
pub struct Check {
    pub id: String,
    pub anchor: String,
    run: Runner,
}

impl Check {
    pub fn new<F>(id: impl Into<String>, anchor: impl Into<String>, f: F) -> Check
    where
        F: Fn() -> Result<Outcome, MapError> + Send + Sync + 'static,
    {
        Check { id: id.into(), anchor: anchor.into(), run: Box::new(f) }
    }

    /// Runs the check; an error counts as a failure.
    pub fn run(&self) -> Entry {
        let outcome = match (self.run)() {
            Ok(o) => o,
            Err(e) => Outcome::fail(alloc::format!("error: {e}")),
        };
        Entry { id: self.id.clone(), anchor: self.anchor.clone(), pass: outcome.pass, witness: outcome.witness }
    }
}

impl core::fmt::Debug for Check {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Check").field("id", &self.id).field("anchor", &self.anchor).finish()
    }
}

#[derive(Debug)]
pub struct Suite {
    pub name: String,
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
}

impl Suite {
    pub fn new(name: impl Into<String>) -> Suite {
        Suite { name: name.into(), seed: None, checks: Vec::new() }
    }

    pub fn with_seed(mut self, seed: u64) -> Suite {
        self.seed = Some(seed);
        self
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn add<F>(&mut self, id: impl Into<String>, anchor: impl Into<String>, f: F)
    where
        F: Fn() -> Result<Outcome, MapError> + Send + Sync + 'static,
    {
        self.checks.push(Check::new(id, anchor, f));
    }

    pub fn extend(&mut self, other: Suite) {
        self.checks.extend(other.checks);
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    /// Runs every check in order.
    pub fn run(&self) -> Report {
        let entries = self.checks.iter().map(Check::run).collect();
        Report::new(&self.name, self.seed, entries)
    }
}

/// Outcome of one check within a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub id: String,
    pub anchor: String,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub seed: Option<u64>,
    /// Sorted by id.
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new(suite: &str, seed: Option<u64>, mut entries: Vec<Entry>) -> Report {
        entries.sort_by(|a, b| a.id.cmp(&b.id));
        Report { suite: suite.to_string(), seed, entries }
    }

    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.entries.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    /// One line per entry.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            let status = if e.pass { "pass" } else { "FAIL" };
            s.push_str(&alloc::format!("{status}  {}  ({})", e.id, e.anchor));
            if let (false, Some(w)) = (e.pass, &e.witness) {
                s.push_str(&alloc::format!("\n      {w}"));
            }
            s.push('\n');
        }
        s.push_str(&alloc::format!("{}: {} passed, {} failed\n", self.suite, self.passed(), self.failed()));
        s
    }
}
