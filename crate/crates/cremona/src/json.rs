//! JSON form of a report. Field order is the declaration order below.

use serde::Serialize;

use crate::suites::TimedReport;

#[derive(Serialize)]
struct Json<'a> {
    suite: &'a str,
    seed: Option<u64>,
    entries: Vec<JsonEntry<'a>>,
    summary: Summary,
}

#[derive(Serialize)]
struct JsonEntry<'a> {
    id: &'a str,
    anchor: &'a str,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a str>,
    ms: u128,
}

#[derive(Serialize)]
struct Summary {
    pass: usize,
    fail: usize,
}

/// Pretty-printed report. Pass `timings = false` for byte-stable output.
pub fn report_json(r: &TimedReport, timings: bool) -> String {
    let entries = r
        .entries
        .iter()
        .map(|t| JsonEntry {
            id: &t.entry.id,
            anchor: &t.entry.anchor,
            status: if t.entry.pass { "pass" } else { "fail" },
            witness: if t.entry.pass { None } else { t.entry.witness.as_deref() },
            ms: if timings { t.ms } else { 0 },
        })
        .collect();
    let j = Json { suite: &r.suite, seed: r.seed, entries, summary: Summary { pass: r.passed(), fail: r.failed() } };
    serde_json::to_string_pretty(&j).expect("plain data serializes")
}
