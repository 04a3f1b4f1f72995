//! Named verification suites and a concurrent runner.

use std::time::Instant;

use cremona_core::codim1::{cross_ratio_action_suite, gl3z_identity_suite, psi_homomorphism_suite, relation_check_codim1};
use cremona_core::gizatullin::{
    ab_family_suite, aut_a2_degree_suite, chi_growth_suite, contraction_suite, default_degree_specs,
    default_lower_bound_words, degree_lower_bound_suite, dual_suite, equivariance_suite, homomorphism_suite,
    printed_formula_suite, relation_suite, secant_invariance_suite,
};
use cremona_core::report::{Check, Entry, Suite};
use cremona_core::volforms::omega_invariance_suite;

/// Suite names with what they cover; `all` runs every other one.
pub const SUITES: &[(&str, &str)] = &[
    ("relations", "Coxeter-type relations of phi and phi_dual on sigma, diagonals and h"),
    ("homomorphism", "phi(w1 w2) = phi(w1) phi(w2) on random words"),
    ("dual", "Ad is an involution conjugating phi(g) to phi(g^-T)"),
    ("printed", "displayed formulas recomputed from words"),
    ("equivariance", "phi(w) commutes with the Veronese and secant maps"),
    ("secant-invariance", "the secant cubic is preserved"),
    ("contraction", "the planes H_i contract onto E_i"),
    ("omega", "the volume form with poles on the secant cubic is preserved"),
    ("ab-family", "the A_n, B_n recursion and degree bracket"),
    ("aut-a2-degrees", "degrees of phi on automorphisms of the affine plane"),
    ("degree-lower-bound", "deg w <= deg phi(w)"),
    ("chi-growth", "degree growth of chi1(f) and boundedness of chi2(f)"),
    ("codim1-relations", "(sigma_n g_n)^3 relations and their lifts"),
    ("codim1-homomorphism", "psil and psib respect composition"),
    ("gl3z", "matrix identities in GL3(Z)"),
    ("crossratio-action", "action of tau1 and tau2 on the cross ratio"),
    ("all", "every suite above"),
];

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 1;

/// Builds a suite. Seeded suites derive their seed from `seed`; the
/// others ignore it.
pub fn build(name: &str, seed: u64) -> Option<Suite> {
    Some(match name {
        "relations" => relation_suite(seed),
        "homomorphism" => homomorphism_suite(seed, 20),
        "dual" => dual_suite(seed),
        "printed" => printed_formula_suite(),
        "equivariance" => equivariance_suite(seed, 10),
        "secant-invariance" => secant_invariance_suite(),
        "contraction" => contraction_suite(),
        "omega" => omega_invariance_suite(seed),
        "ab-family" => ab_family_suite(8, 5),
        "aut-a2-degrees" => aut_a2_degree_suite(&default_degree_specs(), seed),
        "degree-lower-bound" => degree_lower_bound_suite(default_lower_bound_words(seed), Some(seed)),
        "chi-growth" => chi_growth_suite(10, 8),
        "codim1-relations" => relation_check_codim1(),
        "codim1-homomorphism" => psi_homomorphism_suite(seed, 10),
        "gl3z" => gl3z_identity_suite(),
        "crossratio-action" => cross_ratio_action_suite(),
        "all" => {
            let mut all = Suite::new("all").with_seed(seed);
            for (n, _) in SUITES.iter().filter(|(n, _)| *n != "all") {
                let s = build(n, seed).expect("registered");
                for c in s.checks {
                    let Check { id, anchor, .. } = &c;
                    let (id, anchor) = (format!("{n}/{id}"), anchor.clone());
                    all.add(id, anchor, move || {
                        let e = c.run();
                        Ok(cremona_core::report::Outcome { pass: e.pass, witness: e.witness })
                    });
                }
            }
            all
        }
        _ => return None,
    })
}

/// A report entry with its wall-clock time.
#[derive(Clone, Debug)]
pub struct TimedEntry {
    pub entry: Entry,
    pub ms: u128,
}

#[derive(Clone, Debug)]
pub struct TimedReport {
    pub suite: String,
    pub seed: Option<u64>,
    /// Sorted by id, whatever order the checks finished in.
    pub entries: Vec<TimedEntry>,
}

impl TimedReport {
    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.entry.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.entries.len() - self.passed()
    }
}

/// Runs the checks on up to `threads` worker threads.
pub fn run(suite: &Suite, threads: usize) -> TimedReport {
    let next = std::sync::atomic::AtomicUsize::new(0);
    let threads = threads.clamp(1, suite.checks.len().max(1));
    let mut entries: Vec<TimedEntry> = std::thread::scope(|s| {
        let workers: Vec<_> = (0..threads)
            .map(|_| {
                s.spawn(|| {
                    let mut out = Vec::new();
                    loop {
                        let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                        let Some(c) = suite.checks.get(i) else { break };
                        let t = Instant::now();
                        let entry = c.run();
                        out.push(TimedEntry { entry, ms: t.elapsed().as_millis() });
                    }
                    out
                })
            })
            .collect();
        workers.into_iter().flat_map(|w| w.join().expect("check panicked")).collect()
    });
    entries.sort_by(|a, b| a.entry.id.cmp(&b.entry.id));
    TimedReport { suite: suite.name.clone(), seed: suite.seed, entries }
}

pub fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}
