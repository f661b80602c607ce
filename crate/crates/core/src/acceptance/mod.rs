//! Acceptance checks with pinned tolerances and runtime budgets. Every check
//! is exact (rational arithmetic), so the only tolerance is the wall clock.

mod criteria;
pub mod gen;

use std::time::{Duration, Instant};

/// One acceptance check.
pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub budget: Duration,
    run: fn() -> criteria::Outcome,
}

pub const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, name: "semifield and power laws", budget: secs(10), run: criteria::semifield_and_power_laws },
    Criterion { id: 2, name: "conic polynomial regions", budget: secs(30), run: criteria::conic_fixture },
    Criterion { id: 3, name: "two-layer network conversion", budget: secs(60), run: criteria::two_layer_fixture },
    Criterion { id: 4, name: "newton polytope identities", budget: secs(60), run: criteria::polytope_identities },
    Criterion { id: 5, name: "zonotope upper vertex counts", budget: secs(120), run: criteria::zonotope_counts },
    Criterion { id: 6, name: "linear region bound", budget: secs(600), run: criteria::region_bounds },
    Criterion { id: 7, name: "synthesis round trip", budget: secs(120), run: criteria::synthesis_round_trip },
    Criterion { id: 8, name: "decision boundaries", budget: secs(300), run: criteria::decision_boundaries },
    Criterion { id: 9, name: "hull oracle agreement", budget: secs(30), run: criteria::hull_oracle_agreement },
];

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl CriterionResult {
    /// `[PASS] 3 name (1.20s / 60s): detail`
    pub fn line(&self) -> String {
        format!(
            "[{}] {} {} ({:.2}s / {}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs(),
            self.detail
        )
    }
}

impl Criterion {
    pub fn run(&self) -> CriterionResult {
        let start = Instant::now();
        let outcome = (self.run)();
        let elapsed = start.elapsed();
        let (mut passed, mut detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if passed && elapsed > self.budget {
            passed = false;
            detail = format!("over budget; {detail}");
        }
        CriterionResult { id: self.id, name: self.name, passed, detail, elapsed, budget: self.budget }
    }
}

/// Runs the criteria whose ids are in `only`, or all of them when it is empty.
pub fn run_selected(only: &[u32]) -> Vec<CriterionResult> {
    CRITERIA.iter().filter(|c| only.is_empty() || only.contains(&c.id)).map(Criterion::run).collect()
}
