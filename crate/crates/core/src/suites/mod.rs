//! Named verification suites, each producing a machine-readable report.

use serde::Serialize;

pub mod brackets;
pub mod catalog;
pub mod dims;
pub mod eq1;
pub mod idempotents;
pub mod orbits;
pub mod relations;

/// Deterministic 64-bit pseudo-random sequence used for sampled sweeps.
/// The update rule is fixed here so that sample selection is reproducible
/// across implementations: the state advances by the golden-ratio constant
/// and the output is the standard two-round xor-shift-multiply mix.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// Select `size` distinct indices below `total` by repeated draws from the
/// seeded sequence, in draw order.
pub fn sample_indices(total: usize, size: usize, seed: u64) -> Vec<usize> {
    let mut rng = SplitMix64::new(seed);
    let size = size.min(total);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::with_capacity(size);
    while out.len() < size {
        let idx = (rng.next_u64() % total as u64) as usize;
        if seen.insert(idx) {
            out.push(idx);
        }
    }
    out
}

/// Exhaustive sweeps or seeded subsets of the enumerated bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sample,
}

impl std::str::FromStr for Mode {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "sample" => Ok(Mode::Sample),
            _ => Err(crate::error::Error::usage(format!(
                "mode must be 'exhaustive' or 'sample', got {s:?}"
            ))),
        }
    }
}

/// Parameter set shared by all suites. Unused fields are reported as null
/// so identical invocations serialize identically.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteParams {
    pub m: Option<usize>,
    pub k: Option<usize>,
    pub max_degree: Option<usize>,
    pub mode: Mode,
    pub sample_size: usize,
    pub seed: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            m: None,
            k: None,
            max_degree: None,
            mode: Mode::Exhaustive,
            sample_size: 64,
            seed: 0x5EED_0001,
        }
    }
}

impl SuiteParams {
    pub fn with_m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    /// Extensional sweep degree: explicit max-degree, else max(3, k + 1).
    pub fn degree(&self) -> usize {
        self.max_degree
            .unwrap_or_else(|| std::cmp::max(3, self.k.map_or(0, |k| k + 1)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One named check with an optional witness rendered on failure.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Fail,
            witness: Some(witness.into()),
        }
    }

    /// Pass when no witness was produced, fail carrying the first one.
    pub fn from_witness(name: impl Into<String>, witness: Option<String>) -> Self {
        match witness {
            None => Check::pass(name),
            Some(w) => Check::fail(name, w),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

/// Self-describing report of one suite run.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: SuiteParams,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl SuiteReport {
    /// Assemble a report; checks are sorted by name for order stability.
    pub fn new(suite: &str, params: SuiteParams, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let pass = checks.iter().filter(|c| c.status == Status::Pass).count();
        let fail = checks.len() - pass;
        SuiteReport {
            suite: suite.to_string(),
            params,
            checks,
            summary: Summary { pass, fail },
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per check plus a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite {}\n", self.suite));
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("  [{status}] {}\n", c.name));
            if let Some(w) = &c.witness {
                out.push_str(&format!("         witness: {w}\n"));
            }
        }
        out.push_str(&format!(
            "  summary: {} pass, {} fail\n",
            self.summary.pass, self.summary.fail
        ));
        out
    }
}

pub use catalog::{run_all, run_suite, suite_names, AllReport};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_deterministic_and_distinct() {
        let a = sample_indices(256, 16, 42);
        let b = sample_indices(256, 16, 42);
        assert_eq!(a, b);
        let mut sorted = a.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 16);
        let c = sample_indices(256, 16, 43);
        assert_ne!(a, c);
        // requesting more than available saturates
        assert_eq!(sample_indices(5, 64, 7).len(), 5);
    }

    #[test]
    fn report_checks_are_sorted() {
        let r = SuiteReport::new(
            "demo",
            SuiteParams::default(),
            vec![Check::pass("b"), Check::fail("a", "w")],
        );
        assert_eq!(r.checks[0].name, "a");
        assert_eq!(r.summary.pass, 1);
        assert_eq!(r.summary.fail, 1);
        assert!(!r.all_pass());
    }
}
