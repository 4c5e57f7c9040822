//! Result records shared by the verifiers and the command-line front end.

use std::fmt;
use std::time::Duration;

use serde::{Serialize, Serializer};

/// Outcome of an exhaustive or batch check.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub check: String,
    /// Instances examined (canonical classes, graphs, ...).
    pub instances: u64,
    /// One human-readable witness per failing instance.
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// One-line summary; timing is omitted when `timing` is false so output
    /// can be compared byte for byte.
    pub fn summary(&self, timing: bool) -> String {
        let status = if self.passed() { "ok" } else { "FAILED" };
        let mut s = format!(
            "{}: {} ({} instances, {} failures)",
            self.check,
            status,
            self.instances,
            self.failures.len()
        );
        if timing {
            s.push_str(&format!(" in {:.3}s", self.elapsed.as_secs_f64()));
        }
        s
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary(true))?;
        for w in &self.failures {
            write!(f, "\n  {w}")?;
        }
        Ok(())
    }
}

/// Exact-square chromatic number as reported by the batch harness: exact when
/// found within the cap, otherwise only known to exceed it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChiValue {
    Exact(usize),
    Above(usize),
}

impl Serialize for ChiValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match *self {
            ChiValue::Exact(k) => s.serialize_u64(k as u64),
            ChiValue::Above(cap) => s.serialize_str(&format!(">{cap}")),
        }
    }
}

impl fmt::Display for ChiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChiValue::Exact(k) => write!(f, "{k}"),
            ChiValue::Above(cap) => write!(f, ">{cap}"),
        }
    }
}

/// One line of the fullerene batch report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BatchEntry {
    pub index: usize,
    pub n: usize,
    pub fullerene: bool,
    /// `None` for entries that are not fullerenes.
    pub chi_exact_square: Option<ChiValue>,
    pub drum_k: Option<usize>,
    pub consistent: bool,
    pub pass: bool,
}

/// Closing line of the fullerene batch report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BatchSummary {
    pub entries: usize,
    pub fullerenes: usize,
    pub drums: usize,
    pub passed: usize,
    pub failed: usize,
    pub max_chi: usize,
    pub all_pass: bool,
}

impl BatchSummary {
    pub fn of(entries: &[BatchEntry], max_chi: usize) -> Self {
        let passed = entries.iter().filter(|e| e.pass).count();
        BatchSummary {
            entries: entries.len(),
            fullerenes: entries.iter().filter(|e| e.fullerene).count(),
            drums: entries.iter().filter(|e| e.drum_k.is_some()).count(),
            passed,
            failed: entries.len() - passed,
            max_chi,
            all_pass: passed == entries.len(),
        }
    }
}
