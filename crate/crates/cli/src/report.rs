use std::fmt::Write as _;

use serde_json::{json, Value};

/// Upper bound on failing-case descriptions kept in a report.
pub const MAX_FAILURES: usize = 20;

/// Pass/fail counters for a sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub cases: u64,
    pub passed: u64,
    pub failed: u64,
    pub failures: Vec<String>,
}

impl Tally {
    pub fn new() -> Self {
        Tally::default()
    }

    /// Counts one case; `describe` runs only for failures that still fit.
    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    /// Counts a case whose check itself may have errored.
    pub fn record_result<E: std::fmt::Display>(
        &mut self,
        outcome: Result<bool, E>,
        describe: impl FnOnce() -> String,
    ) {
        match outcome {
            Ok(ok) => self.record(ok, describe),
            Err(e) => self.record(false, || format!("{}: {}", describe(), e)),
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        self.passed += other.passed;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() >= MAX_FAILURES {
                break;
            }
            self.failures.push(f);
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

impl FromIterator<Tally> for Tally {
    fn from_iter<I: IntoIterator<Item = Tally>>(iter: I) -> Self {
        let mut out = Tally::new();
        for t in iter {
            out.merge(t);
        }
        out
    }
}

/// Output of one command invocation.
///
/// `elapsed_ms` is reported on stderr only, so stdout stays byte-identical
/// across runs.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub command: String,
    pub elapsed_ms: u128,
    pub payload: Value,
    pub text: String,
    pub checks: Tally,
    /// Whether the counters belong in the output (verify/oracle).
    pub show_counters: bool,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        if self.checks.ok() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "command": self.command,
            "result": self.payload,
        });
        if self.show_counters {
            v["counters"] = json!({
                "cases": self.checks.cases,
                "passed": self.checks.passed,
                "failed": self.checks.failed,
            });
        }
        if self.show_counters || !self.checks.ok() {
            v["failures"] = json!(self.checks.failures);
        }
        v
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        out.push_str(&self.text);
        if !self.text.is_empty() && !self.text.ends_with('\n') {
            out.push('\n');
        }
        if self.show_counters {
            writeln!(
                out,
                "cases: {} passed: {} failed: {}",
                self.checks.cases, self.checks.passed, self.checks.failed
            )
            .unwrap();
        }
        for f in &self.checks.failures {
            writeln!(out, "failure: {}", f).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tally_caps_descriptions() {
        let mut t = Tally::new();
        for i in 0..30 {
            t.record(i % 2 == 0, || format!("case {}", i));
        }
        assert_eq!((t.cases, t.passed, t.failed), (30, 15, 15));
        assert_eq!(t.failures.len(), 15);
        let merged: Tally = vec![t.clone(), t].into_iter().collect();
        assert_eq!(merged.failed, 30);
        assert_eq!(merged.failures.len(), MAX_FAILURES);
        assert_eq!(merged.failures[15], "case 1");
    }
}
