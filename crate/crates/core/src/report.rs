//! Verification reports shared by the identity suites.

use std::fmt;

/// How many failing cases a check keeps verbatim.
const MAX_RECORDED: usize = 5;

/// One named identity checked over a family of cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failed: usize,
    /// The first few failing cases.
    pub failures: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            cases: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    /// Records one case; `detail` is only built on failure.
    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_RECORDED {
                self.failures.push(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} ({} cases)", self.name, self.cases)
        } else {
            write!(f, "FAIL {} ({} of {} cases failed)", self.name, self.failed, self.cases)?;
            for detail in &self.failures {
                write!(f, "\n    {detail}")?;
            }
            Ok(())
        }
    }
}

/// A list of checks under a common title.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {}", self.title)?;
        for check in &self.checks {
            writeln!(f, "{check}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_only_first_failures() {
        let mut c = Check::new("demo");
        for i in 0..10 {
            c.record(i % 2 == 0, || format!("case {i}"));
        }
        assert_eq!(c.cases, 10);
        assert_eq!(c.failed, 5);
        assert_eq!(c.failures.len(), 5);
        assert!(!c.passed());
        assert!(c.to_string().starts_with("FAIL demo (5 of 10 cases failed)"));
    }

    #[test]
    fn report_passes_when_every_check_does() {
        let mut r = Report::new("t");
        let mut c = Check::new("a");
        c.record(true, String::new);
        r.push(c);
        assert!(r.passed());
        assert_eq!(r.to_string(), "== t\nPASS a (1 cases)\n");
    }
}
