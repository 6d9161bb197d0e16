use std::fmt;

/// One labelled check inside a verification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

/// Ordered pass/fail record of a verification suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn record(&mut self, label: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(CheckOutcome {
            label: label.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first_failure() {
            None => write!(f, "{}: PASS ({} checks)", self.suite, self.len()),
            Some(c) => write!(
                f,
                "{}: FAIL ({} of {} checks failed); first counterexample: {} [{}]",
                self.suite,
                self.checks.iter().filter(|c| !c.pass).count(),
                self.len(),
                c.label,
                c.detail
            ),
        }
    }
}
