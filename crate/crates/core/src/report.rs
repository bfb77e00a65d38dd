use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// One verified identity instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub identity: String,
    pub n: Option<usize>,
    pub passed: bool,
    pub detail: String,
}

/// Pass/fail outcome of a family of identity checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        identity: impl Into<String>,
        n: Option<usize>,
        passed: bool,
        detail: impl Into<String>,
    ) {
        self.checks.push(Check {
            identity: identity.into(),
            n,
            passed,
            detail: detail.into(),
        });
    }

    pub fn pass(&mut self, identity: impl Into<String>, n: Option<usize>) {
        self.push(identity, n, true, String::new());
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    /// Checks for a given identity name.
    pub fn by_identity<'a>(&'a self, identity: &'a str) -> impl Iterator<Item = &'a Check> + 'a {
        self.checks.iter().filter(move |c| c.identity == identity)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(
            f,
            "{}: {} checks, {} failed",
            self.subject,
            self.checks.len(),
            failed
        )
    }
}

/// Negative-control switch threaded through the verification suites.
///
/// `Active` corrupts one coefficient inside the suite's identity so that a
/// working checker must report a failure.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Perturbation {
    #[default]
    None,
    Active,
}

impl Perturbation {
    pub fn is_active(self) -> bool {
        self == Perturbation::Active
    }
}
