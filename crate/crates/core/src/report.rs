//! Validation reports: which identity was checked, on how many slots, and where it failed.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Where the identity failed, e.g. a word or a (word, basis vector) pair.
    pub slot: String,
    /// The nonzero residual, rendered.
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub check: String,
    pub slots_checked: usize,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Report { check: check.into(), slots_checked: 0, violations: Vec::new() }
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Counts one slot; records a violation when `ok` is false.
    pub fn record(&mut self, ok: bool, slot: impl FnOnce() -> String, detail: impl FnOnce() -> String) {
        self.slots_checked += 1;
        if !ok {
            self.violations.push(Violation { slot: slot(), detail: detail() });
        }
    }

    pub fn fail(&mut self, slot: impl Into<String>, detail: impl Into<String>) {
        self.violations.push(Violation { slot: slot.into(), detail: detail.into() });
    }

    /// Absorbs another report, prefixing its slots with its check name.
    pub fn absorb(&mut self, other: Report) {
        self.slots_checked += other.slots_checked;
        for v in other.violations {
            self.violations.push(Violation { slot: format!("{}: {}", other.check, v.slot), detail: v.detail });
        }
    }

    /// The set of failing slots, for comparing two checks of the same identity.
    pub fn failing_slots(&self) -> Vec<String> {
        let mut s: Vec<String> = self.violations.iter().map(|v| v.slot.clone()).collect();
        s.sort();
        s.dedup();
        s
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "{}: ok ({} slots)", self.check, self.slots_checked)
        } else {
            writeln!(f, "{}: {} violation(s) in {} slots", self.check, self.violations.len(), self.slots_checked)?;
            for v in self.violations.iter().take(10) {
                writeln!(f, "  at {}: {}", v.slot, v.detail)?;
            }
            Ok(())
        }
    }
}
