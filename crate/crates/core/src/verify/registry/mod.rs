mod classical;
mod core_suite;
mod general;
mod lemmas;
mod tails;

use std::fmt::Display;

use super::{Builder, Expectation, IdentityCheck, Side, Suite};

/// Every registered check, grouped by suite in a fixed order.
pub fn registry() -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    out.extend(classical::entries());
    out.extend(lemmas::entries());
    out.extend(core_suite::entries());
    out.extend(general::entries());
    out.extend(tails::entries());
    out
}

pub(super) struct Entry(IdentityCheck);

impl Entry {
    pub fn new(id: &'static str, suite: Suite, reference: &'static str) -> Self {
        Entry(IdentityCheck {
            id,
            reference,
            suite,
            expectation: Expectation::Pass,
            compare_from: 1,
            params: vec![String::new()],
            sides: Vec::new(),
        })
    }

    pub fn params<P: Display>(mut self, name: &str, ps: &[P]) -> Self {
        self.0.params = ps.iter().map(|p| format!("{name}={p}")).collect();
        self
    }

    pub fn labelled(mut self, labels: Vec<String>) -> Self {
        self.0.params = labels;
        self
    }

    pub fn from(mut self, n: usize) -> Self {
        self.0.compare_from = n;
        self
    }

    pub fn printed(mut self) -> Self {
        self.0.expectation = Expectation::FailAsPrinted;
        self
    }

    pub fn side(mut self, label: &'static str, b: Builder) -> Self {
        self.0.sides.push(Side::new(label, b));
        self
    }

    pub fn counted(mut self, label: &'static str, b: Builder) -> Self {
        self.0.sides.push(Side::counted(label, b));
        self
    }

    pub fn enumerated(mut self, label: &'static str, b: Builder) -> Self {
        self.0.sides.push(Side::enumerated(label, b));
        self
    }

    pub fn done(self) -> IdentityCheck {
        assert!(self.0.sides.len() >= 2, "{} needs two sides", self.0.id);
        self.0
    }
}
