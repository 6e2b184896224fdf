use std::fmt;

use serde::{Deserialize, Serialize};

/// Axiom codes reported by the threshold (`TH*`) and comb (`CB*`)
/// validators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Code {
    TH1,
    TH2,
    TH3,
    TH4,
    TH5,
    CB1,
    CB2,
    CB3,
    CB4,
    CB5,
    CB6,
    CB7,
    CB8,
    CB9,
    CB10,
    CB11,
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One failed axiom, with the vertices that witness the failure.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub code: Code,
    pub vertices: Vec<usize>,
    pub detail: String,
}

impl Violation {
    pub fn new(code: Code, vertices: Vec<usize>, detail: impl Into<String>) -> Self {
        Violation { code, vertices, detail: detail.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}: {}", self.code, self.vertices, self.detail)
    }
}

/// Sorts by code, then vertices, and drops exact duplicates.
pub(crate) fn finish(mut v: Vec<Violation>) -> Vec<Violation> {
    v.sort();
    v.dedup();
    v
}

pub fn codes(violations: &[Violation]) -> Vec<Code> {
    let mut c: Vec<Code> = violations.iter().map(|v| v.code).collect();
    c.dedup();
    c
}
