use serde::Serialize;

/// Which consistency rule a [`Violation`] breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    FanStructure,
    GenericMultiplicity,
    LocusMonotonicity,
    MsharpMismatch,
    ChartInvalid,
    NonSaturatedChart,
    PLocusEuler,
    ZeroDimensionalStratum,
    StratumGenus,
    FibreConsistency,
}

/// A data-level inconsistency. Violations are reported, never raised.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub rule: Rule,
    pub subject: String,
    pub detail: String,
}

impl Violation {
    pub fn new(rule: Rule, subject: impl Into<String>, detail: impl Into<String>) -> Self {
        Violation {
            rule,
            subject: subject.into(),
            detail: detail.into(),
        }
    }
}
