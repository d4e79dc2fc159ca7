use thiserror::Error;

use crate::gf::GfError;

/// Condition tags for repair-set systems fed to the cyclic-flat construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Condition {
    /// E must equal the union of the F_i.
    Coverage,
    /// 0 < rank(F_i) < |F_i|
    I,
    /// rank(F_i) < rank(E)
    II,
    /// rank(E) <= |E| - sum of nullities
    III,
    /// |F_{[m] \ j} ∩ F_j| < rank(F_j)
    IV,
}

impl std::fmt::Display for Condition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Condition::Coverage => "coverage",
            Condition::I => "i",
            Condition::II => "ii",
            Condition::III => "iii",
            Condition::IV => "iv",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error("unknown label {0}")]
    UnknownLabel(String),
    #[error("element {0} is not in the ground set")]
    UnknownElement(String),
    #[error("coordinate {0} is not in the ground set")]
    UnknownCoordinate(String),
    #[error("duplicate label {0}")]
    DuplicateLabel(String),
    #[error("label collision on {0}")]
    LabelCollision(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("ground set of {n} elements exceeds the limit of {limit} for {what}")]
    GroundTooLarge { n: usize, limit: usize, what: &'static str },
    #[error("chosen tree edges contain a cycle through edge {0}")]
    NotAForest(String),
    #[error("{0}")]
    NotARelaxableCircuit(String),
    #[error("lattice violates {axiom}: {detail}")]
    ZAxiomViolation { axiom: &'static str, detail: String },
    #[error("lattice is degenerate (bottom must be empty and top must be the ground set)")]
    DegenerateLattice,
    #[error("{0} is not a cyclic set")]
    NotCyclic(String),
    #[error("puncturing to the empty coordinate set")]
    EmptyX,
    #[error("code has dimension 0, minimum distance undefined")]
    ZeroCode,
    #[error("the ground set is not a cyclic flat of the polymatroid")]
    TopNotCyclicFlat,
    #[error("search budget of {0} candidate sets exceeded")]
    SearchBudgetExceeded(usize),
    #[error("parameters outside P(n,k,r,delta): {0}")]
    OutsideP(String),
    #[error("repair-set system violates condition ({0}): {1}")]
    ConditionViolated(Condition, String),
    #[error(
        "no verified representation over GF({q}) after {attempts} attempts; \
         fields of order at least 2^{n} are guaranteed to work"
    )]
    RepresentationNotFound { q: u32, attempts: u32, n: usize },
    #[error("divisibility violated: {0}")]
    DivisibilityViolated(String),
    #[error("subgroup unavailable: {0}")]
    SubgroupUnavailable(String),
    #[error("refusing exhaustive equality test on {0} elements (limit 16)")]
    EqualityRefused(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
