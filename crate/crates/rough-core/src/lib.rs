//! Rough-set analysis of finite categorical decision tables.
//!
//! A [`DecisionTable`] holds objects described by condition attributes plus
//! one decision attribute, all values being opaque string tokens. On top of
//! it the crate computes indiscernibility partitions, lower/upper
//! approximations, positive regions and exact-rational dependency degrees,
//! exhaustive reducts and the core, and minimal certain decision rules,
//! and can audit or apply rule sets.
//!
//! Everything is immutable after construction and every operation is a pure
//! function of its inputs, so shared tables can be analysed concurrently.

mod error;
mod gamma;
mod partition;
mod reduct;
mod rules;
mod table;

pub use error::{Error, Result};
pub use gamma::{Gamma, GammaEntry, GammaReport};
pub use partition::{ApproximationResult, Partition};
pub use reduct::EXHAUSTIVE_SEARCH_CAP;
pub use rules::{
    apply_rules, Condition, ConflictPolicy, DecisionRule, Provenance, RuleCheck, RuleStatus,
    RuleVerdict,
};
pub use table::DecisionTable;
