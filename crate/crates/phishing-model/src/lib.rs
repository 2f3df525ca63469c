//! The embedded phishing-reliability model.
//!
//! Thirteen tri-state features are grouped into four strata; per-stratum
//! truth tables turn the answers into Valid/Suspicious/Fake statuses, and a
//! bundled 26-row reliability table plus a twelve-rule decision list turn a
//! strata profile into a Reliable/Unreliable verdict. Profiles the rules do
//! not cover stay Indeterminate. [`verify_model`] recomputes every embedded
//! reference value from the bundled table so the whole model is checkable
//! offline.
//!
//! Everything here is a pure function over immutable fixtures.

mod classify;
mod error;
mod features;
mod reliability;
mod rules;
mod strata;
mod verify;

pub use classify::{classify, ClassificationReport, FiredRule, ModelPolicy, Verdict};
pub use error::ModelError;
pub use features::{Answer, CompletionPolicy, Feature, FeatureVector};
pub use reliability::{
    canonical_reliability_table, deduplicate_last_wins, Reliability, DECISION_ATTRIBUTE,
    RELIABILITY_ROWS,
};
pub use rules::builtin_rule_set;
pub use strata::{
    evaluate_strata, stratum_a_status, stratum_bcd_status, StrataProfile, Stratum, StratumStatus,
};
pub use verify::{
    reference_survey_subsets, verify_model, CoverageCheck, GammaCheck, ModelVerification,
    RuleAudit,
};
