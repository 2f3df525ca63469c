//! URL feature extraction for the phishing model.
//!
//! [`parse_url`] splits an http/https URL into [`UrlParts`];
//! [`lexical_features`] answers the five URL-shape questions from them; the
//! remaining eight features come from pluggable [`ProbeProvider`]s (a stub
//! and a manual answers file ship here — live network probes are an
//! extension point, not a bundled capability) and [`merge_answers`] overlays
//! them into a single vector with per-field provenance.

mod lexical;
mod probes;
mod url;

use phishing_model::Feature;
use thiserror::Error;

pub use lexical::{lexical_features, Thresholds};
pub use probes::{
    collect_probe_answers, merge_answers, FieldSource, ManualFileProvider, MergedVector,
    ProbeAnswer, ProbeAnswerSet, ProbeError, ProbeProvider, ProviderRegistry, StubProvider,
};
pub use url::{parse_url, scheme_default_port, ParseError, UrlParts};

/// Errors raised while assembling a feature vector.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ExtractError {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("unknown feature name `{name}`")]
    UnknownFeature { name: String },

    #[error("`{feature}` is a lexical feature; the URL text is authoritative for it")]
    LexicalConflict { feature: Feature },

    #[error("unregistered probe provider `{name}`")]
    UnknownProvider { name: String },

    #[error("invalid JSON: {0}")]
    Json(String),
}
