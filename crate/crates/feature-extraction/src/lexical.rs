use phishing_model::{Answer, FeatureVector};
use serde::{Deserialize, Serialize};

use crate::url::UrlParts;

/// Tunable cut-offs for the two counting heuristics. The defaults are the
/// common anti-phishing choices; both can be overridden from a JSON config.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Thresholds {
    /// A URL of at least this many characters counts as long.
    pub long_url_threshold: usize,
    /// Strictly more host dots than this counts as many.
    pub host_dot_threshold: usize,
}

impl Default for Thresholds {
    fn default() -> Self {
        Self {
            long_url_threshold: 54,
            host_dot_threshold: 3,
        }
    }
}

impl Thresholds {
    pub fn from_json(text: &str) -> Result<Self, crate::ExtractError> {
        serde_json::from_str(text).map_err(|e| crate::ExtractError::Json(e.to_string()))
    }
}

/// Answers the five URL-shape questions; the eight probe features stay
/// unknown. Pure in `parts` and `thresholds`.
pub fn lexical_features(parts: &UrlParts, thresholds: &Thresholds) -> FeatureVector {
    let mut v = FeatureVector::default();
    v.long_url_link = Answer::from_bool(parts.raw_length >= thresholds.long_url_threshold);
    v.ip_instead_of_dns = Answer::from_bool(parts.host_is_ip);
    v.many_dots = Answer::from_bool(parts.host_dot_count() > thresholds.host_dot_threshold);
    v.modified_port =
        Answer::from_bool(parts.explicit_port_given && parts.port != parts.default_port());
    v.unsecured_page = Answer::from_bool(parts.scheme != "https");
    v
}
