use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::ModelError;
use crate::strata::Stratum;

/// Tri-state answer to one feature question.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    #[default]
    Unknown,
}

impl Answer {
    pub fn is_definite(self) -> bool {
        self != Answer::Unknown
    }

    /// Yes/No as a bool, or `None` for unknown.
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Answer::Yes => Some(true),
            Answer::No => Some(false),
            Answer::Unknown => None,
        }
    }

    pub fn from_bool(b: bool) -> Self {
        if b {
            Answer::Yes
        } else {
            Answer::No
        }
    }
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "yes",
            Answer::No => "no",
            Answer::Unknown => "unknown",
        })
    }
}

/// The thirteen feature questions, grouped into four strata.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Feature {
    #[serde(rename = "long_url_link")]
    LongUrlLink,
    #[serde(rename = "ip_instead_of_dns")]
    IpInsteadOfDns,
    #[serde(rename = "many_dots")]
    ManyDots,
    #[serde(rename = "modified_port")]
    ModifiedPort,
    #[serde(rename = "suspicious_ssl")]
    SuspiciousSsl,
    #[serde(rename = "domain_age_under_6mo")]
    DomainAgeUnder6Mo,
    #[serde(rename = "unsecured_page")]
    UnsecuredPage,
    #[serde(rename = "slow_account_access")]
    SlowAccountAccess,
    #[serde(rename = "js_hiding")]
    JsHiding,
    #[serde(rename = "popup_windows")]
    PopupWindows,
    #[serde(rename = "visual_similarity")]
    VisualSimilarity,
    #[serde(rename = "google_blacklisted")]
    GoogleBlacklisted,
    #[serde(rename = "redirected_pages")]
    RedirectedPages,
}

impl Feature {
    pub const ALL: [Feature; 13] = [
        Feature::LongUrlLink,
        Feature::IpInsteadOfDns,
        Feature::ManyDots,
        Feature::ModifiedPort,
        Feature::SuspiciousSsl,
        Feature::DomainAgeUnder6Mo,
        Feature::UnsecuredPage,
        Feature::SlowAccountAccess,
        Feature::JsHiding,
        Feature::PopupWindows,
        Feature::VisualSimilarity,
        Feature::GoogleBlacklisted,
        Feature::RedirectedPages,
    ];

    /// The five features computable from the URL text alone.
    pub const LEXICAL: [Feature; 5] = [
        Feature::LongUrlLink,
        Feature::IpInsteadOfDns,
        Feature::ManyDots,
        Feature::ModifiedPort,
        Feature::UnsecuredPage,
    ];

    /// The eight features that need an external probe or a manual answer.
    pub const PROBED: [Feature; 8] = [
        Feature::SuspiciousSsl,
        Feature::DomainAgeUnder6Mo,
        Feature::SlowAccountAccess,
        Feature::JsHiding,
        Feature::PopupWindows,
        Feature::VisualSimilarity,
        Feature::GoogleBlacklisted,
        Feature::RedirectedPages,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Feature::LongUrlLink => "long_url_link",
            Feature::IpInsteadOfDns => "ip_instead_of_dns",
            Feature::ManyDots => "many_dots",
            Feature::ModifiedPort => "modified_port",
            Feature::SuspiciousSsl => "suspicious_ssl",
            Feature::DomainAgeUnder6Mo => "domain_age_under_6mo",
            Feature::UnsecuredPage => "unsecured_page",
            Feature::SlowAccountAccess => "slow_account_access",
            Feature::JsHiding => "js_hiding",
            Feature::PopupWindows => "popup_windows",
            Feature::VisualSimilarity => "visual_similarity",
            Feature::GoogleBlacklisted => "google_blacklisted",
            Feature::RedirectedPages => "redirected_pages",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Feature::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn stratum(self) -> Stratum {
        match self {
            Feature::LongUrlLink
            | Feature::IpInsteadOfDns
            | Feature::ManyDots
            | Feature::ModifiedPort => Stratum::A,
            Feature::SuspiciousSsl | Feature::DomainAgeUnder6Mo | Feature::UnsecuredPage => {
                Stratum::B
            }
            Feature::SlowAccountAccess | Feature::JsHiding | Feature::PopupWindows => Stratum::C,
            Feature::VisualSimilarity | Feature::GoogleBlacklisted | Feature::RedirectedPages => {
                Stratum::D
            }
        }
    }

    pub fn is_lexical(self) -> bool {
        Feature::LEXICAL.contains(&self)
    }
}

impl fmt::Display for Feature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How to resolve unknown answers before evaluating the strata.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CompletionPolicy {
    /// Unknown answers are an error listing the affected fields.
    #[default]
    Reject,
    /// Unknown counts as yes.
    Pessimistic,
    /// Unknown counts as no.
    Optimistic,
}

/// The thirteen named tri-state answers. Unlisted keys in the JSON form are
/// rejected; missing keys deserialize as unknown.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FeatureVector {
    #[serde(default)]
    pub long_url_link: Answer,
    #[serde(default)]
    pub ip_instead_of_dns: Answer,
    #[serde(default)]
    pub many_dots: Answer,
    #[serde(default)]
    pub modified_port: Answer,
    #[serde(default)]
    pub suspicious_ssl: Answer,
    #[serde(default)]
    pub domain_age_under_6mo: Answer,
    #[serde(default)]
    pub unsecured_page: Answer,
    #[serde(default)]
    pub slow_account_access: Answer,
    #[serde(default)]
    pub js_hiding: Answer,
    #[serde(default)]
    pub popup_windows: Answer,
    #[serde(default)]
    pub visual_similarity: Answer,
    #[serde(default)]
    pub google_blacklisted: Answer,
    #[serde(default)]
    pub redirected_pages: Answer,
}

impl FeatureVector {
    /// Vector with every answer set to the same value.
    pub fn uniform(answer: Answer) -> Self {
        let mut v = Self::default();
        for f in Feature::ALL {
            v.set(f, answer);
        }
        v
    }

    pub fn get(&self, feature: Feature) -> Answer {
        match feature {
            Feature::LongUrlLink => self.long_url_link,
            Feature::IpInsteadOfDns => self.ip_instead_of_dns,
            Feature::ManyDots => self.many_dots,
            Feature::ModifiedPort => self.modified_port,
            Feature::SuspiciousSsl => self.suspicious_ssl,
            Feature::DomainAgeUnder6Mo => self.domain_age_under_6mo,
            Feature::UnsecuredPage => self.unsecured_page,
            Feature::SlowAccountAccess => self.slow_account_access,
            Feature::JsHiding => self.js_hiding,
            Feature::PopupWindows => self.popup_windows,
            Feature::VisualSimilarity => self.visual_similarity,
            Feature::GoogleBlacklisted => self.google_blacklisted,
            Feature::RedirectedPages => self.redirected_pages,
        }
    }

    pub fn set(&mut self, feature: Feature, answer: Answer) {
        let slot = match feature {
            Feature::LongUrlLink => &mut self.long_url_link,
            Feature::IpInsteadOfDns => &mut self.ip_instead_of_dns,
            Feature::ManyDots => &mut self.many_dots,
            Feature::ModifiedPort => &mut self.modified_port,
            Feature::SuspiciousSsl => &mut self.suspicious_ssl,
            Feature::DomainAgeUnder6Mo => &mut self.domain_age_under_6mo,
            Feature::UnsecuredPage => &mut self.unsecured_page,
            Feature::SlowAccountAccess => &mut self.slow_account_access,
            Feature::JsHiding => &mut self.js_hiding,
            Feature::PopupWindows => &mut self.popup_windows,
            Feature::VisualSimilarity => &mut self.visual_similarity,
            Feature::GoogleBlacklisted => &mut self.google_blacklisted,
            Feature::RedirectedPages => &mut self.redirected_pages,
        };
        *slot = answer;
    }

    /// Features still answered unknown, in canonical order.
    pub fn unknown_features(&self) -> Vec<Feature> {
        Feature::ALL
            .into_iter()
            .filter(|&f| self.get(f) == Answer::Unknown)
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.unknown_features().is_empty()
    }

    /// Resolves unknown answers per the policy; under
    /// [`CompletionPolicy::Reject`] any unknown answer is an error naming
    /// the affected fields.
    pub fn completed(mut self, policy: CompletionPolicy) -> Result<Self, ModelError> {
        let unknown = self.unknown_features();
        if unknown.is_empty() {
            return Ok(self);
        }
        let fill = match policy {
            CompletionPolicy::Reject => {
                return Err(ModelError::IncompleteFeatures { fields: unknown })
            }
            CompletionPolicy::Pessimistic => Answer::Yes,
            CompletionPolicy::Optimistic => Answer::No,
        };
        for f in unknown {
            self.set(f, fill);
        }
        Ok(self)
    }
}
