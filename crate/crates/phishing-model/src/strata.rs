use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::ModelError;
use crate::features::{Answer, Feature, FeatureVector};

/// The four indicator groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stratum {
    A,
    B,
    C,
    D,
}

impl Stratum {
    pub const ALL: [Stratum; 4] = [Stratum::A, Stratum::B, Stratum::C, Stratum::D];

    /// Attribute name used in decision tables and rules.
    pub fn attribute(self) -> &'static str {
        match self {
            Stratum::A => "Stratum A",
            Stratum::B => "Stratum B",
            Stratum::C => "Stratum C",
            Stratum::D => "Stratum D",
        }
    }

    /// Features of this stratum in canonical order.
    pub fn features(self) -> Vec<Feature> {
        Feature::ALL
            .into_iter()
            .filter(|f| f.stratum() == self)
            .collect()
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.attribute())
    }
}

/// Phishy status of one stratum. Report ordering is Valid < Suspicious <
/// Fake.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum StratumStatus {
    Valid,
    Suspicious,
    Fake,
}

impl StratumStatus {
    pub fn token(self) -> &'static str {
        match self {
            StratumStatus::Valid => "Valid",
            StratumStatus::Suspicious => "Suspicious",
            StratumStatus::Fake => "Fake",
        }
    }

    pub fn from_token(token: &str) -> Option<Self> {
        match token {
            "Valid" => Some(StratumStatus::Valid),
            "Suspicious" => Some(StratumStatus::Suspicious),
            "Fake" => Some(StratumStatus::Fake),
            _ => None,
        }
    }
}

impl fmt::Display for StratumStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

use StratumStatus::{Fake as F, Suspicious as S, Valid as V};

// 16-row truth table for stratum A, indexed by the answer bits
// (long_url, ip, dots, port), yes = 1. Transcribed verbatim, including the
// anomalous (No, Yes, Yes, Yes) -> Valid row.
const STRATUM_A_TABLE: [StratumStatus; 16] = [
    V, V, V, S, // No  No  (No No / No Yes / Yes No / Yes Yes)
    V, S, S, V, // No  Yes
    V, S, S, F, // Yes No
    S, S, F, F, // Yes Yes
];

// Shared 8-row truth table for strata B, C and D, indexed by (f1, f2, f3).
const STRATUM_BCD_TABLE: [StratumStatus; 8] = [V, S, S, F, F, F, F, F];

fn definite(feature: Feature, answer: Answer) -> Result<bool, ModelError> {
    answer.as_bool().ok_or(ModelError::IncompleteFeatures {
        fields: vec![feature],
    })
}

/// Status of stratum A from its four answers. Unknown answers are an error
/// naming the field.
pub fn stratum_a_status(
    long_url: Answer,
    ip_host: Answer,
    many_dots: Answer,
    modified_port: Answer,
) -> Result<StratumStatus, ModelError> {
    let idx = (definite(Feature::LongUrlLink, long_url)? as usize) << 3
        | (definite(Feature::IpInsteadOfDns, ip_host)? as usize) << 2
        | (definite(Feature::ManyDots, many_dots)? as usize) << 1
        | definite(Feature::ModifiedPort, modified_port)? as usize;
    Ok(STRATUM_A_TABLE[idx])
}

/// Status of stratum B, C or D from its three answers; the three strata
/// share one truth table. `stratum` only names the fields in errors.
pub fn stratum_bcd_status(
    stratum: Stratum,
    f1: Answer,
    f2: Answer,
    f3: Answer,
) -> Result<StratumStatus, ModelError> {
    let features = stratum.features();
    debug_assert_eq!(features.len(), 3);
    let idx = (definite(features[0], f1)? as usize) << 2
        | (definite(features[1], f2)? as usize) << 1
        | definite(features[2], f3)? as usize;
    Ok(STRATUM_BCD_TABLE[idx])
}

/// The four stratum statuses derived from a complete feature vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrataProfile {
    pub a: StratumStatus,
    pub b: StratumStatus,
    pub c: StratumStatus,
    pub d: StratumStatus,
}

impl StrataProfile {
    pub fn new(a: StratumStatus, b: StratumStatus, c: StratumStatus, d: StratumStatus) -> Self {
        Self { a, b, c, d }
    }

    pub fn statuses(&self) -> [StratumStatus; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn status(&self, stratum: Stratum) -> StratumStatus {
        match stratum {
            Stratum::A => self.a,
            Stratum::B => self.b,
            Stratum::C => self.c,
            Stratum::D => self.d,
        }
    }

    /// Attribute/value map in the vocabulary of the reliability table, for
    /// rule application.
    pub fn as_object(&self) -> BTreeMap<String, String> {
        Stratum::ALL
            .into_iter()
            .map(|s| (s.attribute().to_string(), self.status(s).token().to_string()))
            .collect()
    }
}

impl fmt::Display for StrataProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a, self.b, self.c, self.d)
    }
}

impl Serialize for StrataProfile {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        let mut s = serializer.serialize_struct("StrataProfile", 4)?;
        s.serialize_field("Stratum A", &self.a)?;
        s.serialize_field("Stratum B", &self.b)?;
        s.serialize_field("Stratum C", &self.c)?;
        s.serialize_field("Stratum D", &self.d)?;
        s.end()
    }
}

/// Evaluates all four strata of a complete feature vector. Incomplete
/// vectors are an error listing every unknown field; apply a
/// [`crate::CompletionPolicy`] first to fill unknowns.
pub fn evaluate_strata(v: &FeatureVector) -> Result<StrataProfile, ModelError> {
    let unknown = v.unknown_features();
    if !unknown.is_empty() {
        return Err(ModelError::IncompleteFeatures { fields: unknown });
    }
    Ok(StrataProfile {
        a: stratum_a_status(
            v.long_url_link,
            v.ip_instead_of_dns,
            v.many_dots,
            v.modified_port,
        )?,
        b: stratum_bcd_status(
            Stratum::B,
            v.suspicious_ssl,
            v.domain_age_under_6mo,
            v.unsecured_page,
        )?,
        c: stratum_bcd_status(
            Stratum::C,
            v.slow_account_access,
            v.js_hiding,
            v.popup_windows,
        )?,
        d: stratum_bcd_status(
            Stratum::D,
            v.visual_similarity,
            v.google_blacklisted,
            v.redirected_pages,
        )?,
    })
}
