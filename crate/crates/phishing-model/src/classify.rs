use std::fmt;

use rough_core::{apply_rules, Condition, ConflictPolicy, DecisionRule, Provenance};
use serde::{Deserialize, Serialize};

use crate::error::ModelError;
use crate::features::FeatureVector;
use crate::reliability::{canonical_reliability_table, Reliability};
use crate::strata::{evaluate_strata, StrataProfile, Stratum};

/// Conflict handling for classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelPolicy {
    /// Any fired Unreliable rule wins over fired Reliable rules.
    #[default]
    Conservative,
    /// Disagreement between fired rules yields Indeterminate.
    Strict,
}

impl ModelPolicy {
    fn conflict_policy(self) -> ConflictPolicy {
        match self {
            ModelPolicy::Conservative => ConflictPolicy::Conservative {
                precedence: vec![
                    Reliability::Unreliable.token().to_string(),
                    Reliability::Reliable.token().to_string(),
                ],
            },
            ModelPolicy::Strict => ConflictPolicy::Strict,
        }
    }
}

impl fmt::Display for ModelPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelPolicy::Conservative => "conservative",
            ModelPolicy::Strict => "strict",
        })
    }
}

/// Classification outcome. Profiles no rule covers (or, under the strict
/// policy, conflicting rule fire) stay Indeterminate rather than being
/// forced into a decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Reliable,
    Unreliable,
    Indeterminate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Reliable => "Reliable",
            Verdict::Unreliable => "Unreliable",
            Verdict::Indeterminate => "Indeterminate",
        })
    }
}

/// One rule that matched the profile, with its 1-based position in the rule
/// list it was applied from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiredRule {
    pub id: usize,
    pub conditions: Vec<Condition>,
    pub conclusion: String,
    pub provenance: Provenance,
}

/// Full account of one classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub features: FeatureVector,
    pub strata: StrataProfile,
    pub verdict: Verdict,
    pub fired_rules: Vec<FiredRule>,
    pub policy: ModelPolicy,
    pub notes: Vec<String>,
}

/// Evaluates the strata of a complete feature vector and applies the given
/// rules to the resulting profile. Incomplete vectors are an error; apply a
/// [`crate::CompletionPolicy`] first.
pub fn classify(
    features: &FeatureVector,
    rules: &[DecisionRule],
    policy: ModelPolicy,
) -> Result<ClassificationReport, ModelError> {
    let strata = evaluate_strata(features)?;
    let object = strata.as_object();
    let outcome = apply_rules(rules, &object, &policy.conflict_policy())?;

    let fired_rules: Vec<FiredRule> = outcome
        .fired
        .iter()
        .map(|&i| FiredRule {
            id: i + 1,
            conditions: rules[i].conditions().to_vec(),
            conclusion: rules[i].conclusion().to_string(),
            provenance: rules[i].provenance(),
        })
        .collect();

    let mut notes = Vec::new();
    let verdict = match outcome.decision.as_deref() {
        Some("Reliable") => Verdict::Reliable,
        Some("Unreliable") => Verdict::Unreliable,
        Some(other) => {
            notes.push(format!(
                "fired rules conclude `{other}`, which is outside the reliability vocabulary"
            ));
            Verdict::Indeterminate
        }
        None => {
            if fired_rules.is_empty() {
                notes.push("no rule matched the profile".to_string());
            } else {
                notes.push("fired rules disagree; strict policy gives no verdict".to_string());
            }
            Verdict::Indeterminate
        }
    };

    if !profile_in_reliability_table(&strata) {
        notes.push("profile does not appear in the bundled reliability table".to_string());
    }

    Ok(ClassificationReport {
        features: *features,
        strata,
        verdict,
        fired_rules,
        policy,
        notes,
    })
}

fn profile_in_reliability_table(profile: &StrataProfile) -> bool {
    let table = canonical_reliability_table();
    (0..table.len()).any(|id| {
        Stratum::ALL.into_iter().all(|s| {
            table.value(id, s.attribute()).expect("bundled attributes exist")
                == profile.status(s).token()
        })
    })
}
