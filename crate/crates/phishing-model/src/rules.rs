use rough_core::{DecisionRule, Provenance};

use crate::reliability::Reliability;
use crate::strata::{Stratum, StratumStatus};

use Reliability::{Reliable, Unreliable};
use Stratum::{A, B, C, D};
use StratumStatus::{Fake, Suspicious, Valid};

/// The twelve built-in reliability rules, transcribed verbatim and in
/// published order; rule ids 1..=12 are positions in this list.
pub fn builtin_rule_set() -> Vec<DecisionRule> {
    fn rule(conditions: &[(Stratum, StratumStatus)], conclusion: Reliability) -> DecisionRule {
        DecisionRule::new(
            conditions
                .iter()
                .map(|&(s, v)| (s.attribute().to_string(), v.token().to_string())),
            conclusion.token(),
            Provenance::Paper,
        )
        .expect("built-in rules are well-formed")
    }

    vec![
        rule(&[(D, Fake)], Unreliable),
        rule(&[(B, Fake)], Unreliable),
        rule(&[(A, Fake)], Unreliable),
        rule(&[(B, Valid), (D, Valid)], Reliable),
        rule(&[(B, Valid), (D, Suspicious)], Unreliable),
        rule(&[(A, Suspicious), (C, Fake)], Unreliable),
        rule(&[(A, Valid), (D, Valid)], Reliable),
        rule(&[(B, Suspicious), (C, Valid), (D, Suspicious)], Unreliable),
        rule(&[(A, Suspicious), (C, Valid), (D, Suspicious)], Unreliable),
        rule(&[(A, Suspicious), (B, Suspicious)], Unreliable),
        rule(&[(A, Valid), (C, Fake), (D, Suspicious)], Reliable),
        rule(&[(A, Suspicious), (C, Valid), (D, Valid)], Reliable),
    ]
}
