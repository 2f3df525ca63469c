use rough_core::{DecisionRule, Gamma, RuleCheck, RuleStatus};
use serde::Serialize;

use crate::reliability::{canonical_reliability_table, deduplicate_last_wins};
use crate::rules::builtin_rule_set;
use crate::strata::Stratum;

use Stratum::{A, B, C, D};

/// The nine attribute subsets the published gamma survey lists, with the
/// expected positive-region size over 26 and the printed decimal digits.
const REFERENCE_SURVEY: [(&[Stratum], usize, &str); 9] = [
    (&[A, D], 15, "0.5769230769230769"),
    (&[A, C, D], 19, "0.7307692307692307"),
    (&[A, C], 10, "0.38461538461538464"),
    (&[A, B], 12, "0.46153846153846156"),
    (&[A], 6, "0.23076923076923078"),
    (&[B, D], 16, "0.6153846153846154"),
    (&[B, C, D], 18, "0.6923076923076923"),
    (&[B], 8, "0.3076923076923077"),
    (&[D], 8, "0.3076923076923077"),
];

/// Built-in rule ids (1-based) expected to be contradicted on the raw
/// table; every other rule is expected certain there, and all twelve on the
/// deduplicated table.
const EXPECTED_CONTRADICTED_RAW: [usize; 2] = [5, 9];

/// The nine surveyed subsets as attribute-name lists, in survey order.
pub fn reference_survey_subsets() -> Vec<Vec<String>> {
    REFERENCE_SURVEY
        .iter()
        .map(|(strata, _, _)| strata.iter().map(|s| s.attribute().to_string()).collect())
        .collect()
}

/// One recomputed gamma against its embedded expectation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaCheck {
    pub attributes: Vec<String>,
    pub expected: Gamma,
    pub expected_decimal: String,
    pub computed: Gamma,
    pub computed_decimal: String,
    pub pass: bool,
}

/// One built-in rule audited against the raw and deduplicated tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleAudit {
    pub id: usize,
    pub rule: String,
    pub expected_raw_status: RuleStatus,
    pub raw: RuleCheck,
    pub deduplicated: RuleCheck,
    /// Conditions that can be dropped with the rule staying certain on the
    /// deduplicated table; the raw table still contradicts each drop.
    pub redundant_on_deduplicated: Vec<String>,
    pub pass: bool,
}

/// Joint coverage of the deduplicated table by the built-in rules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageCheck {
    pub uncovered_objects: Vec<usize>,
    pub misclassified_objects: Vec<usize>,
    pub pass: bool,
}

/// Outcome of recomputing every embedded reference value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModelVerification {
    pub gamma_checks: Vec<GammaCheck>,
    pub full_set_gamma: Gamma,
    pub boundary_objects: Vec<usize>,
    pub deduplicated_rows: usize,
    pub deduplicated_gamma: Gamma,
    pub rule_audits: Vec<RuleAudit>,
    pub coverage: CoverageCheck,
    pub least_influential_stratum: String,
    pub most_influential_subset: Vec<String>,
    pub notes: Vec<String>,
    pub passed: bool,
}

/// Recomputes the embedded model's reference values from the bundled
/// reliability table: the nine surveyed gammas, the rough structure of the
/// raw table, and the audit of all twelve rules against the raw and
/// deduplicated tables. `passed` is true only when every gamma matches and
/// the rule audit shows the expected certain/contradicted pattern.
pub fn verify_model() -> ModelVerification {
    let raw = canonical_reliability_table();
    let dedup = deduplicate_last_wins(&raw);
    let strata_attrs: Vec<String> = Stratum::ALL
        .iter()
        .map(|s| s.attribute().to_string())
        .collect();

    // gamma survey against the embedded expectations
    let survey = raw
        .gamma_survey(&reference_survey_subsets())
        .expect("survey subsets are valid condition attributes");
    let gamma_checks: Vec<GammaCheck> = survey
        .entries
        .iter()
        .zip(REFERENCE_SURVEY)
        .map(|(entry, (_, expected_pos, expected_decimal))| {
            let expected = Gamma::new(expected_pos, raw.len());
            let computed = entry.gamma;
            GammaCheck {
                attributes: entry.attributes.clone(),
                expected,
                expected_decimal: expected_decimal.to_string(),
                computed,
                computed_decimal: computed.decimal_string(),
                pass: computed == expected && computed.decimal_string() == expected_decimal,
            }
        })
        .collect();

    // rough structure of the raw table
    let full_set_gamma = raw.gamma(&strata_attrs).expect("table is non-empty");
    let partition = raw
        .partition_by(&strata_attrs)
        .expect("strata attributes exist");
    let reliable = raw.decision_class("Reliable");
    let boundary_objects: Vec<usize> = partition
        .approximate(&reliable)
        .expect("decision class is in range")
        .boundary
        .into_iter()
        .collect();
    let deduplicated_gamma = dedup.gamma(&strata_attrs).expect("table is non-empty");

    // rule audit on both tables
    let rules = builtin_rule_set();
    let rule_audits: Vec<RuleAudit> = rules
        .iter()
        .enumerate()
        .map(|(i, rule)| {
            let id = i + 1;
            let raw_check = rule.check(&raw).expect("rule attributes exist");
            let dedup_check = rule.check(&dedup).expect("rule attributes exist");
            let expected_raw_status = if EXPECTED_CONTRADICTED_RAW.contains(&id) {
                RuleStatus::Contradicted
            } else {
                RuleStatus::Certain
            };
            let redundant_on_deduplicated = redundant_conditions(rule, &dedup);
            let pass = raw_check.status == expected_raw_status
                && dedup_check.status == RuleStatus::Certain
                && !dedup_check.vacuous;
            RuleAudit {
                id,
                rule: rule.to_string(),
                expected_raw_status,
                raw: raw_check,
                deduplicated: dedup_check,
                redundant_on_deduplicated,
                pass,
            }
        })
        .collect();

    // joint coverage of the deduplicated table
    let mut uncovered = Vec::new();
    let mut misclassified = Vec::new();
    for id in 0..dedup.len() {
        let mut fired = false;
        for rule in &rules {
            let check = rule.check(&dedup).expect("rule attributes exist");
            if check.matched.contains(&id) {
                fired = true;
                if rule.conclusion() != dedup.decision(id) {
                    misclassified.push(id);
                }
            }
        }
        if !fired {
            uncovered.push(id);
        }
    }
    misclassified.dedup();
    let coverage = CoverageCheck {
        pass: uncovered.is_empty() && misclassified.is_empty(),
        uncovered_objects: uncovered,
        misclassified_objects: misclassified,
    };

    // influence ranking over the surveyed subsets only
    let singletons = gamma_checks.iter().filter(|c| c.attributes.len() == 1);
    let least_influential_stratum = singletons
        .fold(None::<&GammaCheck>, |best, c| match best {
            Some(b) if b.computed <= c.computed => Some(b),
            _ => Some(c),
        })
        .map(|c| c.attributes[0].clone())
        .unwrap_or_default();
    let most_influential_subset = gamma_checks
        .iter()
        .fold(None::<&GammaCheck>, |best, c| match best {
            Some(b) if b.computed >= c.computed => Some(b),
            _ => Some(c),
        })
        .map(|c| c.attributes.clone())
        .unwrap_or_default();

    let mut notes = vec![
        "objects 1/24 and 13/25 share condition tuples with opposite decisions; \
         last-occurrence-wins deduplication keeps the Unreliable rows"
            .to_string(),
        "the stratum A truth table keeps its anomalous row: (No, Yes, Yes, Yes) -> Valid \
         despite three positive indicators"
            .to_string(),
    ];
    for audit in &rule_audits {
        for attr in &audit.redundant_on_deduplicated {
            notes.push(format!(
                "rule {} stays certain on the deduplicated table without `{attr}`; \
                 only the raw duplicates make that condition load-bearing",
                audit.id
            ));
        }
    }

    let passed = gamma_checks.iter().all(|c| c.pass)
        && rule_audits.iter().all(|a| a.pass)
        && coverage.pass;

    ModelVerification {
        gamma_checks,
        full_set_gamma,
        boundary_objects,
        deduplicated_rows: dedup.len(),
        deduplicated_gamma,
        rule_audits,
        coverage,
        least_influential_stratum,
        most_influential_subset,
        notes,
        passed,
    }
}

/// Conditions whose removal leaves the rule certain on `table`. A
/// single-condition rule is redundant only against a constant decision,
/// which the reliability tables never have.
fn redundant_conditions(rule: &DecisionRule, table: &rough_core::DecisionTable) -> Vec<String> {
    rule.conditions()
        .iter()
        .filter_map(|c| {
            let weaker = rule.without_condition(&c.attribute)?;
            let check = weaker.check(table).ok()?;
            (check.status == RuleStatus::Certain).then(|| c.attribute.clone())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_reference_gamma_matches() {
        let v = verify_model();
        assert_eq!(v.gamma_checks.len(), 9);
        assert!(v.gamma_checks.iter().all(|c| c.pass), "{:#?}", v.gamma_checks);
        assert!(v.passed);
    }

    #[test]
    fn gamma_for_b_and_d_is_16_over_26() {
        let v = verify_model();
        let check = v
            .gamma_checks
            .iter()
            .find(|c| c.attributes == vec!["Stratum B", "Stratum D"])
            .unwrap();
        assert_eq!(check.computed, Gamma::new(16, 26));
        assert_eq!(check.computed_decimal, "0.6153846153846154");
    }

    #[test]
    fn rough_structure_is_as_expected() {
        let v = verify_model();
        assert_eq!(v.full_set_gamma, Gamma::new(22, 26));
        assert_eq!(v.boundary_objects, vec![1, 13, 24, 25]);
        assert_eq!(v.deduplicated_rows, 24);
        assert!(v.deduplicated_gamma.is_one());
    }

    #[test]
    fn rules_5_and_9_flip_from_contradicted_to_certain_after_dedup() {
        let v = verify_model();
        for audit in &v.rule_audits {
            let expect_contradicted = audit.id == 5 || audit.id == 9;
            assert_eq!(
                audit.raw.status,
                if expect_contradicted {
                    RuleStatus::Contradicted
                } else {
                    RuleStatus::Certain
                },
                "rule {}",
                audit.id
            );
            assert_eq!(audit.deduplicated.status, RuleStatus::Certain);
            assert!(audit.pass);
        }
        let rule5 = &v.rule_audits[4];
        assert_eq!(
            rule5.raw.counterexamples,
            [1usize, 13].into_iter().collect()
        );
        let rule9 = &v.rule_audits[8];
        assert_eq!(rule9.raw.counterexamples, [13usize].into_iter().collect());
    }

    #[test]
    fn coverage_of_the_deduplicated_table_is_total_and_correct() {
        let v = verify_model();
        assert!(v.coverage.pass);
        assert!(v.coverage.uncovered_objects.is_empty());
        assert!(v.coverage.misclassified_objects.is_empty());
    }

    #[test]
    fn influence_ranking_over_the_surveyed_subsets() {
        let v = verify_model();
        assert_eq!(v.least_influential_stratum, "Stratum A");
        assert_eq!(
            v.most_influential_subset,
            vec!["Stratum A", "Stratum C", "Stratum D"]
        );
    }

    #[test]
    fn only_rules_8_and_9_carry_dedup_redundant_conditions() {
        // dropping Stratum B from rule 8 leaves (C=Valid & D=Suspicious),
        // and rule 9 survives dropping either Stratum A (same remainder) or
        // Stratum C (leaving A=Suspicious & D=Suspicious); the deduplicated
        // table satisfies all three remainders while the raw duplicates
        // contradict them.
        let v = verify_model();
        for audit in &v.rule_audits {
            match audit.id {
                8 => assert_eq!(audit.redundant_on_deduplicated, vec!["Stratum B"]),
                9 => assert_eq!(
                    audit.redundant_on_deduplicated,
                    vec!["Stratum A", "Stratum C"]
                ),
                _ => assert!(
                    audit.redundant_on_deduplicated.is_empty(),
                    "rule {} unexpectedly redundant: {:?}",
                    audit.id,
                    audit.redundant_on_deduplicated
                ),
            }
        }
    }
}
