use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::table::DecisionTable;

/// Where a rule came from: transcribed from the published model, or
/// induced from a table by this engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Paper,
    Induced,
}

/// One `attribute = value` requirement of a rule.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Condition {
    pub attribute: String,
    pub value: String,
}

/// A conjunction of attribute/value conditions implying a decision value.
///
/// Conditions are normalised to attribute-name order and each attribute may
/// appear at most once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecisionRule {
    conditions: Vec<Condition>,
    conclusion: String,
    provenance: Provenance,
}

impl DecisionRule {
    pub fn new<A, V, C>(conditions: C, conclusion: impl Into<String>, provenance: Provenance) -> Result<Self>
    where
        A: Into<String>,
        V: Into<String>,
        C: IntoIterator<Item = (A, V)>,
    {
        let mut normalised: Vec<Condition> = conditions
            .into_iter()
            .map(|(a, v)| Condition {
                attribute: a.into(),
                value: v.into(),
            })
            .collect();
        if normalised.is_empty() {
            return Err(Error::EmptyRule);
        }
        normalised.sort();
        for pair in normalised.windows(2) {
            if pair[0].attribute == pair[1].attribute {
                return Err(Error::DuplicateCondition(pair[0].attribute.clone()));
            }
        }
        Ok(Self {
            conditions: normalised,
            conclusion: conclusion.into(),
            provenance,
        })
    }

    pub fn conditions(&self) -> &[Condition] {
        &self.conditions
    }

    pub fn conclusion(&self) -> &str {
        &self.conclusion
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Same conditions minus the one on `attribute`; `None` when that would
    /// leave the rule empty or the attribute is not referenced.
    pub fn without_condition(&self, attribute: &str) -> Option<Self> {
        if self.conditions.len() < 2 || !self.conditions.iter().any(|c| c.attribute == attribute) {
            return None;
        }
        Some(Self {
            conditions: self
                .conditions
                .iter()
                .filter(|c| c.attribute != attribute)
                .cloned()
                .collect(),
            conclusion: self.conclusion.clone(),
            provenance: self.provenance,
        })
    }

    /// True when every condition of `self` also appears in `other`.
    pub fn conditions_subsume(&self, other: &Self) -> bool {
        self.conditions.iter().all(|c| other.conditions.contains(c))
    }

    /// Audits the rule against a table: which objects match, and whether
    /// they all carry the rule's conclusion.
    ///
    /// Condition attributes must exist in the table; values are opaque, so a
    /// value the table never uses simply matches nothing and the check comes
    /// back certain and vacuous.
    pub fn check(&self, table: &DecisionTable) -> Result<RuleCheck> {
        let cols: Vec<(usize, &str)> = self
            .conditions
            .iter()
            .map(|c| {
                table
                    .resolve_conditions(&[c.attribute.as_str()])
                    .map(|cols| (cols[0], c.value.as_str()))
            })
            .collect::<Result<_>>()?;

        let mut matched = BTreeSet::new();
        let mut counterexamples = BTreeSet::new();
        for id in 0..table.len() {
            if cols.iter().all(|&(col, value)| table.raw(id, col) == value) {
                matched.insert(id);
                if table.decision(id) != self.conclusion {
                    counterexamples.insert(id);
                }
            }
        }
        let status = if counterexamples.is_empty() {
            RuleStatus::Certain
        } else {
            RuleStatus::Contradicted
        };
        Ok(RuleCheck {
            status,
            vacuous: matched.is_empty(),
            matched,
            counterexamples,
        })
    }

    fn matches_map(&self, object: &BTreeMap<String, String>) -> bool {
        self.conditions
            .iter()
            .all(|c| object.get(&c.attribute).map(String::as_str) == Some(c.value.as_str()))
    }
}

impl std::fmt::Display for DecisionRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, c) in self.conditions.iter().enumerate() {
            if i > 0 {
                write!(f, " & ")?;
            }
            write!(f, "{}={}", c.attribute, c.value)?;
        }
        write!(f, " => {}", self.conclusion)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleStatus {
    Certain,
    Contradicted,
}

/// Outcome of auditing one rule against a table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleCheck {
    pub status: RuleStatus,
    /// True when the rule matched no object at all (certain only vacuously).
    pub vacuous: bool,
    pub matched: BTreeSet<usize>,
    pub counterexamples: BTreeSet<usize>,
}

/// How [`apply_rules`] resolves disagreement between fired rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConflictPolicy {
    /// The earliest decision value in `precedence` concluded by any fired
    /// rule wins; conclusions not listed rank after all listed ones in
    /// firing order. No fired rules means no verdict.
    Conservative { precedence: Vec<String> },
    /// All fired rules must agree; any cross-conclusion conflict (or no
    /// fired rule) yields no verdict.
    Strict,
}

/// Verdict of applying a rule list to one object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleVerdict {
    /// `None` means indeterminate.
    pub decision: Option<String>,
    /// 0-based indices into the rule list, in list order.
    pub fired: Vec<usize>,
}

/// Applies every rule to an attribute/value map. The object must supply
/// every attribute referenced by any rule, fired or not.
pub fn apply_rules(
    rules: &[DecisionRule],
    object: &BTreeMap<String, String>,
    policy: &ConflictPolicy,
) -> Result<RuleVerdict> {
    for rule in rules {
        for c in rule.conditions() {
            if !object.contains_key(&c.attribute) {
                return Err(Error::MissingAttribute(c.attribute.clone()));
            }
        }
    }

    let fired: Vec<usize> = rules
        .iter()
        .enumerate()
        .filter(|(_, r)| r.matches_map(object))
        .map(|(i, _)| i)
        .collect();

    let decision = match policy {
        ConflictPolicy::Strict => {
            let mut conclusions: Vec<&str> = fired.iter().map(|&i| rules[i].conclusion()).collect();
            conclusions.dedup();
            match conclusions.as_slice() {
                [only] => Some(only.to_string()),
                _ => None,
            }
        }
        ConflictPolicy::Conservative { precedence } => fired
            .iter()
            .enumerate()
            .map(|(order, &i)| {
                let conclusion = rules[i].conclusion();
                let rank = precedence
                    .iter()
                    .position(|p| p == conclusion)
                    .map_or((precedence.len(), order), |r| (r, 0));
                (rank, conclusion)
            })
            .min_by_key(|&(rank, _)| rank)
            .map(|(_, conclusion)| conclusion.to_string()),
    };

    Ok(RuleVerdict { decision, fired })
}

impl DecisionTable {
    /// All minimal certain rules of the table.
    ///
    /// A rule is certain when at least one object matches it and every
    /// matching object carries its conclusion; it is minimal when no proper
    /// non-empty subset of its conditions is itself certain. The search
    /// grows condition sets breadth-first over sizes 1..=n, pruning
    /// supersets of condition sets already found certain, and returns rules
    /// with fewer conditions first, then in lexicographic order of their
    /// attribute/value pairs.
    pub fn induce_certain_rules(&self) -> Result<Vec<DecisionRule>> {
        if self.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        self.check_search_cap()?;
        let n = self.condition_attributes().len();

        // (column, value) condition sets found certain, sorted by column.
        let mut found: Vec<(Vec<(usize, String)>, String)> = Vec::new();
        for size in 1..=n {
            for cols in column_combinations(n, size) {
                // Group objects by their value tuple on these columns; only
                // realised tuples can satisfy the match requirement.
                let mut groups: HashMap<Vec<&str>, Vec<usize>> = HashMap::new();
                for id in 0..self.len() {
                    let key: Vec<&str> = cols.iter().map(|&c| self.raw(id, c)).collect();
                    groups.entry(key).or_default().push(id);
                }
                let mut keys: Vec<Vec<&str>> = groups.keys().cloned().collect();
                keys.sort();
                for key in keys {
                    let ids = &groups[&key];
                    let candidate: Vec<(usize, String)> = cols
                        .iter()
                        .zip(&key)
                        .map(|(&c, v)| (c, v.to_string()))
                        .collect();
                    if found
                        .iter()
                        .any(|(certain, _)| is_condition_subset(certain, &candidate))
                    {
                        continue;
                    }
                    let conclusion = self.decision(ids[0]);
                    if ids.iter().all(|&id| self.decision(id) == conclusion) {
                        found.push((candidate, conclusion.to_string()));
                    }
                }
            }
        }

        let mut rules: Vec<DecisionRule> = found
            .into_iter()
            .map(|(conditions, conclusion)| {
                DecisionRule::new(
                    conditions
                        .into_iter()
                        .map(|(c, v)| (self.condition_attributes()[c].clone(), v)),
                    conclusion,
                    Provenance::Induced,
                )
                .expect("induced condition sets are non-empty and duplicate-free")
            })
            .collect();
        rules.sort_by(|a, b| {
            a.conditions()
                .len()
                .cmp(&b.conditions().len())
                .then_with(|| a.conditions().cmp(b.conditions()))
        });
        Ok(rules)
    }
}

fn is_condition_subset(small: &[(usize, String)], big: &[(usize, String)]) -> bool {
    small.iter().all(|c| big.contains(c))
}

fn column_combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, size: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for c in start..n {
            current.push(c);
            rec(n, size, c + 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, size, 0, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rule(conds: &[(&str, &str)], conclusion: &str) -> DecisionRule {
        DecisionRule::new(
            conds.iter().map(|&(a, v)| (a, v)),
            conclusion,
            Provenance::Induced,
        )
        .unwrap()
    }

    fn sample() -> DecisionTable {
        DecisionTable::from_csv(
            "color,size,ok\nred,big,yes\nred,small,yes\nblue,big,no\nblue,small,no\n",
        )
        .unwrap()
    }

    #[test]
    fn rule_construction_normalises_and_validates() {
        let r = rule(&[("size", "big"), ("color", "red")], "yes");
        let attrs: Vec<_> = r.conditions().iter().map(|c| c.attribute.as_str()).collect();
        assert_eq!(attrs, vec!["color", "size"]);
        assert_eq!(r.to_string(), "color=red & size=big => yes");

        assert_eq!(
            DecisionRule::new(Vec::<(&str, &str)>::new(), "yes", Provenance::Induced).unwrap_err(),
            Error::EmptyRule
        );
        assert_eq!(
            DecisionRule::new([("a", "x"), ("a", "y")], "yes", Provenance::Induced).unwrap_err(),
            Error::DuplicateCondition("a".into())
        );
    }

    #[test]
    fn check_reports_matches_and_counterexamples() {
        let t = sample();
        let certain = rule(&[("color", "red")], "yes").check(&t).unwrap();
        assert_eq!(certain.status, RuleStatus::Certain);
        assert!(!certain.vacuous);
        assert_eq!(certain.matched, [0usize, 1].into_iter().collect());
        assert!(certain.counterexamples.is_empty());

        let contradicted = rule(&[("size", "big")], "yes").check(&t).unwrap();
        assert_eq!(contradicted.status, RuleStatus::Contradicted);
        assert_eq!(contradicted.counterexamples, [2usize].into_iter().collect());

        let vacuous = rule(&[("color", "green")], "yes").check(&t).unwrap();
        assert_eq!(vacuous.status, RuleStatus::Certain);
        assert!(vacuous.vacuous);
        assert!(vacuous.matched.is_empty());

        assert_eq!(
            rule(&[("shape", "round")], "yes").check(&t).unwrap_err(),
            Error::UnknownAttribute("shape".into())
        );
    }

    #[test]
    fn induces_the_minimal_certain_rules() {
        let t = sample();
        // color alone decides everything, so the two color rules are the
        // whole minimal set.
        assert_eq!(
            t.induce_certain_rules().unwrap(),
            vec![
                rule(&[("color", "blue")], "no"),
                rule(&[("color", "red")], "yes"),
            ]
        );
    }

    #[test]
    fn induction_needs_two_conditions_when_no_single_one_is_certain() {
        let t = DecisionTable::from_csv(
            "a,b,d\nx,p,yes\nx,q,no\ny,p,no\ny,q,yes\n",
        )
        .unwrap();
        let rules = t.induce_certain_rules().unwrap();
        assert_eq!(rules.len(), 4);
        assert!(rules.iter().all(|r| r.conditions().len() == 2));
        assert!(rules.contains(&rule(&[("a", "x"), ("b", "p")], "yes")));
        // every object is matched by exactly one rule and classified right
        for id in 0..t.len() {
            let matching: Vec<_> = rules
                .iter()
                .filter(|r| r.check(&t).unwrap().matched.contains(&id))
                .collect();
            assert_eq!(matching.len(), 1);
            assert_eq!(matching[0].conclusion(), t.decision(id));
        }
    }

    #[test]
    fn constant_decision_induces_single_condition_rules_only() {
        let t = DecisionTable::from_csv("a,b,d\nx,p,same\ny,q,same\n").unwrap();
        let rules = t.induce_certain_rules().unwrap();
        assert!(!rules.is_empty());
        assert!(rules.iter().all(|r| r.conditions().len() == 1));
        assert!(rules.iter().all(|r| r.conclusion() == "same"));
        for id in 0..t.len() {
            assert!(rules
                .iter()
                .any(|r| r.check(&t).unwrap().matched.contains(&id)));
        }
    }

    #[test]
    fn induced_rules_are_deterministically_ordered() {
        let t = sample();
        let a = t.induce_certain_rules().unwrap();
        let b = t.induce_certain_rules().unwrap();
        assert_eq!(a, b);
        let sorted_check = a.windows(2).all(|w| {
            w[0].conditions().len() < w[1].conditions().len()
                || w[0].conditions() <= w[1].conditions()
        });
        assert!(sorted_check);
    }

    #[test]
    fn apply_rules_policies_and_errors() {
        let rules = vec![
            rule(&[("a", "x")], "bad"),
            rule(&[("b", "p")], "good"),
        ];
        let object: BTreeMap<String, String> = [("a", "x"), ("b", "p")]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();

        let conservative = ConflictPolicy::Conservative {
            precedence: vec!["bad".into(), "good".into()],
        };
        let verdict = apply_rules(&rules, &object, &conservative).unwrap();
        assert_eq!(verdict.fired, vec![0, 1]);
        assert_eq!(verdict.decision.as_deref(), Some("bad"));

        let verdict = apply_rules(&rules, &object, &ConflictPolicy::Strict).unwrap();
        assert_eq!(verdict.decision, None);

        let only_b: BTreeMap<String, String> = [("a", "z"), ("b", "p")]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        let verdict = apply_rules(&rules, &only_b, &ConflictPolicy::Strict).unwrap();
        assert_eq!(verdict.decision.as_deref(), Some("good"));
        assert_eq!(verdict.fired, vec![1]);

        let missing: BTreeMap<String, String> =
            [("a".to_string(), "x".to_string())].into_iter().collect();
        assert_eq!(
            apply_rules(&rules, &missing, &conservative).unwrap_err(),
            Error::MissingAttribute("b".into())
        );
    }

    #[test]
    fn no_fired_rule_means_no_verdict_under_both_policies() {
        let rules = vec![rule(&[("a", "x")], "bad")];
        let object: BTreeMap<String, String> =
            [("a".to_string(), "other".to_string())].into_iter().collect();
        for policy in [
            ConflictPolicy::Conservative {
                precedence: vec!["bad".into()],
            },
            ConflictPolicy::Strict,
        ] {
            let verdict = apply_rules(&rules, &object, &policy).unwrap();
            assert_eq!(verdict.decision, None);
            assert!(verdict.fired.is_empty());
        }
    }

    #[test]
    fn conservative_ranks_unlisted_conclusions_after_listed_ones() {
        let rules = vec![
            rule(&[("a", "x")], "odd"),
            rule(&[("b", "p")], "good"),
        ];
        let object: BTreeMap<String, String> = [("a", "x"), ("b", "p")]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        let policy = ConflictPolicy::Conservative {
            precedence: vec!["bad".into(), "good".into()],
        };
        let verdict = apply_rules(&rules, &object, &policy).unwrap();
        assert_eq!(verdict.decision.as_deref(), Some("good"));
    }
}
