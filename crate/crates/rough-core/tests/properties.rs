//! Property tests pitting the engine against independent brute-force
//! oracles on small randomised tables.

use std::collections::BTreeSet;

use proptest::prelude::*;
use rough_core::{DecisionTable, Gamma};

// ---------------------------------------------------------------------------
// generators

/// A random table with up to 8 objects, 4 condition attributes and 3 values
/// per attribute.
fn arb_table() -> impl Strategy<Value = DecisionTable> {
    (1usize..=4, 1usize..=8).prop_flat_map(|(n_attr, n_obj)| {
        proptest::collection::vec(
            proptest::collection::vec(0u8..3, n_attr + 1),
            n_obj,
        )
        .prop_map(move |rows| build_table(n_attr, rows))
    })
}

fn build_table(n_attr: usize, rows: Vec<Vec<u8>>) -> DecisionTable {
    let attrs: Vec<String> = (0..n_attr).map(|i| format!("a{i}")).collect();
    let rows = rows
        .into_iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(i, v)| {
                    if i == n_attr {
                        format!("d{v}")
                    } else {
                        format!("v{v}")
                    }
                })
                .collect()
        })
        .collect();
    DecisionTable::new(attrs, "dec".to_string(), rows).expect("generated tables are well-formed")
}

/// A consistent table: the decision is a function of the full condition
/// tuple, fixed by hashing the tuple.
fn arb_consistent_table() -> impl Strategy<Value = DecisionTable> {
    (1usize..=4, 1usize..=8).prop_flat_map(|(n_attr, n_obj)| {
        proptest::collection::vec(proptest::collection::vec(0u8..3, n_attr), n_obj).prop_map(
            move |rows| {
                let rows = rows
                    .into_iter()
                    .map(|row| {
                        let decision = row.iter().fold(7usize, |h, &v| h * 31 + v as usize) % 2;
                        let mut full = row;
                        full.push(decision as u8);
                        full
                    })
                    .collect();
                build_table(n_attr, rows)
            },
        )
    })
}

/// A random subset of the table's condition attributes, from a bitmask.
fn subset_from_mask(table: &DecisionTable, mask: u8) -> Vec<String> {
    table
        .condition_attributes()
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, a)| a.clone())
        .collect()
}

fn target_from_mask(table: &DecisionTable, mask: u8) -> BTreeSet<usize> {
    (0..table.len()).filter(|id| mask & (1 << id) != 0).collect()
}

// ---------------------------------------------------------------------------
// oracles (deliberately per-object scans, not block unions)

fn agrees(table: &DecisionTable, a: usize, b: usize, attrs: &[String]) -> bool {
    attrs
        .iter()
        .all(|attr| table.value(a, attr).unwrap() == table.value(b, attr).unwrap())
}

fn oracle_lower(table: &DecisionTable, attrs: &[String], target: &BTreeSet<usize>) -> BTreeSet<usize> {
    (0..table.len())
        .filter(|&x| (0..table.len()).all(|y| !agrees(table, x, y, attrs) || target.contains(&y)))
        .collect()
}

fn oracle_upper(table: &DecisionTable, attrs: &[String], target: &BTreeSet<usize>) -> BTreeSet<usize> {
    (0..table.len())
        .filter(|&x| (0..table.len()).any(|y| agrees(table, x, y, attrs) && target.contains(&y)))
        .collect()
}

fn oracle_positive_region(table: &DecisionTable, attrs: &[String]) -> BTreeSet<usize> {
    (0..table.len())
        .filter(|&x| {
            (0..table.len())
                .all(|y| !agrees(table, x, y, attrs) || table.decision(y) == table.decision(x))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// properties

proptest! {
    #[test]
    fn approximation_invariants_hold(table in arb_table(), attr_mask in 0u8..16, target_mask: u8) {
        let attrs = subset_from_mask(&table, attr_mask);
        let target = target_from_mask(&table, target_mask);
        let partition = table.partition_by(&attrs).unwrap();
        let result = partition.approximate(&target).unwrap();

        // inclusion chain and boundary definition
        prop_assert!(result.lower.is_subset(&target));
        prop_assert!(target.is_subset(&result.upper));
        let boundary: BTreeSet<usize> = result.upper.difference(&result.lower).copied().collect();
        prop_assert_eq!(&boundary, &result.boundary);
        prop_assert_eq!(result.definable, boundary.is_empty());

        // lower and upper are unions of whole blocks
        for block in partition.blocks() {
            let in_lower = block.iter().filter(|id| result.lower.contains(id)).count();
            prop_assert!(in_lower == 0 || in_lower == block.len());
            let in_upper = block.iter().filter(|id| result.upper.contains(id)).count();
            prop_assert!(in_upper == 0 || in_upper == block.len());
        }

        // oracle agreement
        prop_assert_eq!(result.lower, oracle_lower(&table, &attrs, &target));
        prop_assert_eq!(result.upper, oracle_upper(&table, &attrs, &target));
    }

    #[test]
    fn duality_links_lower_and_upper(table in arb_table(), attr_mask in 0u8..16, target_mask: u8) {
        let attrs = subset_from_mask(&table, attr_mask);
        let target = target_from_mask(&table, target_mask);
        let complement: BTreeSet<usize> = table.universe().difference(&target).copied().collect();
        let partition = table.partition_by(&attrs).unwrap();

        let lower = partition.approximate(&target).unwrap().lower;
        let upper_of_complement = partition.approximate(&complement).unwrap().upper;
        let dual: BTreeSet<usize> = table.universe().difference(&upper_of_complement).copied().collect();
        prop_assert_eq!(lower, dual);
    }

    #[test]
    fn positive_region_matches_oracle_and_gamma_is_monotone(
        table in arb_table(),
        small_mask in 0u8..16,
        extra_mask in 0u8..16,
    ) {
        let small = subset_from_mask(&table, small_mask);
        let large = subset_from_mask(&table, small_mask | extra_mask);

        prop_assert_eq!(
            table.positive_region(&small).unwrap(),
            oracle_positive_region(&table, &small)
        );

        let g_small = table.gamma(&small).unwrap();
        let g_large = table.gamma(&large).unwrap();
        prop_assert!(g_small <= g_large);
        prop_assert!(g_small >= Gamma::new(0, 1));
        prop_assert!(g_large <= Gamma::new(1, 1));
    }

    #[test]
    fn reducts_are_sound_and_minimal(table in arb_table()) {
        let full: Vec<String> = table.condition_attributes().to_vec();
        let full_gamma = table.gamma(&full).unwrap();
        for reduct in table.reducts().unwrap() {
            prop_assert_eq!(table.gamma(&reduct).unwrap(), full_gamma);
            for dropped in &reduct {
                let smaller: Vec<String> =
                    reduct.iter().filter(|a| a != &dropped).cloned().collect();
                prop_assert!(table.gamma(&smaller).unwrap() < full_gamma);
            }
        }
    }

    #[test]
    fn induced_rules_are_certain_and_minimal(table in arb_table()) {
        let rules = table.induce_certain_rules().unwrap();
        let decisions = table.decision_values().len();
        for rule in &rules {
            let check = rule.check(&table).unwrap();
            prop_assert_eq!(check.status, rough_core::RuleStatus::Certain);
            prop_assert!(!check.vacuous);

            // dropping any single condition leaves a counterexample
            if rule.conditions().len() >= 2 {
                for cond in rule.conditions() {
                    let weaker = rule.without_condition(&cond.attribute).unwrap();
                    let weaker_check = weaker.check(&table).unwrap();
                    prop_assert_eq!(weaker_check.status, rough_core::RuleStatus::Contradicted);
                }
            } else {
                // the empty condition set matches everything, so a single
                // condition is redundant only when the decision is constant
                prop_assert!(decisions > 1 || rule.conditions().len() == 1);
            }
        }
    }

    #[test]
    fn induced_rules_cover_consistent_tables(table in arb_consistent_table()) {
        let rules = table.induce_certain_rules().unwrap();
        for id in 0..table.len() {
            let covering: Vec<_> = rules
                .iter()
                .filter(|r| r.check(&table).unwrap().matched.contains(&id))
                .collect();
            prop_assert!(!covering.is_empty());
            for rule in covering {
                prop_assert_eq!(rule.conclusion(), table.decision(id));
            }
        }
    }

    #[test]
    fn operations_are_deterministic(table in arb_table(), attr_mask in 0u8..16) {
        let attrs = subset_from_mask(&table, attr_mask);
        prop_assert_eq!(table.partition_by(&attrs).unwrap(), table.partition_by(&attrs).unwrap());
        prop_assert_eq!(table.reducts().unwrap(), table.reducts().unwrap());
        prop_assert_eq!(
            table.induce_certain_rules().unwrap(),
            table.induce_certain_rules().unwrap()
        );
    }

    #[test]
    fn csv_roundtrip_preserves_the_table(table in arb_table()) {
        let mut csv = table.condition_attributes().join(",");
        csv.push(',');
        csv.push_str(table.decision_attribute());
        csv.push('\n');
        for id in 0..table.len() {
            let mut cells: Vec<String> = table
                .condition_attributes()
                .iter()
                .map(|a| table.value(id, a).unwrap().to_string())
                .collect();
            cells.push(table.decision(id).to_string());
            csv.push_str(&cells.join(","));
            csv.push('\n');
        }
        prop_assert_eq!(DecisionTable::from_csv(&csv).unwrap(), table);
    }
}
