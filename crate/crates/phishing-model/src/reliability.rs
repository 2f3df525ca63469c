use std::collections::BTreeSet;
use std::fmt;

use rough_core::DecisionTable;
use serde::Serialize;

use crate::strata::{Stratum, StratumStatus};

/// Decision attribute name of the reliability table.
pub const DECISION_ATTRIBUTE: &str = "R Factor";

/// The final verdict vocabulary of the reliability table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Reliability {
    Reliable,
    Unreliable,
}

impl Reliability {
    pub fn token(self) -> &'static str {
        match self {
            Reliability::Reliable => "Reliable",
            Reliability::Unreliable => "Unreliable",
        }
    }

    pub fn from_token(token: &str) -> Option<Self> {
        match token {
            "Reliable" => Some(Reliability::Reliable),
            "Unreliable" => Some(Reliability::Unreliable),
            _ => None,
        }
    }
}

impl fmt::Display for Reliability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

use Reliability::{Reliable as R, Unreliable as U};
use StratumStatus::{Fake as F, Suspicious as S, Valid as V};

/// The 26 reliability rows: a strata profile and its reliability factor.
/// Two condition tuples appear twice with opposite decisions (rows 2/25 and
/// 14/26, 1-based), which is exactly what makes the table rough.
pub const RELIABILITY_ROWS: [([StratumStatus; 4], Reliability); 26] = [
    ([V, V, V, V], R),
    ([V, V, V, S], R),
    ([V, V, S, F], U),
    ([V, V, S, V], R),
    ([V, S, F, S], R),
    ([V, S, F, F], U),
    ([V, S, V, V], R),
    ([V, S, V, S], U),
    ([V, F, S, F], U),
    ([S, F, S, V], U),
    ([S, F, F, S], U),
    ([S, F, F, F], U),
    ([S, V, V, V], R),
    ([S, V, V, S], R),
    ([S, V, S, F], U),
    ([S, V, S, V], R),
    ([S, S, F, S], U),
    ([S, S, F, F], U),
    ([F, S, V, V], U),
    ([F, S, V, S], U),
    ([F, F, S, F], U),
    ([F, F, S, V], U),
    ([F, F, F, S], U),
    ([F, F, F, F], U),
    ([V, V, V, S], U),
    ([S, V, V, S], U),
];

/// The bundled 26-row reliability table, with the four stratum statuses as
/// condition attributes and the reliability factor as decision.
pub fn canonical_reliability_table() -> DecisionTable {
    let attrs = Stratum::ALL
        .into_iter()
        .map(|s| s.attribute().to_string())
        .collect();
    let rows = RELIABILITY_ROWS
        .iter()
        .map(|(profile, factor)| {
            profile
                .iter()
                .map(|s| s.token().to_string())
                .chain(std::iter::once(factor.token().to_string()))
                .collect()
        })
        .collect();
    DecisionTable::new(attrs, DECISION_ATTRIBUTE.to_string(), rows)
        .expect("the bundled table is well-formed")
}

/// Keeps only the last-occurring row of each distinct condition tuple,
/// preserving the order of the surviving rows. Turns the bundled table into
/// a consistent 24-row table; tables without duplicate condition tuples
/// come back unchanged.
pub fn deduplicate_last_wins(table: &DecisionTable) -> DecisionTable {
    let conditions = table.condition_attributes().to_vec();
    let tuple = |id: usize| -> Vec<&str> {
        conditions
            .iter()
            .map(|a| table.value(id, a).expect("attribute and id are in range"))
            .collect()
    };

    let mut keep = BTreeSet::new();
    let mut seen: Vec<Vec<&str>> = Vec::new();
    for id in (0..table.len()).rev() {
        let key = tuple(id);
        if !seen.contains(&key) {
            seen.push(key);
            keep.insert(id);
        }
    }

    let rows = keep
        .iter()
        .map(|&id| {
            conditions
                .iter()
                .map(|a| table.value(id, a).unwrap().to_string())
                .chain(std::iter::once(table.decision(id).to_string()))
                .collect()
        })
        .collect();
    DecisionTable::new(
        conditions,
        table.decision_attribute().to_string(),
        rows,
    )
    .expect("filtered rows keep the source table's shape")
}
