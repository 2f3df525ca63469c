use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A finite universe of objects described by categorical condition
/// attributes plus one decision attribute.
///
/// Values are opaque, case-sensitive string tokens; the engine never
/// interprets them. Object ids are the 0-based load order and stay stable
/// for the lifetime of the table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionTable {
    condition_attributes: Vec<String>,
    decision_attribute: String,
    // One entry per object: condition values in column order, decision last.
    rows: Vec<Vec<String>>,
}

impl DecisionTable {
    /// Builds a table from positional rows. Each row must hold one value per
    /// condition attribute, in order, followed by the decision value.
    pub fn new(
        condition_attributes: Vec<String>,
        decision_attribute: String,
        rows: Vec<Vec<String>>,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for name in &condition_attributes {
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateAttribute(name.clone()));
            }
        }
        if seen.contains(decision_attribute.as_str()) {
            return Err(Error::DecisionIsCondition(decision_attribute));
        }

        let width = condition_attributes.len() + 1;
        let table = Self {
            condition_attributes,
            decision_attribute,
            rows,
        };
        for (i, row) in table.rows.iter().enumerate() {
            if row.len() != width {
                return Err(Error::RowWidth {
                    row: i,
                    expected: width,
                    found: row.len(),
                });
            }
            for (col, value) in row.iter().enumerate() {
                if value.is_empty() {
                    return Err(Error::EmptyValue {
                        row: i,
                        attribute: table.column_name(col).to_string(),
                    });
                }
            }
        }
        Ok(table)
    }

    /// Parses the decision-table CSV format: a header row whose last column
    /// is the decision attribute, then one row per object. Cells are plain
    /// comma-separated tokens with no quoting; blank lines are skipped.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let header = loop {
            match lines.next() {
                Some((_, l)) if l.trim_end_matches('\r').is_empty() => continue,
                Some((_, l)) => break l.trim_end_matches('\r'),
                None => {
                    return Err(Error::Csv {
                        line: 1,
                        message: "empty input, expected a header row".to_string(),
                    })
                }
            }
        };
        let mut columns: Vec<String> = header.split(',').map(str::to_string).collect();
        if columns.len() < 2 {
            return Err(Error::Csv {
                line: 1,
                message: "header needs at least one condition column and a decision column"
                    .to_string(),
            });
        }
        for (i, name) in columns.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::Csv {
                    line: 1,
                    message: format!("column {} has an empty name", i + 1),
                });
            }
        }
        let decision = columns.pop().expect("checked len >= 2");

        let mut rows = Vec::new();
        for (idx, raw) in lines {
            let line_no = idx + 1;
            let line = raw.trim_end_matches('\r');
            if line.is_empty() {
                continue;
            }
            let cells: Vec<&str> = line.split(',').collect();
            if cells.len() != columns.len() + 1 {
                return Err(Error::Csv {
                    line: line_no,
                    message: format!(
                        "expected {} cells, found {}",
                        columns.len() + 1,
                        cells.len()
                    ),
                });
            }
            if let Some(col) = cells.iter().position(|c| c.is_empty()) {
                return Err(Error::Csv {
                    line: line_no,
                    message: format!("empty cell in column {}", col + 1),
                });
            }
            rows.push(cells.into_iter().map(str::to_string).collect());
        }
        Self::new(columns, decision, rows)
    }

    pub fn condition_attributes(&self) -> &[String] {
        &self.condition_attributes
    }

    pub fn decision_attribute(&self) -> &str {
        &self.decision_attribute
    }

    /// Number of objects in the universe.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// All object ids, 0..len.
    pub fn universe(&self) -> BTreeSet<usize> {
        (0..self.len()).collect()
    }

    /// Value of `attribute` (condition or decision) for the given object.
    pub fn value(&self, object: usize, attribute: &str) -> Result<&str> {
        if object >= self.len() {
            return Err(Error::ObjectOutOfBounds {
                id: object,
                universe: self.len(),
            });
        }
        let col = self.column_index(attribute)?;
        Ok(&self.rows[object][col])
    }

    /// Decision value of the given object. Panics if out of bounds; use
    /// [`DecisionTable::value`] for checked access.
    pub fn decision(&self, object: usize) -> &str {
        &self.rows[object][self.condition_attributes.len()]
    }

    /// The object ids whose decision equals `value`.
    pub fn decision_class(&self, value: &str) -> BTreeSet<usize> {
        (0..self.len())
            .filter(|&id| self.decision(id) == value)
            .collect()
    }

    /// Distinct decision values in first-occurrence order.
    pub fn decision_values(&self) -> Vec<&str> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for id in 0..self.len() {
            let d = self.decision(id);
            if seen.insert(d) {
                out.push(d);
            }
        }
        out
    }

    pub(crate) fn column_name(&self, col: usize) -> &str {
        if col == self.condition_attributes.len() {
            &self.decision_attribute
        } else {
            &self.condition_attributes[col]
        }
    }

    /// Column index for a condition attribute, or the decision column.
    pub(crate) fn column_index(&self, attribute: &str) -> Result<usize> {
        if attribute == self.decision_attribute {
            return Ok(self.condition_attributes.len());
        }
        self.condition_attributes
            .iter()
            .position(|a| a == attribute)
            .ok_or_else(|| Error::UnknownAttribute(attribute.to_string()))
    }

    pub(crate) fn raw(&self, object: usize, col: usize) -> &str {
        &self.rows[object][col]
    }

    /// Resolves attribute names (conditions or the decision attribute) to
    /// deduplicated column indices in table order.
    pub(crate) fn resolve_any<S: AsRef<str>>(&self, attrs: &[S]) -> Result<Vec<usize>> {
        let mut cols = BTreeSet::new();
        for a in attrs {
            cols.insert(self.column_index(a.as_ref())?);
        }
        Ok(cols.into_iter().collect())
    }

    /// As [`DecisionTable::resolve_any`] but rejects the decision attribute.
    pub(crate) fn resolve_conditions<S: AsRef<str>>(&self, attrs: &[S]) -> Result<Vec<usize>> {
        let decision_col = self.condition_attributes.len();
        let cols = self.resolve_any(attrs)?;
        if cols.contains(&decision_col) {
            return Err(Error::UnknownAttribute(self.decision_attribute.clone()));
        }
        Ok(cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn builds_and_reads_values() {
        let t = DecisionTable::new(
            names(&["color", "size"]),
            "ok".to_string(),
            vec![
                names(&["red", "big", "yes"]),
                names(&["blue", "small", "no"]),
            ],
        )
        .unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.value(0, "color").unwrap(), "red");
        assert_eq!(t.value(1, "ok").unwrap(), "no");
        assert_eq!(t.decision(0), "yes");
        assert_eq!(t.decision_values(), vec!["yes", "no"]);
    }

    #[test]
    fn rejects_duplicate_and_overlapping_attributes() {
        let err = DecisionTable::new(names(&["a", "a"]), "d".into(), vec![]).unwrap_err();
        assert_eq!(err, Error::DuplicateAttribute("a".into()));

        let err = DecisionTable::new(names(&["a", "b"]), "b".into(), vec![]).unwrap_err();
        assert_eq!(err, Error::DecisionIsCondition("b".into()));
    }

    #[test]
    fn rejects_bad_rows() {
        let err = DecisionTable::new(
            names(&["a"]),
            "d".into(),
            vec![names(&["x", "y", "z"])],
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::RowWidth {
                row: 0,
                expected: 2,
                found: 3
            }
        );

        let err = DecisionTable::new(
            names(&["a"]),
            "d".into(),
            vec![vec!["x".into(), String::new()]],
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::EmptyValue {
                row: 0,
                attribute: "d".into()
            }
        );
    }

    #[test]
    fn unknown_attribute_is_named() {
        let t = DecisionTable::new(names(&["a"]), "d".into(), vec![names(&["x", "y"])]).unwrap();
        assert_eq!(
            t.value(0, "nope").unwrap_err(),
            Error::UnknownAttribute("nope".into())
        );
        assert_eq!(
            t.value(3, "a").unwrap_err(),
            Error::ObjectOutOfBounds { id: 3, universe: 1 }
        );
    }

    #[test]
    fn parses_csv() {
        let t = DecisionTable::from_csv("a,b,d\nx,y,yes\nx,z,no\n").unwrap();
        assert_eq!(t.condition_attributes(), &["a", "b"]);
        assert_eq!(t.decision_attribute(), "d");
        assert_eq!(t.len(), 2);
        assert_eq!(t.decision(1), "no");
    }

    #[test]
    fn csv_diagnostics_carry_line_numbers() {
        let err = DecisionTable::from_csv("a,b,d\nx,y\n").unwrap_err();
        assert_eq!(
            err,
            Error::Csv {
                line: 2,
                message: "expected 3 cells, found 2".into()
            }
        );

        let err = DecisionTable::from_csv("a,b,d\nx,,no\n").unwrap_err();
        assert_eq!(
            err,
            Error::Csv {
                line: 2,
                message: "empty cell in column 2".into()
            }
        );

        let err = DecisionTable::from_csv("").unwrap_err();
        assert!(matches!(err, Error::Csv { line: 1, .. }));

        let err = DecisionTable::from_csv("a,a,d\nx,y,no\n").unwrap_err();
        assert_eq!(err, Error::DuplicateAttribute("a".into()));
    }

    #[test]
    fn header_only_csv_is_an_empty_table() {
        let t = DecisionTable::from_csv("a,d\n").unwrap();
        assert!(t.is_empty());
        assert_eq!(t.universe(), BTreeSet::new());
    }
}
