use crate::error::{Error, Result};
use crate::table::DecisionTable;

/// Hard cap on condition-attribute count for the exhaustive subset
/// searches; beyond it the operations fail loudly instead of silently
/// approximating.
pub const EXHAUSTIVE_SEARCH_CAP: usize = 20;

impl DecisionTable {
    pub(crate) fn check_search_cap(&self) -> Result<()> {
        let count = self.condition_attributes().len();
        if count > EXHAUSTIVE_SEARCH_CAP {
            return Err(Error::AttributeCapExceeded {
                count,
                cap: EXHAUSTIVE_SEARCH_CAP,
            });
        }
        Ok(())
    }

    /// All minimal condition-attribute subsets whose dependency degree
    /// equals that of the full condition set, by exhaustive search over the
    /// subset lattice. Subsets are returned smallest-first, attributes in
    /// table column order.
    pub fn reducts(&self) -> Result<Vec<Vec<String>>> {
        if self.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        self.check_search_cap()?;
        let n = self.condition_attributes().len();
        let all_columns: Vec<usize> = (0..n).collect();
        let full_pos = self.positive_region_columns(&all_columns).len();

        let mut reduct_masks: Vec<u32> = Vec::new();
        for size in 0..=n {
            for mask in masks_of_size(n, size) {
                if reduct_masks.iter().any(|&r| r & mask == r) {
                    continue; // contains a smaller reduct already found
                }
                let cols = mask_columns(mask);
                if self.positive_region_columns(&cols).len() == full_pos {
                    reduct_masks.push(mask);
                }
            }
        }

        Ok(reduct_masks
            .into_iter()
            .map(|mask| {
                mask_columns(mask)
                    .into_iter()
                    .map(|c| self.condition_attributes()[c].clone())
                    .collect()
            })
            .collect())
    }

    /// Intersection of all reducts: the attributes no reduct can do
    /// without. Empty when the reducts are disjoint.
    pub fn core(&self) -> Result<Vec<String>> {
        let reducts = self.reducts()?;
        let Some(first) = reducts.first() else {
            return Ok(Vec::new());
        };
        Ok(first
            .iter()
            .filter(|attr| reducts[1..].iter().all(|r| r.contains(attr)))
            .cloned()
            .collect())
    }
}

/// All n-bit masks with exactly `size` bits set, ascending.
fn masks_of_size(n: usize, size: usize) -> Vec<u32> {
    if size > n {
        return Vec::new();
    }
    if size == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..size).collect();
    loop {
        out.push(current.iter().fold(0u32, |m, &b| m | 1 << b));
        // rightmost position that can still move up
        let Some(i) = (0..size).rev().find(|&i| current[i] != n - size + i) else {
            return out;
        };
        current[i] += 1;
        for j in i + 1..size {
            current[j] = current[j - 1] + 1;
        }
    }
}

fn mask_columns(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask & (1 << b) != 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_enumeration_is_complete_and_ordered() {
        assert_eq!(masks_of_size(3, 0), vec![0b000]);
        assert_eq!(masks_of_size(3, 1), vec![0b001, 0b010, 0b100]);
        assert_eq!(masks_of_size(3, 2), vec![0b011, 0b101, 0b110]);
        assert_eq!(masks_of_size(3, 3), vec![0b111]);
        assert_eq!(masks_of_size(4, 2).len(), 6);
    }

    #[test]
    fn decision_copying_one_attribute_yields_that_singleton_reduct() {
        // `c` mirrors the decision; `noise` does not separate it.
        let t = DecisionTable::from_csv(
            "c,noise,d\nlo,m,lo\nhi,m,hi\nlo,n,lo\nhi,n,hi\n",
        )
        .unwrap();
        assert_eq!(t.reducts().unwrap(), vec![vec!["c".to_string()]]);
        assert_eq!(t.core().unwrap(), vec!["c".to_string()]);
    }

    #[test]
    fn identical_columns_give_two_reducts_and_an_empty_core() {
        let t = DecisionTable::from_csv("c1,c2,d\nx,x,x\ny,y,y\n").unwrap();
        assert_eq!(
            t.reducts().unwrap(),
            vec![vec!["c1".to_string()], vec!["c2".to_string()]]
        );
        assert_eq!(t.core().unwrap(), Vec::<String>::new());
    }

    #[test]
    fn constant_decision_reduces_to_the_empty_subset() {
        let t = DecisionTable::from_csv("a,d\nx,same\ny,same\n").unwrap();
        assert_eq!(t.reducts().unwrap(), vec![Vec::<String>::new()]);
        assert_eq!(t.core().unwrap(), Vec::<String>::new());
    }

    #[test]
    fn cap_breach_is_a_loud_error() {
        let n = EXHAUSTIVE_SEARCH_CAP + 1;
        let attrs: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
        let mut row: Vec<String> = (0..n).map(|_| "v".to_string()).collect();
        row.push("d".to_string());
        let t = DecisionTable::new(attrs, "dec".into(), vec![row]).unwrap();
        assert_eq!(
            t.reducts().unwrap_err(),
            Error::AttributeCapExceeded { count: n, cap: EXHAUSTIVE_SEARCH_CAP }
        );
    }

    #[test]
    fn empty_table_is_rejected() {
        let t = DecisionTable::from_csv("a,d\n").unwrap();
        assert_eq!(t.reducts().unwrap_err(), Error::EmptyUniverse);
    }
}
