use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::table::DecisionTable;

/// Equivalence classes of value agreement on an attribute subset.
///
/// Two objects share a block iff they agree on every attribute of the
/// subset; the empty subset yields a single block holding the whole
/// universe. Blocks are ordered by their smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    attributes: Vec<String>,
    blocks: Vec<BTreeSet<usize>>,
    universe: usize,
}

impl Partition {
    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn blocks(&self) -> &[BTreeSet<usize>] {
        &self.blocks
    }

    pub fn universe_size(&self) -> usize {
        self.universe
    }

    /// Lower and upper approximations of `target` under this partition.
    ///
    /// The lower approximation collects blocks fully inside the target, the
    /// upper approximation blocks that touch it; the boundary is their
    /// difference and the target is definable exactly when it is empty.
    pub fn approximate(&self, target: &BTreeSet<usize>) -> Result<ApproximationResult> {
        if let Some(&bad) = target.iter().find(|&&id| id >= self.universe) {
            return Err(Error::ObjectOutOfBounds {
                id: bad,
                universe: self.universe,
            });
        }
        let mut lower = BTreeSet::new();
        let mut upper = BTreeSet::new();
        for block in &self.blocks {
            let overlap = block.intersection(target).count();
            if overlap > 0 {
                upper.extend(block.iter().copied());
                if overlap == block.len() {
                    lower.extend(block.iter().copied());
                }
            }
        }
        let boundary: BTreeSet<usize> = upper.difference(&lower).copied().collect();
        let definable = boundary.is_empty();
        Ok(ApproximationResult {
            target: target.clone(),
            lower,
            upper,
            boundary,
            definable,
        })
    }
}

/// Result of approximating a target object set under a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproximationResult {
    pub target: BTreeSet<usize>,
    pub lower: BTreeSet<usize>,
    pub upper: BTreeSet<usize>,
    pub boundary: BTreeSet<usize>,
    pub definable: bool,
}

impl DecisionTable {
    /// Partition of the universe by agreement on `attrs` (condition
    /// attributes and/or the decision attribute; the empty set is allowed
    /// and yields one block).
    pub fn partition_by<S: AsRef<str>>(&self, attrs: &[S]) -> Result<Partition> {
        let cols = self.resolve_any(attrs)?;
        Ok(self.partition_by_columns(&cols))
    }

    pub(crate) fn partition_by_columns(&self, cols: &[usize]) -> Partition {
        let mut index: HashMap<Vec<&str>, usize> = HashMap::new();
        let mut blocks: Vec<BTreeSet<usize>> = Vec::new();
        for id in 0..self.len() {
            let key: Vec<&str> = cols.iter().map(|&c| self.raw(id, c)).collect();
            let pos = *index.entry(key).or_insert_with(|| {
                blocks.push(BTreeSet::new());
                blocks.len() - 1
            });
            blocks[pos].insert(id);
        }
        // Objects are scanned in id order, so first-seen key order already
        // sorts blocks by smallest member.
        Partition {
            attributes: cols.iter().map(|&c| self.column_name(c).to_string()).collect(),
            blocks,
            universe: self.len(),
        }
    }

    /// Partition of the universe into decision classes.
    pub fn decision_partition(&self) -> Partition {
        self.partition_by_columns(&[self.condition_attributes().len()])
    }
}
