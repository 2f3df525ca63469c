use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::table::DecisionTable;

/// Dependency degree held as the exact fraction |positive region| / |U|.
///
/// The fraction is kept unreduced so a survey over a 26-object table reads
/// `15/26` rather than a reduced form; equality and ordering compare the
/// underlying rationals, so `Gamma::new(3, 13) == Gamma::new(6, 26)`.
#[derive(Debug, Clone, Copy, Eq)]
pub struct Gamma {
    numerator: usize,
    denominator: usize,
}

impl Gamma {
    /// Panics if `denominator` is zero; table operations guard the empty
    /// universe before constructing one.
    pub fn new(numerator: usize, denominator: usize) -> Self {
        assert!(denominator > 0, "gamma denominator must be positive");
        Self {
            numerator,
            denominator,
        }
    }

    pub fn numerator(&self) -> usize {
        self.numerator
    }

    pub fn denominator(&self) -> usize {
        self.denominator
    }

    pub fn is_one(&self) -> bool {
        self.numerator == self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator == 0
    }

    pub fn as_f64(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }

    /// Shortest decimal string that round-trips through f64 — the same
    /// digits common double-printing produces for the fraction.
    pub fn decimal_string(&self) -> String {
        self.as_f64().to_string()
    }
}

impl PartialEq for Gamma {
    fn eq(&self, other: &Self) -> bool {
        self.numerator as u128 * other.denominator as u128
            == other.numerator as u128 * self.denominator as u128
    }
}

impl PartialOrd for Gamma {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Gamma {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.numerator as u128 * other.denominator as u128)
            .cmp(&(other.numerator as u128 * self.denominator as u128))
    }
}

impl fmt::Display for Gamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl Serialize for Gamma {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Gamma", 3)?;
        s.serialize_field("numerator", &self.numerator)?;
        s.serialize_field("denominator", &self.denominator)?;
        s.serialize_field("decimal", &self.decimal_string())?;
        s.end()
    }
}

/// One surveyed attribute subset with its positive region and gamma.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaEntry {
    pub attributes: Vec<String>,
    pub positive_region: BTreeSet<usize>,
    pub gamma: Gamma,
}

/// Gamma survey over a list of attribute subsets, in request order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaReport {
    pub entries: Vec<GammaEntry>,
}

impl DecisionTable {
    /// Objects whose block under `attrs` lies wholly inside one decision
    /// class: the union over decision classes of their lower approximations.
    pub fn positive_region<S: AsRef<str>>(&self, attrs: &[S]) -> Result<BTreeSet<usize>> {
        let cols = self.resolve_conditions(attrs)?;
        Ok(self.positive_region_columns(&cols))
    }

    pub(crate) fn positive_region_columns(&self, cols: &[usize]) -> BTreeSet<usize> {
        let partition = self.partition_by_columns(cols);
        let classes = self.decision_partition();
        let mut pos = BTreeSet::new();
        for class in classes.blocks() {
            let approx = partition
                .approximate(class)
                .expect("decision classes lie inside the universe");
            pos.extend(approx.lower);
        }
        pos
    }

    /// Dependency degree of the decision on `attrs`, as an exact fraction.
    pub fn gamma<S: AsRef<str>>(&self, attrs: &[S]) -> Result<Gamma> {
        if self.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let pos = self.positive_region(attrs)?;
        Ok(Gamma::new(pos.len(), self.len()))
    }

    /// Gamma and positive region for each requested subset, preserving
    /// request order.
    pub fn gamma_survey<S: AsRef<str>>(&self, subsets: &[Vec<S>]) -> Result<GammaReport> {
        if self.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut entries = Vec::with_capacity(subsets.len());
        for subset in subsets {
            let cols = self.resolve_conditions(subset)?;
            let positive_region = self.positive_region_columns(&cols);
            let gamma = Gamma::new(positive_region.len(), self.len());
            entries.push(GammaEntry {
                attributes: cols
                    .iter()
                    .map(|&c| self.column_name(c).to_string())
                    .collect(),
                positive_region,
                gamma,
            });
        }
        Ok(GammaReport { entries })
    }
}
