use thiserror::Error;

use crate::features::Feature;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("incomplete feature vector, unknown answers for: {}", format_fields(fields))]
    IncompleteFeatures { fields: Vec<Feature> },

    #[error(transparent)]
    Engine(#[from] rough_core::Error),
}

fn format_fields(fields: &[Feature]) -> String {
    fields
        .iter()
        .map(|f| f.name())
        .collect::<Vec<_>>()
        .join(", ")
}
