use std::collections::BTreeMap;
use std::fmt;

use phishing_model::{Answer, Feature, FeatureVector};
use serde::Serialize;
use thiserror::Error;

use crate::url::UrlParts;
use crate::ExtractError;

/// Failure inside a probe implementation. Callers degrade the answer to
/// unknown with a warning instead of propagating.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("{message}")]
pub struct ProbeError {
    pub message: String,
}

impl ProbeError {
    pub fn new(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
        }
    }
}

/// Source of answers for the eight non-lexical features.
///
/// Implementations must be deterministic per (feature, url, provider state)
/// and safe to call concurrently for distinct URLs; they may block on I/O.
pub trait ProbeProvider {
    /// Tag recorded as the answer source.
    fn name(&self) -> &str;

    fn probe(&self, feature: Feature, url: &UrlParts) -> Result<Answer, ProbeError>;
}

/// Default provider: answers unknown for everything.
#[derive(Debug, Default)]
pub struct StubProvider;

impl ProbeProvider for StubProvider {
    fn name(&self) -> &str {
        "stub"
    }

    fn probe(&self, _feature: Feature, _url: &UrlParts) -> Result<Answer, ProbeError> {
        Ok(Answer::Unknown)
    }
}

/// Provider backed by a JSON answers file mapping non-lexical feature names
/// to yes/no/unknown. Missing keys answer unknown.
#[derive(Debug, Clone, Default)]
pub struct ManualFileProvider {
    answers: BTreeMap<Feature, Answer>,
}

impl ManualFileProvider {
    pub fn new(answers: BTreeMap<Feature, Answer>) -> Result<Self, ExtractError> {
        if let Some(f) = answers.keys().find(|f| f.is_lexical()) {
            return Err(ExtractError::LexicalConflict { feature: *f });
        }
        Ok(Self { answers })
    }

    /// Parses the answers-file JSON. Keys outside the thirteen features are
    /// rejected by name; lexical feature keys are a conflict because the URL
    /// text is authoritative for them.
    pub fn from_json(text: &str) -> Result<Self, ExtractError> {
        let raw: BTreeMap<String, Answer> =
            serde_json::from_str(text).map_err(|e| ExtractError::Json(e.to_string()))?;
        let mut answers = BTreeMap::new();
        for (name, answer) in raw {
            let feature = Feature::from_name(&name)
                .ok_or_else(|| ExtractError::UnknownFeature { name: name.clone() })?;
            answers.insert(feature, answer);
        }
        Self::new(answers)
    }
}

impl ProbeProvider for ManualFileProvider {
    fn name(&self) -> &str {
        "manual-file"
    }

    fn probe(&self, feature: Feature, _url: &UrlParts) -> Result<Answer, ProbeError> {
        Ok(self.answers.get(&feature).copied().unwrap_or(Answer::Unknown))
    }
}

/// Named providers, looked up per invocation.
pub struct ProviderRegistry {
    providers: BTreeMap<String, Box<dyn ProbeProvider>>,
}

impl ProviderRegistry {
    /// Registry holding only the stub provider.
    pub fn new() -> Self {
        let mut registry = Self {
            providers: BTreeMap::new(),
        };
        registry.register(Box::new(StubProvider));
        registry
    }

    pub fn register(&mut self, provider: Box<dyn ProbeProvider>) {
        self.providers.insert(provider.name().to_string(), provider);
    }

    pub fn get(&self, name: &str) -> Result<&dyn ProbeProvider, ExtractError> {
        self.providers
            .get(name)
            .map(Box::as_ref)
            .ok_or_else(|| ExtractError::UnknownProvider {
                name: name.to_string(),
            })
    }

    /// Probes one feature through a registered provider.
    pub fn probe(
        &self,
        feature: Feature,
        url: &UrlParts,
        provider: &str,
    ) -> Result<Result<Answer, ProbeError>, ExtractError> {
        Ok(self.get(provider)?.probe(feature, url))
    }
}

impl Default for ProviderRegistry {
    fn default() -> Self {
        Self::new()
    }
}

/// One answered feature with its source tag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeAnswer {
    pub answer: Answer,
    pub source: String,
}

/// Answers for (a subset of) the eight non-lexical features, each tagged
/// with its source. Lexical features cannot be inserted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ProbeAnswerSet {
    answers: BTreeMap<Feature, ProbeAnswer>,
}

impl ProbeAnswerSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records an answer; lexical features are a conflict error because the
    /// URL text is authoritative for them.
    pub fn insert(
        &mut self,
        feature: Feature,
        answer: Answer,
        source: impl Into<String>,
    ) -> Result<(), ExtractError> {
        if feature.is_lexical() {
            return Err(ExtractError::LexicalConflict { feature });
        }
        self.answers.insert(
            feature,
            ProbeAnswer {
                answer,
                source: source.into(),
            },
        );
        Ok(())
    }

    pub fn get(&self, feature: Feature) -> Option<&ProbeAnswer> {
        self.answers.get(&feature)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Feature, &ProbeAnswer)> {
        self.answers.iter().map(|(f, a)| (*f, a))
    }

    pub fn len(&self) -> usize {
        self.answers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.answers.is_empty()
    }
}

/// Probes every non-lexical feature through one provider, degrading
/// per-feature failures to unknown with a warning instead of failing the
/// whole extraction.
pub fn collect_probe_answers(
    url: &UrlParts,
    provider: &dyn ProbeProvider,
) -> (ProbeAnswerSet, Vec<String>) {
    let mut set = ProbeAnswerSet::new();
    let mut warnings = Vec::new();
    for feature in Feature::PROBED {
        let answer = match provider.probe(feature, url) {
            Ok(answer) => answer,
            Err(e) => {
                warnings.push(format!(
                    "probe `{feature}` via `{}` failed: {e}; recorded as unknown",
                    provider.name()
                ));
                Answer::Unknown
            }
        };
        set.insert(feature, answer, provider.name())
            .expect("probed features are never lexical");
    }
    (set, warnings)
}

/// How each merged field was answered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSource<'a> {
    Lexical,
    Probe(&'a str),
    Unset,
}

impl fmt::Display for FieldSource<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSource::Lexical => f.write_str("lexical"),
            FieldSource::Probe(source) => f.write_str(source),
            FieldSource::Unset => f.write_str("unset"),
        }
    }
}

/// A merged feature vector with per-field provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergedVector {
    pub vector: FeatureVector,
    /// Source tag per feature name, `lexical` for the five URL-shape
    /// features, the probe source for answered probe features, `unset`
    /// otherwise.
    pub sources: BTreeMap<Feature, String>,
}

/// Overlays probe answers on the lexical vector. The five lexical fields
/// keep their values (the answer set cannot contain them); fields in
/// neither source stay unknown.
pub fn merge_answers(lexical: &FeatureVector, answers: &ProbeAnswerSet) -> MergedVector {
    let mut vector = *lexical;
    let mut sources = BTreeMap::new();
    for feature in Feature::LEXICAL {
        sources.insert(feature, FieldSource::Lexical.to_string());
    }
    for (feature, answer) in answers.iter() {
        vector.set(feature, answer.answer);
        sources.insert(feature, answer.source.clone());
    }
    for feature in Feature::PROBED {
        sources
            .entry(feature)
            .or_insert_with(|| FieldSource::Unset.to_string());
    }
    MergedVector { vector, sources }
}
