use std::collections::BTreeMap;
use std::path::Path;

use feature_extraction::{
    collect_probe_answers, lexical_features, merge_answers, parse_url, ManualFileProvider,
    ProbeProvider, StubProvider, Thresholds, UrlParts,
};
use phishing_model::{Feature, FeatureVector};
use serde::Serialize;

use crate::{OutputFormat, EXIT_OK};

use super::read_file;

#[derive(Serialize)]
struct ExtractReport<'a> {
    url: &'a str,
    parts: &'a UrlParts,
    features: &'a FeatureVector,
    sources: &'a BTreeMap<Feature, String>,
    warnings: &'a [String],
}

pub fn run(
    url: &str,
    answers: Option<&Path>,
    thresholds: Option<&Path>,
    require_complete: bool,
    features_only: bool,
    format: OutputFormat,
) -> Result<u8, String> {
    let parts = parse_url(url).map_err(|e| e.to_string())?;

    let thresholds = match thresholds {
        Some(path) => Thresholds::from_json(&read_file(path)?)
            .map_err(|e| format!("`{}`: {e}", path.display()))?,
        None => Thresholds::default(),
    };

    let provider: Box<dyn ProbeProvider> = match answers {
        Some(path) => Box::new(
            ManualFileProvider::from_json(&read_file(path)?)
                .map_err(|e| format!("`{}`: {e}", path.display()))?,
        ),
        None => Box::new(StubProvider),
    };

    let lexical = lexical_features(&parts, &thresholds);
    let (probe_answers, warnings) = collect_probe_answers(&parts, provider.as_ref());
    let merged = merge_answers(&lexical, &probe_answers);

    for warning in &warnings {
        eprintln!("warning: {warning}");
    }

    if require_complete && !merged.vector.is_complete() {
        let unknown: Vec<&str> = merged
            .vector
            .unknown_features()
            .into_iter()
            .map(|f| f.name())
            .collect();
        return Err(format!(
            "vector is incomplete, unknown answers for: {}",
            unknown.join(", ")
        ));
    }

    if features_only {
        println!(
            "{}",
            serde_json::to_string_pretty(&merged.vector).expect("vector serialises")
        );
        return Ok(EXIT_OK);
    }

    match format {
        OutputFormat::Json => {
            let report = ExtractReport {
                url,
                parts: &parts,
                features: &merged.vector,
                sources: &merged.sources,
                warnings: &warnings,
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serialises")
            );
        }
        OutputFormat::Text => {
            println!(
                "url: {url} (scheme {}, host {}, port {}{})",
                parts.scheme,
                parts.host,
                parts.port,
                if parts.explicit_port_given { "" } else { " default" }
            );
            println!();
            println!("{:<22} {:<8} source", "feature", "answer");
            for feature in Feature::ALL {
                println!(
                    "{:<22} {:<8} {}",
                    feature.name(),
                    merged.vector.get(feature).to_string(),
                    merged.sources[&feature]
                );
            }
        }
    }
    Ok(EXIT_OK)
}
