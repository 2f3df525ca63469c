use std::path::Path;

use phishing_model::{
    builtin_rule_set, classify, CompletionPolicy, FeatureVector, ModelPolicy, Verdict,
};

use crate::{
    CompleteArg, OutputFormat, PolicyArg, EXIT_INDETERMINATE, EXIT_OK, EXIT_UNRELIABLE,
};

use super::{fired_rule_line, read_file};

pub fn run(
    features_file: &Path,
    policy: PolicyArg,
    complete: CompleteArg,
    downgrade_indeterminate: bool,
    format: OutputFormat,
) -> Result<u8, String> {
    let text = read_file(features_file)?;
    let vector: FeatureVector = serde_json::from_str(&text)
        .map_err(|e| format!("`{}`: {e}", features_file.display()))?;

    let completion = match complete {
        CompleteArg::None => CompletionPolicy::Reject,
        CompleteArg::Pessimistic => CompletionPolicy::Pessimistic,
        CompleteArg::Optimistic => CompletionPolicy::Optimistic,
    };
    let vector = vector.completed(completion).map_err(|e| e.to_string())?;

    let model_policy = match policy {
        PolicyArg::Conservative => ModelPolicy::Conservative,
        PolicyArg::Strict => ModelPolicy::Strict,
    };
    let mut report =
        classify(&vector, &builtin_rule_set(), model_policy).map_err(|e| e.to_string())?;

    let exit = match report.verdict {
        Verdict::Reliable => EXIT_OK,
        Verdict::Unreliable => EXIT_UNRELIABLE,
        Verdict::Indeterminate if downgrade_indeterminate => {
            report
                .notes
                .push("indeterminate verdict downgraded to Unreliable for the exit code".into());
            EXIT_UNRELIABLE
        }
        Verdict::Indeterminate => EXIT_INDETERMINATE,
    };

    match format {
        OutputFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serialises")
            );
        }
        OutputFormat::Text => print_text(&report),
    }
    Ok(exit)
}

fn print_text(report: &phishing_model::ClassificationReport) {
    println!("verdict: {}", report.verdict);
    println!("policy: {}", report.policy);
    println!();
    println!("strata");
    for (stratum, status) in phishing_model::Stratum::ALL
        .into_iter()
        .zip(report.strata.statuses())
    {
        println!("  {:<10} {}", stratum.attribute(), status);
    }
    println!();
    if report.fired_rules.is_empty() {
        println!("fired rules: none");
    } else {
        println!("fired rules");
        for rule in &report.fired_rules {
            println!(
                "  [{}] {}  ({})",
                rule.id,
                fired_rule_line(rule),
                super::provenance_label(rule.provenance)
            );
        }
    }
    if !report.notes.is_empty() {
        println!();
        println!("notes");
        for note in &report.notes {
            println!("  - {note}");
        }
    }
}
