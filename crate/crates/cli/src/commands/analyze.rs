use std::path::Path;

use rough_core::{DecisionRule, DecisionTable, Gamma, GammaEntry};
use serde::Serialize;

use crate::{OutputFormat, EXIT_OK};

use super::{attr_set, provenance_label, read_file};

#[derive(Serialize)]
struct TableSummary<'a> {
    objects: usize,
    condition_attributes: &'a [String],
    decision_attribute: &'a str,
}

#[derive(Serialize)]
struct AnalyzeReport<'a> {
    table: TableSummary<'a>,
    full_gamma: Gamma,
    #[serde(skip_serializing_if = "Option::is_none")]
    survey: Option<Vec<GammaEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reducts: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    core: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rules: Option<Vec<DecisionRule>>,
}

pub fn run(
    table_path: &Path,
    subset_args: &[String],
    reducts: bool,
    core: bool,
    rules: bool,
    format: OutputFormat,
) -> Result<u8, String> {
    let table = DecisionTable::from_csv(&read_file(table_path)?)
        .map_err(|e| format!("`{}`: {e}", table_path.display()))?;

    // with no section flags at all, run everything
    let run_all = subset_args.is_empty() && !reducts && !core && !rules;

    let full_gamma = table
        .gamma(table.condition_attributes())
        .map_err(|e| e.to_string())?;

    let survey = if subset_args.is_empty() {
        None
    } else {
        let subsets: Vec<Vec<String>> = subset_args.iter().map(|s| parse_subset(s)).collect();
        Some(
            table
                .gamma_survey(&subsets)
                .map_err(|e| e.to_string())?
                .entries,
        )
    };
    let reducts_out = (reducts || run_all)
        .then(|| table.reducts())
        .transpose()
        .map_err(|e| e.to_string())?;
    let core_out = (core || run_all)
        .then(|| table.core())
        .transpose()
        .map_err(|e| e.to_string())?;
    let rules_out = (rules || run_all)
        .then(|| table.induce_certain_rules())
        .transpose()
        .map_err(|e| e.to_string())?;

    let report = AnalyzeReport {
        table: TableSummary {
            objects: table.len(),
            condition_attributes: table.condition_attributes(),
            decision_attribute: table.decision_attribute(),
        },
        full_gamma,
        survey,
        reducts: reducts_out,
        core: core_out,
        rules: rules_out,
    };

    match format {
        OutputFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serialises")
        ),
        OutputFormat::Text => print_text(&report),
    }
    Ok(EXIT_OK)
}

/// `"A,B"` -> ["A", "B"]; the empty string is the empty subset.
fn parse_subset(arg: &str) -> Vec<String> {
    if arg.is_empty() {
        Vec::new()
    } else {
        arg.split(',').map(|s| s.trim().to_string()).collect()
    }
}

fn print_text(report: &AnalyzeReport) {
    println!(
        "table: {} objects, {} condition attributes, decision `{}`",
        report.table.objects,
        report.table.condition_attributes.len(),
        report.table.decision_attribute
    );
    println!(
        "gamma(all conditions): {} = {}",
        report.full_gamma,
        report.full_gamma.decimal_string()
    );

    if let Some(survey) = &report.survey {
        println!();
        println!("gamma survey");
        for entry in survey {
            println!(
                "  {:<40} {} = {}  ({} objects)",
                attr_set(&entry.attributes),
                entry.gamma,
                entry.gamma.decimal_string(),
                entry.positive_region.len()
            );
        }
    }
    if let Some(reducts) = &report.reducts {
        println!();
        println!("reducts ({})", reducts.len());
        for reduct in reducts {
            println!("  {}", attr_set(reduct));
        }
    }
    if let Some(core) = &report.core {
        println!();
        println!("core: {}", attr_set(core));
    }
    if let Some(rules) = &report.rules {
        println!();
        println!("certain rules ({})", rules.len());
        for (i, rule) in rules.iter().enumerate() {
            println!(
                "  [{}] {}  ({})",
                i + 1,
                rule,
                provenance_label(rule.provenance())
            );
        }
    }
}
