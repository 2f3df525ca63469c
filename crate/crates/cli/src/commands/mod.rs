pub mod analyze;
pub mod classify;
pub mod extract;
pub mod verify;

use phishing_model::FiredRule;
use rough_core::Provenance;

pub fn provenance_label(provenance: Provenance) -> &'static str {
    match provenance {
        Provenance::Paper => "paper",
        Provenance::Induced => "induced",
    }
}

/// `attr=value & ... => conclusion` for display.
pub fn fired_rule_line(rule: &FiredRule) -> String {
    let conditions = rule
        .conditions
        .iter()
        .map(|c| format!("{}={}", c.attribute, c.value))
        .collect::<Vec<_>>()
        .join(" & ");
    format!("{} => {}", conditions, rule.conclusion)
}

/// `{a, b, c}` for attribute subsets.
pub fn attr_set(attrs: &[String]) -> String {
    format!("{{{}}}", attrs.join(", "))
}

pub fn read_file(path: &std::path::Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read `{}`: {e}", path.display()))
}
