mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

/// Exit codes: 0 success / Reliable, 1 usage or input error, 2 Unreliable
/// (and verification mismatch), 3 Indeterminate.
pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_UNRELIABLE: u8 = 2;
pub const EXIT_INDETERMINATE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "roughphish",
    version,
    about = "Rough-set decision analysis with an embedded phishing-reliability model"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum PolicyArg {
    #[default]
    Conservative,
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum CompleteArg {
    /// Unknown answers are an input error.
    #[default]
    None,
    /// Treat unknown as yes.
    Pessimistic,
    /// Treat unknown as no.
    Optimistic,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a 13-feature vector file against the built-in rules
    Classify {
        /// Feature-vector JSON file
        features_file: PathBuf,

        /// Conflict policy for fired rules
        #[arg(long, value_enum, default_value_t = PolicyArg::Conservative)]
        policy: PolicyArg,

        /// Completion policy for unknown answers
        #[arg(long, value_enum, default_value_t = CompleteArg::None)]
        complete: CompleteArg,

        /// Treat an Indeterminate verdict as Unreliable for the exit code
        #[arg(long)]
        downgrade_indeterminate: bool,

        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Extract the 13 features from a URL, merging probe answers
    Extract {
        /// http/https URL
        url: String,

        /// JSON file answering non-lexical features (manual-file provider)
        #[arg(long)]
        answers: Option<PathBuf>,

        /// JSON file overriding the lexical thresholds
        #[arg(long)]
        thresholds: Option<PathBuf>,

        /// Fail when any feature stays unknown
        #[arg(long)]
        require_complete: bool,

        /// Print only the bare feature-vector JSON (pipeable into classify)
        #[arg(long)]
        features_only: bool,

        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Analyse an arbitrary decision-table CSV
    Analyze {
        /// Decision-table CSV (last column is the decision attribute)
        table: PathBuf,

        /// Attribute subset to survey, attributes comma-separated;
        /// repeatable; an empty string is the empty subset
        #[arg(long = "subsets", value_name = "ATTRS")]
        subsets: Vec<String>,

        /// Compute all minimal reducts
        #[arg(long)]
        reducts: bool,

        /// Compute the core (intersection of reducts)
        #[arg(long)]
        core: bool,

        /// Induce all minimal certain rules
        #[arg(long)]
        rules: bool,

        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Recompute the embedded reference values and audit the built-in rules
    #[command(name = "verify-paper")]
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::from(EXIT_OK);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EXIT_ERROR);
        }
    };

    let result = match cli.command {
        Command::Classify {
            features_file,
            policy,
            complete,
            downgrade_indeterminate,
            format,
        } => commands::classify::run(&features_file, policy, complete, downgrade_indeterminate, format),
        Command::Extract {
            url,
            answers,
            thresholds,
            require_complete,
            features_only,
            format,
        } => commands::extract::run(
            &url,
            answers.as_deref(),
            thresholds.as_deref(),
            require_complete,
            features_only,
            format,
        ),
        Command::Analyze {
            table,
            subsets,
            reducts,
            core,
            rules,
            format,
        } => commands::analyze::run(&table, &subsets, reducts, core, rules, format),
        Command::VerifyPaper { format } => commands::verify::run(format),
    };

    match result {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
