//! Runs experiments from TOML text and prints the reports.
//!
//!     cargo run --example config_runner

use cayley_delta::experiment::{execute, ExperimentConfig};

const RUNS: [&str; 3] = [
    r#"
command = "delta"
engine = "heis:3"
radius = 8
slim = true
naive_oracle = true
"#,
    r#"
command = "tower"
family = "cyclic-p"
p = 3
levels = 3
"#,
    r#"
command = "growth"
engine = "dp(cyclic:0,cyclic:0)"
radius = 5
"#,
];

fn main() -> cayley_delta::Result<()> {
    for text in RUNS {
        let cfg = ExperimentConfig::from_toml(text)?;
        let outcome = execute(&cfg)?;
        print!("{}", outcome.report.to_json());
        if let Some(csv) = outcome.csv {
            print!("{csv}");
        }
    }
    Ok(())
}
