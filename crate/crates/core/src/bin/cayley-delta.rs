//! Command-line front end: parses flags into an `ExperimentConfig` and maps
//! errors to exit codes (2 config, 3 size cap, 4 I/O).

use std::path::PathBuf;
use std::process::ExitCode;

use cayley_delta::experiment::{execute, Command, ExperimentConfig, TowerFamily};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    version,
    about = "Gromov hyperbolicity of Cayley graph balls and quotient towers"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// δ of a Cayley ball
    Delta {
        #[arg(long)]
        engine: String,
        #[arg(long)]
        radius: u32,
        /// Maximise over every core basepoint (pass `false` for the identity only)
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        exact_basepoints: bool,
        #[arg(long)]
        slim: bool,
        #[arg(long)]
        naive_oracle: bool,
        #[command(flatten)]
        common: Common,
    },
    /// δ profile of a finite quotient tower
    Tower {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        levels: Option<u32>,
        /// Ball radius per level (default: the whole finite Cayley graph)
        #[arg(long)]
        radius: Option<u32>,
        #[arg(long)]
        slim: bool,
        #[command(flatten)]
        common: Common,
    },
    /// δ of two factors against their free product
    Compare {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        radius: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Ball sizes |B_0| … |B_r|
    Growth {
        #[arg(long)]
        engine: String,
        #[arg(long)]
        radius: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Run an experiment described by a TOML file
    Run { config: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    CyclicP,
    ExponentP,
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    graph_out: Option<PathBuf>,
    #[arg(long)]
    csv_out: Option<PathBuf>,
    #[arg(long)]
    cache: Option<PathBuf>,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    max_vertices: Option<usize>,
    #[arg(long)]
    naive_cap: Option<usize>,
    #[arg(long)]
    slim_cap: Option<usize>,
}

impl Common {
    fn apply(self, cfg: &mut ExperimentConfig) {
        cfg.out = self.out;
        cfg.graph_out = self.graph_out;
        cfg.csv_out = self.csv_out;
        cfg.cache = self.cache;
        cfg.threads = self.threads;
        if let Some(v) = self.max_vertices {
            cfg.max_vertices = v;
        }
        if let Some(v) = self.naive_cap {
            cfg.naive_cap = v;
        }
        if let Some(v) = self.slim_cap {
            cfg.slim_cap = v;
        }
    }
}

fn config_from(cmd: Cmd) -> cayley_delta::Result<ExperimentConfig> {
    let cfg = match cmd {
        Cmd::Delta {
            engine,
            radius,
            exact_basepoints,
            slim,
            naive_oracle,
            common,
        } => {
            let mut c = ExperimentConfig::new(Command::Delta);
            c.engine = Some(engine);
            c.radius = Some(radius);
            c.exact_basepoints = exact_basepoints;
            c.slim = slim;
            c.naive_oracle = naive_oracle;
            common.apply(&mut c);
            c
        }
        Cmd::Tower {
            family,
            p,
            levels,
            radius,
            slim,
            common,
        } => {
            let mut c = ExperimentConfig::new(Command::Tower);
            c.family = Some(match family {
                Family::CyclicP => TowerFamily::CyclicP,
                Family::ExponentP => TowerFamily::ExponentP,
            });
            c.p = Some(p);
            c.levels = levels;
            c.radius = radius;
            c.slim = slim;
            common.apply(&mut c);
            c
        }
        Cmd::Compare {
            left,
            right,
            radius,
            common,
        } => {
            let mut c = ExperimentConfig::new(Command::Compare);
            c.left = Some(left);
            c.right = Some(right);
            c.radius = Some(radius);
            common.apply(&mut c);
            c
        }
        Cmd::Growth {
            engine,
            radius,
            common,
        } => {
            let mut c = ExperimentConfig::new(Command::Growth);
            c.engine = Some(engine);
            c.radius = Some(radius);
            common.apply(&mut c);
            c
        }
        Cmd::Run { config } => ExperimentConfig::load(&config)?,
    };
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = config_from(cli.command).and_then(|cfg| {
        let outcome = execute(&cfg)?;
        if outcome.cache_hit {
            eprintln!("cache hit");
        }
        if cfg.out.is_none() {
            match (&outcome.csv, cfg.command) {
                (Some(csv), Command::Growth) if cfg.csv_out.is_none() => print!("{csv}"),
                _ => print!("{}", outcome.report.to_json()),
            }
        }
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
