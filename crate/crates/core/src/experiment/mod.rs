//! Config-driven experiment runner.
//!
//! Each [`ExperimentConfig`] produces one [`ReportDocument`]. Reports go to
//! `out` (or are returned for printing), CSV companions to `csv_out` or next
//! to the report, and every file is written through a temporary file and a
//! rename.

pub mod cache;
mod config;
mod report;

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

pub use config::{Command, ExperimentConfig, TowerFamily};
pub use report::{CompareSection, LevelRow, ReportDocument, SCHEMA_VERSION};

use crate::cayley::{build_ball_capped, graph_to_string, CayleyBall};
use crate::engines::parse_engine_spec;
use crate::error::{Error, Result};
use crate::metric::{analyze, apsp, DeltaOptions, DistanceMatrix};
use crate::towers::{
    compare_free_product_capped, tower_cyclic_p, tower_delta_profile, tower_exponent_p,
    RadiusPolicy,
};

/// What a run produced, besides the files it wrote.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: ReportDocument,
    pub csv: Option<String>,
    pub cache_hit: bool,
}

/// Validates the config, runs the experiment on a pool of `threads` workers
/// (or the global pool) and writes the requested files.
pub fn execute(cfg: &ExperimentConfig) -> Result<Outcome> {
    cfg.validate()?;
    let outcome = match cfg.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
            pool.install(|| run(cfg))?
        }
        None => run(cfg)?,
    };
    if let Some(out) = &cfg.out {
        write_atomic(out, outcome.report.to_json().as_bytes())?;
    }
    if let Some(csv) = &outcome.csv {
        if let Some(path) = csv_path(cfg) {
            write_atomic(&path, csv.as_bytes())?;
        }
    }
    Ok(outcome)
}

fn csv_path(cfg: &ExperimentConfig) -> Option<PathBuf> {
    cfg.csv_out
        .clone()
        .or_else(|| cfg.out.as_ref().map(|p| p.with_extension("csv")))
}

/// Runs without touching the report/CSV outputs (graph and cache files are
/// still written when configured).
pub fn run(cfg: &ExperimentConfig) -> Result<Outcome> {
    match cfg.command {
        Command::Delta => run_delta(cfg),
        Command::Tower => run_tower(cfg),
        Command::Compare => run_compare(cfg),
        Command::Growth => run_growth(cfg),
    }
}

fn delta_options(cfg: &ExperimentConfig) -> DeltaOptions {
    DeltaOptions {
        all_basepoints: cfg.exact_basepoints,
        slim: cfg.slim,
        naive_oracle: cfg.naive_oracle,
        naive_cap: cfg.naive_cap,
        slim_cap: cfg.slim_cap,
    }
}

/// Ball and distances for `spec` at `radius`, through the cache if one is
/// configured.
fn ball_and_distances(
    cfg: &ExperimentConfig,
    spec: &str,
    radius: u32,
) -> Result<(CayleyBall, DistanceMatrix, bool, String)> {
    let engine = parse_engine_spec(spec)?;
    let canonical = engine.to_string();
    if let Some(dir) = &cfg.cache {
        let key = cache::cache_key(&canonical, radius);
        if let Some((ball, d)) = cache::load(dir, &key)? {
            return Ok((ball, d, true, canonical));
        }
        let ball = build_ball_capped(&engine, radius, cfg.max_vertices)?;
        let d = apsp(&ball)?;
        cache::store(dir, &key, &ball, &d)?;
        return Ok((ball, d, false, canonical));
    }
    let ball = build_ball_capped(&engine, radius, cfg.max_vertices)?;
    let d = apsp(&ball)?;
    Ok((ball, d, false, canonical))
}

pub fn run_delta(cfg: &ExperimentConfig) -> Result<Outcome> {
    let start = Instant::now();
    let spec = cfg.engine.as_deref().expect("validated");
    let radius = cfg.radius.expect("validated");
    let (ball, d, cache_hit, canonical) = ball_and_distances(cfg, spec, radius)?;
    if let Some(path) = &cfg.graph_out {
        write_atomic(path, graph_to_string(&ball).as_bytes())?;
    }
    let rep = analyze(&d, &delta_options(cfg))?;
    let mut doc = ReportDocument::empty("delta", canonical);
    doc.radius = Some(ball.radius());
    doc.core_radius = Some(ball.trusted_radius());
    doc.n_vertices = Some(ball.vertex_count());
    doc.fill_delta(&rep);
    doc.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(Outcome {
        report: doc,
        csv: None,
        cache_hit,
    })
}

pub fn run_tower(cfg: &ExperimentConfig) -> Result<Outcome> {
    let start = Instant::now();
    let p = cfg.p.expect("validated");
    let tower = match cfg.family.expect("validated") {
        TowerFamily::CyclicP => {
            tower_cyclic_p(p, cfg.levels.expect("validated"), cfg.max_vertices)?
        }
        TowerFamily::ExponentP => {
            let p = u32::try_from(p).map_err(|_| Error::Config(format!("p = {p} is too large")))?;
            tower_exponent_p(p)?
        }
    };
    let policy = match cfg.radius {
        Some(r) => RadiusPolicy::PerLevel(vec![r; tower.levels().len()]),
        None => RadiusPolicy::Full,
    };
    let rep = tower_delta_profile(&tower, &policy, &delta_options(cfg), cfg.max_vertices);
    let mut doc = ReportDocument::empty("tower", tower.family().to_string());
    doc.radius = cfg.radius;
    doc.method = String::from(crate::metric::METHOD_ALL);
    if cfg.slim {
        doc.method.push(' ');
        doc.method.push_str(crate::metric::METHOD_SLIM);
    }
    doc.fill_tower(&rep);
    doc.elapsed_ms = start.elapsed().as_millis() as u64;
    let csv = doc.tower_csv();
    Ok(Outcome {
        report: doc,
        csv,
        cache_hit: false,
    })
}

pub fn run_compare(cfg: &ExperimentConfig) -> Result<Outcome> {
    let start = Instant::now();
    let left = parse_engine_spec(cfg.left.as_deref().expect("validated"))?;
    let right = parse_engine_spec(cfg.right.as_deref().expect("validated"))?;
    let radius = cfg.radius.expect("validated");
    let rep = compare_free_product_capped(&left, &right, radius, cfg.max_vertices)?;
    let mut doc = ReportDocument::empty("compare", format!("fp({left},{right})"));
    doc.radius = Some(radius);
    doc.delta_all_x2 = Some(rep.delta_product.doubled());
    doc.method = String::from(crate::metric::METHOD_ALL);
    doc.fill_compare(&rep);
    doc.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(Outcome {
        report: doc,
        csv: None,
        cache_hit: false,
    })
}

pub fn run_growth(cfg: &ExperimentConfig) -> Result<Outcome> {
    let start = Instant::now();
    let engine = parse_engine_spec(cfg.engine.as_deref().expect("validated"))?;
    let radius = cfg.radius.expect("validated");
    let ball = build_ball_capped(&engine, radius, cfg.max_vertices)?;
    if let Some(path) = &cfg.graph_out {
        write_atomic(path, graph_to_string(&ball).as_bytes())?;
    }
    let mut doc = ReportDocument::empty("growth", engine.to_string());
    doc.radius = Some(radius);
    doc.core_radius = Some(ball.trusted_radius());
    doc.n_vertices = Some(ball.vertex_count());
    doc.method = "breadth-first ball growth".into();
    doc.growth = Some(crate::cayley::growth_of(&ball));
    doc.elapsed_ms = start.elapsed().as_millis() as u64;
    let csv = doc.growth_csv();
    Ok(Outcome {
        report: doc,
        csv,
        cache_hit: false,
    })
}

/// Writes `bytes` to a temporary file next to `path`, then renames it.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(dir, e))?;
    tmp.write_all(bytes).map_err(|e| Error::io(path, e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}
