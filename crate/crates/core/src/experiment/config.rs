use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::cayley::DEFAULT_MAX_VERTICES;
use crate::error::{Error, Result};
use crate::metric::{DEFAULT_NAIVE_CAP, DEFAULT_SLIM_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Delta,
    Tower,
    Compare,
    Growth,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Delta => "delta",
            Command::Tower => "tower",
            Command::Compare => "compare",
            Command::Growth => "growth",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TowerFamily {
    CyclicP,
    ExponentP,
}

fn yes() -> bool {
    true
}
fn default_max_vertices() -> usize {
    DEFAULT_MAX_VERTICES
}
fn default_naive_cap() -> usize {
    DEFAULT_NAIVE_CAP
}
fn default_slim_cap() -> usize {
    DEFAULT_SLIM_CAP
}

/// One experiment. Loaded from TOML (unknown keys are rejected) or
/// assembled from command-line flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub command: Command,
    #[serde(default)]
    pub engine: Option<String>,
    #[serde(default)]
    pub left: Option<String>,
    #[serde(default)]
    pub right: Option<String>,
    #[serde(default)]
    pub radius: Option<u32>,
    #[serde(default = "yes")]
    pub exact_basepoints: bool,
    #[serde(default)]
    pub slim: bool,
    #[serde(default)]
    pub naive_oracle: bool,
    #[serde(default)]
    pub family: Option<TowerFamily>,
    #[serde(default)]
    pub p: Option<u64>,
    #[serde(default)]
    pub levels: Option<u32>,
    #[serde(default)]
    pub out: Option<PathBuf>,
    #[serde(default)]
    pub graph_out: Option<PathBuf>,
    #[serde(default)]
    pub csv_out: Option<PathBuf>,
    #[serde(default)]
    pub cache: Option<PathBuf>,
    #[serde(default)]
    pub threads: Option<usize>,
    #[serde(default = "default_max_vertices")]
    pub max_vertices: usize,
    #[serde(default = "default_naive_cap")]
    pub naive_cap: usize,
    #[serde(default = "default_slim_cap")]
    pub slim_cap: usize,
}

impl ExperimentConfig {
    pub fn new(command: Command) -> Self {
        ExperimentConfig {
            command,
            engine: None,
            left: None,
            right: None,
            radius: None,
            exact_basepoints: true,
            slim: false,
            naive_oracle: false,
            family: None,
            p: None,
            levels: None,
            out: None,
            graph_out: None,
            csv_out: None,
            cache: None,
            threads: None,
            max_vertices: DEFAULT_MAX_VERTICES,
            naive_cap: DEFAULT_NAIVE_CAP,
            slim_cap: DEFAULT_SLIM_CAP,
        }
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: ExperimentConfig =
            toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_toml(&text)
    }

    /// Checks that the fields needed by the command are present and that no
    /// field belonging to another command is set.
    pub fn validate(&self) -> Result<()> {
        let missing =
            |what: &str| Error::Config(format!("{} requires `{what}`", self.command.name()));
        let stray =
            |what: &str| Error::Config(format!("`{what}` is not used by {}", self.command.name()));
        match self.command {
            Command::Delta | Command::Growth => {
                self.engine.as_ref().ok_or_else(|| missing("engine"))?;
                self.radius.ok_or_else(|| missing("radius"))?;
                if self.left.is_some() || self.right.is_some() {
                    return Err(stray("left/right"));
                }
                if self.family.is_some() || self.p.is_some() || self.levels.is_some() {
                    return Err(stray("family/p/levels"));
                }
            }
            Command::Compare => {
                self.left.as_ref().ok_or_else(|| missing("left"))?;
                self.right.as_ref().ok_or_else(|| missing("right"))?;
                self.radius.ok_or_else(|| missing("radius"))?;
                if self.engine.is_some() {
                    return Err(stray("engine"));
                }
                if self.family.is_some() || self.p.is_some() || self.levels.is_some() {
                    return Err(stray("family/p/levels"));
                }
            }
            Command::Tower => {
                let family = self.family.ok_or_else(|| missing("family"))?;
                self.p.ok_or_else(|| missing("p"))?;
                if family == TowerFamily::CyclicP {
                    self.levels.ok_or_else(|| missing("levels"))?;
                } else if self.levels.is_some() {
                    return Err(Error::Config(
                        "exponent-p towers have exactly two levels".into(),
                    ));
                }
                if self.engine.is_some() || self.left.is_some() || self.right.is_some() {
                    return Err(stray("engine/left/right"));
                }
            }
        }
        if self.threads == Some(0) {
            return Err(Error::Config("threads must be at least 1".into()));
        }
        if self.max_vertices == 0 {
            return Err(Error::Config("max_vertices must be at least 1".into()));
        }
        Ok(())
    }
}
