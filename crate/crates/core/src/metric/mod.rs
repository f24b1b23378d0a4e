//! Word-metric distances and hyperbolicity constants.

mod distance;
mod four_point;
mod halfint;
mod slim;

use std::time::{Duration, Instant};

pub use distance::{apsp, DistanceMatrix};
pub use four_point::{
    delta_all, delta_base, four_point_defect, gromov_product, max_min_product, naive_delta_all,
    GromovMatrix, QuadrupleWitness, SquareMatrix, TripleWitness, DEFAULT_NAIVE_CAP,
};
pub use halfint::HalfInt;
pub use slim::{delta_slim, geodesic_points, SlimWitness, DEFAULT_SLIM_CAP};

use crate::error::{Error, Result};

/// Which constants to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeltaOptions {
    /// Maximise over every core basepoint, not just the identity.
    pub all_basepoints: bool,
    pub slim: bool,
    /// Cross-check `delta_all` with the quadruple scan.
    pub naive_oracle: bool,
    pub naive_cap: usize,
    pub slim_cap: usize,
}

impl Default for DeltaOptions {
    fn default() -> Self {
        DeltaOptions {
            all_basepoints: true,
            slim: false,
            naive_oracle: false,
            naive_cap: DEFAULT_NAIVE_CAP,
            slim_cap: DEFAULT_SLIM_CAP,
        }
    }
}

pub const METHOD_BASE: &str = "four-point max-min (identity basepoint)";
pub const METHOD_ALL: &str = "four-point max-min (all core basepoints)";
pub const METHOD_NAIVE: &str = "+ naive quadruple oracle";
pub const METHOD_SLIM: &str = "+ slim (all-geodesics variant)";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperbolicityReport {
    pub delta_base: HalfInt,
    pub witness_base: TripleWitness,
    pub delta_all: Option<HalfInt>,
    pub witness_all: Option<QuadrupleWitness>,
    pub delta_naive: Option<HalfInt>,
    pub delta_slim: Option<HalfInt>,
    pub witness_slim: Option<SlimWitness>,
    pub method: String,
    pub core_size: usize,
    pub elapsed: Duration,
}

impl HyperbolicityReport {
    /// Whether the naive oracle, when run, agreed with the max-min route.
    pub fn oracle_agrees(&self) -> Option<bool> {
        Some(self.delta_naive? == self.delta_all?)
    }
}

/// Runs the requested δ computations; the fixed basepoint is vertex 0 (the
/// identity of a Cayley ball).
pub fn analyze(d: &DistanceMatrix, opts: &DeltaOptions) -> Result<HyperbolicityReport> {
    let start = Instant::now();
    if d.is_empty() {
        return Err(Error::Structure("empty graph".into()));
    }
    if opts.naive_oracle && d.core().len() > opts.naive_cap {
        return Err(Error::SizeCap {
            what: "naive oracle core",
            count: d.core().len(),
            cap: opts.naive_cap,
        });
    }
    let (delta_base_v, witness_base) = delta_base(d, 0)?;
    let mut method = String::from(if opts.all_basepoints {
        METHOD_ALL
    } else {
        METHOD_BASE
    });

    let (delta_all_v, witness_all) = if opts.all_basepoints {
        let (v, w) = delta_all(d)?;
        (Some(v), Some(w))
    } else {
        (None, None)
    };

    let delta_naive = if opts.naive_oracle {
        method.push(' ');
        method.push_str(METHOD_NAIVE);
        Some(naive_delta_all(d, opts.naive_cap)?.0)
    } else {
        None
    };

    let (delta_slim_v, witness_slim) = if opts.slim {
        method.push(' ');
        method.push_str(METHOD_SLIM);
        let (v, w) = delta_slim(d, opts.slim_cap)?;
        (Some(v), Some(w))
    } else {
        (None, None)
    };

    Ok(HyperbolicityReport {
        delta_base: delta_base_v,
        witness_base,
        delta_all: delta_all_v,
        witness_all,
        delta_naive,
        delta_slim: delta_slim_v,
        witness_slim,
        method,
        core_size: d.core().len(),
        elapsed: start.elapsed(),
    })
}
