//! Slim-triangle constant, all-geodesics variant.
//!
//! For core points `x, y, z` every vertex `m` lying on some geodesic from
//! `x` to `y` is measured against the union of every geodesic from `y` to
//! `z` and from `z` to `x`. The maximum of those distances is a lower bound
//! for the thin-triangle constant with adversarially chosen sides.

use rayon::prelude::*;

use super::four_point::better;
use super::{DistanceMatrix, HalfInt};
use crate::error::{Error, Result};

pub const DEFAULT_SLIM_CAP: usize = 200;

/// `{ m : d(x,m) + d(m,y) = d(x,y) }`, in increasing vertex order.
pub fn geodesic_points(d: &DistanceMatrix, x: usize, y: usize) -> Result<Vec<usize>> {
    d.check_index(x)?;
    d.check_index(y)?;
    Ok(interval(d, x, y))
}

fn interval(d: &DistanceMatrix, x: usize, y: usize) -> Vec<usize> {
    let dxy = d.get(x, y);
    let (rx, ry) = (d.row(x), d.row(y));
    (0..d.len())
        .filter(|&m| rx[m] as u32 + ry[m] as u32 == dxy)
        .collect()
}

/// Witness `(x, y, z, m)`: `m` lies on a geodesic from `x` to `y` and is
/// farthest from the other two sides.
pub type SlimWitness = [usize; 4];

pub fn delta_slim(d: &DistanceMatrix, cap: usize) -> Result<(HalfInt, SlimWitness)> {
    let core = d.core();
    if core.len() > cap {
        return Err(Error::SizeCap {
            what: "slim triangle core",
            count: core.len(),
            cap,
        });
    }
    if core.is_empty() {
        return Err(Error::Structure("empty core".into()));
    }
    let c = core.len();
    // intervals between core points, indexed by core position
    let intervals: Vec<Vec<Vec<usize>>> = (0..c)
        .into_par_iter()
        .map(|i| (0..c).map(|j| interval(d, core[i], core[j])).collect())
        .collect();

    let best = (0..c)
        .into_par_iter()
        .map(|i| {
            let mut best: Option<(HalfInt, SlimWitness)> = None;
            for j in 0..c {
                for k in 0..c {
                    let side = &intervals[i][j];
                    let (a, b) = (&intervals[j][k], &intervals[k][i]);
                    for &m in side {
                        let row = d.row(m);
                        let dist = a
                            .iter()
                            .chain(b.iter())
                            .map(|&p| row[p] as i64)
                            .min()
                            .expect("intervals contain their endpoints");
                        let cand = (HalfInt::from_int(dist), [core[i], core[j], core[k], m]);
                        best = Some(match best {
                            None => cand,
                            Some(prev) => better(prev, cand),
                        });
                    }
                }
            }
            best.expect("each interval contains its endpoints")
        })
        .reduce_with(better)
        .expect("core is nonempty");
    Ok(best)
}
