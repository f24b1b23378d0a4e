//! On-disk cache of balls and their distance matrices.
//!
//! Entries are keyed by a SHA-256 of the canonical engine spec and radius.
//! `<key>.graph` holds the ball in `cayley v1` format and `<key>.dist` the
//! distance matrix, one row per line, space-separated decimal.

use std::fmt::Write as _;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::write_atomic;
use crate::cayley::{graph_to_string, read_graph, CayleyBall};
use crate::error::{Error, Result};
use crate::metric::DistanceMatrix;

pub fn cache_key(spec: &str, radius: u32) -> String {
    let mut h = Sha256::new();
    h.update(spec.as_bytes());
    h.update(b"\n");
    h.update(radius.to_string().as_bytes());
    hex::encode(&h.finalize()[..12])
}

fn paths(dir: &Path, key: &str) -> (PathBuf, PathBuf) {
    (
        dir.join(format!("{key}.graph")),
        dir.join(format!("{key}.dist")),
    )
}

pub fn render_distances(d: &DistanceMatrix) -> String {
    let mut out = String::with_capacity(d.len() * d.len() * 2);
    for x in 0..d.len() {
        for (i, v) in d.row(x).iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{v}");
        }
        out.push('\n');
    }
    out
}

pub fn parse_distances(text: &str, n: usize, core: Vec<usize>) -> Result<DistanceMatrix> {
    let mut values = Vec::with_capacity(n * n);
    let mut rows = 0;
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        rows += 1;
        let before = values.len();
        for tok in line.split_whitespace() {
            let v: u16 = tok.parse().map_err(|_| Error::Parse {
                line: i + 1,
                message: format!("`{tok}` is not a distance"),
            })?;
            values.push(v);
        }
        if values.len() - before != n {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("expected {n} distances"),
            });
        }
    }
    if rows != n {
        return Err(Error::Parse {
            line: rows + 1,
            message: format!("expected {n} rows, found {rows}"),
        });
    }
    DistanceMatrix::from_raw(n, values, core)
}

/// Returns the cached ball and distances, if both files exist.
pub fn load(dir: &Path, key: &str) -> Result<Option<(CayleyBall, DistanceMatrix)>> {
    let (gp, dp) = paths(dir, key);
    if !gp.exists() || !dp.exists() {
        return Ok(None);
    }
    let f = std::fs::File::open(&gp).map_err(|e| Error::io(&gp, e))?;
    let ball = read_graph(BufReader::new(f))?;
    let text = std::fs::read_to_string(&dp).map_err(|e| Error::io(&dp, e))?;
    let d = parse_distances(&text, ball.vertex_count(), ball.core())?;
    Ok(Some((ball, d)))
}

pub fn store(dir: &Path, key: &str, ball: &CayleyBall, d: &DistanceMatrix) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let (gp, dp) = paths(dir, key);
    write_atomic(&gp, graph_to_string(ball).as_bytes())?;
    write_atomic(&dp, render_distances(d).as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::build_ball;
    use crate::engines::engine_cyclic;
    use crate::metric::apsp;

    #[test]
    fn keys_are_stable_and_distinct() {
        assert_eq!(cache_key("free:2", 3), cache_key("free:2", 3));
        assert_ne!(cache_key("free:2", 3), cache_key("free:2", 4));
        assert_eq!(cache_key("free:2", 3).len(), 24);
    }

    #[test]
    fn store_then_load() {
        let dir = tempfile::tempdir().unwrap();
        let ball = build_ball(&engine_cyclic(0), 4).unwrap();
        let d = apsp(&ball).unwrap();
        store(dir.path(), "k", &ball, &d).unwrap();
        let (b2, d2) = load(dir.path(), "k").unwrap().unwrap();
        assert_eq!(b2, ball.without_elements());
        assert_eq!(d2, d);
        assert!(load(dir.path(), "missing").unwrap().is_none());
    }
}
