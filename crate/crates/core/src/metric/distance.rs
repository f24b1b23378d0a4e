use std::collections::VecDeque;

use rayon::prelude::*;

use crate::cayley::CayleyBall;
use crate::error::{Error, Result};

/// Exact all-pairs graph distances together with the core subset on which
/// hyperbolicity is evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u16>,
    core: Vec<usize>,
}

impl DistanceMatrix {
    /// Breadth-first search from every vertex; the core is every vertex.
    pub fn from_adjacency(adj: &[Vec<usize>]) -> Result<Self> {
        let n = adj.len();
        if n > u16::MAX as usize {
            return Err(Error::SizeCap {
                what: "distance matrix vertices",
                count: n,
                cap: u16::MAX as usize,
            });
        }
        let rows: Vec<Vec<u16>> = (0..n).into_par_iter().map(|s| bfs(adj, s)).collect();
        if let Some(v) = rows
            .first()
            .and_then(|r| r.iter().position(|&x| x == u16::MAX))
        {
            return Err(Error::Structure(format!(
                "graph is disconnected: vertex {v} unreachable from 0"
            )));
        }
        Ok(DistanceMatrix {
            n,
            d: rows.concat(),
            core: (0..n).collect(),
        })
    }

    /// Distances from raw row-major values, validated for shape, symmetry and
    /// zero diagonal.
    pub fn from_raw(n: usize, d: Vec<u16>, core: Vec<usize>) -> Result<Self> {
        if d.len() != n * n {
            return Err(Error::SizeMismatch {
                left: d.len(),
                right: n * n,
            });
        }
        let m = DistanceMatrix { n, d, core };
        for &c in &m.core {
            if c >= n {
                return Err(Error::IndexOutOfRange { index: c, size: n });
            }
        }
        for x in 0..n {
            if m.get(x, x) != 0 {
                return Err(Error::Structure(format!("d({x},{x}) is nonzero")));
            }
            for y in 0..x {
                if m.get(x, y) != m.get(y, x) {
                    return Err(Error::Structure(format!("d({x},{y}) is not symmetric")));
                }
            }
        }
        Ok(m)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u32 {
        self.d[x * self.n + y] as u32
    }

    pub fn row(&self, x: usize) -> &[u16] {
        &self.d[x * self.n..(x + 1) * self.n]
    }

    pub fn raw(&self) -> &[u16] {
        &self.d
    }

    pub fn core(&self) -> &[usize] {
        &self.core
    }

    /// Same distances restricted to a different core.
    pub fn with_core(&self, mut core: Vec<usize>) -> Result<Self> {
        core.sort_unstable();
        core.dedup();
        if let Some(&c) = core.iter().find(|&&c| c >= self.n) {
            return Err(Error::IndexOutOfRange {
                index: c,
                size: self.n,
            });
        }
        Ok(DistanceMatrix {
            n: self.n,
            d: self.d.clone(),
            core,
        })
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                size: self.n,
            })
        }
    }

    /// Symmetry, zero diagonal, and the triangle inequality `d(x,z) ≤
    /// d(x,y) + d(y,z)` for core `x, z` and every `y`. Returns the first
    /// violation found.
    pub fn check_metric(&self) -> std::result::Result<(), String> {
        for x in 0..self.n {
            if self.get(x, x) != 0 {
                return Err(format!("d({x},{x}) != 0"));
            }
            for y in 0..x {
                if self.get(x, y) != self.get(y, x) {
                    return Err(format!("d({x},{y}) != d({y},{x})"));
                }
            }
        }
        let bad = self.core.par_iter().find_map_first(|&x| {
            for &z in &self.core {
                let dxz = self.get(x, z);
                for y in 0..self.n {
                    if dxz > self.get(x, y) + self.get(y, z) {
                        return Some(format!("triangle inequality fails on ({x},{y},{z})"));
                    }
                }
            }
            None
        });
        bad.map_or(Ok(()), Err)
    }
}

fn bfs(adj: &[Vec<usize>], s: usize) -> Vec<u16> {
    let mut dist = vec![u16::MAX; adj.len()];
    let mut queue = VecDeque::with_capacity(adj.len());
    dist[s] = 0;
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        let du = dist[u];
        for &v in &adj[u] {
            if dist[v] == u16::MAX {
                dist[v] = du + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// All-pairs distances of a ball; the core is the trusted sub-ball.
pub fn apsp(ball: &CayleyBall) -> Result<DistanceMatrix> {
    let mut m = DistanceMatrix::from_adjacency(&ball.adjacency())?;
    m.core = ball.core();
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::build_ball;
    use crate::engines::{engine_free, Element, Letter};

    pub(crate) fn path(n: usize) -> Vec<Vec<usize>> {
        (0..n)
            .map(|i| {
                let mut v = Vec::new();
                if i > 0 {
                    v.push(i - 1);
                }
                if i + 1 < n {
                    v.push(i + 1);
                }
                v
            })
            .collect()
    }

    #[test]
    fn small_graphs() {
        let p = DistanceMatrix::from_adjacency(&path(3)).unwrap();
        assert_eq!(p.get(0, 2), 2);
        let c4: Vec<Vec<usize>> = (0..4).map(|i| vec![(i + 1) % 4, (i + 3) % 4]).collect();
        let c = DistanceMatrix::from_adjacency(&c4).unwrap();
        assert_eq!(c.get(0, 2), 2);
        assert_eq!(c.get(1, 3), 2);
        assert!(c.check_metric().is_ok());
    }

    #[test]
    fn disconnected_is_structural_error() {
        let adj = vec![vec![1], vec![0], vec![]];
        assert!(matches!(
            DistanceMatrix::from_adjacency(&adj),
            Err(Error::Structure(_))
        ));
    }

    #[test]
    fn free_ball_distances_match_reduced_length() {
        let f = engine_free(2).unwrap();
        let b = build_ball(&f, 2).unwrap();
        let d = apsp(&b).unwrap();
        let idx = |w: Vec<Letter>| b.index_of(&Element::Word(w)).unwrap();
        let ab = idx(vec![Letter::pos(0), Letter::pos(1)]);
        let bb = idx(vec![Letter::pos(1)]);
        // |(ab)⁻¹ b| = |b⁻¹ a⁻¹ b| = 3
        assert_eq!(d.get(ab, bb), 3);
        let elems = b.elements().unwrap();
        assert_eq!(f.closed_form_distance(&elems[ab], &elems[bb]), Some(3));
        for e in b.edges() {
            assert_eq!(d.get(e.u as usize, e.v as usize), 1);
        }
        assert_eq!(d.core(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn from_raw_rejects_asymmetry() {
        assert!(DistanceMatrix::from_raw(2, vec![0, 1, 2, 0], vec![0, 1]).is_err());
        assert!(DistanceMatrix::from_raw(2, vec![0, 1, 1, 0], vec![0, 1]).is_ok());
    }
}
