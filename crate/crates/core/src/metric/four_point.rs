//! Gromov products and the four-point hyperbolicity constant.
//!
//! All products are kept doubled: `2·(x.y)_w = d(x,w) + d(y,w) − d(x,y)`,
//! which is always an integer on a graph.
//!
//! For a basepoint `w` with product matrix `A`, the condition
//! `(x.y)_w ≥ min((x.z)_w, (y.z)_w) − δ` for all `x, y, z` is equivalent to
//! `δ ≥ (A⊗A)[x][y] − A[x][y]` where `⊗` is the max-min product. That turns
//! one basepoint into an `O(n³)` matrix product and all basepoints into
//! `O(n⁴)`.

use rayon::prelude::*;

use super::{DistanceMatrix, HalfInt};
use crate::error::{Error, Result};

/// Dense square matrix of doubled values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<i64>,
}

impl SquareMatrix {
    pub fn new(n: usize, data: Vec<i64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::SizeMismatch {
                left: data.len(),
                right: n * n,
            });
        }
        Ok(SquareMatrix { n, data })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(Error::SizeMismatch {
                    left: r.len(),
                    right: n,
                });
            }
            data.extend_from_slice(r);
        }
        Ok(SquareMatrix { n, data })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> i64 {
        self.data[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[i64] {
        &self.data[x * self.n..(x + 1) * self.n]
    }
}

/// `(A⊗B)[x][y] = max_z min(A[x][z], B[z][y])`.
pub fn max_min_product(a: &SquareMatrix, b: &SquareMatrix) -> Result<SquareMatrix> {
    if a.n != b.n {
        return Err(Error::SizeMismatch {
            left: a.n,
            right: b.n,
        });
    }
    let n = a.n;
    let mut out = vec![i64::MIN; n * n];
    out.par_chunks_mut(n.max(1))
        .enumerate()
        .for_each(|(x, row)| {
            for (z, &axz) in a.row(x).iter().enumerate() {
                for (o, &bzy) in row.iter_mut().zip(b.row(z)) {
                    let v = axz.min(bzy);
                    if v > *o {
                        *o = v;
                    }
                }
            }
        });
    Ok(SquareMatrix { n, data: out })
}

/// Gromov products based at `w`, restricted to the core of `d`. Row and
/// column `i` correspond to vertex `d.core()[i]`.
#[derive(Debug, Clone)]
pub struct GromovMatrix {
    pub basepoint: usize,
    pub core: Vec<usize>,
    pub doubled: SquareMatrix,
}

impl GromovMatrix {
    pub fn new(d: &DistanceMatrix, w: usize) -> Result<Self> {
        d.check_index(w)?;
        let core = d.core().to_vec();
        let c = core.len();
        let dw: Vec<i64> = core.iter().map(|&x| d.get(x, w) as i64).collect();
        let mut data = Vec::with_capacity(c * c);
        for (i, &x) in core.iter().enumerate() {
            let row = d.row(x);
            for (j, &y) in core.iter().enumerate() {
                data.push(dw[i] + dw[j] - row[y] as i64);
            }
        }
        Ok(GromovMatrix {
            basepoint: w,
            core,
            doubled: SquareMatrix { n: c, data },
        })
    }

    pub fn product(&self, i: usize, j: usize) -> HalfInt {
        HalfInt::from_doubled(self.doubled.get(i, j))
    }
}

/// `(x.y)_w = ½(d(x,w) + d(y,w) − d(x,y))`.
pub fn gromov_product(d: &DistanceMatrix, x: usize, y: usize, w: usize) -> Result<HalfInt> {
    for i in [x, y, w] {
        d.check_index(i)?;
    }
    Ok(HalfInt::from_doubled(
        d.get(x, w) as i64 + d.get(y, w) as i64 - d.get(x, y) as i64,
    ))
}

/// `min((x.z)_w, (y.z)_w) − (x.y)_w` for one quadruple.
pub fn four_point_defect(
    d: &DistanceMatrix,
    w: usize,
    x: usize,
    y: usize,
    z: usize,
) -> Result<HalfInt> {
    let xz = gromov_product(d, x, z, w)?;
    let yz = gromov_product(d, y, z, w)?;
    Ok(xz.min(yz) - gromov_product(d, x, y, w)?)
}

/// Witness `(x, y, z)` of a single-basepoint δ.
pub type TripleWitness = [usize; 3];
/// Witness `(w, x, y, z)` of the all-basepoint δ.
pub type QuadrupleWitness = [usize; 4];

/// δ at basepoint `w`: the maximum over core `x, y` of
/// `(A⊗A)[x][y] − A[x][y]`. The witness is the lexicographically smallest
/// maximising `(x, y, z)`.
pub fn delta_base(d: &DistanceMatrix, w: usize) -> Result<(HalfInt, TripleWitness)> {
    let g = GromovMatrix::new(d, w)?;
    let c = g.core.len();
    if c == 0 {
        return Err(Error::Structure("empty core".into()));
    }
    let a = &g.doubled;
    let m = max_min_product(a, a)?;
    let mut best = (i64::MIN, 0usize, 0usize);
    for x in 0..c {
        for y in 0..c {
            let v = m.get(x, y) - a.get(x, y);
            if v > best.0 {
                best = (v, x, y);
            }
        }
    }
    let (v, x, y) = best;
    let target = m.get(x, y);
    let z = (0..c)
        .find(|&z| a.get(x, z).min(a.get(z, y)) == target)
        .expect("max-min value is attained");
    debug_assert!(v >= 0, "z = x term makes the defect non-negative");
    Ok((HalfInt::from_doubled(v), [g.core[x], g.core[y], g.core[z]]))
}

/// Maximum of [`delta_base`] over every core basepoint. Basepoints run in
/// parallel; ties resolve to the lexicographically smallest `(w, x, y, z)`
/// so the result does not depend on scheduling.
pub fn delta_all(d: &DistanceMatrix) -> Result<(HalfInt, QuadrupleWitness)> {
    if d.core().is_empty() {
        return Err(Error::Structure("empty core".into()));
    }
    let per_base: Vec<(HalfInt, QuadrupleWitness)> = d
        .core()
        .par_iter()
        .map(|&w| delta_base(d, w).map(|(v, [x, y, z])| (v, [w, x, y, z])))
        .collect::<Result<_>>()?;
    Ok(per_base
        .into_iter()
        .reduce(better)
        .expect("core is nonempty"))
}

/// Total order used to combine partial results: larger δ wins, then the
/// lexicographically smaller witness.
pub(crate) fn better<W: Ord>(a: (HalfInt, W), b: (HalfInt, W)) -> (HalfInt, W) {
    match a.0.cmp(&b.0) {
        std::cmp::Ordering::Greater => a,
        std::cmp::Ordering::Less => b,
        std::cmp::Ordering::Equal => {
            if a.1 <= b.1 {
                a
            } else {
                b
            }
        }
    }
}

pub const DEFAULT_NAIVE_CAP: usize = 80;

/// Direct scan of every core quadruple. Kept as an oracle for
/// [`delta_all`]; refuses cores larger than `cap`.
pub fn naive_delta_all(d: &DistanceMatrix, cap: usize) -> Result<(HalfInt, QuadrupleWitness)> {
    let core = d.core();
    if core.len() > cap {
        return Err(Error::SizeCap {
            what: "naive oracle core",
            count: core.len(),
            cap,
        });
    }
    if core.is_empty() {
        return Err(Error::Structure("empty core".into()));
    }
    let mut best: Option<(i64, QuadrupleWitness)> = None;
    for &w in core {
        for &x in core {
            for &y in core {
                for &z in core {
                    let dw = |p: usize, q: usize| {
                        d.get(p, w) as i64 + d.get(q, w) as i64 - d.get(p, q) as i64
                    };
                    let v = dw(x, z).min(dw(y, z)) - dw(x, y);
                    if best.is_none_or(|(b, _)| v > b) {
                        best = Some((v, [w, x, y, z]));
                    }
                }
            }
        }
    }
    let (v, wit) = best.expect("core is nonempty");
    Ok((HalfInt::from_doubled(v), wit))
}
