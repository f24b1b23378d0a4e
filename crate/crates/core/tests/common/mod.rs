//! Brute-force oracles that share no code with the library's metric path:
//! Floyd–Warshall distances from the raw edge list, quadruple scans, and
//! explicit enumeration of geodesic paths.
#![allow(dead_code)]

use cayley_delta::cayley::CayleyBall;

pub const INF: u32 = u32::MAX / 4;

pub fn floyd_warshall(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u32>> {
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in edges {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

pub fn ball_edges(b: &CayleyBall) -> Vec<(usize, usize)> {
    b.edges()
        .iter()
        .map(|e| (e.u as usize, e.v as usize))
        .collect()
}

pub fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

/// Doubled four-point δ: max over w, x, y, z in `core` of
/// min((x.z)_w, (y.z)_w) − (x.y)_w.
pub fn brute_delta_x2(d: &[Vec<u32>], core: &[usize]) -> i64 {
    let gp = |x: usize, y: usize, w: usize| d[x][w] as i64 + d[y][w] as i64 - d[x][y] as i64;
    let mut best = i64::MIN;
    for &w in core {
        for &x in core {
            for &y in core {
                for &z in core {
                    best = best.max(gp(x, z, w).min(gp(y, z, w)) - gp(x, y, w));
                }
            }
        }
    }
    best
}

pub fn brute_delta_base_x2(d: &[Vec<u32>], core: &[usize], w: usize) -> i64 {
    let gp = |x: usize, y: usize| d[x][w] as i64 + d[y][w] as i64 - d[x][y] as i64;
    let mut best = i64::MIN;
    for &x in core {
        for &y in core {
            for &z in core {
                best = best.max(gp(x, z).min(gp(y, z)) - gp(x, y));
            }
        }
    }
    best
}

/// Every geodesic path from `x` to `y`, as vertex sequences.
pub fn geodesic_paths(adj: &[Vec<usize>], d: &[Vec<u32>], x: usize, y: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut path = vec![x];
    fn walk(
        adj: &[Vec<usize>],
        d: &[Vec<u32>],
        y: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let cur = *path.last().unwrap();
        if cur == y {
            out.push(path.clone());
            return;
        }
        for &n in &adj[cur] {
            if d[n][y] + 1 == d[cur][y] {
                path.push(n);
                walk(adj, d, y, path, out);
                path.pop();
            }
        }
    }
    walk(adj, d, y, &mut path, &mut out);
    out
}

pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// Slimness against unions of all geodesics, computed by enumerating
/// geodesic paths explicitly.
pub fn brute_slim(n: usize, edges: &[(usize, usize)], core: &[usize]) -> u32 {
    let d = floyd_warshall(n, edges);
    let adj = adjacency(n, edges);
    let union = |a: usize, b: usize| -> Vec<usize> {
        let mut v: Vec<usize> = geodesic_paths(&adj, &d, a, b)
            .into_iter()
            .flatten()
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let mut best = 0;
    for &x in core {
        for &y in core {
            for &z in core {
                let side = union(x, y);
                let mut others = union(y, z);
                others.extend(union(z, x));
                for &m in &side {
                    let dist = others.iter().map(|&o| d[m][o]).min().unwrap();
                    best = best.max(dist);
                }
            }
        }
    }
    best
}

/// Adversarial thin-triangle constant: geodesics chosen per side.
pub fn brute_thin(n: usize, edges: &[(usize, usize)], core: &[usize]) -> u32 {
    let d = floyd_warshall(n, edges);
    let adj = adjacency(n, edges);
    let mut best = 0;
    for &x in core {
        for &y in core {
            for &z in core {
                for p in geodesic_paths(&adj, &d, x, y) {
                    for q in geodesic_paths(&adj, &d, y, z) {
                        for r in geodesic_paths(&adj, &d, z, x) {
                            for &m in &p {
                                let dist = q.iter().chain(&r).map(|&o| d[m][o]).min().unwrap();
                                best = best.max(dist);
                            }
                        }
                    }
                }
            }
        }
    }
    best
}
