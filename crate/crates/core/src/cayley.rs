//! Finite balls of Cayley graphs and the `cayley v1` graph file format.
//!
//! ```text
//! cayley v1 n=<N> r=<R> t=<T> gens=<K>
//! v <index> <depth>
//! ...
//! e <u> <v> <gen> <sign>
//! ...
//! ```
//!
//! An edge `e u v g s` records `v = u · g^s`. Each undirected edge appears
//! once, labelled by the first generator that discovered it.

use std::collections::{HashMap, HashSet};
use std::io::{BufRead, Write};

use crate::engines::{Element, GroupEngine, Letter, Sign};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_VERTICES: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: u32,
    pub v: u32,
    pub generator: u32,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyBall {
    /// Normal forms, present when the ball was built from an engine.
    elements: Option<Vec<Element>>,
    depth: Vec<u32>,
    edges: Vec<Edge>,
    radius: u32,
    trusted_radius: u32,
    generator_count: usize,
}

impl CayleyBall {
    pub fn vertex_count(&self) -> usize {
        self.depth.len()
    }

    pub fn elements(&self) -> Option<&[Element]> {
        self.elements.as_deref()
    }

    pub fn depth(&self) -> &[u32] {
        &self.depth
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    /// Radius of the core on which ball distances equal group distances.
    /// This is `⌊r/2⌋`, or `r` when the ball already contains the whole
    /// group (no generator leaves it).
    pub fn trusted_radius(&self) -> u32 {
        self.trusted_radius
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    /// Vertex indices with depth at most the trusted radius.
    pub fn core(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&i| self.depth[i] <= self.trusted_radius)
            .collect()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for e in &self.edges {
            adj[e.u as usize].push(e.v as usize);
            adj[e.v as usize].push(e.u as usize);
        }
        adj
    }

    pub fn index_of(&self, g: &Element) -> Option<usize> {
        self.elements.as_ref()?.iter().position(|x| x == g)
    }
}

/// Breadth-first ball of radius `r` around the identity, under the engine's
/// own generators, with the default vertex cap.
pub fn build_ball(engine: &GroupEngine, r: u32) -> Result<CayleyBall> {
    build_ball_capped(engine, r, DEFAULT_MAX_VERTICES)
}

pub fn build_ball_capped(engine: &GroupEngine, r: u32, cap: usize) -> Result<CayleyBall> {
    let gens = engine.generators();
    build_ball_with_generators(engine, &gens, r, cap)
}

/// Ball with respect to an explicit generating list (for example the image
/// of a fixed generating set in a quotient). Edge labels index into `gens`.
pub fn build_ball_with_generators(
    engine: &GroupEngine,
    gens: &[Element],
    r: u32,
    cap: usize,
) -> Result<CayleyBall> {
    let steps: Vec<(u32, Sign, Element)> = gens
        .iter()
        .enumerate()
        .flat_map(|(i, g)| {
            [
                (i as u32, Sign::Pos, g.clone()),
                (i as u32, Sign::Neg, engine.inverse(g)),
            ]
        })
        .collect();

    let mut elements = vec![engine.identity()];
    let mut depth = vec![0u32];
    let mut index: HashMap<Element, u32> = HashMap::new();
    index.insert(engine.identity(), 0);
    let mut edges = Vec::new();
    let mut seen_edges: HashSet<(u32, u32)> = HashSet::new();
    let mut escaped = false;

    let mut head = 0usize;
    while head < elements.len() {
        let u = head as u32;
        let du = depth[head];
        for (gen, sign, s) in &steps {
            let next = engine.multiply(&elements[head], s);
            let v = match index.get(&next) {
                Some(&v) => v,
                None if du < r => {
                    if elements.len() >= cap {
                        return Err(Error::SizeCap {
                            what: "ball vertices",
                            count: elements.len(),
                            cap,
                        });
                    }
                    let v = elements.len() as u32;
                    index.insert(next.clone(), v);
                    elements.push(next);
                    depth.push(du + 1);
                    v
                }
                None => {
                    escaped = true;
                    continue;
                }
            };
            if u == v {
                continue;
            }
            if seen_edges.insert((u.min(v), u.max(v))) {
                edges.push(Edge {
                    u,
                    v,
                    generator: *gen,
                    sign: *sign,
                });
            }
        }
        head += 1;
    }

    let trusted_radius = if escaped { r / 2 } else { r };
    Ok(CayleyBall {
        elements: Some(elements),
        depth,
        edges,
        radius: r,
        trusted_radius,
        generator_count: gens.len(),
    })
}

/// Whole Cayley graph of a finite group: a ball whose radius is the
/// eccentricity of the identity.
pub fn build_full_graph(engine: &GroupEngine, gens: &[Element], cap: usize) -> Result<CayleyBall> {
    let elems = orbit(engine, gens, cap)?;
    // the orbit already proved closure, so any radius >= the max depth works
    let mut ball = build_ball_with_generators(engine, gens, elems.len() as u32, cap)?;
    let ecc = ball.depth.iter().copied().max().unwrap_or(0);
    ball.radius = ecc;
    ball.trusted_radius = ecc;
    Ok(ball)
}

/// Closure of the identity under right multiplication by `gens` and their
/// inverses, in breadth-first order.
pub fn orbit(engine: &GroupEngine, gens: &[Element], cap: usize) -> Result<Vec<Element>> {
    let mut steps: Vec<Element> = Vec::with_capacity(2 * gens.len());
    for g in gens {
        steps.push(g.clone());
        steps.push(engine.inverse(g));
    }
    let mut out = vec![engine.identity()];
    let mut seen: HashSet<Element> = out.iter().cloned().collect();
    let mut head = 0;
    while head < out.len() {
        for s in &steps {
            let next = engine.multiply(&out[head], s);
            if seen.insert(next.clone()) {
                if out.len() >= cap {
                    return Err(Error::SizeCap {
                        what: "orbit elements",
                        count: out.len(),
                        cap,
                    });
                }
                out.push(next);
            }
        }
        head += 1;
    }
    Ok(out)
}

/// `|B_0|, |B_1|, …, |B_r|`.
pub fn ball_growth(engine: &GroupEngine, r: u32) -> Result<Vec<usize>> {
    ball_growth_capped(engine, r, DEFAULT_MAX_VERTICES)
}

pub fn ball_growth_capped(engine: &GroupEngine, r: u32, cap: usize) -> Result<Vec<usize>> {
    let ball = build_ball_capped(engine, r, cap)?;
    Ok(growth_of(&ball))
}

pub fn growth_of(ball: &CayleyBall) -> Vec<usize> {
    let mut counts = vec![0usize; ball.radius as usize + 1];
    for &d in &ball.depth {
        counts[d as usize] += 1;
    }
    let mut acc = 0;
    for c in counts.iter_mut() {
        acc += *c;
        *c = acc;
    }
    counts
}

/// A word spelling the BFS-tree path from the identity to vertex `v`.
pub fn spanning_word(ball: &CayleyBall, v: usize) -> Option<Vec<Letter>> {
    let mut parent: Vec<Option<(usize, Letter)>> = vec![None; ball.vertex_count()];
    for e in &ball.edges {
        let (u, w) = (e.u as usize, e.v as usize);
        let l = Letter {
            generator: e.generator as usize,
            sign: e.sign,
        };
        if ball.depth[w] == ball.depth[u] + 1 && parent[w].is_none() {
            parent[w] = Some((u, l));
        } else if ball.depth[u] == ball.depth[w] + 1 && parent[u].is_none() {
            parent[u] = Some((w, l.inverse()));
        }
    }
    let mut word = Vec::new();
    let mut cur = v;
    while cur != 0 {
        let (p, l) = parent[cur]?;
        word.push(l);
        cur = p;
    }
    word.reverse();
    Some(word)
}

pub fn write_graph<W: Write>(ball: &CayleyBall, mut sink: W) -> std::io::Result<()> {
    writeln!(
        sink,
        "cayley v1 n={} r={} t={} gens={}",
        ball.vertex_count(),
        ball.radius,
        ball.trusted_radius,
        ball.generator_count
    )?;
    for (i, d) in ball.depth.iter().enumerate() {
        writeln!(sink, "v {i} {d}")?;
    }
    for e in &ball.edges {
        writeln!(sink, "e {} {} {} {}", e.u, e.v, e.generator, e.sign.as_i8())?;
    }
    Ok(())
}

pub fn graph_to_string(ball: &CayleyBall) -> String {
    let mut buf = Vec::new();
    write_graph(ball, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("graph files are ascii")
}

pub fn read_graph<R: BufRead>(source: R) -> Result<CayleyBall> {
    let mut lines = source.lines().enumerate();
    let perr = |line: usize, message: String| Error::Parse { line, message };

    let header = match lines.next() {
        Some((_, Ok(l))) if !l.trim().is_empty() => l,
        Some((_, Err(e))) => return Err(perr(1, e.to_string())),
        _ => return Err(perr(1, "missing header".into())),
    };
    let mut fields = header.split_whitespace();
    if fields.next() != Some("cayley") || fields.next() != Some("v1") {
        return Err(perr(1, "missing header".into()));
    }
    let mut kv = HashMap::new();
    for f in fields {
        let (k, v) = f
            .split_once('=')
            .ok_or_else(|| perr(1, format!("bad header field `{f}`")))?;
        let v: usize = v
            .parse()
            .map_err(|_| perr(1, format!("bad header value `{f}`")))?;
        kv.insert(k.to_string(), v);
    }
    let get = |k: &str| {
        kv.get(k)
            .copied()
            .ok_or_else(|| perr(1, format!("header missing `{k}=`")))
    };
    let (n, r, t, k) = (get("n")?, get("r")?, get("t")?, get("gens")?);
    if t > r {
        return Err(perr(1, "trusted radius exceeds radius".into()));
    }

    let mut depth = Vec::with_capacity(n);
    let mut edges = Vec::new();
    for (i, line) in lines {
        let line_no = i + 1;
        let line = line.map_err(|e| perr(line_no, e.to_string()))?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| -> Result<i64> {
            s.parse()
                .map_err(|_| perr(line_no, format!("`{s}` is not an integer")))
        };
        match toks.as_slice() {
            [] => continue,
            ["v", idx, d] => {
                if !edges.is_empty() {
                    return Err(perr(line_no, "vertex line after edge lines".into()));
                }
                if num(idx)? != depth.len() as i64 {
                    return Err(perr(line_no, format!("expected vertex {}", depth.len())));
                }
                let d = num(d)?;
                if d < 0 || d as usize > r {
                    return Err(perr(line_no, format!("depth {d} outside 0..={r}")));
                }
                depth.push(d as u32);
            }
            ["e", u, v, g, s] => {
                let (u, v, g) = (num(u)?, num(v)?, num(g)?);
                for x in [u, v] {
                    if x < 0 || x as usize >= n {
                        return Err(perr(line_no, format!("edge references vertex {x} >= {n}")));
                    }
                }
                if g < 0 || g as usize >= k {
                    return Err(perr(line_no, format!("generator {g} >= {k}")));
                }
                let sign = Sign::from_i8(num(s)? as i8)
                    .ok_or_else(|| perr(line_no, format!("bad sign `{s}`")))?;
                edges.push(Edge {
                    u: u as u32,
                    v: v as u32,
                    generator: g as u32,
                    sign,
                });
            }
            _ => return Err(perr(line_no, format!("unrecognised line `{line}`"))),
        }
    }
    if depth.len() != n {
        return Err(perr(
            1,
            format!("header declares {n} vertices, found {}", depth.len()),
        ));
    }
    Ok(CayleyBall {
        elements: None,
        depth,
        edges,
        radius: r as u32,
        trusted_radius: t as u32,
        generator_count: k,
    })
}

impl CayleyBall {
    /// Same graph with the normal forms dropped; what a file round-trip keeps.
    pub fn without_elements(&self) -> CayleyBall {
        CayleyBall {
            elements: None,
            ..self.clone()
        }
    }
}
