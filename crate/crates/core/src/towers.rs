//! Chains of finite quotients and hyperbolicity profiles across levels.
//!
//! A tower `G₁ ← G₂ ← … ← G_K` is a list of finite engines with surjective
//! bonds `G_{i+1} → G_i` and, at every level, the image of one fixed
//! generating list. Cayley graphs of each level are taken with respect to
//! those images. The limit group is never built.

use std::fmt;
use std::time::{Duration, Instant};

use crate::cayley::{
    build_ball_capped, build_ball_with_generators, build_full_graph, DEFAULT_MAX_VERTICES,
};
use crate::engines::{
    check_surjection, engine_cyclic, engine_direct_product, engine_free_product,
    engine_heisenberg_p, is_prime, Element, GroupEngine, Surjection,
};
use crate::error::{Error, Result};
use crate::metric::{analyze, apsp, delta_all, DeltaOptions, HalfInt};

#[derive(Debug, Clone)]
pub struct QuotientTower {
    levels: Vec<GroupEngine>,
    bonds: Vec<Surjection>,
    generator_images: Vec<Vec<Element>>,
    family: String,
}

impl QuotientTower {
    pub fn levels(&self) -> &[GroupEngine] {
        &self.levels
    }

    /// `bonds()[i]` maps level `i + 1` onto level `i` (0-based).
    pub fn bonds(&self) -> &[Surjection] {
        &self.bonds
    }

    pub fn generator_images(&self) -> &[Vec<Element>] {
        &self.generator_images
    }

    pub fn family(&self) -> &str {
        &self.family
    }

    pub fn orders(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.order().unwrap_or(0)).collect()
    }

    /// Pushes an element of level `from` down to level `to ≤ from` through
    /// the bonds.
    pub fn project(&self, from: usize, to: usize, g: &Element) -> Result<Element> {
        assert!(to <= from && from < self.levels.len());
        let mut cur = g.clone();
        for i in (to..from).rev() {
            cur = self.bonds[i].apply(&cur)?;
        }
        Ok(cur)
    }
}

/// `ℤ/p ← ℤ/p² ← … ← ℤ/p^K` with reduction bonds and generator `1`.
pub fn tower_cyclic_p(p: u64, levels: u32, cap: usize) -> Result<QuotientTower> {
    if !is_prime(p) {
        return Err(Error::InvalidEngine(format!("p must be prime (got {p})")));
    }
    if levels == 0 {
        return Err(Error::Config("a tower needs at least one level".into()));
    }
    let top = p.saturating_pow(levels);
    if top > cap as u64 {
        return Err(Error::SizeCap {
            what: "tower level order",
            count: top.min(usize::MAX as u64) as usize,
            cap,
        });
    }
    let engines: Vec<GroupEngine> = (1..=levels).map(|k| engine_cyclic(p.pow(k))).collect();
    let bonds = engines
        .windows(2)
        .map(|w| Surjection::new(w[1].clone(), w[0].clone(), vec![Element::Int(1)]))
        .collect::<Result<Vec<_>>>()?;
    let images = vec![vec![Element::Int(1)]; levels as usize];
    tower_custom_named(
        engines,
        bonds,
        images,
        format!("cyclic-p(p={p},levels={levels})"),
    )
}

/// The two smallest exponent-p quotients of the rank-2 free group:
/// `(ℤ/p)²` and the Heisenberg group mod p, bonded by `(a, b, c) ↦ (a, b)`.
pub fn tower_exponent_p(p: u32) -> Result<QuotientTower> {
    let heis = engine_heisenberg_p(p)?;
    let ab = engine_direct_product(engine_cyclic(p as u64), engine_cyclic(p as u64));
    let ab_gens = vec![ab.generator(0), ab.generator(1)];
    let heis_gens = vec![heis.generator(0), heis.generator(1)];
    let bond = Surjection::new(heis.clone(), ab.clone(), ab_gens.clone())?;
    tower_custom_named(
        vec![ab, heis],
        vec![bond],
        vec![ab_gens, heis_gens],
        format!("exponent-p(p={p})"),
    )
}

/// Validates a user-supplied tower.
pub fn tower_custom(
    levels: Vec<GroupEngine>,
    bonds: Vec<Surjection>,
    generator_images: Vec<Vec<Element>>,
) -> Result<QuotientTower> {
    tower_custom_named(levels, bonds, generator_images, "custom".into())
}

fn tower_custom_named(
    levels: Vec<GroupEngine>,
    bonds: Vec<Surjection>,
    generator_images: Vec<Vec<Element>>,
    family: String,
) -> Result<QuotientTower> {
    if levels.is_empty() {
        return Err(Error::Tower("no levels".into()));
    }
    let mut prev_order = 0;
    for (i, l) in levels.iter().enumerate() {
        let order = l
            .order()
            .ok_or_else(|| Error::Tower(format!("level {} ({l}) is infinite", i + 1)))?;
        if order <= prev_order {
            return Err(Error::Tower(format!(
                "level orders must strictly increase: level {} has order {order}",
                i + 1
            )));
        }
        prev_order = order;
    }
    if bonds.len() + 1 != levels.len() {
        return Err(Error::Tower(format!(
            "{} levels need {} bonds, got {}",
            levels.len(),
            levels.len() - 1,
            bonds.len()
        )));
    }
    if generator_images.len() != levels.len() {
        return Err(Error::Tower(
            "one generator image list per level required".into(),
        ));
    }
    let m = generator_images[0].len();
    if m == 0 || generator_images.iter().any(|g| g.len() != m) {
        return Err(Error::Tower(
            "every level needs the same nonzero number of generator images".into(),
        ));
    }
    for (i, b) in bonds.iter().enumerate() {
        if b.source != levels[i + 1] || b.target != levels[i] {
            return Err(Error::Tower(format!(
                "bond {} must map level {} onto level {}",
                i + 1,
                i + 2,
                i + 1
            )));
        }
        let report = check_surjection(b);
        if !report.is_valid() {
            return Err(Error::Surjection(format!(
                "bond from level {} to level {}: {report}",
                i + 2,
                i + 1
            )));
        }
        for (j, (upper, lower)) in generator_images[i + 1]
            .iter()
            .zip(&generator_images[i])
            .enumerate()
        {
            if b.apply(upper)? != *lower {
                return Err(Error::Tower(format!("gen {j} at level {}", i + 2)));
            }
        }
    }
    Ok(QuotientTower {
        levels,
        bonds,
        generator_images,
        family,
    })
}

/// Radii used for the per-level Cayley graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadiusPolicy {
    /// The whole Cayley graph of each finite level.
    Full,
    /// One explicit radius per level.
    PerLevel(Vec<u32>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelEntry {
    /// 1-based level number.
    pub level: usize,
    pub order: u64,
    pub radius: u32,
    pub n_vertices: usize,
    pub core_size: usize,
    pub delta_base: HalfInt,
    pub delta_all: HalfInt,
    pub delta_slim: Option<HalfInt>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    UniformSoFar { max: HalfInt },
    Growing { levels: usize },
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::UniformSoFar { max } => write!(f, "uniform-so-far (max δ = {max})"),
            Verdict::Growing { levels } => {
                write!(f, "growing (strictly increasing over last {levels} levels)")
            }
        }
    }
}

/// Attached to every tower report.
pub const VERDICT_NOTE: &str =
    "heuristic: finitely many levels cannot certify one δ bound for every level of the tower";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerReport {
    pub family: String,
    pub levels: Vec<LevelEntry>,
    pub verdict: Verdict,
    /// Error that stopped the profile early, with its 1-based level.
    pub truncated: Option<(usize, String)>,
}

/// `growing` iff `δ_all` strictly increases across the last `min(3, K)`
/// computed levels (and there are at least two of them).
pub fn verdict_for(deltas: &[HalfInt]) -> Verdict {
    let k = deltas.len().min(3);
    let tail = &deltas[deltas.len() - k..];
    if k >= 2 && tail.windows(2).all(|w| w[0] < w[1]) {
        Verdict::Growing { levels: k }
    } else {
        Verdict::UniformSoFar {
            max: deltas.iter().copied().max().unwrap_or(HalfInt::ZERO),
        }
    }
}

pub fn tower_delta_profile(
    tower: &QuotientTower,
    policy: &RadiusPolicy,
    opts: &DeltaOptions,
    cap: usize,
) -> TowerReport {
    let opts = DeltaOptions {
        all_basepoints: true,
        ..*opts
    };
    let mut levels = Vec::new();
    let mut truncated = None;
    for (i, engine) in tower.levels.iter().enumerate() {
        let start = Instant::now();
        let gens = &tower.generator_images[i];
        let result = (|| {
            let ball = match policy {
                RadiusPolicy::Full => build_full_graph(engine, gens, cap)?,
                RadiusPolicy::PerLevel(radii) => {
                    let r = *radii.get(i).ok_or_else(|| {
                        Error::Config(format!("no radius given for level {}", i + 1))
                    })?;
                    build_ball_with_generators(engine, gens, r, cap)?
                }
            };
            let d = apsp(&ball)?;
            let rep = analyze(&d, &opts)?;
            Ok::<_, Error>(LevelEntry {
                level: i + 1,
                order: engine.order().unwrap_or(0),
                radius: ball.radius(),
                n_vertices: ball.vertex_count(),
                core_size: rep.core_size,
                delta_base: rep.delta_base,
                delta_all: rep.delta_all.expect("all basepoints requested"),
                delta_slim: rep.delta_slim,
                elapsed: start.elapsed(),
            })
        })();
        match result {
            Ok(entry) => levels.push(entry),
            Err(e) => {
                truncated = Some((i + 1, e.to_string()));
                break;
            }
        }
    }
    let deltas: Vec<HalfInt> = levels.iter().map(|l| l.delta_all).collect();
    TowerReport {
        family: tower.family.clone(),
        verdict: verdict_for(&deltas),
        levels,
        truncated,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompareReport {
    pub left: GroupEngine,
    pub right: GroupEngine,
    pub radius: u32,
    pub delta_left: HalfInt,
    pub delta_right: HalfInt,
    pub delta_product: HalfInt,
    /// `delta_product ≤ max(delta_left, delta_right)`.
    pub consistent: bool,
    /// `delta_product − max(delta_left, delta_right)`.
    pub gap: HalfInt,
}

/// `δ_all` of the radius-`r` balls of both factors and of their free
/// product, each on its trusted core.
pub fn compare_free_product(
    left: &GroupEngine,
    right: &GroupEngine,
    r: u32,
) -> Result<CompareReport> {
    compare_free_product_capped(left, right, r, DEFAULT_MAX_VERTICES)
}

pub fn compare_free_product_capped(
    left: &GroupEngine,
    right: &GroupEngine,
    r: u32,
    cap: usize,
) -> Result<CompareReport> {
    let delta_of = |e: &GroupEngine| -> Result<HalfInt> {
        let ball = build_ball_capped(e, r, cap)?;
        Ok(delta_all(&apsp(&ball)?)?.0)
    };
    let product = engine_free_product(left.clone(), right.clone());
    let (dl, dr, dp) = (delta_of(left)?, delta_of(right)?, delta_of(&product)?);
    let max = dl.max(dr);
    Ok(CompareReport {
        left: left.clone(),
        right: right.clone(),
        radius: r,
        delta_left: dl,
        delta_right: dr,
        delta_product: dp,
        consistent: dp <= max,
        gap: dp - max,
    })
}
