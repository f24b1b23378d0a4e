//! Acceptance suite. Runs every criterion, prints one `PASS`/`FAIL` line per
//! criterion and exits non-zero if any failed.

mod common;

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use cayley_delta::cayley::{build_ball, graph_to_string, read_graph, CayleyBall};
use cayley_delta::engines::table::{klein_four, symmetric_three};
use cayley_delta::engines::{engine_finite_table, parse_engine_spec, Element, GroupEngine};
use cayley_delta::experiment::{execute, Command as Cmd, ExperimentConfig};
use cayley_delta::metric::{
    apsp, delta_all, delta_base, delta_slim, four_point_defect, gromov_product, naive_delta_all,
    HalfInt,
};
use cayley_delta::towers::{
    compare_free_product, tower_cyclic_p, tower_delta_profile, RadiusPolicy, Verdict,
};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ball(spec: &str, r: u32) -> Result<CayleyBall, String> {
    build_ball(&parse_engine_spec(spec).map_err(err)?, r).map_err(err)
}

fn ball_of(engine: &GroupEngine, r: u32) -> Result<CayleyBall, String> {
    build_ball(engine, r).map_err(err)
}

/// The graphs every suite-wide criterion runs over.
fn suite() -> Result<Vec<(String, CayleyBall)>, String> {
    let mut out = Vec::new();
    for n in [3, 4, 8, 9, 27] {
        out.push((format!("C{n}"), ball(&format!("cyclic:{n}"), n)?));
    }
    out.push((
        "Klein".into(),
        ball_of(&engine_finite_table(klein_four()), 4)?,
    ));
    out.push((
        "S3".into(),
        ball_of(&engine_finite_table(symmetric_three()), 6)?,
    ));
    out.push(("heis:3".into(), ball("heis:3", 8)?));
    for r in 1..=3 {
        out.push((format!("free:2 r={r}"), ball("free:2", r)?));
    }
    for t in 1..=3 {
        out.push((
            format!("Z+Z core {t}"),
            ball("dp(cyclic:0,cyclic:0)", 2 * t)?,
        ));
        out.push((
            format!("fp(cyclic:3,cyclic:3) core {t}"),
            ball("fp(cyclic:3,cyclic:3)", 2 * t)?,
        ));
    }
    Ok(out)
}

fn tree_zero_law() -> Check {
    for r in 2..=6 {
        let b = ball("free:2", r)?;
        let d = apsp(&b).map_err(err)?;
        let start = Instant::now();
        let (base, _) = delta_base(&d, 0).map_err(err)?;
        let took = start.elapsed();
        ensure!(base == HalfInt::ZERO, "free:2 r={r}: delta_base = {base}");
        if r == 6 {
            ensure!(
                took < Duration::from_secs(120),
                "r=6 delta_base took {took:?}"
            );
        }
        if r <= 4 {
            let (all, _) = delta_all(&d).map_err(err)?;
            let (slim, _) = delta_slim(&d, 200).map_err(err)?;
            ensure!(all == HalfInt::ZERO, "free:2 r={r}: delta_all = {all}");
            ensure!(slim == HalfInt::ZERO, "free:2 r={r}: delta_slim = {slim}");
        }
    }
    Ok(())
}

fn oracle_equivalence() -> Check {
    for (name, b) in suite()? {
        let d = apsp(&b).map_err(err)?;
        if d.core().len() > 80 {
            continue;
        }
        let fast = delta_all(&d).map_err(err)?;
        let slow = naive_delta_all(&d, 80).map_err(err)?;
        ensure!(
            fast.0 == slow.0,
            "{name}: max-min {} vs naive {}",
            fast.0,
            slow.0
        );
        let fw = common::floyd_warshall(b.vertex_count(), &common::ball_edges(&b));
        let brute = common::brute_delta_x2(&fw, d.core());
        ensure!(
            fast.0.doubled() == brute,
            "{name}: max-min {} vs brute {brute}/2",
            fast.0
        );
    }
    Ok(())
}

fn cycle_delta(n: u32) -> Result<HalfInt, String> {
    Ok(
        delta_all(&apsp(&ball(&format!("cyclic:{n}"), n)?).map_err(err)?)
            .map_err(err)?
            .0,
    )
}

fn hand_values() -> Check {
    ensure!(
        cycle_delta(4)? == HalfInt::from_int(1),
        "delta_all(C4) = {}",
        cycle_delta(4)?
    );
    ensure!(
        cycle_delta(3)? == HalfInt::ZERO,
        "delta_all(C3) = {}",
        cycle_delta(3)?
    );
    let v: Vec<HalfInt> = [3, 9, 27]
        .into_iter()
        .map(cycle_delta)
        .collect::<Result<_, _>>()?;
    ensure!(v[0] < v[1] && v[1] < v[2], "C3, C9, C27: {v:?}");
    let tower = tower_cyclic_p(3, 3, 20_000).map_err(err)?;
    let rep = tower_delta_profile(&tower, &RadiusPolicy::Full, &Default::default(), 20_000);
    ensure!(
        rep.truncated.is_none(),
        "tower truncated: {:?}",
        rep.truncated
    );
    ensure!(
        matches!(rep.verdict, Verdict::Growing { .. }),
        "verdict {}",
        rep.verdict
    );
    ensure!(
        rep.verdict.to_string().starts_with("growing"),
        "verdict {}",
        rep.verdict
    );
    Ok(())
}

fn lattice_obstruction() -> Check {
    let mut values = Vec::new();
    for t in [2i64, 3, 4] {
        let b = ball("dp(cyclic:0,cyclic:0)", 2 * t as u32)?;
        let d = apsp(&b).map_err(err)?;
        let (v, _) = delta_all(&d).map_err(err)?;
        let at = |x: i64, y: i64| {
            b.index_of(&Element::pair(Element::Int(x), Element::Int(y)))
                .ok_or_else(|| format!("({x},{y}) not in ball"))
        };
        let (w, x, y, z) = (at(0, 0)?, at(t, 0)?, at(0, t)?, at(t / 2, t - t / 2)?);
        let witness = four_point_defect(&d, w, x, y, z).map_err(err)?;
        let bound = HalfInt::from_int(t / 2);
        ensure!(
            witness >= bound,
            "t={t}: diagonal quadruple gives {witness} < {bound}"
        );
        ensure!(v >= bound, "t={t}: delta_all {v} < {bound}");
        values.push(v);
    }
    ensure!(
        values.windows(2).all(|w| w[0] < w[1]),
        "delta_all over t = 2, 3, 4 is {} not strictly increasing",
        values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    Ok(())
}

fn free_product_proposition() -> Check {
    let factors = ["cyclic:2", "cyclic:3", "free:1"];
    for l in factors {
        for r in factors {
            let (le, re) = (
                parse_engine_spec(l).map_err(err)?,
                parse_engine_spec(r).map_err(err)?,
            );
            let rep = compare_free_product(&le, &re, 6).map_err(err)?;
            ensure!(
                rep.consistent && rep.delta_product <= rep.delta_left.max(rep.delta_right),
                "fp({l},{r}): product {} > max({}, {})",
                rep.delta_product,
                rep.delta_left,
                rep.delta_right
            );
            if l == "cyclic:3" && r == "cyclic:3" {
                ensure!(
                    [rep.delta_left, rep.delta_right, rep.delta_product] == [HalfInt::ZERO; 3],
                    "fp(cyclic:3,cyclic:3): {} {} {}",
                    rep.delta_left,
                    rep.delta_right,
                    rep.delta_product
                );
            }
        }
    }
    Ok(())
}

fn metric_invariants() -> Check {
    for (name, b) in suite()? {
        let d = apsp(&b).map_err(err)?;
        d.check_metric().map_err(|e| format!("{name}: {e}"))?;
        let pts: Vec<usize> = if d.len() <= 200 {
            (0..d.len()).collect()
        } else {
            d.core().to_vec()
        };
        for &w in &pts {
            for &x in &pts {
                let xx = gromov_product(&d, x, x, w).map_err(err)?;
                ensure!(
                    xx == HalfInt::from_int(d.get(x, w) as i64),
                    "{name}: (x.x)_w at {x},{w}"
                );
                for &y in &pts {
                    let g = gromov_product(&d, x, y, w).map_err(err)?;
                    let hi = HalfInt::from_int(d.get(x, w).min(d.get(y, w)) as i64);
                    ensure!(
                        g >= HalfInt::ZERO && g <= hi,
                        "{name}: (x.y)_w = {g} at {x},{y},{w}"
                    );
                }
            }
        }
        let (all, _) = delta_all(&d).map_err(err)?;
        for &w in d.core() {
            let (base, _) = delta_base(&d, w).map_err(err)?;
            ensure!(
                base <= all && all <= base + base,
                "{name}: base({w}) = {base}, all = {all}"
            );
        }
    }
    Ok(())
}

fn core_exactness() -> Check {
    let engines = [
        "free:1",
        "free:2",
        "cyclic:0",
        "cyclic:7",
        "cyclic:12",
        "dp(cyclic:0,cyclic:0)",
        "dp(cyclic:5,free:1)",
        "dp(free:2,cyclic:3)",
        "fp(cyclic:3,cyclic:3)",
        "fp(cyclic:2,free:1)",
        "fp(free:1,cyclic:4)",
        "fp(cyclic:2,cyclic:2)",
    ];
    for spec in engines {
        let engine = parse_engine_spec(spec).map_err(err)?;
        for r in 0..=6 {
            let b = ball_of(&engine, r)?;
            let d = apsp(&b).map_err(err)?;
            let elems = b.elements().ok_or("ball without elements")?;
            for &x in d.core() {
                for &y in d.core() {
                    let want = engine
                        .closed_form_distance(&elems[x], &elems[y])
                        .ok_or_else(|| format!("{spec}: no closed form"))?;
                    ensure!(
                        d.get(x, y) as u64 == want,
                        "{spec} r={r}: d({x},{y}) = {} but closed form {want}",
                        d.get(x, y)
                    );
                }
            }
        }
    }
    Ok(())
}

fn strip_timing(s: &str) -> String {
    s.lines()
        .filter(|l| !l.contains("elapsed_ms"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_cayley-delta"))
        .args(args)
        .output()
        .map_err(err)?;
    ensure!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).map_err(err)
}

fn determinism() -> Check {
    let dir = tempfile::tempdir().map_err(err)?;
    let path = |name: &str| dir.path().join(name);

    let mut cfg = ExperimentConfig::new(Cmd::Delta);
    cfg.engine = Some("fp(cyclic:3,dp(cyclic:2,cyclic:2))".into());
    cfg.radius = Some(6);
    cfg.slim = true;
    cfg.naive_oracle = true;
    cfg.out = Some(path("a.json"));
    execute(&cfg).map_err(err)?;
    cfg.out = Some(path("b.json"));
    execute(&cfg).map_err(err)?;
    let read = |p: &Path| std::fs::read_to_string(p).map_err(err);
    ensure!(
        strip_timing(&read(&path("a.json"))?) == strip_timing(&read(&path("b.json"))?),
        "identical configs gave different reports"
    );

    let args = ["tower", "--family", "cyclic-p", "--p", "3", "--levels", "3"];
    let (t1, t2) = (cli(&args)?, cli(&args)?);
    ensure!(
        strip_timing(&t1) == strip_timing(&t2),
        "tower reports differ between runs"
    );

    for spec in [
        "free:2",
        "cyclic:0",
        "heis:5",
        "fp(cyclic:3,free:1)",
        "dp(fp(cyclic:2,cyclic:2),cyclic:5)",
    ] {
        let e = parse_engine_spec(spec).map_err(err)?;
        let again = parse_engine_spec(&e.to_string()).map_err(err)?;
        ensure!(
            again == e && again.to_string() == spec,
            "{spec} does not round-trip"
        );
        let b = ball_of(&e, 3)?;
        let text = graph_to_string(&b);
        let back = read_graph(text.as_bytes()).map_err(err)?;
        ensure!(
            back == b.without_elements(),
            "{spec}: graph file does not round-trip"
        );
        ensure!(
            graph_to_string(&back) == text,
            "{spec}: graph file not byte-stable"
        );
    }

    for (engine, r) in [
        ("heis:3", "8"),
        ("dp(cyclic:0,cyclic:0)", "6"),
        ("fp(cyclic:4,cyclic:3)", "5"),
    ] {
        let run = |threads: &str| {
            cli(&[
                "delta",
                "--engine",
                engine,
                "--radius",
                r,
                "--slim",
                "--threads",
                threads,
            ])
        };
        let (one, eight) = (run("1")?, run("8")?);
        ensure!(
            strip_timing(&one) == strip_timing(&eight),
            "{engine}: --threads 1 and --threads 8 disagree"
        );
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("tree zero-law", tree_zero_law),
        ("oracle equivalence", oracle_equivalence),
        ("hand-verified values", hand_values),
        ("Z+Z obstruction", lattice_obstruction),
        ("free product bound", free_product_proposition),
        ("metric invariants", metric_invariants),
        ("trusted-core exactness", core_exactness),
        ("determinism and round-trips", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("PASS criterion {} ({name}) [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}) [{secs:.2}s]: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
