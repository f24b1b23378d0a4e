//! A hand-built tower ℤ/2 ← Klein four from a multiplication table.
//!
//!     cargo run --example custom_tower

use cayley_delta::engines::{engine_cyclic, engine_finite_table, Element, FiniteTable, Surjection};
use cayley_delta::metric::DeltaOptions;
use cayley_delta::towers::{tower_custom, tower_delta_profile, RadiusPolicy};

const KLEIN: &str = "\
order 4
0 1 2 3
1 0 3 2
2 3 0 1
3 2 1 0
gens 1 2
";

fn main() -> cayley_delta::Result<()> {
    let klein = engine_finite_table(FiniteTable::parse(KLEIN, "klein")?);
    let c2 = engine_cyclic(2);
    let onto = vec![Element::Int(1), Element::Int(0)];
    let bond = Surjection::new(klein.clone(), c2.clone(), onto.clone())?;
    let tower = tower_custom(
        vec![c2, klein.clone()],
        vec![bond],
        vec![onto, klein.generators()],
    )?;

    let rep = tower_delta_profile(&tower, &RadiusPolicy::Full, &DeltaOptions::default(), 1000);
    for l in &rep.levels {
        println!("level {} order {} δ_all={}", l.level, l.order, l.delta_all);
    }
    println!("{}", rep.verdict);
    Ok(())
}
