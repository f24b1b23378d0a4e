//! δ profiles along the cyclic p-power and exponent-p towers.
//!
//!     cargo run --example pro_p_towers

use cayley_delta::metric::DeltaOptions;
use cayley_delta::towers::{
    tower_cyclic_p, tower_delta_profile, tower_exponent_p, RadiusPolicy, VERDICT_NOTE,
};

fn main() -> cayley_delta::Result<()> {
    let towers = [
        tower_cyclic_p(2, 5, 20_000)?,
        tower_cyclic_p(3, 3, 20_000)?,
        tower_exponent_p(3)?,
        tower_exponent_p(5)?,
    ];
    for t in &towers {
        let rep = tower_delta_profile(t, &RadiusPolicy::Full, &DeltaOptions::default(), 20_000);
        println!("{}", rep.family);
        for l in &rep.levels {
            println!(
                "  level {} order {:4} δ_all={}",
                l.level, l.order, l.delta_all
            );
        }
        println!("  {}", rep.verdict);
    }
    println!("({VERDICT_NOTE})");
    Ok(())
}
