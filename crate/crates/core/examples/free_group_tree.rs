//! Balls in the free group of rank 2 are trees, so every δ is zero.
//!
//!     cargo run --example free_group_tree

use cayley_delta::cayley::build_ball;
use cayley_delta::engines::engine_free;
use cayley_delta::metric::{apsp, delta_all, delta_base, delta_slim};

fn main() -> cayley_delta::Result<()> {
    let f2 = engine_free(2)?;
    for r in 2..=6 {
        let ball = build_ball(&f2, r)?;
        let d = apsp(&ball)?;
        let (base, _) = delta_base(&d, 0)?;
        print!(
            "r={r} vertices={:5} core={:3} δ_base={base}",
            ball.vertex_count(),
            d.core().len()
        );
        if r <= 4 {
            let (all, _) = delta_all(&d)?;
            let (slim, _) = delta_slim(&d, 200)?;
            print!(" δ_all={all} δ_slim={slim}");
        }
        println!();
    }
    Ok(())
}
