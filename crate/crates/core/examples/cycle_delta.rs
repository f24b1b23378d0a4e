//! δ of cycle graphs, with the naive quadruple scan alongside.
//!
//!     cargo run --example cycle_delta

use cayley_delta::cayley::build_ball;
use cayley_delta::engines::engine_cyclic;
use cayley_delta::metric::{apsp, delta_all, naive_delta_all};

fn main() -> cayley_delta::Result<()> {
    for n in [3u64, 4, 5, 8, 9, 16, 27] {
        let ball = build_ball(&engine_cyclic(n), n as u32)?;
        let d = apsp(&ball)?;
        let (fast, witness) = delta_all(&d)?;
        let (slow, _) = naive_delta_all(&d, 80)?;
        println!("C{n:<3} δ_all={fast:<4} naive={slow:<4} witness={witness:?}");
    }
    Ok(())
}
