//! ℤ² grows fatter triangles as the trusted core grows.
//!
//!     cargo run --example lattice_obstruction

use cayley_delta::cayley::build_ball;
use cayley_delta::engines::{parse_engine_spec, Element};
use cayley_delta::metric::{apsp, delta_all, four_point_defect};

fn main() -> cayley_delta::Result<()> {
    let z2 = parse_engine_spec("dp(cyclic:0,cyclic:0)")?;
    for t in 1..=5i64 {
        let ball = build_ball(&z2, 2 * t as u32)?;
        let d = apsp(&ball)?;
        let (v, w) = delta_all(&d)?;
        let at = |x, y| {
            ball.index_of(&Element::pair(Element::Int(x), Element::Int(y)))
                .unwrap()
        };
        // origin, the two axis points and a midpoint of the diagonal
        let diag = four_point_defect(&d, at(0, 0), at(t, 0), at(0, t), at(t / 2, t - t / 2))?;
        println!(
            "t={t} core={:3} δ_all={v:<4} diagonal={diag:<4} witness={w:?}",
            d.core().len()
        );
    }
    Ok(())
}
