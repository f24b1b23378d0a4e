//! Free products are no less hyperbolic than their factors.
//!
//!     cargo run --example free_product_comparison

use cayley_delta::engines::parse_engine_spec;
use cayley_delta::towers::compare_free_product;

fn main() -> cayley_delta::Result<()> {
    let factors = [
        "cyclic:2",
        "cyclic:3",
        "cyclic:4",
        "free:1",
        "dp(cyclic:2,cyclic:2)",
    ];
    for (i, l) in factors.iter().enumerate() {
        for r in &factors[i..] {
            let rep = compare_free_product(&parse_engine_spec(l)?, &parse_engine_spec(r)?, 6)?;
            println!(
                "fp({l},{r}): left={} right={} product={} consistent={}",
                rep.delta_left, rep.delta_right, rep.delta_product, rep.consistent
            );
        }
    }
    Ok(())
}
