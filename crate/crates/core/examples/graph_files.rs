//! Writes a ball to the text graph format and reads it back.
//!
//!     cargo run --example graph_files

use cayley_delta::cayley::{build_ball, graph_to_string, read_graph};
use cayley_delta::engines::parse_engine_spec;
use cayley_delta::metric::{apsp, delta_all};

fn main() -> cayley_delta::Result<()> {
    let engine = parse_engine_spec("fp(cyclic:3,cyclic:2)")?;
    let ball = build_ball(&engine, 3)?;
    let text = graph_to_string(&ball);
    for line in text.lines().take(6) {
        println!("{line}");
    }
    println!("... {} lines", text.lines().count());

    let back = read_graph(text.as_bytes())?;
    assert_eq!(back, ball.without_elements());
    let (a, _) = delta_all(&apsp(&ball)?)?;
    let (b, _) = delta_all(&apsp(&back)?)?;
    println!("δ_all before {a}, after {b}");
    Ok(())
}
