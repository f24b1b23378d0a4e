//! The Heisenberg group mod 3 onto its abelianization.
//!
//!     cargo run --example heisenberg_surjection

use cayley_delta::engines::{
    check_surjection, engine_heisenberg_p, parse_engine_spec, Element, Surjection,
};

fn main() -> cayley_delta::Result<()> {
    let h = engine_heisenberg_p(3)?;
    let ab = parse_engine_spec("dp(cyclic:3,cyclic:3)")?;
    let s = Surjection::new(h.clone(), ab.clone(), ab.generators())?;
    println!("{}", check_surjection(&s));
    for g in [
        Element::Triple(1, 2, 2),
        Element::Triple(0, 0, 1),
        Element::Triple(2, 1, 0),
    ] {
        println!("{g} ↦ {}", s.apply(&g)?);
    }

    let x = h.generator(0);
    let y = h.generator(1);
    let comm = h.multiply(&h.multiply(&x, &y), &h.inverse(&h.multiply(&y, &x)));
    println!("[x,y] = {comm} ↦ {}", s.apply(&comm)?);

    let bad = Surjection::new(h, ab.clone(), vec![ab.generator(0), ab.generator(0)])?;
    println!("{}", check_surjection(&bad));
    Ok(())
}
