//! Intersections, quotients, saturation, radicals, dimension and singular loci.

use quasiaffine::{Ideal, Polynomial, Ring};

fn main() -> quasiaffine::Result<()> {
    let ring = Ring::new(["x", "y"])?;
    let p = |s: &str| Polynomial::parse(s, &ring).unwrap();
    let ideal = |gens: &[&str]| Ideal::parse(&ring, gens).unwrap();

    let axes = ideal(&["x"]).intersection(&ideal(&["y"]))?;
    println!("(x) ∩ (y) = {axes}");

    let embedded = ideal(&["x^2", "x*y"]);
    println!("(x^2, xy) : x = {}", embedded.quotient_by(&p("x"))?);
    let (sat, k) = embedded.saturation(&ideal(&["x", "y"]))?;
    println!("(x^2, xy) : (x, y)^inf = {sat}, exponent {k}");

    let fat = ideal(&["x^3", "y^2"]);
    println!("x in rad(x^3, y^2): {}", fat.radical_contains(&p("x"))?);
    println!("x + 1 in rad(x^3, y^2): {}", fat.radical_contains(&p("x + 1"))?);

    println!("dim (x*y) = {}", ideal(&["x*y"]).dimension()?);
    println!("dim (x, y) = {}", ideal(&["x", "y"]).dimension()?);

    let cusp = ideal(&["y^2 - x^3"]);
    let sing = cusp.singular_locus()?;
    println!("Sing(y^2 = x^3) = {sing}");
    println!("origin singular: {}", sing.radical_contains(&p("x"))? && sing.radical_contains(&p("y"))?);
    Ok(())
}
