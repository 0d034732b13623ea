//! Levels (R : I^n) of the ideal transform as fractional ideals.

use quasiaffine::ideal::{transform_stabilized, transform_step};
use quasiaffine::{Ideal, Polynomial, Ring};

fn main() -> quasiaffine::Result<()> {
    let ring = Ring::new(["x", "y"])?;
    for gens in [&["x"][..], &["x", "y"][..], &["x^2", "x*y"][..]] {
        let ideal = Ideal::parse(&ring, gens)?;
        println!("I = {ideal}");
        for n in 0..=2 {
            let level = transform_step(&ideal, n)?;
            println!(
                "  n = {n}: {level}   base ring: {}   stabilized: {}",
                level.is_base_ring()?,
                transform_stabilized(&ideal, n)?
            );
        }
    }

    // removing a hypersurface adds 1/x, removing a point adds nothing
    let one = Polynomial::one(&ring);
    let x = Polynomial::var(&ring, 0);
    let line = transform_step(&Ideal::parse(&ring, &["x"])?, 1)?;
    let point = transform_step(&Ideal::parse(&ring, &["x", "y"])?, 1)?;
    println!("1/x in S((x)): {}", line.contains_fraction(&one, &x)?);
    println!("1/x in S((x, y)): {}", point.contains_fraction(&one, &x)?);
    Ok(())
}
