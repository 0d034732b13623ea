//! Regular functions on Y \ Z(f1, f2) as invariants of a G_a-action on
//! the fiber product W = Y x_{A^2} SL_2.

use quasiaffine::quotient::{build_fiber_product, quadric_cone_datum, sl2_datum};
use quasiaffine::Polynomial;

fn main() -> quasiaffine::Result<()> {
    let sl2 = build_fiber_product(&sl2_datum())?;
    println!("{sl2}");
    println!("unit relation: {}", sl2.verify_unit_relation());
    print!("invariants up to degree 2:\n{}", sl2.verify_quotient_slice(2)?);

    let datum = quadric_cone_datum();
    let cone = build_fiber_product(&datum)?;
    println!("\n{cone}");
    let y = datum.ring();
    let num = Polynomial::parse("y3", y)?;
    let den = Polynomial::parse("y1", y)?;
    let lift = cone.extend_regular_function(&num, &den, 1)?;
    println!("y3/y1 lifts to {lift}, invariant: {}", cone.is_invariant(&lift)?);
    match cone.extend_regular_function(&Polynomial::one(y), &den, 1) {
        Ok(w) => println!("1/y1 lifted to {w}"),
        Err(e) => println!("1/y1: {e}"),
    }
    print!("invariants up to degree 2:\n{}", cone.verify_quotient_slice(2)?);
    Ok(())
}
