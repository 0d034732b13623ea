//! Reduced Gröbner bases, membership and elimination.

use quasiaffine::ideal::groebner::is_groebner_basis;
use quasiaffine::{Ideal, MonomialOrder, Polynomial, Ring};

fn main() -> quasiaffine::Result<()> {
    let ring = Ring::new(["t", "x", "y", "z"])?;
    let curve = Ideal::parse(&ring, &["x - t", "y - t^2", "z - t^3"])?;

    let order = MonomialOrder::Lex;
    let basis = curve.groebner_basis(&order);
    println!("lex basis of the parametrized twisted cubic:");
    for g in basis.iter() {
        println!("  {}", g.display_with(&order));
    }
    println!("certificate: {}", is_groebner_basis(&basis, &order));

    // implicit equations: eliminate t
    let implicit = curve.eliminate(1);
    println!("eliminating t: {implicit}");

    let member = Polynomial::parse("x*z - y^2", &ring)?;
    let stranger = Polynomial::parse("x*y - z + 1", &ring)?;
    println!("x*z - y^2 in I: {}", curve.contains(&member));
    println!("x*y - z + 1 in I: {}", curve.contains(&stranger));
    println!("normal form of x*y - z + 1: {}", curve.normal_form(&stranger, &MonomialOrder::Grevlex));

    let cofactors = curve.lift(&member).expect("member");
    let shown: Vec<String> = cofactors.iter().map(|c| c.to_string()).collect();
    println!("x*z - y^2 = combination with cofactors [{}]", shown.join(", "));
    Ok(())
}
