//! Parsing, arithmetic, monomial orders and substitution.

use quasiaffine::poly::rational;
use quasiaffine::{MonomialOrder, Polynomial, PolynomialMap, Ring};

fn main() -> quasiaffine::Result<()> {
    let ring = Ring::new(["x", "y", "z"])?;
    let p = Polynomial::parse("(x + y)^3 - 3*x*y*(x + y)", &ring)?;
    println!("{ring}: p = {p}");

    let q = Polynomial::parse("x*z^2 + x^2 - 1/2*y^3 + 3", &ring)?;
    println!("p*q = {}", &p * &q);
    println!("dp/dx = {}", p.partial_derivative(0));

    for order in [MonomialOrder::Lex, MonomialOrder::Grevlex, MonomialOrder::elimination(1)] {
        let (m, c) = q.leading_term(&order)?;
        let lead = Polynomial::monomial(&ring, m, c);
        println!("{order}: {}   leading term {lead}", q.display_with(&order));
    }

    // (x, y, z) -> (t, t^2, t^3)
    let line = Ring::new(["t"])?;
    let t = |s: &str| Polynomial::parse(s, &line).unwrap();
    let curve = PolynomialMap::new(&ring, &line, vec![t("t"), t("t^2"), t("t^3")])?;
    let cubic = Polynomial::parse("y^3 - z^2", &ring)?;
    println!("(y^3 - z^2) on the twisted cubic: {}", curve.pull_back(&cubic)?);

    let value = p.evaluate(&[rational(1, 2), rational(2, 1), rational(0, 1)])?;
    println!("p(1/2, 2, 0) = {value}");
    Ok(())
}
