//! A locally nilpotent derivation of A^5: nilpotency, its flow and kernel slices.

use quasiaffine::derivation::DEFAULT_NILPOTENCY_BOUND;
use quasiaffine::worked::df;
use quasiaffine::{Derivation, Polynomial};

fn main() -> quasiaffine::Result<()> {
    let ring = df::df_ring();
    let d = Derivation::from_pairs(&ring, &df::DERIVATION)?;
    println!("D: {d}");

    for (i, name) in ring.names().iter().enumerate() {
        println!("  nilpotency of {name}: {:?}", d.nilpotency_order(i, DEFAULT_NILPOTENCY_BOUND)?);
    }

    println!("exp(rD):");
    print!("{}", d.exponential_map("r")?);

    let phi2 = Polynomial::parse(df::PHI2, &ring)?;
    println!("D({phi2}) = {}", d.apply(&phi2)?);

    for degree in 0..=4 {
        let basis = d.kernel_basis_up_to_degree(degree, None)?;
        let shown: Vec<String> = basis.iter().map(|p| p.to_string()).collect();
        println!("ker D, degree <= {degree} ({}): {}", basis.len(), shown.join(", "));
    }
    Ok(())
}
