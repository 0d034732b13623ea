//! A regular map `f: V -> W` with `f^* Q[W \ H] ⊂ Q[V]` whose image still
//! meets the hypersurface `H`.
//!
//! `V = {x1 != 0} ⊂ A^3` is presented as `Q[x0, x1, x2, x3]/(x0 x1 - 1)`,
//! `W` is the cone `z1 z4 = z2 z3`, `H = Z(z1, z2)` and
//! `f = (x1 x2, x1 x3, x2, x3)`.

use num_traits::Zero;

use crate::error::Result;
use crate::ideal::Ideal;
use crate::poly::{Polynomial, PolynomialMap, Ring};
use crate::report::{timed, Check, Report};
use crate::worked::df::{parse_point, point_label};

#[derive(Clone, Debug)]
pub struct AppendixDataset {
    /// `Q[x0, x1, x2, x3]`
    pub v_ring: Ring,
    /// `(x0 x1 - 1)`
    pub v_ideal: Ideal,
    pub w_ring: Ring,
    pub w_ideal: Ideal,
    pub h_ideal: Ideal,
    /// `Q[W] -> Q[V]`
    pub f: PolynomialMap,
}

impl AppendixDataset {
    pub fn new() -> Self {
        let v_ring = Ring::new(["x0", "x1", "x2", "x3"]).expect("valid names");
        let w_ring = Ring::new(["z1", "z2", "z3", "z4"]).expect("valid names");
        let images = ["x1*x2", "x1*x3", "x2", "x3"]
            .iter()
            .map(|s| Polynomial::parse(s, &v_ring).expect("valid literal"))
            .collect();
        AppendixDataset {
            v_ideal: Ideal::parse(&v_ring, &["x0*x1 - 1"]).expect("valid literal"),
            w_ideal: Ideal::parse(&w_ring, &["z1*z4 - z2*z3"]).expect("valid literal"),
            h_ideal: Ideal::parse(&w_ring, &["z1", "z2"]).expect("valid literal"),
            f: PolynomialMap::new(&w_ring, &v_ring, images).expect("four images"),
            v_ring,
            w_ring,
        }
    }

    fn v(&self, text: &str) -> Polynomial {
        Polynomial::parse(text, &self.v_ring).expect("valid literal")
    }

    fn w(&self, text: &str) -> Polynomial {
        Polynomial::parse(text, &self.w_ring).expect("valid literal")
    }
}

impl Default for AppendixDataset {
    fn default() -> Self {
        AppendixDataset::new()
    }
}

pub fn appendix_dataset() -> AppendixDataset {
    AppendixDataset::new()
}

pub fn verify_appendix(data: &AppendixDataset) -> Report {
    let mut checks = Vec::new();

    checks.extend(timed("appendix.maps_into_w", || {
        let eq = &data.w_ideal.generators()[0];
        let pulled = data.f.pull_back(eq)?;
        Ok(vec![Check::new(
            "appendix.maps_into_w",
            pulled.is_zero(),
            format!("({eq}) o f = {pulled}"),
        )])
    }));

    checks.extend(timed("appendix.preimage", || preimage_checks(data)));

    checks.extend(timed("appendix.pullback_regular", || {
        // z3/z1 = z4/z2 on W \ H; both pull back to x2/(x1 x2) = x3/(x1 x3) = 1/x1 = x0
        let x0 = data.v("x0");
        let mut bad = Vec::new();
        for (num, den) in [("z3", "z1"), ("z4", "z2")] {
            let n = data.f.pull_back(&data.w(num))?;
            let d = data.f.pull_back(&data.w(den))?;
            if !data.v_ideal.contains(&(&(&d * &x0) - &n)) {
                bad.push(format!("{num}/{den}"));
            }
        }
        let inverse = data.v_ideal.contains(&(&(&data.v("x1") * &x0) - &data.v("1")));
        Ok(vec![Check::new(
            "appendix.pullback_regular",
            bad.is_empty() && inverse,
            if bad.is_empty() {
                "f^*(z3/z1) = f^*(z4/z2) = x0, x1*x0 = 1 on V".to_string()
            } else {
                format!("pullback not x0: {}", bad.join(", "))
            },
        )])
    }));

    checks.extend(timed("appendix.meets_h", || {
        // (x1, x2, x3) = (1, 0, 0), so x0 = 1
        let point = parse_point("1,1,0,0")?;
        let on_v = data.v_ideal.generators()[0].evaluate(&point)?;
        let image = data.f.evaluate(&point)?;
        let mut in_h = true;
        for g in data.h_ideal.generators() {
            in_h &= g.evaluate(&image)?.is_zero();
        }
        Ok(vec![Check::new(
            "appendix.meets_h",
            on_v.is_zero() && in_h && image.iter().all(Zero::is_zero),
            format!("f(1,0,0) = {} in H", point_label(&image)),
        )])
    }));

    Report::new(checks)
}

/// `f^{-1}(H)` is the curve `x2 = x3 = 0` in `V`, hence of codimension two.
fn preimage_checks(data: &AppendixDataset) -> Result<Vec<Check>> {
    let pulled: Vec<Polynomial> = data
        .h_ideal
        .generators()
        .iter()
        .map(|g| data.f.pull_back(g))
        .collect::<Result<_>>()?;

    // saturate by x1 away from x0, where x1 is a nonzerodivisor
    let ring = Ring::new(["x1", "x2", "x3"])?;
    let pulled_small = Ideal::new(
        &ring,
        pulled.iter().map(|p| p.embed(&ring)).collect::<Result<_>>()?,
    )?;
    let (saturated, exponent) = pulled_small.saturation(&Ideal::parse(&ring, &["x1"])?)?;
    let expected = Ideal::parse(&ring, &["x2", "x3"])?;
    let saturation_ok = saturated.same_as(&expected) && exponent == 1;

    let localized = data.v_ideal.with_generators(pulled)?;
    let curve = data.v_ideal.with_generators([data.v("x2"), data.v("x3")])?;
    let localized_ok = localized.same_as(&curve);
    let dim = curve.dimension()?;

    Ok(vec![
        Check::new(
            "appendix.preimage.saturation",
            saturation_ok,
            format!("((x1*x2, x1*x3) : x1^inf) = {saturated}, exponent {exponent}"),
        ),
        Check::new(
            "appendix.preimage.localized",
            localized_ok,
            "(x1*x2, x1*x3, x0*x1 - 1) = (x2, x3, x0*x1 - 1)",
        ),
        Check::new(
            "appendix.preimage.curve",
            dim == 1,
            format!("dim f^-1(H) = {dim}"),
        ),
    ])
}
