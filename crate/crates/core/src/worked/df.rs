//! The Daigle–Freudenburg derivation of `Q[x, s, t, u, v]`, its invariants
//! `φ1..φ6` and the variety `V ⊂ A^6` they map onto.

use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::ideal::{jacobian_matrix, Ideal};
use crate::linalg;
use crate::poly::{parse_rational, Polynomial, PolynomialMap, Rational, Ring};
use crate::report::{timed, Check, Report};

pub const VARIABLES: [&str; 5] = ["x", "s", "t", "u", "v"];

/// `D = x^3 ∂s + s ∂t + t ∂u + x^2 ∂v`.
pub const DERIVATION: [(&str, &str); 4] = [("s", "x^3"), ("t", "s"), ("u", "t"), ("v", "x^2")];

pub const PHI1: &str = "x";
pub const PHI2: &str = "2*x^3*t - s^2";
pub const PHI3: &str = "3*x^6*u - 3*x^3*t*s + s^3";
pub const PHI4: &str = "x*v - s";
pub const PRINTED_PHI5: &str = "x^2*t*s - s^2*v + 2*x^3*t*v - 3*x^5*u";
/// The expansion of `φ6` as commonly printed; its last term disagrees with
/// the exact quotient `(φ2^3 + φ3^2) / x^6`.
pub const PRINTED_PHI6: &str = "-18*x^3*t*s*u + 9*x^6*u^2 + 8*x^3*t^3 + 6*s^3*u - 3*x^6*t^2*s^2";
/// Division-defined `φ6` minus [`PRINTED_PHI6`].
pub const PHI6_DISCREPANCY: &str = "3*x^6*t^2*s^2 - 3*t^2*s^2";

pub const V_VARIABLES: [&str; 6] = ["w1", "w2", "w3", "w4", "w5", "w6"];
pub const V_EQUATIONS: [&str; 2] = ["w5*w1 - w2*w4 + w3", "w6*w1^6 - w2^3 - w3^2"];

/// Sample points with `(x, s) != (0, 0)`.
pub const POINTS_OFF_E: [&str; 5] = [
    "1,0,0,0,0",
    "1,1,1,1,1",
    "2,-1,3,1/2,5",
    "0,1,1,1,1",
    "0,1,0,0,0",
];
/// Sample points on `E = {x = s = 0}`.
pub const POINTS_ON_E: [&str; 3] = ["0,0,1,1,1", "0,0,0,7,9", "0,0,2,-3,1/2"];
pub const ORBIT_BASES: [&str; 2] = ["1,0,1,0,0", "1,1,1,1,1"];
pub const FIXED_POINT: &str = "0,0,0,7,9";

pub const PARAMETER: &str = "r";

/// Everything needed to verify the example; `phi` may be overridden to
/// exercise the checks against corrupted input.
#[derive(Clone, Debug)]
pub struct DfDataset {
    pub ring: Ring,
    pub derivation: Derivation,
    pub mu: PolynomialMap,
    pub phi: Vec<Polynomial>,
    pub v_ring: Ring,
    pub v_ideal: Ideal,
    pub e_ideal: Ideal,
    pub fixed_ideal: Ideal,
}

pub fn df_ring() -> Ring {
    Ring::new(VARIABLES).expect("valid names")
}

fn exact_quotient(p: &Polynomial, q: &Polynomial, what: &str) -> Polynomial {
    p.div_exact(q)
        .expect("same ring")
        .unwrap_or_else(|| panic!("{what} is not an exact quotient"))
}

impl DfDataset {
    /// `φ5` and `φ6` are the exact quotients `(φ2 φ4 - φ3)/φ1` and
    /// `(φ2^3 + φ3^2)/φ1^6`.
    pub fn new() -> Self {
        let ring = df_ring();
        let p = |s: &str| Polynomial::parse(s, &ring).expect("valid literal");
        let derivation = Derivation::from_pairs(&ring, &DERIVATION).expect("valid literal");
        let mu = derivation.exponential_map(PARAMETER).expect("locally nilpotent");
        let (phi1, phi2, phi3, phi4) = (p(PHI1), p(PHI2), p(PHI3), p(PHI4));
        let phi5 = exact_quotient(&(&(&phi2 * &phi4) - &phi3), &phi1, "phi5");
        let phi6 = exact_quotient(&(&phi2.pow(3) + &phi3.pow(2)), &phi1.pow(6), "phi6");
        let v_ring = Ring::new(V_VARIABLES).expect("valid names");
        DfDataset {
            v_ideal: Ideal::parse(&v_ring, &V_EQUATIONS).expect("valid literal"),
            e_ideal: Ideal::parse(&ring, &["x", "s"]).expect("valid literal"),
            fixed_ideal: Ideal::parse(&ring, &["x", "s", "t"]).expect("valid literal"),
            phi: vec![phi1, phi2, phi3, phi4, phi5, phi6],
            ring,
            derivation,
            mu,
            v_ring,
        }
    }

    /// Replaces `φ_index` (1-based).
    pub fn with_phi(mut self, index: usize, phi: Polynomial) -> Result<Self> {
        if !(1..=6).contains(&index) {
            return Err(Error::Invalid(format!("phi index {index} outside 1..6")));
        }
        self.phi[index - 1] = phi.embed(&self.ring)?;
        Ok(self)
    }

    pub fn phi(&self, index: usize) -> &Polynomial {
        &self.phi[index - 1]
    }

    /// `φ` as the pullback `Q[w1..w6] -> Q[x, s, t, u, v]`.
    pub fn phi_map(&self) -> PolynomialMap {
        PolynomialMap::new(&self.v_ring, &self.ring, self.phi.clone()).expect("six images")
    }

    pub fn printed_phi6(&self) -> Polynomial {
        Polynomial::parse(PRINTED_PHI6, &self.ring).expect("valid literal")
    }

    fn poly(&self, text: &str) -> Polynomial {
        Polynomial::parse(text, &self.ring).expect("valid literal")
    }
}

impl Default for DfDataset {
    fn default() -> Self {
        DfDataset::new()
    }
}

pub fn df_dataset() -> DfDataset {
    DfDataset::new()
}

/// A comma-separated rational tuple such as `2,-1,1/2`.
pub fn parse_point(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(|c| parse_rational(c.trim())).collect()
}

pub fn point_label(point: &[Rational]) -> String {
    let parts: Vec<String> = point.iter().map(|q| q.to_string()).collect();
    format!("({})", parts.join(","))
}

fn constants(ring: &Ring, point: &[Rational]) -> Vec<Polynomial> {
    point
        .iter()
        .map(|c| Polynomial::constant(ring, c.clone()))
        .collect()
}

pub fn verify_df_invariance(data: &DfDataset) -> Report {
    let mut checks = Vec::new();
    for (i, phi) in data.phi.iter().enumerate() {
        let id = format!("df.invariance.phi{}", i + 1);
        checks.extend(timed(&id, || {
            let image = data.derivation.apply(phi)?;
            Ok(vec![Check::new(&id, image.is_zero(), format!("D(phi{}) = {image}", i + 1))])
        }));
    }
    Report::new(checks)
}

pub fn verify_df_relations(data: &DfDataset) -> Report {
    let [p1, p2, p3, p4, p5, p6] = [1, 2, 3, 4, 5, 6].map(|i| data.phi(i).clone());
    let mut checks = Vec::new();
    checks.extend(timed("df.relations.phi5", || {
        let diff = &(&p1 * &p5) - &(&(&p2 * &p4) - &p3);
        Ok(vec![Check::new(
            "df.relations.phi5",
            diff.is_zero(),
            format!("phi1*phi5 - (phi2*phi4 - phi3) = {diff}"),
        )])
    }));
    checks.extend(timed("df.relations.phi6", || {
        let diff = &(&p1.pow(6) * &p6) - &(&p2.pow(3) + &p3.pow(2));
        Ok(vec![Check::new(
            "df.relations.phi6",
            diff.is_zero(),
            format!("phi1^6*phi6 - (phi2^3 + phi3^2) = {diff}"),
        )])
    }));
    checks.extend(timed("df.relations.phi5_printed", || {
        let diff = &p5 - &data.poly(PRINTED_PHI5);
        Ok(vec![Check::new(
            "df.relations.phi5_printed",
            diff.is_zero(),
            format!("phi5 - printed = {diff}"),
        )])
    }));
    // the printed φ6 is expected to differ by exactly the known discrepancy
    checks.extend(timed("df.relations.phi6_printed", || {
        let diff = &p6 - &data.printed_phi6();
        Ok(vec![Check::new(
            "df.relations.phi6_printed",
            diff == data.poly(PHI6_DISCREPANCY),
            format!("phi6 - printed = {diff}"),
        )])
    }));
    Report::new(checks)
}

#[allow(non_snake_case)]
pub fn verify_phi_into_V(data: &DfDataset) -> Report {
    let map = data.phi_map();
    let mut checks = Vec::new();
    for (k, eq) in data.v_ideal.generators().iter().enumerate() {
        let id = format!("df.into_v.equation{}", k + 1);
        checks.extend(timed(&id, || {
            let pulled = map.pull_back(eq)?;
            Ok(vec![Check::new(&id, pulled.is_zero(), format!("({eq}) o phi = {pulled}"))])
        }));
    }
    checks.extend(timed("df.into_v.w1", || {
        let w1 = Polynomial::var(&data.v_ring, 0);
        let pulled = map.pull_back(&w1)?;
        Ok(vec![Check::new("df.into_v.w1", pulled == data.poly("x"), format!("w1 o phi = {pulled}"))])
    }));
    Report::new(checks)
}

/// Jacobian criterion on `V` against `Sing V = Z(w1, w2, w3)`, by mutual
/// radical membership modulo the equations of `V`.
pub fn df_singular_locus_check(data: &DfDataset) -> Report {
    let v = &data.v_ideal;
    let ring = &data.v_ring;
    let mut checks = Vec::new();
    checks.extend(timed("df.sing.dimension", || {
        let dim = v.dimension()?;
        // φ(1, 0, 0, 0, 0), a point of V off Z(w1, w2, w3)
        let smooth_point = parse_point("1,0,0,0,0,0")?;
        let rank = jacobian_rank(v.generators(), &smooth_point)?;
        Ok(vec![
            Check::new("df.sing.dimension", dim == 4, format!("dim V = {dim}")),
            Check::new(
                "df.sing.smooth_point_rank",
                rank == 2,
                format!("Jacobian rank {rank} at {}", point_label(&smooth_point)),
            ),
        ])
    }));
    checks.extend(timed("df.sing.locus", || {
        let sing = v.singular_locus()?;
        let expected = v.with_generators(Ideal::parse(ring, &["w1", "w2", "w3"])?.generators().to_vec())?;
        let mut out = Vec::new();
        for w in ["w1", "w2", "w3"] {
            let p = Polynomial::parse(w, ring)?;
            let ok = sing.radical_contains(&p)?;
            out.push(Check::new(
                format!("df.sing.{w}_in_radical"),
                ok,
                format!("{w} in rad(Sing ideal)"),
            ));
        }
        let mut outside = Vec::new();
        for g in sing.generators() {
            if !expected.radical_contains(g)? {
                outside.push(g.to_string());
            }
        }
        out.push(Check::new(
            "df.sing.minors_in_radical",
            outside.is_empty(),
            if outside.is_empty() {
                format!("{} generators in rad(V + (w1, w2, w3))", sing.generators().len())
            } else {
                format!("not in rad(V + (w1, w2, w3)): {}", outside.join(", "))
            },
        ));
        Ok(out)
    }));
    Report::new(checks)
}

/// Exact rank of the Jacobian of `polys` at a rational point.
pub fn jacobian_rank(polys: &[Polynomial], point: &[Rational]) -> Result<usize> {
    let jac = jacobian_matrix(polys);
    let values = jac
        .iter()
        .map(|row| row.iter().map(|p| p.evaluate(point)).collect::<Result<Vec<_>>>())
        .collect::<Result<linalg::Matrix>>()?;
    Ok(linalg::rank(&values))
}

/// Rank of `dφ` is 4 off `E` and drops on `E`.
pub fn df_rank_check(data: &DfDataset, points: &[Vec<Rational>]) -> Report {
    let mut checks = Vec::new();
    for point in points {
        let label = point_label(point);
        let id = format!("df.rank{label}");
        checks.extend(timed(&id, || {
            if point.len() != 5 {
                return Err(Error::ArityMismatch {
                    expected: 5,
                    found: point.len(),
                });
            }
            let on_e = point[0] == Rational::from_integer(0.into())
                && point[1] == Rational::from_integer(0.into());
            let rank = jacobian_rank(&data.phi, point)?;
            let (ok, expect) = if on_e { (rank < 4, "on E, < 4") } else { (rank == 4, "off E, = 4") };
            Ok(vec![Check::new(&id, ok, format!("rank {rank} ({expect})"))])
        }));
    }
    Report::new(checks)
}

pub fn default_rank_points() -> Vec<Vec<Rational>> {
    POINTS_OFF_E
        .iter()
        .chain(POINTS_ON_E.iter())
        .map(|p| parse_point(p).expect("valid literal"))
        .collect()
}

/// The `r`-coefficients of `μ(r)(ξ) - ξ`, made monic and deduplicated.
pub fn displacement_coefficients(data: &DfDataset) -> Result<Vec<Polynomial>> {
    let target = data.mu.target();
    let r = target.require(PARAMETER)?;
    let mut out: Vec<Polynomial> = Vec::new();
    for (i, image) in data.mu.images().iter().enumerate() {
        let displacement = image - &Polynomial::var(target, i);
        for k in 1..=displacement.degree_in(r) {
            let c = displacement.coefficient_in(r, k).embed(&data.ring)?;
            if c.is_zero() {
                continue;
            }
            let c = c.monic(&Default::default());
            if !out.contains(&c) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

/// `μ(r)` fixes exactly `Z(x, s, t)`.
pub fn df_fixed_locus_check(data: &DfDataset) -> Report {
    let mut checks = Vec::new();
    checks.extend(timed("df.fixed.radical", || {
        let coeffs = displacement_coefficients(data)?;
        let listed: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
        let displacement = Ideal::new(&data.ring, coeffs)?;
        let forward = displacement.radical_contains_ideal(&data.fixed_ideal)?;
        let backward = data.fixed_ideal.radical_contains_ideal(&displacement)?;
        Ok(vec![Check::new(
            "df.fixed.radical",
            forward && backward,
            format!("rad({}) = rad(x, s, t)", listed.join(", ")),
        )])
    }));
    checks.extend(timed("df.fixed.point", || {
        let point = parse_point(FIXED_POINT)?;
        let target = data.mu.target();
        let mut images = constants(target, &point);
        images.push(Polynomial::var(target, target.require(PARAMETER)?));
        let mut moved = Vec::new();
        for (i, image) in data.mu.images().iter().enumerate() {
            let at = image.substitute(&images)?;
            if at != images[i] {
                moved.push(format!("{} -> {at}", VARIABLES[i]));
            }
        }
        Ok(vec![Check::new(
            "df.fixed.point",
            moved.is_empty(),
            if moved.is_empty() {
                format!("mu(r) fixes {}", point_label(&point))
            } else {
                moved.join(", ")
            },
        )])
    }));
    Report::new(checks)
}

/// `φ_i ∘ μ(r) = φ_i` in `Q[x, s, t, u, v, r]`.
pub fn df_constancy_check(data: &DfDataset) -> Report {
    let checks = timed("df.orbit.constancy", || {
        let mut bad = Vec::new();
        for (i, phi) in data.phi.iter().enumerate() {
            let moved = data.mu.pull_back(phi)?;
            if moved != phi.embed(data.mu.target())? {
                bad.push(format!("phi{}", i + 1));
            }
        }
        Ok(vec![Check::new(
            "df.orbit.constancy",
            bad.is_empty(),
            if bad.is_empty() {
                "phi o mu(r) = phi".to_string()
            } else {
                format!("moved by mu(r): {}", bad.join(", "))
            },
        )])
    });
    Report::new(checks)
}

/// The fiber of `φ` through `base` contains its orbit, is a curve and has
/// no component inside `x = 0`.
pub fn df_fiber_orbit_check(data: &DfDataset, base: &[Rational]) -> Report {
    let label = point_label(base);
    let prefix = format!("df.fiber{label}");
    let checks = timed(&prefix, || {
        if base.len() != 5 {
            return Err(Error::ArityMismatch {
                expected: 5,
                found: base.len(),
            });
        }
        let zero = Rational::from_integer(0.into());
        if base[0] == zero && base[1] == zero {
            return Err(Error::Invalid(format!("{label} lies on E")));
        }
        let p = data.phi_map().evaluate(base)?;
        let fiber = Ideal::new(
            &data.ring,
            data.phi
                .iter()
                .zip(&p)
                .map(|(phi, c)| phi - &Polynomial::constant(&data.ring, c.clone()))
                .collect(),
        )?;

        let target = data.mu.target();
        let mut at_base = constants(target, base);
        at_base.push(Polynomial::var(target, target.require(PARAMETER)?));
        let orbit: Vec<Polynomial> = data
            .mu
            .images()
            .iter()
            .map(|image| image.substitute(&at_base))
            .collect::<Result<_>>()?;
        let mut off = Vec::new();
        for g in fiber.generators() {
            let along = g.substitute(&orbit)?;
            if !along.is_zero() {
                off.push(along.to_string());
            }
        }
        let orbit_text: Vec<String> = orbit.iter().map(|o| o.to_string()).collect();

        let dim = fiber.dimension()?;
        let (saturated, exponent) = fiber.saturation(&Ideal::parse(&data.ring, &["x"])?)?;
        let stable = saturated.same_as(&fiber);

        Ok(vec![
            Check::new(
                format!("{prefix}.orbit_in_fiber"),
                off.is_empty(),
                format!("phi = {}, orbit ({})", point_label(&p), orbit_text.join(", ")),
            ),
            Check::new(format!("{prefix}.dimension"), dim == 1, format!("dim = {dim}")),
            Check::new(
                format!("{prefix}.saturation"),
                stable,
                format!("(fiber : x^inf) stabilizes at exponent {exponent}"),
            ),
        ])
    });
    Report::new(checks)
}

/// `μ(r) ∘ μ(r') = μ(r + r')` and `μ(0) = id`.
pub fn df_group_law_check(data: &DfDataset) -> Report {
    let checks = timed("df.group_law", || {
        let (law, identity) = group_law(&data.derivation)?;
        Ok(vec![
            Check::new("df.group_law.composition", law, "mu(r) o mu(r') = mu(r + r')"),
            Check::new("df.group_law.identity", identity, "mu(0) = id"),
        ])
    });
    Report::new(checks)
}

/// Checks the one-parameter group law of `exp(rD)` with two formal
/// parameters. Returns (composition holds, identity at zero holds).
pub fn group_law(derivation: &Derivation) -> Result<(bool, bool)> {
    let ring = derivation.ring();
    let r = ring.fresh_name("r");
    let r2 = ring.with_suffix(std::slice::from_ref(&r))?.fresh_name("r");
    let two = ring.with_suffix(&[r.clone(), r2.clone()])?;
    let n = ring.arity();
    let mu_r = derivation.exponential_map(&r)?;
    let mu_r2 = derivation.exponential_map(&r2)?;

    let pr = Polynomial::var(&two, n);
    let pr2 = Polynomial::var(&two, n + 1);
    // coordinates after flowing by r' and then by r
    let inner: Vec<Polynomial> = mu_r2
        .images()
        .iter()
        .map(|p| p.embed(&two))
        .collect::<Result<_>>()?;
    let mut outer_images = inner.clone();
    outer_images.push(pr.clone());
    let mut sum_images: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&two, i)).collect();
    sum_images.push(&pr + &pr2);

    let mut composition = true;
    for image in mu_r.images() {
        let lhs = image.substitute(&outer_images)?;
        let rhs = image.substitute(&sum_images)?;
        composition &= lhs == rhs;
    }

    let mut at_zero: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(ring, i)).collect();
    at_zero.push(Polynomial::zero(ring));
    let mut identity = true;
    for (i, image) in mu_r.images().iter().enumerate() {
        identity &= image.substitute(&at_zero)? == Polynomial::var(ring, i);
    }
    Ok((composition, identity))
}

/// Every check on the example, with `points` replacing the default rank sample.
pub fn verify_df(data: &DfDataset, points: Option<&[Vec<Rational>]>) -> Report {
    let defaults = default_rank_points();
    let points = points.unwrap_or(&defaults);
    let mut reports = vec![
        verify_df_invariance(data),
        verify_df_relations(data),
        verify_phi_into_V(data),
        df_singular_locus_check(data),
        df_rank_check(data, points),
        df_fixed_locus_check(data),
        df_constancy_check(data),
        df_group_law_check(data),
    ];
    for base in ORBIT_BASES {
        reports.push(df_fiber_orbit_check(data, &parse_point(base).expect("valid literal")));
    }
    Report::merge(reports)
}
