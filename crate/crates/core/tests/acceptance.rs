//! The fourteen acceptance criteria, one line each.

mod common;

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::One;

use quasiaffine::derivation::Derivation;
use quasiaffine::ideal::groebner::normal_form_by;
use quasiaffine::ideal::{transform_step, transform_step_with, FractionalIdeal, Ideal};
use quasiaffine::poly::{MonomialOrder, Polynomial, Ring};
use quasiaffine::quotient::{build_fiber_product, quadric_cone_datum, sl2_datum};
use quasiaffine::worked::df::{self, df_dataset, jacobian_rank, parse_point, DfDataset};
use quasiaffine::worked::{appendix_dataset, verify_appendix};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

fn ac1() -> Outcome {
    let data = df_dataset();
    for i in 1..=6 {
        let image = data.derivation.apply(data.phi(i)).map_err(e)?;
        ensure(image.is_zero(), format!("D(phi{i}) = {image}"))?;
    }
    Ok("D(phi_i) = 0 for i = 1..6".into())
}

fn ac2() -> Outcome {
    let data = df_dataset();
    let report = df::verify_df_relations(&data);
    ensure(report.passed(), report.to_string())?;
    // independent expansion of the discrepancy
    let vars = df::VARIABLES;
    let p2 = common::parse(df::PHI2, &vars);
    let p3 = common::parse(df::PHI3, &vars);
    let quotient = common::divide_by_power(&common::add(&common::pow(&p2, 3), &common::pow(&p3, 2)), 0, 6)
        .ok_or("phi2^3 + phi3^2 not divisible by x^6")?;
    let oracle = common::sub(&quotient, &common::parse(df::PRINTED_PHI6, &vars));
    ensure(oracle == common::parse("3*x^6*t^2*s^2 - 3*t^2*s^2", &vars), "oracle discrepancy differs")?;
    let emitted = report.get("df.relations.phi6_printed").and_then(|c| c.witness.clone()).unwrap_or_default();
    Ok(format!("identities exact; {emitted}"))
}

fn ac3() -> Outcome {
    let report = df::verify_phi_into_V(&df_dataset());
    ensure(report.passed(), report.to_string())?;
    Ok("both equations of V pull back to 0".into())
}

fn ac4() -> Outcome {
    let report = df::df_singular_locus_check(&df_dataset());
    ensure(report.passed(), report.to_string())?;
    Ok("Sing ideal and (w1, w2, w3) have equal radicals on V".into())
}

fn ac5() -> Outcome {
    let data = df_dataset();
    let mut off = 0;
    let mut on = 0;
    for p in df::POINTS_OFF_E {
        let r = jacobian_rank(&data.phi, &parse_point(p).map_err(e)?).map_err(e)?;
        ensure(r == 4, format!("rank {r} at ({p})"))?;
        off += 1;
    }
    for p in df::POINTS_ON_E {
        let r = jacobian_rank(&data.phi, &parse_point(p).map_err(e)?).map_err(e)?;
        ensure(r == 2, format!("rank {r} at ({p}) on E"))?;
        on += 1;
    }
    ensure(off >= 3 && on >= 2, "too few sample points")?;
    Ok(format!("rank 4 at {off} points off E, rank 2 at {on} points on E"))
}

fn ac6() -> Outcome {
    let (law, identity) = df::group_law(&df_dataset().derivation).map_err(e)?;
    ensure(law, "mu(r) o mu(r') != mu(r + r')")?;
    ensure(identity, "mu(0) != id")?;
    Ok("mu(r) o mu(r') = mu(r + r'), mu(0) = id".into())
}

fn ac7() -> Outcome {
    let report = df::df_fixed_locus_check(&df_dataset());
    ensure(report.passed(), report.to_string())?;
    Ok(report.get("df.fixed.radical").and_then(|c| c.witness.clone()).unwrap_or_default())
}

fn ac8() -> Outcome {
    let data = df_dataset();
    let constancy = df::df_constancy_check(&data);
    ensure(constancy.passed(), constancy.to_string())?;
    for base in ["1,0,1,0,0", "1,1,1,1,1"] {
        let report = df::df_fiber_orbit_check(&data, &parse_point(base).map_err(e)?);
        ensure(report.passed() && report.checks.len() == 3, report.to_string())?;
    }
    Ok("phi o mu = phi; both fibers contain their orbit, have dimension 1, are x-saturated".into())
}

fn ac9() -> Outcome {
    let data = DfDataset::new();
    let d: &Derivation = &data.derivation;
    let images = common::df_images();
    let vars = df::VARIABLES;
    let dense = |p: &Polynomial| common::from_display(&p.to_string(), &vars);

    let two: Vec<common::Dense> = d.kernel_basis_up_to_degree(2, None).map_err(e)?.iter().map(dense).collect();
    let expected: Vec<common::Dense> = ["1", "x", "x^2", "x*v - s"].iter().map(|t| common::parse(t, &vars)).collect();
    let joint: Vec<common::Dense> = two.iter().chain(&expected).cloned().collect();
    ensure(two.len() == 4, format!("degree-2 slice has dimension {}", two.len()))?;
    ensure(common::span_rank(&joint) == 4, "degree-2 slice differs from span(1, x, x^2, xv - s)")?;
    ensure(common::kernel_dimension(&images, 2) == 4, "oracle disagrees at degree 2")?;

    let four: Vec<common::Dense> = d.kernel_basis_up_to_degree(4, None).map_err(e)?.iter().map(dense).collect();
    let oracle = common::kernel_dimension(&images, 4);
    ensure(four.len() == oracle, format!("degree 4: {} vs oracle {oracle}", four.len()))?;
    let mut with_phi2 = four.clone();
    with_phi2.push(common::parse(df::PHI2, &vars));
    ensure(common::span_rank(&with_phi2) == four.len(), "phi2 not in degree-4 slice")?;
    Ok(format!("dim 4 at degree 2, dim {oracle} at degree 4, matching the dense oracle"))
}

fn ac10() -> Outcome {
    let ring = Ring::new(["x", "y"]).map_err(e)?;
    let p = |t: &str| Polynomial::parse(t, &ring).unwrap();
    let base = FractionalIdeal::base_ring(&ring);

    let line = Ideal::parse(&ring, &["x"]).map_err(e)?;
    let s1 = transform_step(&line, 1).map_err(e)?;
    ensure(s1.contains(&base).map_err(e)?, "S contains R fails")?;
    ensure(!s1.same_as(&base).map_err(e)?, "(R : (x)) = R")?;
    ensure(s1.contains_fraction(&p("1"), &p("x")).map_err(e)?, "1/x not in (R : (x))")?;
    let alt = transform_step_with(&line, 1, &p("x^2 + x*y")).map_err(e)?;
    ensure(alt.same_as(&s1).map_err(e)?, "choice of f changes (R : (x))")?;

    let origin = Ideal::parse(&ring, &["x", "y"]).map_err(e)?;
    for n in 0..=2 {
        for f in ["x", "y", "x + y"] {
            let level = transform_step_with(&origin, n, &p(f)).map_err(e)?;
            ensure(level.is_base_ring().map_err(e)?, format!("(R : (x, y)^{n}) != R with f = {f}"))?;
        }
    }
    Ok("(R : (x)) strictly contains R and 1/x; (R : (x, y)^n) = R for n <= 2; f-independent".into())
}

fn ac11() -> Outcome {
    let w = build_fiber_product(&sl2_datum()).map_err(e)?;
    ensure(w.verify_unit_relation(), "unit relation fails on SL2")?;
    let slice = w.verify_quotient_slice(2).map_err(e)?;
    ensure(slice.is_clean(), slice.to_string())?;
    let got = slice.elements();
    let expected: Vec<Polynomial> = ["a^2", "a*c", "c^2", "a", "c", "1"]
        .iter()
        .map(|t| Polynomial::parse(t, w.ring()).unwrap())
        .collect();
    ensure(got.len() == 6 && expected.iter().all(|x| got.contains(x)), format!("slice {got:?}"))?;

    let datum = quadric_cone_datum();
    let cone = build_fiber_product(&datum).map_err(e)?;
    let y = datum.ring();
    let lift = cone
        .extend_regular_function(&Polynomial::parse("y3", y).unwrap(), &Polynomial::parse("y1", y).unwrap(), 1)
        .map_err(e)?;
    let expected = Polynomial::parse("d*y3 - b*y4", cone.ring()).unwrap();
    ensure(cone.w_ideal().contains(&(&lift - &expected)), format!("lift {lift}"))?;
    ensure(cone.is_invariant(&lift).map_err(e)?, "lift not invariant")?;
    Ok(format!("SL2 slice {{1, a, c, a^2, ac, c^2}}; cone lift {lift}"))
}

fn ac12() -> Outcome {
    let report = verify_appendix(&appendix_dataset());
    ensure(report.passed() && report.checks.len() == 6, report.to_string())?;
    Ok("maps into W, preimage of H a curve, 1/x1 in k[V], f(1,0,0) = (0,0,0,0) in H".into())
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (mf, cf) = f.leading_term(order).unwrap();
    let (mg, cg) = g.leading_term(order).unwrap();
    let lcm = mf.lcm(&mg);
    let one = num_rational::BigRational::one();
    &f.mul_monomial(&mf.quotient_of(&lcm).unwrap(), &(&one / &cf))
        - &g.mul_monomial(&mg.quotient_of(&lcm).unwrap(), &(&one / &cg))
}

fn ac13() -> Outcome {
    let r = |names: &[&str]| Ring::new(names.iter().copied()).unwrap();
    let xyz = r(&["x", "y", "z"]);
    let xy = r(&["x", "y"]);
    let data = df_dataset();
    let fiber = Ideal::new(
        &data.ring,
        data.phi
            .iter()
            .zip([1, 1, 1, 0, -1, 2])
            .map(|(p, c)| p - &Polynomial::from_int(&data.ring, c))
            .collect(),
    )
    .map_err(e)?;
    let corpus: Vec<(&str, Ideal)> = vec![
        ("twisted cubic", Ideal::parse(&xyz, &["y - x^2", "z - x^3"]).unwrap()),
        ("V", data.v_ideal.clone()),
        ("cusp", Ideal::parse(&xy, &["y^2 - x^3"]).unwrap()),
        ("cubic parametrization", Ideal::parse(&xyz, &["x^2 - y", "x^3 - z"]).unwrap()),
        ("hyperbola and circle", Ideal::parse(&xy, &["x*y - 1", "x^2 + y^2 - 4"]).unwrap()),
        ("cyclic 3", Ideal::parse(&xyz, &["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"]).unwrap()),
        ("sphere section", Ideal::parse(&xyz, &["x^2 + y^2 + z^2 - 1", "x - y", "y - z^2"]).unwrap()),
        ("katsura 3", Ideal::parse(&xyz, &["x + 2*y + 2*z - 1", "x^2 + 2*y^2 + 2*z^2 - x", "2*x*y + 2*y*z - y"]).unwrap()),
        ("x^3 - 2xy", Ideal::parse(&xy, &["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]).unwrap()),
        ("cone fiber product", build_fiber_product(&quadric_cone_datum()).map_err(e)?.w_ideal().clone()),
        ("df fiber", fiber),
        ("appendix preimage", {
            let a = appendix_dataset();
            a.v_ideal.with_generators([
                Polynomial::parse("x1*x2", &a.v_ring).unwrap(),
                Polynomial::parse("x1*x3", &a.v_ring).unwrap(),
            ]).map_err(e)?
        }),
    ];
    let mut pairs = 0usize;
    for (name, ideal) in &corpus {
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let basis = ideal.groebner_basis(&order);
            for i in 0..basis.len() {
                for j in i + 1..basis.len() {
                    let s = s_polynomial(&basis[i], &basis[j], &order);
                    ensure(normal_form_by(&s, &basis, &order).is_zero(), format!("{name} ({order}): S({i},{j}) != 0"))?;
                    pairs += 1;
                }
            }
            for g in ideal.generators() {
                ensure(normal_form_by(g, &basis, &order).is_zero(), format!("{name} ({order}): {g} not reduced to 0"))?;
            }
        }
    }
    Ok(format!("{} ideals, {pairs} S-polynomials reduce to 0 under grevlex and lex", corpus.len()))
}

fn untimed_report(path: &Path) -> Result<serde_json::Value, String> {
    let text = std::fs::read_to_string(path).map_err(e)?;
    let mut v: serde_json::Value = serde_json::from_str(&text).map_err(e)?;
    for c in v["checks"].as_array_mut().ok_or("no checks array")? {
        c["duration_ms"] = serde_json::json!(0);
    }
    Ok(v)
}

fn ac14() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_quasiaffine");
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR"));
    let mut reports = Vec::new();
    for k in 0..2 {
        let path = dir.join(format!("acceptance_report_{k}.json"));
        let status = Command::new(bin).args(["verify", "all", "--report"]).arg(&path).output().map_err(e)?;
        ensure(status.status.code() == Some(0), format!("verify all exited {:?}", status.status.code()))?;
        reports.push(untimed_report(&path)?);
    }
    ensure(reports[0] == reports[1], "reports differ between runs")?;

    let data = df_dataset();
    for i in 1..=6 {
        let phi = data.phi(i);
        let (m, c) = phi.leading_term(&MonomialOrder::Grevlex).map_err(e)?;
        let corrupted = phi + &Polynomial::monomial(phi.ring(), m, c);
        let path = dir.join(format!("acceptance_phi{i}.session"));
        std::fs::write(&path, format!("ring R : x, s, t, u, v\npoly phi{i} : {corrupted}\n")).map_err(e)?;
        let out = Command::new(bin).args(["verify", "all", "--input"]).arg(&path).output().map_err(e)?;
        ensure(out.status.code() == Some(1), format!("corrupted phi{i}: exit {:?}", out.status.code()))?;
        let stderr = String::from_utf8_lossy(&out.stderr);
        ensure(stderr.lines().any(|l| l.starts_with("fail df.")), format!("corrupted phi{i}: no failing check named"))?;
    }
    Ok("verify all exits 0 with identical reports; each corrupted phi_i exits 1".into())
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);
    let criteria: [Criterion; 14] = [
        ("DF invariance", ac1, Some(Duration::from_secs(5))),
        ("DF relations", ac2, None),
        ("phi maps into V", ac3, None),
        ("Sing V", ac4, Some(Duration::from_secs(60))),
        ("Jacobian rank", ac5, None),
        ("group law", ac6, None),
        ("fixed locus", ac7, None),
        ("orbit and fiber", ac8, None),
        ("kernel slices", ac9, None),
        ("ideal transform", ac10, None),
        ("quotient construction", ac11, Some(Duration::from_secs(30))),
        ("appendix", ac12, None),
        ("Groebner certificates", ac13, None),
        ("CLI contract", ac14, None),
    ];
    let mut failed = 0;
    for (k, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(l)) if elapsed > *l => Err(format!("took {elapsed:?}, limit {l:?}")),
            (o, _) => o,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d.clone()),
            Err(d) => {
                failed += 1;
                ("FAIL", d.clone())
            }
        };
        println!("AC{:02} {tag} {name} ({:.0} ms): {detail}", k + 1, elapsed.as_secs_f64() * 1000.0);
    }
    println!("{} of 14 acceptance criteria passed", 14 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
