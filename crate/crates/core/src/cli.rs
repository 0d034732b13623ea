//! Command-line front end over session files.
//!
//! Exit codes: 0 when everything checked passes, 1 when a mathematical
//! check fails, 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::derivation::DEFAULT_NILPOTENCY_BOUND;
use crate::error::{Error, Result};
use crate::ideal::{transform_stabilized, transform_step};
use crate::poly::{MonomialOrder, Rational};
use crate::quotient::{build_fiber_product, SliceStatus};
use crate::report::Report;
use crate::session::Session;
use crate::worked::df::{self, DfDataset};
use crate::worked::{appendix_dataset, verify_appendix};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "quasiaffine", version, about = "Exact ideal, derivation and G_a-quotient computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Gröbner basis of a declared ideal
    Gb {
        #[arg(long)]
        input: PathBuf,
        ideal: String,
        #[arg(long, default_value = "grevlex")]
        order: String,
    },
    /// Level n of the ideal transform (R : I^n)
    Transform {
        #[arg(long)]
        input: PathBuf,
        ideal: String,
        n: usize,
    },
    /// Apply, exponentiate or take kernels of a declared derivation
    Derive {
        #[arg(long)]
        input: PathBuf,
        derivation: String,
        #[command(subcommand)]
        action: DeriveAction,
    },
    /// Fiber product presentations of quasi-affine data
    Quotient {
        #[arg(long)]
        input: PathBuf,
        datum: String,
        #[command(subcommand)]
        action: QuotientAction,
    },
    /// Run the verification suite on the worked examples
    Verify {
        target: Target,
        /// Session file whose `phi1`..`phi6` replace the built-in invariants
        #[arg(long)]
        input: Option<PathBuf>,
        /// Write the JSON report here
        #[arg(long)]
        report: Option<PathBuf>,
        /// Rank sample points, one comma-separated rational tuple per line
        #[arg(long)]
        points: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum DeriveAction {
    /// D(p)
    Apply { poly: String },
    /// The flow x -> sum r^k/k! D^k(x)
    Exp {
        #[arg(long, default_value = "r")]
        param: String,
    },
    /// Basis of the kernel up to a total degree, optionally modulo an ideal
    Kernel {
        degree: u32,
        #[arg(long)]
        modulo: Option<String>,
    },
    /// Exit 1 unless D(p) = 0
    Invariant { poly: String },
}

#[derive(Subcommand, Debug)]
enum QuotientAction {
    /// Print the presentation of W and its certificates
    Build,
    /// Lift numerator/denominator, regular on Omega at level n, to W
    Extend {
        numerator: String,
        denominator: String,
        n: usize,
    },
    /// Account for every invariant of W up to a degree
    Slice { degree: u32 },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    Df,
    Appendix,
    All,
}

/// Outcome of a command that did not hit an input error.
enum Outcome {
    Pass,
    Fail,
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_PASS
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_INPUT
                }
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(Outcome::Pass) => EXIT_PASS,
        Ok(Outcome::Fail) => EXIT_FAIL,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Invalid(format!("output error: {e}"))
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    match command {
        Command::Gb { input, ideal, order } => {
            let session = Session::from_file(&input)?;
            let order = MonomialOrder::parse(&order)
                .ok_or_else(|| Error::Invalid(format!("unknown order `{order}`")))?;
            let ideal = session.ideal(&ideal)?;
            if let MonomialOrder::Block { split, .. } = &order {
                if *split > ideal.ring().arity() {
                    return Err(Error::Invalid(format!(
                        "block size {split} exceeds {} variables",
                        ideal.ring().arity()
                    )));
                }
            }
            let mut basis = ideal.groebner_basis(&order).to_vec();
            basis.sort_by(|a, b| order.cmp(&b.leading_monomial(&order).unwrap(), &a.leading_monomial(&order).unwrap()));
            for g in &basis {
                writeln!(out, "{}", g.display_with(&order)).map_err(io)?;
            }
            Ok(Outcome::Pass)
        }
        Command::Transform { input, ideal, n } => {
            let session = Session::from_file(&input)?;
            let ideal = session.ideal(&ideal)?;
            let level = transform_step(ideal, n)?;
            let stabilized = transform_stabilized(ideal, n)?;
            let gens = level.numerator().groebner_basis(&MonomialOrder::Grevlex);
            let shown: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
            writeln!(out, "numerator: ({})", shown.join(", ")).map_err(io)?;
            writeln!(out, "denominator: {}", level.denominator()).map_err(io)?;
            writeln!(out, "base ring: {}", level.is_base_ring()?).map_err(io)?;
            writeln!(out, "stabilized: {stabilized}").map_err(io)?;
            Ok(Outcome::Pass)
        }
        Command::Derive {
            input,
            derivation,
            action,
        } => {
            let session = Session::from_file(&input)?;
            let d = session.derivation(&derivation)?;
            let ring = d.ring();
            match action {
                DeriveAction::Apply { poly } => {
                    let p = session.parse_poly(&poly, ring)?;
                    writeln!(out, "{}", d.apply(&p)?).map_err(io)?;
                    Ok(Outcome::Pass)
                }
                DeriveAction::Exp { param } => {
                    let mu = d.exponential_map_with_bound(&param, DEFAULT_NILPOTENCY_BOUND)?;
                    write!(out, "{mu}").map_err(io)?;
                    Ok(Outcome::Pass)
                }
                DeriveAction::Kernel { degree, modulo } => {
                    let ideal = modulo.map(|m| session.ideal(&m).cloned()).transpose()?;
                    for p in d.kernel_basis_up_to_degree(degree, ideal.as_ref())? {
                        writeln!(out, "{p}").map_err(io)?;
                    }
                    Ok(Outcome::Pass)
                }
                DeriveAction::Invariant { poly } => {
                    let p = session.parse_poly(&poly, ring)?;
                    let image = d.apply(&p)?;
                    if image.is_zero() {
                        writeln!(out, "invariant: yes").map_err(io)?;
                        Ok(Outcome::Pass)
                    } else {
                        writeln!(out, "invariant: no").map_err(io)?;
                        writeln!(out, "D({p}) = {image}").map_err(io)?;
                        Ok(Outcome::Fail)
                    }
                }
            }
        }
        Command::Quotient {
            input,
            datum,
            action,
        } => {
            let session = Session::from_file(&input)?;
            let datum = session.datum(&datum)?;
            let w = build_fiber_product(datum)?;
            match action {
                QuotientAction::Build => {
                    writeln!(out, "{w}").map_err(io)?;
                    let unit = w.verify_unit_relation();
                    let (a, c) = w.quotient_coords();
                    let coords = w.is_invariant(&a)? && w.is_invariant(&c)?;
                    writeln!(out, "action stability: pass").map_err(io)?;
                    writeln!(out, "unit relation d*f1 - b*f2 = 1: {}", verdict(unit)).map_err(io)?;
                    writeln!(out, "quotient coordinates invariant: {}", verdict(coords)).map_err(io)?;
                    Ok(if unit && coords { Outcome::Pass } else { Outcome::Fail })
                }
                QuotientAction::Extend {
                    numerator,
                    denominator,
                    n,
                } => {
                    let y = datum.ring();
                    let num = session.parse_poly(&numerator, y)?;
                    let den = session.parse_poly(&denominator, y)?;
                    match w.extend_regular_function(&num, &den, n) {
                        Ok(lift) => {
                            writeln!(out, "{lift}").map_err(io)?;
                            let invariant = w.is_invariant(&lift)?;
                            writeln!(out, "invariant: {}", if invariant { "yes" } else { "no" }).map_err(io)?;
                            Ok(if invariant { Outcome::Pass } else { Outcome::Fail })
                        }
                        Err(e @ Error::NotRegular { .. }) => {
                            writeln!(err, "{e}").map_err(io)?;
                            Ok(Outcome::Fail)
                        }
                        Err(e) => Err(e),
                    }
                }
                QuotientAction::Slice { degree } => {
                    let report = w.verify_quotient_slice(degree)?;
                    write!(out, "{report}").map_err(io)?;
                    let unexplained = report
                        .entries
                        .iter()
                        .filter(|e| matches!(e.status, SliceStatus::Unexplained))
                        .count();
                    writeln!(out, "{} invariants, {unexplained} unexplained", report.entries.len()).map_err(io)?;
                    Ok(if report.is_clean() { Outcome::Pass } else { Outcome::Fail })
                }
            }
        }
        Command::Verify {
            target,
            input,
            report,
            points,
        } => {
            let data = match &input {
                Some(path) => df_with_overrides(&Session::from_file(path)?)?,
                None => DfDataset::new(),
            };
            let points = points.as_deref().map(read_points).transpose()?;
            let result = match target {
                Target::Df => df::verify_df(&data, points.as_deref()),
                Target::Appendix => verify_appendix(&appendix_dataset()),
                Target::All => crate::worked::verify_all(&data, points.as_deref()),
            };
            writeln!(out, "{result}").map_err(io)?;
            if let Some(path) = report {
                write_report(&path, &result)?;
            }
            for c in result.failures() {
                writeln!(err, "{} {}", c.status, c.id).map_err(io)?;
            }
            Ok(if result.passed() { Outcome::Pass } else { Outcome::Fail })
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn write_report(path: &Path, report: &Report) -> Result<()> {
    std::fs::write(path, report.to_json() + "\n")
        .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))
}

/// The built-in dataset with any declared `phi1`..`phi6` substituted.
pub fn df_with_overrides(session: &Session) -> Result<DfDataset> {
    let mut data = DfDataset::new();
    for (name, p) in session.polys() {
        let Some(index) = name.strip_prefix("phi").and_then(|k| k.parse::<usize>().ok()) else {
            continue;
        };
        data = data.with_phi(index, p.clone())?;
    }
    Ok(data)
}

/// One comma-separated rational tuple per line; blank lines and `#` comments skipped.
pub fn read_points(path: &Path) -> Result<Vec<Vec<Rational>>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    parse_points(&text)
}

pub fn parse_points(text: &str) -> Result<Vec<Vec<Rational>>> {
    let mut points = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let p = df::parse_point(line).map_err(|e| Error::Input {
            line: k + 1,
            message: e.to_string(),
        })?;
        if p.len() != df::VARIABLES.len() {
            return Err(Error::Input {
                line: k + 1,
                message: format!("expected {} coordinates, got {}", df::VARIABLES.len(), p.len()),
            });
        }
        points.push(p);
    }
    Ok(points)
}
