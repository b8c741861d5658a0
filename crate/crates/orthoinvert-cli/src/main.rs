//! Command-line front end: runs identity suites as NDJSON check streams,
//! builds inversion matrix pairs, solves triangular operator systems from
//! JSON, and synthesizes the coefficients of the infinite-order equation.
//!
//! Exit codes: 0 when every check passes, 1 when any check fails (points
//! skipped at a pole count as failures only under --strict-poles), 2 for
//! configuration errors such as unknown identities or missing parameters.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use orthoinvert::families::{gen_ultraspherical, FamilySpec};
use orthoinvert::hypersum::{
    saalschutz, saalschutz_ratio, sum_1f0_partial, vandermonde, weighted_zero_sum, wellpoised,
    SumCheck,
};
use orthoinvert::identities::{
    check_derivative_rule, check_laguerre_degenerate, check_monomial_expansion, check_ode,
    check_recurrence, check_symmetry, IdentityId, MonomialBasis,
};
use orthoinvert::inversion::{
    build_inversion_matrices, charlier_inversion_check, gen_laguerre_sum, jacobi_inversion_check,
    jacobi_product_diagonal, jacobi_product_formula, laguerre_convolution_check,
    laguerre_inversion_check, InversionMatrixKind, JacobiInversionVariant,
    LaguerreConvolutionVariant,
};
use orthoinvert::poly::Poly;
use orthoinvert::rational::{format_rational, parse_rational, Rational};
use orthoinvert::report::{params, CheckReport, CheckStatus};
use orthoinvert::solver::{
    residual_check, solve_by_elimination, solve_triangular, TriangularSystem,
};
use orthoinvert::ultrade::{
    a0_from_recurrence, a0_partial_sum_check, a0_sequence, check_raw_system, coeffs_via_inversion,
    identity_55_check, synthesize, verify_de, CoeffRoute, RawSystem,
};

#[derive(Parser)]
#[command(
    name = "orthoinvert",
    about = "Exact checks for orthogonal polynomial summation and inversion identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Run one identity over a parameter sweep, one NDJSON report per point.
    Check(CheckArgs),
    /// Build a mutually inverse pair of connection matrices and verify it.
    Invert(InvertArgs),
    /// Solve a triangular operator system given as JSON.
    Solve(SolveArgs),
    /// Synthesize the infinite-order equation coefficients in closed form.
    SynthUltra(SynthArgs),
    /// Verify the infinite-order differential equation at one degree.
    VerifyDe(VerifyDeArgs),
}

fn parse_rat_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Args)]
struct CheckArgs {
    /// Identity tag from the catalog, e.g. eq31 (case-insensitive).
    #[arg(long)]
    identity: String,
    /// Top of the degree sweep for n-indexed identities.
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    /// Top of the order sweep for (i, j)-indexed inversion identities
    /// (defaults to --n-max).
    #[arg(long)]
    i_max: Option<usize>,
    /// Treat points skipped at a pole as failures.
    #[arg(long)]
    strict_poles: bool,
    #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
    alpha: Option<Rational>,
    #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
    beta: Option<Rational>,
    /// Charlier parameter, or the first upper parameter of a summation.
    #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
    a: Option<Rational>,
    #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
    b: Option<Rational>,
    #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
    c: Option<Rational>,
    #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
    p: Option<Rational>,
    #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
    q: Option<Rational>,
    /// Evaluation point for identities that bind one variable.
    #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true, default_value = "3/7")]
    x0: Rational,
    /// Second evaluation point for product and convolution identities.
    #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true, default_value = "-1/3")]
    y0: Rational,
    /// Mass parameter of the generalized family (eq32 only).
    #[arg(long = "M", value_parser = parse_rat_arg, allow_hyphen_values = true)]
    mass: Option<Rational>,
    /// Free scalar in the coefficient synthesis.
    #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true, default_value = "0")]
    a01: Rational,
}

#[derive(Args)]
struct InvertArgs {
    /// Matrix family: charlier or laguerre.
    #[arg(long)]
    family: String,
    /// Charlier parameter (family charlier).
    #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
    a: Option<Rational>,
    /// Laguerre parameter (family laguerre).
    #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
    alpha: Option<Rational>,
    /// Matrix indices run over 0..=n_max.
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    /// Evaluation point for the matrix entries.
    #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true, default_value = "3/7")]
    x0: Rational,
}

#[derive(Args)]
struct SolveArgs {
    /// Path to a TriangularSystem JSON file, or - for stdin.
    #[arg(long)]
    system: String,
    /// Emit one residual report per equation after the solution.
    #[arg(long)]
    residuals: bool,
}

#[derive(Args)]
struct SynthArgs {
    #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
    alpha: Rational,
    #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true, default_value = "0")]
    a01: Rational,
    #[arg(long, default_value_t = 4)]
    i_max: usize,
    /// Render the coefficients as LaTeX lines instead of JSON.
    #[arg(long)]
    latex: bool,
    /// Rebuild the coefficients through both inversion routes and compare.
    #[arg(long)]
    verify_routes: bool,
}

#[derive(Args)]
struct VerifyDeArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
    alpha: Rational,
    #[arg(long = "M", value_parser = parse_rat_arg, allow_hyphen_values = true)]
    mass: Rational,
    #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true, default_value = "0")]
    a01: Rational,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = init_thread_pool() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let outcome = match cli.command {
        Command::Check(args) => run_check(args),
        Command::Invert(args) => run_invert(args),
        Command::Solve(args) => run_solve(args),
        Command::SynthUltra(args) => run_synth(args),
        Command::VerifyDe(args) => run_verify_de(args),
    };
    match outcome {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn init_thread_pool() -> Result<(), String> {
    match std::env::var("ORTHOINVERT_THREADS") {
        Ok(raw) => {
            let threads: usize = raw.parse().map_err(|_| {
                format!("ORTHOINVERT_THREADS must be a positive integer, got {raw:?}")
            })?;
            if threads == 0 {
                return Err("ORTHOINVERT_THREADS must be a positive integer, got 0".into());
            }
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global()
                .map_err(|e| e.to_string())
        }
        Err(std::env::VarError::NotPresent) => Ok(()),
        Err(e) => Err(e.to_string()),
    }
}

type Job = Box<dyn Fn() -> Result<CheckReport, String> + Send + Sync>;

/// Convert a checker result into a report, downgrading poles to
/// skipped-pole records and promoting anything else to a hard error.
fn settle(
    tag: &str,
    point: BTreeMap<String, String>,
    result: orthoinvert::Result<CheckReport>,
) -> Result<CheckReport, String> {
    match result {
        Ok(report) => Ok(report),
        Err(e) if e.is_pole() => Ok(CheckReport::skipped_pole(tag, point, e.to_string())),
        Err(e) => Err(format!("{tag}: {e}")),
    }
}

fn sum_report(tag: &str, point: BTreeMap<String, String>, check: SumCheck) -> CheckReport {
    CheckReport {
        identity: tag.to_string(),
        params: point,
        status: if check.equal {
            CheckStatus::Ok
        } else {
            CheckStatus::Fail
        },
        residual: None,
        lhs: Some(format_rational(&check.lhs)),
        rhs: Some(format_rational(&check.rhs)),
        detail: None,
    }
}

fn settle_sum(
    tag: &str,
    point: BTreeMap<String, String>,
    result: orthoinvert::Result<SumCheck>,
) -> Result<CheckReport, String> {
    match result {
        Ok(check) => Ok(sum_report(tag, point, check)),
        Err(e) if e.is_pole() => Ok(CheckReport::skipped_pole(tag, point, e.to_string())),
        Err(e) => Err(format!("{tag}: {e}")),
    }
}

fn run_check(args: CheckArgs) -> Result<ExitCode, String> {
    let jobs = build_jobs(&args)?;
    let reports = jobs
        .par_iter()
        .map(|job| job())
        .collect::<Result<Vec<_>, String>>()?;

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for report in &reports {
        let line = serde_json::to_string(report).map_err(|e| e.to_string())?;
        writeln!(out, "{line}").map_err(|e| e.to_string())?;
    }

    let any_fail = reports.iter().any(|r| r.status == CheckStatus::Fail);
    let any_skip = reports.iter().any(|r| r.status == CheckStatus::SkippedPole);
    if any_fail || (args.strict_poles && any_skip) {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn need(identity: &str, name: &str, value: &Option<Rational>) -> Result<Rational, String> {
    value
        .clone()
        .ok_or_else(|| format!("identity {identity} needs --{name}"))
}

fn need_sweep(identity: &str, flag: &str, given: usize, minimum: usize) -> Result<(), String> {
    if given < minimum {
        return Err(format!("identity {identity} needs --{flag} >= {minimum}"));
    }
    Ok(())
}

fn build_jobs(args: &CheckArgs) -> Result<Vec<Job>, String> {
    let tag: String = args
        .identity
        .chars()
        .filter(|ch| *ch != '-' && *ch != '_')
        .collect::<String>()
        .to_ascii_lowercase();
    let id = args.identity.as_str();
    let n_max = args.n_max;
    let i_max = args.i_max.unwrap_or(n_max);
    let mut jobs: Vec<Job> = Vec::new();

    match tag.as_str() {
        "eq5" => {
            let alpha = need(id, "alpha", &args.alpha)?;
            for n in 0..=n_max {
                for i in 0..=n {
                    let family = FamilySpec::Laguerre {
                        alpha: alpha.clone(),
                    };
                    jobs.push(Box::new(move || {
                        check_derivative_rule(&family, n, i).map_err(err_str)
                    }));
                }
            }
        }
        "eq6" => {
            let alpha = need(id, "alpha", &args.alpha)?;
            for n in 0..=n_max {
                let family = FamilySpec::Laguerre {
                    alpha: alpha.clone(),
                };
                jobs.push(Box::new(move || check_ode(&family, n).map_err(err_str)));
            }
        }
        "eq7" => {
            let alpha = need(id, "alpha", &args.alpha)?;
            for n in 0..=n_max {
                let basis = MonomialBasis::Laguerre {
                    alpha: alpha.clone(),
                };
                jobs.push(Box::new(move || {
                    check_monomial_expansion(&basis, n).map_err(err_str)
                }));
            }
        }
        "eq11" => {
            let alpha = need(id, "alpha", &args.alpha)?;
            let beta = need(id, "beta", &args.beta)?;
            for n in 0..=n_max {
                for i in 0..=n {
                    let family = FamilySpec::Jacobi {
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                    };
                    jobs.push(Box::new(move || {
                        check_derivative_rule(&family, n, i).map_err(err_str)
                    }));
                }
            }
        }
        "eq12" => {
            let alpha = need(id, "alpha", &args.alpha)?;
            let beta = need(id, "beta", &args.beta)?;
            for n in 0..=n_max {
                let (alpha, beta) = (alpha.clone(), beta.clone());
                jobs.push(Box::new(move || Ok(check_symmetry(n, &alpha, &beta))));
            }
        }
        "eq13" => {
            let alpha = need(id, "alpha", &args.alpha)?;
            let beta = need(id, "beta", &args.beta)?;
            for n in 0..=n_max {
                let family = FamilySpec::Jacobi {
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                };
                jobs.push(Box::new(move || check_ode(&family, n).map_err(err_str)));
            }
        }
        "eq14" | "eq15" => {
            let alpha = need(id, "alpha", &args.alpha)?;
            let beta = need(id, "beta", &args.beta)?;
            let report_tag = if tag == "eq14" { "Eq14" } else { "Eq15" };
            for n in 0..=n_max {
                let basis = if tag == "eq14" {
                    MonomialBasis::Jacobi {
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                    }
                } else {
                    MonomialBasis::JacobiRatio {
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                    }
                };
                let point = params(&[
                    ("n", n.to_string()),
                    ("alpha", format_rational(&alpha)),
                    ("beta", format_rational(&beta)),
                ]);
                jobs.push(Box::new(move || {
                    settle(
                        report_tag,
                        point.clone(),
                        check_monomial_expansion(&basis, n),
                    )
                }));
            }
        }
        "eq17" | "eq18" | "eq19" | "eq20" | "eq21" | "eq22" => {
            let alpha = need(id, "alpha", &args.alpha)?;
            let ultra = matches!(tag.as_str(), "eq20" | "eq21" | "eq22");
            let beta = if ultra {
                alpha.clone()
            } else {
                need(id, "beta", &args.beta)?
            };
            let rec = match tag.as_str() {
                "eq17" => IdentityId::DerivTimesXMinusOne,
                "eq18" => IdentityId::DerivTimesXPlusOne,
                "eq19" => IdentityId::ParamShiftDifference,
                "eq20" => IdentityId::UltraDerivRelation,
                "eq21" => IdentityId::UltraThreeTerm,
                _ => IdentityId::UltraQuadraticSplit,
            };
            let n_min = if ultra { 2 } else { 1 };
            need_sweep(id, "n-max", n_max, n_min)?;
            for n in n_min..=n_max {
                let (alpha, beta) = (alpha.clone(), beta.clone());
                jobs.push(Box::new(move || {
                    check_recurrence(rec, n, &alpha, &beta).map_err(err_str)
                }));
            }
        }
        "eq56" => {
            for n in 0..=n_max {
                jobs.push(Box::new(move || Ok(check_laguerre_degenerate(n))));
            }
        }
        "eq23" => {
            let a = need(id, "a", &args.a)?;
            for n in 0..=n_max {
                let a = a.clone();
                jobs.push(Box::new(move || {
                    let point = params(&[("n", n.to_string()), ("a", format_rational(&a))]);
                    Ok(sum_report("Eq23", point, sum_1f0_partial(&a, n)))
                }));
            }
        }
        "eq24" => {
            let b = need(id, "b", &args.b)?;
            let c = need(id, "c", &args.c)?;
            for n in 0..=n_max {
                let (b, c) = (b.clone(), c.clone());
                jobs.push(Box::new(move || {
                    let point = params(&[
                        ("n", n.to_string()),
                        ("b", format_rational(&b)),
                        ("c", format_rational(&c)),
                    ]);
                    settle_sum("Eq24", point, vandermonde(&b, &c, n))
                }));
            }
        }
        "eq25" => {
            let b = need(id, "b", &args.b)?;
            need_sweep(id, "n-max", n_max, 1)?;
            for n in 1..=n_max {
                let b = b.clone();
                jobs.push(Box::new(move || {
                    let point = params(&[("n", n.to_string()), ("b", format_rational(&b))]);
                    settle_sum("Eq25", point, weighted_zero_sum(&b, n))
                }));
            }
        }
        "eq27" => {
            let a = need(id, "a", &args.a)?;
            let b = need(id, "b", &args.b)?;
            let c = need(id, "c", &args.c)?;
            for n in 0..=n_max {
                let (a, b, c) = (a.clone(), b.clone(), c.clone());
                jobs.push(Box::new(move || {
                    let point = params(&[
                        ("n", n.to_string()),
                        ("a", format_rational(&a)),
                        ("b", format_rational(&b)),
                        ("c", format_rational(&c)),
                    ]);
                    settle_sum("Eq27", point, saalschutz(&a, &b, &c, n))
                }));
            }
        }
        "eq28" | "eq29" => {
            let b = need(id, "b", &args.b)?;
            let c = need(id, "c", &args.c)?;
            let ratio = tag == "eq28";
            for n in 0..=n_max {
                let (b, c) = (b.clone(), c.clone());
                jobs.push(Box::new(move || {
                    let name = if ratio { "Eq28" } else { "Eq29" };
                    let point = params(&[
                        ("n", n.to_string()),
                        ("b", format_rational(&b)),
                        ("c", format_rational(&c)),
                    ]);
                    let outcome = if ratio {
                        saalschutz_ratio(&b, &c, n)
                    } else {
                        wellpoised(&b, &c, n)
                    };
                    settle_sum(name, point, outcome)
                }));
            }
        }
        "eq30" => {
            let alpha = need(id, "alpha", &args.alpha)?;
            for i in 0..=i_max {
                for j in 0..=i {
                    let alpha = alpha.clone();
                    jobs.push(Box::new(move || {
                        laguerre_inversion_check(i, j, &alpha).map_err(err_str)
                    }));
                }
            }
        }
        "eq33" => {
            let a = need(id, "a", &args.a)?;
            for i in 0..=i_max {
                for j in 0..=i {
                    let a = a.clone();
                    jobs.push(Box::new(move || {
                        charlier_inversion_check(i, j, &a).map_err(err_str)
                    }));
                }
            }
        }
        "eq31" | "eq37" | "eq46" | "eq49" => {
            let alpha = need(id, "alpha", &args.alpha)?;
            let ultra = matches!(tag.as_str(), "eq46" | "eq49");
            let beta = if ultra {
                alpha.clone()
            } else {
                need(id, "beta", &args.beta)?
            };
            let variant = if matches!(tag.as_str(), "eq31" | "eq46") {
                JacobiInversionVariant::Delta31
            } else {
                JacobiInversionVariant::Monomial37
            };
            let report_tag = match tag.as_str() {
                "eq31" => "Eq31",
                "eq37" => "Eq37",
                "eq46" => "Eq46",
                _ => "Eq49",
            };
            for i in 0..=i_max {
                for j in 0..=i {
                    let (alpha, beta) = (alpha.clone(), beta.clone());
                    jobs.push(Box::new(move || {
                        let point = params(&[
                            ("i", i.to_string()),
                            ("j", j.to_string()),
                            ("alpha", format_rational(&alpha)),
                            ("beta", format_rational(&beta)),
                        ]);
                        settle(
                            report_tag,
                            point,
                            jacobi_inversion_check(i, j, &alpha, &beta, variant),
                        )
                    }));
                }
            }
        }
        "eq34" => {
            let alpha = need(id, "alpha", &args.alpha)?;
            let p = need(id, "p", &args.p)?;
            let q = need(id, "q", &args.q)?;
            for n in 0..=n_max {
                let (alpha, p, q) = (alpha.clone(), p.clone(), q.clone());
                jobs.push(Box::new(move || Ok(gen_laguerre_sum(n, &alpha, &p, &q))));
            }
        }
        "eq35" => {
            let alpha = need(id, "alpha", &args.alpha)?;
            let beta = need(id, "beta", &args.beta)?;
            for n in 0..=n_max {
                let (alpha, beta, y0) = (alpha.clone(), beta.clone(), args.y0.clone());
                jobs.push(Box::new(move || {
                    let point = params(&[
                        ("n", n.to_string()),
                        ("alpha", format_rational(&alpha)),
                        ("beta", format_rational(&beta)),
                        ("y0", format_rational(&y0)),
                    ]);
                    settle("Eq35", point, jacobi_product_formula(n, &alpha, &beta, &y0))
                }));
            }
        }
        "eq36" => {
            let alpha = need(id, "alpha", &args.alpha)?;
            let beta = need(id, "beta", &args.beta)?;
            for n in 0..=n_max {
                let (alpha, beta, x0) = (alpha.clone(), beta.clone(), args.x0.clone());
                jobs.push(Box::new(move || {
                    let point = params(&[
                        ("n", n.to_string()),
                        ("alpha", format_rational(&alpha)),
                        ("beta", format_rational(&beta)),
                        ("x0", format_rational(&x0)),
                    ]);
                    settle(
                        "Eq36",
                        point,
                        jacobi_product_diagonal(n, &alpha, &beta, &x0),
                    )
                }));
            }
        }
        "eq57" => {
            let alpha = need(id, "alpha", &args.alpha)?;
            for n in 0..=n_max {
                let (alpha, y0) = (alpha.clone(), args.y0.clone());
                jobs.push(Box::new(move || {
                    Ok(laguerre_convolution_check(
                        n,
                        &alpha,
                        &alpha,
                        &y0,
                        LaguerreConvolutionVariant::Eq57,
                    ))
                }));
            }
        }
        "laguerreconvolution" => {
            let alpha = need(id, "alpha", &args.alpha)?;
            let beta = need(id, "beta", &args.beta)?;
            for n in 0..=n_max {
                let (alpha, beta, y0) = (alpha.clone(), beta.clone(), args.y0.clone());
                jobs.push(Box::new(move || {
                    Ok(laguerre_convolution_check(
                        n,
                        &alpha,
                        &beta,
                        &y0,
                        LaguerreConvolutionVariant::General,
                    ))
                }));
            }
        }
        "eq38" | "eq39" | "eq50" => {
            let alpha = need(id, "alpha", &args.alpha)?;
            let system = match tag.as_str() {
                "eq38" => RawSystem::Eq38,
                "eq39" => RawSystem::Eq39,
                _ => RawSystem::Eq50,
            };
            let n_min = if system == RawSystem::Eq50 { 2 } else { 0 };
            need_sweep(id, "n-max", n_max, n_min)?;
            for n in n_min..=n_max {
                let (alpha, a01) = (alpha.clone(), args.a01.clone());
                jobs.push(Box::new(move || {
                    check_raw_system(system, n, &alpha, &a01).map_err(err_str)
                }));
            }
        }
        "eq32" => {
            let alpha = need(id, "alpha", &args.alpha)?;
            let mass = need(id, "M", &args.mass)?;
            for n in 0..=n_max {
                let (alpha, mass, a01) = (alpha.clone(), mass.clone(), args.a01.clone());
                jobs.push(Box::new(move || {
                    verify_de(n, &alpha, &mass, &a01).map_err(err_str)
                }));
            }
        }
        "eq51" => {
            let alpha = need(id, "alpha", &args.alpha)?;
            let a01 = args.a01.clone();
            let closed = a0_sequence(&alpha, &a01, n_max).map_err(err_str)?;
            let grown = a0_from_recurrence(&alpha, &a01, n_max).map_err(err_str)?;
            for n in 0..=n_max {
                let point = params(&[
                    ("n", n.to_string()),
                    ("alpha", format_rational(&alpha)),
                    ("a01", format_rational(&a01)),
                ]);
                let (lhs, rhs) = (closed[n].clone(), grown[n].clone());
                jobs.push(Box::new(move || {
                    Ok(CheckReport {
                        identity: "Eq51".to_string(),
                        params: point.clone(),
                        status: if lhs == rhs {
                            CheckStatus::Ok
                        } else {
                            CheckStatus::Fail
                        },
                        residual: None,
                        lhs: Some(format_rational(&lhs)),
                        rhs: Some(format_rational(&rhs)),
                        detail: None,
                    })
                }));
            }
        }
        "eq55" => {
            let alpha = need(id, "alpha", &args.alpha)?;
            need_sweep(id, "i-max", i_max, 2)?;
            for i in 2..=i_max {
                let alpha = alpha.clone();
                jobs.push(Box::new(move || {
                    identity_55_check(&alpha, i).map_err(err_str)
                }));
            }
        }
        "a0partialsum" => {
            let alpha = need(id, "alpha", &args.alpha)?;
            need_sweep(id, "n-max", n_max, 1)?;
            for n in 1..=n_max {
                for odd in [false, true] {
                    let alpha = alpha.clone();
                    jobs.push(Box::new(move || {
                        a0_partial_sum_check(&alpha, n, odd).map_err(err_str)
                    }));
                }
            }
        }
        _ => {
            return Err(format!(
                "unknown identity {:?}; see the README for the catalog",
                args.identity
            ))
        }
    }
    Ok(jobs)
}

fn err_str(e: orthoinvert::Error) -> String {
    e.to_string()
}

fn run_invert(args: InvertArgs) -> Result<ExitCode, String> {
    let kind = match args.family.to_ascii_lowercase().as_str() {
        "charlier" => InversionMatrixKind::Charlier {
            a: args
                .a
                .clone()
                .ok_or_else(|| "family charlier needs --a".to_string())?,
        },
        "laguerre" => InversionMatrixKind::Laguerre {
            alpha: args
                .alpha
                .clone()
                .ok_or_else(|| "family laguerre needs --alpha".to_string())?,
        },
        other => return Err(format!("unknown family {other:?} (charlier or laguerre)")),
    };
    let pair = build_inversion_matrices(&kind, args.n_max, &args.x0);
    let verified = pair.is_inverse_pair();
    println!(
        "{}",
        serde_json::to_string(&pair).map_err(|e| e.to_string())?
    );
    if verified {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("matrix pair failed verification: U*T is not the identity");
        Ok(ExitCode::from(1))
    }
}

#[derive(Serialize)]
struct SolutionOutput {
    #[serde(with = "orthoinvert::rational::serde_str")]
    alpha: Rational,
    #[serde(with = "orthoinvert::rational::serde_str")]
    beta: Rational,
    #[serde(rename = "A")]
    a: Vec<Poly>,
}

fn run_solve(args: SolveArgs) -> Result<ExitCode, String> {
    let raw = if args.system == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| e.to_string())?;
        buf
    } else {
        std::fs::read_to_string(&args.system)
            .map_err(|e| format!("cannot read {}: {e}", args.system))?
    };
    let system: TriangularSystem = serde_json::from_str(&raw).map_err(|e| e.to_string())?;
    let solution = solve_triangular(&system).map_err(err_str)?;
    let oracle = solve_by_elimination(&system).map_err(err_str)?;

    println!(
        "{}",
        serde_json::to_string(&SolutionOutput {
            alpha: system.alpha.clone(),
            beta: system.beta.clone(),
            a: solution.clone(),
        })
        .map_err(|e| e.to_string())?
    );

    let mut clean = solution == oracle;
    if !clean {
        eprintln!("closed-form solution disagrees with elimination");
    }
    let reports = residual_check(&system, &solution).map_err(err_str)?;
    if args.residuals {
        let stdout = std::io::stdout();
        let mut out = stdout.lock();
        for report in &reports {
            let line = serde_json::to_string(report).map_err(|e| e.to_string())?;
            writeln!(out, "{line}").map_err(|e| e.to_string())?;
        }
    }
    if reports.iter().any(|r| !r.passed()) {
        eprintln!("solution fails its own residual check");
        clean = false;
    }
    Ok(if clean {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_synth(args: SynthArgs) -> Result<ExitCode, String> {
    let coeffs = synthesize(&args.alpha, &args.a01, args.i_max).map_err(err_str)?;
    if args.latex {
        for line in coeffs.latex_lines() {
            println!("{line}");
        }
    } else {
        println!(
            "{}",
            serde_json::to_string(&coeffs.to_output()).map_err(|e| e.to_string())?
        );
    }
    if args.verify_routes {
        for route in [CoeffRoute::System54, CoeffRoute::System52] {
            let rebuilt =
                coeffs_via_inversion(&args.alpha, &args.a01, args.i_max, route).map_err(err_str)?;
            if rebuilt != coeffs.a {
                eprintln!("inversion route {route:?} disagrees with the closed forms");
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify_de(args: VerifyDeArgs) -> Result<ExitCode, String> {
    // Surface domain violations as configuration errors before checking.
    gen_ultraspherical(args.n, &args.alpha, &args.mass).map_err(err_str)?;
    let report = verify_de(args.n, &args.alpha, &args.mass, &args.a01).map_err(err_str)?;
    println!(
        "{}",
        serde_json::to_string(&report).map_err(|e| e.to_string())?
    );
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
