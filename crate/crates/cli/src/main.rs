mod args;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};
use eulerian_forge::fractions;
use eulerian_forge::oracle;
use eulerian_forge::stirling;
use eulerian_forge::triangle::value_explicit;
use eulerian_forge::verify::{self, Corruption, Suite, VerifyConfig};
use eulerian_forge::{BigInt, Error, EulerianTriangle};

use args::{Cli, Command, Direction, Method, StirlingKindArg};
use output::{CaseEntry, IdentityEntry, IntegralPayload, OutputRecord, Payload, ReportPayload};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_COMPUTE: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((record, ok)) => {
            let text = record.render(cli.format);
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(EXIT_COMPUTE);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFY_FAILED)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_COMPUTE)
        }
    }
}

fn usage_error(msg: &str) -> ! {
    Cli::command().error(ErrorKind::MissingRequiredArgument, msg).exit()
}

fn strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn row(order: u32, n: usize, method: Method) -> Result<Vec<BigInt>, Error> {
    match method {
        Method::Recurrence => Ok(EulerianTriangle::build(order, n)?.row(n).unwrap_or_default().to_vec()),
        Method::Explicit => Ok((0..n).map(|k| value_explicit(order, n, k)).collect()),
        Method::Oracle => oracle::enumerate_triangle(order, n),
    }
}

fn run(command: Command) -> Result<(OutputRecord, bool), Error> {
    let record = match command {
        Command::Triangle { m, rows, method } => {
            let rows = rows as usize;
            let payload = match method {
                Method::Recurrence => {
                    let t = EulerianTriangle::build(m, rows)?;
                    t.rows().map(strings).collect()
                }
                _ => (1..=rows)
                    .map(|n| row(m, n, method).map(|r| strings(&r)))
                    .collect::<Result<_, _>>()?,
            };
            OutputRecord::new(
                "triangle",
                method.tag(),
                &[("m", m.to_string()), ("rows", rows.to_string())],
                Payload::Rows(payload),
            )
        }
        Command::Value { m, n, k, method } => {
            let n = n as usize;
            let value = match method {
                Method::Explicit => value_explicit(m, n, k as usize),
                _ => row(m, n, method)?.get(k as usize).cloned().unwrap_or_default(),
            };
            OutputRecord::new(
                "value",
                method.tag(),
                &[("k", k.to_string()), ("m", m.to_string()), ("n", n.to_string())],
                Payload::Scalar(value.to_string()),
            )
        }
        Command::Polynomial { m, n } => {
            let p = fractions::eulerian_poly(m, n as usize)?;
            OutputRecord::new(
                "polynomial",
                "recurrence",
                &[("m", m.to_string()), ("n", n.to_string())],
                Payload::Coefficients(strings(p.poly().coeffs())),
            )
        }
        Command::Series { m, n, terms } => {
            let s = fractions::series_coeffs(m, n as usize, terms as usize)?;
            OutputRecord::new(
                "series",
                "identity",
                &[("m", m.to_string()), ("n", n.to_string()), ("terms", terms.to_string())],
                Payload::Coefficients(strings(s.coeffs())),
            )
        }
        Command::Stirling { kind, n, k } => {
            let (name, value) = match kind {
                StirlingKindArg::Second => ("second", stirling::stirling2(n as usize, k as usize)),
                StirlingKindArg::First => ("first", stirling::stirling1_unsigned(n as usize, k as usize)),
                StirlingKindArg::FirstSigned => {
                    ("first-signed", stirling::stirling1_signed(n as usize, k as usize))
                }
            };
            OutputRecord::new(
                "stirling",
                "recurrence",
                &[("k", k.to_string()), ("kind", name.to_string()), ("n", n.to_string())],
                Payload::Scalar(value.to_string()),
            )
        }
        Command::Convert { direction, n, k, l, i } => convert(direction, n, k, l, i),
        Command::Phi { m, n, x } => {
            let v = stirling::phi(m, n as usize, &x)?;
            OutputRecord::new(
                "phi",
                "identity",
                &[("m", m.to_string()), ("n", n.to_string()), ("x", x.to_string())],
                Payload::Scalar(v.to_string()),
            )
        }
        Command::IntegralCheck { m, n, a, b, tol } => {
            let r = fractions::integral_check(m, n as usize, a, b, tol)?;
            let passed = r.passed();
            let payload = IntegralPayload {
                a: a.to_string(),
                b: b.to_string(),
                closed_form: r.closed_form.to_string(),
                exact_integral: r.exact_integral.to_string(),
                m: m.to_string(),
                n: n.to_string(),
                panels: r.panels.to_string(),
                passed,
                quadrature: format!("{:e}", r.quadrature),
                quadrature_hat: format!("{:e}", r.quadrature_hat),
                residual: format!("{:e}", r.residual()),
                residual_hat: format!("{:e}", r.residual_hat()),
                tol: format!("{tol:e}"),
            };
            let record = OutputRecord::new(
                "integral-check",
                "identity",
                &[
                    ("a", a.to_string()),
                    ("b", b.to_string()),
                    ("m", m.to_string()),
                    ("n", n.to_string()),
                    ("tol", format!("{tol:e}")),
                ],
                Payload::Integral(Box::new(payload)),
            );
            return Ok((record, passed));
        }
        Command::Verify { m_max, n_max, suite, tol, inject_corruption } => {
            return run_verify(m_max, n_max as usize, &suite, tol, inject_corruption.as_deref());
        }
    };
    Ok((record, true))
}

fn require(value: Option<u64>, flag: &str, direction: &str) -> usize {
    match value {
        Some(v) => v as usize,
        None => usage_error(&format!("--direction {direction} needs {flag}")),
    }
}

fn convert(
    direction: Direction,
    n: Option<u64>,
    k: Option<u64>,
    l: Option<u64>,
    i: Option<u64>,
) -> OutputRecord {
    let (name, params, value) = match direction {
        Direction::S2FromEulerian2 => {
            let name = "s2-from-eulerian2";
            let (n, l) = (require(n, "--n", name), require(l, "--l", name));
            (name, vec![("l", l), ("n", n)], stirling::s2_from_eulerian2(n, l))
        }
        Direction::Eulerian2FromS2 => {
            let name = "eulerian2-from-s2";
            let (n, k) = (require(n, "--n", name), require(k, "--k", name));
            (name, vec![("k", k), ("n", n)], stirling::eulerian2_from_s2(n, k))
        }
        Direction::C1FromEulerian2 => {
            let name = "c1-from-eulerian2";
            let (n, k) = (require(n, "--n", name), require(k, "--k", name));
            (name, vec![("k", k), ("n", n)], stirling::c1_from_eulerian2(n, k))
        }
        Direction::Eulerian2FromC1 => {
            let name = "eulerian2-from-c1";
            let (k, i) = (require(k, "--k", name), require(i, "--i", name));
            (name, vec![("i", i), ("k", k)], stirling::eulerian2_from_c1(k, i))
        }
    };
    let mut params: Vec<(&str, String)> = params.into_iter().map(|(p, v)| (p, v.to_string())).collect();
    params.push(("direction", name.to_string()));
    OutputRecord::new("convert", "identity", &params, Payload::Scalar(value.to_string()))
}

fn parse_suites(names: &[String]) -> Vec<Suite> {
    let mut suites = Vec::new();
    for name in names {
        match name.trim() {
            "default" => suites.extend(Suite::DEFAULT),
            "all" => suites.extend(Suite::ALL),
            other => match Suite::from_name(other) {
                Some(s) => suites.push(s),
                None => {
                    let known: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                    Cli::command()
                        .error(
                            ErrorKind::InvalidValue,
                            format!("unknown suite '{other}' (expected default, all, {})", known.join(", ")),
                        )
                        .exit()
                }
            },
        }
    }
    suites.sort();
    suites.dedup();
    suites
}

fn parse_corruption(arg: &str) -> Corruption {
    let parts: Vec<Option<u64>> = arg.split(',').map(|p| p.trim().parse().ok()).collect();
    match parts.as_slice() {
        [Some(m), Some(n), Some(k)] => Corruption { order: *m as u32, n: *n as usize, k: *k as usize },
        _ => Cli::command()
            .error(ErrorKind::InvalidValue, "--inject-corruption expects M,N,K")
            .exit(),
    }
}

fn run_verify(
    m_max: u32,
    n_max: usize,
    suite: &[String],
    tol: f64,
    corruption: Option<&str>,
) -> Result<(OutputRecord, bool), Error> {
    let config = VerifyConfig {
        m_max,
        n_max,
        suites: parse_suites(suite),
        tol,
        corruption: corruption.map(parse_corruption),
    };
    let report = verify::run(&config)?;
    let passed = report.all_passed();
    let identities = report
        .summary()
        .into_iter()
        .map(|s| IdentityEntry {
            checked: s.checked.to_string(),
            failed: s.failed.to_string(),
            identity: s.identity.to_string(),
            suite: s.suite.name().to_string(),
        })
        .collect();
    let cases = report
        .outcomes
        .iter()
        .filter(|o| !o.passed || o.suite == Suite::Integral)
        .map(|o| CaseEntry {
            case: o.case.clone(),
            detail: o.detail.clone(),
            identity: o.identity.to_string(),
            passed: o.passed,
            suite: o.suite.name().to_string(),
        })
        .collect();
    let suite_names: Vec<&str> = config.suites.iter().map(|s| s.name()).collect();
    let mut params = vec![
        ("m", m_max.to_string()),
        ("n", n_max.to_string()),
        ("suite", suite_names.join(",")),
        ("tol", format!("{tol:e}")),
    ];
    if let Some(c) = config.corruption {
        params.push(("inject-corruption", format!("{},{},{}", c.order, c.n, c.k)));
    }
    let record = OutputRecord::new(
        "verify",
        "identity",
        &params,
        Payload::Report(ReportPayload { cases, identities, passed }),
    );
    Ok((record, passed))
}
