use clap::{Parser, Subcommand, ValueEnum};
use eulerian_forge::BigInt;

#[derive(Debug, Parser)]
#[command(name = "eulerian-forge", version, about = "Exact mth-order Eulerian numbers and friends")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "EULERIAN_FORGE_FORMAT", default_value = "csv")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Bfile,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recurrence,
    Explicit,
    Oracle,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Recurrence => "recurrence",
            Method::Explicit => "explicit",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StirlingKindArg {
    /// S(n, k), set partitions
    Second,
    /// [n; k], unsigned cycle numbers
    First,
    /// s(n, k) = (-1)^(n-k) [n; k]
    FirstSigned,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// S(n+l, l) from second-order numbers (needs --n, --l)
    S2FromEulerian2,
    /// T(2; n, k) from second-kind numbers (needs --n, --k)
    Eulerian2FromS2,
    /// [n; n-k] from second-order numbers (needs --n, --k)
    C1FromEulerian2,
    /// T(2; k, 2k-i) from cycle numbers (needs --k, --i)
    Eulerian2FromC1,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rows 1..=rows of the order-m triangle.
    Triangle {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        rows: u64,
        #[arg(long, value_enum, default_value = "recurrence")]
        method: Method,
    },
    /// A single entry T(m; n, k).
    Value {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value = "recurrence")]
        method: Method,
    },
    /// Coefficients of the row polynomial S(m; n)(t).
    Polynomial {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// First `terms` Taylor coefficients of the hat-form fraction.
    Series {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
    },
    /// A Stirling number of either kind.
    Stirling {
        #[arg(long, value_enum, default_value = "second")]
        kind: StirlingKindArg,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Conversions between second-order Eulerian and Stirling numbers.
    Convert {
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        l: Option<u64>,
        #[arg(long)]
        i: Option<u64>,
    },
    /// phi(m; n)(x) = sum_k T(m; n, k) C(x + k, mn).
    Phi {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_bigint)]
        x: BigInt,
    },
    /// Quadrature check of the integral identity for one (m, n, a, b).
    IntegralCheck {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        a: u32,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, default_value_t = 1e-9, value_parser = parse_tol)]
        tol: f64,
    },
    /// Run the identity battery; exit 1 on any failure.
    Verify {
        /// Largest order checked.
        #[arg(long = "m", visible_alias = "m-max", default_value_t = 4)]
        m_max: u32,
        /// Largest row checked.
        #[arg(long = "n", visible_alias = "n-max", default_value_t = 6)]
        n_max: u64,
        /// Suites to run: `default`, `all`, or suite names (repeatable or comma separated).
        #[arg(long, value_delimiter = ',', default_value = "default")]
        suite: Vec<String>,
        #[arg(long, default_value_t = 1e-9, value_parser = parse_tol)]
        tol: f64,
        /// Add one to T(M; N, K) before checking.
        #[arg(long, hide = true, value_name = "M,N,K")]
        inject_corruption: Option<String>,
    },
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.parse::<BigInt>().map_err(|e| format!("not an integer: {e}"))
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t.is_finite() && t > 0.0 => Ok(t),
        Ok(_) => Err("tolerance must be positive and finite".into()),
        Err(e) => Err(e.to_string()),
    }
}
