use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order m must be at least 1")]
    ZeroOrder,
    #[error("row count must be at least 1")]
    ZeroRows,
    #[error("word does not contain each of 1..={n} exactly {m} times")]
    WrongMultiset { m: u32, n: usize },
    #[error("enumeration of m={m}, n={n} needs {count} multiset permutations, above the limit {limit}")]
    EnumerationTooLarge { m: u32, n: usize, count: u128, limit: u64 },
    #[error("need at least {needed} series coefficients, got {got}")]
    InsufficientCoefficients { needed: usize, got: usize },
    #[error("parameter out of range: {0}")]
    ParameterRange(&'static str),
    #[error("adaptive quadrature did not converge within {max_depth} bisections")]
    QuadratureNonConvergence { max_depth: u32 },
}
