//! Eulerian polynomials `S(m; n)(t) = sum_k T(m; n, k) t^k`, the Eulerian fraction
//! `F = S / (1 - t)^(m(n-1)+2)`, its alternative form `F^ = t S / (1 - t)^(mn+1)`, and
//! the Taylor coefficients of `F^`.

mod integral;

pub use integral::{gauss_legendre_adaptive, integral_check, IntegralReport};
pub(crate) use integral::integral_check_in;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{binom, BinomRat, Poly};
use crate::{EulerianTriangle, Error};

/// `S(m; n)(t)`; the coefficient of `t^k` is `T(m; n, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerianPolynomial {
    order: u32,
    n: usize,
    poly: Poly,
}

impl EulerianPolynomial {
    /// Reads row `n` of `triangle`. `None` if the row is not present.
    pub fn from_triangle(triangle: &EulerianTriangle, n: usize) -> Option<Self> {
        triangle.row(n).map(|row| EulerianPolynomial {
            order: triangle.order(),
            n,
            poly: Poly::new(row.to_vec()),
        })
    }

    /// The constant `1`, which is `S(m; 1)`.
    pub fn first(order: u32) -> Self {
        EulerianPolynomial {
            order,
            n: 1,
            poly: Poly::one(),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    /// `S(m; n+1) = (1 + mn t) S(m; n) + t (1 - t) S'(m; n)`.
    pub fn next(&self) -> Self {
        let mn = BigInt::from(u64::from(self.order) * self.n as u64);
        let linear = Poly::new(alloc::vec![BigInt::from(1), mn]);
        let t_one_minus_t = Poly::from_i64s(&[0, 1, -1]);
        let poly = &(&linear * &self.poly) + &(&t_one_minus_t * &self.poly.derivative());
        EulerianPolynomial {
            order: self.order,
            n: self.n + 1,
            poly,
        }
    }

    /// `F(m; n) = S / (1 - t)^(m(n-1)+2)`
    pub fn fraction(&self) -> BinomRat {
        let pow = self.order * (self.n as u32 - 1) + 2;
        BinomRat::new(self.poly.clone(), pow)
    }

    /// `F^(m; n) = t S / (1 - t)^(mn+1)`
    pub fn fraction_hat(&self) -> BinomRat {
        let pow = self.order * self.n as u32 + 1;
        BinomRat::new(self.poly.shift(1), pow)
    }
}

pub fn eulerian_poly(order: u32, n: usize) -> Result<EulerianPolynomial, Error> {
    let triangle = EulerianTriangle::build(order, n)?;
    Ok(EulerianPolynomial::from_triangle(&triangle, n).expect("row n was just built"))
}

/// One application of the polynomial recurrence; `s` must be `S(m; n)` and the
/// result is `S(m; n+1)`.
pub fn poly_recurrence_step(s: &EulerianPolynomial) -> EulerianPolynomial {
    s.next()
}

pub fn fraction(order: u32, n: usize) -> Result<BinomRat, Error> {
    Ok(eulerian_poly(order, n)?.fraction())
}

pub fn fraction_hat(order: u32, n: usize) -> Result<BinomRat, Error> {
    Ok(eulerian_poly(order, n)?.fraction_hat())
}

/// Outcome of one named identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub passed: bool,
}

/// Results of [`verify_identities`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub order: u32,
    pub n: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub const HAT_RELATION: &str = "hat-form relation";
pub const DERIVATIVE_STEP: &str = "derivative step";
pub const HAT_DERIVATIVE_STEP: &str = "hat-form derivative step";

/// Checks, as exact rational-function equalities,
///
/// - `F^(m;n) = t (1 - t)^-(m-1) F(m;n)`,
/// - `d/dt [t (1 - t)^-(m-1) F(m;n)] = F(m;n+1)`,
/// - `t d/dt F^(m;n) = (1 - t)^(m-1) F^(m;n+1)`.
pub fn verify_identities(order: u32, n: usize) -> Result<IdentityReport, Error> {
    let triangle = EulerianTriangle::build(order, n + 1)?;
    Ok(verify_identities_in(&triangle, n))
}

/// [`verify_identities`] reading both `S(m; n)` and `S(m; n+1)` from `triangle`, which
/// must contain row `n + 1`.
pub fn verify_identities_in(triangle: &EulerianTriangle, n: usize) -> IdentityReport {
    let order = triangle.order();
    let s = EulerianPolynomial::from_triangle(triangle, n).expect("row n present");
    let s_next = EulerianPolynomial::from_triangle(triangle, n + 1).expect("row n + 1 present");
    let lift = -(i64::from(order) - 1);

    let f = s.fraction();
    let f_hat = s.fraction_hat();
    let lifted = f.mul_poly(&Poly::t()).mul_one_minus_t_pow(lift);

    let checks = alloc::vec![
        IdentityCheck {
            name: HAT_RELATION,
            passed: lifted == f_hat,
        },
        IdentityCheck {
            name: DERIVATIVE_STEP,
            passed: lifted.derivative() == s_next.fraction(),
        },
        IdentityCheck {
            name: HAT_DERIVATIVE_STEP,
            passed: f_hat.derivative().mul_poly(&Poly::t())
                == s_next.fraction_hat().mul_one_minus_t_pow(i64::from(order) - 1),
        },
    ];
    IdentityReport { order, n, checks }
}

/// Taylor coefficients `f(m; n)(l)` of `F^(m; n)` for `l = 0, 1, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesCoeffs {
    order: u32,
    n: usize,
    coeffs: Vec<BigInt>,
}

impl SeriesCoeffs {
    pub fn new(order: u32, n: usize, coeffs: Vec<BigInt>) -> Self {
        SeriesCoeffs { order, n, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// `f(m; n)(l) = sum_{k=0}^{l-1} T(m; n, k) C(mn + l - k - 1, mn)` for `l < terms`.
pub fn series_coeffs(order: u32, n: usize, terms: usize) -> Result<SeriesCoeffs, Error> {
    if terms == 0 {
        return Err(Error::ParameterRange("terms must be at least 1"));
    }
    let triangle = EulerianTriangle::build(order, n)?;
    Ok(series_coeffs_in(&triangle, n, terms))
}

/// [`series_coeffs`] over row `n` of a prebuilt triangle.
pub fn series_coeffs_in(triangle: &EulerianTriangle, n: usize, terms: usize) -> SeriesCoeffs {
    let order = triangle.order();
    let mn = i64::from(order) * n as i64;
    let coeffs = (0..terms as i64)
        .map(|l| {
            (0..l.min(n as i64))
                .map(|k| triangle.get(n, k) * binom(mn + l - k - 1, mn))
                .sum()
        })
        .collect();
    SeriesCoeffs { order, n, coeffs }
}

/// The same coefficients read off the rational function `F^(m; n)` directly.
pub fn series_from_fraction(order: u32, n: usize, terms: usize) -> Result<SeriesCoeffs, Error> {
    let coeffs = fraction_hat(order, n)?.series(terms);
    Ok(SeriesCoeffs { order, n, coeffs })
}

/// Recovers row `n` from the series:
/// `T(m; n, k) = sum_{l=1}^{k+1} (-1)^(k-l+1) C(mn + 1, k - l + 1) f(m; n)(l)`.
///
/// Needs the coefficients for `l = 0..=n`.
pub fn eulerian_from_series(series: &SeriesCoeffs) -> Result<Vec<BigInt>, Error> {
    let n = series.n;
    if series.coeffs.len() < n + 1 {
        return Err(Error::InsufficientCoefficients {
            needed: n + 1,
            got: series.coeffs.len(),
        });
    }
    let top = i64::from(series.order) * n as i64 + 1;
    Ok((0..n as i64)
        .map(|k| {
            (1..=k + 1).fold(BigInt::zero(), |acc, l| {
                let j = k - l + 1;
                let term = binom(top, j) * &series.coeffs[l as usize];
                if j % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn big(v: &[u64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(eulerian_poly(2, 3).unwrap().poly(), &Poly::from_i64s(&[1, 8, 6]));
        assert_eq!(eulerian_poly(7, 1).unwrap().poly(), &Poly::one());
        assert_eq!(eulerian_poly(1, 4).unwrap().poly(), &Poly::from_i64s(&[1, 11, 11, 1]));
    }

    #[test]
    fn recurrence_step_examples() {
        let s22 = eulerian_poly(2, 2).unwrap();
        assert_eq!(poly_recurrence_step(&s22).poly(), &Poly::from_i64s(&[1, 8, 6]));
        let s11 = EulerianPolynomial::first(1);
        assert_eq!(s11.next().poly(), &Poly::from_i64s(&[1, 1]));
        for m in 1..=6i64 {
            let next = EulerianPolynomial::first(m as u32).next();
            assert_eq!(next.poly(), &Poly::from_i64s(&[1, m]));
            assert_eq!(next.n(), 2);
        }
    }

    #[test]
    fn fraction_examples() {
        assert_eq!(fraction(1, 1).unwrap(), BinomRat::new(Poly::one(), 2));
        assert_eq!(
            fraction_hat(2, 2).unwrap(),
            BinomRat::new(Poly::from_i64s(&[0, 1, 2]), 5)
        );
    }

    #[test]
    fn identity_examples() {
        assert!(verify_identities(1, 3).unwrap().all_passed());
        assert!(verify_identities(2, 2).unwrap().all_passed());
        let r = verify_identities(3, 1).unwrap();
        assert_eq!(r.checks.len(), 3);
        assert!(r.all_passed());
    }

    #[test]
    fn identities_detect_a_corrupted_row() {
        let mut t = EulerianTriangle::build(2, 4).unwrap();
        t.set_entry(4, 2, BigInt::from(59));
        let r = verify_identities_in(&t, 3);
        assert!(!r.all_passed());
        assert!(r.checks.iter().any(|c| c.name == DERIVATIVE_STEP && !c.passed));
    }

    #[test]
    fn series_examples() {
        let f33 = series_coeffs(3, 3, 4).unwrap();
        assert_eq!(f33.coeffs(), big(&[0, 1, 22, 190]).as_slice());
        assert_eq!(series_coeffs(2, 3, 3).unwrap().coeffs()[2], BigInt::from(15));
        for m in 1..=4 {
            for n in 1..=4 {
                assert!(series_coeffs(m, n, 1).unwrap().coeffs()[0].is_zero());
            }
        }
        assert!(series_coeffs(2, 2, 0).is_err());
    }

    #[test]
    fn inversion_examples() {
        let s = series_coeffs(2, 3, 4).unwrap();
        assert_eq!(eulerian_from_series(&s).unwrap()[1], BigInt::from(8));
        let s = series_coeffs(2, 4, 5).unwrap();
        assert_eq!(s.coeffs()[1..4], big(&[1, 31, 301]));
        assert_eq!(eulerian_from_series(&s).unwrap()[2], BigInt::from(58));
        let s = series_coeffs(3, 2, 3).unwrap();
        assert_eq!(eulerian_from_series(&s).unwrap()[0], BigInt::from(1));
    }

    #[test]
    fn inversion_needs_enough_terms() {
        let s = SeriesCoeffs::new(2, 3, vec![BigInt::zero(), BigInt::from(1)]);
        assert_eq!(
            eulerian_from_series(&s),
            Err(Error::InsufficientCoefficients { needed: 4, got: 2 })
        );
    }
}
