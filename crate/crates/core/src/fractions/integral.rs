//! Numerical check of the integral identity for Eulerian fractions on `(-inf, 0]`.
//!
//! The half-line is mapped onto `[0, 1)` by `x = t / (t - 1)`, so that
//! `int_{-inf}^0 h(x) dx = int_0^1 h(t / (t - 1)) (1 - t)^-2 dt`, and the right-hand
//! integral is computed by adaptive bisection with a 10-point Gauss-Legendre rule.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::EulerianPolynomial;
use crate::algebra::{binom, Rational};
use crate::{EulerianTriangle, Error};

const GAUSS_NODES: [f64; 5] = [
    0.148_874_338_981_631_2,
    0.433_395_394_129_247_2,
    0.679_409_568_299_024_4,
    0.865_063_366_688_984_5,
    0.973_906_528_517_171_7,
];
const GAUSS_WEIGHTS: [f64; 5] = [
    0.295_524_224_714_752_9,
    0.269_266_719_309_996_4,
    0.219_086_362_515_982,
    0.149_451_349_150_580_6,
    0.066_671_344_308_688_1,
];
const MAX_DEPTH: u32 = 40;

fn abs(x: f64) -> f64 {
    if x < 0.0 {
        -x
    } else {
        x
    }
}

fn powi(base: f64, e: i64) -> f64 {
    let mut result = 1.0;
    let mut b = base;
    let mut k = e.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            result *= b;
        }
        b *= b;
        k >>= 1;
    }
    if e < 0 {
        1.0 / result
    } else {
        result
    }
}

fn gauss_panel(f: &impl Fn(f64) -> f64, lo: f64, hi: f64) -> f64 {
    let mid = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let sum: f64 = GAUSS_NODES
        .iter()
        .zip(GAUSS_WEIGHTS)
        .map(|(&x, w)| w * (f(mid - half * x) + f(mid + half * x)))
        .sum();
    half * sum
}

fn refine(
    f: &impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    whole: f64,
    eps: f64,
    depth: u32,
    panels: &mut usize,
) -> Result<f64, Error> {
    let mid = 0.5 * (lo + hi);
    let left = gauss_panel(f, lo, mid);
    let right = gauss_panel(f, mid, hi);
    let split = left + right;
    if abs(split - whole) < eps {
        *panels += 2;
        return Ok(split);
    }
    if depth >= MAX_DEPTH {
        return Err(Error::QuadratureNonConvergence { max_depth: MAX_DEPTH });
    }
    Ok(refine(f, lo, mid, left, 0.5 * eps, depth + 1, panels)?
        + refine(f, mid, hi, right, 0.5 * eps, depth + 1, panels)?)
}

/// Integrates `f` over `[lo, hi]`, bisecting each panel until the two-half estimate
/// differs from the one-panel estimate by less than `tol / 10` (scaled by
/// `max(1, |estimate|)` and split across the panels). Returns the value and the number
/// of accepted panels.
pub fn gauss_legendre_adaptive(
    f: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<(f64, usize), Error> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::ParameterRange("tolerance must be positive"));
    }
    let whole = gauss_panel(&f, lo, hi);
    let scale = if abs(whole) > 1.0 { abs(whole) } else { 1.0 };
    let mut panels = 0;
    let value = refine(&f, lo, hi, whole, 0.1 * tol * scale, 0, &mut panels)?;
    if value.is_finite() {
        Ok((value, panels))
    } else {
        Err(Error::QuadratureNonConvergence { max_depth: MAX_DEPTH })
    }
}

/// Outcome of [`integral_check`] for one parameter set `(m, n, a, b)`.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegralReport {
    pub order: u32,
    pub n: usize,
    pub a: u32,
    pub b: i64,
    pub tol: f64,
    /// `(-1)^a / (mn+a+b+1) * sum_k (-1)^k T(m;n,k) / C(mn+a+b, a+k)`
    pub closed_form: Rational,
    /// The integral of `x^a (1-x)^(-a-b-2) F(m;n)(x)` over `(-inf, 0]`, evaluated
    /// exactly term by term as Beta integrals.
    pub exact_integral: Rational,
    /// Quadrature of `x^a (1-x)^(-a-b-2) F(m;n)(x)`.
    pub quadrature: f64,
    /// Quadrature of `x^(a-1) (1-x)^(m-a-b-3) F^(m;n)(x)`.
    pub quadrature_hat: f64,
    pub panels: usize,
}

impl IntegralReport {
    fn bound(&self, reference: f64) -> f64 {
        let r = abs(reference);
        self.tol * if r > 1.0 { r } else { 1.0 }
    }

    pub fn closed_form_f64(&self) -> f64 {
        self.closed_form.to_f64().unwrap_or(f64::NAN)
    }

    pub fn exact_integral_f64(&self) -> f64 {
        self.exact_integral.to_f64().unwrap_or(f64::NAN)
    }

    /// `|quadrature - closed form|`
    pub fn residual(&self) -> f64 {
        abs(self.quadrature - self.closed_form_f64())
    }

    /// `|hat-form quadrature - closed form|`
    pub fn residual_hat(&self) -> f64 {
        abs(self.quadrature_hat - self.closed_form_f64())
    }

    /// Both quadratures match the closed-form right side within `tol * max(1, |rhs|)`.
    pub fn passed(&self) -> bool {
        let bound = self.bound(self.closed_form_f64());
        self.residual() <= bound && self.residual_hat() <= bound
    }

    /// Both quadratures match the exactly evaluated integral within tolerance.
    pub fn quadrature_consistent(&self) -> bool {
        let exact = self.exact_integral_f64();
        let bound = self.bound(exact);
        abs(self.quadrature - exact) <= bound && abs(self.quadrature_hat - exact) <= bound
    }
}

fn signed(value: BigInt, negative: bool) -> BigInt {
    if negative {
        -value
    } else {
        value
    }
}

/// `B(p, q) = (p-1)! (q-1)! / (p+q-1)!` for integers `p, q >= 1`.
fn beta(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::one(), binom(p + q - 2, p - 1) * (p + q - 1))
}

/// Compares quadrature of the integral over `(-inf, 0]` of
/// `x^a (1-x)^(-a-b-2) F(m;n)(x)` (and of the equivalent `F^` form) against the closed
/// form `(-1)^a / (mn+a+b+1) * sum_k (-1)^k T(m;n,k) C(mn+a+b, a+k)^-1`.
///
/// Requires `m, n >= 1`, `n + a + b >= 0` and `b - (n-1) + mn >= 0`; additionally every
/// `(1 - t)` exponent of the transformed integrand must be nonnegative so that it is a
/// polynomial on `[0, 1]`.
pub fn integral_check(order: u32, n: usize, a: u32, b: i64, tol: f64) -> Result<IntegralReport, Error> {
    let triangle = EulerianTriangle::build(order, n)?;
    integral_check_in(&triangle, n, a, b, tol)
}

pub(crate) fn integral_check_in(
    triangle: &EulerianTriangle,
    n: usize,
    a: u32,
    b: i64,
    tol: f64,
) -> Result<IntegralReport, Error> {
    let order = triangle.order();
    let m = i64::from(order);
    let n_i = n as i64;
    let a_i = i64::from(a);
    if n == 0 {
        return Err(Error::ZeroRows);
    }
    if n_i + a_i + b < 0 {
        return Err(Error::ParameterRange("need n + a + b >= 0"));
    }
    if b - (n_i - 1) + m * n_i < 0 {
        return Err(Error::ParameterRange("need b - (n - 1) + mn >= 0"));
    }
    // exponent of (1 - t) in the k = n - 1 term after substitution
    if b - (n_i - 1) + m * (n_i - 1) + 2 < 0 {
        return Err(Error::ParameterRange("transformed integrand is unbounded near t = 1"));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::ParameterRange("tolerance must be positive"));
    }

    let s = EulerianPolynomial::from_triangle(triangle, n).ok_or(Error::ZeroRows)?;
    let f = s.fraction();
    let f_hat = s.fraction_hat();

    let top = m * n_i + a_i + b;
    let closed_sum = (0..n_i).fold(Rational::zero(), |acc, k| {
        let term = Rational::new(signed(triangle.get(n, k), k % 2 == 1), binom(top, a_i + k));
        acc + term
    });
    let closed_form =
        closed_sum * Rational::new(signed(BigInt::one(), a % 2 == 1), BigInt::from(top + 1));

    let denom_pow = m * (n_i - 1) + 2;
    let exact_integral = (0..n_i).fold(Rational::zero(), |acc, k| {
        let coeff = Rational::from_integer(signed(triangle.get(n, k), (a_i + k) % 2 == 1));
        acc + coeff * beta(a_i + k + 1, b - k + denom_pow + 1)
    });

    let to_half_line = |t: f64| (t / (t - 1.0), 1.0 / ((1.0 - t) * (1.0 - t)));
    let lhs = |t: f64| {
        let (x, jacobian) = to_half_line(t);
        powi(x, a_i) * powi(1.0 - x, -a_i - b - 2) * f.eval_f64(x) * jacobian
    };
    let lhs_hat = |t: f64| {
        let (x, jacobian) = to_half_line(t);
        powi(x, a_i - 1) * powi(1.0 - x, m - a_i - b - 3) * f_hat.eval_f64(x) * jacobian
    };
    let (quadrature, panels) = gauss_legendre_adaptive(lhs, 0.0, 1.0, tol)?;
    let (quadrature_hat, _) = gauss_legendre_adaptive(lhs_hat, 0.0, 1.0, tol)?;

    Ok(IntegralReport {
        order,
        n,
        a,
        b,
        tol,
        closed_form,
        exact_integral,
        quadrature,
        quadrature_hat,
        panels,
    })
}
