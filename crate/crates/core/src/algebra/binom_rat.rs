use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{binom, Poly};

/// Rational function `num(t) / (1 - t)^pow`.
///
/// Always stored in canonical form: `pow` is as small as possible, i.e. either
/// `pow == 0` or `num(1) != 0`, and the zero function is `0 / (1 - t)^0`. Two values
/// are therefore equal exactly when their fields are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinomRat {
    num: Poly,
    pow: u32,
}

impl BinomRat {
    pub fn new(num: Poly, pow: u32) -> Self {
        let mut out = BinomRat { num, pow };
        out.canonicalize();
        out
    }

    pub fn polynomial(num: Poly) -> Self {
        BinomRat { num, pow: 0 }
    }

    pub fn zero() -> Self {
        Self::polynomial(Poly::zero())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn pow(&self) -> u32 {
        self.pow
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.pow = 0;
            return;
        }
        while self.pow > 0 {
            match self.num.div_one_minus_t() {
                Some(q) => {
                    self.num = q;
                    self.pow -= 1;
                }
                None => break,
            }
        }
    }

    /// Equality by cross-multiplication, independent of the canonical form.
    pub fn cross_eq(&self, other: &Self) -> bool {
        let lhs = &self.num * &Poly::one_minus_t_pow(other.pow);
        let rhs = &other.num * &Poly::one_minus_t_pow(self.pow);
        lhs == rhs
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, self.pow + other.pow)
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        Self::new(&self.num * p, self.pow)
    }

    /// Multiply by `(1 - t)^e`; `e` may be negative.
    pub fn mul_one_minus_t_pow(&self, e: i64) -> Self {
        let shifted = i64::from(self.pow) - e;
        if shifted >= 0 {
            Self::new(self.num.clone(), shifted as u32)
        } else {
            Self::new(&self.num * &Poly::one_minus_t_pow((-shifted) as u32), 0)
        }
    }

    /// `d/dt [N / (1-t)^p] = ((1 - t) N' + p N) / (1 - t)^(p+1)`.
    pub fn derivative(&self) -> Self {
        if self.pow == 0 {
            return Self::polynomial(self.num.derivative());
        }
        let lowered = &self.num.derivative() * &Poly::one_minus_t_pow(1);
        let raised = self.num.scale(&BigInt::from(self.pow));
        Self::new(&lowered + &raised, self.pow + 1)
    }

    /// First `terms` Taylor coefficients at `t = 0`, using
    /// `1 / (1 - t)^p = sum_j C(p - 1 + j, j) t^j`.
    pub fn series(&self, terms: usize) -> Vec<BigInt> {
        let num = self.num.coeffs();
        if self.pow == 0 {
            return (0..terms).map(|l| self.num.coeff(l)).collect();
        }
        let p = i64::from(self.pow);
        (0..terms)
            .map(|l| {
                num.iter()
                    .take(l + 1)
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| c * binom(p - 1 + (l - i) as i64, p - 1))
                    .sum()
            })
            .collect()
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        let mut denom = 1.0;
        for _ in 0..self.pow {
            denom *= 1.0 - t;
        }
        self.num.eval_f64(t) / denom
    }
}

impl fmt::Display for BinomRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pow {
            0 => write!(f, "{}", self.num),
            1 => write!(f, "({}) / (1 - t)", self.num),
            p => write!(f, "({}) / (1 - t)^{p}", self.num),
        }
    }
}
