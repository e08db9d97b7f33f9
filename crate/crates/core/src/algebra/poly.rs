use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::binom;

/// Dense polynomial in `t` with [`BigInt`] coefficients; `coeffs[i]` multiplies `t^i`.
///
/// The highest stored coefficient is never zero. The zero polynomial has no
/// coefficients at all.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^degree`
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    /// `(1 - t)^p` expanded.
    pub fn one_minus_t_pow(p: u32) -> Self {
        let p = i64::from(p);
        Self::new(
            (0..=p)
                .map(|j| {
                    let c = binom(p, j);
                    if j % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * i)
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Exact quotient by `(1 - t)`, or `None` when `(1 - t)` does not divide `self`.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        let Some(degree) = self.degree() else {
            return Some(Self::zero());
        };
        // self = (1 - t) q  =>  q_i = self_0 + ... + self_i, and the full sum must vanish.
        let mut quotient = Vec::with_capacity(degree);
        let mut running = BigInt::zero();
        for c in &self.coeffs[..degree] {
            running += c;
            quotient.push(running.clone());
        }
        running += &self.coeffs[degree];
        running.is_zero().then(|| Self::new(quotient))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{magnitude}")?;
                    }
                    f.write_str("t")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $method:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $tr::$method(&self, &rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn mul_examples() {
        let p = Poly::from_i64s(&[1, 1]);
        let q = Poly::from_i64s(&[1, -1]);
        assert_eq!(&p * &q, Poly::from_i64s(&[1, 0, -1]));
        let r = Poly::from_i64s(&[3, -2, 7]);
        assert_eq!(&r * &Poly::one(), r);
        assert_eq!(
            Poly::from_i64s(&[1, 2]) * Poly::from_i64s(&[1, 3]),
            Poly::from_i64s(&[1, 5, 6])
        );
        assert!((&r * &Poly::zero()).is_zero());
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(Poly::from_i64s(&[0, 0, 0, 1]).derivative(), Poly::from_i64s(&[0, 0, 3]));
        assert!(Poly::from_i64s(&[42]).derivative().is_zero());
        assert_eq!(Poly::from_i64s(&[1, 8, 6]).derivative(), Poly::from_i64s(&[8, 12]));
    }

    #[test]
    fn zero_is_canonical() {
        assert_eq!(Poly::from_i64s(&[0, 0, 0]), Poly::zero());
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::from_i64s(&[5, 0]).degree(), Some(0));
    }

    #[test]
    fn one_minus_t_powers() {
        assert_eq!(Poly::one_minus_t_pow(0), Poly::one());
        assert_eq!(Poly::one_minus_t_pow(3), Poly::from_i64s(&[1, -3, 3, -1]));
    }

    #[test]
    fn division_by_one_minus_t() {
        let p = Poly::from_i64s(&[2, 1, -3]);
        let q = &p * &Poly::one_minus_t_pow(1);
        assert_eq!(q.div_one_minus_t(), Some(p));
        assert_eq!(Poly::from_i64s(&[1, 1]).div_one_minus_t(), None);
        assert_eq!(Poly::zero().div_one_minus_t(), Some(Poly::zero()));
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_i64s(&[1, 8, 6]).to_string(), "1 + 8t + 6t^2");
        assert_eq!(Poly::from_i64s(&[0, -1, 0, 2]).to_string(), "-t + 2t^3");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
