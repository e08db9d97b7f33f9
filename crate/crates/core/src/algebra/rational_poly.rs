use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Poly, Rational};

/// Dense polynomial with [`Rational`] coefficients, trimmed like [`Poly`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    /// `p / denom`
    pub fn from_poly(p: &Poly, denom: &BigInt) -> Self {
        Self::new(
            p.coeffs()
                .iter()
                .map(|c| Rational::new(c.clone(), denom.clone()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let c = Rational::from_integer(c.clone());
        Self::new(self.coeffs.iter().map(|x| x * &c).collect())
    }

    pub fn eval(&self, x: &BigInt) -> Rational {
        let x = Rational::from_integer(x.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * &x + c)
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if i == 0 || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
                if i > 0 {
                    f.write_str("*")?;
                }
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn eval_and_display() {
        // x(x - 1) / 2
        let p = RationalPoly::from_poly(&Poly::from_i64s(&[0, -1, 1]), &BigInt::from(2));
        assert_eq!(p.eval(&BigInt::from(5)), Rational::from_integer(BigInt::from(10)));
        assert_eq!(p.to_string(), "-1/2*x + 1/2*x^2");
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.add(&p.scale(&BigInt::from(-1))), RationalPoly::zero());
    }
}
