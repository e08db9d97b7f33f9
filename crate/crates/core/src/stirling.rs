//! Stirling numbers of both kinds and their conversions to and from second-order
//! Eulerian numbers, plus the Worpitzky-type function `phi(m; n)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{binom, binom_big, factorial, Poly, RationalPoly};
use crate::{EulerianTriangle, Error};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    /// `S(n, k)`: set partitions of `[n]` into `k` blocks.
    Second,
    /// `s(n, k) = (-1)^(n-k) [n; k]`.
    FirstSigned,
    /// `[n; k]`: permutations of `[n]` with `k` cycles.
    FirstUnsigned,
}

/// Triangular table `(n, k)`, `0 <= k <= n`, grown on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingTable {
    kind: StirlingKind,
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new(kind: StirlingKind, n_max: usize) -> Self {
        let mut table = StirlingTable {
            kind,
            rows: vec![vec![BigInt::one()]],
        };
        table.extend_to(n_max);
        table
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    /// Largest `n` stored.
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// Appends rows up to `n_max`; existing rows are never modified.
    pub fn extend_to(&mut self, n_max: usize) {
        while self.rows.len() <= n_max {
            let n = self.rows.len();
            let prev = &self.rows[n - 1];
            let at = |k: usize| prev.get(k).cloned().unwrap_or_default();
            let row = (0..=n)
                .map(|k| {
                    let down = if k == 0 { BigInt::zero() } else { at(k - 1) };
                    match self.kind {
                        StirlingKind::Second => at(k) * k + down,
                        StirlingKind::FirstUnsigned => at(k) * (n - 1) + down,
                        StirlingKind::FirstSigned => down - at(k) * (n - 1),
                    }
                })
                .collect();
            self.rows.push(row);
        }
    }

    /// Zero outside `0 <= k <= n` or beyond the stored rows.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_default()
    }

    /// Like [`StirlingTable::get`] but grows the table first.
    pub fn value(&mut self, n: usize, k: usize) -> BigInt {
        self.extend_to(n);
        self.get(n, k)
    }
}

pub fn stirling2(n: usize, k: usize) -> BigInt {
    StirlingTable::new(StirlingKind::Second, n).get(n, k)
}

pub fn stirling1_unsigned(n: usize, k: usize) -> BigInt {
    StirlingTable::new(StirlingKind::FirstUnsigned, n).get(n, k)
}

pub fn stirling1_signed(n: usize, k: usize) -> BigInt {
    StirlingTable::new(StirlingKind::FirstSigned, n).get(n, k)
}

fn second_order(n: usize) -> EulerianTriangle {
    EulerianTriangle::build(2, n.max(1)).expect("order 2, at least one row")
}

fn alternate(value: BigInt, exponent: i64) -> BigInt {
    if exponent.rem_euclid(2) == 0 {
        value
    } else {
        -value
    }
}

/// `S(n + l, l) = sum_{k=0}^{l-1} T(2; n, k) C(2n + l - k - 1, 2n)`.
pub fn s2_from_eulerian2(n: usize, l: usize) -> BigInt {
    s2_from_eulerian2_in(&second_order(n), n, l)
}

pub(crate) fn s2_from_eulerian2_in(t2: &EulerianTriangle, n: usize, l: usize) -> BigInt {
    let two_n = 2 * n as i64;
    let l = l as i64;
    (0..l)
        .map(|k| t2.get(n, k) * binom(two_n + l - k - 1, two_n))
        .sum()
}

/// `T(2; n, k) = sum_{l=1}^{k+1} (-1)^(k-l+1) C(2n + 1, k - l + 1) S(n + l, l)`.
pub fn eulerian2_from_s2(n: usize, k: usize) -> BigInt {
    let mut s2 = StirlingTable::new(StirlingKind::Second, n + k + 1);
    eulerian2_from_s2_with(&mut s2, n, k)
}

pub(crate) fn eulerian2_from_s2_with(s2: &mut StirlingTable, n: usize, k: usize) -> BigInt {
    let top = 2 * n as i64 + 1;
    let k = k as i64;
    (1..=k + 1)
        .map(|l| {
            let j = k - l + 1;
            alternate(binom(top, j) * s2.value(n + l as usize, l as usize), j)
        })
        .sum()
}

/// `[n; n - k] = sum_{i=k+1}^{n} T(2; k, 2k - i) C(2k + n - i, 2k)`.
///
/// `k = 0` gives `[n; n] = 1`.
pub fn c1_from_eulerian2(n: usize, k: usize) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    c1_from_eulerian2_in(&second_order(k), n, k)
}

pub(crate) fn c1_from_eulerian2_in(t2: &EulerianTriangle, n: usize, k: usize) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    let k = k as i64;
    let n = n as i64;
    (k + 1..=n)
        .map(|i| t2.get(k as usize, 2 * k - i) * binom(2 * k + n - i, 2 * k))
        .sum()
}

/// `T(2; k, 2k - i) = sum_{n=0}^{i} (-1)^(i-n) [n; n - k] C(2k + 1, i - n)`,
/// meaningful for `k >= 1`, `k + 1 <= i <= 2k`.
pub fn eulerian2_from_c1(k: usize, i: usize) -> BigInt {
    let mut c1 = StirlingTable::new(StirlingKind::FirstUnsigned, i);
    eulerian2_from_c1_with(&mut c1, k, i)
}

pub(crate) fn eulerian2_from_c1_with(c1: &mut StirlingTable, k: usize, i: usize) -> BigInt {
    let top = 2 * k as i64 + 1;
    (k..=i)
        .map(|n| alternate(c1.value(n, n - k) * binom(top, (i - n) as i64), (i - n) as i64))
        .sum()
}

/// `phi(m; n)(x) = sum_{k=0}^{n-1} T(m; n, k) C(x + k, mn)` at an integer `x`.
pub fn phi(order: u32, n: usize, x: &BigInt) -> Result<BigInt, Error> {
    let triangle = EulerianTriangle::build(order, n)?;
    Ok(phi_in(&triangle, n, x))
}

pub(crate) fn phi_in(triangle: &EulerianTriangle, n: usize, x: &BigInt) -> BigInt {
    let mn = triangle.order() * n as u32;
    (0..n as i64)
        .map(|k| triangle.get(n, k) * binom_big(&(x + k), mn))
        .sum()
}

/// `phi(m; n)` as a degree-`mn` polynomial in `x` with rational coefficients, using
/// `C(x + k, mn) = (x + k)(x + k - 1) ... (x + k - mn + 1) / (mn)!`.
pub fn phi_poly(order: u32, n: usize) -> Result<RationalPoly, Error> {
    let triangle = EulerianTriangle::build(order, n)?;
    let mn = order * n as u32;
    let numerator = (0..n as i64).fold(Poly::zero(), |acc, k| {
        let falling = (0..i64::from(mn)).fold(Poly::one(), |p, j| {
            &p * &Poly::from_i64s(&[k - j, 1])
        });
        &acc + &falling.scale(&triangle.get(n, k))
    });
    Ok(RationalPoly::from_poly(&numerator, &factorial(mn)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling2(5, 2), BigInt::from(15));
        assert_eq!(stirling1_unsigned(4, 2), BigInt::from(11));
        assert_eq!(stirling1_signed(2, 1), BigInt::from(-1));
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(stirling2(4, 0), BigInt::zero());
        assert_eq!(stirling2(3, 5), BigInt::zero());
        assert_eq!(stirling1_unsigned(6, 6), BigInt::one());
    }

    #[test]
    fn signed_matches_sign_rule() {
        let signed = StirlingTable::new(StirlingKind::FirstSigned, 10);
        let unsigned = StirlingTable::new(StirlingKind::FirstUnsigned, 10);
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(signed.get(n, k), alternate(unsigned.get(n, k), (n - k) as i64));
            }
        }
    }

    #[test]
    fn table_growth_is_append_only() {
        let mut t = StirlingTable::new(StirlingKind::Second, 4);
        let before = t.clone();
        assert_eq!(t.value(8, 3), BigInt::from(966));
        assert_eq!(t.n_max(), 8);
        for n in 0..=4 {
            for k in 0..=n {
                assert_eq!(t.get(n, k), before.get(n, k));
            }
        }
    }

    #[test]
    fn s2_from_eulerian2_examples() {
        assert_eq!(s2_from_eulerian2(2, 1), BigInt::one());
        assert_eq!(s2_from_eulerian2(3, 2), BigInt::from(15));
        for l in 1..=10 {
            assert_eq!(s2_from_eulerian2(1, l), binom(l as i64 + 1, 2));
            assert_eq!(s2_from_eulerian2(1, l), stirling2(l + 1, l));
        }
    }

    #[test]
    fn eulerian2_from_s2_examples() {
        assert_eq!(eulerian2_from_s2(2, 0), BigInt::one());
        assert_eq!(eulerian2_from_s2(3, 1), BigInt::from(8));
        assert_eq!(eulerian2_from_s2(4, 2), BigInt::from(58));
    }

    #[test]
    fn c1_from_eulerian2_examples() {
        assert_eq!(c1_from_eulerian2(2, 1), BigInt::one());
        assert_eq!(c1_from_eulerian2(3, 2), BigInt::from(2));
        assert_eq!(c1_from_eulerian2(4, 2), BigInt::from(11));
        assert_eq!(c1_from_eulerian2(5, 0), BigInt::one());
    }

    #[test]
    fn eulerian2_from_c1_examples() {
        assert_eq!(eulerian2_from_c1(2, 3), BigInt::from(2));
        assert_eq!(eulerian2_from_c1(3, 5), BigInt::from(8));
        assert_eq!(eulerian2_from_c1(4, 6), BigInt::from(58));
    }

    #[test]
    fn phi_examples() {
        for x in -3i64..=12 {
            let xb = BigInt::from(x);
            let expected = binom(x, 6) + binom(x + 1, 6) * 3;
            assert_eq!(phi(3, 2, &xb).unwrap(), expected, "x = {x}");
        }
        assert_eq!(phi(1, 3, &BigInt::from(4)).unwrap(), BigInt::from(64));
        assert_eq!(phi(2, 3, &BigInt::from(7)).unwrap(), stirling1_unsigned(7, 4));
    }

    #[test]
    fn phi_poly_first_order_is_a_power() {
        let p = phi_poly(1, 3).unwrap();
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.coeff(3), Rational::one());
        assert_eq!(p.coeff(2), Rational::zero());
        assert_eq!(p.coeff(0), Rational::zero());
    }
}
