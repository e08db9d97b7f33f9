//! The mth-order Eulerian triangle `T(m; n, k)`, `n >= 1`, `0 <= k <= n - 1`.
//!
//! Three independent routes to the same numbers live here: the two-term recurrence
//! ([`EulerianTriangle::build`]), the weighted sum over weak compositions
//! ([`value_explicit`]), and closed forms for the row sum, first two columns and last
//! column.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::Error;

/// Rows `1..=N` of the order-`m` Eulerian triangle; row `n` holds `n` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerianTriangle {
    order: u32,
    rows: Vec<Vec<BigInt>>,
}

impl EulerianTriangle {
    /// Builds rows `1..=n_max` from
    /// `T(n, k) = (k + 1) T(n-1, k) + (mn - k - m + 1) T(n-1, k-1)`, `T(1, 0) = 1`.
    pub fn build(order: u32, n_max: usize) -> Result<Self, Error> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if n_max == 0 {
            return Err(Error::ZeroRows);
        }
        let mut triangle = EulerianTriangle {
            order,
            rows: vec![vec![BigInt::one()]],
        };
        triangle.extend_to(n_max);
        Ok(triangle)
    }

    /// Appends rows until the triangle has `n_max` of them. Existing rows are untouched.
    pub fn extend_to(&mut self, n_max: usize) {
        let m = i64::from(self.order);
        while self.rows.len() < n_max {
            let n = self.rows.len() as i64 + 1;
            let prev = self.rows.last().expect("row 1 always present");
            let row = (0..n)
                .map(|k| {
                    let stay = prev.get(k as usize).map(|v| v * (k + 1));
                    let rise = (k >= 1).then(|| &prev[k as usize - 1] * (m * n - k - m + 1));
                    stay.unwrap_or_default() + rise.unwrap_or_default()
                })
                .collect();
            self.rows.push(row);
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row `n` (1-based), entries indexed by `k`.
    pub fn row(&self, n: usize) -> Option<&[BigInt]> {
        n.checked_sub(1)
            .and_then(|i| self.rows.get(i))
            .map(Vec::as_slice)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.rows.iter().map(Vec::as_slice)
    }

    /// `T(n, k)`; zero for `k < 0`, `k >= n`, or `n` outside the built rows.
    pub fn get(&self, n: usize, k: i64) -> BigInt {
        if k < 0 {
            return BigInt::zero();
        }
        self.row(n)
            .and_then(|row| row.get(k as usize))
            .cloned()
            .unwrap_or_default()
    }

    /// Replaces one stored entry. Used to build deliberately corrupted triangles for
    /// negative controls; returns `false` if `(n, k)` is not stored.
    pub fn set_entry(&mut self, n: usize, k: usize, value: BigInt) -> bool {
        match n.checked_sub(1).and_then(|i| self.rows.get_mut(i)).and_then(|r| r.get_mut(k)) {
            Some(slot) => {
                *slot = value;
                true
            }
            None => false,
        }
    }
}

/// Weak compositions of `total` into `parts` parts, in colexicographic order.
///
/// Starts at `(total, 0, ..., 0)` and ends at `(0, ..., 0, total)`.
#[derive(Clone, Debug)]
pub struct WeakCompositions {
    current: Vec<usize>,
    done: bool,
}

impl WeakCompositions {
    pub fn new(total: usize, parts: usize) -> Self {
        let mut current = vec![0; parts];
        let done = match current.first_mut() {
            Some(first) => {
                *first = total;
                false
            }
            None => total != 0,
        };
        WeakCompositions { current, done }
    }

    fn advance(&mut self) {
        let Some(i) = self.current.iter().position(|&t| t > 0) else {
            self.done = true;
            return;
        };
        if i + 1 == self.current.len() {
            self.done = true;
            return;
        }
        let v = self.current[i];
        self.current[i] = 0;
        self.current[0] = v - 1;
        self.current[i + 1] += 1;
    }
}

impl Iterator for WeakCompositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        self.advance();
        Some(out)
    }
}

/// `T(m; n, k)` as a weighted sum over weak compositions `t_1 + ... + t_{k+1} = n - k - 1`:
///
/// ```text
/// sum  1^t_1 2^t_2 ... (k+1)^t_{k+1}  *  prod_{j=1..k} ( m (t_1 + ... + t_j) + j (m - 1) + 1 )
/// ```
///
/// Zero when `k >= n`.
pub fn value_explicit(order: u32, n: usize, k: usize) -> BigInt {
    if k >= n {
        return BigInt::zero();
    }
    let m = i64::from(order);
    WeakCompositions::new(n - k - 1, k + 1)
        .map(|t| {
            let mut term = BigInt::one();
            for (i, &ti) in t.iter().enumerate() {
                for _ in 0..ti {
                    term *= i as u64 + 1;
                }
            }
            let mut prefix = 0i64;
            for (j, &tj) in t.iter().take(k).enumerate() {
                let j = j as i64 + 1;
                prefix += tj as i64;
                term *= m * prefix + j * (m - 1) + 1;
            }
            term
        })
        .sum()
}

/// Row sum `prod_{j=0}^{n-1} (jm + 1)`.
pub fn row_sum_closed(order: u32, n: usize) -> BigInt {
    let m = u64::from(order);
    (0..n as u64).fold(BigInt::one(), |acc, j| acc * (j * m + 1))
}

/// Last entry of row `n`: `prod_{j=1}^{n-1} (j(m - 1) + 1)`, which is `1` at `n = 1`.
pub fn last_entry_closed(order: u32, n: usize) -> BigInt {
    let m = i64::from(order);
    (1..n as i64).fold(BigInt::one(), |acc, j| acc * (j * (m - 1) + 1))
}

/// `T(m; n, 1) = m (2^n - n - 1)`.
pub fn k1_closed(order: u32, n: usize) -> BigInt {
    ((BigInt::one() << n) - (n as u64 + 1)) * order
}

/// Compares the row sum of the order `m - 1` triangle with the last entry of row `n`
/// of the order `m` triangle, both taken from the recurrence.
pub fn order_lift_check(order: u32, n: usize) -> Result<bool, Error> {
    if order < 2 {
        return Err(Error::ParameterRange("order lift needs m >= 2"));
    }
    if n == 0 {
        return Err(Error::ZeroRows);
    }
    let lower = EulerianTriangle::build(order - 1, n)?;
    let upper = EulerianTriangle::build(order, n)?;
    Ok(order_lift_holds(&lower, &upper, n))
}

pub(crate) fn order_lift_holds(lower: &EulerianTriangle, upper: &EulerianTriangle, n: usize) -> bool {
    let sum: BigInt = lower.row(n).map(|r| r.iter().sum()).unwrap_or_default();
    sum == upper.get(n, n as i64 - 1)
}
