//! Identity battery: every computation route checked against the others.
//!
//! Each suite compares values read from a recurrence-built triangle against a route
//! that does not read that triangle (enumeration, the composition formula, closed
//! forms, the polynomial recurrence, Stirling tables). A [`Corruption`] perturbs one
//! triangle entry so that negative controls can confirm the battery notices.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Pow, ToPrimitive};

use crate::fractions::{self, EulerianPolynomial};
use crate::stirling::{self, StirlingKind, StirlingTable};
use crate::triangle::{self, EulerianTriangle};
use crate::{oracle, Error};

/// Compact rendering for failure details.
trait Shown {
    fn shown(&self) -> String;
}

impl Shown for BigInt {
    fn shown(&self) -> String {
        format!("{self}")
    }
}

impl Shown for crate::Rational {
    fn shown(&self) -> String {
        format!("{self}")
    }
}

impl Shown for bool {
    fn shown(&self) -> String {
        format!("{self}")
    }
}

impl Shown for EulerianPolynomial {
    fn shown(&self) -> String {
        format!("{}", self.poly())
    }
}

impl Shown for Vec<BigInt> {
    fn shown(&self) -> String {
        let parts: Vec<String> = self.iter().map(|v| format!("{v}")).collect();
        format!("[{}]", parts.join(", "))
    }
}

impl<T: Shown> Shown for Option<T> {
    fn shown(&self) -> String {
        match self {
            Some(v) => v.shown(),
            None => String::from("missing"),
        }
    }
}

/// Enumeration size the battery is willing to spend per `(m, n)`.
pub const ORACLE_BUDGET: u64 = 500_000;
pub const MAX_ORDER: u32 = 10;
pub const MAX_ROWS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Golden,
    Oracle,
    Explicit,
    ClosedForms,
    Polynomial,
    Fractions,
    Series,
    Inversion,
    Worpitzky,
    Integral,
}

impl Suite {
    /// Suites run when none are named. The integral suite is opt-in: its closed form
    /// agrees with the integral only at order 2.
    pub const DEFAULT: [Suite; 9] = [
        Suite::Golden,
        Suite::Oracle,
        Suite::Explicit,
        Suite::ClosedForms,
        Suite::Polynomial,
        Suite::Fractions,
        Suite::Series,
        Suite::Inversion,
        Suite::Worpitzky,
    ];

    pub const ALL: [Suite; 10] = [
        Suite::Golden,
        Suite::Oracle,
        Suite::Explicit,
        Suite::ClosedForms,
        Suite::Polynomial,
        Suite::Fractions,
        Suite::Series,
        Suite::Inversion,
        Suite::Worpitzky,
        Suite::Integral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Golden => "golden",
            Suite::Oracle => "oracle",
            Suite::Explicit => "explicit",
            Suite::ClosedForms => "closed-forms",
            Suite::Polynomial => "polynomial",
            Suite::Fractions => "fractions",
            Suite::Series => "series",
            Suite::Inversion => "inversion",
            Suite::Worpitzky => "worpitzky",
            Suite::Integral => "integral",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

/// Add one to the stored entry `T(m; n, k)` before any check runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Corruption {
    pub order: u32,
    pub n: usize,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyConfig {
    pub m_max: u32,
    pub n_max: usize,
    pub suites: Vec<Suite>,
    pub tol: f64,
    pub corruption: Option<Corruption>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            m_max: 4,
            n_max: 6,
            suites: Suite::DEFAULT.to_vec(),
            tol: 1e-9,
            corruption: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub suite: Suite,
    pub identity: &'static str,
    pub case: String,
    pub passed: bool,
    pub detail: Option<String>,
}

/// Per-identity tally, in first-seen order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentitySummary {
    pub suite: Suite,
    pub identity: &'static str,
    pub checked: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerifyReport {
    pub outcomes: Vec<Outcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Outcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }

    pub fn summary(&self) -> Vec<IdentitySummary> {
        let mut out: Vec<IdentitySummary> = Vec::new();
        for o in &self.outcomes {
            let idx = match out.iter().position(|s| s.identity == o.identity && s.suite == o.suite) {
                Some(i) => i,
                None => {
                    out.push(IdentitySummary {
                        suite: o.suite,
                        identity: o.identity,
                        checked: 0,
                        failed: 0,
                    });
                    out.len() - 1
                }
            };
            out[idx].checked += 1;
            if !o.passed {
                out[idx].failed += 1;
            }
        }
        out
    }
}

/// Rows printed for orders 1 through 4.
pub mod golden {
    pub const ORDER_1: [&[u64]; 5] = [&[1], &[1, 1], &[1, 4, 1], &[1, 11, 11, 1], &[1, 26, 66, 26, 1]];
    pub const ORDER_2: [&[u64]; 5] = [&[1], &[1, 2], &[1, 8, 6], &[1, 22, 58, 24], &[1, 52, 328, 444, 120]];
    pub const ORDER_3: [&[u64]; 5] = [&[1], &[1, 3], &[1, 12, 15], &[1, 33, 141, 105], &[1, 78, 786, 1830, 945]];
    pub const ORDER_4: [&[u64]; 5] =
        [&[1], &[1, 4], &[1, 16, 28], &[1, 44, 260, 280], &[1, 104, 1440, 4760, 3640]];

    pub fn table(order: u32) -> Option<[&'static [u64]; 5]> {
        match order {
            1 => Some(ORDER_1),
            2 => Some(ORDER_2),
            3 => Some(ORDER_3),
            4 => Some(ORDER_4),
            _ => None,
        }
    }

    /// Rows 1 to 5 of the triangle as polynomials in the order `m`.
    pub fn symbolic_row(m: i128, n: usize) -> Option<alloc::vec::Vec<i128>> {
        let row = match n {
            1 => alloc::vec![1],
            2 => alloc::vec![1, m],
            3 => alloc::vec![1, 4 * m, m * (2 * m - 1)],
            4 => alloc::vec![1, 11 * m, m * (18 * m - 7), m * (6 * m * m - 7 * m + 2)],
            5 => alloc::vec![
                1,
                26 * m,
                2 * m * (49 * m - 16),
                2 * m * (48 * m * m - 46 * m + 11),
                m * (4 * m - 3) * (6 * m * m - 7 * m + 2),
            ],
            _ => return None,
        };
        Some(row)
    }
}

struct Battery<'a> {
    config: &'a VerifyConfig,
    triangles: Vec<EulerianTriangle>,
    outcomes: Vec<Outcome>,
}

impl<'a> Battery<'a> {
    fn tri(&self, order: u32) -> &EulerianTriangle {
        &self.triangles[order as usize - 1]
    }

    fn record(&mut self, suite: Suite, identity: &'static str, case: String, passed: bool) {
        self.outcomes.push(Outcome {
            suite,
            identity,
            case,
            passed,
            detail: None,
        });
    }

    fn record_eq<T: PartialEq + Shown>(
        &mut self,
        suite: Suite,
        identity: &'static str,
        case: String,
        got: T,
        want: T,
    ) {
        let passed = got == want;
        let detail = (!passed).then(|| format!("got {}, expected {}", got.shown(), want.shown()));
        self.outcomes.push(Outcome {
            suite,
            identity,
            case,
            passed,
            detail,
        });
    }

    fn orders(&self) -> core::ops::RangeInclusive<u32> {
        1..=self.config.m_max
    }

    fn rows(&self) -> core::ops::RangeInclusive<usize> {
        1..=self.config.n_max
    }

    fn golden(&mut self) {
        let s = Suite::Golden;
        for order in 1..=4.min(self.config.m_max) {
            let table = golden::table(order).expect("orders 1..=4 are tabulated");
            for (i, row) in table.iter().enumerate() {
                let n = i + 1;
                let want: Vec<BigInt> = row.iter().map(|&v| BigInt::from(v)).collect();
                let got = self.tri(order).row(n).map(<[BigInt]>::to_vec);
                self.record_eq(s, "printed table", format!("m={order} n={n}"), got, Some(want));
            }
        }
        for order in self.orders() {
            for n in 1..=5usize {
                let want: Vec<BigInt> = golden::symbolic_row(i128::from(order), n)
                    .expect("rows 1..=5")
                    .into_iter()
                    .map(BigInt::from)
                    .collect();
                let got = self.tri(order).row(n).map(<[BigInt]>::to_vec);
                self.record_eq(s, "symbolic row pattern", format!("m={order} n={n}"), got, Some(want));
            }
        }
    }

    fn oracle(&mut self) {
        let s = Suite::Oracle;
        for order in self.orders() {
            for n in self.rows() {
                let size = oracle::multiset_permutation_count(order, n);
                if size.to_u64().is_none_or(|c| c > ORACLE_BUDGET) {
                    continue;
                }
                let counts = oracle::enumerate_triangle(order, n).expect("within enumeration limit");
                let total: BigInt = counts.iter().sum();
                let case = format!("m={order} n={n}");
                let row = self.tri(order).row(n).map(<[BigInt]>::to_vec);
                self.record_eq(s, "descent enumeration", case.clone(), row, Some(counts));
                self.record_eq(s, "word count", case, total, triangle::row_sum_closed(order, n));
            }
        }
    }

    fn explicit(&mut self) {
        for order in self.orders() {
            for n in self.rows() {
                let got = self.tri(order).row(n).map(<[BigInt]>::to_vec);
                let want: Vec<BigInt> = (0..n).map(|k| triangle::value_explicit(order, n, k)).collect();
                self.record_eq(Suite::Explicit, "composition formula", format!("m={order} n={n}"), got, Some(want));
            }
        }
    }

    fn closed_forms(&mut self) {
        let s = Suite::ClosedForms;
        for order in self.orders() {
            for n in self.rows() {
                let case = format!("m={order} n={n}");
                let t = self.tri(order);
                let row_sum: BigInt = t.row(n).map(|r| r.iter().sum()).unwrap_or_default();
                let last = t.get(n, n as i64 - 1);
                let first = t.get(n, 0);
                let second = t.get(n, 1);
                let palindrome = t.row(n).map(|r| r.iter().eq(r.iter().rev()));
                self.record_eq(s, "row sum product", case.clone(), row_sum, triangle::row_sum_closed(order, n));
                self.record_eq(s, "last entry product", case.clone(), last, triangle::last_entry_closed(order, n));
                self.record_eq(s, "first column", case.clone(), first, BigInt::one());
                if n >= 2 {
                    self.record_eq(s, "second column", case.clone(), second, triangle::k1_closed(order, n));
                }
                if order == 1 {
                    self.record_eq(s, "first-order symmetry", case.clone(), palindrome, Some(true));
                }
                if order >= 2 {
                    let holds = triangle::order_lift_holds(self.tri(order - 1), self.tri(order), n);
                    self.record(s, "order lift", case, holds);
                }
            }
        }
    }

    fn polynomial(&mut self) {
        let s = Suite::Polynomial;
        for order in self.orders() {
            let mut p = EulerianPolynomial::first(order);
            for n in self.rows() {
                let case = format!("m={order} n={n}");
                let from_table = EulerianPolynomial::from_triangle(self.tri(order), n);
                let value_at_one = from_table.as_ref().map(|q| q.poly().eval_at_one());
                self.record_eq(s, "polynomial recurrence", case.clone(), from_table, Some(p.clone()));
                self.record_eq(s, "value at one", case, value_at_one, Some(triangle::row_sum_closed(order, n)));
                p = p.next();
            }
        }
    }

    fn fractions(&mut self) {
        for order in self.orders() {
            for n in self.rows() {
                let report = fractions::verify_identities_in(self.tri(order), n);
                for check in report.checks {
                    self.record(Suite::Fractions, check.name, format!("m={order} n={n}"), check.passed);
                }
            }
        }
    }

    fn series(&mut self) {
        let s = Suite::Series;
        let terms = 12;
        let mut s2 = StirlingTable::new(StirlingKind::Second, self.config.n_max + terms);
        for order in self.orders() {
            let mut p = EulerianPolynomial::first(order);
            for n in self.rows() {
                let case = format!("m={order} n={n}");
                let got = fractions::series_coeffs_in(self.tri(order), n, terms);
                let want = p.fraction_hat().series(terms);
                self.record_eq(s, "coefficient formula", case.clone(), got.coeffs().to_vec(), want);
                if order == 2 {
                    let stirling: Vec<BigInt> = (0..terms).map(|l| s2.value(n + l, l)).collect();
                    self.record_eq(s, "second-kind Stirling series", case.clone(), got.coeffs().to_vec(), stirling);
                }
                if order == 3 && n >= 2 {
                    let want = BigInt::from(3) * (BigInt::one() << n) - 2;
                    self.record_eq(s, "third-order second column", case, got.coeffs()[2].clone(), want);
                }
                p = p.next();
            }
        }
    }

    fn inversion(&mut self) {
        let s = Suite::Inversion;
        for order in self.orders() {
            let mut p = EulerianPolynomial::first(order);
            for n in self.rows() {
                let series = fractions::SeriesCoeffs::new(order, n, p.fraction_hat().series(n + 1));
                let recovered = fractions::eulerian_from_series(&series).expect("n + 1 terms supplied");
                let row = self.tri(order).row(n).map(<[BigInt]>::to_vec);
                self.record_eq(s, "series inversion", format!("m={order} n={n}"), row, Some(recovered));
                p = p.next();
            }
        }
        if self.config.m_max < 2 {
            return;
        }
        let n_max = self.config.n_max.max(10);
        let mut s2 = StirlingTable::new(StirlingKind::Second, 2 * n_max + 1);
        let mut c1 = StirlingTable::new(StirlingKind::FirstUnsigned, 2 * n_max);
        let mut t2 = self.tri(2).clone();
        t2.extend_to(n_max);
        for n in self.rows() {
            for l in 1..=8 {
                let got = stirling::s2_from_eulerian2_in(&t2, n, l);
                self.record_eq(s, "second-kind from second-order", format!("n={n} l={l}"), got, s2.value(n + l, l));
            }
            for k in 0..n {
                let got = stirling::eulerian2_from_s2_with(&mut s2, n, k);
                self.record_eq(s, "second-order from second-kind", format!("n={n} k={k}"), t2.get(n, k as i64), got);
            }
        }
        for n in 2..=n_max {
            for k in 1..n {
                let got = stirling::c1_from_eulerian2_in(&t2, n, k);
                self.record_eq(s, "first-kind from second-order", format!("n={n} k={k}"), got, c1.value(n, n - k));
            }
        }
        for k in 1..=self.config.n_max {
            for i in k + 1..=2 * k {
                let got = stirling::eulerian2_from_c1_with(&mut c1, k, i);
                let want = t2.get(k, (2 * k - i) as i64);
                self.record_eq(s, "second-order from first-kind", format!("k={k} i={i}"), want, got);
            }
        }
    }

    fn worpitzky(&mut self) {
        let s = Suite::Worpitzky;
        let n_cap = self.config.n_max.min(8);
        for n in 1..=n_cap {
            for x in 0..=30u32 {
                let got = stirling::phi_in(self.tri(1), n, &BigInt::from(x));
                let want = BigInt::from(x).pow(n as u32);
                self.record_eq(s, "first-order Worpitzky", format!("n={n} x={x}"), got, want);
            }
        }
        if self.config.m_max >= 2 {
            let mut c1 = StirlingTable::new(StirlingKind::FirstUnsigned, 20);
            for n in 1..=self.config.n_max.min(6) {
                for x in n..=20 {
                    let got = stirling::phi_in(self.tri(2), n, &BigInt::from(x));
                    self.record_eq(s, "second-order Worpitzky", format!("n={n} x={x}"), got, c1.value(x, x - n));
                }
            }
        }
        for order in self.orders() {
            for n in 1..=self.config.n_max.min(4) {
                let poly = stirling::phi_poly(order, n).expect("valid parameters");
                for x in [-7i64, -1, 0, 3, 11, 25] {
                    let xb = BigInt::from(x);
                    let got = crate::algebra::Rational::from_integer(stirling::phi_in(self.tri(order), n, &xb));
                    let want = poly.eval(&xb);
                    self.record_eq(s, "polynomial form", format!("m={order} n={n} x={x}"), got, want);
                }
            }
        }
    }

    fn integral(&mut self) -> Result<(), Error> {
        let s = Suite::Integral;
        let mut cases: Vec<(u32, usize, u32, i64)> =
            alloc::vec![(1, 1, 0, 0), (1, 2, 1, 0), (2, 2, 0, 0), (2, 3, 0, 1), (3, 2, 1, 1)];
        for order in self.orders() {
            for n in 1..=self.config.n_max.min(4) {
                for a in 0..=1 {
                    for b in 0..=1 {
                        if !cases.contains(&(order, n, a, b)) {
                            cases.push((order, n, a, b));
                        }
                    }
                }
            }
        }
        for (order, n, a, b) in cases {
            let mut t = match self.triangles.get(order as usize - 1) {
                Some(t) => t.clone(),
                None => EulerianTriangle::build(order, n)?,
            };
            t.extend_to(n);
            let r = fractions::integral_check_in(&t, n, a, b, self.config.tol)?;
            let case = format!("m={order} n={n} a={a} b={b}");
            let consistent = r.quadrature_consistent();
            let passed = r.passed();
            self.outcomes.push(Outcome {
                suite: s,
                identity: "quadrature vs exact integral",
                case: case.clone(),
                passed: consistent,
                detail: Some(format!(
                    "quadrature={:.15e} hat={:.15e} exact={}",
                    r.quadrature, r.quadrature_hat, r.exact_integral
                )),
            });
            self.outcomes.push(Outcome {
                suite: s,
                identity: "integral closed form",
                case,
                passed,
                detail: Some(format!(
                    "closed_form={} residual={:.3e} hat_residual={:.3e}",
                    r.closed_form,
                    r.residual(),
                    r.residual_hat()
                )),
            });
        }
        Ok(())
    }
}

/// Runs the configured suites.
pub fn run(config: &VerifyConfig) -> Result<VerifyReport, Error> {
    if config.m_max == 0 {
        return Err(Error::ZeroOrder);
    }
    if config.n_max == 0 {
        return Err(Error::ZeroRows);
    }
    if config.m_max > MAX_ORDER || config.n_max > MAX_ROWS {
        return Err(Error::ParameterRange("verification bounds above m <= 10, n <= 20"));
    }
    if let Some(c) = config.corruption {
        if c.order == 0 || c.k >= c.n || c.order > MAX_ORDER || c.n > MAX_ROWS {
            return Err(Error::ParameterRange("corruption must name a stored entry"));
        }
    }
    let top_order = config.m_max.max(config.corruption.map_or(0, |c| c.order));
    let mut triangles = (1..=top_order)
        .map(|order| EulerianTriangle::build(order, config.n_max.max(5) + 1))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(c) = config.corruption {
        let t = &mut triangles[c.order as usize - 1];
        t.extend_to(c.n);
        let bumped = t.get(c.n, c.k as i64) + 1;
        t.set_entry(c.n, c.k, bumped);
    }
    let mut battery = Battery {
        config,
        triangles,
        outcomes: Vec::new(),
    };
    let mut suites = config.suites.clone();
    suites.sort();
    suites.dedup();
    for suite in suites {
        match suite {
            Suite::Golden => battery.golden(),
            Suite::Oracle => battery.oracle(),
            Suite::Explicit => battery.explicit(),
            Suite::ClosedForms => battery.closed_forms(),
            Suite::Polynomial => battery.polynomial(),
            Suite::Fractions => battery.fractions(),
            Suite::Series => battery.series(),
            Suite::Inversion => battery.inversion(),
            Suite::Worpitzky => battery.worpitzky(),
            Suite::Integral => battery.integral()?,
        }
    }
    Ok(VerifyReport {
        outcomes: battery.outcomes,
    })
}
