//! Sweeps that check closed forms, recurrences and factorizations against
//! the tiling counter, or purely in exact arithmetic.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::json;

use crate::arith::formulas::{formula_for, macmahon_p, r_quotient, HyperQuotient};
use crate::arith::{
    finite_shamrock_ratio, gamma, hyperfactorial, limit_shamrock_ratio, parity, HalfInt, Parity, SqrtPiScaled,
};
use crate::error::OracleError;
use crate::lattice::{build_hexagon, build_magnet_bar, build_s_cored_hexagon, Family, RegionSpec};
use crate::oracle::{count_tilings_with, OracleConfig};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    Skip(String),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => f.write_str("PASS"),
            Status::Fail => f.write_str("FAIL"),
            Status::Skip(why) => write!(f, "SKIP({why})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: String,
    pub params: Vec<i64>,
    pub expected: String,
    pub actual: String,
    pub status: Status,
}

impl VerificationReport {
    fn compare(check: &str, params: Vec<i64>, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        VerificationReport { check: check.to_string(), params, expected, actual, status }
    }

    fn skip(check: &str, params: Vec<i64>, why: impl ToString) -> Self {
        VerificationReport {
            check: check.to_string(),
            params,
            expected: String::new(),
            actual: String::new(),
            status: Status::Skip(why.to_string()),
        }
    }

    fn fail(check: &str, params: Vec<i64>, why: impl ToString) -> Self {
        VerificationReport {
            check: check.to_string(),
            params,
            expected: String::new(),
            actual: why.to_string(),
            status: Status::Fail,
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn to_json_line(&self) -> String {
        json!({
            "check": self.check,
            "params": self.params,
            "expected": self.expected,
            "actual": self.actual,
            "status": self.status.to_string(),
        })
        .to_string()
    }
}

/// Settings shared by all sweeps.
#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    pub oracle: OracleConfig,
    /// Adds one to every closed-form value before comparing. Only useful to
    /// show that the checks can fail.
    pub corrupt_formulas: bool,
}

impl VerifyOptions {
    pub fn with_max_cells(max_cells: usize) -> Self {
        VerifyOptions { oracle: OracleConfig::with_max_cells(max_cells), corrupt_formulas: false }
    }
}

/// Every tuple in the product of the given ranges, in lexicographic order.
pub fn grid(ranges: &[RangeInclusive<u32>]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for r in ranges {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                r.clone().map(move |v| {
                    let mut t = prefix.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

fn to_i64(params: &[u32]) -> Vec<i64> {
    params.iter().map(|&p| p as i64).collect()
}

fn sorted(mut reports: Vec<VerificationReport>) -> Vec<VerificationReport> {
    reports.sort_by(|a, b| (&a.check, &a.params).cmp(&(&b.check, &b.params)));
    reports
}

/// Why an oracle-backed check could not run.
enum Blocked {
    Skip(String),
    Fail(String),
}

impl From<OracleError> for Blocked {
    fn from(e: OracleError) -> Self {
        Blocked::Skip(e.to_string())
    }
}

fn finish(check: &str, params: Vec<i64>, r: Result<(BigUint, BigUint), Blocked>) -> VerificationReport {
    match r {
        Ok((expected, actual)) => VerificationReport::compare(check, params, expected, actual),
        Err(Blocked::Skip(why)) => VerificationReport::skip(check, params, why),
        Err(Blocked::Fail(why)) => VerificationReport::fail(check, params, why),
    }
}

fn count_spec(spec: &RegionSpec, opts: &VerifyOptions) -> Result<BigUint, Blocked> {
    let region = spec.build().map_err(|e| Blocked::Fail(e.to_string()))?;
    Ok(count_tilings_with(&region, &opts.oracle)?.into_inner())
}

fn sc(opts: &VerifyOptions, p: [u32; 7]) -> Result<BigUint, Blocked> {
    let region = build_s_cored_hexagon(p[0], p[1], p[2], p[3], p[4], p[5], p[6])
        .map_err(|e| Blocked::Fail(e.to_string()))?;
    Ok(count_tilings_with(&region, &opts.oracle)?.into_inner())
}

fn magnet(opts: &VerifyOptions, p: [u32; 6]) -> Result<BigUint, Blocked> {
    let region = build_magnet_bar(p[0], p[1], p[2], p[3], p[4], p[5]);
    Ok(count_tilings_with(&region, &opts.oracle)?.into_inner())
}

fn hexagon(opts: &VerifyOptions, a: u32, b: u32, c: u32) -> Result<BigUint, Blocked> {
    let region = build_hexagon([a, b, c, a, b, c]).expect("balanced hexagon closes");
    Ok(count_tilings_with(&region, &opts.oracle)?.into_inner())
}

/// Compares the closed form with the counter on every tuple. Tuples whose
/// region is over the cell budget are skipped.
pub fn verify_formula_vs_oracle(
    family: Family,
    tuples: &[Vec<u32>],
    opts: &VerifyOptions,
) -> Vec<VerificationReport> {
    let check = format!("formula_vs_oracle/{}", family.name());
    let reports = tuples
        .par_iter()
        .map(|params| {
            let result = (|| {
                let spec = RegionSpec::new(family, params.clone()).map_err(|e| Blocked::Fail(e.to_string()))?;
                let mut expected = formula_for(&spec).map_err(|e| Blocked::Fail(e.to_string()))?;
                if opts.corrupt_formulas {
                    expected += 1u32;
                }
                Ok((expected, count_spec(&spec, opts)?))
            })();
            finish(&check, to_i64(params), result)
        })
        .collect();
    sorted(reports)
}

/// Default tuples for each family with a closed form.
pub fn default_tuples(family: Family) -> Vec<Vec<u32>> {
    match family {
        Family::Hexagon => grid(&[0..=4, 0..=4, 0..=4])
            .into_iter()
            .map(|t| vec![t[0], t[1], t[2], t[0], t[1], t[2]])
            .collect(),
        Family::MagnetBar => {
            let mut t = grid(&[0..=2, 0..=2, 0..=2, 0..=2, 0..=2, 0..=2]);
            t.push(vec![3, 1, 4, 1, 3, 2]);
            t
        }
        Family::SCoredHexagon => grid(&[0..=4, 0..=4, 0..=4, 0..=2, 0..=2, 0..=2, 0..=2]),
        Family::CoredHexagon => grid(&[0..=4, 0..=4, 0..=4, 0..=2]),
        Family::ShamrockHole => Vec::new(),
    }
}

/// `M(B_{x,y}) M(B_{x-1,y}(a,b-1,c,m)) = M(B_{x,y}(a,b-1,c,m)) M(B_{x-1,y})
///  + M(B_{x-1,y+1}(a,b-1,c,m)) M(B_{x,y-1})`, where bare `B` carries `(a,b,c,m)`.
pub fn check_kuo_magnet(x: u32, y: u32, a: u32, b: u32, c: u32, m: u32, opts: &VerifyOptions) -> VerificationReport {
    let check = "kuo_magnet";
    let params = to_i64(&[x, y, a, b, c, m]);
    if x == 0 || y == 0 || b == 0 {
        return VerificationReport::skip(check, params, "needs x, y, b >= 1");
    }
    let r = (|| {
        let lhs = magnet(opts, [x, y, a, b, c, m])? * magnet(opts, [x - 1, y, a, b - 1, c, m])?;
        let rhs = magnet(opts, [x, y, a, b - 1, c, m])? * magnet(opts, [x - 1, y, a, b, c, m])?
            + magnet(opts, [x - 1, y + 1, a, b - 1, c, m])? * magnet(opts, [x, y - 1, a, b, c, m])?;
        Ok((lhs, rhs))
    })();
    finish(check, params, r)
}

/// The six-term recurrence for `x` of opposite parity to `y` and `z`.
pub fn check_kuo_sc_mixed(p: [u32; 7], opts: &VerifyOptions) -> VerificationReport {
    let check = "kuo_sc_mixed";
    let [x, y, z, a, b, c, m] = p;
    if x == 0 || y == 0 || z == 0 {
        return VerificationReport::skip(check, to_i64(&p), "needs x, y, z >= 1");
    }
    if parity(x, y, z) != Parity::XOdd {
        return VerificationReport::fail(check, to_i64(&p), "x must have the opposite parity to y and z");
    }
    let r = (|| {
        let lhs = sc(opts, p)? * sc(opts, [x, y - 1, z - 1, a, b, c, m])?;
        let rhs = sc(opts, [y, x, z - 1, b, a, c, m])? * sc(opts, [z, y - 1, x, c, b, a, m])?
            + sc(opts, [x - 1, y, z, a, b, c, m])? * sc(opts, [x + 1, y - 1, z - 1, a, b, c, m])?;
        Ok((lhs, rhs))
    })();
    finish(check, to_i64(&p), r)
}

/// The six-term recurrence for `x`, `y`, `z` of the same parity.
pub fn check_kuo_sc_same(p: [u32; 7], opts: &VerifyOptions) -> VerificationReport {
    let check = "kuo_sc_same";
    let [x, y, z, a, b, c, m] = p;
    if x == 0 || y == 0 || z == 0 {
        return VerificationReport::skip(check, to_i64(&p), "needs x, y, z >= 1");
    }
    if parity(x, y, z) != Parity::Same {
        return VerificationReport::fail(check, to_i64(&p), "x, y, z must share parity");
    }
    let r = (|| {
        let lhs = sc(opts, p)? * sc(opts, [x, z - 1, y - 1, a, c, b, m])?;
        let rhs = sc(opts, [z - 1, x, y, c, a, b, m])? * sc(opts, [y - 1, z, x, b, c, a, m])?
            + sc(opts, [x - 1, z, y, a, c, b, m])? * sc(opts, [x + 1, y - 1, z - 1, a, b, c, m])?;
        Ok((lhs, rhs))
    })();
    finish(check, to_i64(&p), r)
}

/// Runs whichever S-cored recurrence applies; tuples where `y` and `z`
/// differ in parity have none.
pub fn check_kuo_sc(p: [u32; 7], opts: &VerifyOptions) -> Option<VerificationReport> {
    match parity(p[0], p[1], p[2]) {
        Parity::Same => Some(check_kuo_sc_same(p, opts)),
        Parity::XOdd => Some(check_kuo_sc_mixed(p, opts)),
        _ => None,
    }
}

fn r_value(p: [u32; 7]) -> HyperQuotient {
    let [x, y, z, a, b, c, m] = p;
    r_quotient(x, y, z, a, b, c, m).expect("admissible parity")
}

/// The recurrence with every count replaced by the closed form `R`, checked
/// in exact `rational * sqrt(pi)^k` arithmetic.
pub fn check_r_identities(p: [u32; 7], corrupt: bool) -> VerificationReport {
    let [x, y, z, a, b, c, m] = p;
    let params = to_i64(&p);
    let (check, terms) = match parity(x, y, z) {
        Parity::XOdd => (
            "r_identity_mixed",
            [
                [x, y, z, a, b, c, m],
                [x, y - 1, z - 1, a, b, c, m],
                [y, x, z - 1, b, a, c, m],
                [z, y - 1, x, c, b, a, m],
                [x - 1, y, z, a, b, c, m],
                [x + 1, y - 1, z - 1, a, b, c, m],
            ],
        ),
        Parity::Same => (
            "r_identity_same",
            [
                [x, y, z, a, b, c, m],
                [x, z - 1, y - 1, a, c, b, m],
                [z - 1, x, y, c, a, b, m],
                [y - 1, z, x, b, c, a, m],
                [x - 1, z, y, a, c, b, m],
                [x + 1, y - 1, z - 1, a, b, c, m],
            ],
        ),
        _ => return VerificationReport::fail("r_identity", params, "y and z must share parity"),
    };
    if x == 0 || y == 0 || z == 0 {
        return VerificationReport::skip(check, params, "needs x, y, z >= 1");
    }
    let product = |i: usize, j: usize| -> SqrtPiScaled {
        let mut q = r_value(terms[i]);
        q.mul_pow(&r_value(terms[j]), 1);
        q.evaluate().expect("non-negative arguments")
    };
    let mut lhs = product(0, 1);
    if corrupt {
        lhs = &lhs * &SqrtPiScaled::integer(2);
    }
    let rhs = product(2, 3).checked_add(&product(4, 5));
    match rhs {
        Some(rhs) => VerificationReport::compare(check, params, lhs, rhs),
        None => VerificationReport::fail(check, params, "terms carry different powers of sqrt(pi)"),
    }
}

/// All admissible tuples with `1 <= x,y,z <= max_xyz` and lobes up to `max_lobe`.
pub fn r_identity_tuples(max_xyz: u32, max_lobe: u32) -> Vec<[u32; 7]> {
    let l = 0..=max_lobe;
    grid(&[1..=max_xyz, 1..=max_xyz, 1..=max_xyz, l.clone(), l.clone(), l.clone(), l])
        .into_iter()
        .map(|t| [t[0], t[1], t[2], t[3], t[4], t[5], t[6]])
        .filter(|t| matches!(parity(t[0], t[1], t[2]), Parity::Same | Parity::XOdd))
        .collect()
}

pub fn sweep_r_identities(max_xyz: u32, max_lobe: u32, corrupt: bool) -> Vec<VerificationReport> {
    let reports = r_identity_tuples(max_xyz, max_lobe).par_iter().map(|&t| check_r_identities(t, corrupt)).collect();
    sorted(reports)
}

/// `H(ceil(x+y)) H(floor(x+y)) / (H(ceil(x-1/2)+y) H(floor(x-1/2)+y)) = Gamma(ceil(x+y))`.
///
/// `params` in the report are `2x` and `2y`.
pub fn check_cancellation_rule(x: HalfInt, y: HalfInt) -> VerificationReport {
    let check = "cancellation_rule";
    let params = vec![x.twice_value(), y.twice_value()];
    let s = x + y;
    let shifted = x - HalfInt::HALF;
    let args = [s.ceil(), s.floor(), shifted.ceil() + y, shifted.floor() + y];
    if args.iter().any(|a| a.twice_value() < 0) || s.ceil().twice_value() <= 0 {
        return VerificationReport::skip(check, params, "hyperfactorial or gamma of a non-positive argument");
    }
    let h = |n: HalfInt| hyperfactorial(n).expect("checked non-negative");
    let lhs = &(&h(args[0]) * &h(args[1])) / &(&h(args[2]) * &h(args[3]));
    let rhs = gamma(s.ceil()).expect("checked positive");
    VerificationReport::compare(check, params, rhs, lhs)
}

/// `x` over `0, 1/2, ..., max` and `y` over the integers `0..=max`.
pub fn sweep_cancellation_rule(max: i64) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for tx in 0..=2 * max {
        for y in 0..=max {
            out.push(check_cancellation_rule(HalfInt::from_twice(tx), HalfInt::int(y)));
        }
    }
    out
}

/// Factorization checks on tuples up to `max_xyz` for the hexagon sides
/// and `max_lobe` for `a, b, c, m`. Both sides use the counter.
pub fn check_base_cases(max_xyz: u32, max_lobe: u32, opts: &VerifyOptions) -> Vec<VerificationReport> {
    let lobes = grid(&[0..=max_lobe, 0..=max_lobe, 0..=max_lobe, 0..=max_lobe]);
    let mut jobs: Vec<(&'static str, Vec<u32>)> = Vec::new();
    for l in &lobes {
        // SC_{0,0,0}: three disjoint hexagons.
        jobs.push(("base_three_hexagons", l.clone()));
        for y in 0..=max_xyz {
            jobs.push(("base_magnet_two_hexagons", [&[y][..], l].concat()));
        }
        for x in 0..=max_xyz {
            for y in 0..=max_xyz {
                let xy = [&[x, y][..], l].concat();
                if x % 2 == 0 && y % 2 == 0 {
                    jobs.push(("base_even_even_zero", xy.clone()));
                }
                if x % 2 == 1 && y % 2 == 0 {
                    jobs.push(("base_odd_even_zero", xy.clone()));
                }
                if x % 2 == 1 && y % 2 == 1 {
                    // Here the pair is (y, z) with x = 0.
                    jobs.push(("base_zero_odd_odd", xy));
                }
            }
        }
    }
    let reports = jobs
        .par_iter()
        .map(|(check, p)| {
            let r = (|| match *check {
                "base_three_hexagons" => {
                    let [a, b, c, m] = [p[0], p[1], p[2], p[3]];
                    let lhs = sc(opts, [0, 0, 0, a, b, c, m])?;
                    let rhs = hexagon(opts, a, b, m)? * hexagon(opts, a, c, m)? * hexagon(opts, b, c, m)?;
                    Ok((lhs, rhs))
                }
                "base_magnet_two_hexagons" => {
                    let [y, a, b, c, m] = [p[0], p[1], p[2], p[3], p[4]];
                    let lhs = magnet(opts, [0, y, a, b, c, m])?;
                    Ok((lhs, hexagon(opts, a, c, m)? * hexagon(opts, b, y + c, m)?))
                }
                "base_even_even_zero" => {
                    let [x, y, a, b, c, m] = [p[0], p[1], p[2], p[3], p[4], p[5]];
                    let lhs = sc(opts, [x, y, 0, a, b, c, m])?;
                    let rhs = hexagon(opts, m, x / 2 + b, y / 2 + a)? * magnet(opts, [x / 2, y / 2, a, b, c, m])?;
                    Ok((lhs, rhs))
                }
                "base_odd_even_zero" => {
                    let [x, y, a, b, c, m] = [p[0], p[1], p[2], p[3], p[4], p[5]];
                    let lhs = sc(opts, [x, y, 0, a, b, c, m])?;
                    let rhs = hexagon(opts, m, (x - 1) / 2 + b, y / 2 + a)?
                        * magnet(opts, [x.div_ceil(2), y / 2, a, b, c, m])?;
                    Ok((lhs, rhs))
                }
                _ => {
                    let [y, z, a, b, c, m] = [p[0], p[1], p[2], p[3], p[4], p[5]];
                    let lhs = sc(opts, [0, y, z, a, b, c, m])?;
                    let rhs = hexagon(opts, m, y.div_ceil(2) + c, (z - 1) / 2 + b)?
                        * magnet(opts, [(y - 1) / 2, z.div_ceil(2), b, c, a, m])?;
                    Ok((lhs, rhs))
                }
            })();
            finish(check, to_i64(p), r)
        })
        .collect();
    sorted(reports)
}

/// One point of [`ratio_convergence`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergencePoint {
    pub n: u32,
    pub value: f64,
    pub limit: f64,
    pub rel_error: f64,
}

/// `M(SC_{N,N,N}(a,b,c,m)) / M(SC_{N,N,N}(a+b+c,0,0,m))` from the closed
/// form, against its limit.
pub fn ratio_convergence(a: u32, b: u32, c: u32, m: u32, ns: &[u32]) -> Vec<ConvergencePoint> {
    let limit = limit_shamrock_ratio(a, b, c, m);
    ns.iter()
        .map(|&n| {
            let value = finite_shamrock_ratio(n, a, b, c, m);
            ConvergencePoint { n, value, limit, rel_error: (value - limit).abs() / limit }
        })
        .collect()
}

/// Every closed form over the default tuples must be an integer, i.e. have
/// no `sqrt(pi)` and no denominator. Also checks that the shamrock ratio is
/// the product of its two MacMahon factors.
pub fn check_integrality(max_lobe: u32) -> Vec<VerificationReport> {
    let mut specs: Vec<RegionSpec> = Vec::new();
    for family in [Family::Hexagon, Family::MagnetBar, Family::SCoredHexagon, Family::CoredHexagon] {
        for t in default_tuples(family) {
            specs.push(RegionSpec::new(family, t).expect("arity"));
        }
    }
    let mut reports: Vec<VerificationReport> = specs
        .par_iter()
        .map(|spec| {
            let check = format!("integrality/{}", spec.family.name());
            let params = to_i64(&spec.params);
            match formula_for(spec) {
                Ok(_) => VerificationReport::compare(&check, params, "integer", "integer"),
                Err(e) => VerificationReport::fail(&check, params, e),
            }
        })
        .collect();
    let l = 0..=max_lobe;
    for t in grid(&[l.clone(), l.clone(), l.clone(), l]) {
        let [a, b, c, m] = [t[0], t[1], t[2], t[3]];
        let params = to_i64(&t);
        let report = match crate::arith::shamrock_ratio(a, b, c, m) {
            Ok(ratio) => {
                let product = macmahon_p(a, b, m) * macmahon_p(a + b, c, m);
                VerificationReport::compare("shamrock_ratio_factors", params, product, ratio)
            }
            Err(e) => VerificationReport::fail("shamrock_ratio_factors", params, e),
        };
        reports.push(report);
    }
    sorted(reports)
}

/// Named groups of checks for the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Formulas,
    Kuo,
    Identities,
    Bases,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "formulas" => Ok(Suite::Formulas),
            "kuo" => Ok(Suite::Kuo),
            "identities" => Ok(Suite::Identities),
            "bases" => Ok(Suite::Bases),
            "all" => Ok(Suite::All),
            _ => Err(format!("unknown suite {s:?}")),
        }
    }
}

/// Tuples for the S-cored recurrences: `1 <= x,y,z <= 3`, lobes up to 1,
/// plus two larger instances with no lobes.
pub fn default_kuo_sc_tuples() -> Vec<[u32; 7]> {
    let mut t = r_identity_tuples(3, 1);
    t.push([4, 7, 3, 0, 0, 0, 1]);
    t.push([5, 7, 3, 0, 0, 0, 1]);
    t
}

pub fn default_kuo_magnet_tuples() -> Vec<[u32; 6]> {
    let mut t: Vec<[u32; 6]> = grid(&[1..=3, 1..=3, 0..=1, 1..=2, 0..=1, 0..=1])
        .into_iter()
        .map(|t| [t[0], t[1], t[2], t[3], t[4], t[5]])
        .collect();
    t.push([3, 1, 4, 1, 3, 2]);
    t
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    let corrupt = opts.corrupt_formulas;
    if matches!(suite, Suite::Formulas | Suite::All) {
        for family in [Family::Hexagon, Family::MagnetBar, Family::SCoredHexagon] {
            out.extend(verify_formula_vs_oracle(family, &default_tuples(family), opts));
        }
    }
    if matches!(suite, Suite::Kuo | Suite::All) {
        let magnet: Vec<_> =
            default_kuo_magnet_tuples().par_iter().map(|t| check_kuo_magnet(t[0], t[1], t[2], t[3], t[4], t[5], opts)).collect();
        out.extend(sorted(magnet));
        let sc: Vec<_> = default_kuo_sc_tuples().par_iter().filter_map(|&t| check_kuo_sc(t, opts)).collect();
        out.extend(sorted(sc));
    }
    if matches!(suite, Suite::Identities | Suite::All) {
        out.extend(sweep_r_identities(6, 3, corrupt));
        out.extend(sweep_cancellation_rule(10));
        if !corrupt {
            out.extend(check_integrality(5));
        }
    }
    if matches!(suite, Suite::Bases | Suite::All) {
        out.extend(check_base_cases(2, 2, opts));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_order() {
        assert_eq!(grid(&[0..=1, 2..=3]), vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]);
        assert_eq!(grid(&[]), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn json_line_schema() {
        let r = VerificationReport::skip("x", vec![1, 2], "too big");
        let v: serde_json::Value = serde_json::from_str(&r.to_json_line()).unwrap();
        assert_eq!(v["status"], "SKIP(too big)");
        assert_eq!(v["params"], json!([1, 2]));
    }

    #[test]
    fn small_instances_pass() {
        let opts = VerifyOptions::default();
        assert!(check_kuo_magnet(1, 1, 0, 1, 0, 0, &opts).is_pass());
        assert!(check_kuo_magnet(1, 1, 1, 1, 1, 1, &opts).is_pass());
        assert!(check_kuo_sc_same([1, 1, 1, 1, 1, 1, 1], &opts).is_pass());
        assert!(check_r_identities([2, 1, 3, 1, 0, 2, 1], false).is_pass());
        assert!(check_r_identities([3, 3, 1, 0, 2, 1, 3], false).is_pass());
    }

    #[test]
    fn corruption_is_detected() {
        assert!(check_r_identities([2, 1, 3, 1, 0, 2, 1], true).is_fail());
        let opts = VerifyOptions { corrupt_formulas: true, ..VerifyOptions::default() };
        let r = verify_formula_vs_oracle(Family::Hexagon, &[vec![1, 1, 1, 1, 1, 1]], &opts);
        assert!(r[0].is_fail());
        assert_eq!((r[0].expected.as_str(), r[0].actual.as_str()), ("3", "2"));
    }

    #[test]
    fn parity_violations_are_rejected() {
        let opts = VerifyOptions::default();
        assert!(check_kuo_sc_mixed([2, 2, 2, 0, 0, 0, 1], &opts).is_fail());
        assert!(check_kuo_sc_same([1, 2, 2, 0, 0, 0, 1], &opts).is_fail());
        assert!(check_kuo_sc([2, 1, 2, 0, 0, 0, 0], &opts).is_none());
    }

    #[test]
    fn budget_becomes_skip() {
        let opts = VerifyOptions::with_max_cells(10);
        let r = verify_formula_vs_oracle(Family::Hexagon, &[vec![3, 3, 3, 3, 3, 3]], &opts);
        assert!(matches!(r[0].status, Status::Skip(_)));
    }

    #[test]
    fn cancellation_small() {
        assert!(check_cancellation_rule(HalfInt::half(3), HalfInt::int(2)).is_pass());
        assert!(check_cancellation_rule(HalfInt::int(4), HalfInt::int(0)).is_pass());
        assert!(matches!(check_cancellation_rule(HalfInt::ZERO, HalfInt::ZERO).status, Status::Skip(_)));
    }

    #[test]
    fn convergence_without_lobes() {
        for p in ratio_convergence(0, 0, 0, 2, &[1, 5, 20]) {
            assert!(p.rel_error < 1e-12);
        }
    }
}
