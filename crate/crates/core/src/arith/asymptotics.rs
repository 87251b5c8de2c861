//! Floating-point evaluation for large arguments.
//!
//! Hyperfactorials grow like `n^(n^2/2)`, so anything past a few hundred is
//! handled through logarithms. `ln H(n)` comes from running sums of
//! `ln k` (integers) and `ln(k + 1/2)` (half-integers) that are cached per
//! thread.

use std::cell::RefCell;

use super::formulas::{macmahon_quotient, sc_quotient, shamrock_ratio, HyperQuotient};
use super::halfint::HalfInt;
use super::value::ratio_to_f64;
use crate::error::ArithError;

#[derive(Default)]
struct LogTables {
    /// `int[n]` = ln H(n).
    int: Vec<f64>,
    /// `half[n]` = ln H(n + 1/2).
    half: Vec<f64>,
}

thread_local! {
    static LOGS: RefCell<LogTables> = RefCell::new(LogTables::default());
}

pub fn ln_hyperfactorial(n: HalfInt) -> Result<f64, ArithError> {
    let t = n.twice_value();
    if t < 0 {
        return Err(ArithError::NegativeArgument(n.to_string()));
    }
    let idx = (t / 2) as usize;
    Ok(LOGS.with(|l| {
        let mut l = l.borrow_mut();
        if t % 2 == 0 {
            if l.int.is_empty() {
                l.int.push(0.0);
            }
            // ln H(k+1) = ln H(k) + ln k!; track ln k! alongside.
            while l.int.len() <= idx {
                let k = l.int.len() - 1;
                let ln_fact: f64 = (2..=k).map(|v| (v as f64).ln()).sum();
                let prev = l.int[k];
                l.int.push(prev + ln_fact);
            }
            l.int[idx]
        } else {
            let ln_sqrt_pi = 0.5 * std::f64::consts::PI.ln();
            while l.half.len() <= idx {
                // ln Gamma(k + 1/2) = ln sqrt(pi) + sum_{i<k} ln(i + 1/2)
                let k = l.half.len();
                let ln_gamma = ln_sqrt_pi + (0..k).map(|i| (i as f64 + 0.5).ln()).sum::<f64>();
                let prev = if k == 0 { 0.0 } else { l.half[k - 1] };
                l.half.push(prev + ln_gamma);
            }
            l.half[idx]
        }
    }))
}

fn exp_quotient(q: &HyperQuotient) -> f64 {
    q.ln().expect("non-negative arguments").exp()
}

/// `sqrt(3)^(m^2) / (2 pi)^m * H(m)^4 / H(2m)`.
pub fn omega_single(m: u32) -> f64 {
    let m64 = m as f64;
    let mut q = HyperQuotient::new();
    q.num.extend([HalfInt::int(m as i64); 4]);
    q.den.push(HalfInt::int(2 * m as i64));
    let ln = m64 * m64 * 0.5 * 3f64.ln() - m64 * (2.0 * std::f64::consts::PI).ln() + q.ln().expect("valid");
    ln.exp()
}

/// `M(SC_{x,x,x}(m,0,0,m)) / M(regular hexagon of side x+m)`, from the
/// closed forms.
pub fn omega_finite(m: u32, x: u32) -> f64 {
    let mut q = sc_quotient(x, x, x, m, 0, 0, m);
    q.mul_pow(&macmahon_quotient(x + m, x + m, x + m), -1);
    exp_quotient(&q)
}

/// `H(N)H(N+a+b)H(N+a+c)H(N+b+c) / (H(N+a)H(N+b)H(N+c)H(N+a+b+c))`.
pub fn glaisher_ratio(n: u32, a: u32, b: u32, c: u32) -> f64 {
    let hi = |v: u32| HalfInt::int(v as i64);
    let q = HyperQuotient {
        num: vec![hi(n), hi(n + a + b), hi(n + a + c), hi(n + b + c)],
        den: vec![hi(n + a), hi(n + b), hi(n + c), hi(n + a + b + c)],
    };
    exp_quotient(&q)
}

/// `M(SC_{N,N,N}(a,b,c,m)) / M(SC_{N,N,N}(a+b+c,0,0,m))` from the closed form.
pub fn finite_shamrock_ratio(n: u32, a: u32, b: u32, c: u32, m: u32) -> f64 {
    let mut q = sc_quotient(n, n, n, a, b, c, m);
    q.mul_pow(&sc_quotient(n, n, n, a + b + c, 0, 0, m), -1);
    exp_quotient(&q)
}

/// The `N -> infinity` value of [`finite_shamrock_ratio`].
pub fn limit_shamrock_ratio(a: u32, b: u32, c: u32, m: u32) -> f64 {
    ratio_to_f64(&shamrock_ratio(a, b, c, m).expect("integral ratio"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::hyper::hyperfactorial;

    #[test]
    fn logs_match_exact_values() {
        for t in 0..80 {
            let n = HalfInt::half(t);
            let exact = hyperfactorial(n).unwrap().to_f64().ln();
            let got = ln_hyperfactorial(n).unwrap();
            assert!((got - exact).abs() <= 1e-10 * exact.abs().max(1.0), "H({n})");
        }
    }

    #[test]
    fn omega_small() {
        assert_eq!(omega_single(0), 1.0);
        let want = 3f64.sqrt() / (2.0 * std::f64::consts::PI);
        assert!((omega_single(1) - want).abs() < 1e-14);
        assert!((omega_finite(0, 7) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn glaisher_trivial() {
        for n in [1, 5, 50, 300] {
            assert_eq!(glaisher_ratio(n, 0, 0, 0), 1.0);
        }
    }

    #[test]
    fn finite_ratio_without_lobes_is_one() {
        for n in [1, 10, 40] {
            for m in 0..4 {
                assert!((finite_shamrock_ratio(n, 0, 0, 0, m) - 1.0).abs() < 1e-12);
            }
        }
    }
}
