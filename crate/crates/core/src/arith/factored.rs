//! Products of hyperfactorials kept as prime exponent vectors.
//!
//! Every hyperfactorial, integer or half-integer, is `sqrt(pi)^k` times a
//! product of factorials and powers of two, so a quotient of hyperfactorials
//! is determined by one exponent per prime plus the `sqrt(pi)` exponent.
//! Multiplying is vector addition, which keeps the large identity sweeps cheap.

use std::cell::RefCell;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use super::halfint::HalfInt;
use super::value::SqrtPiScaled;
use crate::error::ArithError;

/// `sqrt(pi)^sqrt_pi * prod p_i^exps[i]` over the primes `2, 3, 5, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factored {
    exps: Vec<i64>,
    sqrt_pi: i64,
}

impl Factored {
    pub fn one() -> Self {
        Factored::default()
    }

    pub fn sqrt_pi_exponent(&self) -> i64 {
        self.sqrt_pi
    }

    /// `self *= other^power`.
    pub fn mul_pow(&mut self, other: &Factored, power: i64) {
        if self.exps.len() < other.exps.len() {
            self.exps.resize(other.exps.len(), 0);
        }
        for (e, o) in self.exps.iter_mut().zip(&other.exps) {
            *e += power * o;
        }
        self.sqrt_pi += power * other.sqrt_pi;
    }

    /// True when the value is a positive integer (no denominator, no `sqrt(pi)`).
    pub fn is_integer(&self) -> bool {
        self.sqrt_pi == 0 && self.exps.iter().all(|&e| e >= 0)
    }

    pub fn to_value(&self) -> SqrtPiScaled {
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        with_primes(self.exps.len(), |primes| {
            for (&e, &p) in self.exps.iter().zip(primes) {
                if e > 0 {
                    num *= BigUint::from(p).pow(e as u32);
                } else if e < 0 {
                    den *= BigUint::from(p).pow((-e) as u32);
                }
            }
        });
        SqrtPiScaled::new(BigRational::new(BigInt::from(num), BigInt::from(den)), self.sqrt_pi)
    }

    /// Natural log of the rational part plus `sqrt_pi * ln(sqrt(pi))`.
    pub fn ln(&self) -> f64 {
        let mut acc = self.sqrt_pi as f64 * 0.5 * std::f64::consts::PI.ln();
        with_primes(self.exps.len(), |primes| {
            for (&e, &p) in self.exps.iter().zip(primes) {
                acc += e as f64 * (p as f64).ln();
            }
        });
        acc
    }
}

#[derive(Default)]
struct Tables {
    primes: Vec<u64>,
    sieve_limit: u64,
    /// `hyper_int[n]` = H(n).
    hyper_int: Vec<Factored>,
    /// `hyper_half[n]` = H(n + 1/2).
    hyper_half: Vec<Factored>,
}

thread_local! {
    static TABLES: RefCell<Tables> = RefCell::new(Tables::default());
}

fn with_primes<R>(count: usize, f: impl FnOnce(&[u64]) -> R) -> R {
    TABLES.with(|t| {
        let mut t = t.borrow_mut();
        while t.primes.len() < count {
            let limit = (t.sieve_limit * 2).max(64);
            t.extend_primes(limit);
        }
        f(&t.primes[..count])
    })
}

impl Tables {
    fn extend_primes(&mut self, limit: u64) {
        if limit <= self.sieve_limit {
            return;
        }
        let mut composite = vec![false; limit as usize + 1];
        let mut primes = Vec::new();
        for n in 2..=limit as usize {
            if !composite[n] {
                primes.push(n as u64);
                let mut k = n * n;
                while k <= limit as usize {
                    composite[k] = true;
                    k += n;
                }
            }
        }
        self.primes = primes;
        self.sieve_limit = limit;
    }

    /// Exponent vector of `n!`.
    fn factorial(&mut self, n: u64) -> Vec<i64> {
        self.extend_primes(n.max(2));
        self.primes
            .iter()
            .take_while(|&&p| p <= n)
            .map(|&p| {
                let mut e = 0;
                let mut q = n / p;
                while q > 0 {
                    e += q as i64;
                    q /= p;
                }
                e
            })
            .collect()
    }

    fn hyper_int(&mut self, n: usize) -> Factored {
        if self.hyper_int.is_empty() {
            self.hyper_int.push(Factored::one());
        }
        while self.hyper_int.len() <= n {
            // H(k + 1) = H(k) * k!
            let k = self.hyper_int.len() - 1;
            let f = Factored { exps: self.factorial(k as u64), sqrt_pi: 0 };
            let mut next = self.hyper_int[k].clone();
            next.mul_pow(&f, 1);
            self.hyper_int.push(next);
        }
        self.hyper_int[n].clone()
    }

    fn hyper_half(&mut self, n: usize) -> Factored {
        while self.hyper_half.len() <= n {
            // H(k + 1/2) = H(k - 1/2) * Gamma(k + 1/2),
            // Gamma(k + 1/2) = (2k)! / (4^k k!) * sqrt(pi)
            let k = self.hyper_half.len();
            let mut gamma = Factored { exps: self.factorial(2 * k as u64), sqrt_pi: 1 };
            gamma.mul_pow(&Factored { exps: self.factorial(k as u64), sqrt_pi: 0 }, -1);
            gamma.mul_pow(&Factored { exps: vec![2 * k as i64], sqrt_pi: 0 }, -1);
            let mut next = if k == 0 { Factored::one() } else { self.hyper_half[k - 1].clone() };
            next.mul_pow(&gamma, 1);
            self.hyper_half.push(next);
        }
        self.hyper_half[n].clone()
    }
}

/// Prime factorization of `H(n)`.
pub fn hyperfactorial_factored(n: HalfInt) -> Result<Factored, ArithError> {
    let t = n.twice_value();
    if t < 0 {
        return Err(ArithError::NegativeArgument(n.to_string()));
    }
    Ok(TABLES.with(|tables| {
        let mut tables = tables.borrow_mut();
        if t % 2 == 0 {
            tables.hyper_int((t / 2) as usize)
        } else {
            tables.hyper_half((t / 2) as usize)
        }
    }))
}
