use std::cell::RefCell;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use super::halfint::HalfInt;
use super::value::SqrtPiScaled;
use crate::error::ArithError;

thread_local! {
    static FACTORIALS: RefCell<Vec<BigUint>> = RefCell::new(vec![BigUint::one()]);
}

/// `n!`, memoized per thread.
pub fn factorial(n: usize) -> BigUint {
    FACTORIALS.with(|f| {
        let mut f = f.borrow_mut();
        while f.len() <= n {
            let k = f.len();
            let next = &f[k - 1] * BigUint::from(k);
            f.push(next);
        }
        f[n].clone()
    })
}

/// `Gamma(k + 1/2) = (2k)! / (4^k k!) * sqrt(pi)`.
pub fn gamma_half(k: usize) -> SqrtPiScaled {
    let num = BigInt::from(factorial(2 * k));
    let den = BigInt::from(factorial(k)) * BigInt::from(4u32).pow(k as u32);
    SqrtPiScaled::new(BigRational::new(num, den), 1)
}

/// `Gamma(n)` for a positive integer or half-integer `n`.
pub fn gamma(n: HalfInt) -> Result<SqrtPiScaled, ArithError> {
    let t = n.twice_value();
    if t <= 0 {
        return Err(ArithError::NegativeArgument(n.to_string()));
    }
    Ok(if t % 2 == 0 {
        SqrtPiScaled::integer(BigInt::from(factorial((t / 2 - 1) as usize)))
    } else {
        gamma_half((t / 2) as usize)
    })
}

/// The hyperfactorial `H(n) = 0! 1! ... (n-1)!`, and for half-integers
/// `Gamma(1/2) Gamma(3/2) ... Gamma(n - 1)`; `H(0) = 1`.
///
/// This multiplies the factors directly. Formula evaluation goes through
/// [`super::factored`] instead; the two are checked against each other.
pub fn hyperfactorial(n: HalfInt) -> Result<SqrtPiScaled, ArithError> {
    let t = n.twice_value();
    if t < 0 {
        return Err(ArithError::NegativeArgument(n.to_string()));
    }
    if t % 2 == 0 {
        let mut acc = BigUint::one();
        for k in 0..(t / 2) as usize {
            acc *= factorial(k);
        }
        Ok(SqrtPiScaled::integer(BigInt::from(acc)))
    } else {
        let mut acc = SqrtPiScaled::one();
        for k in 0..=(t / 2) as usize {
            acc = &acc * &gamma_half(k);
        }
        Ok(acc)
    }
}
