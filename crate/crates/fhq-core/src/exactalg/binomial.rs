//! Integer binomial coefficients, including the polynomial extension
//! `C(m, r) = m(m-1)...(m-r+1)/r!` for arbitrary integer `m`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(m, r)` for any integer `m` and `r >= 0`; always an integer.
pub fn binomial(m: i64, r: u32) -> BigInt {
    let mut num = BigInt::one();
    for k in 0..r as i64 {
        num *= BigInt::from(m - k);
    }
    let mut den = BigInt::one();
    for k in 1..=r as i64 {
        den *= BigInt::from(k);
    }
    if num.is_zero() {
        return BigInt::zero();
    }
    // exact by construction
    num / den
}

/// Expansion coefficients of the product of two binomial-basis elements:
/// `C(t,i) * C(t,j) = sum_k overlap(i, j, k) * C(t,k)` with
/// `overlap(i,j,k) = C(k,i) * C(i, k-j)`, supported on
/// `max(i,j) <= k <= i+j`.
pub fn binomial_product_coeff(i: u32, j: u32, k: u32) -> BigInt {
    if k < i.max(j) || k > i + j {
        return BigInt::zero();
    }
    binomial(k as i64, i) * binomial(i as i64, k - j)
}
