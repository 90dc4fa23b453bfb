//! Closed-form upper bounds on the number of `K_{a,b}` copies in `F`-free graphs.
//!
//! All values are floors of exact rationals; the true counts are integers, so
//! flooring keeps every bound valid.

use crate::bits::checked_binomial;
use crate::error::{Error, Result};

fn c(n: usize, k: usize) -> Result<u128> {
    checked_binomial(n as u64, k as u64).ok_or(Error::Overflow("binomial coefficient"))
}

fn mul(factors: &[u128]) -> Result<u128> {
    factors
        .iter()
        .try_fold(1u128, |acc, &f| acc.checked_mul(f))
        .ok_or(Error::Overflow("bound product"))
}

/// Bound for `K_{s,t}`-free hosts with `s <= a <= b <= t`:
/// `C(n,s) C(t-1,a) C(t-1-s,b-s) / C(b,s)`.
pub fn bound_gemevi(n: usize, a: usize, b: usize, s: usize, t: usize) -> Result<u128> {
    if !(1 <= s && s <= a && a <= b && b <= t) {
        return Err(Error::pre(format!("need 1 <= s <= a <= b <= t, got a={a}, b={b}, s={s}, t={t}")));
    }
    if t - 1 < s {
        // Then a >= s > t - 1 and C(t-1, a) = 0.
        return Ok(0);
    }
    let num = mul(&[c(n, s)?, c(t - 1, a)?, c(t - 1 - s, b - s)?])?;
    Ok(num / c(b, s)?)
}

/// Bound for `K_{s,t}`-free hosts with `a < s <= b`: `C(t-1,a) C(n,b)`, or the
/// sharper `C(s-1,a) C(n,b)` when `t <= b`.
pub fn bound_smallside(n: usize, a: usize, b: usize, s: usize, t: usize) -> Result<u128> {
    if !(1 <= a && a < s && s <= b && s <= t) {
        return Err(Error::pre(format!("need 1 <= a < s <= b and s <= t, got a={a}, b={b}, s={s}, t={t}")));
    }
    let left = if t <= b { c(s - 1, a)? } else { c(t - 1, a)? };
    mul(&[left, c(n, b)?])
}

/// Bound for hosts of maximum degree below `t` (`K_{1,t}`-free), `a <= b < t`.
pub fn bound_star_per_vertex(n: usize, a: usize, b: usize, t: usize) -> Result<u128> {
    if !(1 <= a && a <= b && b < t) {
        return Err(Error::pre(format!("need 1 <= a <= b < t, got a={a}, b={b}, t={t}")));
    }
    let n = n as u128;
    if a == b {
        let per = mul(&[n, c(t - 1, a)?, c(t - 1, a - 1)?])?;
        Ok(per / (2 * a as u128))
    } else {
        let inner = mul(&[c(t - 1, a)?, c(t - 1, b - 1)?])?
            .checked_add(mul(&[c(t - 1, b)?, c(t - 1, a - 1)?])?)
            .ok_or(Error::Overflow("bound sum"))?;
        Ok(mul(&[n, inner])? / (a + b) as u128)
    }
}
