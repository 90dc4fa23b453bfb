//! Small helpers for `u64` vertex sets and exact binomials.

/// Mask with the lowest `n` bits set (`n <= 64`).
#[inline]
pub fn low_mask(n: usize) -> u64 {
    debug_assert!(n <= 64);
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub fn bits(mask: u64) -> Bits {
    Bits(mask)
}

/// Calls `f` on every `k`-subset of `mask` in lexicographic order of the
/// sorted element lists. Returns `false` as soon as `f` does.
pub fn visit_subsets(mask: u64, k: usize, f: &mut impl FnMut(u64) -> bool) -> bool {
    fn rec(rest: u64, k: usize, acc: u64, f: &mut impl FnMut(u64) -> bool) -> bool {
        if k == 0 {
            return f(acc);
        }
        let mut rest = rest;
        while rest.count_ones() as usize >= k {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if !rec(rest, k - 1, acc | bit(v), f) {
                return false;
            }
        }
        true
    }
    if (mask.count_ones() as usize) < k {
        return true;
    }
    rec(mask, k, 0, f)
}

/// `C(n, k)` or `None` on `u128` overflow.
pub fn checked_binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// `C(n, k)`; panics on overflow, which cannot happen for `n <= 120`.
pub fn binomial(n: u64, k: u64) -> u128 {
    checked_binomial(n, k).expect("binomial overflow")
}

pub fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}
