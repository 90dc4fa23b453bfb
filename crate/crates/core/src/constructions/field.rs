//! Finite fields `GF(p^k)` with table arithmetic, small orders only.
//!
//! Elements are integers `0..q` whose base-`p` digits are polynomial
//! coefficients (lowest degree first) modulo a fixed monic irreducible.

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Field {
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
}

/// `Some((p, k))` when `q = p^k` for a prime `p`.
pub fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl Field {
    /// Largest supported order; tables have `q^2` entries.
    pub const MAX_ORDER: usize = 1 << 10;

    pub fn new(q: usize) -> Result<Field> {
        let (p, k) = prime_power(q).ok_or_else(|| Error::pre(format!("{q} is not a prime power")))?;
        if q > Self::MAX_ORDER {
            return Err(Error::pre(format!("field order {q} exceeds {}", Self::MAX_ORDER)));
        }
        let modulus = irreducible(p, k);
        let digits = |x: usize| -> Vec<usize> { (0..k).map(|i| x / p.pow(i as u32) % p).collect() };
        let value = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for x in 0..q {
            let dx = digits(x);
            for y in 0..q {
                let dy = digits(y);
                let sum: Vec<usize> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % p).collect();
                add[x * q + y] = value(&sum) as u16;
                let mut prod = vec![0usize; 2 * k];
                for (i, &a) in dx.iter().enumerate() {
                    for (j, &b) in dy.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + a * b) % p;
                    }
                }
                reduce(&mut prod, &modulus, p);
                mul[x * q + y] = value(&prod[..k]) as u16;
            }
        }
        Ok(Field { q, add, mul })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.q + y] as usize
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.q + y] as usize
    }

    pub fn pow(&self, x: usize, mut e: usize) -> usize {
        let (mut base, mut acc) = (x, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> usize {
        let order = self.q - 1;
        let primes: Vec<usize> = (2..=order).filter(|&r| order.is_multiple_of(r) && prime_power(r) == Some((r, 1))).collect();
        (1..self.q)
            .find(|&g| primes.iter().all(|&r| self.pow(g, order / r) != 1))
            .expect("multiplicative group of a finite field is cyclic")
    }

    /// The unique multiplicative subgroup of the given order, sorted.
    pub fn subgroup(&self, order: usize) -> Result<Vec<usize>> {
        if order == 0 || !(self.q - 1).is_multiple_of(order) {
            return Err(Error::pre(format!("{order} does not divide q - 1 = {}", self.q - 1)));
        }
        let h = self.pow(self.primitive_element(), (self.q - 1) / order);
        let mut out: Vec<usize> = std::iter::successors(Some(1), |&x| Some(self.mul(x, h))).take(order).collect();
        out.sort_unstable();
        Ok(out)
    }
}

/// Reduces `poly` (lowest degree first) modulo the monic `modulus` in place.
fn reduce(poly: &mut [usize], modulus: &[usize], p: usize) {
    let k = modulus.len() - 1;
    for deg in (k..poly.len()).rev() {
        let c = poly[deg];
        if c == 0 {
            continue;
        }
        for (i, &m) in modulus.iter().enumerate() {
            let idx = deg - k + i;
            poly[idx] = (poly[idx] + p * p - c * m % p) % p;
        }
    }
}

/// The first monic irreducible of degree `k` over `F_p` in coefficient order.
fn irreducible(p: usize, k: usize) -> Vec<usize> {
    let monic = |deg: usize, code: usize| -> Vec<usize> {
        let mut c: Vec<usize> = (0..deg).map(|i| code / p.pow(i as u32) % p).collect();
        c.push(1);
        c
    };
    (0..p.pow(k as u32))
        .map(|code| monic(k, code))
        .find(|f| {
            (1..=k / 2).all(|deg| {
                (0..p.pow(deg as u32)).all(|code| {
                    let mut r = f.clone();
                    reduce(&mut r, &monic(deg, code), p);
                    r[..deg].iter().any(|&c| c != 0)
                })
            })
        })
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(11), Some((11, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn field_axioms_hold() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let f = Field::new(q).unwrap();
            for x in 0..q {
                assert_eq!(f.add(x, 0), x);
                assert_eq!(f.mul(x, 1), x);
                assert_eq!((0..q).filter(|&y| f.add(x, y) == 0).count(), 1);
                if x != 0 {
                    assert_eq!((0..q).filter(|&y| f.mul(x, y) == 1).count(), 1, "q={q}, x={x}");
                }
                for y in 0..q {
                    assert_eq!(f.mul(x, y), f.mul(y, x));
                    for z in [0, 1, q - 1] {
                        assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                    }
                }
            }
        }
    }

    #[test]
    fn subgroups() {
        let f = Field::new(9).unwrap();
        assert_eq!(f.subgroup(2).unwrap().len(), 2);
        assert!(f.subgroup(3).is_err());
        let f = Field::new(7).unwrap();
        assert_eq!(f.subgroup(3).unwrap(), vec![1, 2, 4]);
        assert_eq!(f.subgroup(2).unwrap(), vec![1, 6]);
    }
}
