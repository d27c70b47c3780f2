//! Table-driven arithmetic in the few small finite fields the PSL₂ oracle needs.

use thiserror::Error;

use crate::numtheory::{factorize, is_prime};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("no field of order {0} is available (primes up to 13, and 4, 8, 9)")]
    Unsupported(u64),
}

/// A finite field of order `q = p^k`, elements encoded as integers `0..q`
/// whose base-`p` digits are polynomial coefficients (constant term first).
#[derive(Debug, Clone)]
pub struct SmallField {
    p: u32,
    q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
}

// Monic irreducible moduli, constant coefficient first.
fn modulus(q: u64) -> Option<&'static [u32]> {
    match q {
        4 => Some(&[1, 1, 1]),    // x^2 + x + 1 over F2
        8 => Some(&[1, 1, 0, 1]), // x^3 + x + 1 over F2
        9 => Some(&[1, 0, 1]),    // x^2 + 1 over F3
        _ => None,
    }
}

impl SmallField {
    pub fn new(q: u64) -> Result<Self, FieldError> {
        if q > 13 {
            return Err(FieldError::Unsupported(q));
        }
        if is_prime(q) {
            let q32 = q as u32;
            let table = |f: fn(u32, u32) -> u32| {
                (0..q32)
                    .flat_map(|a| (0..q32).map(move |b| f(a, b) % q32))
                    .collect::<Vec<_>>()
            };
            return Ok(SmallField {
                p: q32,
                q: q32,
                add: table(|a, b| a + b),
                mul: table(|a, b| a * b),
            });
        }
        let poly = modulus(q).ok_or(FieldError::Unsupported(q))?;
        let fact = factorize(q).map_err(|_| FieldError::Unsupported(q))?;
        let (p, k) = fact.pairs()[0];
        let (p, k) = (p as u32, k as usize);
        let digits = |mut x: u32| {
            let mut d = vec![0u32; k];
            for slot in d.iter_mut() {
                *slot = x % p;
                x /= p;
            }
            d
        };
        let encode = |d: &[u32]| d.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        let q32 = q as u32;
        let mut add = vec![0; (q * q) as usize];
        let mut mul = vec![0; (q * q) as usize];
        for a in 0..q32 {
            let da = digits(a);
            for b in 0..q32 {
                let db = digits(b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                let mut prod = vec![0u32; 2 * k - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // reduce with x^k = -(poly[0] + ... + poly[k-1] x^{k-1})
                for deg in (k..prod.len()).rev() {
                    let c = prod[deg];
                    if c != 0 {
                        prod[deg] = 0;
                        for (i, &m) in poly[..k].iter().enumerate() {
                            let shift = deg - k + i;
                            prod[shift] = (prod[shift] + (p - c) * m) % p;
                        }
                    }
                }
                add[(a * q32 + b) as usize] = encode(&sum);
                mul[(a * q32 + b) as usize] = encode(&prod[..k]);
            }
        }
        Ok(SmallField { p, q: q32, add, mul })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        (0..self.q).find(|&b| self.add(a, b) == 0).expect("additive inverse")
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn one(&self) -> u32 {
        1
    }
}
