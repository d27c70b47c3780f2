//! Exact integer arithmetic on the 63-bit range: primality, factorization,
//! multiplicative orders and primitive prime divisors.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Largest value accepted by [`factorize`] and friends.
pub const MAX_INPUT: u64 = 1 << 63;

/// Largest base accepted by [`primitive_prime_divisors`].
pub const MAX_PPD_BASE: u64 = 1 << 31;

const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;
const RHO_SEED: u64 = 0x6b5f_2d1e_9a37_c4f1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("{0} is outside the supported range 1..=2^63")]
    OutOfRange(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("base {0} must satisfy |q| > 1")]
    InvalidBase(i64),
    #[error("multiplicative order of {q} modulo {r} is undefined: {r} divides {q}")]
    UndefinedOrder { r: u64, q: i64 },
    #[error("{q}^{i} - 1 does not fit the supported range")]
    Overflow { q: u64, i: u32 },
    #[error("exponent must be positive")]
    ZeroExponent,
}

/// Prime factorization as `(prime, exponent)` pairs, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|&(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplies the factorization back out. `None` on overflow.
    pub fn product(&self) -> Option<u64> {
        self.0.iter().try_fold(1u64, |acc, &(p, e)| acc.checked_mul(p.checked_pow(e)?))
    }

    fn push(&mut self, p: u64) {
        match self.0.iter_mut().find(|(q, _)| *q == p) {
            Some((_, e)) => *e += 1,
            None => self.0.push((p, 1)),
        }
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test.
///
/// Miller–Rabin with the first twelve primes as witnesses, which is exact for
/// every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

// Brent's variant of Pollard rho. `n` must be odd and composite.
fn pollard_brent(n: u64, rng: &mut ChaCha8Rng) -> u64 {
    loop {
        let c = rng.gen_range(1..n);
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut y = rng.gen_range(0..n);
        let m = 128u64;
        let mut g = 1u64;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
}

fn split_into(n: u64, out: &mut Vec<u64>, rng: &mut ChaCha8Rng) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n, rng);
    split_into(d, out, rng);
    split_into(n / d, out, rng);
}

/// Factors `n` by trial division below 10^6, then Pollard–Brent with a fixed
/// seed on whatever cofactor remains.
pub fn factorize(n: u64) -> Result<Factorization, NumError> {
    if n == 0 || n > MAX_INPUT {
        return Err(NumError::OutOfRange(n));
    }
    let mut fact = Factorization::default();
    let mut rest = n;
    let mut d = 2u64;
    while d < TRIAL_DIVISION_LIMIT && d * d <= rest {
        while rest % d == 0 {
            fact.push(d);
            rest /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        let mut big = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(RHO_SEED);
        split_into(rest, &mut big, &mut rng);
        big.sort_unstable();
        for p in big {
            fact.push(p);
        }
    }
    Ok(fact)
}

/// The set of prime divisors of `n`; empty for `n = 1`.
pub fn prime_divisors(n: u64) -> Result<BTreeSet<u64>, NumError> {
    Ok(factorize(n)?.primes().collect())
}

/// Multiplicative order `e(r, q)` of `q` modulo the prime `r`.
///
/// For `r = 2` the convention `e(2, q) = 1` if `q ≡ 1 (mod 4)` and `2`
/// otherwise applies; `q` must then be odd.
pub fn mult_order(r: u64, q: i64) -> Result<u64, NumError> {
    if !is_prime(r) {
        return Err(NumError::NotPrime(r));
    }
    if q.unsigned_abs() <= 1 {
        return Err(NumError::InvalidBase(q));
    }
    if q.unsigned_abs() % r == 0 {
        return Err(NumError::UndefinedOrder { r, q });
    }
    if r == 2 {
        return Ok(if q.rem_euclid(4) == 1 { 1 } else { 2 });
    }
    let base = q.rem_euclid(r as i64) as u64;
    // Strip prime factors of r - 1 while the power stays 1.
    let mut order = r - 1;
    for (p, _) in factorize(r - 1)?.pairs().iter().copied() {
        while order % p == 0 && pow_mod(base, order / p, r) == 1 {
            order /= p;
        }
    }
    Ok(order)
}

/// `ν(m)`: `m` when `4 | m`, `m/2` when `m ≡ 2 (mod 4)`, `2m` when `m` is odd.
pub fn nu(m: u64) -> u64 {
    assert!(m >= 1, "nu is defined on positive integers");
    match m % 4 {
        0 => m,
        2 => m / 2,
        _ => 2 * m,
    }
}

/// `η(m)`: `m` when odd, `m/2` when even.
pub fn eta(m: u64) -> u64 {
    assert!(m >= 1, "eta is defined on positive integers");
    if m % 2 == 1 {
        m
    } else {
        m / 2
    }
}

fn pow_minus_one(q: u64, i: u32) -> Result<u64, NumError> {
    if i == 0 {
        return Err(NumError::ZeroExponent);
    }
    if q <= 1 || q > MAX_PPD_BASE {
        return Err(NumError::InvalidBase(q as i64));
    }
    match q.checked_pow(i) {
        Some(v) if v - 1 <= MAX_INPUT => Ok(v - 1),
        _ => Err(NumError::Overflow { q, i }),
    }
}

/// Primitive prime divisors of `q^i - 1`: primes `r` dividing it with
/// `e(r, q) = i`.
pub fn primitive_prime_divisors(q: u64, i: u32) -> Result<BTreeSet<u64>, NumError> {
    let value = pow_minus_one(q, i)?;
    let mut out = BTreeSet::new();
    for r in factorize(value)?.primes() {
        if mult_order(r, q as i64)? == u64::from(i) {
            out.insert(r);
        }
    }
    Ok(out)
}

/// Whether `q^m - 1` has a primitive prime divisor.
pub fn zsigmondy_exists(q: u64, m: u32) -> Result<bool, NumError> {
    Ok(!primitive_prime_divisors(q, m)?.is_empty())
}
