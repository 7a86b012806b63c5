//! Deterministic prime arithmetic on `u64`.

use crate::perm::FactoredOrder;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrimeError {
    #[error("the order is 1; it has no prime factor")]
    NoPrimeFactor,
    #[error("{0} is below the supported range")]
    TooSmall(u64),
}

/// Miller-Rabin with the first twelve primes as bases, which is exact below 2^64.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
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

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
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

/// A prime strictly inside an open interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeWitness {
    pub p: u64,
    pub lo: u64,
    pub hi: u64,
}

/// The largest prime `p` with `floor(n/2) < p < n`.
pub fn bertrand_prime(n: u64) -> Result<PrimeWitness, PrimeError> {
    if n < 4 {
        return Err(PrimeError::TooSmall(n));
    }
    let lo = n / 2;
    let p = (lo + 1..n)
        .rev()
        .find(|&c| is_prime(c))
        .expect("Bertrand's postulate guarantees a prime in (n/2, n)");
    Ok(PrimeWitness { p, lo, hi: n })
}

pub fn least_prime_factor_of_order(o: &FactoredOrder) -> Result<u64, PrimeError> {
    o.least_prime().ok_or(PrimeError::NoPrimeFactor)
}

/// Prime factorization as ascending `(prime, exponent)` pairs; empty for 0 and 1.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    let mut found = Vec::new();
    if n >= 2 {
        split(n, &mut found);
    }
    found.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for p in found {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

fn split(mut n: u64, out: &mut Vec<u64>) {
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        while n.is_multiple_of(p) {
            out.push(p);
            n /= p;
        }
    }
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    if n < 1 << 20 {
        let mut d = 41;
        while d * d <= n {
            while n.is_multiple_of(d) {
                out.push(d);
                n /= d;
            }
            d += 2;
        }
        if n > 1 {
            out.push(n);
        }
        return;
    }
    let d = pollard_rho(n);
    split(d, out);
    split(n / d, out);
}

/// Brent's variant; `n` is odd, composite and has no factor below 41.
fn pollard_rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = num_integer::gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Largest prime dividing `n (n - 1) (n - 2)`, factoring the terms separately.
pub fn max_prime_factor_triple(n: u64) -> Result<u64, PrimeError> {
    if n < 5 {
        return Err(PrimeError::TooSmall(n));
    }
    Ok([n, n - 1, n - 2]
        .into_iter()
        .filter_map(|t| factorize(t).last().map(|&(p, _)| p))
        .max()
        .expect("terms are at least 3"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        n >= 2
            && (2..)
                .take_while(|d| d * d <= n)
                .all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn is_prime_examples() {
        assert!(!is_prime(1));
        assert!(!is_prime(49));
        assert!(is_prime(2017));
        assert!(trial_division(2017));
    }

    #[test]
    fn is_prime_agrees_with_trial_division() {
        for n in 0..20_000 {
            assert_eq!(is_prime(n), trial_division(n), "n = {n}");
        }
    }

    #[test]
    fn is_prime_large_values() {
        assert!(is_prime(18_446_744_073_709_551_557)); // largest prime below 2^64
        assert!(!is_prime(u64::MAX));
        // strong pseudoprime to bases 2..=37 would need > 3.3e24; these catch weak tests
        assert!(!is_prime(3_215_031_751));
        assert!(!is_prime(3_825_123_056_546_413_051));
        assert!(!is_prime(4_294_967_297)); // 641 * 6700417
    }

    #[test]
    fn bertrand_examples() {
        assert_eq!(
            bertrand_prime(10).unwrap(),
            PrimeWitness {
                p: 7,
                lo: 5,
                hi: 10
            }
        );
        assert_eq!(bertrand_prime(52).unwrap().p, 47);
        assert_eq!(bertrand_prime(6).unwrap().p, 5);
        assert_eq!(bertrand_prime(3), Err(PrimeError::TooSmall(3)));
    }

    #[test]
    fn least_prime_factor_examples() {
        let o = FactoredOrder::from_lengths([2, 3]);
        assert_eq!(least_prime_factor_of_order(&o), Ok(2));
        let o = FactoredOrder::from_lengths([9, 5]);
        assert_eq!(least_prime_factor_of_order(&o), Ok(3));
        assert_eq!(
            least_prime_factor_of_order(&FactoredOrder::default()),
            Err(PrimeError::NoPrimeFactor)
        );
    }

    #[test]
    fn max_prime_factor_examples() {
        assert_eq!(max_prime_factor_triple(2025), Ok(23));
        assert_eq!(max_prime_factor_triple(7), Ok(7));
        assert_eq!(max_prime_factor_triple(52), Ok(17));
    }

    #[test]
    fn factorize_round_trips() {
        for n in [
            1u64,
            2,
            12,
            2024,
            1 << 40,
            600_851_475_143,
            4_294_967_297,
            999_999_999_989 * 3,
        ] {
            let f = factorize(n);
            let back: u64 = f.iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(back, n.max(1));
            assert!(f.iter().all(|&(p, _)| is_prime(p)));
        }
        // semiprime with two ~32-bit factors exercises Pollard rho
        let (a, b) = (4_294_967_291u64, 4_294_967_279u64);
        assert_eq!(factorize(a * b), vec![(b, 1), (a, 1)]);
    }
}
