use num_complex::Complex64;

use crate::error::{Error, Result};

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `σ_s(n) = Σ_{d | n} d^s`.
pub fn divisor_power_sum(s: Complex64, n: i64) -> Result<Complex64> {
    if n <= 0 {
        return Err(Error::Domain(format!("divisor sums need n >= 1, got {n}")));
    }
    Ok(divisors(n as u64)
        .into_iter()
        .map(|d| (s * (d as f64).ln()).exp())
        .sum())
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Exponent of `p` in `|n|`, for `n ≠ 0`.
pub fn p_adic_valuation(n: i64, p: u64) -> u32 {
    let mut n = n.unsigned_abs();
    let mut k = 0;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
        let s = divisor_power_sum(Complex64::new(-1.0, 0.0), 6).unwrap();
        assert!((s.re - 2.0).abs() < 1e-15);
        assert_eq!(divisor_power_sum(Complex64::new(3.7, 1.0), 1).unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(divisor_power_sum(Complex64::new(0.0, 0.0), 12).unwrap().re, 6.0);
        assert!(divisor_power_sum(Complex64::new(0.0, 0.0), 0).is_err());
    }

    #[test]
    fn primes() {
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(primes_up_to(10_000).len(), 1229);
        assert!(primes_up_to(1).is_empty());
        for p in primes_up_to(500) {
            assert!(is_prime(p));
        }
        assert!(!is_prime(1) && !is_prime(91) && !is_prime(0));
    }

    #[test]
    fn valuations() {
        assert_eq!(p_adic_valuation(12, 2), 2);
        assert_eq!(p_adic_valuation(-12, 3), 1);
        assert_eq!(p_adic_valuation(35, 2), 0);
    }
}
