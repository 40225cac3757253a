//! Small integer helpers.

use num_integer::Integer;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn is_odd_prime(n: u64) -> bool {
    n % 2 == 1 && is_prime(n)
}

/// Euler's totient.
pub fn phi(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Splits `n = p^k` for an odd prime `p`.
pub fn odd_prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 3 || n.is_multiple_of(2) {
        return None;
    }
    let p = (3..=n).find(|d| n.is_multiple_of(*d))?;
    let mut k = 0;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(odd_prime_power(27), Some((3, 3)));
        assert_eq!(odd_prime_power(125), Some((5, 3)));
        assert_eq!(odd_prime_power(7), Some((7, 1)));
        assert_eq!(odd_prime_power(15), None);
        assert_eq!(odd_prime_power(8), None);
    }

    #[test]
    fn totient() {
        assert_eq!(phi(27), 18);
        assert_eq!(phi(125), 100);
        assert_eq!(phi(1), 1);
        assert_eq!(divisors(6), vec![1, 2, 3, 6]);
    }
}
