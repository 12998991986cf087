//! Small integer helpers shared by the field and coset layers.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

/// `base^exp`, panicking on overflow. Only used where the caller has already
/// bounded the operands (lengths are far below 2^63 throughout the crate).
pub fn pow(base: u64, exp: u32) -> u64 {
    base.checked_pow(exp)
        .unwrap_or_else(|| panic!("{base}^{exp} overflows u64"))
}

pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Residue of a (possibly negative) integer modulo `n`, in `[0, n)`.
pub fn residue(a: i64, n: u64) -> u64 {
    a.rem_euclid(n as i64) as u64
}

/// Base-`q` digits of `a`, least significant first, padded with zeros to at
/// least `min_len` entries.
pub fn digits(mut a: u64, q: u64, min_len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(min_len.max(8));
    while a > 0 {
        out.push(a % q);
        a /= q;
    }
    if out.len() < min_len {
        out.resize(min_len, 0);
    }
    out
}

/// `1 + q + ... + q^(len-1)`.
pub fn repunit(q: u64, len: u32) -> u64 {
    (0..len).map(|i| pow(q, i)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_factors() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(prime_factors(80), vec![2, 5]);
        assert_eq!(prime_factors(242), vec![2, 11]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_factors(97), vec![97]);
    }

    #[test]
    fn residues_of_negatives() {
        assert_eq!(residue(-1, 31), 30);
        assert_eq!(residue(-31, 31), 0);
        assert_eq!(residue(40, 31), 9);
    }

    #[test]
    fn digit_expansion() {
        assert_eq!(digits(14, 3, 3), vec![2, 1, 1]);
        assert_eq!(digits(0, 5, 2), vec![0, 0]);
        assert_eq!(repunit(3, 3), 13);
        assert_eq!(pow_mod(3, 5, 121), 1);
    }
}
