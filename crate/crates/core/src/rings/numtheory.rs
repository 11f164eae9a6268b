//! Small integer helpers: trial-division factoring, modular inverses, CRT.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n`, ascending. `n` must be positive.
pub fn prime_divisors_u64(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest trial-division input accepted for integers outside `u64` range.
const FACTOR_LIMIT_BITS: u64 = 64;

/// Distinct prime divisors of a nonzero big integer, when it is desk-sized.
pub fn prime_divisors_big(n: &BigInt) -> Option<Vec<u64>> {
    if n.is_zero() || n.bits() > FACTOR_LIMIT_BITS {
        return None;
    }
    Some(prime_divisors_u64(n.abs().to_u64()?))
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inverse_u64(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

/// Solves `x ≡ r_i (mod p_i)` for pairwise coprime moduli; result in `[0, Π p_i)`.
pub fn crt(residues: &[(u64, u64)]) -> BigInt {
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for &(r, p) in residues {
        let p_big = BigInt::from(p);
        // x + m*k ≡ r (mod p)
        let m_mod = (&m % &p_big).to_u64().unwrap_or(0);
        let inv = mod_inverse_u64(m_mod, p).expect("CRT moduli must be coprime");
        let x_mod = x.mod_floor(&p_big).to_u64().unwrap_or(0);
        let diff = (r % p + p - x_mod) % p;
        let k = (diff as u128 * inv as u128 % p as u128) as u64;
        x += &m * BigInt::from(k);
        m *= p_big;
    }
    x
}

/// Removes every factor of the listed primes from `n`; keeps the sign.
pub fn strip_primes(n: &BigInt, primes: &[u64]) -> (BigInt, Vec<u32>) {
    let mut n = n.clone();
    let mut exps = vec![0u32; primes.len()];
    if n.is_zero() {
        return (n, exps);
    }
    for (i, &p) in primes.iter().enumerate() {
        let p = BigInt::from(p);
        loop {
            let (q, r) = n.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            n = q;
            exps[i] += 1;
        }
    }
    (n, exps)
}

/// Extended gcd of a row: `Σ c_i a_i = g = gcd(a)`, `g ≥ 0`.
pub fn row_xgcd(row: &[BigInt]) -> (BigInt, Vec<BigInt>) {
    let mut g = BigInt::zero();
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(row.len());
    for a in row {
        if g.is_zero() {
            // previous entries all zero
            coeffs.push(if a.is_negative() { -BigInt::one() } else { BigInt::one() });
            let k = coeffs.len() - 1;
            for c in coeffs.iter_mut().take(k) {
                *c = BigInt::zero();
            }
            g = a.abs();
            if g.is_zero() {
                let last = coeffs.len() - 1;
                coeffs[last] = BigInt::zero();
            }
            continue;
        }
        let e = g.extended_gcd(a);
        for c in coeffs.iter_mut() {
            *c *= &e.x;
        }
        coeffs.push(e.y);
        g = e.gcd;
        if g.is_negative() {
            g = -g;
            for c in coeffs.iter_mut() {
                *c = -c.clone();
            }
        }
    }
    (g, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factoring() {
        assert_eq!(prime_divisors_u64(360), vec![2, 3, 5]);
        assert_eq!(prime_divisors_u64(1), Vec::<u64>::new());
        assert_eq!(prime_divisors_u64(97), vec![97]);
        assert!(is_prime_u64(2) && !is_prime_u64(1) && !is_prime_u64(91));
    }

    #[test]
    fn xgcd_rows() {
        let row: Vec<BigInt> = [6, 10, 15].iter().map(|&x| BigInt::from(x)).collect();
        let (g, c) = row_xgcd(&row);
        assert_eq!(g, BigInt::one());
        let s: BigInt = row.iter().zip(&c).map(|(a, b)| a * b).sum();
        assert_eq!(s, BigInt::one());

        let row: Vec<BigInt> = [0, 0, -4, 6].iter().map(|&x| BigInt::from(x)).collect();
        let (g, c) = row_xgcd(&row);
        assert_eq!(g, BigInt::from(2));
        let s: BigInt = row.iter().zip(&c).map(|(a, b)| a * b).sum();
        assert_eq!(s, g);

        let row: Vec<BigInt> = vec![BigInt::zero(); 3];
        assert_eq!(row_xgcd(&row).0, BigInt::zero());
    }

    #[test]
    fn crt_and_inverse() {
        assert_eq!(mod_inverse_u64(2, 9), Some(5));
        assert_eq!(mod_inverse_u64(3, 9), None);
        let x = crt(&[(1, 2), (0, 3), (4, 5)]);
        assert_eq!(x, BigInt::from(9));
    }
}
