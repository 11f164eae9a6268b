//! Absolute-stable-rank transforms.
//!
//! For a row `(r_1, ..., r_n)` an ASR transform is `t_1, ..., t_{n-1}` such
//! that every maximal ideal containing `⟨r_i + t_i r_n⟩` already contains
//! `⟨r_1, ..., r_n⟩`.
//!
//! * `Z/m`: the maximal ideals are the primes `p | m`; `t_1` is chosen prime
//!   by prime and glued by CRT, the other `t_i` are zero.
//! * `Z`, `Z[1/p]` (`n ≥ 3`): `t_1` makes `a = r_1 + t_1 r_n` nonzero, then
//!   `t_2` makes `r_2 + t_2 r_n` a unit modulo the part of `a` coprime to
//!   `r_n`, so every common prime divides `r_n`. `n = 2` is searched and may
//!   have no witness (these rings do not satisfy ASR₂).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::descriptor::{Ring, RingDescriptor};
use super::element::RingElement;
use super::ideal::{maximal_ideals_containing, IdealDescriptor};
use super::numtheory::{crt, prime_divisors_u64, strip_primes};
use super::RingError;

/// Search radius for two-term rows over `Z` and `Z[1/p]`.
const ASR2_SEARCH_LIMIT: u64 = 10_000;

pub fn asr_transform(row: &[RingElement], n: usize) -> Result<Vec<RingElement>, RingError> {
    if row.len() != n {
        return Err(RingError::InvalidArgument(format!(
            "row has {} entries but arity {n} was requested",
            row.len()
        )));
    }
    if n < 2 {
        return Err(RingError::InvalidArgument("ASR needs rows of length at least 2".into()));
    }
    let ring = row[0].ring().clone();
    for r in row {
        r.same_ring(&row[0])?;
    }
    let last = &row[n - 1];
    if last.is_zero() {
        return Ok(vec![ring.zero(); n - 1]);
    }
    match ring.descriptor() {
        RingDescriptor::Residue(m) => Ok(residue_transform(&ring, *m, row)),
        RingDescriptor::Integers | RingDescriptor::Localized(_) => euclidean_transform(&ring, row),
        _ => Err(RingError::UnsupportedRing(format!("no ASR oracle for {ring}"))),
    }
}

fn residue_transform(ring: &Ring, modulus: u64, row: &[RingElement]) -> Vec<RingElement> {
    let n = row.len();
    let first = row[0].as_residue().expect("residue");
    let last = row[n - 1].as_residue().expect("residue");
    let mut residues = Vec::new();
    for p in prime_divisors_u64(modulus) {
        let (r1, rn) = (first % p, last % p);
        // Over the field Z/p we need r_1 + t r_n ≠ 0 whenever r_n ≠ 0.
        let t = if rn != 0 && (r1 + rn) % p == 0 { 0 } else { 1 };
        residues.push((t, p));
    }
    let t1 = crt(&residues);
    let mut t = vec![ring.zero(); n - 1];
    t[0] = ring.from_bigint(&t1);
    t
}

/// Numerator and denominator `Π p^e` of a scalar of `Z` or `Z[1/p]`.
fn split(ring: &Ring, x: &RingElement) -> (BigInt, BigInt) {
    match x.as_fraction() {
        Some((num, exps)) => {
            let den = ring
                .inverted_primes()
                .iter()
                .zip(exps)
                .map(|(p, e)| BigInt::from(*p).pow(*e))
                .product();
            (num.clone(), den)
        }
        None => (x.integer_lift().expect("scalar"), BigInt::one()),
    }
}

/// Part of `a` sharing no prime with `b` nor with the inverted primes.
fn coprime_part(a: &BigInt, b: &BigInt, primes: &[u64]) -> BigInt {
    let mut a = strip_primes(a, primes).0.abs();
    loop {
        let g = a.gcd(b);
        if g.is_one() || g.is_zero() {
            return a;
        }
        a /= g;
    }
}

fn euclidean_transform(ring: &Ring, row: &[RingElement]) -> Result<Vec<RingElement>, RingError> {
    let n = row.len();
    let primes = ring.inverted_primes().to_vec();
    let parts: Vec<(BigInt, BigInt)> = row.iter().map(|x| split(ring, x)).collect();
    let (mn, sn) = &parts[n - 1];
    // integer shift t' on numerators becomes t = t' · s_n / s_i in the ring
    let lift = |i: usize, t: &BigInt| -> RingElement {
        let si = ring.from_bigint(&parts[i].1);
        &(&ring.from_bigint(t) * &ring.from_bigint(sn)) * &si.try_invert().expect("S-unit")
    };
    let mut t = vec![ring.zero(); n - 1];

    if n == 2 {
        let m1 = &parts[0].0;
        if m1.is_zero() {
            t[0] = lift(0, &BigInt::one());
            return Ok(t);
        }
        let radius = mn.abs().to_u64().unwrap_or(u64::MAX).saturating_add(2).min(ASR2_SEARCH_LIMIT);
        for k in 0..=radius as i64 {
            for cand in [k, -k] {
                let cand = BigInt::from(cand);
                let a = m1 + &cand * mn;
                if !a.is_zero() && coprime_part(&a, mn, &primes).is_one() {
                    t[0] = lift(0, &cand);
                    return Ok(t);
                }
            }
        }
        return Err(RingError::UnsupportedRing(format!(
            "no two-term ASR witness found over {ring}"
        )));
    }

    let m1 = &parts[0].0;
    let t1 = if m1.is_zero() { BigInt::one() } else { BigInt::zero() };
    let a = m1 + &t1 * mn;
    let core = coprime_part(&a, mn, &primes);
    let t2 = if core.is_one() {
        BigInt::zero()
    } else {
        let e = mn.mod_floor(&core).extended_gcd(&core);
        debug_assert!(e.gcd.is_one());
        let u = e.x;
        (BigInt::one() - u * &parts[1].0).mod_floor(&core)
    };
    t[0] = lift(0, &t1);
    t[1] = lift(1, &t2);
    Ok(t)
}

/// Checks the ASR property of `t` for `row` by enumerating maximal ideals.
pub fn asr_property_holds(row: &[RingElement], t: &[RingElement]) -> Result<bool, RingError> {
    let n = row.len();
    if t.len() + 1 != n || n < 2 {
        return Ok(false);
    }
    let ring = row[0].ring();
    let shifted: Vec<RingElement> = row[..n - 1]
        .iter()
        .zip(t)
        .map(|(r, ti)| r + &(ti * &row[n - 1]))
        .collect();
    let small = maximal_ideals_containing(&IdealDescriptor::new(ring, shifted)?)?;
    let big = maximal_ideals_containing(&IdealDescriptor::new(ring, row.to_vec())?)?;
    Ok(small.is_subset_of(&big))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(ring: &Ring, xs: &[i64]) -> Vec<RingElement> {
        xs.iter().map(|&x| ring.int(x)).collect()
    }

    #[test]
    fn residue_example() {
        let z6 = Ring::residue(6).unwrap();
        let row = ints(&z6, &[2, 3]);
        let t = asr_transform(&row, 2).unwrap();
        assert_eq!(t, vec![z6.int(1)]);
        assert!(asr_property_holds(&row, &t).unwrap());
    }

    #[test]
    fn zero_last_entry() {
        let z = Ring::integers();
        let row = ints(&z, &[0, 0, 7]);
        let t = asr_transform(&row, 3).unwrap();
        assert!(asr_property_holds(&row, &t).unwrap());
        let row = ints(&z, &[4, 6, 0]);
        assert_eq!(asr_transform(&row, 3).unwrap(), ints(&z, &[0, 0]));
    }

    #[test]
    fn integer_example() {
        let z = Ring::integers();
        let row = ints(&z, &[4, 6, 9]);
        let t = asr_transform(&row, 3).unwrap();
        assert!(asr_property_holds(&row, &t).unwrap());
        // a bad choice: t = (0, 0) leaves (4, 6) inside (2) while 2 ∤ 9
        assert!(!asr_property_holds(&row, &ints(&z, &[0, 0])).unwrap());
    }

    #[test]
    fn localized_rows() {
        let zh = Ring::localized(&[2]).unwrap();
        let row = vec![zh.fraction(9, 4).unwrap(), zh.int(15), zh.fraction(5, 2).unwrap()];
        let t = asr_transform(&row, 3).unwrap();
        assert!(asr_property_holds(&row, &t).unwrap());
    }

    #[test]
    fn arity_errors() {
        let z = Ring::integers();
        assert!(asr_transform(&ints(&z, &[1, 2]), 3).is_err());
        assert!(asr_transform(&ints(&z, &[1]), 1).is_err());
        let p = Ring::parse("poly(Z; x)").unwrap();
        assert!(matches!(
            asr_transform(&[p.one(), p.var("x").unwrap()], 2),
            Err(RingError::UnsupportedRing(_))
        ));
    }
}
