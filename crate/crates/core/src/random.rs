//! Seeded random inputs for tests, benchmarks and the command line.
//!
//! All generators take a caller-supplied RNG, so a `ChaCha8Rng` seeded with a
//! fixed `u64` reproduces the same inputs everywhere.

use num_bigint::BigInt;
use rand::Rng;

use crate::group::{GeneratorWord, Letter};
use crate::rings::{unimodular_certificate, Ring, RingDescriptor, RingElement};
use crate::roots::RootSystem;

/// Integer range used for random scalars of `Z` and `Z[1/p]`.
pub const INTEGER_BOUND: i64 = 999;

/// A uniformly drawn scalar: a residue for `Z/n`, an integer in
/// `[-999, 999]` for `Z`, and such an integer over a random power of an
/// inverted prime for `Z[1/p]`.
pub fn random_scalar<R: Rng>(rng: &mut R, ring: &Ring) -> RingElement {
    match ring.descriptor() {
        RingDescriptor::Residue(n) => ring.from_bigint(&BigInt::from(rng.gen_range(0..*n))),
        RingDescriptor::Integers => ring.int(rng.gen_range(-INTEGER_BOUND..=INTEGER_BOUND)),
        RingDescriptor::Localized(primes) => {
            let num = ring.int(rng.gen_range(-INTEGER_BOUND..=INTEGER_BOUND));
            let p = primes[rng.gen_range(0..primes.len())];
            let den = ring.int(p as i64).pow(rng.gen_range(0..4));
            &num * &den.try_invert().expect("inverted prime")
        }
        _ => {
            let scalar = random_scalar(rng, &ring.scalar_ring());
            ring.constant(&scalar)
        }
    }
}

/// A small scalar in `[-bound, bound]` (reduced into the ring).
pub fn small_scalar<R: Rng>(rng: &mut R, ring: &Ring, bound: i64) -> RingElement {
    ring.int(rng.gen_range(-bound..=bound))
}

/// A product of `len` root unipotents with uniformly chosen roots and
/// scalars. Over `Z` the scalars are kept in `[-3, 3]` so that the matrix
/// entries of long products stay desk-sized.
pub fn random_elementary_word<R: Rng>(rng: &mut R, system: &RootSystem, ring: &Ring, len: usize) -> GeneratorWord {
    let roots = system.roots();
    let letters = (0..len)
        .map(|_| {
            let root = roots[rng.gen_range(0..roots.len())].clone();
            let scalar = match ring.descriptor() {
                RingDescriptor::Integers => small_scalar(rng, ring, 3),
                _ => random_scalar(rng, ring),
            };
            Letter::X(root, scalar)
        })
        .collect();
    GeneratorWord::new(letters)
}

/// A random vector of length `n` whose entries generate the unit ideal,
/// drawn by rejection sampling.
pub fn random_unimodular_vector<R: Rng>(rng: &mut R, ring: &Ring, n: usize) -> Vec<RingElement> {
    loop {
        let v: Vec<RingElement> = (0..n).map(|_| random_scalar(rng, ring)).collect();
        if matches!(unimodular_certificate(&v), Ok(Some(_))) {
            return v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_generation_is_reproducible() {
        let z = Ring::integers();
        let a = random_unimodular_vector(&mut ChaCha8Rng::seed_from_u64(3), &z, 27);
        let b = random_unimodular_vector(&mut ChaCha8Rng::seed_from_u64(3), &z, 27);
        assert_eq!(a, b);
        let e6 = RootSystem::parse("E6").unwrap();
        let z6 = Ring::residue(6).unwrap();
        let w = random_elementary_word(&mut ChaCha8Rng::seed_from_u64(1), &e6, &z6, 15);
        assert_eq!(w.len(), 15);
    }
}
