//! Ideals, Bézout certificates for unimodular rows, and maximal-ideal
//! enumeration on the rings where it is finite and computable.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::descriptor::{Ring, RingDescriptor};
use super::element::RingElement;
use super::numtheory::{prime_divisors_big, prime_divisors_u64, row_xgcd, strip_primes};
use super::RingError;

/// Witness that a row generates the unit ideal: `Σ coefficients[i]·row[i] = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutCertificate {
    pub coefficients: Vec<RingElement>,
}

impl BezoutCertificate {
    pub fn verifies(&self, row: &[RingElement]) -> bool {
        if row.is_empty() || row.len() != self.coefficients.len() {
            return false;
        }
        let mut acc = row[0].ring().zero();
        for (c, r) in self.coefficients.iter().zip(row) {
            match c.checked_mul(r).and_then(|t| acc.checked_add(&t)) {
                Ok(s) => acc = s,
                Err(_) => return false,
            }
        }
        acc.is_one()
    }
}

fn common_ring(row: &[RingElement]) -> Result<&Ring, RingError> {
    let first = row.first().ok_or(RingError::EmptyRow)?;
    for r in &row[1..] {
        first.same_ring(r)?;
    }
    Ok(first.ring())
}

/// Bézout certificate for a row, or `Ok(None)` when the row is not unimodular.
///
/// Exact over `Z`, `Z/n` and `Z[1/p]`. Over polynomial rings the constant
/// terms decide non-unimodularity (evaluation at zero is a ring map); a
/// certificate for the constants is promoted when the resulting combination
/// is a unit, otherwise the ring is reported unsupported.
pub fn unimodular_certificate(row: &[RingElement]) -> Result<Option<BezoutCertificate>, RingError> {
    let ring = common_ring(row)?.clone();
    if let Some((i, inv)) = row.iter().enumerate().find_map(|(i, r)| r.try_invert().map(|v| (i, v))) {
        let mut coefficients = vec![ring.zero(); row.len()];
        coefficients[i] = inv;
        return Ok(Some(BezoutCertificate { coefficients }));
    }
    let coefficients = match ring.descriptor() {
        RingDescriptor::Integers => {
            let lifts: Vec<BigInt> = row.iter().map(|r| r.integer_lift().expect("scalar")).collect();
            let (g, c) = row_xgcd(&lifts);
            if !g.is_one() {
                return Ok(None);
            }
            c.iter().map(|x| ring.from_bigint(x)).collect()
        }
        RingDescriptor::Residue(n) => {
            let mut lifts: Vec<BigInt> = row.iter().map(|r| r.integer_lift().expect("scalar")).collect();
            lifts.push(BigInt::from(*n));
            let (g, c) = row_xgcd(&lifts);
            if !g.is_one() {
                return Ok(None);
            }
            c[..row.len()].iter().map(|x| ring.from_bigint(x)).collect()
        }
        RingDescriptor::Localized(primes) => {
            let nums: Vec<BigInt> = row.iter().map(|r| r.integer_lift().expect("scalar")).collect();
            let (g, c) = row_xgcd(&nums);
            let (rest, _) = strip_primes(&g, primes);
            if g.is_zero() || !rest.abs().is_one() {
                return Ok(None);
            }
            let g_inv = ring.from_bigint(&g).try_invert().expect("S-unit");
            row.iter()
                .zip(&c)
                .map(|(r, ci)| {
                    // r = m / s, so (ci · s / g) · r = ci · m / g
                    let (_, exps) = r.as_fraction().expect("localized");
                    let s: BigInt = primes
                        .iter()
                        .zip(exps)
                        .map(|(p, e)| BigInt::from(*p).pow(*e))
                        .product();
                    &(&ring.from_bigint(ci) * &ring.from_bigint(&s)) * &g_inv
                })
                .collect()
        }
        RingDescriptor::Polynomial { .. } | RingDescriptor::Quotient { .. } => {
            let constants: Vec<RingElement> = row.iter().map(RingElement::constant_term).collect();
            let Some(base) = unimodular_certificate(&constants)? else {
                return Ok(None);
            };
            let lifted: Vec<RingElement> = base.coefficients.iter().map(|c| ring.constant(c)).collect();
            let mut s = ring.zero();
            for (c, r) in lifted.iter().zip(row) {
                s = &s + &(c * r);
            }
            let Some(s_inv) = s.try_invert() else {
                return Err(RingError::UnsupportedRing(format!(
                    "cannot decide unimodularity of this row over {ring}"
                )));
            };
            lifted.iter().map(|c| c * &s_inv).collect()
        }
    };
    let cert = BezoutCertificate { coefficients };
    debug_assert!(cert.verifies(row));
    Ok(Some(cert))
}

/// Finitely generated ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDescriptor {
    ring: Ring,
    generators: Vec<RingElement>,
}

impl IdealDescriptor {
    pub fn new(ring: &Ring, generators: Vec<RingElement>) -> Result<IdealDescriptor, RingError> {
        for g in &generators {
            if g.ring() != ring {
                return Err(RingError::DescriptorMismatch {
                    left: ring.to_string(),
                    right: g.ring().to_string(),
                });
            }
        }
        Ok(IdealDescriptor {
            ring: ring.clone(),
            generators,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[RingElement] {
        &self.generators
    }

    /// Ideal membership. Exact on scalar rings; on polynomial rings for
    /// ideals generated by monomials or by constants.
    pub fn contains(&self, x: &RingElement) -> Result<bool, RingError> {
        x.same_ring(&self.ring.zero())?;
        if x.is_zero() {
            return Ok(true);
        }
        let gens: Vec<&RingElement> = self.generators.iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Ok(false);
        }
        if self.ring.is_scalar() {
            let g = scalar_gcd(&self.ring, gens.iter().copied());
            return Ok(scalar_divides(&self.ring, &g, x));
        }
        let scalar_ring = self.ring.scalar_ring();
        // constants: x ∈ I iff every coefficient lies in the scalar ideal
        if gens.iter().all(|g| g.terms().iter().all(|(m, _)| m.is_one())) {
            let constants: Vec<RingElement> = gens.iter().map(|g| g.constant_term()).collect();
            let g = scalar_gcd(&scalar_ring, constants.iter());
            return Ok(x.terms().iter().all(|(_, c)| scalar_divides(&scalar_ring, &g, c)));
        }
        // monomials with unit coefficients
        let mut monos = Vec::new();
        for g in &gens {
            let terms = g.terms();
            if terms.len() != 1 || !terms[0].1.is_unit() {
                return Err(RingError::UnsupportedRing(format!(
                    "ideal membership over {} needs monomial or constant generators",
                    self.ring
                )));
            }
            monos.push(terms[0].0.clone());
        }
        Ok(x
            .terms()
            .iter()
            .all(|(m, _)| monos.iter().any(|g| g.divides(m))))
    }
}

/// Generator of the ideal spanned by scalars, normalized to an integer lift
/// for `Z`, `Z/n` (gcd with `n`) and `Z[1/p]` (prime-free part).
fn scalar_gcd<'a>(ring: &Ring, elems: impl Iterator<Item = &'a RingElement>) -> BigInt {
    let mut g = BigInt::zero();
    for e in elems {
        g = g.gcd(&e.integer_lift().expect("scalar"));
    }
    match ring.descriptor() {
        RingDescriptor::Residue(n) => g.gcd(&BigInt::from(*n)),
        RingDescriptor::Localized(primes) => strip_primes(&g, primes).0.abs(),
        _ => g,
    }
}

fn scalar_divides(ring: &Ring, g: &BigInt, x: &RingElement) -> bool {
    let lift = x.integer_lift().expect("scalar");
    if g.is_zero() {
        return lift.is_zero();
    }
    let lift = match ring.descriptor() {
        RingDescriptor::Localized(primes) => strip_primes(&lift, primes).0,
        _ => lift,
    };
    lift.is_multiple_of(g)
}

/// Maximal ideals of `Z`, `Z/n` or `Z[1/p]` containing a given ideal,
/// labelled by their prime generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MaximalIdeals {
    /// Every maximal ideal (the zero ideal of an infinite ring).
    All,
    Finite(Vec<u64>),
}

impl MaximalIdeals {
    pub fn is_subset_of(&self, other: &MaximalIdeals) -> bool {
        match (self, other) {
            (_, MaximalIdeals::All) => true,
            (MaximalIdeals::All, MaximalIdeals::Finite(_)) => false,
            (MaximalIdeals::Finite(a), MaximalIdeals::Finite(b)) => a.iter().all(|p| b.contains(p)),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        match self {
            MaximalIdeals::All => vec!["(all)".to_string()],
            MaximalIdeals::Finite(ps) => ps.iter().map(|p| format!("({p})")).collect(),
        }
    }
}

impl fmt::Display for MaximalIdeals {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(", "))
    }
}

pub fn maximal_ideals_containing(ideal: &IdealDescriptor) -> Result<MaximalIdeals, RingError> {
    let ring = ideal.ring();
    match ring.descriptor() {
        RingDescriptor::Integers | RingDescriptor::Localized(_) => {
            let g = scalar_gcd(ring, ideal.generators().iter());
            if g.is_zero() {
                return Ok(MaximalIdeals::All);
            }
            let primes = prime_divisors_big(&g).ok_or_else(|| {
                RingError::UnsupportedRing(format!("generators too large to factor over {ring}"))
            })?;
            Ok(MaximalIdeals::Finite(primes))
        }
        RingDescriptor::Residue(n) => {
            let primes = prime_divisors_u64(*n)
                .into_iter()
                .filter(|p| {
                    ideal
                        .generators()
                        .iter()
                        .all(|g| g.as_residue().expect("residue") % p == 0)
                })
                .collect();
            Ok(MaximalIdeals::Finite(primes))
        }
        _ => Err(RingError::UnsupportedRing(format!(
            "maximal ideals of {ring} are not enumerable"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(ring: &Ring, xs: &[i64]) -> Vec<RingElement> {
        xs.iter().map(|&x| ring.int(x)).collect()
    }

    #[test]
    fn integer_certificates() {
        let z = Ring::integers();
        let row = ints(&z, &[6, 10, 15]);
        let cert = unimodular_certificate(&row).unwrap().unwrap();
        assert!(cert.verifies(&row));
        assert_eq!(
            unimodular_certificate(&ints(&z, &[1, 0, 0])).unwrap().unwrap().coefficients,
            ints(&z, &[1, 0, 0])
        );
        assert!(unimodular_certificate(&ints(&z, &[6, 10])).unwrap().is_none());
        assert!(matches!(unimodular_certificate(&[]), Err(RingError::EmptyRow)));
    }

    #[test]
    fn residue_certificates() {
        let z6 = Ring::residue(6).unwrap();
        let row = ints(&z6, &[2, 3]);
        let cert = unimodular_certificate(&row).unwrap().unwrap();
        assert!(cert.verifies(&row));
        assert!(unimodular_certificate(&ints(&z6, &[2, 4])).unwrap().is_none());
    }

    #[test]
    fn localized_certificates() {
        let zh = Ring::localized(&[2]).unwrap();
        let row = vec![zh.fraction(3, 4).unwrap(), zh.int(10)];
        let cert = unimodular_certificate(&row).unwrap().unwrap();
        assert!(cert.verifies(&row));
        // (6, 10) generates (2) = unit ideal in Z[1/2]
        let row = ints(&zh, &[6, 10]);
        assert!(unimodular_certificate(&row).unwrap().unwrap().verifies(&row));
        assert!(unimodular_certificate(&ints(&zh, &[6, 9])).unwrap().is_none());
    }

    #[test]
    fn polynomial_certificates() {
        let r = Ring::parse("quot(poly(Z; xi, zeta); xi^2)").unwrap();
        let row = vec![
            r.parse_element("2 + xi*zeta").unwrap(),
            r.parse_element("3 + xi").unwrap(),
        ];
        let cert = unimodular_certificate(&row).unwrap().unwrap();
        assert!(cert.verifies(&row));
        let row = vec![r.parse_element("2 + zeta").unwrap(), r.parse_element("4").unwrap()];
        assert!(unimodular_certificate(&row).unwrap().is_none());
        let row = vec![r.parse_element("zeta").unwrap(), r.parse_element("1 - zeta").unwrap()];
        assert!(matches!(unimodular_certificate(&row), Err(RingError::UnsupportedRing(_))));
    }

    #[test]
    fn maximal_ideal_examples() {
        let z = Ring::integers();
        let i = IdealDescriptor::new(&z, ints(&z, &[6, 10])).unwrap();
        assert_eq!(maximal_ideals_containing(&i).unwrap(), MaximalIdeals::Finite(vec![2]));
        let i = IdealDescriptor::new(&z, ints(&z, &[1])).unwrap();
        assert_eq!(maximal_ideals_containing(&i).unwrap(), MaximalIdeals::Finite(vec![]));
        let z6 = Ring::residue(6).unwrap();
        let i = IdealDescriptor::new(&z6, ints(&z6, &[0])).unwrap();
        assert_eq!(maximal_ideals_containing(&i).unwrap(), MaximalIdeals::Finite(vec![2, 3]));
        let i = IdealDescriptor::new(&z, ints(&z, &[0, 0])).unwrap();
        assert_eq!(maximal_ideals_containing(&i).unwrap(), MaximalIdeals::All);
        let zh = Ring::localized(&[2]).unwrap();
        let i = IdealDescriptor::new(&zh, ints(&zh, &[12, 18])).unwrap();
        assert_eq!(maximal_ideals_containing(&i).unwrap(), MaximalIdeals::Finite(vec![3]));
    }

    #[test]
    fn membership() {
        let r = Ring::parse("quot(poly(Z[1/2]; xi, zeta); xi^2)").unwrap();
        let i = IdealDescriptor::new(&r, vec![r.var("xi").unwrap()]).unwrap();
        assert!(i.contains(&r.parse_element("-zeta^2*xi").unwrap()).unwrap());
        assert!(!i.contains(&r.parse_element("xi + zeta").unwrap()).unwrap());
        let z9 = Ring::residue(9).unwrap();
        let i = IdealDescriptor::new(&z9, vec![z9.int(3)]).unwrap();
        assert!(i.contains(&z9.int(6)).unwrap());
        assert!(!i.contains(&z9.int(4)).unwrap());
        let z = Ring::integers();
        let i = IdealDescriptor::new(&z, ints(&z, &[4, 6])).unwrap();
        assert!(i.contains(&z.int(-10)).unwrap() && !i.contains(&z.int(3)).unwrap());
    }
}
