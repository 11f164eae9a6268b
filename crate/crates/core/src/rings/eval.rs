//! Evaluation homomorphisms out of polynomial rings.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::descriptor::{Ring, RingDescriptor};
use super::element::RingElement;
use super::RingError;

/// Variable assignment `name ↦ value` into a common target ring.
#[derive(Clone, Debug)]
pub struct Assignment {
    target: Ring,
    values: BTreeMap<String, RingElement>,
}

impl Assignment {
    pub fn new(target: &Ring, pairs: &[(&str, RingElement)]) -> Result<Assignment, RingError> {
        let mut values = BTreeMap::new();
        for (name, value) in pairs {
            if value.ring() != target {
                return Err(RingError::DescriptorMismatch {
                    left: target.to_string(),
                    right: value.ring().to_string(),
                });
            }
            values.insert(name.to_string(), value.clone());
        }
        Ok(Assignment {
            target: target.clone(),
            values,
        })
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn get(&self, name: &str) -> Option<&RingElement> {
        self.values.get(name)
    }
}

/// Checks that `source → target` given by the assignment is a well-defined
/// ring map: coefficients map, inverted primes stay units, and every power
/// relation `v^k = 0` of a quotient source still holds for the image of `v`.
pub fn check_homomorphism(source: &Ring, assignment: &Assignment) -> Result<(), RingError> {
    let target = assignment.target();
    match source.scalar_descriptor() {
        RingDescriptor::Integers => {}
        RingDescriptor::Localized(primes) => {
            for &p in primes {
                if target.int(p as i64).try_invert().is_none() {
                    return Err(if p == 2 {
                        RingError::TwoNotInvertible
                    } else {
                        RingError::PrimeNotInvertible(p)
                    });
                }
            }
        }
        RingDescriptor::Residue(n) => {
            if !target.from_bigint(&BigInt::from(*n)).is_zero() {
                return Err(RingError::UnsupportedRing(format!(
                    "Z/{n} does not map to {target}"
                )));
            }
        }
        _ => unreachable!("scalar descriptor"),
    }
    let caps = source.nilpotency_caps();
    for (name, cap) in source.variables().iter().zip(&caps) {
        let value = assignment
            .get(name)
            .ok_or_else(|| RingError::InvalidArgument(format!("no value assigned to {name}")))?;
        if let Some(k) = cap {
            if !value.pow(*k).is_zero() {
                return Err(RingError::RelationNotPreserved(format!(
                    "{name}^{k} = 0 but ({value})^{k} ≠ 0 in {target}"
                )));
            }
        }
    }
    Ok(())
}

/// Maps a scalar of `Z`, `Z/n` or `Z[1/p]` into `target`.
pub fn map_scalar(scalar: &RingElement, target: &Ring) -> Result<RingElement, RingError> {
    match scalar.as_fraction() {
        Some((num, exps)) => {
            let mut acc = target.from_bigint(num);
            for (&p, &e) in scalar.ring().inverted_primes().iter().zip(exps) {
                if e == 0 {
                    continue;
                }
                let inv = target.int(p as i64).try_invert().ok_or(if p == 2 {
                    RingError::TwoNotInvertible
                } else {
                    RingError::PrimeNotInvertible(p)
                })?;
                acc = &acc * &inv.pow(e);
            }
            Ok(acc)
        }
        None => Ok(target.from_bigint(&scalar.integer_lift().expect("scalar"))),
    }
}

/// Image of `e` under the evaluation map determined by `assignment`.
pub fn evaluate_hom(e: &RingElement, assignment: &Assignment) -> Result<RingElement, RingError> {
    let source = e.ring();
    check_homomorphism(source, assignment)?;
    let target = assignment.target();
    if source.is_scalar() {
        return map_scalar(e, target);
    }
    let vars = source.variables();
    let values: Vec<&RingElement> = vars
        .iter()
        .map(|v| assignment.get(v).expect("checked above"))
        .collect();
    let mut acc = target.zero();
    for (m, c) in e.terms() {
        let mut term = map_scalar(&c, target)?;
        for (value, &exp) in values.iter().zip(m.exponents()) {
            if exp > 0 {
                term = &term * &value.pow(exp);
            }
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn src() -> Ring {
        Ring::parse("poly(Z[1/2]; xi, zeta)").unwrap()
    }

    #[test]
    fn evaluates_into_residues() {
        let z9 = Ring::residue(9).unwrap();
        let a = Assignment::new(&z9, &[("xi", z9.int(2)), ("zeta", z9.int(5))]).unwrap();
        let e = src().parse_element("xi*zeta").unwrap();
        assert_eq!(evaluate_hom(&e, &a).unwrap(), z9.int(1));

        let a = Assignment::new(&z9, &[("xi", z9.int(2)), ("zeta", z9.int(1))]).unwrap();
        let e = src().parse_element("1 + zeta*xi/2").unwrap();
        assert_eq!(evaluate_hom(&e, &a).unwrap(), z9.int(2));
    }

    #[test]
    fn zero_assignment() {
        let z = Ring::localized(&[2]).unwrap();
        let a = Assignment::new(&z, &[("xi", z.zero()), ("zeta", z.int(3))]).unwrap();
        assert!(evaluate_hom(&src().var("xi").unwrap(), &a).unwrap().is_zero());
    }

    #[test]
    fn two_must_be_invertible() {
        let z6 = Ring::residue(6).unwrap();
        let a = Assignment::new(&z6, &[("xi", z6.int(1)), ("zeta", z6.int(1))]).unwrap();
        let e = src().parse_element("xi").unwrap();
        assert!(matches!(evaluate_hom(&e, &a), Err(RingError::TwoNotInvertible)));
    }

    #[test]
    fn quotient_relations_must_survive() {
        let q = Ring::parse("quot(poly(Z[1/2]; xi, zeta); xi^2)").unwrap();
        let z9 = Ring::residue(9).unwrap();
        let e = q.parse_element("1 + xi*zeta").unwrap();
        let ok = Assignment::new(&z9, &[("xi", z9.int(3)), ("zeta", z9.int(4))]).unwrap();
        assert_eq!(evaluate_hom(&e, &ok).unwrap(), z9.int(4));
        let bad = Assignment::new(&z9, &[("xi", z9.int(2)), ("zeta", z9.int(4))]).unwrap();
        assert!(matches!(evaluate_hom(&e, &bad), Err(RingError::RelationNotPreserved(_))));
    }
}
