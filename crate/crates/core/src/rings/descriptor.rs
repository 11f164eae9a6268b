//! Ring descriptors and their textual grammar.
//!
//! ```text
//! Z                                   integers
//! Z/6                                 residues modulo 6
//! Z[1/2]  Z[1/2,1/3]                  integers with the listed primes inverted
//! poly(Z[1/2]; xi, zeta)              polynomials over a scalar ring
//! quot(poly(Z[1/2]; xi, zeta); xi^2)  quotient by variable-power relations
//! ```

use std::fmt;
use std::sync::Arc;

use super::numtheory::is_prime_u64;
use super::RingError;

/// Description of one of the supported effective commutative rings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Integers,
    /// `Z/n` with `n >= 2`.
    Residue(u64),
    /// `Z[1/p, ...]`; primes sorted and distinct.
    Localized(Vec<u64>),
    /// Polynomials over a scalar ring (`Integers`, `Residue` or `Localized`).
    Polynomial {
        base: Box<RingDescriptor>,
        variables: Vec<String>,
    },
    /// A polynomial ring modulo relations `variable^k = 0`, `k >= 2`.
    Quotient {
        base: Box<RingDescriptor>,
        /// `(variable index, power)`, sorted by variable index.
        relations: Vec<(usize, u32)>,
    },
}

impl RingDescriptor {
    pub fn is_scalar(&self) -> bool {
        matches!(
            self,
            RingDescriptor::Integers | RingDescriptor::Residue(_) | RingDescriptor::Localized(_)
        )
    }

    fn validate(&self) -> Result<(), RingError> {
        match self {
            RingDescriptor::Integers => Ok(()),
            RingDescriptor::Residue(n) => {
                if *n < 2 {
                    Err(RingError::InvalidDescriptor(format!("modulus {n} is below 2")))
                } else {
                    Ok(())
                }
            }
            RingDescriptor::Localized(primes) => {
                if primes.is_empty() {
                    return Err(RingError::InvalidDescriptor("no inverted primes".into()));
                }
                if primes.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(RingError::InvalidDescriptor(
                        "inverted primes must be sorted and distinct".into(),
                    ));
                }
                if let Some(p) = primes.iter().find(|p| !is_prime_u64(**p)) {
                    return Err(RingError::InvalidDescriptor(format!("{p} is not prime")));
                }
                Ok(())
            }
            RingDescriptor::Polynomial { base, variables } => {
                if !base.is_scalar() {
                    return Err(RingError::UnsupportedRing(
                        "polynomial coefficients must come from Z, Z/n or Z[1/p]".into(),
                    ));
                }
                base.validate()?;
                if variables.is_empty() {
                    return Err(RingError::InvalidDescriptor("no variables".into()));
                }
                for (i, v) in variables.iter().enumerate() {
                    let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                        && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                    if !ok {
                        return Err(RingError::InvalidDescriptor(format!("bad variable name {v:?}")));
                    }
                    if variables[..i].contains(v) {
                        return Err(RingError::InvalidDescriptor(format!("duplicate variable {v}")));
                    }
                }
                Ok(())
            }
            RingDescriptor::Quotient { base, relations } => {
                let RingDescriptor::Polynomial { variables, .. } = base.as_ref() else {
                    return Err(RingError::InvalidDescriptor(
                        "quotients are taken of polynomial rings".into(),
                    ));
                };
                base.validate()?;
                if relations.is_empty() {
                    return Err(RingError::InvalidDescriptor("no relations".into()));
                }
                for w in relations.windows(2) {
                    if w[0].0 >= w[1].0 {
                        return Err(RingError::InvalidDescriptor(
                            "at most one relation per variable, in variable order".into(),
                        ));
                    }
                }
                for &(var, k) in relations {
                    if var >= variables.len() {
                        return Err(RingError::InvalidDescriptor("relation on unknown variable".into()));
                    }
                    if k < 2 {
                        return Err(RingError::InvalidDescriptor(format!(
                            "relation {}^{k} must have power at least 2",
                            variables[var]
                        )));
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => write!(f, "Z"),
            RingDescriptor::Residue(n) => write!(f, "Z/{n}"),
            RingDescriptor::Localized(primes) => {
                let inner: Vec<String> = primes.iter().map(|p| format!("1/{p}")).collect();
                write!(f, "Z[{}]", inner.join(","))
            }
            RingDescriptor::Polynomial { base, variables } => {
                write!(f, "poly({base}; {})", variables.join(", "))
            }
            RingDescriptor::Quotient { base, relations } => {
                let RingDescriptor::Polynomial { variables, .. } = base.as_ref() else {
                    unreachable!("validated quotient base");
                };
                let rels: Vec<String> = relations
                    .iter()
                    .map(|(v, k)| format!("{}^{k}", variables[*v]))
                    .collect();
                write!(f, "quot({base}; {})", rels.join(", "))
            }
        }
    }
}

/// Shared handle on a validated [`RingDescriptor`].
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingDescriptor>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Ring {
    pub fn new(descriptor: RingDescriptor) -> Result<Ring, RingError> {
        descriptor.validate()?;
        Ok(Ring(Arc::new(descriptor)))
    }

    pub fn integers() -> Ring {
        Ring(Arc::new(RingDescriptor::Integers))
    }

    pub fn residue(modulus: u64) -> Result<Ring, RingError> {
        Ring::new(RingDescriptor::Residue(modulus))
    }

    pub fn localized(primes: &[u64]) -> Result<Ring, RingError> {
        let mut primes = primes.to_vec();
        primes.sort_unstable();
        primes.dedup();
        Ring::new(RingDescriptor::Localized(primes))
    }

    pub fn polynomial(base: &Ring, variables: &[&str]) -> Result<Ring, RingError> {
        Ring::new(RingDescriptor::Polynomial {
            base: Box::new(base.descriptor().clone()),
            variables: variables.iter().map(|s| s.to_string()).collect(),
        })
    }

    /// Quotient of a polynomial ring by `var^k = 0` for each listed pair.
    pub fn quotient(poly: &Ring, relations: &[(&str, u32)]) -> Result<Ring, RingError> {
        let vars = poly.variables();
        let mut rels = Vec::new();
        for (name, k) in relations {
            let idx = vars
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| RingError::InvalidDescriptor(format!("unknown variable {name}")))?;
            rels.push((idx, *k));
        }
        rels.sort_unstable();
        Ring::new(RingDescriptor::Quotient {
            base: Box::new(poly.descriptor().clone()),
            relations: rels,
        })
    }

    pub fn parse(text: &str) -> Result<Ring, RingError> {
        let mut parser = Parser { src: text, pos: 0 };
        let desc = parser.descriptor()?;
        parser.skip_ws();
        if parser.pos != text.len() {
            return Err(RingError::Parse(format!("trailing input in ring {text:?}")));
        }
        Ring::new(desc)
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.0
    }

    /// The coefficient ring: the ring itself for scalar rings.
    pub fn scalar_descriptor(&self) -> &RingDescriptor {
        match self.descriptor() {
            RingDescriptor::Polynomial { base, .. } => base,
            RingDescriptor::Quotient { base, .. } => match base.as_ref() {
                RingDescriptor::Polynomial { base, .. } => base,
                _ => unreachable!("validated quotient base"),
            },
            d => d,
        }
    }

    pub fn scalar_ring(&self) -> Ring {
        if self.is_scalar() {
            self.clone()
        } else {
            Ring(Arc::new(self.scalar_descriptor().clone()))
        }
    }

    pub fn is_scalar(&self) -> bool {
        self.descriptor().is_scalar()
    }

    pub fn variables(&self) -> &[String] {
        match self.descriptor() {
            RingDescriptor::Polynomial { variables, .. } => variables,
            RingDescriptor::Quotient { base, .. } => match base.as_ref() {
                RingDescriptor::Polynomial { variables, .. } => variables,
                _ => unreachable!("validated quotient base"),
            },
            _ => &[],
        }
    }

    /// Per variable, the power at which it vanishes (if any).
    pub fn nilpotency_caps(&self) -> Vec<Option<u32>> {
        let mut caps = vec![None; self.variables().len()];
        if let RingDescriptor::Quotient { relations, .. } = self.descriptor() {
            for &(v, k) in relations {
                caps[v] = Some(k);
            }
        }
        caps
    }

    /// The underlying polynomial ring of a quotient (or the ring itself).
    pub fn polynomial_cover(&self) -> Ring {
        match self.descriptor() {
            RingDescriptor::Quotient { base, .. } => Ring(Arc::new(base.as_ref().clone())),
            _ => self.clone(),
        }
    }

    pub fn inverted_primes(&self) -> &[u64] {
        match self.scalar_descriptor() {
            RingDescriptor::Localized(p) => p,
            _ => &[],
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().map_or(0, char::len_utf8);
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), RingError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {token:?}")))
        }
    }

    fn error(&self, msg: &str) -> RingError {
        RingError::Parse(format!("{msg} at offset {} in {:?}", self.pos, self.src))
    }

    fn number(&mut self) -> Result<u64, RingError> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.chars().take_while(char::is_ascii_digit).count();
        if len == 0 {
            return Err(self.error("expected a number"));
        }
        let n = rest[..len].parse().map_err(|_| self.error("number out of range"))?;
        self.pos += len;
        Ok(n)
    }

    fn ident(&mut self) -> Result<String, RingError> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .chars()
            .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
            .count();
        if len == 0 {
            return Err(self.error("expected a variable name"));
        }
        self.pos += len;
        Ok(rest[..len].to_string())
    }

    fn descriptor(&mut self) -> Result<RingDescriptor, RingError> {
        if self.eat("poly(") {
            let base = self.descriptor()?;
            self.expect(";")?;
            let mut variables = vec![self.ident()?];
            while self.eat(",") {
                variables.push(self.ident()?);
            }
            self.expect(")")?;
            return Ok(RingDescriptor::Polynomial {
                base: Box::new(base),
                variables,
            });
        }
        if self.eat("quot(") {
            let base = self.descriptor()?;
            let RingDescriptor::Polynomial { variables, .. } = &base else {
                return Err(self.error("quot(...) needs a poly(...) base"));
            };
            let variables = variables.clone();
            self.expect(";")?;
            let mut relations = Vec::new();
            loop {
                let name = self.ident()?;
                self.expect("^")?;
                let k = self.number()?;
                let idx = variables
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| self.error(&format!("unknown variable {name}")))?;
                let k = u32::try_from(k).map_err(|_| self.error("power out of range"))?;
                relations.push((idx, k));
                if !self.eat(",") {
                    break;
                }
            }
            self.expect(")")?;
            relations.sort_unstable();
            return Ok(RingDescriptor::Quotient {
                base: Box::new(base),
                relations,
            });
        }
        self.expect("Z")?;
        if self.eat("/") {
            return Ok(RingDescriptor::Residue(self.number()?));
        }
        if self.eat("[") {
            let mut primes = Vec::new();
            loop {
                self.expect("1")?;
                self.expect("/")?;
                primes.push(self.number()?);
                if !self.eat(",") {
                    break;
                }
            }
            self.expect("]")?;
            primes.sort_unstable();
            primes.dedup();
            return Ok(RingDescriptor::Localized(primes));
        }
        Ok(RingDescriptor::Integers)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_round_trips() {
        for text in [
            "Z",
            "Z/6",
            "Z[1/2]",
            "Z[1/2,1/3]",
            "poly(Z[1/2]; xi, zeta)",
            "quot(poly(Z[1/2]; xi, zeta); xi^2)",
            "quot(poly(Z/9; a, b, c); a^2, c^3)",
        ] {
            let ring = Ring::parse(text).unwrap();
            assert_eq!(ring.to_string(), text);
        }
    }

    #[test]
    fn rejects_bad_descriptors() {
        assert!(Ring::parse("Z/1").is_err());
        assert!(Ring::parse("Z/0").is_err());
        assert!(Ring::parse("Z[1/4]").is_err());
        assert!(Ring::parse("quot(poly(Z; x); x^1)").is_err());
        assert!(Ring::parse("quot(poly(Z; x); y^2)").is_err());
        assert!(Ring::parse("poly(poly(Z; x); y)").is_err());
        assert!(Ring::parse("poly(Z; x, x)").is_err());
        assert!(Ring::parse("Q").is_err());
    }

    #[test]
    fn quotient_helpers() {
        let r = Ring::parse("quot(poly(Z[1/2]; xi, zeta); xi^2)").unwrap();
        assert_eq!(r.variables(), ["xi", "zeta"]);
        assert_eq!(r.nilpotency_caps(), vec![Some(2), None]);
        assert_eq!(r.scalar_ring(), Ring::localized(&[2]).unwrap());
        assert_eq!(r.inverted_primes(), &[2]);
    }
}
