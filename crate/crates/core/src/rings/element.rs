//! Ring elements in canonical form and their arithmetic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::descriptor::{Ring, RingDescriptor};
use super::RingError;

/// Exponent vector in the declared variable order.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of the first variable, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub(crate) Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `self * other`, or `None` when a nilpotency relation kills it.
    fn times(&self, other: &Monomial, caps: &[Option<u32>]) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.0.len());
        for (i, (a, b)) in self.0.iter().zip(&other.0).enumerate() {
            let e = a + b;
            if caps[i].is_some_and(|k| e >= k) {
                return None;
            }
            exps.push(e);
        }
        Some(Monomial(exps))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Like [`Monomial::render`] but omits unit exponents: `xi*zeta^2`.
    pub(crate) fn render_short(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(vars)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    pub(crate) fn render(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(vars)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| format!("{v}^{e}"))
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical payload. Which variants are legal depends on the descriptor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Value {
    Int(BigInt),
    /// Residue in `[0, n)`.
    Res(u64),
    /// `num / Π p_i^{e_i}`, reduced: `e_i > 0` implies `p_i ∤ num`; zero has no exponents.
    Loc(BigInt, Vec<u32>),
    /// Nonzero coefficients only, keyed by monomial.
    Poly(BTreeMap<Monomial, Value>),
}

// ---- scalar arithmetic -------------------------------------------------------

pub(crate) fn scalar_from_int(d: &RingDescriptor, n: &BigInt) -> Value {
    match d {
        RingDescriptor::Integers => Value::Int(n.clone()),
        RingDescriptor::Residue(m) => {
            Value::Res(n.mod_floor(&BigInt::from(*m)).to_u64().expect("residue fits"))
        }
        RingDescriptor::Localized(primes) => loc_normalize(primes, n.clone(), vec![0; primes.len()]),
        _ => unreachable!("scalar descriptor expected"),
    }
}

fn loc_normalize(primes: &[u64], mut num: BigInt, mut exps: Vec<u32>) -> Value {
    if num.is_zero() {
        return Value::Loc(num, vec![0; primes.len()]);
    }
    for (i, &p) in primes.iter().enumerate() {
        let p = BigInt::from(p);
        while exps[i] > 0 {
            let (q, r) = num.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            num = q;
            exps[i] -= 1;
        }
    }
    Value::Loc(num, exps)
}

pub(crate) fn scalar_is_zero(v: &Value) -> bool {
    match v {
        Value::Int(n) | Value::Loc(n, _) => n.is_zero(),
        Value::Res(r) => *r == 0,
        Value::Poly(terms) => terms.is_empty(),
    }
}

fn scalar_is_one(v: &Value) -> bool {
    match v {
        Value::Int(n) => n.is_one(),
        Value::Res(r) => *r == 1,
        Value::Loc(n, e) => n.is_one() && e.iter().all(|&x| x == 0),
        Value::Poly(_) => false,
    }
}

pub(crate) fn scalar_add(d: &RingDescriptor, a: &Value, b: &Value) -> Value {
    match (d, a, b) {
        (RingDescriptor::Integers, Value::Int(x), Value::Int(y)) => Value::Int(x + y),
        (RingDescriptor::Residue(m), Value::Res(x), Value::Res(y)) => {
            Value::Res(((*x as u128 + *y as u128) % *m as u128) as u64)
        }
        (RingDescriptor::Localized(primes), Value::Loc(x, ex), Value::Loc(y, ey)) => {
            let mut exps = Vec::with_capacity(primes.len());
            let mut xs = x.clone();
            let mut ys = y.clone();
            for (i, &p) in primes.iter().enumerate() {
                let e = ex[i].max(ey[i]);
                exps.push(e);
                xs *= BigInt::from(p).pow(e - ex[i]);
                ys *= BigInt::from(p).pow(e - ey[i]);
            }
            loc_normalize(primes, xs + ys, exps)
        }
        _ => unreachable!("scalar payload does not match descriptor"),
    }
}

pub(crate) fn scalar_mul(d: &RingDescriptor, a: &Value, b: &Value) -> Value {
    match (d, a, b) {
        (RingDescriptor::Integers, Value::Int(x), Value::Int(y)) => Value::Int(x * y),
        (RingDescriptor::Residue(m), Value::Res(x), Value::Res(y)) => {
            Value::Res((*x as u128 * *y as u128 % *m as u128) as u64)
        }
        (RingDescriptor::Localized(primes), Value::Loc(x, ex), Value::Loc(y, ey)) => {
            let exps = ex.iter().zip(ey).map(|(a, b)| a + b).collect();
            loc_normalize(primes, x * y, exps)
        }
        _ => unreachable!("scalar payload does not match descriptor"),
    }
}

pub(crate) fn scalar_neg(d: &RingDescriptor, a: &Value) -> Value {
    match (d, a) {
        (RingDescriptor::Integers, Value::Int(x)) => Value::Int(-x),
        (RingDescriptor::Residue(m), Value::Res(x)) => Value::Res(if *x == 0 { 0 } else { m - x }),
        (RingDescriptor::Localized(_), Value::Loc(x, e)) => Value::Loc(-x, e.clone()),
        _ => unreachable!("scalar payload does not match descriptor"),
    }
}

/// Inverse of a scalar, if it is a unit.
pub(crate) fn scalar_invert(d: &RingDescriptor, a: &Value) -> Option<Value> {
    match (d, a) {
        (RingDescriptor::Integers, Value::Int(x)) => {
            if x.abs().is_one() {
                Some(Value::Int(x.clone()))
            } else {
                None
            }
        }
        (RingDescriptor::Residue(m), Value::Res(x)) => {
            super::numtheory::mod_inverse_u64(*x, *m).map(Value::Res)
        }
        (RingDescriptor::Localized(primes), Value::Loc(x, e)) => {
            let (rest, f) = super::numtheory::strip_primes(x, primes);
            if !rest.abs().is_one() {
                return None;
            }
            // x = ±Π p^f, value = x / Π p^e, inverse = ±Π p^(e-f)
            let mut num = rest;
            let mut exps = vec![0u32; primes.len()];
            for (i, &p) in primes.iter().enumerate() {
                if e[i] >= f[i] {
                    num *= BigInt::from(p).pow(e[i] - f[i]);
                } else {
                    exps[i] = f[i] - e[i];
                }
            }
            Some(loc_normalize(primes, num, exps))
        }
        _ => None,
    }
}

/// Whether a scalar is nilpotent.
pub(crate) fn scalar_is_nilpotent(d: &RingDescriptor, a: &Value) -> bool {
    match (d, a) {
        (RingDescriptor::Residue(m), Value::Res(x)) => {
            let rad: u64 = super::numtheory::prime_divisors_u64(*m).iter().product();
            x % rad == 0
        }
        _ => scalar_is_zero(a),
    }
}

// ---- polynomial arithmetic ---------------------------------------------------

fn poly_add(d: &RingDescriptor, a: &BTreeMap<Monomial, Value>, b: &BTreeMap<Monomial, Value>) -> Value {
    let mut out = a.clone();
    for (m, c) in b {
        match out.get_mut(m) {
            Some(existing) => {
                let s = scalar_add(d, existing, c);
                if scalar_is_zero(&s) {
                    out.remove(m);
                } else {
                    *existing = s;
                }
            }
            None => {
                out.insert(m.clone(), c.clone());
            }
        }
    }
    Value::Poly(out)
}

fn poly_mul(
    d: &RingDescriptor,
    caps: &[Option<u32>],
    a: &BTreeMap<Monomial, Value>,
    b: &BTreeMap<Monomial, Value>,
) -> Value {
    let mut out: BTreeMap<Monomial, Value> = BTreeMap::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let Some(m) = ma.times(mb, caps) else { continue };
            let c = scalar_mul(d, ca, cb);
            if scalar_is_zero(&c) {
                continue;
            }
            match out.get_mut(&m) {
                Some(existing) => *existing = scalar_add(d, existing, &c),
                None => {
                    out.insert(m, c);
                }
            }
        }
    }
    out.retain(|_, c| !scalar_is_zero(c));
    Value::Poly(out)
}

// ---- the element type --------------------------------------------------------

/// An element of a described ring, always in canonical form.
///
/// Equality is equality of canonical payloads (and of rings).
#[derive(Clone, Debug)]
pub struct RingElement {
    pub(crate) ring: Ring,
    pub(crate) value: Value,
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.ring == other.ring
    }
}

impl Eq for RingElement {}

/// The four ring operations exposed through [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

/// `a op b`; for [`ArithOp::Neg`] the second operand is ignored apart from
/// the descriptor check.
pub fn arith(op: ArithOp, a: &RingElement, b: &RingElement) -> Result<RingElement, RingError> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Neg => {
            a.same_ring(b)?;
            Ok(-a)
        }
    }
}

impl Ring {
    pub fn from_bigint(&self, n: &BigInt) -> RingElement {
        let value = if self.is_scalar() {
            scalar_from_int(self.descriptor(), n)
        } else {
            let c = scalar_from_int(self.scalar_descriptor(), n);
            let mut terms = BTreeMap::new();
            if !scalar_is_zero(&c) {
                terms.insert(Monomial::one(self.variables().len()), c);
            }
            Value::Poly(terms)
        };
        RingElement {
            ring: self.clone(),
            value,
        }
    }

    pub fn int(&self, n: i64) -> RingElement {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn zero(&self) -> RingElement {
        self.int(0)
    }

    pub fn one(&self) -> RingElement {
        self.int(1)
    }

    /// The generator named `name` of a polynomial or quotient ring.
    pub fn var(&self, name: &str) -> Result<RingElement, RingError> {
        let vars = self.variables();
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| RingError::Parse(format!("no variable {name} in {self}")))?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        Ok(self.monomial(Monomial(exps), &self.scalar_ring().one()))
    }

    /// `coefficient * monomial`, reduced by the relations.
    pub fn monomial(&self, m: Monomial, coefficient: &RingElement) -> RingElement {
        assert_eq!(m.0.len(), self.variables().len(), "monomial arity");
        let caps = self.nilpotency_caps();
        let mut terms = BTreeMap::new();
        let killed = m.0.iter().zip(&caps).any(|(e, c)| c.is_some_and(|k| *e >= k));
        if !killed && !scalar_is_zero(&coefficient.value) {
            terms.insert(m, coefficient.value.clone());
        }
        RingElement {
            ring: self.clone(),
            value: Value::Poly(terms),
        }
    }

    /// Embeds a scalar of [`Ring::scalar_ring`] as a constant.
    pub fn constant(&self, scalar: &RingElement) -> RingElement {
        if self.is_scalar() {
            return scalar.clone();
        }
        self.monomial(Monomial::one(self.variables().len()), scalar)
    }

    /// Residue lift / integer / numerator-denominator constructor for `Z[1/p]`.
    pub fn fraction(&self, numerator: i64, denominator: i64) -> Result<RingElement, RingError> {
        let den = self.int(denominator);
        let inv = den
            .try_invert()
            .ok_or_else(|| RingError::Parse(format!("{denominator} is not invertible in {self}")))?;
        Ok(&self.int(numerator) * &inv)
    }
}

impl RingElement {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        scalar_is_zero(&self.value)
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Poly(terms) => {
                terms.len() == 1
                    && terms
                        .iter()
                        .next()
                        .is_some_and(|(m, c)| m.is_one() && scalar_is_one(c))
            }
            v => scalar_is_one(v),
        }
    }

    pub(crate) fn same_ring(&self, other: &RingElement) -> Result<(), RingError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(RingError::DescriptorMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            })
        }
    }

    fn wrap(&self, value: Value) -> RingElement {
        RingElement {
            ring: self.ring.clone(),
            value,
        }
    }

    pub fn checked_add(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.same_ring(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Poly(a), Value::Poly(b)) => poly_add(self.ring.scalar_descriptor(), a, b),
            (a, b) => scalar_add(self.ring.descriptor(), a, b),
        };
        Ok(self.wrap(value))
    }

    pub fn checked_sub(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.same_ring(other)?;
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.same_ring(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Poly(a), Value::Poly(b)) => poly_mul(
                self.ring.scalar_descriptor(),
                &self.ring.nilpotency_caps(),
                a,
                b,
            ),
            (a, b) => scalar_mul(self.ring.descriptor(), a, b),
        };
        Ok(self.wrap(value))
    }

    pub fn pow(&self, mut exp: u32) -> RingElement {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Terms of a polynomial element as `(monomial, coefficient)` pairs in
    /// increasing graded-lex order; a scalar is one constant term.
    pub fn terms(&self) -> Vec<(Monomial, RingElement)> {
        let scalar_ring = self.ring.scalar_ring();
        match &self.value {
            Value::Poly(terms) => terms
                .iter()
                .map(|(m, c)| {
                    (
                        m.clone(),
                        RingElement {
                            ring: scalar_ring.clone(),
                            value: c.clone(),
                        },
                    )
                })
                .collect(),
            v if scalar_is_zero(v) => Vec::new(),
            v => vec![(Monomial::one(0), self.wrap(v.clone()))],
        }
    }

    /// Constant coefficient, as an element of the scalar ring.
    pub fn constant_term(&self) -> RingElement {
        match &self.value {
            Value::Poly(terms) => {
                let nvars = self.ring.variables().len();
                let value = terms
                    .get(&Monomial::one(nvars))
                    .cloned()
                    .unwrap_or_else(|| scalar_from_int(self.ring.scalar_descriptor(), &BigInt::zero()));
                RingElement {
                    ring: self.ring.scalar_ring(),
                    value,
                }
            }
            _ => self.clone(),
        }
    }

    /// Integer payload in `Z`.
    pub fn as_integer(&self) -> Option<&BigInt> {
        match &self.value {
            Value::Int(n) => Some(n),
            _ => None,
        }
    }

    /// Residue in `[0, n)` for `Z/n`.
    pub fn as_residue(&self) -> Option<u64> {
        match &self.value {
            Value::Res(r) => Some(*r),
            _ => None,
        }
    }

    /// `(numerator, exponents)` for `Z[1/p, ...]`.
    pub fn as_fraction(&self) -> Option<(&BigInt, &[u32])> {
        match &self.value {
            Value::Loc(n, e) => Some((n, e)),
            _ => None,
        }
    }

    /// Integer lift of a scalar: the integer itself, the residue in `[0, n)`,
    /// or the numerator of a localized fraction.
    pub fn integer_lift(&self) -> Option<BigInt> {
        match &self.value {
            Value::Int(n) | Value::Loc(n, _) => Some(n.clone()),
            Value::Res(r) => Some(BigInt::from(*r)),
            Value::Poly(_) => None,
        }
    }

    /// Serialized scalar string, e.g. `"-3"`, `"5"`, `"7/2^3"`.
    fn scalar_string(ring: &RingDescriptor, v: &Value) -> String {
        match v {
            Value::Int(n) => n.to_string(),
            Value::Res(r) => r.to_string(),
            Value::Loc(n, e) => {
                let RingDescriptor::Localized(primes) = ring else { unreachable!() };
                let parts: Vec<String> = primes
                    .iter()
                    .zip(e)
                    .filter(|(_, k)| **k > 0)
                    .map(|(p, k)| format!("{p}^{k}"))
                    .collect();
                match parts.len() {
                    0 => n.to_string(),
                    1 => format!("{n}/{}", parts[0]),
                    _ => format!("{n}/({})", parts.join("*")),
                }
            }
            Value::Poly(_) => unreachable!("scalar expected"),
        }
    }

    /// JSON form: a string for scalar rings, a `{monomial: coefficient}` map
    /// for polynomial rings.
    pub fn to_json(&self) -> serde_json::Value {
        match &self.value {
            Value::Poly(terms) => {
                let vars = self.ring.variables();
                let sd = self.ring.scalar_descriptor();
                let map = terms
                    .iter()
                    .map(|(m, c)| (m.render(vars), serde_json::Value::String(Self::scalar_string(sd, c))))
                    .collect();
                serde_json::Value::Object(map)
            }
            v => serde_json::Value::String(Self::scalar_string(self.ring.descriptor(), v)),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Poly(terms) => {
                if terms.is_empty() {
                    return write!(f, "0");
                }
                let vars = self.ring.variables();
                let sd = self.ring.scalar_descriptor();
                let mut out = String::new();
                for (k, (m, c)) in terms.iter().enumerate() {
                    let cs = Self::scalar_string(sd, c);
                    let (negative, mag) = match cs.strip_prefix('-') {
                        Some(rest) => (true, rest.to_string()),
                        None => (false, cs),
                    };
                    let body = if m.is_one() {
                        mag
                    } else if mag == "1" {
                        m.render_short(vars)
                    } else {
                        format!("{mag}*{}", m.render_short(vars))
                    };
                    let sign = match (k, negative) {
                        (0, true) => "-",
                        (0, false) => "",
                        (_, true) => " - ",
                        (_, false) => " + ",
                    };
                    out.push_str(sign);
                    out.push_str(&body);
                }
                write!(f, "{out}")
            }
            v => write!(f, "{}", Self::scalar_string(self.ring.descriptor(), v)),
        }
    }
}

const MISMATCH: &str = "ring descriptor mismatch in operator arithmetic";

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        self.checked_add(rhs).expect(MISMATCH)
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self.checked_sub(rhs).expect(MISMATCH)
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        self.checked_mul(rhs).expect(MISMATCH)
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        let value = match &self.value {
            Value::Poly(terms) => {
                let d = self.ring.scalar_descriptor();
                Value::Poly(terms.iter().map(|(m, c)| (m.clone(), scalar_neg(d, c))).collect())
            }
            v => scalar_neg(self.ring.descriptor(), v),
        };
        self.wrap(value)
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xz() -> Ring {
        Ring::parse("quot(poly(Z[1/2]; xi, zeta); xi^2)").unwrap()
    }

    #[test]
    fn xi_squared_vanishes() {
        let r = xz();
        let xi = r.var("xi").unwrap();
        assert!((&xi * &xi).is_zero());
    }

    #[test]
    fn one_plus_nilpotent_pair() {
        let r = xz();
        let xi = r.var("xi").unwrap();
        let zeta = r.var("zeta").unwrap();
        let u = &zeta * &xi;
        let a = &r.one() + &u;
        let b = &r.one() - &u;
        assert!((&a * &b).is_one());
    }

    #[test]
    fn residue_addition() {
        let r = Ring::residue(6).unwrap();
        assert_eq!(&r.int(3) + &r.int(4), r.int(1));
        assert_eq!(r.int(-1).as_residue(), Some(5));
    }

    #[test]
    fn localized_normal_form() {
        let r = Ring::localized(&[2]).unwrap();
        let half = r.fraction(1, 2).unwrap();
        assert_eq!(half.as_fraction(), Some((&BigInt::from(1), &[1u32][..])));
        let two_halves = &half + &half;
        assert!(two_halves.is_one());
        let x = r.fraction(6, 4).unwrap();
        assert_eq!(x.to_string(), "3/2^1");
        assert!(r.fraction(1, 3).is_err());
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = Ring::residue(5).unwrap().one();
        let b = Ring::residue(7).unwrap().one();
        assert!(matches!(a.checked_add(&b), Err(RingError::DescriptorMismatch { .. })));
        assert!(arith(ArithOp::Mul, &a, &b).is_err());
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        let a = Monomial(vec![0, 2]);
        let b = Monomial(vec![1, 0]);
        let c = Monomial(vec![1, 1]);
        assert!(b < a && a < c);
        assert!(Monomial(vec![2, 0]) > Monomial(vec![1, 1]));
    }

    #[test]
    fn json_form() {
        let r = xz();
        let e = &r.one() + &(&r.var("xi").unwrap() * &r.var("zeta").unwrap());
        let j = e.to_json();
        assert_eq!(j["1"], "1");
        assert_eq!(j["xi^1*zeta^1"], "1");
        assert_eq!(Ring::integers().int(-7).to_json(), "-7");
    }
}
