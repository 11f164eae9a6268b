//! Parsing ring elements from strings and JSON.
//!
//! Strings are small arithmetic expressions over the ring: integers,
//! variables, `+ - * ^`, parentheses, and `/` by a unit, e.g. `1 + zeta*xi/2`
//! or `7/2^3`.

use num_bigint::BigInt;

use super::descriptor::Ring;
use super::element::RingElement;
use super::RingError;

impl Ring {
    pub fn parse_element(&self, text: &str) -> Result<RingElement, RingError> {
        let tokens = tokenize(text)?;
        let mut p = ExprParser {
            ring: self,
            tokens: &tokens,
            pos: 0,
            src: text,
        };
        let e = p.expr()?;
        if p.pos != tokens.len() {
            return Err(p.error("trailing input"));
        }
        Ok(e)
    }

    /// Accepts a string (any ring) or a `{monomial: coefficient}` map
    /// (polynomial rings).
    pub fn element_from_json(&self, value: &serde_json::Value) -> Result<RingElement, RingError> {
        match value {
            serde_json::Value::String(s) => self.parse_element(s),
            serde_json::Value::Number(n) => self.parse_element(&n.to_string()),
            serde_json::Value::Object(map) => {
                if self.is_scalar() {
                    return Err(RingError::Parse(format!("{self} elements are strings, not maps")));
                }
                let scalar_ring = self.scalar_ring();
                let mut acc = self.zero();
                for (mono, coef) in map {
                    let coef = match coef {
                        serde_json::Value::String(s) => scalar_ring.parse_element(s)?,
                        serde_json::Value::Number(n) => scalar_ring.parse_element(&n.to_string())?,
                        other => {
                            return Err(RingError::Parse(format!("bad coefficient {other}")));
                        }
                    };
                    let m = self.parse_element(mono)?;
                    acc = &acc + &(&m * &self.constant(&coef));
                }
                Ok(acc)
            }
            other => Err(RingError::Parse(format!("cannot read a ring element from {other}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<Tok>, RingError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Num(s.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(RingError::Parse(format!("unexpected character {c:?} in {text:?}")));
        }
    }
    Ok(out)
}

struct ExprParser<'a> {
    ring: &'a Ring,
    tokens: &'a [Tok],
    pos: usize,
    src: &'a str,
}

impl ExprParser<'_> {
    fn error(&self, msg: &str) -> RingError {
        RingError::Parse(format!("{msg} in element {:?} of {}", self.src, self.ring))
    }

    fn peek_sym(&self, c: char) -> bool {
        self.tokens.get(self.pos) == Some(&Tok::Sym(c))
    }

    fn expr(&mut self) -> Result<RingElement, RingError> {
        let mut acc = self.term()?;
        loop {
            if self.peek_sym('+') {
                self.pos += 1;
                acc = &acc + &self.term()?;
            } else if self.peek_sym('-') {
                self.pos += 1;
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RingElement, RingError> {
        let mut acc = self.unary()?;
        loop {
            if self.peek_sym('*') {
                self.pos += 1;
                acc = &acc * &self.unary()?;
            } else if self.peek_sym('/') {
                self.pos += 1;
                let d = self.unary()?;
                let inv = d
                    .try_invert()
                    .ok_or_else(|| self.error(&format!("division by non-unit {d}")))?;
                acc = &acc * &inv;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RingElement, RingError> {
        if self.peek_sym('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        if self.peek_sym('+') {
            self.pos += 1;
            return self.unary();
        }
        let base = self.atom()?;
        if self.peek_sym('^') {
            self.pos += 1;
            let Some(Tok::Num(n)) = self.tokens.get(self.pos) else {
                return Err(self.error("expected an exponent"));
            };
            let e = u32::try_from(n).map_err(|_| self.error("exponent out of range"))?;
            self.pos += 1;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RingElement, RingError> {
        match self.tokens.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(self.ring.from_bigint(&n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.ring.var(&name)
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.peek_sym(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_scalars() {
        let z = Ring::integers();
        assert_eq!(z.parse_element("-12").unwrap(), z.int(-12));
        let z6 = Ring::residue(6).unwrap();
        assert_eq!(z6.parse_element("3 + 4").unwrap(), z6.int(1));
        let zh = Ring::localized(&[2]).unwrap();
        assert_eq!(zh.parse_element("7/2^3").unwrap(), zh.fraction(7, 8).unwrap());
        assert_eq!(zh.parse_element("1/2^0").unwrap(), zh.one());
        assert!(z.parse_element("1/2").is_err());
    }

    #[test]
    fn parses_polynomials() {
        let r = Ring::parse("quot(poly(Z[1/2]; xi, zeta); xi^2)").unwrap();
        let a = r.parse_element("1 + zeta*xi/2").unwrap();
        let xi = r.var("xi").unwrap();
        let zeta = r.var("zeta").unwrap();
        let half = r.constant(&r.scalar_ring().fraction(1, 2).unwrap());
        assert_eq!(a, &r.one() + &(&(&zeta * &xi) * &half));
        assert!(r.parse_element("xi^2").unwrap().is_zero());
        assert!(r.parse_element("omega").is_err());
    }

    #[test]
    fn display_round_trips_through_parser() {
        let r = Ring::parse("quot(poly(Z[1/2]; xi, zeta); xi^2)").unwrap();
        let a = r.parse_element("3 - zeta^2*xi + 5*zeta/4 - 7").unwrap();
        assert_eq!(r.parse_element(&a.to_string()).unwrap(), a);
        assert_eq!(r.element_from_json(&a.to_json()).unwrap(), a);
    }
}
