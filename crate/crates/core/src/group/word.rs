//! Letters and words in the generators `x_α(ξ)`, `w_α(ε)`, `h_α(ε)`.

use std::fmt;

use serde_json::json;

use super::GroupError;
use crate::roots::Root;
use crate::rings::{Ring, RingElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Letter {
    X(Root, RingElement),
    W(Root, RingElement),
    H(Root, RingElement),
}

impl Letter {
    pub fn root(&self) -> &Root {
        match self {
            Letter::X(r, _) | Letter::W(r, _) | Letter::H(r, _) => r,
        }
    }

    pub fn scalar(&self) -> &RingElement {
        match self {
            Letter::X(_, s) | Letter::W(_, s) | Letter::H(_, s) => s,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Letter::X(..) => "x",
            Letter::W(..) => "w",
            Letter::H(..) => "h",
        }
    }

    pub fn inverse(&self) -> Result<Letter, GroupError> {
        Ok(match self {
            Letter::X(r, s) => Letter::X(r.clone(), -s),
            Letter::W(r, s) => Letter::W(r.clone(), -s),
            Letter::H(r, s) => Letter::H(r.clone(), s.try_invert().ok_or_else(|| GroupError::NotAUnit(s.to_string()))?),
        })
    }

    /// The same letter as a product of root unipotents, left to right:
    /// `w_α(ε) = x_α(ε) x_{−α}(−ε⁻¹) x_α(ε)` and `h_α(ε) = w_α(ε) w_α(−1)`.
    pub fn unipotent_factors(&self) -> Result<Vec<(Root, RingElement)>, GroupError> {
        let w = |r: &Root, e: &RingElement| -> Result<Vec<(Root, RingElement)>, GroupError> {
            let inv = e.try_invert().ok_or_else(|| GroupError::NotAUnit(e.to_string()))?;
            Ok(vec![(r.clone(), e.clone()), (r.neg(), -&inv), (r.clone(), e.clone())])
        };
        match self {
            Letter::X(r, s) => Ok(vec![(r.clone(), s.clone())]),
            Letter::W(r, e) => w(r, e),
            Letter::H(r, e) => {
                let mut f = w(r, e)?;
                f.extend(w(r, &-&e.ring().one())?);
                Ok(f)
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "kind": self.kind(), "root": self.root().0, "scalar": self.scalar().to_json() })
    }

    pub fn from_json(ring: &Ring, value: &serde_json::Value) -> Result<Letter, GroupError> {
        let bad = |what: &str| GroupError::Parse(format!("letter {value}: {what}"));
        let kind = value.get("kind").and_then(|k| k.as_str()).ok_or_else(|| bad("missing kind"))?;
        let root = value
            .get("root")
            .and_then(|r| r.as_array())
            .ok_or_else(|| bad("missing root"))?
            .iter()
            .map(|c| c.as_i64().map(|c| c as i32).ok_or_else(|| bad("root entries must be integers")))
            .collect::<Result<Vec<i32>, _>>()?;
        let scalar = ring.element_from_json(value.get("scalar").ok_or_else(|| bad("missing scalar"))?)?;
        let root = Root(root);
        match kind {
            "x" => Ok(Letter::X(root, scalar)),
            "w" => Ok(Letter::W(root, scalar)),
            "h" => Ok(Letter::H(root, scalar)),
            _ => Err(bad("kind must be x, w or h")),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}, {})", self.kind(), self.root(), self.scalar())
    }
}

/// An ordered product of letters; never normalized.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GeneratorWord {
    pub letters: Vec<Letter>,
}

impl GeneratorWord {
    pub fn new(letters: Vec<Letter>) -> GeneratorWord {
        GeneratorWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }

    /// `self · other`.
    pub fn concat(&self, other: &GeneratorWord) -> GeneratorWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        GeneratorWord { letters }
    }

    pub fn inverse(&self) -> Result<GeneratorWord, GroupError> {
        let letters = self.letters.iter().rev().map(Letter::inverse).collect::<Result<_, _>>()?;
        Ok(GeneratorWord { letters })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.letters.iter().map(Letter::to_json).collect())
    }

    pub fn from_json(ring: &Ring, value: &serde_json::Value) -> Result<GeneratorWord, GroupError> {
        let items = value
            .as_array()
            .ok_or_else(|| GroupError::Parse("a word is a JSON array of letters".into()))?;
        let letters = items.iter().map(|v| Letter::from_json(ring, v)).collect::<Result<_, _>>()?;
        Ok(GeneratorWord { letters })
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(Letter::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_and_inverse() {
        let r = Ring::localized(&[2]).unwrap();
        let word = GeneratorWord::new(vec![
            Letter::X(Root(vec![1, 0]), r.int(3)),
            Letter::H(Root(vec![0, 1]), r.fraction(1, 2).unwrap()),
            Letter::W(Root(vec![-1, -1]), r.int(-1)),
        ]);
        assert_eq!(GeneratorWord::from_json(&r, &word.to_json()).unwrap(), word);
        let inv = word.inverse().unwrap();
        assert_eq!(inv.letters[0], Letter::W(Root(vec![-1, -1]), r.int(1)));
        assert_eq!(inv.letters[1], Letter::H(Root(vec![0, 1]), r.int(2)));
        assert_eq!(inv.letters[2], Letter::X(Root(vec![1, 0]), r.int(-3)));
        assert_eq!(word.to_json()[0], json!({"kind": "x", "root": [1, 0], "scalar": "3"}));
    }

    #[test]
    fn torus_letter_needs_unit() {
        let z = Ring::integers();
        let h = Letter::H(Root(vec![1]), z.int(2));
        assert!(matches!(h.inverse(), Err(GroupError::NotAUnit(_))));
        assert!(h.unipotent_factors().is_err());
    }
}
