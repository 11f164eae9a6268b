//! Unit detection and inversion.

use super::element::{scalar_invert, scalar_is_nilpotent, RingElement, Value};

/// Upper bound on geometric-series terms; nilpotent parts of supported rings
/// vanish long before this.
const MAX_SERIES_TERMS: usize = 4096;

impl RingElement {
    /// Inverse if `self` is a unit; `None` is an ordinary answer, not a failure.
    ///
    /// In polynomial rings `a = c + n` with `c` the constant term: `a` is a
    /// unit iff `c` is a unit of the coefficient ring and `n` is nilpotent,
    /// i.e. every term of `n` either involves a variable with a power relation
    /// or has a nilpotent coefficient. The inverse is the truncated series
    /// `c⁻¹ Σ (−c⁻¹ n)^j`.
    pub fn try_invert(&self) -> Option<RingElement> {
        let ring = &self.ring;
        match &self.value {
            Value::Poly(terms) => {
                let c = self.constant_term();
                let c_inv = scalar_invert(ring.scalar_descriptor(), &c.value)?;
                let caps = ring.nilpotency_caps();
                let sd = ring.scalar_descriptor();
                let nilpotent = terms.iter().all(|(m, coef)| {
                    m.is_one()
                        || m.exponents()
                            .iter()
                            .zip(&caps)
                            .any(|(e, cap)| *e > 0 && cap.is_some())
                        || scalar_is_nilpotent(sd, coef)
                });
                if !nilpotent {
                    return None;
                }
                let c_inv = ring.constant(&RingElement {
                    ring: ring.scalar_ring(),
                    value: c_inv,
                });
                let n = self - &ring.constant(&c);
                let step = -&(&c_inv * &n);
                let mut sum = ring.one();
                let mut power = ring.one();
                for _ in 0..MAX_SERIES_TERMS {
                    power = &power * &step;
                    if power.is_zero() {
                        let inv = &c_inv * &sum;
                        debug_assert!((&inv * self).is_one());
                        return Some(inv);
                    }
                    sum = &sum + &power;
                }
                None
            }
            v => scalar_invert(ring.descriptor(), v).map(|value| RingElement {
                ring: ring.clone(),
                value,
            }),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.try_invert().is_some()
    }
}
