//! Relative elementary subgroups of `E7` and membership certificates.
//!
//! Over `R = Z[1/2][ξ, ζ]/(ξ²)` with `I = (ξ)`, the generator
//! `z_{α₁}(ξ, ζ)` of `E(E7, R, I)` factors as
//! `x_{α₁}(ξ) x_{−α₁}(−ζ²ξ) h_{α₁}(1 + ζξ)`, and the torus factor is a
//! product of `h_δ(1 + ζξ/2)` with torus elements of `α₂, ..., α₇`. All of
//! these roots lie in `Δ = A₁ + D₆`, so the word below is a certificate for
//! `z_{α₁}(ξ, ζ) ∈ ⟨E(Δ, R), E(Φ, I)⟩`. Other roots outside `Δ` are reached
//! by conjugating with Weyl elements of `Δ`.

use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::group::{GeneratorWord, GroupElement, GroupError, Letter, MinusculeRep};
use crate::rings::{evaluate_hom, Assignment, IdealDescriptor, Ring, RingElement, RingError};
use crate::roots::{Root, RootError, SubsystemEmbedding};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("2 is not invertible in {0}")]
    TwoNotInvertible(String),
    #[error("ring {0} needs variables xi and zeta")]
    MissingVariables(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// Which generating set a certificate letter belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tag {
    /// `E(Δ, R)`: root in `Δ`, any scalar (a unit for `w`, `h`).
    Levi,
    /// `E(Φ, I)`: a root unipotent with scalar in `I`.
    Ideal,
}

impl Tag {
    pub fn label(&self) -> &'static str {
        match self {
            Tag::Levi => "E(Delta,R)",
            Tag::Ideal => "E(Phi,I)",
        }
    }
}

/// `(E7, ϖ₇)`, `Δ = A₁ + D₆`, a ring and an ideal of it.
#[derive(Clone, Debug)]
pub struct RelativeContext {
    pub rep: Arc<MinusculeRep>,
    pub delta: SubsystemEmbedding,
    pub ring: Ring,
    pub ideal: IdealDescriptor,
}

impl RelativeContext {
    pub fn new(ring: &Ring, ideal_generators: Vec<RingElement>) -> Result<RelativeContext, CongruenceError> {
        Ok(RelativeContext {
            rep: MinusculeRep::parse("E7:w7")?,
            delta: SubsystemEmbedding::parse("A1+D6@E7")?,
            ring: ring.clone(),
            ideal: IdealDescriptor::new(ring, ideal_generators)?,
        })
    }

    /// `Z[1/2][ξ, ζ]/(ξ²)` with `I = (ξ)`.
    pub fn universal() -> RelativeContext {
        let ring = Ring::parse("quot(poly(Z[1/2]; xi, zeta); xi^2)").expect("valid descriptor");
        let xi = ring.var("xi").expect("variable");
        RelativeContext::new(&ring, vec![xi]).expect("universal context")
    }

    pub fn xi_zeta(&self) -> Result<(RingElement, RingElement), CongruenceError> {
        let missing = || CongruenceError::MissingVariables(self.ring.to_string());
        Ok((
            self.ring.var("xi").map_err(|_| missing())?,
            self.ring.var("zeta").map_err(|_| missing())?,
        ))
    }

    fn alpha(&self, i: usize) -> Root {
        self.rep.system().simple_root(i)
    }
}

#[derive(Clone, Debug)]
pub struct MembershipCertificate {
    pub alpha: Root,
    pub xi: RingElement,
    pub zeta: RingElement,
    pub word: GeneratorWord,
    pub tags: Vec<Tag>,
}

impl MembershipCertificate {
    /// Checks each tag and that the word replays to `z_α(ξ, ζ)`.
    pub fn verify(&self, ctx: &RelativeContext) -> Result<bool, CongruenceError> {
        if self.tags.len() != self.word.len() {
            return Ok(false);
        }
        for (letter, tag) in self.word.letters.iter().zip(&self.tags) {
            let ok = match tag {
                Tag::Levi => {
                    ctx.delta.contains(letter.root())
                        && (matches!(letter, Letter::X(..)) || letter.scalar().is_unit())
                }
                Tag::Ideal => matches!(letter, Letter::X(..)) && ctx.ideal.contains(letter.scalar())?,
            };
            if !ok {
                return Ok(false);
            }
        }
        let replay = ctx.rep.realize(&ctx.ring, &self.word)?;
        let target = ctx.rep.z(&self.alpha, &self.xi, &self.zeta)?;
        Ok(replay == target)
    }

    pub fn count(&self, tag: Tag) -> usize {
        self.tags.iter().filter(|t| **t == tag).count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let letters: Vec<_> = self
            .word
            .letters
            .iter()
            .zip(&self.tags)
            .map(|(l, t)| {
                let mut j = l.to_json();
                j["tag"] = serde_json::Value::from(t.label());
                j
            })
            .collect();
        serde_json::json!({
            "root": self.alpha.0,
            "xi": self.xi.to_json(),
            "zeta": self.zeta.to_json(),
            "word": letters,
        })
    }
}

fn half(ring: &Ring) -> Result<RingElement, CongruenceError> {
    ring.int(2)
        .try_invert()
        .ok_or_else(|| CongruenceError::TwoNotInvertible(ring.to_string()))
}

/// Both sides of `z_{α₁}(ξ,ζ) = x_{α₁}(ξ) x_{−α₁}(−ζ²ξ) h_{α₁}(1+ζξ)`.
pub fn z_factorization_sides(
    rep: &Arc<MinusculeRep>,
    ring: &Ring,
) -> Result<(GroupElement, GroupElement), CongruenceError> {
    let missing = || CongruenceError::MissingVariables(ring.to_string());
    let xi = ring.var("xi").map_err(|_| missing())?;
    let zeta = ring.var("zeta").map_err(|_| missing())?;
    let a1 = rep.system().simple_root(1);
    let lhs = rep.z(&a1, &xi, &zeta)?;
    let zx = &zeta * &xi;
    let word = GeneratorWord::new(vec![
        Letter::X(a1.clone(), xi.clone()),
        Letter::X(a1.neg(), -&(&zeta * &zx)),
        Letter::H(a1, &ring.one() + &zx),
    ]);
    let rhs = rep.realize(ring, &word)?;
    Ok((lhs, rhs))
}

pub fn verify_z_factorization(rep: &Arc<MinusculeRep>, ring: &Ring) -> Result<bool, CongruenceError> {
    let (lhs, rhs) = z_factorization_sides(rep, ring)?;
    Ok(lhs == rhs)
}

/// The scalars `(1 + ζξ/2)^{m_i}` for `δ = Σ m_i α_i`, reduced by `ξ² = 0`.
pub fn h_delta_factors(ctx: &RelativeContext) -> Result<Vec<(Root, RingElement)>, CongruenceError> {
    let (xi, zeta) = ctx.xi_zeta()?;
    let base = &ctx.ring.one() + &(&(&zeta * &xi) * &half(&ctx.ring)?);
    let delta = ctx.rep.system().highest_root().clone();
    Ok((1..=ctx.rep.system().rank())
        .map(|i| (ctx.alpha(i), base.pow(delta.0[i - 1] as u32)))
        .collect())
}

/// `h_δ(1 + ζξ/2)` equals the product of `h_{α_i}((1 + ζξ/2)^{m_i})`, and its
/// diagonal is `(1 + ζξ/2)^{⟨λ, δ∨⟩}`.
pub fn verify_h_delta_product(ctx: &RelativeContext) -> Result<bool, CongruenceError> {
    let (xi, zeta) = ctx.xi_zeta()?;
    let eps = &ctx.ring.one() + &(&(&zeta * &xi) * &half(&ctx.ring)?);
    let delta = ctx.rep.system().highest_root().clone();
    let lhs = ctx.rep.h(&delta, &eps)?;
    let word = GeneratorWord::new(
        h_delta_factors(ctx)?
            .into_iter()
            .map(|(r, s)| Letter::H(r, s))
            .collect(),
    );
    let rhs = ctx.rep.realize(&ctx.ring, &word)?;
    if lhs != rhs || !lhs.matrix().is_diagonal() {
        return Ok(false);
    }
    let eps_inv = eps.try_invert().expect("unit");
    for n in 0..ctx.rep.dim() {
        let expected = match ctx.rep.diagram().pairing(n, &delta) {
            0 => ctx.ring.one(),
            k if k > 0 => eps.pow(k as u32),
            k => eps_inv.pow((-k) as u32),
        };
        if lhs.entry(n, n) != &expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Certificate for `z_{α₁}(ξ, ζ)`: two `E(Φ, I)` letters followed by seven
/// torus letters over `Δ`. Needs `ξ² = 0` and `2 ∈ R*`.
pub fn z_membership_word(
    ctx: &RelativeContext,
    xi: &RingElement,
    zeta: &RingElement,
) -> Result<MembershipCertificate, CongruenceError> {
    let ring = &ctx.ring;
    let one = ring.one();
    let half = half(ring)?;
    let zx = zeta * xi;
    let delta = ctx.rep.system().highest_root().clone();
    let eps = &one + &(&zx * &half);
    let mut letters = vec![
        Letter::X(ctx.alpha(1), xi.clone()),
        Letter::X(ctx.alpha(1).neg(), -&(zeta * &zx)),
        Letter::H(delta.clone(), eps.clone()),
    ];
    for i in (2..=ctx.rep.system().rank()).rev() {
        let factor = eps.pow(delta.0[i - 1] as u32);
        let inv = factor.try_invert().ok_or_else(|| GroupError::NotAUnit(factor.to_string()))?;
        letters.push(Letter::H(ctx.alpha(i), inv));
    }
    let mut tags = vec![Tag::Ideal, Tag::Ideal];
    tags.resize(letters.len(), Tag::Levi);
    Ok(MembershipCertificate {
        alpha: ctx.alpha(1),
        xi: xi.clone(),
        zeta: zeta.clone(),
        word: GeneratorWord::new(letters),
        tags,
    })
}

/// `w_β(ε)` as the root unipotents it is defined by.
fn weyl_letters(beta: &Root, eps: &RingElement) -> Vec<Letter> {
    let inv = eps.try_invert().expect("sign");
    vec![
        Letter::X(beta.clone(), eps.clone()),
        Letter::X(beta.neg(), -&inv),
        Letter::X(beta.clone(), eps.clone()),
    ]
}

/// Sign `s` with `n x_α(1) n⁻¹ = x_β(s)`, computed over `Z`.
fn conjugation_sign(rep: &Arc<MinusculeRep>, n: &GeneratorWord, alpha: &Root, beta: &Root) -> Result<i64, CongruenceError> {
    let z = Ring::integers();
    let n_el = rep.realize(&z, n)?;
    let conj = n_el.multiply(&rep.x(alpha, &z.one())?)?.multiply(&n_el.invert()?)?;
    if conj == rep.x(beta, &z.one())? {
        Ok(1)
    } else if conj == rep.x(beta, &z.int(-1))? {
        Ok(-1)
    } else {
        Err(GroupError::Parse(format!("conjugate of x_{alpha} is not a root element for {beta}")).into())
    }
}

/// Certificate for `z_α(ξ, ζ)`, any root `α` of `E7`.
pub fn general_z_membership(
    ctx: &RelativeContext,
    alpha: &Root,
    xi: &RingElement,
    zeta: &RingElement,
) -> Result<MembershipCertificate, CongruenceError> {
    ctx.rep.system().check_root(alpha)?;
    if ctx.delta.contains(alpha) {
        let word = MinusculeRep::z_word(alpha, xi, zeta);
        let tags = vec![Tag::Levi; word.len()];
        return Ok(MembershipCertificate {
            alpha: alpha.clone(),
            xi: xi.clone(),
            zeta: zeta.clone(),
            word,
            tags,
        });
    }
    let a1 = ctx.alpha(1);
    if *alpha == a1 {
        return z_membership_word(ctx, xi, zeta);
    }
    // s_{β_k} ... s_{β_1}(α) = α₁, so n = w_{β_1} ... w_{β_k} carries α₁ to α
    let weyl = ctx.delta.find_weyl_conjugator(alpha, &a1)?;
    let z = Ring::integers();
    let n_int = GeneratorWord::new(weyl.letters.iter().map(|b| Letter::W(b.clone(), z.one())).collect());
    let s1 = conjugation_sign(&ctx.rep, &n_int, &a1, alpha)?;
    let s2 = conjugation_sign(&ctx.rep, &n_int, &a1.neg(), &alpha.neg())?;
    let ring = &ctx.ring;
    let one = ring.one();
    let inner = z_membership_word(ctx, &(xi * &ring.int(s1)), &(zeta * &ring.int(s2)))?;
    let mut letters = Vec::new();
    let mut tags = Vec::new();
    for b in &weyl.letters {
        letters.extend(weyl_letters(b, &one));
    }
    tags.resize(letters.len(), Tag::Levi);
    letters.extend(inner.word.letters);
    tags.extend(inner.tags);
    for b in weyl.letters.iter().rev() {
        letters.extend(weyl_letters(b, &-&one));
    }
    tags.resize(letters.len(), Tag::Levi);
    Ok(MembershipCertificate {
        alpha: alpha.clone(),
        xi: xi.clone(),
        zeta: zeta.clone(),
        word: GeneratorWord::new(letters),
        tags,
    })
}

/// Certificates for every root outside `Δ`, built in parallel; ordered as
/// the ambient roots.
pub fn certificate_sweep(ctx: &RelativeContext) -> Result<Vec<MembershipCertificate>, CongruenceError> {
    let (xi, zeta) = ctx.xi_zeta()?;
    ctx.delta
        .complement()
        .par_iter()
        .map(|alpha| general_z_membership(ctx, alpha, &xi, &zeta))
        .collect()
}

/// Letter-wise image under the evaluation map `ξ ↦ a`, `ζ ↦ b`.
pub fn specialize_certificate(
    cert: &MembershipCertificate,
    target: &RelativeContext,
    a: &RingElement,
    b: &RingElement,
) -> Result<MembershipCertificate, CongruenceError> {
    let assignment = Assignment::new(&target.ring, &[("xi", a.clone()), ("zeta", b.clone())])?;
    let map = |x: &RingElement| evaluate_hom(x, &assignment).map_err(|e| match e {
        RingError::TwoNotInvertible => CongruenceError::TwoNotInvertible(target.ring.to_string()),
        e => e.into(),
    });
    let letters = cert
        .word
        .letters
        .iter()
        .map(|l| {
            Ok(match l {
                Letter::X(r, s) => Letter::X(r.clone(), map(s)?),
                Letter::W(r, s) => Letter::W(r.clone(), map(s)?),
                Letter::H(r, s) => Letter::H(r.clone(), map(s)?),
            })
        })
        .collect::<Result<Vec<_>, CongruenceError>>()?;
    Ok(MembershipCertificate {
        alpha: cert.alpha.clone(),
        xi: map(&cert.xi)?,
        zeta: map(&cert.zeta)?,
        word: GeneratorWord::new(letters),
        tags: cert.tags.clone(),
    })
}

/// Outcome of one named identity check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub check: String,
    pub passed: bool,
    pub elapsed_ms: u128,
    pub detail: String,
}

impl CheckResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "check": self.check,
            "status": if self.passed { "pass" } else { "fail" },
            "elapsed": format!("{:.3}s", self.elapsed_ms as f64 / 1000.0),
            "detail": self.detail,
        })
    }
}

fn timed(name: &str, f: impl FnOnce() -> Result<(bool, String), CongruenceError>) -> CheckResult {
    let start = Instant::now();
    let (passed, detail) = match f() {
        Ok(r) => r,
        Err(e) => (false, e.to_string()),
    };
    CheckResult {
        check: name.to_string(),
        passed,
        elapsed_ms: start.elapsed().as_millis(),
        detail,
    }
}

/// The `E7` identities: z-factorization, the `h_δ` product, transitivity
/// of `W(Δ)` on `Φ ∖ Δ`, the certificate sweep and specialization.
pub fn identity_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let a1 = MinusculeRep::parse("A1:w1").expect("A1");
    let e7 = MinusculeRep::parse("E7:w7").expect("E7");
    let rings = [
        "quot(poly(Z[1/2]; xi, zeta); xi^2)",
        "quot(poly(Z; xi, zeta); xi^2)",
    ];
    for desc in rings {
        let ring = Ring::parse(desc).expect("descriptor");
        out.push(timed(&format!("z-factorization E7:w7 over {desc}"), || {
            Ok((verify_z_factorization(&e7, &ring)?, String::new()))
        }));
        out.push(timed(&format!("z-factorization A1:w1 over {desc}"), || {
            Ok((verify_z_factorization(&a1, &ring)?, String::new()))
        }));
    }
    let ctx = RelativeContext::universal();
    out.push(timed("h_delta product", || {
        let coeffs = ctx.rep.system().highest_root().0.clone();
        Ok((
            coeffs == [2, 2, 3, 4, 3, 2, 1] && verify_h_delta_product(&ctx)?,
            format!("delta = {coeffs:?}"),
        ))
    }));
    out.push(timed("h_delta needs 1/2", || {
        let ring = Ring::parse("quot(poly(Z; xi, zeta); xi^2)").expect("descriptor");
        let xi = ring.var("xi")?;
        let no_half = RelativeContext::new(&ring, vec![xi])?;
        let r = verify_h_delta_product(&no_half);
        Ok((matches!(r, Err(CongruenceError::TwoNotInvertible(_))), String::new()))
    }));
    out.push(timed("transitivity", || {
        let e7s = ctx.rep.system();
        let target = e7s.simple_root(1);
        let complement = ctx.delta.complement();
        let mut hits = 0;
        for alpha in &complement {
            let w = ctx.delta.find_weyl_conjugator(alpha, &target)?;
            if w.apply(e7s, alpha)? == target && w.letters.iter().all(|b| ctx.delta.contains(b)) {
                hits += 1;
            }
        }
        Ok((hits == 64 && complement.len() == 64, format!("{hits}/{}", complement.len())))
    }));
    out.push(timed("certificate sweep", || {
        let certs = certificate_sweep(&ctx)?;
        let good = certs
            .par_iter()
            .map(|c| c.verify(&ctx))
            .collect::<Result<Vec<bool>, _>>()?
            .into_iter()
            .filter(|ok| *ok)
            .count();
        Ok((good == 64, format!("{good}/{}", certs.len())))
    }));
    out.push(timed("specialization", || {
        let (xi, zeta) = ctx.xi_zeta()?;
        let cert = z_membership_word(&ctx, &xi, &zeta)?;
        let z9 = Ring::residue(9)?;
        let t9 = RelativeContext::new(&z9, vec![z9.int(3)])?;
        let s9 = specialize_certificate(&cert, &t9, &z9.int(3), &z9.int(4))?;
        let dual = Ring::parse("quot(poly(Z[1/2]; eps); eps^2)")?;
        let eps = dual.var("eps")?;
        let td = RelativeContext::new(&dual, vec![eps.clone()])?;
        let sd = specialize_certificate(&cert, &td, &eps, &dual.int(3))?;
        let s0 = specialize_certificate(&cert, &t9, &z9.zero(), &z9.int(4))?;
        let collapses = t9.rep.realize(&z9, &s0.word)?.is_identity();
        Ok((s9.verify(&t9)? && sd.verify(&td)? && collapses, String::new()))
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_factorization() {
        let a1 = MinusculeRep::parse("A1:w1").unwrap();
        for desc in ["quot(poly(Z; xi, zeta); xi^2)", "quot(poly(Z[1/2]; xi, zeta); xi^2)"] {
            let ring = Ring::parse(desc).unwrap();
            let (lhs, rhs) = z_factorization_sides(&a1, &ring).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(lhs.entry(1, 0), &ring.parse_element("-zeta^2*xi").unwrap());
        }
        // without ξ² = 0, 1 + ζξ is not a unit
        let free = Ring::parse("poly(Z; xi, zeta)").unwrap();
        assert!(matches!(
            verify_z_factorization(&a1, &free),
            Err(CongruenceError::Group(GroupError::NotAUnit(_)))
        ));
    }

    #[test]
    fn e7_factorization() {
        let e7 = MinusculeRep::parse("E7:w7").unwrap();
        let ring = Ring::parse("quot(poly(Z; xi, zeta); xi^2)").unwrap();
        assert!(verify_z_factorization(&e7, &ring).unwrap());
    }

    #[test]
    fn h_delta() {
        let ctx = RelativeContext::universal();
        assert!(verify_h_delta_product(&ctx).unwrap());
        let shown = ["1 + zeta*xi", "1 + zeta*xi", "1 + 3*zeta*xi/2", "1 + 2*zeta*xi", "1 + 3*zeta*xi/2", "1 + zeta*xi", "1 + zeta*xi/2"];
        for ((_, s), text) in h_delta_factors(&ctx).unwrap().iter().zip(shown) {
            assert_eq!(s, &ctx.ring.parse_element(text).unwrap());
        }
        let ring = Ring::parse("quot(poly(Z; xi, zeta); xi^2)").unwrap();
        let no_half = RelativeContext::new(&ring, vec![ring.var("xi").unwrap()]).unwrap();
        assert!(matches!(
            verify_h_delta_product(&no_half),
            Err(CongruenceError::TwoNotInvertible(_))
        ));
    }

    #[test]
    fn alpha1_certificate() {
        let ctx = RelativeContext::universal();
        let (xi, zeta) = ctx.xi_zeta().unwrap();
        let cert = z_membership_word(&ctx, &xi, &zeta).unwrap();
        assert_eq!(cert.count(Tag::Ideal), 2);
        assert_eq!(cert.count(Tag::Levi), 7);
        assert!(cert.verify(&ctx).unwrap());
        let zero = z_membership_word(&ctx, &ctx.ring.zero(), &zeta).unwrap();
        assert!(ctx.rep.realize(&ctx.ring, &zero.word).unwrap().is_identity());
    }

    #[test]
    fn tags_are_checked() {
        let ctx = RelativeContext::universal();
        let (xi, zeta) = ctx.xi_zeta().unwrap();
        let mut cert = z_membership_word(&ctx, &xi, &zeta).unwrap();
        cert.tags[2] = Tag::Ideal;
        assert!(!cert.verify(&ctx).unwrap());
        let mut cert = z_membership_word(&ctx, &xi, &zeta).unwrap();
        cert.tags[0] = Tag::Levi;
        assert!(!cert.verify(&ctx).unwrap());
    }

    #[test]
    fn roots_inside_delta() {
        let ctx = RelativeContext::universal();
        let (xi, zeta) = ctx.xi_zeta().unwrap();
        let a2 = ctx.rep.system().simple_root(2);
        let cert = general_z_membership(&ctx, &a2, &xi, &zeta).unwrap();
        assert_eq!(cert.word.len(), 3);
        assert!(cert.verify(&ctx).unwrap());
    }

    #[test]
    fn conjugated_certificates() {
        let ctx = RelativeContext::universal();
        let (xi, zeta) = ctx.xi_zeta().unwrap();
        for alpha in ctx.delta.complement().iter().step_by(9) {
            let cert = general_z_membership(&ctx, alpha, &xi, &zeta).unwrap();
            assert!(cert.verify(&ctx).unwrap(), "{alpha}");
        }
    }

    #[test]
    fn specializations() {
        let ctx = RelativeContext::universal();
        let (xi, zeta) = ctx.xi_zeta().unwrap();
        let cert = z_membership_word(&ctx, &xi, &zeta).unwrap();
        let z9 = Ring::residue(9).unwrap();
        let t9 = RelativeContext::new(&z9, vec![z9.int(3)]).unwrap();
        let s = specialize_certificate(&cert, &t9, &z9.int(3), &z9.int(5)).unwrap();
        assert!(s.verify(&t9).unwrap());
        assert!(matches!(
            specialize_certificate(&cert, &t9, &z9.int(2), &z9.int(5)),
            Err(CongruenceError::Ring(RingError::RelationNotPreserved(_)))
        ));
        let z6 = Ring::residue(6).unwrap();
        let t6 = RelativeContext::new(&z6, vec![z6.zero()]).unwrap();
        assert!(matches!(
            specialize_certificate(&cert, &t6, &z6.zero(), &z6.one()),
            Err(CongruenceError::TwoNotInvertible(_))
        ));
    }
}
