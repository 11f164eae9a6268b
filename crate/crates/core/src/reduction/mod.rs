//! Elementary reduction of unimodular columns.
//!
//! Given a unimodular vector `v` of a minuscule module, these routines build
//! a word `h` of root unipotents with `(h v)^μ = 1`. Every result is checked
//! by replaying `h` on `v`; nothing relies on stable-rank hypotheses at run
//! time.
//!
//! For `(E6, ϖ₁)` the reduction runs in four steps on the levels
//! `L₀ = {μ}`, `L₁`, `L₂` of the `α₁`-grading (sizes 1, 16, 10):
//!
//! 1. an ASR transform on the `A5`-orbit of `μ` makes `v` without `v^μ`
//!    unimodular;
//! 2. a Bézout combination of `L₁ ∪ L₂` pushed into `μ` gives
//!    `v^μ ≡ 1 (mod ⟨L₂⟩)`;
//! 3. `D5 = ⟨α₂..α₆⟩` acts on `L₂` as on its vector representation, and a
//!    reduction modulo `v^μ` makes the top of `L₂` congruent to `1`;
//! 4. the `D5' = ⟨α₁..α₅⟩`-orbit of `μ` is again a vector representation
//!    containing `μ` and the top of `L₂`, and reducing it finishes.

mod dl;

use std::sync::Arc;

use serde_json::json;
use thiserror::Error;

pub use dl::DlView;

use crate::group::{GeneratorWord, GroupElement, GroupError, Letter, MinusculeRep};
use crate::matsumoto::{chevalley_matsumoto, DecompositionError, ParabolicSplit};
use crate::rings::{asr_transform, unimodular_certificate, IdealDescriptor, Ring, RingDescriptor, RingElement, RingError};
use crate::roots::{CartanType, SubsystemEmbedding};
use dl::{reduce_view, Driver};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("vector is not unimodular")]
    NotUnimodular,
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("unsupported representation: {0}")]
    UnsupportedRepresentation(String),
    #[error("internal postcondition failed: {0}")]
    InternalPostconditionFailure(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
}

/// How coordinates are steered to units.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionStrategy {
    /// `Z/n`: prime-by-prime CRT choices over the finitely many maximal ideals.
    Semilocal(u64),
    /// `Z` and `Z[1/p]`: Euclidean descent on the size of the prime-free part.
    Euclidean,
}

impl ReductionStrategy {
    pub fn for_ring(ring: &Ring) -> Result<ReductionStrategy, ReductionError> {
        match ring.descriptor() {
            RingDescriptor::Residue(n) => Ok(ReductionStrategy::Semilocal(*n)),
            RingDescriptor::Integers | RingDescriptor::Localized(_) => Ok(ReductionStrategy::Euclidean),
            _ => Err(ReductionError::UnsupportedRing(format!("no reduction strategy for {ring}"))),
        }
    }
}

/// One step of a traced reduction.
#[derive(Clone, Debug)]
pub struct TraceStep {
    pub name: &'static str,
    pub letters: usize,
    pub vector: Vec<RingElement>,
    pub certificate: Option<Vec<RingElement>>,
}

#[derive(Clone, Debug, Default)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
}

impl ReductionTrace {
    pub fn to_json(&self) -> serde_json::Value {
        let steps: Vec<_> = self
            .steps
            .iter()
            .map(|s| {
                let vector: Vec<_> = s.vector.iter().map(RingElement::to_json).collect();
                let cert = s
                    .certificate
                    .as_ref()
                    .map(|c| c.iter().map(RingElement::to_json).collect::<Vec<_>>());
                json!({ "step": s.name, "letters": s.letters, "vector": vector, "certificate": cert })
            })
            .collect();
        serde_json::Value::Array(steps)
    }
}

fn check_input(rep: &MinusculeRep, v: &[RingElement]) -> Result<Ring, ReductionError> {
    if v.len() != rep.dim() {
        return Err(GroupError::DimensionMismatch {
            expected: rep.dim(),
            got: v.len(),
        }
        .into());
    }
    let ring = v[0].ring().clone();
    for x in v {
        if x.ring() != &ring {
            return Err(RingError::DescriptorMismatch {
                left: ring.to_string(),
                right: x.ring().to_string(),
            }
            .into());
        }
    }
    Ok(ring)
}

fn require_unimodular(row: &[RingElement]) -> Result<Vec<RingElement>, ReductionError> {
    unimodular_certificate(row)?
        .map(|c| c.coefficients)
        .ok_or(ReductionError::NotUnimodular)
}

fn finish_word(rep: &MinusculeRep, v: &[RingElement], applied: Vec<Letter>) -> Result<GeneratorWord, ReductionError> {
    let word = GeneratorWord::new(applied.into_iter().rev().collect());
    let out = rep.act_word(&word, v)?;
    if !out[0].is_one() {
        return Err(ReductionError::InternalPostconditionFailure(format!(
            "replay gives top coordinate {}",
            out[0]
        )));
    }
    Ok(word)
}

/// `(D_l, ϖ₁)`: a word `h` over `D_l` with `(h v)^μ = 1`.
pub fn reduce_dl(rep: &Arc<MinusculeRep>, v: &[RingElement]) -> Result<GeneratorWord, ReductionError> {
    let ring = check_input(rep, v)?;
    if !matches!(rep.system().cartan_type(), CartanType::D(_)) || rep.diagram().highest_index() != 1 {
        return Err(ReductionError::UnsupportedRepresentation(rep.label()));
    }
    let strategy = ReductionStrategy::for_ring(&ring)?;
    require_unimodular(v)?;
    let view = DlView::full(rep)?;
    let mut driver = Driver {
        rep,
        v: v.to_vec(),
        applied: Vec::new(),
    };
    reduce_view(&mut driver, &view, strategy, None)?;
    finish_word(rep, v, driver.applied)
}

pub fn reduce_e6(rep: &Arc<MinusculeRep>, v: &[RingElement]) -> Result<GeneratorWord, ReductionError> {
    reduce_e6_traced(rep, v).map(|(w, _)| w)
}

/// `(E6, ϖ₁)`: a word `h` over `E6` with `(h v)^μ = 1`, with the state
/// after each step.
pub fn reduce_e6_traced(
    rep: &Arc<MinusculeRep>,
    v: &[RingElement],
) -> Result<(GeneratorWord, ReductionTrace), ReductionError> {
    let ring = check_input(rep, v)?;
    if rep.system().cartan_type() != CartanType::E6 || rep.diagram().highest_index() != 1 {
        return Err(ReductionError::UnsupportedRepresentation(rep.label()));
    }
    let strategy = ReductionStrategy::for_ring(&ring)?;
    let initial_cert = require_unimodular(v)?;
    let mut trace = ReductionTrace::default();
    trace.steps.push(TraceStep {
        name: "input",
        letters: 0,
        vector: v.to_vec(),
        certificate: Some(initial_cert),
    });
    if v[0].is_one() {
        return Ok((GeneratorWord::default(), trace));
    }
    let diagram = Arc::clone(rep.diagram());
    let mut driver = Driver {
        rep,
        v: v.to_vec(),
        applied: Vec::new(),
    };
    let record = |trace: &mut ReductionTrace, name, driver: &Driver<'_>, cert| {
        trace.steps.push(TraceStep {
            name,
            letters: driver.applied.len(),
            vector: driver.v.clone(),
            certificate: cert,
        });
    };

    // Step 1: ASR on the A5-orbit of μ, adding multiples of v^μ.
    let a5 = SubsystemEmbedding::parse("A5@E6").expect("named subsystem");
    let orbit: Vec<usize> = diagram.suborbit(&a5, 0).into_iter().filter(|&n| n != 0).collect();
    let mut row: Vec<RingElement> = orbit.iter().map(|&n| driver.v[n].clone()).collect();
    row.push(driver.v[0].clone());
    let t = asr_transform(&row, row.len())?;
    for (&node, ti) in orbit.iter().zip(&t) {
        let beta = diagram.difference(node, 0).expect("A5 root");
        let sign = rep
            .root_action(&beta)?
            .iter()
            .find(|&&(r, c, _)| r == node && c == 0)
            .map(|&(_, _, s)| s)
            .expect("edge");
        let scalar = if sign > 0 { ti.clone() } else { -ti };
        driver.apply(Letter::X(beta, scalar))?;
    }
    let rest: Vec<RingElement> = driver.v[1..].to_vec();
    let cert = unimodular_certificate(&rest)?.ok_or_else(|| {
        ReductionError::InternalPostconditionFailure("step 1: row without the top is not unimodular".into())
    })?;
    record(&mut trace, "step1", &driver, Some(cert.coefficients.clone()));

    // Step 2: v^μ ≡ 1 modulo the level-2 coordinates.
    let levels = diagram.level_decomposition(1);
    let (l1, l2) = (&levels[1], &levels[2]);
    let one = ring.one();
    let factor = &one - &driver.v[0];
    for &node in l1 {
        let c = &factor * &cert.coefficients[node - 1];
        let beta = diagram.difference(0, node).expect("positive root");
        let sign = rep
            .root_action(&beta)?
            .iter()
            .find(|&&(r, col, _)| r == 0 && col == node)
            .map(|&(_, _, s)| s)
            .expect("edge");
        driver.apply(Letter::X(beta, if sign > 0 { c } else { -&c }))?;
    }
    let level2: Vec<RingElement> = l2.iter().map(|&n| driver.v[n].clone()).collect();
    let ideal = IdealDescriptor::new(&ring, level2)?;
    if !ideal.contains(&(&driver.v[0] - &one))? {
        return Err(ReductionError::InternalPostconditionFailure(
            "step 2: top is not 1 modulo the level-2 coordinates".into(),
        ));
    }
    record(&mut trace, "step2", &driver, None);

    // Step 3: D5 on level 2, modulo v^μ.
    let d5 = SubsystemEmbedding::parse("D5@E6").expect("named subsystem");
    let view2 = DlView::new(rep, d5, l2[0])?;
    let modulus = driver.v[0].clone();
    reduce_view(&mut driver, &view2, strategy, Some(&modulus))?;
    let top2 = view2.top();
    let pair = [driver.v[0].clone(), driver.v[top2].clone()];
    let cert = unimodular_certificate(&pair)?.ok_or_else(|| {
        ReductionError::InternalPostconditionFailure("step 3: top and level-2 top are not comaximal".into())
    })?;
    record(&mut trace, "step3", &driver, Some(cert.coefficients));

    // Step 4: D5' on the orbit of μ, which contains the top of level 2.
    let d5p = SubsystemEmbedding::parse("D5'@E6").expect("named subsystem");
    let view4 = DlView::new(rep, d5p, 0)?;
    if !view4.nodes().contains(&top2) {
        return Err(ReductionError::InternalPostconditionFailure(
            "step 4: level-2 top outside the D5' orbit".into(),
        ));
    }
    reduce_view(&mut driver, &view4, strategy, None)?;
    record(&mut trace, "step4", &driver, None);

    let word = finish_word(rep, v, driver.applied)?;
    Ok((word, trace))
}

/// Reduction for any supported representation: `D_l` vector or `E6` 27.
pub fn reduce(rep: &Arc<MinusculeRep>, v: &[RingElement]) -> Result<GeneratorWord, ReductionError> {
    match rep.system().cartan_type() {
        CartanType::E6 => reduce_e6(rep, v),
        CartanType::D(_) => reduce_dl(rep, v),
        _ => Err(ReductionError::UnsupportedRepresentation(rep.label())),
    }
}

/// Greedily drops letters while the replay still gives `(h v)^μ = 1`.
pub fn minimize(rep: &MinusculeRep, word: &GeneratorWord, v: &[RingElement]) -> Result<GeneratorWord, ReductionError> {
    let mut letters = word.letters.clone();
    let mut i = letters.len();
    while i > 0 {
        i -= 1;
        let mut trial = letters.clone();
        trial.remove(i);
        let candidate = GeneratorWord::new(trial.clone());
        if rep.act_word(&candidate, v)?[0].is_one() {
            letters = trial;
        }
    }
    Ok(GeneratorWord::new(letters))
}

/// For `g` in `(E6, ϖ₁)`: an elementary `h` with a unit corner in `h g`,
/// and the parabolic split of `h g`.
pub fn surjective_stability_witness(g: &GroupElement) -> Result<(GeneratorWord, ParabolicSplit), ReductionError> {
    let rep = Arc::clone(g.rep());
    let column = g.matrix().column(0);
    let h = reduce_e6(&rep, &column)?;
    let hg = rep.realize(g.ring(), &h)?.multiply(g)?;
    let split = chevalley_matsumoto(&hg)?;
    Ok((h, split))
}
