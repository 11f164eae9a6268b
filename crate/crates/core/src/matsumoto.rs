//! The parabolic decomposition `g = v · g₁ · u` for an invertible corner.
//!
//! Let `α_k` be the simple root with `μ − α_k` a weight, `Δ` the subsystem
//! spanned by the other simple roots and `Σ⁺` the positive roots outside
//! `Δ`. When `g_{μ,μ}` is a unit, column `μ` is cleared from the left by
//! `x_{−α}(c)`, `α ∈ Σ⁺`, and row `μ` from the right by `x_α(c)`, in
//! increasing height. What remains preserves the `α_k`-levels.

use std::sync::Arc;

use thiserror::Error;

use crate::group::{GeneratorWord, GroupElement, GroupError, Letter, Matrix, MinusculeRep};
use crate::rings::RingElement;
use crate::roots::Root;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("corner entry {0} is not a unit")]
    NonInvertibleCorner(String),
    #[error("input is not a group element: {0}")]
    NotAGroupElement(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Clone, Debug)]
pub struct ParabolicSplit {
    pub v: GroupElement,
    pub g1: GroupElement,
    pub u: GroupElement,
    pub pivot: usize,
}

impl ParabolicSplit {
    /// Checks `v g₁ u = g`, the shape of `g₁`, and that `v`, `u` only use
    /// roots of `∓Σ⁺`.
    pub fn verify(&self, g: &GroupElement) -> Result<bool, DecompositionError> {
        let product = self.v.multiply(&self.g1)?.multiply(&self.u)?;
        if product != *g {
            return Ok(false);
        }
        if self.g1.entry(0, 0) != g.entry(0, 0) {
            return Ok(false);
        }
        let pivot = self.pivot;
        let in_sigma = |r: &Root, sign: i32| r.0[pivot - 1] * sign > 0;
        let letters_ok = |e: &GroupElement, sign: i32| {
            e.word().is_some_and(|w| {
                w.letters
                    .iter()
                    .all(|l| matches!(l, Letter::X(..)) && in_sigma(l.root(), sign))
            })
        };
        Ok(letters_ok(&self.v, -1) && letters_ok(&self.u, 1) && block_shape_holds(self.g1.matrix(), &self.g1, pivot))
    }
}

fn levels_of(rep: &MinusculeRep, pivot: usize) -> Vec<i32> {
    rep.diagram().nodes().iter().map(|w| w.0[pivot - 1]).collect()
}

fn block_shape_holds(m: &Matrix, g: &GroupElement, pivot: usize) -> bool {
    let level = levels_of(g.rep(), pivot);
    let n = m.dim();
    (0..n).all(|r| (0..n).all(|c| level[r] == level[c] || m.get(r, c).is_zero()))
}

/// The positive roots with positive `α_pivot` coefficient, by height.
pub fn sigma_plus(rep: &MinusculeRep, pivot: usize) -> Vec<Root> {
    rep.system()
        .positive_roots()
        .iter()
        .filter(|r| r.0[pivot - 1] > 0)
        .cloned()
        .collect()
}

fn sign_at(rep: &MinusculeRep, alpha: &Root, row: usize, col: usize) -> Result<i8, GroupError> {
    Ok(rep
        .root_action(alpha)?
        .iter()
        .find(|&&(r, c, _)| r == row && c == col)
        .map(|&(_, _, s)| s)
        .expect("edge of the root action"))
}

fn signed(x: &RingElement, s: i8) -> RingElement {
    if s > 0 {
        x.clone()
    } else {
        -x
    }
}

pub fn chevalley_matsumoto(g: &GroupElement) -> Result<ParabolicSplit, DecompositionError> {
    let rep = Arc::clone(g.rep());
    let diagram = Arc::clone(rep.diagram());
    let ring = g.ring().clone();
    let pivot = diagram.pivot();
    let corner = g.entry(0, 0).clone();
    let corner_inv = corner
        .try_invert()
        .ok_or_else(|| DecompositionError::NonInvertibleCorner(corner.to_string()))?;
    let sigma = sigma_plus(&rep, pivot);
    let depth: Vec<i32> = diagram.nodes().iter().map(|w| w.depth()).collect();
    let mut m = g.matrix().clone();

    let mut left_letters: Vec<Letter> = Vec::new();
    let mut i = 0;
    while i < sigma.len() {
        let h = sigma[i].height();
        while i < sigma.len() && sigma[i].height() == h {
            let alpha = &sigma[i];
            i += 1;
            let Some(node) = diagram.shift(0, &alpha.neg()) else { continue };
            let entry = m.get(node, 0);
            if entry.is_zero() {
                continue;
            }
            let s = sign_at(&rep, &alpha.neg(), node, 0)?;
            let c = -&signed(&(entry * &corner_inv), s);
            rep.left_multiply_x(&mut m, &alpha.neg(), &c)?;
            left_letters.push(Letter::X(alpha.neg(), c));
        }
        if let Some(r) = (1..m.dim()).find(|&r| depth[r] <= h && !m.get(r, 0).is_zero()) {
            return Err(DecompositionError::NotAGroupElement(format!(
                "column entry at node {} survives clearing through height {h}",
                r + 1
            )));
        }
    }
    if let Some(r) = (1..m.dim()).find(|&r| !m.get(r, 0).is_zero()) {
        return Err(DecompositionError::NotAGroupElement(format!(
            "column entry at node {} is out of reach",
            r + 1
        )));
    }

    let mut right_letters: Vec<Letter> = Vec::new();
    for alpha in &sigma {
        let Some(node) = diagram.shift(0, &alpha.neg()) else { continue };
        let entry = m.get(0, node);
        if entry.is_zero() {
            continue;
        }
        let s = sign_at(&rep, alpha, 0, node)?;
        let c = -&signed(&(entry * &corner_inv), s);
        rep.right_multiply_x(&mut m, alpha, &c)?;
        right_letters.push(Letter::X(alpha.clone(), c));
    }
    if let Some(c) = (1..m.dim()).find(|&c| !m.get(0, c).is_zero()) {
        return Err(DecompositionError::NotAGroupElement(format!(
            "row entry at node {} is out of reach",
            c + 1
        )));
    }

    let left = GeneratorWord::new(left_letters);
    let right = GeneratorWord::new(right_letters);
    let v_word = left.inverse()?;
    let u_word = right.inverse()?;
    let v = rep.realize(&ring, &v_word)?;
    let u = rep.realize(&ring, &u_word)?;
    let g1 = match g.word() {
        Some(w) => {
            let word = left.concat(w).concat(&right);
            let g1 = rep.realize(&ring, &word)?;
            debug_assert_eq!(g1.matrix(), &m);
            g1
        }
        None => GroupElement::from_matrix(&rep, m)?,
    };
    if !block_shape_holds(g1.matrix(), &g1, pivot) {
        return Err(DecompositionError::NotAGroupElement(
            "remaining factor mixes levels".into(),
        ));
    }
    Ok(ParabolicSplit { v, g1, u, pivot })
}
