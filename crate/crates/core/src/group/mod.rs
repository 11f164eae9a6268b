//! Elementary Chevalley groups realized in minuscule representations.
//!
//! For a simple root `α_i`, `x_{α_i}(ξ)` adds `ξ e^λ` to `e^{λ+α_i}` along
//! every `α_i`-edge of the weight diagram with sign `+1`, and `x_{−α_i}(ξ)`
//! is the transposed pattern. A non-simple positive root `α` is reached from
//! a simple root by simple reflections; its root element is defined by
//! conjugating the previous one with `w_{α_j}(1)`. Since root strings in a
//! minuscule module have length one, `x_α(ξ) = 1 + ξ E_α` with `E_α² = 0`.

mod matrix;
mod word;

use std::collections::VecDeque;
use std::sync::Arc;

use thiserror::Error;

pub use matrix::Matrix;
pub use word::{GeneratorWord, Letter};

use crate::rings::{Ring, RingElement, RingError};
use crate::roots::{Root, RootError, RootSystem};
use crate::weights::{WeightDiagram, WeightError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("not a unit: {0}")]
    NotAUnit(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("representation mismatch: {0} vs {1}")]
    RepresentationMismatch(String, String),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Weight(#[from] WeightError),
}

/// Signed action of the Lie algebra element `e_α`: `E_α e^col = sign · e^row`.
type RootAction = Vec<(usize, usize, i8)>;

/// A minuscule representation together with its root-element actions.
#[derive(Debug)]
pub struct MinusculeRep {
    diagram: Arc<WeightDiagram>,
    actions: Vec<RootAction>,
}

impl MinusculeRep {
    pub fn new(diagram: &Arc<WeightDiagram>) -> Arc<MinusculeRep> {
        let system = Arc::clone(diagram.system());
        let rank = system.rank();
        let npos = system.positive_roots().len();
        let mut actions: Vec<Option<RootAction>> = vec![None; system.roots().len()];
        for i in 1..=rank {
            let pos: RootAction = diagram
                .edges()
                .iter()
                .filter(|e| e.2 == i)
                .map(|&(from, to, _)| (from, to, 1))
                .collect();
            let neg = pos.iter().map(|&(r, c, s)| (c, r, s)).collect();
            let idx = system.index_of(&system.simple_root(i)).expect("simple root");
            actions[idx] = Some(pos);
            actions[idx + npos] = Some(neg);
        }

        let weyl: Vec<Vec<(usize, i8)>> = (1..=rank)
            .map(|j| {
                let idx = system.index_of(&system.simple_root(j)).expect("simple root");
                signed_permutation(
                    diagram.len(),
                    actions[idx].as_ref().expect("set"),
                    actions[idx + npos].as_ref().expect("set"),
                )
            })
            .collect();

        let mut queue: VecDeque<Root> = (1..=rank).map(|i| system.simple_root(i)).collect();
        while let Some(parent) = queue.pop_front() {
            let pidx = system.index_of(&parent).expect("root");
            for j in 1..=rank {
                let child = system
                    .reflect(&system.simple_root(j), &parent)
                    .expect("simple root");
                if !child.is_positive() {
                    continue;
                }
                let cidx = system.index_of(&child).expect("root");
                if actions[cidx].is_some() {
                    continue;
                }
                let w = &weyl[j - 1];
                actions[cidx] = Some(conjugate(w, actions[pidx].as_ref().expect("parent")));
                actions[cidx + npos] = Some(conjugate(w, actions[pidx + npos].as_ref().expect("parent")));
                queue.push_back(child);
            }
        }
        Arc::new(MinusculeRep {
            diagram: Arc::clone(diagram),
            actions: actions.into_iter().map(|a| a.expect("every root reached")).collect(),
        })
    }

    /// `E6:w1`, `E7:w7`, `D5:w1`, ...
    pub fn parse(label: &str) -> Result<Arc<MinusculeRep>, GroupError> {
        Ok(MinusculeRep::new(&WeightDiagram::parse(label)?))
    }

    pub fn diagram(&self) -> &Arc<WeightDiagram> {
        &self.diagram
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        self.diagram.system()
    }

    pub fn label(&self) -> String {
        self.diagram.label()
    }

    pub fn dim(&self) -> usize {
        self.diagram.len()
    }

    /// Nonzero entries `(row, col, sign)` of `E_α`.
    pub fn root_action(&self, alpha: &Root) -> Result<&[(usize, usize, i8)], GroupError> {
        let idx = self.system().check_root(alpha)?;
        Ok(&self.actions[idx])
    }

    pub fn identity(self: &Arc<Self>, ring: &Ring) -> GroupElement {
        GroupElement {
            rep: Arc::clone(self),
            matrix: Matrix::identity(ring, self.dim()),
            word: Some(GeneratorWord::default()),
        }
    }

    pub fn realize(self: &Arc<Self>, ring: &Ring, word: &GeneratorWord) -> Result<GroupElement, GroupError> {
        let mut matrix = Matrix::identity(ring, self.dim());
        for letter in &word.letters {
            self.right_multiply(&mut matrix, letter)?;
        }
        Ok(GroupElement {
            rep: Arc::clone(self),
            matrix,
            word: Some(word.clone()),
        })
    }

    fn realize_one(self: &Arc<Self>, letter: Letter) -> Result<GroupElement, GroupError> {
        let ring = letter.scalar().ring().clone();
        self.realize(&ring, &GeneratorWord::new(vec![letter]))
    }

    pub fn x(self: &Arc<Self>, alpha: &Root, xi: &RingElement) -> Result<GroupElement, GroupError> {
        self.realize_one(Letter::X(alpha.clone(), xi.clone()))
    }

    pub fn w(self: &Arc<Self>, alpha: &Root, eps: &RingElement) -> Result<GroupElement, GroupError> {
        self.realize_one(Letter::W(alpha.clone(), eps.clone()))
    }

    pub fn h(self: &Arc<Self>, alpha: &Root, eps: &RingElement) -> Result<GroupElement, GroupError> {
        self.realize_one(Letter::H(alpha.clone(), eps.clone()))
    }

    /// `z_α(ξ, ζ) = x_{−α}(−ζ) x_α(ξ) x_{−α}(ζ)`.
    pub fn z_word(alpha: &Root, xi: &RingElement, zeta: &RingElement) -> GeneratorWord {
        GeneratorWord::new(vec![
            Letter::X(alpha.neg(), -zeta),
            Letter::X(alpha.clone(), xi.clone()),
            Letter::X(alpha.neg(), zeta.clone()),
        ])
    }

    pub fn z(self: &Arc<Self>, alpha: &Root, xi: &RingElement, zeta: &RingElement) -> Result<GroupElement, GroupError> {
        xi.checked_add(zeta)?;
        self.realize(xi.ring(), &MinusculeRep::z_word(alpha, xi, zeta))
    }

    fn check_scalar(ring: &Ring, s: &RingElement) -> Result<(), GroupError> {
        if s.ring() != ring {
            return Err(RingError::DescriptorMismatch {
                left: ring.to_string(),
                right: s.ring().to_string(),
            }
            .into());
        }
        Ok(())
    }

    /// `m ← x_α(ξ) · m` as row operations.
    pub fn left_multiply_x(&self, m: &mut Matrix, alpha: &Root, xi: &RingElement) -> Result<(), GroupError> {
        MinusculeRep::check_scalar(m.ring(), xi)?;
        if xi.is_zero() {
            return Ok(());
        }
        for &(r, c, s) in self.root_action(alpha)? {
            m.add_row_multiple(r, c, &signed(xi, s));
        }
        Ok(())
    }

    /// `m ← m · x_α(ξ)` as column operations.
    pub fn right_multiply_x(&self, m: &mut Matrix, alpha: &Root, xi: &RingElement) -> Result<(), GroupError> {
        MinusculeRep::check_scalar(m.ring(), xi)?;
        if xi.is_zero() {
            return Ok(());
        }
        for &(r, c, s) in self.root_action(alpha)? {
            m.add_column_multiple(c, r, &signed(xi, s));
        }
        Ok(())
    }

    pub fn right_multiply(&self, m: &mut Matrix, letter: &Letter) -> Result<(), GroupError> {
        for (root, xi) in letter.unipotent_factors()? {
            self.right_multiply_x(m, &root, &xi)?;
        }
        Ok(())
    }

    pub fn left_multiply(&self, m: &mut Matrix, letter: &Letter) -> Result<(), GroupError> {
        for (root, xi) in letter.unipotent_factors()?.iter().rev() {
            self.left_multiply_x(m, root, xi)?;
        }
        Ok(())
    }

    /// `v ← x_α(ξ) v`.
    pub fn act_x(&self, v: &mut [RingElement], alpha: &Root, xi: &RingElement) -> Result<(), GroupError> {
        if v.len() != self.dim() {
            return Err(GroupError::DimensionMismatch {
                expected: self.dim(),
                got: v.len(),
            });
        }
        if xi.is_zero() {
            return Ok(());
        }
        for &(r, c, s) in self.root_action(alpha)? {
            if v[c].is_zero() {
                continue;
            }
            let delta = &signed(xi, s) * &v[c];
            v[r] = v[r].checked_add(&delta)?;
        }
        Ok(())
    }

    pub fn act_letter(&self, v: &mut [RingElement], letter: &Letter) -> Result<(), GroupError> {
        for (root, xi) in letter.unipotent_factors()?.iter().rev() {
            self.act_x(v, root, xi)?;
        }
        Ok(())
    }

    /// `word · v`.
    pub fn act_word(&self, word: &GeneratorWord, v: &[RingElement]) -> Result<Vec<RingElement>, GroupError> {
        let mut out = v.to_vec();
        for letter in word.letters.iter().rev() {
            self.act_letter(&mut out, letter)?;
        }
        Ok(out)
    }

    pub fn basis_vector(&self, ring: &Ring, node: usize) -> Vec<RingElement> {
        let mut v = vec![ring.zero(); self.dim()];
        v[node] = ring.one();
        v
    }
}

fn signed(xi: &RingElement, s: i8) -> RingElement {
    if s > 0 {
        xi.clone()
    } else {
        -xi
    }
}

/// `w_{α}(1) = x_α(1) x_{−α}(−1) x_α(1)` computed over `Z`, returned as
/// `e^c ↦ sign · e^{π(c)}`.
fn signed_permutation(n: usize, pos: &RootAction, neg: &RootAction) -> Vec<(usize, i8)> {
    let z = Ring::integers();
    let mut m = Matrix::identity(&z, n);
    let apply = |m: &mut Matrix, act: &RootAction, xi: i64| {
        for &(r, c, s) in act {
            m.add_column_multiple(c, r, &z.int(xi * i64::from(s)));
        }
    };
    apply(&mut m, pos, 1);
    apply(&mut m, neg, -1);
    apply(&mut m, pos, 1);
    (0..n)
        .map(|c| {
            let r = (0..n).find(|&r| !m.get(r, c).is_zero()).expect("permutation column");
            let v = m.get(r, c);
            (r, if v.is_one() { 1 } else { -1 })
        })
        .collect()
}

/// `W E W⁻¹` for a signed permutation `W`.
fn conjugate(w: &[(usize, i8)], action: &RootAction) -> RootAction {
    action
        .iter()
        .map(|&(r, c, s)| (w[r].0, w[c].0, s * w[r].1 * w[c].1))
        .collect()
}

/// A matrix in a minuscule representation, with the word that produced it
/// when one is known.
#[derive(Clone, Debug)]
pub struct GroupElement {
    rep: Arc<MinusculeRep>,
    matrix: Matrix,
    word: Option<GeneratorWord>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &GroupElement) -> bool {
        self.matrix == other.matrix
    }
}

impl GroupElement {
    pub fn from_matrix(rep: &Arc<MinusculeRep>, matrix: Matrix) -> Result<GroupElement, GroupError> {
        if matrix.dim() != rep.dim() {
            return Err(GroupError::DimensionMismatch {
                expected: rep.dim(),
                got: matrix.dim(),
            });
        }
        Ok(GroupElement {
            rep: Arc::clone(rep),
            matrix,
            word: None,
        })
    }

    pub fn rep(&self) -> &Arc<MinusculeRep> {
        &self.rep
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn ring(&self) -> &Ring {
        self.matrix.ring()
    }

    pub fn word(&self) -> Option<&GeneratorWord> {
        self.word.as_ref()
    }

    pub fn entry(&self, r: usize, c: usize) -> &RingElement {
        self.matrix.get(r, c)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    fn same_rep(&self, other: &GroupElement) -> Result<(), GroupError> {
        if !Arc::ptr_eq(&self.rep, &other.rep) && self.rep.label() != other.rep.label() {
            return Err(GroupError::RepresentationMismatch(self.rep.label(), other.rep.label()));
        }
        Ok(())
    }

    pub fn multiply(&self, other: &GroupElement) -> Result<GroupElement, GroupError> {
        self.same_rep(other)?;
        let matrix = self.matrix.mul(&other.matrix)?;
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => Some(a.concat(b)),
            _ => None,
        };
        Ok(GroupElement {
            rep: Arc::clone(&self.rep),
            matrix,
            word,
        })
    }

    /// Appends a letter on the right, keeping provenance.
    pub fn times_letter(&self, letter: &Letter) -> Result<GroupElement, GroupError> {
        let mut out = self.clone();
        self.rep.right_multiply(&mut out.matrix, letter)?;
        if let Some(w) = out.word.as_mut() {
            w.push(letter.clone());
        }
        Ok(out)
    }

    /// Prepends a letter on the left, keeping provenance.
    pub fn letter_times(&self, letter: &Letter) -> Result<GroupElement, GroupError> {
        let mut out = self.clone();
        self.rep.left_multiply(&mut out.matrix, letter)?;
        if let Some(w) = out.word.as_mut() {
            w.letters.insert(0, letter.clone());
        }
        Ok(out)
    }

    /// Inverse by word reversal when the provenance is known, otherwise by
    /// the adjugate.
    pub fn invert(&self) -> Result<GroupElement, GroupError> {
        match &self.word {
            Some(w) => self.rep.realize(self.ring(), &w.inverse()?),
            None => {
                let matrix = self.matrix.inverse().ok_or(GroupError::NotInvertible)?;
                Ok(GroupElement {
                    rep: Arc::clone(&self.rep),
                    matrix,
                    word: None,
                })
            }
        }
    }

    pub fn act(&self, v: &[RingElement]) -> Result<Vec<RingElement>, GroupError> {
        if v.len() != self.rep.dim() {
            return Err(GroupError::DimensionMismatch {
                expected: self.rep.dim(),
                got: v.len(),
            });
        }
        Ok(self.matrix.apply(v))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::json!({
            "rep": self.rep.label(),
            "ring": self.ring().to_string(),
            "matrix": self.matrix.to_json(),
        });
        if let Some(w) = &self.word {
            obj["word"] = w.to_json();
        }
        obj
    }
}
