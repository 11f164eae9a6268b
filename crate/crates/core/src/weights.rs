//! Weights and weight diagrams of minuscule representations.
//!
//! A weight `λ` of the representation with highest weight `μ = ϖ_k` is
//! stored through its depth vector `d`, where `λ = μ − Σ d_i α_i`. All the
//! weights are nonnegative depth vectors, and `⟨λ, α_j∨⟩ = δ_{jk} − (A d)_j`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde_json::json;
use thiserror::Error;

use crate::roots::{CartanType, Root, RootError, RootSystem, SubsystemEmbedding};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("({0}, w{1}) is not a supported minuscule representation")]
    NotMinuscule(String, usize),
    #[error("cannot parse representation label {0:?}")]
    Parse(String),
    #[error("weight {0:?} is not in the diagram")]
    NotAWeight(Vec<i32>),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// Depth vector of a weight below the highest weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn depth(&self) -> i32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", inner.join(","))
    }
}

pub fn is_minuscule(cartan_type: CartanType, k: usize) -> bool {
    match cartan_type {
        CartanType::A(l) => (1..=l).contains(&k),
        CartanType::D(l) => k == 1 || k == l - 1 || k == l,
        CartanType::E6 => k == 1 || k == 6,
        CartanType::E7 => k == 7,
    }
}

/// `⟨λ, α_j∨⟩` for every simple root, given the depth vector of `λ`.
fn dynkin_labels(system: &RootSystem, k: usize, d: &[i32]) -> Vec<i32> {
    let a = system.cartan_matrix();
    (0..system.rank())
        .map(|j| {
            let ad: i32 = (0..system.rank()).map(|i| a[j][i] * d[i]).sum();
            i32::from(j + 1 == k) - ad
        })
        .collect()
}

/// The Weyl orbit of `ϖ_k`, closed under simple reflections.
pub fn weight_orbit(system: &Arc<RootSystem>, k: usize) -> Result<Vec<Weight>, WeightError> {
    if !is_minuscule(system.cartan_type(), k) {
        return Err(WeightError::NotMinuscule(system.label(), k));
    }
    let top = Weight(vec![0; system.rank()]);
    let mut seen = HashSet::from([top.clone()]);
    let mut out = vec![top.clone()];
    let mut queue = VecDeque::from([top]);
    while let Some(w) = queue.pop_front() {
        let labels = dynkin_labels(system, k, &w.0);
        for (j, &c) in labels.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut next = w.clone();
            next.0[j] += c;
            if seen.insert(next.clone()) {
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(out)
}

/// A labelled Hasse diagram of a minuscule weight orbit.
///
/// Nodes are numbered by depth, then lexicographically by depth vector, so
/// node `0` is always the highest weight. An edge `(from, to, i)` means
/// `from = to + α_i`.
#[derive(Debug)]
pub struct WeightDiagram {
    system: Arc<RootSystem>,
    k: usize,
    nodes: Vec<Weight>,
    index: HashMap<Weight, usize>,
    labels: Vec<Vec<i32>>,
    edges: Vec<(usize, usize, usize)>,
}

impl WeightDiagram {
    pub fn build(system: &Arc<RootSystem>, k: usize) -> Result<Arc<WeightDiagram>, WeightError> {
        let mut nodes = weight_orbit(system, k)?;
        nodes.sort_by(|a, b| a.depth().cmp(&b.depth()).then_with(|| a.cmp(b)));
        let index: HashMap<Weight, usize> =
            nodes.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let labels = nodes.iter().map(|w| dynkin_labels(system, k, &w.0)).collect();
        let mut edges = Vec::new();
        for (from, w) in nodes.iter().enumerate() {
            for i in 0..system.rank() {
                let mut lower = w.clone();
                lower.0[i] += 1;
                if let Some(&to) = index.get(&lower) {
                    edges.push((from, to, i + 1));
                }
            }
        }
        Ok(Arc::new(WeightDiagram {
            system: Arc::clone(system),
            k,
            nodes,
            index,
            labels,
            edges,
        }))
    }

    /// Parses labels like `E6:w1` or `D5:w1`.
    pub fn parse(label: &str) -> Result<Arc<WeightDiagram>, WeightError> {
        let bad = || WeightError::Parse(label.to_string());
        let (sys, weight) = label.trim().split_once(':').ok_or_else(bad)?;
        let k: usize = weight
            .strip_prefix('w')
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| bad())?;
        let system = RootSystem::parse(sys)?;
        WeightDiagram::build(&system, k)
    }

    pub fn label(&self) -> String {
        format!("{}:w{}", self.system.label(), self.k)
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn highest_index(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Weight] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &Weight {
        &self.nodes[i]
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    /// `⟨λ, α_j∨⟩` for all `j`.
    pub fn dynkin_labels(&self, node: usize) -> &[i32] {
        &self.labels[node]
    }

    /// `⟨λ, β∨⟩`.
    pub fn pairing(&self, node: usize, beta: &Root) -> i32 {
        self.labels[node].iter().zip(&beta.0).map(|(a, b)| a * b).sum()
    }

    /// Node of `λ + β`, if that is a weight.
    pub fn shift(&self, node: usize, beta: &Root) -> Option<usize> {
        let d: Vec<i32> = self.nodes[node].0.iter().zip(&beta.0).map(|(a, b)| a - b).collect();
        self.index.get(&Weight(d)).copied()
    }

    /// `λ_a − λ_b` as a root, when it is one.
    pub fn difference(&self, a: usize, b: usize) -> Option<Root> {
        let r = Root(self.nodes[b].0.iter().zip(&self.nodes[a].0).map(|(x, y)| x - y).collect());
        self.system.contains(&r).then_some(r)
    }

    /// Nodes grouped by the coefficient of `α_pivot` in `μ − λ`.
    pub fn level_decomposition(&self, pivot: usize) -> Vec<Vec<usize>> {
        let mut levels: Vec<Vec<usize>> = Vec::new();
        for (i, w) in self.nodes.iter().enumerate() {
            let lvl = w.0[pivot - 1] as usize;
            if levels.len() <= lvl {
                levels.resize(lvl + 1, Vec::new());
            }
            levels[lvl].push(i);
        }
        levels
    }

    /// Orbit of a node under the Weyl group of a subsystem, sorted.
    pub fn suborbit(&self, embedding: &SubsystemEmbedding, seed: usize) -> Vec<usize> {
        let mut seen = HashSet::from([seed]);
        let mut queue = VecDeque::from([seed]);
        while let Some(n) = queue.pop_front() {
            for g in embedding.generators() {
                let c = self.pairing(n, g);
                if c == 0 {
                    continue;
                }
                let reflected = Root(g.0.iter().map(|b| c * b).collect());
                let next = self.shift(n, &reflected.neg()).expect("Weyl orbit stays in the diagram");
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        let mut out: Vec<usize> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// The unique simple root `α_k` with `μ − α_k` a weight.
    pub fn pivot(&self) -> usize {
        self.k
    }

    pub fn to_json(&self) -> serde_json::Value {
        let nodes: Vec<_> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, w)| json!({ "index": i + 1, "depth": w.0 }))
            .collect();
        let edges: Vec<_> = self.edges.iter().map(|(a, b, i)| json!([a + 1, b + 1, i])).collect();
        json!({ "rep": self.label(), "nodes": nodes, "edges": edges })
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!("digraph \"{}\" {{\n  rankdir=LR;\n", self.label());
        for (i, w) in self.nodes.iter().enumerate() {
            s.push_str(&format!("  n{} [label=\"{} {}\"];\n", i + 1, i + 1, w));
        }
        for (a, b, i) in &self.edges {
            s.push_str(&format!("  n{} -> n{} [label=\"{}\"];\n", a + 1, b + 1, i));
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(label: &str) -> Arc<WeightDiagram> {
        WeightDiagram::parse(label).unwrap()
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(diagram("E6:w1").len(), 27);
        assert_eq!(diagram("E6:w6").len(), 27);
        assert_eq!(diagram("E7:w7").len(), 56);
        assert_eq!(diagram("D5:w1").len(), 10);
        assert_eq!(diagram("D5:w5").len(), 16);
        assert_eq!(diagram("A1:w1").len(), 2);
        assert_eq!(diagram("A4:w2").len(), 10);
        assert!(matches!(
            WeightDiagram::parse("E7:w1"),
            Err(WeightError::NotMinuscule(_, 1))
        ));
        assert!(WeightDiagram::parse("E6-w1").is_err());
    }

    #[test]
    fn top_has_one_edge() {
        let d = diagram("E6:w1");
        let out: Vec<_> = d.edges().iter().filter(|e| e.0 == 0).collect();
        assert_eq!(out, vec![&(0, 1, 1)]);
        let a1 = diagram("A1:w1");
        assert_eq!(a1.edges(), &[(0, 1, 1)]);
    }

    #[test]
    fn e7_edge_labels() {
        let d = diagram("E7:w7");
        let mut counts = [0usize; 8];
        for e in d.edges() {
            counts[e.2] += 1;
        }
        // every label appears on 12 edges: each simple root has 12 strings of length one
        assert!(counts[1..].iter().all(|&c| c == 12), "{counts:?}");
    }

    #[test]
    fn levels() {
        let sizes = |d: &WeightDiagram, p| {
            d.level_decomposition(p).iter().map(Vec::len).collect::<Vec<_>>()
        };
        assert_eq!(sizes(&diagram("E6:w1"), 1), vec![1, 16, 10]);
        assert_eq!(sizes(&diagram("A1:w1"), 1), vec![1, 1]);
        assert_eq!(sizes(&diagram("E7:w7"), 7), vec![1, 27, 27, 1]);
    }

    #[test]
    fn suborbits() {
        let d = diagram("E6:w1");
        let a5 = SubsystemEmbedding::parse("A5@E6").unwrap();
        assert_eq!(d.suborbit(&a5, 0).len(), 6);
        let d5 = SubsystemEmbedding::parse("D5@E6").unwrap();
        let l2 = &d.level_decomposition(1)[2];
        assert_eq!(&d.suborbit(&d5, l2[0]), l2);
        assert_eq!(d.suborbit(&d5, 0), vec![0]);
        let d5p = SubsystemEmbedding::parse("D5'@E6").unwrap();
        let orbit = d.suborbit(&d5p, 0);
        assert_eq!(orbit.len(), 10);
        assert!(orbit.contains(&l2[0]));
    }

    #[test]
    fn hasse_property() {
        for label in ["E6:w1", "E7:w7", "D6:w1", "A5:w3"] {
            let d = diagram(label);
            let mut indeg = vec![0; d.len()];
            for e in d.edges() {
                indeg[e.1] += 1;
                assert_eq!(d.node(e.0).depth() + 1, d.node(e.1).depth());
            }
            assert_eq!(indeg.iter().filter(|&&x| x == 0).count(), 1);
            assert_eq!(indeg[0], 0);
        }
    }

    #[test]
    fn string_lengths_and_parallelograms() {
        for label in ["E6:w1", "E7:w7"] {
            let d = diagram(label);
            let rs = d.system();
            for n in 0..d.len() {
                for a in rs.roots() {
                    let up = d.shift(n, a);
                    let twice = Root(a.0.iter().map(|c| 2 * c).collect());
                    assert!(up.is_none() || d.shift(n, &twice).is_none());
                    assert_eq!(up.is_some(), d.pairing(n, a) == -1);
                }
                let l = rs.rank();
                for i in 1..=l {
                    for j in (i + 1)..=l {
                        let ai = rs.simple_root(i).neg();
                        let aj = rs.simple_root(j).neg();
                        if let (Some(x), Some(y)) = (d.shift(n, &ai), d.shift(n, &aj)) {
                            let corner_a = d.shift(x, &aj);
                            let corner_b = d.shift(y, &ai);
                            assert_eq!(corner_a, corner_b);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn exports() {
        let d = diagram("A1:w1");
        let j = d.to_json();
        assert_eq!(j["nodes"].as_array().unwrap().len(), 2);
        assert_eq!(j["edges"], json!([[1, 2, 1]]));
        assert!(d.to_dot().contains("n1 -> n2 [label=\"1\"]"));
    }
}
