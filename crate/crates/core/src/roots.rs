//! Simply-laced root systems in simple-root coordinates.
//!
//! Fundamental roots are numbered as in Bourbaki's tables: for `E6`/`E7`
//! the chain is `1-3-4-5-6(-7)` with `2` attached to `4`; for `D_l` the
//! chain `1-...-(l-2)` forks into `l-1` and `l`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("unsupported root system type: {0}")]
    UnsupportedType(String),
    #[error("not a root: {0:?}")]
    NotARoot(Vec<i32>),
    #[error("vector has length {got}, expected rank {rank}")]
    DimensionMismatch { got: usize, rank: usize },
    #[error("generators are collinear: {0:?}")]
    Collinear(Vec<i32>),
    #[error("generated subsystem is not closed")]
    NotClosed,
    #[error("no Weyl group element maps {from:?} to {to:?}")]
    NoSuchElement { from: Vec<i32>, to: Vec<i32> },
    #[error("cannot parse root system label {0:?}")]
    Parse(String),
}

/// Integer coefficients over the fundamental roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Root(v)
    }

    pub fn coefficients(&self) -> &[i32] {
        &self.0
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Index `i` (1-based) if this is the simple root `α_i`.
    pub fn simple_index(&self) -> Option<usize> {
        if self.height() == 1 && self.is_positive() {
            self.0.iter().position(|&c| c == 1).map(|i| i + 1)
        } else {
            None
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", inner.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CartanType {
    A(usize),
    D(usize),
    E6,
    E7,
}

impl CartanType {
    pub fn parse(label: &str) -> Result<CartanType, RootError> {
        let label = label.trim();
        let bad = || RootError::Parse(label.to_string());
        let (head, rank) = label.split_at(1.min(label.len()));
        let rank: usize = rank.parse().map_err(|_| bad())?;
        match head {
            "A" if rank >= 1 => Ok(CartanType::A(rank)),
            "D" if rank >= 3 => Ok(CartanType::D(rank)),
            "E" if rank == 6 => Ok(CartanType::E6),
            "E" if rank == 7 => Ok(CartanType::E7),
            "E" | "B" | "C" | "F" | "G" => Err(RootError::UnsupportedType(label.to_string())),
            _ => Err(bad()),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            CartanType::A(l) | CartanType::D(l) => *l,
            CartanType::E6 => 6,
            CartanType::E7 => 7,
        }
    }

    /// Dynkin diagram edges, 1-based.
    fn edges(&self) -> Vec<(usize, usize)> {
        match *self {
            CartanType::A(l) => (1..l).map(|i| (i, i + 1)).collect(),
            CartanType::D(l) => {
                let mut e: Vec<_> = (1..l - 1).map(|i| (i, i + 1)).collect();
                e.push((l - 2, l));
                e
            }
            CartanType::E6 => vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)],
            CartanType::E7 => vec![(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)],
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(l) => write!(f, "A{l}"),
            CartanType::D(l) => write!(f, "D{l}"),
            CartanType::E6 => write!(f, "E6"),
            CartanType::E7 => write!(f, "E7"),
        }
    }
}

/// A full simply-laced root system.
///
/// Roots are stored positive first (by height, then lexicographically),
/// followed by their negatives in the same order.
#[derive(Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i32>>,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    highest: Root,
}

impl RootSystem {
    pub fn build(cartan_type: CartanType) -> Result<Arc<RootSystem>, RootError> {
        let rank = cartan_type.rank();
        match cartan_type {
            CartanType::A(0) => return Err(RootError::UnsupportedType("A0".into())),
            CartanType::D(l) if l < 3 => return Err(RootError::UnsupportedType(format!("D{l}"))),
            _ => {}
        }
        let mut cartan = vec![vec![0; rank]; rank];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in cartan_type.edges() {
            cartan[a - 1][b - 1] = -1;
            cartan[b - 1][a - 1] = -1;
        }

        let mut seen: HashSet<Root> = HashSet::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for i in 1..=rank {
            let r = Root::simple(rank, i);
            seen.insert(r.clone());
            queue.push_back(r);
        }
        while let Some(r) = queue.pop_front() {
            for j in 0..rank {
                let pairing: i32 = (0..rank).map(|k| r.0[k] * cartan[k][j]).sum();
                let mut s = r.clone();
                s.0[j] -= pairing;
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        let mut positive: Vec<Root> = seen.into_iter().filter(Root::is_positive).collect();
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        let highest = positive.last().cloned().expect("nonempty root system");
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(Root::neg));
        let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        Ok(Arc::new(RootSystem {
            cartan_type,
            cartan,
            roots,
            index,
            highest,
        }))
    }

    pub fn parse(label: &str) -> Result<Arc<RootSystem>, RootError> {
        RootSystem::build(CartanType::parse(label)?)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn label(&self) -> String {
        self.cartan_type.to_string()
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.roots.len() / 2]
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    /// The maximal root.
    pub fn highest_root(&self) -> &Root {
        &self.highest
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    pub fn root(&self, index: usize) -> &Root {
        &self.roots[index]
    }

    pub fn check_root(&self, r: &Root) -> Result<usize, RootError> {
        if r.0.len() != self.rank() {
            return Err(RootError::DimensionMismatch {
                got: r.0.len(),
                rank: self.rank(),
            });
        }
        self.index_of(r).ok_or_else(|| RootError::NotARoot(r.0.clone()))
    }

    /// Symmetric pairing `(u, v) = uᵀ A v`; equals `⟨u, v∨⟩` for roots.
    pub fn pairing(&self, u: &[i32], v: &[i32]) -> i32 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if u[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += u[i] * self.cartan[i][j] * v[j];
            }
        }
        s
    }

    /// `v − ⟨v, s∨⟩ s`.
    pub fn reflect(&self, s: &Root, v: &Root) -> Result<Root, RootError> {
        self.check_root(s)?;
        if v.0.len() != self.rank() {
            return Err(RootError::DimensionMismatch {
                got: v.0.len(),
                rank: self.rank(),
            });
        }
        let c = self.pairing(&v.0, &s.0);
        Ok(Root(v.0.iter().zip(&s.0).map(|(a, b)| a - c * b).collect()))
    }

    /// `α + β` when it is a root.
    pub fn sum_if_root(&self, a: &Root, b: &Root) -> Option<Root> {
        let s = a.add(b);
        self.contains(&s).then_some(s)
    }
}

/// A closed subsystem `Δ ⊆ Φ` with a chosen set of generating roots.
#[derive(Clone, Debug)]
pub struct SubsystemEmbedding {
    label: String,
    ambient: Arc<RootSystem>,
    generators: Vec<Root>,
    members: Vec<bool>,
}

impl SubsystemEmbedding {
    /// Subsystem generated by the simple roots `keep` (1-based) and `extra` roots.
    pub fn new(
        ambient: &Arc<RootSystem>,
        keep: &[usize],
        extra: &[Root],
        label: &str,
    ) -> Result<SubsystemEmbedding, RootError> {
        let mut generators: Vec<Root> = keep.iter().map(|&i| ambient.simple_root(i)).collect();
        generators.extend(extra.iter().cloned());
        SubsystemEmbedding::from_generators(ambient, generators, label)
    }

    pub fn from_generators(
        ambient: &Arc<RootSystem>,
        generators: Vec<Root>,
        label: &str,
    ) -> Result<SubsystemEmbedding, RootError> {
        for (i, g) in generators.iter().enumerate() {
            ambient.check_root(g)?;
            if generators[..i].iter().any(|h| *h == *g || *h == g.neg()) {
                return Err(RootError::Collinear(g.0.clone()));
            }
        }
        let mut members = vec![false; ambient.roots().len()];
        let mut queue: VecDeque<Root> = VecDeque::new();
        for g in &generators {
            for r in [g.clone(), g.neg()] {
                let idx = ambient.index_of(&r).expect("checked");
                if !members[idx] {
                    members[idx] = true;
                    queue.push_back(r);
                }
            }
        }
        while let Some(r) = queue.pop_front() {
            for g in &generators {
                let s = ambient.reflect(g, &r)?;
                let idx = ambient.index_of(&s).expect("reflection of a root");
                if !members[idx] {
                    members[idx] = true;
                    queue.push_back(s);
                }
            }
        }
        let emb = SubsystemEmbedding {
            label: label.to_string(),
            ambient: Arc::clone(ambient),
            generators,
            members,
        };
        if !emb.is_closed() {
            return Err(RootError::NotClosed);
        }
        Ok(emb)
    }

    /// The whole system as a subsystem of itself.
    pub fn full(ambient: &Arc<RootSystem>) -> SubsystemEmbedding {
        let keep: Vec<usize> = (1..=ambient.rank()).collect();
        let label = format!("{}@{}", ambient.label(), ambient.label());
        SubsystemEmbedding::new(ambient, &keep, &[], &label).expect("full system is closed")
    }

    /// Named subsystems: `D5@E6` (all simple roots but α₁), `D5'@E6` (all but
    /// α₆), `A5@E6` (α₁, α₃..α₆), `A1+D6@E7` (δ and α₂..α₇), and `X@X`.
    pub fn parse(label: &str) -> Result<SubsystemEmbedding, RootError> {
        let (sub, amb) = label
            .split_once('@')
            .ok_or_else(|| RootError::Parse(label.to_string()))?;
        let ambient = RootSystem::parse(amb)?;
        match (sub, ambient.cartan_type()) {
            ("D5", CartanType::E6) => SubsystemEmbedding::new(&ambient, &[2, 3, 4, 5, 6], &[], label),
            ("D5'", CartanType::E6) => SubsystemEmbedding::new(&ambient, &[1, 2, 3, 4, 5], &[], label),
            ("A5", CartanType::E6) => SubsystemEmbedding::new(&ambient, &[1, 3, 4, 5, 6], &[], label),
            ("A1+D6", CartanType::E7) => {
                let delta = ambient.highest_root().clone();
                SubsystemEmbedding::new(&ambient, &[2, 3, 4, 5, 6, 7], &[delta], label)
            }
            (s, t) if CartanType::parse(s).ok() == Some(t) => Ok(SubsystemEmbedding::full(&ambient)),
            _ => Err(RootError::Parse(label.to_string())),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn ambient(&self) -> &Arc<RootSystem> {
        &self.ambient
    }

    pub fn generators(&self) -> &[Root] {
        &self.generators
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.ambient.index_of(r).is_some_and(|i| self.members[i])
    }

    pub fn members(&self) -> Vec<Root> {
        self.ambient
            .roots()
            .iter()
            .zip(&self.members)
            .filter(|(_, m)| **m)
            .map(|(r, _)| r.clone())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|m| **m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Ambient roots outside the subsystem.
    pub fn complement(&self) -> Vec<Root> {
        self.ambient
            .roots()
            .iter()
            .zip(&self.members)
            .filter(|(_, m)| !**m)
            .map(|(r, _)| r.clone())
            .collect()
    }

    fn is_closed(&self) -> bool {
        let members = self.members();
        members.iter().all(|a| {
            members.iter().all(|b| match self.ambient.sum_if_root(a, b) {
                Some(s) => self.contains(&s),
                None => true,
            })
        })
    }

    /// Shortest word of reflections in the generators carrying `source` to
    /// `target`, by breadth-first search over the orbit of `source`.
    pub fn find_weyl_conjugator(&self, source: &Root, target: &Root) -> Result<WeylWord, RootError> {
        self.ambient.check_root(source)?;
        self.ambient.check_root(target)?;
        let mut gens = self.generators.clone();
        gens.sort();
        let mut parent: HashMap<Root, Option<(Root, usize)>> = HashMap::new();
        parent.insert(source.clone(), None);
        let mut queue = VecDeque::from([source.clone()]);
        while let Some(r) = queue.pop_front() {
            if r == *target {
                let mut letters = Vec::new();
                let mut cur = r;
                while let Some(Some((prev, g))) = parent.get(&cur) {
                    letters.push(gens[*g].clone());
                    cur = prev.clone();
                }
                letters.reverse();
                return Ok(WeylWord { letters });
            }
            for (gi, g) in gens.iter().enumerate() {
                let s = self.ambient.reflect(g, &r)?;
                if !parent.contains_key(&s) {
                    parent.insert(s.clone(), Some((r.clone(), gi)));
                    queue.push_back(s);
                }
            }
        }
        Err(RootError::NoSuchElement {
            from: source.0.clone(),
            to: target.0.clone(),
        })
    }

    /// Orbit of a root under the Weyl group of the subsystem.
    pub fn weyl_orbit(&self, seed: &Root) -> Result<Vec<Root>, RootError> {
        self.ambient.check_root(seed)?;
        let mut seen = HashSet::from([seed.clone()]);
        let mut out = vec![seed.clone()];
        let mut queue = VecDeque::from([seed.clone()]);
        while let Some(r) = queue.pop_front() {
            for g in &self.generators {
                let s = self.ambient.reflect(g, &r)?;
                if seen.insert(s.clone()) {
                    out.push(s.clone());
                    queue.push_back(s);
                }
            }
        }
        Ok(out)
    }
}

/// Product of reflections `s_{β_1}, s_{β_2}, ...`, applied in that order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeylWord {
    pub letters: Vec<Root>,
}

impl WeylWord {
    pub fn apply(&self, system: &RootSystem, v: &Root) -> Result<Root, RootError> {
        let mut cur = v.clone();
        for s in &self.letters {
            cur = system.reflect(s, &cur)?;
        }
        Ok(cur)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(label: &str) -> (usize, usize) {
        let rs = RootSystem::parse(label).unwrap();
        (rs.roots().len(), rs.positive_roots().len())
    }

    #[test]
    fn root_counts() {
        assert_eq!(count("E6"), (72, 36));
        assert_eq!(count("E7"), (126, 63));
        assert_eq!(count("A1"), (2, 1));
        for l in 1..7 {
            assert_eq!(count(&format!("A{l}")).0, l * (l + 1));
        }
        for l in 3..8 {
            assert_eq!(count(&format!("D{l}")).0, 2 * l * (l - 1));
        }
    }

    #[test]
    fn unsupported_types() {
        assert!(matches!(RootSystem::parse("E8"), Err(RootError::UnsupportedType(_))));
        assert!(matches!(RootSystem::parse("B3"), Err(RootError::UnsupportedType(_))));
        assert!(RootSystem::parse("D2").is_err());
    }

    #[test]
    fn maximal_root_of_e7() {
        let e7 = RootSystem::parse("E7").unwrap();
        assert_eq!(e7.highest_root().0, vec![2, 2, 3, 4, 3, 2, 1]);
        let e6 = RootSystem::parse("E6").unwrap();
        assert_eq!(e6.highest_root().0, vec![1, 2, 2, 3, 2, 1]);
    }

    #[test]
    fn reflections() {
        let e6 = RootSystem::parse("E6").unwrap();
        let a1 = e6.simple_root(1);
        let a2 = e6.simple_root(2);
        let a3 = e6.simple_root(3);
        assert_eq!(e6.reflect(&a1, &a1).unwrap(), a1.neg());
        assert_eq!(e6.reflect(&a1, &a3).unwrap(), a1.add(&a3));
        assert_eq!(e6.reflect(&a1, &a2).unwrap(), a2);
        let not_root = Root(vec![1, 1, 0, 0, 0, 0]);
        assert!(matches!(e6.reflect(&not_root, &a1), Err(RootError::NotARoot(_))));
    }

    #[test]
    fn named_subsystems() {
        let d5 = SubsystemEmbedding::parse("D5@E6").unwrap();
        assert_eq!(d5.len(), 40);
        let a1d6 = SubsystemEmbedding::parse("A1+D6@E7").unwrap();
        assert_eq!(a1d6.len(), 62);
        assert_eq!(a1d6.complement().len(), 64);
        let a5 = SubsystemEmbedding::parse("A5@E6").unwrap();
        assert_eq!(a5.len(), 30);
        let a1 = SubsystemEmbedding::parse("A1@A1").unwrap();
        assert_eq!(a1.len(), 2);
    }

    #[test]
    fn collinear_generators_rejected() {
        let e6 = RootSystem::parse("E6").unwrap();
        let a1 = e6.simple_root(1);
        assert!(matches!(
            SubsystemEmbedding::from_generators(&e6, vec![a1.clone(), a1.neg()], "bad"),
            Err(RootError::Collinear(_))
        ));
    }

    #[test]
    fn reflection_closure_is_closed() {
        // simply laced: α+β ∈ Φ forces s_α(β) = α+β, so orbits are closed
        let e7 = RootSystem::parse("E7").unwrap();
        let gens = vec![e7.simple_root(1), e7.simple_root(3), e7.highest_root().clone()];
        let sub = SubsystemEmbedding::from_generators(&e7, gens, "sub").unwrap();
        for a in sub.members() {
            for b in sub.members() {
                if let Some(s) = e7.sum_if_root(&a, &b) {
                    assert!(sub.contains(&s));
                }
            }
        }
    }

    #[test]
    fn conjugators() {
        let a1d6 = SubsystemEmbedding::parse("A1+D6@E7").unwrap();
        let e7 = Arc::clone(a1d6.ambient());
        let a1 = e7.simple_root(1);
        assert!(a1d6.find_weyl_conjugator(&a1, &a1).unwrap().is_empty());
        for r in a1d6.complement() {
            let w = a1d6.find_weyl_conjugator(&r, &a1).unwrap();
            assert_eq!(w.apply(&e7, &r).unwrap(), a1);
            assert!(w.letters.iter().all(|b| a1d6.contains(b)));
        }
        let d5 = SubsystemEmbedding::parse("D5@E6").unwrap();
        let e6 = Arc::clone(d5.ambient());
        assert!(matches!(
            d5.find_weyl_conjugator(&e6.simple_root(2), &e6.simple_root(1)),
            Err(RootError::NoSuchElement { .. })
        ));
    }

    #[test]
    fn root_sum_law() {
        for label in ["E6", "E7"] {
            let rs = RootSystem::parse(label).unwrap();
            for a in rs.roots() {
                for b in rs.roots() {
                    if *a == *b || *a == b.neg() {
                        continue;
                    }
                    assert!(rs.contains(&rs.reflect(a, b).unwrap()));
                    let is_sum = rs.contains(&a.add(b));
                    assert_eq!(is_sum, rs.pairing(&b.0, &a.0) == -1, "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn maximal_root_is_unique() {
        let e7 = RootSystem::parse("E7").unwrap();
        let maximal: Vec<&Root> = e7
            .positive_roots()
            .iter()
            .filter(|r| (1..=7).all(|i| !e7.contains(&r.add(&e7.simple_root(i)))))
            .collect();
        assert_eq!(maximal, vec![e7.highest_root()]);
    }

    #[test]
    fn complement_is_one_orbit() {
        let a1d6 = SubsystemEmbedding::parse("A1+D6@E7").unwrap();
        let e7 = a1d6.ambient();
        let mut orbit = a1d6.weyl_orbit(&e7.simple_root(1)).unwrap();
        let mut complement = a1d6.complement();
        orbit.sort();
        complement.sort();
        assert_eq!(orbit, complement);
    }
}
