//! Reduction inside a `D_l` vector-representation view.
//!
//! A view is a `W(Δ)`-orbit `Q` of weights with `Δ` of type `D_l` acting on
//! it as on the `2l`-dimensional vector representation. Every node `σ ∈ Q`
//! has a unique partner `σ̄ ∈ Q` with `λ_σ − λ_σ̄ ∉ Δ`; for any other pair
//! `σ ≠ τ` the root `λ_τ − λ_σ` lies in `Δ`, so `v^τ` can absorb multiples
//! of `v^σ`. The price is a side effect `v^σ̄ ← v^σ̄ ± c v^τ̄`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{ReductionError, ReductionStrategy};
use crate::group::{Letter, MinusculeRep};
use crate::rings::numtheory::{crt, prime_divisors_u64, strip_primes};
use crate::rings::{unimodular_certificate, IdealDescriptor, RingDescriptor, RingElement};
use crate::roots::{Root, SubsystemEmbedding};

#[derive(Debug, Clone)]
pub struct DlView {
    rep: Arc<MinusculeRep>,
    delta: SubsystemEmbedding,
    nodes: Vec<usize>,
    partner: Vec<usize>,
}

impl DlView {
    /// The `W(Δ)`-orbit of `seed`; fails unless it has the vector-representation shape.
    pub fn new(rep: &Arc<MinusculeRep>, delta: SubsystemEmbedding, seed: usize) -> Result<DlView, ReductionError> {
        let nodes = rep.diagram().suborbit(&delta, seed);
        let diagram = rep.diagram();
        let mut partner = Vec::with_capacity(nodes.len());
        for &s in &nodes {
            let unlinked: Vec<usize> = nodes
                .iter()
                .copied()
                .filter(|&t| t != s && !diagram.difference(t, s).is_some_and(|r| delta.contains(&r)))
                .collect();
            if unlinked.len() != 1 || nodes.len() < 6 {
                return Err(ReductionError::UnsupportedRepresentation(format!(
                    "orbit of node {} under {} is not a D_l vector representation",
                    seed + 1,
                    delta.label()
                )));
            }
            partner.push(unlinked[0]);
        }
        Ok(DlView {
            rep: Arc::clone(rep),
            delta,
            nodes,
            partner,
        })
    }

    /// The whole `(D_l, ϖ₁)` representation.
    pub fn full(rep: &Arc<MinusculeRep>) -> Result<DlView, ReductionError> {
        let delta = SubsystemEmbedding::full(rep.system());
        DlView::new(rep, delta, 0)
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    /// The node of minimal depth.
    pub fn top(&self) -> usize {
        self.nodes[0]
    }

    pub fn partner(&self, node: usize) -> usize {
        let i = self.nodes.iter().position(|&n| n == node).expect("node of the view");
        self.partner[i]
    }

    /// Root carrying `source` to `target` and the sign of its action there.
    fn link(&self, target: usize, source: usize) -> (Root, i8) {
        let beta = self
            .rep
            .diagram()
            .difference(target, source)
            .expect("linked nodes of the view");
        debug_assert!(self.delta.contains(&beta));
        let sign = self
            .rep
            .root_action(&beta)
            .expect("root")
            .iter()
            .find(|&&(r, c, _)| r == target && c == source)
            .map(|&(_, _, s)| s)
            .expect("edge");
        (beta, sign)
    }
}

/// Running state: the vector and the letters applied so far, oldest first.
pub(crate) struct Driver<'a> {
    pub rep: &'a MinusculeRep,
    pub v: Vec<RingElement>,
    pub applied: Vec<Letter>,
}

impl Driver<'_> {
    pub fn apply(&mut self, letter: Letter) -> Result<(), ReductionError> {
        if letter.scalar().is_zero() {
            return Ok(());
        }
        self.rep.act_letter(&mut self.v, &letter)?;
        self.applied.push(letter);
        Ok(())
    }

    /// `v^target += c · v^source` through the root linking them.
    fn add(&mut self, view: &DlView, target: usize, source: usize, c: &RingElement) -> Result<(), ReductionError> {
        let (beta, sign) = view.link(target, source);
        let scalar = if sign > 0 { c.clone() } else { -c };
        self.apply(Letter::X(beta, scalar))
    }
}

/// `x⁻¹` modulo `a` (or in the ring when there is no modulus).
pub(crate) fn inverse_mod(x: &RingElement, modulus: Option<&RingElement>) -> Result<Option<RingElement>, ReductionError> {
    match modulus {
        None => Ok(x.try_invert()),
        Some(a) => Ok(unimodular_certificate(&[x.clone(), a.clone()])?.map(|c| c.coefficients[0].clone())),
    }
}

fn is_one_mod(x: &RingElement, modulus: Option<&RingElement>) -> Result<bool, ReductionError> {
    match modulus {
        None => Ok(x.is_one()),
        Some(a) => {
            let ideal = IdealDescriptor::new(a.ring(), vec![a.clone()])?;
            Ok(ideal.contains(&(x - &x.ring().one()))?)
        }
    }
}

/// Makes `v^top ≡ 1` (mod `modulus`) with letters of `Δ`.
pub(crate) fn reduce_view(
    driver: &mut Driver<'_>,
    view: &DlView,
    strategy: ReductionStrategy,
    modulus: Option<&RingElement>,
) -> Result<(), ReductionError> {
    let top = view.top();
    if is_one_mod(&driver.v[top], modulus)? {
        return Ok(());
    }
    let row: Vec<RingElement> = view.nodes.iter().map(|&n| driver.v[n].clone()).collect();
    let mut check = row.clone();
    check.extend(modulus.cloned());
    if unimodular_certificate(&check)?.is_none() {
        return Err(ReductionError::NotUnimodular);
    }
    if finish(driver, view, modulus)? {
        return Ok(());
    }
    match strategy {
        ReductionStrategy::Semilocal(n) => steer_semilocal(driver, view, n, modulus)?,
        ReductionStrategy::Euclidean => euclid(driver, view, modulus)?,
    }
    if !finish(driver, view, modulus)? {
        return Err(ReductionError::InternalPostconditionFailure(
            "no unit coordinate after steering".into(),
        ));
    }
    Ok(())
}

/// Uses any unit coordinate to set `v^top ≡ 1`; `false` if there is none.
fn finish(driver: &mut Driver<'_>, view: &DlView, modulus: Option<&RingElement>) -> Result<bool, ReductionError> {
    let top = view.top();
    if is_one_mod(&driver.v[top], modulus)? {
        return Ok(true);
    }
    let bottom = view.partner(top);
    let tau = view.nodes[1..]
        .iter()
        .copied()
        .find(|&n| n != bottom)
        .expect("view has at least six nodes");
    let mut source = None;
    for &n in &view.nodes {
        if n != top && n != bottom && inverse_mod(&driver.v[n], modulus)?.is_some() {
            source = Some(n);
            break;
        }
    }
    if source.is_none() {
        for n in [top, bottom] {
            if inverse_mod(&driver.v[n], modulus)?.is_some() {
                // route the unit through τ first
                let inv = inverse_mod(&driver.v[n], modulus)?.expect("unit");
                let one = driver.v[tau].ring().one();
                let c = &(&one - &driver.v[tau]) * &inv;
                driver.add(view, tau, n, &c)?;
                source = Some(tau);
                break;
            }
        }
    }
    let Some(source) = source else { return Ok(false) };
    let inv = inverse_mod(&driver.v[source], modulus)?.ok_or_else(|| {
        ReductionError::InternalPostconditionFailure("unit coordinate lost".into())
    })?;
    let one = driver.v[top].ring().one();
    let c = &(&one - &driver.v[top]) * &inv;
    driver.add(view, top, source, &c)?;
    if !is_one_mod(&driver.v[top], modulus)? {
        return Err(ReductionError::InternalPostconditionFailure(
            "top coordinate did not reach 1".into(),
        ));
    }
    Ok(true)
}

/// `Z/n`: make `v^τ` nonzero modulo every relevant prime, one prime at a time.
fn steer_semilocal(
    driver: &mut Driver<'_>,
    view: &DlView,
    n: u64,
    modulus: Option<&RingElement>,
) -> Result<(), ReductionError> {
    let ring = driver.v[view.top()].ring().clone();
    let primes: Vec<u64> = prime_divisors_u64(n)
        .into_iter()
        .filter(|&p| modulus.is_none_or(|a| a.as_residue().expect("residue") % p == 0))
        .collect();
    let top = view.top();
    let bottom = view.partner(top);
    let tau = view.nodes[1..].iter().copied().find(|&x| x != bottom).expect("six nodes");
    let tau_bar = view.partner(tau);
    let residue = |x: &RingElement, p: u64| x.as_residue().expect("residue") % p;
    let unit_at = |primes_hit: &[u64]| -> RingElement {
        let residues: Vec<(u64, u64)> = primes.iter().map(|&p| (u64::from(primes_hit.contains(&p)), p)).collect();
        ring.from_bigint(&crt(&residues))
    };

    // primes where only v^τ̄ survives: move it next to τ first
    let sigma0 = view
        .nodes
        .iter()
        .copied()
        .find(|&x| x != tau && x != tau_bar)
        .expect("six nodes");
    let lonely: Vec<u64> = primes
        .iter()
        .copied()
        .filter(|&p| {
            residue(&driver.v[tau_bar], p) != 0
                && view.nodes.iter().all(|&x| x == tau_bar || residue(&driver.v[x], p) == 0)
        })
        .collect();
    if !lonely.is_empty() {
        let c = unit_at(&lonely);
        driver.add(view, sigma0, tau_bar, &c)?;
    }

    for &p in &primes {
        if residue(&driver.v[tau], p) != 0 {
            continue;
        }
        let source = view
            .nodes
            .iter()
            .copied()
            .find(|&x| x != tau && x != tau_bar && residue(&driver.v[x], p) != 0)
            .ok_or(ReductionError::NotUnimodular)?;
        let c = unit_at(&[p]);
        driver.add(view, tau, source, &c)?;
    }
    Ok(())
}

/// `x = u · |x|_S` with `u` a unit and `|x|_S ≥ 0` free of inverted primes.
fn split_norm(x: &RingElement) -> (BigInt, RingElement) {
    let ring = x.ring();
    match ring.descriptor() {
        RingDescriptor::Integers => {
            let n = x.as_integer().expect("integer").clone();
            let u = if n.is_negative() { ring.int(-1) } else { ring.one() };
            (n.abs(), u)
        }
        RingDescriptor::Localized(primes) => {
            let (num, _) = x.as_fraction().expect("fraction");
            let (rest, _) = strip_primes(num, primes);
            if rest.is_zero() {
                return (rest, ring.one());
            }
            let free = ring.from_bigint(&rest.abs());
            // x / free is an S-unit: numerator and denominator are products of inverted primes
            let (fnum, _) = x.as_fraction().expect("fraction");
            let unit_num = fnum / rest.abs();
            let denom = x
                .as_fraction()
                .map(|(_, e)| {
                    primes
                        .iter()
                        .zip(e)
                        .fold(ring.one(), |acc, (&p, &k)| &acc * &ring.int(p as i64).pow(k))
                })
                .expect("fraction");
            let u = &ring.from_bigint(&unit_num) * &denom.try_invert().expect("S-unit");
            debug_assert_eq!(&(&u * &free), x);
            (rest.abs(), u)
        }
        _ => unreachable!("Euclidean strategy on a Euclidean ring"),
    }
}

/// `Z`, `Z[1/p]`: Euclidean descent on the smallest nonzero coordinate.
fn euclid(driver: &mut Driver<'_>, view: &DlView, modulus: Option<&RingElement>) -> Result<(), ReductionError> {
    let ring = driver.v[view.top()].ring().clone();
    loop {
        if view
            .nodes
            .iter()
            .any(|&x| inverse_mod(&driver.v[x], modulus).ok().flatten().is_some())
        {
            return Ok(());
        }
        let m = view
            .nodes
            .iter()
            .copied()
            .filter(|&x| !driver.v[x].is_zero())
            .min_by_key(|&x| split_norm(&driver.v[x]).0)
            .ok_or(ReductionError::NotUnimodular)?;
        let m_bar = view.partner(m);
        let (nm, um) = split_norm(&driver.v[m]);
        let um_inv = um.try_invert().expect("unit");
        let mut progressed = false;
        for &x in &view.nodes {
            if x == m || x == m_bar || driver.v[x].is_zero() {
                continue;
            }
            let (nx, ux) = split_norm(&driver.v[x]);
            // nearest quotient keeps |remainder| ≤ nm / 2
            let (mut q, mut r) = nx.div_mod_floor(&nm);
            if &r * 2 > nm {
                q += 1;
                r -= &nm;
            }
            if !q.is_zero() {
                let c = -&(&(&ring.from_bigint(&q) * &ux) * &um_inv);
                driver.add(view, x, m, &c)?;
            }
            progressed |= !r.is_zero();
        }
        if !progressed {
            // only v^m and v^m̄ are left: bring v^m̄ into an empty slot
            if driver.v[m_bar].is_zero() {
                return Err(ReductionError::NotUnimodular);
            }
            let slot = view
                .nodes
                .iter()
                .copied()
                .find(|&x| x != m && x != m_bar)
                .expect("six nodes");
            driver.add(view, slot, m_bar, &ring.one())?;
        }
    }
}
