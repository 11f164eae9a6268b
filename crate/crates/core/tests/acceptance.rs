//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use chevalley::congruence::{
    certificate_sweep, h_delta_factors, specialize_certificate, verify_h_delta_product, verify_z_factorization,
    z_membership_word, RelativeContext,
};
use chevalley::group::{GeneratorWord, Letter, MinusculeRep};
use chevalley::matsumoto::chevalley_matsumoto;
use chevalley::random::{random_elementary_word, random_unimodular_vector, small_scalar};
use chevalley::reduction::{reduce_dl, reduce_e6_traced};
use chevalley::rings::{asr_property_holds, asr_transform, Ring, RingElement};
use chevalley::roots::Root;
use chevalley::weights::WeightDiagram;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;

/// Name, time bound in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn z_factorization() -> Outcome {
    let e7 = MinusculeRep::parse("E7:w7").map_err(err)?;
    let mut done = Vec::new();
    for desc in ["quot(poly(Z[1/2]; xi, zeta); xi^2)", "quot(poly(Z; xi, zeta); xi^2)"] {
        let ring = Ring::parse(desc).map_err(err)?;
        if !verify_z_factorization(&e7, &ring).map_err(err)? {
            return Err(format!("mismatch over {desc}"));
        }
        done.push(desc);
    }
    Ok(format!("56x56 equality over {}", done.join(" and ")))
}

fn h_delta() -> Outcome {
    let ctx = RelativeContext::universal();
    let coeffs = ctx.rep.system().highest_root().0.clone();
    if coeffs != [2, 2, 3, 4, 3, 2, 1] {
        return Err(format!("delta = {coeffs:?}"));
    }
    let shown = [
        "1 + zeta*xi",
        "1 + zeta*xi",
        "1 + 3*zeta*xi/2",
        "1 + 2*zeta*xi",
        "1 + 3*zeta*xi/2",
        "1 + zeta*xi",
        "1 + zeta*xi/2",
    ];
    for ((root, scalar), text) in h_delta_factors(&ctx).map_err(err)?.iter().zip(shown) {
        if scalar != &ctx.ring.parse_element(text).map_err(err)? {
            return Err(format!("factor at {root} is {scalar}, expected {text}"));
        }
    }
    check(verify_h_delta_product(&ctx).map_err(err)?, "7-factor product and diagonal law".into())
}

fn steinberg() -> Outcome {
    let e6 = MinusculeRep::parse("E6:w1").map_err(err)?;
    let ring = Ring::residue(5).map_err(err)?;
    let rs = e6.system();
    let (a, b) = (ring.int(2), ring.int(4));
    for alpha in rs.roots() {
        let lhs = e6.x(alpha, &a).map_err(err)?.multiply(&e6.x(alpha, &b).map_err(err)?).map_err(err)?;
        if lhs != e6.x(alpha, &(&a + &b)).map_err(err)? {
            return Err(format!("additivity fails for {alpha}"));
        }
    }
    let (xi, zeta) = (ring.int(2), ring.int(3));
    let pairs: Vec<(&Root, &Root)> = rs
        .roots()
        .iter()
        .flat_map(|a| rs.roots().iter().map(move |b| (a, b)))
        .filter(|(a, b)| a.add(b).0.iter().any(|c| *c != 0))
        .collect();
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|(alpha, beta)| {
            let word = GeneratorWord::new(vec![
                Letter::X((*alpha).clone(), xi.clone()),
                Letter::X((*beta).clone(), zeta.clone()),
                Letter::X((*alpha).clone(), -&xi),
                Letter::X((*beta).clone(), -&zeta),
            ]);
            let comm = e6.realize(&ring, &word).ok()?;
            let sum = alpha.add(beta);
            let ok = if rs.contains(&sum) {
                let c = &xi * &zeta;
                [c.clone(), -&c].iter().any(|s| e6.x(&sum, s).is_ok_and(|t| t == comm))
            } else {
                comm.is_identity()
            };
            (!ok).then(|| format!("{alpha},{beta}"))
        })
        .collect();
    check(
        failures.is_empty(),
        format!("72 additivity checks, {} ordered pairs, {} failures", pairs.len(), failures.len()),
    )
}

fn diagram_facts() -> Outcome {
    let mut sizes = Vec::new();
    for label in ["E6:w1", "E7:w7", "D5:w1"] {
        let d = WeightDiagram::parse(label).map_err(err)?;
        sizes.push(d.len());
        let rs = d.system();
        let l = rs.rank();
        for n in 0..d.len() {
            for i in 1..=l {
                let ai = rs.simple_root(i);
                // minuscule strings: at most one of λ ± α_i is a weight, never λ ± 2α_i
                let up = d.shift(n, &ai);
                let down = d.shift(n, &ai.neg());
                let double = Root(ai.0.iter().map(|c| 2 * c).collect());
                let p = d.pairing(n, &ai);
                if (down.is_some() && up.is_some())
                    || d.shift(n, &double).is_some()
                    || d.shift(n, &double.neg()).is_some()
                    || down.is_some() != (p == 1)
                    || up.is_some() != (p == -1)
                {
                    return Err(format!("{label}: alpha_{i} string through node {n}"));
                }
                for j in (i + 1)..=l {
                    let (ai, aj) = (ai.neg(), rs.simple_root(j).neg());
                    if let (Some(x), Some(y)) = (d.shift(n, &ai), d.shift(n, &aj)) {
                        if d.shift(x, &aj) != d.shift(y, &ai) {
                            return Err(format!("{label}: parallelogram at node {n}, ({i},{j})"));
                        }
                    }
                }
            }
        }
    }
    let e6 = WeightDiagram::parse("E6:w1").map_err(err)?;
    let split: Vec<usize> = e6.level_decomposition(1).iter().map(Vec::len).collect();
    check(
        sizes == [27, 56, 10] && split == [1, 16, 10],
        format!("sizes {sizes:?}, E6 levels under alpha_1 {split:?}"),
    )
}

fn decomposition() -> Outcome {
    let e6 = MinusculeRep::parse("E6:w1").map_err(err)?;
    let mut report = Vec::new();
    for (seed, desc) in [(51u64, "Z/5"), (52, "Z/6"), (53, "Z")] {
        let ring = Ring::parse(desc).map_err(err)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (mut done, mut drawn) = (0, 0);
        while done < 100 {
            drawn += 1;
            let len = rng.gen_range(15..=30);
            let word = random_elementary_word(&mut rng, e6.system(), &ring, len);
            let g = e6.realize(&ring, &word).map_err(err)?;
            if !g.entry(0, 0).is_unit() {
                continue;
            }
            let split = chevalley_matsumoto(&g).map_err(err)?;
            if !split.verify(&g).map_err(err)? {
                return Err(format!("round trip fails over {desc}, sample {done}"));
            }
            done += 1;
        }
        report.push(format!("{desc}: 100/100 ({drawn} drawn)"));
    }
    Ok(report.join(", "))
}

fn reduction() -> Outcome {
    let e6 = MinusculeRep::parse("E6:w1").map_err(err)?;
    let d5 = MinusculeRep::parse("D5:w1").map_err(err)?;
    let mut report = Vec::new();
    for (seed, desc) in [(61u64, "Z/360"), (62, "Z")] {
        let ring = Ring::parse(desc).map_err(err)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e6_inputs: Vec<_> = (0..100).map(|_| random_unimodular_vector(&mut rng, &ring, 27)).collect();
        let d5_inputs: Vec<_> = (0..100).map(|_| random_unimodular_vector(&mut rng, &ring, 10)).collect();
        let e6_good = e6_inputs
            .par_iter()
            .filter(|v| {
                reduce_e6_traced(&e6, v)
                    .and_then(|(w, _)| Ok(e6.act_word(&w, v)?))
                    .is_ok_and(|image| image[0].is_one())
            })
            .count();
        let d5_good = d5_inputs
            .par_iter()
            .filter(|v| {
                reduce_dl(&d5, v)
                    .and_then(|w| Ok(d5.act_word(&w, v)?))
                    .is_ok_and(|image| image[0].is_one())
            })
            .count();
        report.push(format!("{desc}: E6 {e6_good}/100, D5 {d5_good}/100"));
        if e6_good != 100 || d5_good != 100 {
            return Err(report.join(", "));
        }
    }
    Ok(report.join(", "))
}

fn transitivity() -> Outcome {
    let ctx = RelativeContext::universal();
    let rs = ctx.rep.system();
    let a1 = rs.simple_root(1);
    let complement = ctx.delta.complement();
    let mut conjugated = 0;
    for alpha in &complement {
        let w = ctx.delta.find_weyl_conjugator(alpha, &a1).map_err(err)?;
        if w.letters.iter().all(|b| ctx.delta.contains(b)) && w.apply(rs, alpha).map_err(err)? == a1 {
            conjugated += 1;
        }
    }
    let certs = certificate_sweep(&ctx).map_err(err)?;
    let verified = certs
        .par_iter()
        .filter(|c| c.verify(&ctx).unwrap_or(false))
        .count();
    check(
        complement.len() == 64 && conjugated == 64 && verified == 64,
        format!("Weyl words {conjugated}/{}, certificates {verified}/{}", complement.len(), certs.len()),
    )
}

fn asr_contract() -> Outcome {
    let mut report = Vec::new();
    for (seed, desc, arities) in [(81u64, "Z/6", 2..=5), (82, "Z/360", 2..=5), (83, "Z", 3..=5)] {
        let ring = Ring::parse(desc).map_err(err)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for k in 0..500 {
            let n = rng.gen_range(arities.clone());
            let row: Vec<RingElement> = (0..n).map(|_| small_scalar(&mut rng, &ring, 60)).collect();
            let t = asr_transform(&row, n).map_err(|e| format!("{desc} call {k}: {e}"))?;
            if !asr_property_holds(&row, &t).map_err(err)? {
                return Err(format!("{desc} call {k}: property fails"));
            }
        }
        report.push(format!("{desc}: 500/500"));
    }
    Ok(report.join(", "))
}

fn specialization() -> Outcome {
    let ctx = RelativeContext::universal();
    let (xi, zeta) = ctx.xi_zeta().map_err(err)?;
    let cert = z_membership_word(&ctx, &xi, &zeta).map_err(err)?;
    let z9 = Ring::residue(9).map_err(err)?;
    let t9 = RelativeContext::new(&z9, vec![z9.int(3)]).map_err(err)?;
    let s9 = specialize_certificate(&cert, &t9, &z9.int(3), &z9.int(4)).map_err(err)?;
    let dual = Ring::parse("quot(poly(Z[1/2]; eps); eps^2)").map_err(err)?;
    let eps = dual.var("eps").map_err(err)?;
    let td = RelativeContext::new(&dual, vec![eps.clone()]).map_err(err)?;
    let sd = specialize_certificate(&cert, &td, &eps, &dual.int(3)).map_err(err)?;
    let s0 = specialize_certificate(&cert, &t9, &z9.zero(), &z9.int(4)).map_err(err)?;
    let ok9 = s9.verify(&t9).map_err(err)?;
    let okd = sd.verify(&td).map_err(err)?;
    let collapses = t9.rep.realize(&z9, &s0.word).map_err(err)?.is_identity();
    check(
        ok9 && okd && collapses,
        format!("Z/9 with a=3: {ok9}, dual numbers with a=eps: {okd}, xi->0 gives identity: {collapses}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("z-factorization in (E7, w7)", 10, z_factorization),
        ("h_delta product", 10, h_delta),
        ("Steinberg relations for E6 over Z/5", 60, steinberg),
        ("weight diagram facts", 5, diagram_facts),
        ("decomposition round trips", 60, decomposition),
        ("reduction soundness", 120, reduction),
        ("transitivity sweep", 120, transitivity),
        ("ASR oracle contract", 60, asr_contract),
        ("certificate specialization", 60, specialization),
    ];
    let mut failed = 0;
    for (i, (name, bound, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(*bound);
        let (status, detail) = match &outcome {
            Ok(d) if in_time => ("PASS", d.clone()),
            Ok(d) => ("FAIL", format!("{d}; over the time bound")),
            Err(d) => ("FAIL", d.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {} {status}: {name} ({:.2}s of {bound}s) {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {}/9 criteria pass", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
