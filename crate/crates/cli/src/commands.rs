use std::fmt::Debug;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use chevalley::congruence::{general_z_membership, identity_suite, RelativeContext};
use chevalley::group::{GeneratorWord, GroupElement, Matrix, MinusculeRep};
use chevalley::matsumoto::chevalley_matsumoto;
use chevalley::random::{random_elementary_word, random_unimodular_vector};
use chevalley::reduction::{minimize, reduce, reduce_e6_traced};
use chevalley::rings::{Ring, RingElement};
use chevalley::roots::{CartanType, Root, RootSystem, SubsystemEmbedding};
use chevalley::weights::WeightDiagram;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::{Cli, Command, Format, Suite};

#[derive(Debug)]
pub struct CliError {
    pub kind: String,
    pub detail: String,
    pub usage: bool,
}

impl CliError {
    pub fn usage(kind: &str, detail: impl Into<String>) -> CliError {
        CliError { kind: kind.into(), detail: detail.into(), usage: true }
    }

    pub fn exit_code(&self) -> u8 {
        if self.usage {
            2
        } else {
            1
        }
    }
}

const WRAPPERS: [&str; 6] = ["Group", "Ring", "Root", "Weight", "Decomposition", "Congruence"];

/// Innermost variant name of a nested error, read from its `Debug` form.
fn kind_of(e: &impl Debug) -> String {
    let text = format!("{e:?}");
    let mut rest = text.as_str();
    loop {
        let end = rest.find(|c: char| !c.is_alphanumeric() && c != '_').unwrap_or(rest.len());
        let (name, tail) = rest.split_at(end);
        if WRAPPERS.contains(&name) && tail.starts_with('(') {
            rest = &tail[1..];
        } else {
            return name.to_string();
        }
    }
}

fn domain<E: Debug + std::fmt::Display>(e: E) -> CliError {
    CliError { kind: kind_of(&e), detail: e.to_string(), usage: false }
}

fn bad_input<E: Debug + std::fmt::Display>(e: E) -> CliError {
    CliError { kind: kind_of(&e), detail: e.to_string(), usage: true }
}

pub fn report(e: &CliError) {
    eprintln!("{}", json!({ "error": { "kind": e.kind, "detail": e.detail } }));
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage("Io", format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::usage("Json", format!("{}: {e}", path.display())))
}

fn emit(cli: &Cli, text: String) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => fs::write(path, text + "\n")
            .map_err(|e| CliError::usage("Io", format!("{}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::usage("Io", e.to_string())),
                _ => Ok(()),
            }
        }
    }
}

fn emit_json(cli: &Cli, value: &Value) -> Result<(), CliError> {
    emit(cli, serde_json::to_string_pretty(value).expect("serializable"))
}

fn parse_rep(label: &str) -> Result<Arc<MinusculeRep>, CliError> {
    MinusculeRep::parse(label).map_err(bad_input)
}

fn parse_ring(text: &str) -> Result<Ring, CliError> {
    Ring::parse(text).map_err(bad_input)
}

fn parse_root(text: &str) -> Result<Root, CliError> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    inner
        .split(',')
        .map(|s| s.trim().parse::<i32>())
        .collect::<Result<Vec<_>, _>>()
        .map(Root)
        .map_err(|e| CliError::usage("Parse", format!("root {text:?}: {e}")))
}

fn rng(cli: &Cli) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cli.seed)
}

fn word_from(ring: &Ring, value: &Value) -> Result<GeneratorWord, CliError> {
    let words = value.get("word").unwrap_or(value);
    GeneratorWord::from_json(ring, words).map_err(bad_input)
}

fn vector_from(ring: &Ring, value: &Value) -> Result<Vec<RingElement>, CliError> {
    let items = value
        .get("vector")
        .unwrap_or(value)
        .as_array()
        .ok_or_else(|| CliError::usage("Parse", "a vector is a JSON array"))?;
    items.iter().map(|e| ring.element_from_json(e).map_err(bad_input)).collect()
}

fn vector_json(v: &[RingElement]) -> Value {
    Value::Array(v.iter().map(RingElement::to_json).collect())
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::usage("Jobs", e.to_string()))?;
    }
    match &cli.command {
        Command::Roots { cartan, subsystem, positive } => roots(cli, cartan.as_deref(), subsystem.as_deref(), *positive),
        Command::Diagram { rep, format } => diagram(cli, rep, *format),
        Command::Elem { rep, ring, input, random, apply } => {
            elem(cli, rep, ring, input.as_deref(), *random, apply.as_deref())
        }
        Command::Decompose { rep, ring, pivot, input, random } => {
            decompose(cli, rep, ring.as_deref(), *pivot, input.as_deref(), *random)
        }
        Command::Reduce { rep, ring, input, random, trace, minimize } => {
            reduce_cmd(cli, rep, ring, input.as_deref(), *random, *trace, *minimize)
        }
        Command::Verify { suite } => verify(cli, *suite),
        Command::Conjugate { root, target, subsystem, certificate } => {
            conjugate(cli, root, target.as_deref(), subsystem, *certificate)
        }
    }
}

fn roots(cli: &Cli, cartan: Option<&str>, subsystem: Option<&str>, positive: bool) -> Result<(), CliError> {
    let (label, roots, system) = match (cartan, subsystem) {
        (_, Some(sub)) => {
            let emb = SubsystemEmbedding::parse(sub).map_err(bad_input)?;
            (emb.label().to_string(), emb.members(), Arc::clone(emb.ambient()))
        }
        (Some(t), None) => {
            let system = RootSystem::build(CartanType::parse(t).map_err(bad_input)?).map_err(bad_input)?;
            (system.label(), system.roots().to_vec(), system)
        }
        (None, None) => return Err(CliError::usage("Usage", "pass --type or --subsystem")),
    };
    let listed: Vec<Value> = roots
        .iter()
        .filter(|r| !positive || r.is_positive())
        .map(|r| json!(r.0))
        .collect();
    emit_json(
        cli,
        &json!({
            "label": label,
            "rank": system.rank(),
            "cartan_matrix": system.cartan_matrix(),
            "highest_root": system.highest_root().0,
            "count": listed.len(),
            "roots": listed,
        }),
    )
}

fn diagram(cli: &Cli, rep: &str, format: Format) -> Result<(), CliError> {
    let d = WeightDiagram::parse(rep).map_err(bad_input)?;
    match format {
        Format::Json => emit_json(cli, &d.to_json()),
        Format::Dot => emit(cli, d.to_dot().trim_end().to_string()),
    }
}

fn elem(
    cli: &Cli,
    rep: &str,
    ring: &str,
    input: Option<&Path>,
    random: Option<usize>,
    apply: Option<&Path>,
) -> Result<(), CliError> {
    let rep = parse_rep(rep)?;
    let ring = parse_ring(ring)?;
    let word = match (input, random) {
        (Some(path), _) => word_from(&ring, &read_json(path)?)?,
        (None, Some(len)) => random_elementary_word(&mut rng(cli), rep.system(), &ring, len),
        (None, None) => return Err(CliError::usage("Usage", "pass --in or --random")),
    };
    let g = rep.realize(&ring, &word).map_err(domain)?;
    let mut out = g.to_json();
    if let Some(path) = apply {
        let v = vector_from(&ring, &read_json(path)?)?;
        out["image"] = vector_json(&g.act(&v).map_err(bad_input)?);
    }
    emit_json(cli, &out)
}

fn load_element(rep: &Arc<MinusculeRep>, ring: Option<&str>, value: &Value) -> Result<GroupElement, CliError> {
    let ring = match (value.get("ring").and_then(Value::as_str), ring) {
        (Some(r), _) | (None, Some(r)) => parse_ring(r)?,
        (None, None) => return Err(CliError::usage("Usage", "the input names no ring; pass --ring")),
    };
    if let Some(label) = value.get("rep").and_then(Value::as_str) {
        if label != rep.label() {
            return Err(CliError::usage(
                "RepresentationMismatch",
                format!("input is over {label}, not {}", rep.label()),
            ));
        }
    }
    let is_word = |v: &Value| v.as_array().is_some_and(|a| a.iter().all(Value::is_object));
    if let Some(m) = value.get("matrix") {
        let matrix = Matrix::from_json(&ring, m).map_err(bad_input)?;
        let mut g = GroupElement::from_matrix(rep, matrix).map_err(bad_input)?;
        if let Some(w) = value.get("word") {
            let word = word_from(&ring, w)?;
            let replay = rep.realize(&ring, &word).map_err(domain)?;
            if replay != g {
                return Err(CliError::usage("Parse", "word and matrix disagree"));
            }
            g = replay;
        }
        Ok(g)
    } else if is_word(value) || value.get("word").is_some() {
        rep.realize(&ring, &word_from(&ring, value)?).map_err(domain)
    } else {
        let matrix = Matrix::from_json(&ring, value).map_err(bad_input)?;
        GroupElement::from_matrix(rep, matrix).map_err(bad_input)
    }
}

fn decompose(
    cli: &Cli,
    rep: &str,
    ring: Option<&str>,
    pivot: Option<usize>,
    input: Option<&Path>,
    random: Option<usize>,
) -> Result<(), CliError> {
    let rep = parse_rep(rep)?;
    if let Some(p) = pivot {
        if p != rep.diagram().pivot() {
            return Err(CliError::usage(
                "Usage",
                format!("{} splits at alpha_{}, not alpha_{p}", rep.label(), rep.diagram().pivot()),
            ));
        }
    }
    let g = match (input, random) {
        (Some(path), _) => load_element(&rep, ring, &read_json(path)?)?,
        (None, Some(len)) => {
            let ring = parse_ring(ring.ok_or_else(|| CliError::usage("Usage", "--random needs --ring"))?)?;
            let word = random_elementary_word(&mut rng(cli), rep.system(), &ring, len);
            rep.realize(&ring, &word).map_err(domain)?
        }
        (None, None) => return Err(CliError::usage("Usage", "pass --in or --random")),
    };
    let split = chevalley_matsumoto(&g).map_err(domain)?;
    let verified = split.verify(&g).map_err(domain)?;
    emit_json(
        cli,
        &json!({
            "rep": rep.label(),
            "ring": g.ring().to_string(),
            "pivot": split.pivot,
            "v": split.v.to_json(),
            "g1": split.g1.to_json(),
            "u": split.u.to_json(),
            "verified": verified,
        }),
    )
}

fn reduce_cmd(
    cli: &Cli,
    rep: &str,
    ring: &str,
    input: Option<&Path>,
    random: bool,
    trace: bool,
    shorten: bool,
) -> Result<(), CliError> {
    let rep = parse_rep(rep)?;
    let ring = parse_ring(ring)?;
    let v = match (input, random) {
        (Some(path), _) => vector_from(&ring, &read_json(path)?)?,
        (None, true) => random_unimodular_vector(&mut rng(cli), &ring, rep.dim()),
        (None, false) => return Err(CliError::usage("Usage", "pass --in or --random")),
    };
    if v.len() != rep.dim() {
        return Err(CliError::usage(
            "DimensionMismatch",
            format!("{} needs {} coordinates, got {}", rep.label(), rep.dim(), v.len()),
        ));
    }
    let (mut word, steps) = if trace && matches!(rep.system().cartan_type(), CartanType::E6) {
        let (w, t) = reduce_e6_traced(&rep, &v).map_err(domain)?;
        (w, Some(t.to_json()))
    } else {
        (reduce(&rep, &v).map_err(domain)?, None)
    };
    if shorten {
        word = minimize(&rep, &word, &v).map_err(domain)?;
    }
    let image = rep.act_word(&word, &v).map_err(domain)?;
    let mut out = json!({
        "rep": rep.label(),
        "ring": ring.to_string(),
        "input": vector_json(&v),
        "word": word.to_json(),
        "image": vector_json(&image),
    });
    if let Some(t) = steps {
        out["trace"] = t;
    }
    emit_json(cli, &out)
}

fn verify(cli: &Cli, suite: Suite) -> Result<(), CliError> {
    let results = match suite {
        Suite::Identities => identity_suite(),
    };
    let report: Vec<Value> = results.iter().map(|r| r.to_json()).collect();
    emit_json(cli, &Value::Array(report))?;
    let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.check.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError { kind: "CheckFailed".into(), detail: failed.join(", "), usage: false })
    }
}

fn conjugate(cli: &Cli, root: &str, target: Option<&str>, subsystem: &str, certificate: bool) -> Result<(), CliError> {
    let emb = SubsystemEmbedding::parse(subsystem).map_err(bad_input)?;
    let source = parse_root(root)?;
    let target = match target {
        Some(t) => parse_root(t)?,
        None => emb.ambient().simple_root(1),
    };
    let weyl = emb.find_weyl_conjugator(&source, &target).map_err(domain)?;
    let mut out = json!({
        "subsystem": emb.label(),
        "root": source.0,
        "target": target.0,
        "weyl_word": weyl.letters.iter().map(|r| json!(r.0)).collect::<Vec<_>>(),
    });
    if certificate {
        if emb.label() != "A1+D6@E7" {
            return Err(CliError::usage("Usage", "certificates are built for A1+D6@E7"));
        }
        let ctx = RelativeContext::universal();
        let (xi, zeta) = ctx.xi_zeta().map_err(domain)?;
        let cert = general_z_membership(&ctx, &source, &xi, &zeta).map_err(domain)?;
        let verified = cert.verify(&ctx).map_err(domain)?;
        out["ring"] = json!(ctx.ring.to_string());
        out["certificate"] = cert.to_json();
        out["verified"] = json!(verified);
    }
    emit_json(cli, &out)
}
