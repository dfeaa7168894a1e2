//! Argument parsing and dispatch for the `hopfmotives` binary.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use hopfmotives_core::algebra::{Bialgebra, Report};
use hopfmotives_core::catalog::{Catalog, CatalogEntry, Payload};
use hopfmotives_core::comod::Comodule;
use hopfmotives_core::dual::{decompose, dualize};
use hopfmotives_core::jinv::{poincare_fpoin, quotient_bialgebra, JTuple, QuadricJSet};
use hopfmotives_core::motdec::{assemble_partition, emit_dot, quadric_connections, rpe_beta_search, Lambda, QuadricSpec};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::loader::{load_catalog, read_file};
use crate::schema::{self, bialgebra_to_dto, edges_from_dto, entry_to_dto, lambda_to_dto, EdgesDto, InputFile};
use crate::text;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "hopfmotives", version, about = "Bialgebras, comodules and motivic decompositions over F_p")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inspect the catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Check the bialgebra or comodule axioms of a file or catalog entry.
    Verify { target: String },
    /// Print the quotient bialgebra H = A/J.
    Quotient {
        key: String,
        #[arg(long)]
        jtuple: String,
    },
    /// Poincaré polynomial of H = A/J.
    Poincare {
        key: String,
        #[arg(long)]
        jtuple: String,
    },
    /// Block decomposition of the dual algebra.
    Dual {
        key: String,
        #[arg(long)]
        jtuple: Option<String>,
        #[arg(long)]
        alpha: Option<u32>,
    },
    /// Connection graph and partition for a quadric.
    Quadric {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        jset: String,
        #[arg(long)]
        extra_edges: Option<String>,
        #[arg(long)]
        dot: bool,
    },
    /// β-search for the summands attached to J.
    Rpe {
        key: String,
        #[arg(long)]
        jtuple: String,
    },
    /// Coinvariants of a comodule over H = A/J.
    Coinv {
        key: String,
        #[arg(long)]
        jtuple: String,
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Group-like elements of a bialgebra.
    Grouplikes { key: String },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
    Show { key: String },
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(&cli) {
        Ok(Output { body, code }) => {
            let _ = out.write_all(body.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub struct Output {
    pub body: String,
    pub code: i32,
}

fn ok(body: String) -> Result<Output, CliError> {
    Ok(Output { body, code: 0 })
}

fn render(format: Format, text: String, value: Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("serializable");
            s.push('\n');
            s
        }
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// A catalog entry, or a file parsed into a bialgebra or comodule entry
/// keyed by its path.
fn resolve(cat: &Catalog, arg: &str) -> Result<CatalogEntry, CliError> {
    if let Ok(e) = cat.get(arg) {
        return Ok(e.clone());
    }
    let path = Path::new(arg);
    if !path.exists() {
        return Err(hopfmotives_core::Error::UnknownKey(arg.into()).into());
    }
    let payload = match schema::parse_input(&read_file(path)?)? {
        InputFile::Bialgebra(b) => Payload::Bialgebra(b),
        InputFile::Comodule(m) => Payload::Comodule(m),
    };
    Ok(CatalogEntry::new(arg, "file", payload))
}

fn report_of(e: &CatalogEntry) -> Report {
    match &e.payload {
        Payload::Bialgebra(b) => b.verify(),
        Payload::Comodule(m) => m.verify(),
        _ => Report::default(),
    }
}

/// Like `resolve`, but refuses objects that fail their axioms.
fn resolve_verified(cat: &Catalog, arg: &str) -> Result<CatalogEntry, CliError> {
    let e = resolve(cat, arg)?;
    let r = report_of(&e);
    if !r.passed() {
        return Err(CliError::Verification {
            subject: e.key.clone(),
            report: r.to_string(),
        });
    }
    Ok(e)
}

/// The bialgebra of an entry; a comodule contributes its coalgebra.
fn bialgebra_of(e: &CatalogEntry) -> Result<Bialgebra, CliError> {
    match &e.payload {
        Payload::Bialgebra(b) => Ok(b.clone()),
        Payload::Comodule(m) => Ok(m.coalgebra().clone()),
        _ => Err(CliError::Invalid(format!("`{}` is a {} entry, not a bialgebra", e.key, e.payload.kind()))),
    }
}

fn comodule_of(e: &CatalogEntry) -> Result<Comodule, CliError> {
    e.comodule()
        .cloned()
        .ok_or_else(|| CliError::Invalid(format!("`{}` is a {} entry, not a comodule", e.key, e.payload.kind())))
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    let f = cli.format;
    match &cli.command {
        Command::Quadric {
            n,
            jset,
            extra_edges,
            dot,
        } => quadric(f, *n, jset, extra_edges.as_deref(), *dot),
        Command::Verify { target } => verify(f, &load_catalog()?, target),
        Command::Catalog { action } => {
            let cat = load_catalog()?;
            match action {
                CatalogAction::List => catalog_list(f, &cat),
                CatalogAction::Show { key } => {
                    let e = cat.get(key)?;
                    ok(render(f, text::entry(e), to_value(&entry_to_dto(e))))
                }
            }
        }
        Command::Quotient { key, jtuple } => {
            let cat = load_catalog()?;
            let b = bialgebra_of(&resolve_verified(&cat, key)?)?;
            let j = JTuple::parse(jtuple)?;
            let (h, _) = quotient_bialgebra(&b, &j)?;
            ok(render(f, text::bialgebra(&h), to_value(&bialgebra_to_dto(&h))))
        }
        Command::Poincare { key, jtuple } => {
            let cat = load_catalog()?;
            let b = bialgebra_of(&resolve_verified(&cat, key)?)?;
            let j = JTuple::parse(jtuple)?;
            let degrees: Vec<u32> = b.presentation().generators().iter().map(|g| g.degree).collect();
            let poly = poincare_fpoin(&j, &degrees, b.prime())?;
            let text = format!("P(t) = {poly}\nrank {}\n", poly.eval_one());
            let value = json!({
                "key": key,
                "jtuple": j.entries(),
                "polynomial": poly.to_string(),
                "coefficients": poly.coeffs(),
                "rank": poly.eval_one(),
            });
            ok(render(f, text, value))
        }
        Command::Dual { key, jtuple, alpha } => dual(f, key, jtuple.as_deref(), *alpha),
        Command::Rpe { key, jtuple } => {
            let cat = load_catalog()?;
            let m = comodule_of(&resolve_verified(&cat, key)?)?;
            let pres = m
                .algebra_parts()
                .ok_or_else(|| CliError::Invalid("the β-search needs an algebra-flavor comodule".into()))?
                .0
                .clone();
            let j = JTuple::parse(jtuple)?;
            let found = rpe_beta_search(&m, &j)?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for x in &found {
                let (beta, alpha) = (pres.fmt_element(&x.beta), pres.fmt_element(&x.alpha));
                text += &format!("degree {}: beta = {beta}, alpha = {alpha}\n", x.degree);
                rows.push(json!({"degree": x.degree, "beta": beta, "alpha": alpha}));
            }
            if found.is_empty() {
                text.push_str("none\n");
            }
            ok(render(f, text, json!({"key": key, "jtuple": j.entries(), "pairs": rows})))
        }
        Command::Coinv { key, jtuple, degree } => {
            let cat = load_catalog()?;
            let m = comodule_of(&resolve_verified(&cat, key)?)?;
            let j = JTuple::parse(jtuple)?;
            let (h, map) = quotient_bialgebra(m.coalgebra(), &j)?;
            let reduced = m.reduce(&h, &map)?;
            let names: Vec<String> = match m.algebra_parts() {
                Some((pres, _)) => reduced
                    .coinvariant_elements(*degree)?
                    .iter()
                    .map(|x| pres.fmt_element(x))
                    .collect(),
                None => reduced.coinvariants(*degree).iter().map(|v| m.fmt_vector(v)).collect(),
            };
            let mut text: String = names.iter().map(|s| format!("{s}\n")).collect();
            if names.is_empty() {
                text.push_str("none\n");
            }
            let value = json!({"key": key, "jtuple": j.entries(), "degree": degree, "coinvariants": names});
            ok(render(f, text, value))
        }
        Command::Grouplikes { key } => {
            let cat = load_catalog()?;
            let b = bialgebra_of(&resolve_verified(&cat, key)?)?;
            let g = b.find_grouplikes()?;
            let names: Vec<String> = g.iter().map(|x| b.presentation().fmt_element(x)).collect();
            let text = names.iter().map(|s| format!("{s}\n")).collect();
            ok(render(f, text, json!({"key": key, "grouplikes": names})))
        }
    }
}

fn catalog_list(f: Format, cat: &Catalog) -> Result<Output, CliError> {
    let mut text = String::new();
    let mut rows = Vec::new();
    for e in cat.entries() {
        text += &format!("{}\t{}\n", e.key, e.payload.kind());
        rows.push(json!({"key": e.key, "kind": e.payload.kind(), "provenance": e.provenance}));
    }
    ok(render(f, text, Value::Array(rows)))
}

fn verify(f: Format, cat: &Catalog, target: &str) -> Result<Output, CliError> {
    let e = resolve(cat, target)?;
    let r = match &e.payload {
        Payload::Bialgebra(_) | Payload::Comodule(_) => report_of(&e),
        _ => {
            e.verify()?;
            Report::default()
        }
    };
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|v| json!({"kind": v.kind.as_str(), "subject": v.subject, "detail": v.detail}))
        .collect();
    let body = render(
        f,
        format!("{r}\n"),
        json!({"target": target, "kind": e.payload.kind(), "passed": r.passed(), "violations": violations}),
    );
    Ok(Output {
        body,
        code: if r.passed() { 0 } else { 1 },
    })
}

fn dual(f: Format, key: &str, jtuple: Option<&str>, alpha: Option<u32>) -> Result<Output, CliError> {
    let cat = load_catalog()?;
    // A key without the `.a<α>` suffix stands for all its α-variants.
    let variants: Vec<(String, Option<u32>)> = if cat.get(key).is_ok() || Path::new(key).exists() {
        if let Some(a) = alpha {
            return Err(CliError::Invalid(format!(
                "`{key}` has no α-variants; --alpha {a} applies to keys such as k2.e8.mod3"
            )));
        }
        vec![(key.to_string(), None)]
    } else {
        let prefix = format!("{key}.a");
        let found: Vec<(String, Option<u32>)> = cat
            .list()
            .into_iter()
            .filter_map(|k| {
                let a = k.strip_prefix(&prefix)?.parse().ok()?;
                Some((k.to_string(), Some(a)))
            })
            .filter(|(_, a)| alpha.is_none() || *a == alpha)
            .collect();
        if found.is_empty() {
            return Err(hopfmotives_core::Error::UnknownKey(match alpha {
                Some(a) => format!("{key}.a{a}"),
                None => key.to_string(),
            })
            .into());
        }
        found
    };
    let mut text = String::new();
    let mut reports = Vec::new();
    for (k, a) in variants {
        let mut h = bialgebra_of(&resolve_verified(&cat, &k)?)?;
        if let Some(j) = jtuple {
            h = quotient_bialgebra(&h, &JTuple::parse(j)?)?.0;
        }
        let dec = decompose(&dualize(&h), &h)?;
        text += &format!("{k}: {} blocks\n", dec.blocks.len());
        let mut blocks = Vec::new();
        for (i, b) in dec.blocks.iter().enumerate() {
            let g = b.grouplike.as_ref().map(|g| h.presentation().fmt_element(g));
            text += &format!("  block {i}: dim {}, {}\n", b.dim, b.label);
            blocks.push(json!({"dim": b.dim, "label": b.label, "grouplike": g}));
        }
        reports.push(json!({"key": k, "alpha": a, "blocks": blocks}));
    }
    ok(render(f, text, Value::Array(reports)))
}

fn parse_jset(s: &str) -> Result<Vec<u32>, CliError> {
    let s = s.trim().trim_start_matches('{').trim_end_matches('}');
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse().map_err(|_| CliError::Invalid(format!("`{x}` is not a J-set index"))))
        .collect()
}

/// Extra edges from a JSON file `{"edges": [[λ, μ], ...]}` or an edge-list
/// catalog key.
fn load_edges(arg: &str, m: u32) -> Result<Vec<(Lambda, Lambda)>, CliError> {
    let path = Path::new(arg);
    if path.exists() {
        let dto: EdgesDto = schema::from_str_with_path(&read_file(path)?)?;
        return edges_from_dto(&dto, Some(m));
    }
    let cat = load_catalog()?;
    match &cat.get(arg)?.payload {
        Payload::Edges(e) => Ok(e.edges.clone()),
        other => Err(CliError::Invalid(format!("`{arg}` is a {} entry, not an edge list", other.kind()))),
    }
}

fn quadric(f: Format, n: u32, jset: &str, extra: Option<&str>, dot: bool) -> Result<Output, CliError> {
    let members = parse_jset(jset)?;
    let spec = QuadricSpec::new(QuadricJSet::new(n, members.iter().copied())?);
    let graph = quadric_connections(&spec);
    let extra = match extra {
        Some(a) => load_edges(a, spec.m())?,
        None => Vec::new(),
    };
    let partition = assemble_partition(&graph, &extra)?;
    if dot {
        let mut all: BTreeSet<(Lambda, Lambda)> = graph.edges.clone();
        all.extend(extra.iter().copied());
        return ok(emit_dot(&graph.vertices, &all, Some(&partition)));
    }
    let show = |v: &[Lambda]| v.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",");
    let mut text = format!("n {n}\nm {}\njset {{{}}}\n", spec.m(), members.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(","));
    for (a, b) in &graph.edges {
        text += &format!("edge {a} -> {b}\n");
    }
    for (a, b) in &extra {
        text += &format!("extra {a} -> {b}\n");
    }
    for b in &partition.blocks {
        text += &format!("block {{{}}}\n", show(b));
    }
    let pair = |(a, b): &(Lambda, Lambda)| json!([lambda_to_dto(a), lambda_to_dto(b)]);
    let value = json!({
        "n": n,
        "jset": spec.jset.members,
        "edges": graph.edges.iter().map(pair).collect::<Vec<_>>(),
        "extra_edges": extra.iter().map(pair).collect::<Vec<_>>(),
        "blocks": partition.blocks.iter().map(|b| b.iter().map(lambda_to_dto).collect::<Vec<_>>()).collect::<Vec<_>>(),
    });
    ok(render(f, text, value))
}
