//! Plain-text renderings used by `--format text`.

use std::fmt::Write;

use hopfmotives_core::algebra::{Bialgebra, Presentation};
use hopfmotives_core::catalog::{CatalogEntry, Payload};
use hopfmotives_core::comod::{Comodule, Flavor};

fn presentation(out: &mut String, pres: &Presentation, indent: &str) {
    let _ = writeln!(out, "{indent}prime {}", pres.prime().get());
    for g in pres.generators() {
        let _ = writeln!(
            out,
            "{indent}generator {} degree {} truncation {}",
            g.name, g.degree, g.truncation
        );
    }
    for r in pres.rules() {
        let target = match &r.target {
            Some((c, m)) => pres.fmt_element(&hopfmotives_core::algebra::Element::term(pres.prime(), m.clone(), *c)),
            None => "0".into(),
        };
        let _ = writeln!(out, "{indent}rule {} -> {target}", pres.fmt_monomial(&r.source));
    }
}

pub fn bialgebra(b: &Bialgebra) -> String {
    let mut out = String::new();
    bialgebra_into(&mut out, b, "");
    out
}

fn bialgebra_into(out: &mut String, b: &Bialgebra, indent: &str) {
    let pres = b.presentation();
    presentation(out, pres, indent);
    for (g, t) in pres.generators().iter().zip(b.generator_coproducts()) {
        let _ = writeln!(out, "{indent}Δ({}) = {}", g.name, b.fmt_tensor(t));
    }
    if let Some(w) = b.periodic() {
        let _ = writeln!(out, "{indent}periodic {} degree {}", w.name, w.degree);
    }
    let _ = writeln!(out, "{indent}dimension {}", b.dim());
}

pub fn comodule(m: &Comodule) -> String {
    let mut out = String::new();
    out.push_str("coalgebra\n");
    bialgebra_into(&mut out, m.coalgebra(), "  ");
    match m.flavor() {
        Flavor::Algebra {
            presentation: pres,
            generator_coaction,
        } => {
            out.push_str("module algebra\n");
            presentation(&mut out, pres, "  ");
            let h = m.coalgebra().presentation();
            for (g, t) in pres.generators().iter().zip(generator_coaction) {
                let _ = writeln!(
                    out,
                    "ρ({}) = {}",
                    g.name,
                    hopfmotives_core::algebra::fmt_tensor(h, pres, t)
                );
            }
        }
        Flavor::Basis => {
            out.push_str("module basis\n");
            for (b, row) in m.basis().iter().zip(m.table()) {
                let _ = writeln!(out, "ρ({}) = {}  [degree {}]", b.name, m.fmt_coaction(row), b.degree);
            }
        }
    }
    let _ = writeln!(out, "dimension {}", m.dim());
    out
}

pub fn entry(e: &CatalogEntry) -> String {
    let mut out = format!("key {}\nkind {}\nprovenance {}\n", e.key, e.payload.kind(), e.provenance);
    match &e.payload {
        Payload::Bialgebra(b) => out.push_str(&bialgebra(b)),
        Payload::Comodule(m) => out.push_str(&comodule(m)),
        Payload::Edges(x) => {
            let jset: Vec<String> = x.jset.iter().map(|k| k.to_string()).collect();
            let _ = writeln!(out, "n {}\njset {}", x.n, jset.join(","));
            for (a, b) in &x.edges {
                let _ = writeln!(out, "edge {a} -> {b}");
            }
        }
        Payload::Degrees(t) => {
            for (name, d) in &t.rows {
                let d: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(out, "{name}: {}", d.join(", "));
            }
        }
        Payload::JCase(c) => {
            let _ = writeln!(
                out,
                "group {}\nprime {}\ndegrees {:?}\ntruncations {:?}\ntuple {}",
                c.group,
                c.prime.get(),
                c.degrees,
                c.truncations,
                c.tuple
            );
        }
    }
    out
}
