use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use super::lambda::Lambda;
use super::quadric::QuadricSpec;
use crate::comod::Comodule;
use crate::error::{Error, Result};

/// Directed edges `λ → μ`: every summand containing `λ` contains `μ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionGraph {
    pub vertices: Vec<Lambda>,
    pub edges: BTreeSet<(Lambda, Lambda)>,
}

impl ConnectionGraph {
    pub fn empty(vertices: Vec<Lambda>) -> Self {
        ConnectionGraph {
            vertices,
            edges: BTreeSet::new(),
        }
    }

    pub fn contains_graph(&self, other: &ConnectionGraph) -> bool {
        other.edges.is_subset(&self.edges)
    }

    fn check_vertex(&self, l: Lambda) -> Result<()> {
        if self.vertices.contains(&l) {
            Ok(())
        } else {
            Err(Error::InvalidJSet(alloc::format!("{l} is not an index of Λ(Q)")))
        }
    }
}

/// Blocks of `Λ(Q)`, each sorted, ordered by their smallest element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub blocks: Vec<Vec<Lambda>>,
}

/// Edges `m+k → m-j+k` for `0 ≤ k < j`, and `m+j → m′` for even `n`, for every `j ∉ J(q)`.
pub fn connections_closed_form(spec: &QuadricSpec) -> ConnectionGraph {
    let m = spec.m();
    let mut g = ConnectionGraph::empty(spec.lambda());
    for j in spec.surviving() {
        for k in 0..j {
            g.edges.insert((Lambda::plain(m + k), Lambda::plain(m - j + k)));
        }
        if spec.is_even() {
            g.edges.insert((Lambda::plain(m + j), Lambda::primed(m)));
        }
    }
    g
}

/// Edges `a → b` on basis indices whenever `ρ(b_a)` has a term `c⊗b_b` with
/// `deg c > 0`, transitively closed.
pub fn coaction_edges(m: &Comodule) -> BTreeSet<(usize, usize)> {
    let h = m.coalgebra().presentation();
    let n = m.dim();
    let mut adj = vec![vec![false; n]; n];
    for (a, row) in m.table().iter().enumerate() {
        for ((c, b), _) in row.iter() {
            if h.degree(c) > 0 && *b != a {
                adj[a][*b] = true;
            }
        }
    }
    // Warshall closure.
    for k in 0..n {
        for i in 0..n {
            if adj[i][k] {
                #[allow(clippy::needless_range_loop)]
                for j in 0..n {
                    if adj[k][j] {
                        adj[i][j] = true;
                    }
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    for (i, row) in adj.iter().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            if e && i != j {
                out.insert((i, j));
            }
        }
    }
    out
}

/// [`coaction_edges`] on a comodule whose basis is indexed by `vertices`.
pub fn connections_from_coaction(m: &Comodule, vertices: &[Lambda]) -> Result<ConnectionGraph> {
    if vertices.len() != m.dim() {
        return Err(Error::InvalidComodule(alloc::format!(
            "{} vertices for a comodule of dimension {}",
            vertices.len(),
            m.dim()
        )));
    }
    Ok(ConnectionGraph {
        vertices: vertices.to_vec(),
        edges: coaction_edges(m)
            .into_iter()
            .map(|(a, b)| (vertices[a], vertices[b]))
            .collect(),
    })
}

pub fn quadric_connections(spec: &QuadricSpec) -> ConnectionGraph {
    connections_from_coaction(&spec.comodule(), &spec.lambda()).expect("basis matches Λ(Q)")
}

/// Connected components of the symmetrized union of `g` and `extra`.
pub fn assemble_partition(g: &ConnectionGraph, extra: &[(Lambda, Lambda)]) -> Result<Partition> {
    for &(a, b) in extra {
        g.check_vertex(a)?;
        g.check_vertex(b)?;
    }
    let n = g.vertices.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let idx = |l: &Lambda| g.vertices.iter().position(|v| v == l).expect("vertex");
    for (a, b) in g.edges.iter().chain(extra.iter()) {
        let (ra, rb) = (find(&mut parent, idx(a)), find(&mut parent, idx(b)));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut blocks: Vec<Vec<Lambda>> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    let mut sorted = g.vertices.clone();
    sorted.sort();
    for v in sorted {
        let r = find(&mut parent, idx(&v));
        match roots.iter().position(|&x| x == r) {
            Some(k) => blocks[k].push(v),
            None => {
                roots.push(r);
                blocks.push(vec![v]);
            }
        }
    }
    Ok(Partition { blocks })
}

/// DOT rendering: one `cluster_i` subgraph per block when a partition is
/// given, otherwise plain nodes; then the edges.
pub fn emit_dot(vertices: &[Lambda], edges: &BTreeSet<(Lambda, Lambda)>, partition: Option<&Partition>) -> String {
    let mut s = String::from("digraph quadric {\n  node [shape=circle];\n");
    let mut sorted = vertices.to_vec();
    sorted.sort();
    let node = |s: &mut String, l: &Lambda, indent: &str| {
        let _ = writeln!(s, "{indent}{} [label=\"{l}\"];", l.node_id());
    };
    match partition {
        Some(p) => {
            for (i, block) in p.blocks.iter().enumerate() {
                let _ = writeln!(s, "  subgraph cluster_{i} {{");
                let _ = writeln!(s, "    label=\"block {i}\";");
                for l in block {
                    node(&mut s, l, "    ");
                }
                s.push_str("  }\n");
            }
        }
        None => {
            for l in &sorted {
                node(&mut s, l, "  ");
            }
        }
    }
    for (a, b) in edges {
        let _ = writeln!(s, "  {} -> {};", a.node_id(), b.node_id());
    }
    s.push_str("}\n");
    s
}
