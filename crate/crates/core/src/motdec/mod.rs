//! Connection graphs and partitions for quadric motives, Tate-twist
//! multisets, and the search for `R_p(E)`-type summands.

mod graph;
mod lambda;
mod quadric;
mod rpe;
mod twist;

pub use graph::{
    assemble_partition, coaction_edges, connections_closed_form, connections_from_coaction, emit_dot,
    quadric_connections, ConnectionGraph, Partition,
};
pub use lambda::Lambda;
pub use quadric::{quadric_comodule, QuadricSpec};
pub use rpe::{ej_monomial, rpe_beta_search, BetaAlpha};
pub use twist::{twist_multiset, twist_multiset_for_tuple, TwistMultiset};
