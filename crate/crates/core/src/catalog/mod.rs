//! Built-in presentations, coactions and tables, each verified when the
//! catalog is built.

mod entries;
pub mod weyl;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::Bialgebra;
use crate::comod::Comodule;
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::jinv::{JTuple, QuadricJSet};
use crate::motdec::{twist_multiset_for_tuple, Lambda, QuadricSpec};

pub use entries::{k2_bialgebra, morava_rost, pgl_k0, so_mod2};
pub use weyl::{cartan_matrix, fundamental_degrees, weyl_order, weyl_poincare, weyl_poincare_bruteforce};

/// Extra connections for one quadric, given as directed pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub n: u32,
    pub jset: Vec<u32>,
    pub edges: Vec<(Lambda, Lambda)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeTable {
    pub rows: Vec<(String, Vec<u32>)>,
}

/// A J-invariant together with the group data needed to count twists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JCase {
    pub group: String,
    pub prime: Prime,
    pub degrees: Vec<u32>,
    pub truncations: Vec<u32>,
    pub tuple: JTuple,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Bialgebra(Bialgebra),
    Comodule(Comodule),
    Edges(EdgeList),
    Degrees(DegreeTable),
    JCase(JCase),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Bialgebra(_) => "bialgebra",
            Payload::Comodule(_) => "comodule",
            Payload::Edges(_) => "edges",
            Payload::Degrees(_) => "degrees",
            Payload::JCase(_) => "jcase",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub key: String,
    pub provenance: String,
    pub payload: Payload,
}

impl CatalogEntry {
    pub fn new(key: &str, provenance: &str, payload: Payload) -> Self {
        CatalogEntry {
            key: String::from(key),
            provenance: String::from(provenance),
            payload,
        }
    }

    pub fn bialgebra(&self) -> Option<&Bialgebra> {
        match &self.payload {
            Payload::Bialgebra(b) => Some(b),
            _ => None,
        }
    }

    pub fn comodule(&self) -> Option<&Comodule> {
        match &self.payload {
            Payload::Comodule(m) => Some(m),
            _ => None,
        }
    }

    /// Runs the verifier matching the payload.
    pub fn verify(&self) -> Result<()> {
        let fail = |detail: String| Error::CatalogVerification {
            key: self.key.clone(),
            detail,
        };
        match &self.payload {
            Payload::Bialgebra(b) => {
                let r = b.verify();
                if !r.passed() {
                    return Err(fail(format!("{r}")));
                }
            }
            Payload::Comodule(m) => {
                let r = m.verify();
                if !r.passed() {
                    return Err(fail(format!("{r}")));
                }
            }
            Payload::Edges(e) => {
                let spec = QuadricSpec::new(QuadricJSet::new(e.n, e.jset.iter().copied()).map_err(|x| fail(format!("{x}")))?);
                let vertices = spec.lambda();
                for (a, b) in &e.edges {
                    if !vertices.contains(a) || !vertices.contains(b) {
                        return Err(fail(format!("edge {a} -> {b} is not between quadric vertices")));
                    }
                }
            }
            Payload::Degrees(t) => {
                for (name, degrees) in &t.rows {
                    let expected = fundamental_degrees(name).map_err(|x| fail(format!("{x}")))?;
                    if &expected != degrees {
                        return Err(fail(format!("degree row for {name} differs from the reference table")));
                    }
                }
            }
            Payload::JCase(c) => {
                if c.degrees.len() != c.tuple.len() || c.truncations.len() != c.tuple.len() {
                    return Err(fail(String::from("tuple length differs from the number of generators")));
                }
                let p = c.prime.get();
                for (i, (&t, &j)) in c.truncations.iter().zip(c.tuple.entries()).enumerate() {
                    if p.checked_pow(j).is_none_or(|q| q > t) {
                        return Err(fail(format!("entry {i} exceeds the truncation {t}")));
                    }
                }
                let pw = weyl_poincare(&c.group).map_err(|x| fail(format!("{x}")))?;
                twist_multiset_for_tuple(&pw, &c.tuple, &c.degrees, c.prime).map_err(|x| fail(format!("{x}")))?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default)]
pub struct Catalog {
    entries: BTreeMap<String, CatalogEntry>,
}

impl Catalog {
    pub fn empty() -> Self {
        Catalog::default()
    }

    /// All built-in entries, verified.
    pub fn builtin() -> Result<Self> {
        let mut c = Catalog::empty();
        for e in entries::all()? {
            c.insert(e)?;
        }
        Ok(c)
    }

    /// Verifies and adds an entry, replacing any entry with the same key.
    pub fn insert(&mut self, entry: CatalogEntry) -> Result<()> {
        entry.verify()?;
        self.entries.insert(entry.key.clone(), entry);
        Ok(())
    }

    pub fn get(&self, key: &str) -> Result<&CatalogEntry> {
        self.entries.get(key).ok_or_else(|| Error::UnknownKey(String::from(key)))
    }

    pub fn list(&self) -> Vec<&str> {
        self.entries.keys().map(String::as_str).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
