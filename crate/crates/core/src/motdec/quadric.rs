use alloc::format;
use alloc::vec::Vec;

use super::lambda::Lambda;
use crate::algebra::{Bialgebra, GeneratorDecl, Monomial, Presentation, RewriteRule};
use crate::comod::{BasisDecl, Coaction, Comodule};
use crate::error::Result;
use crate::field::Prime;
use crate::jinv::QuadricJSet;

/// A split quadric of dimension `n - 2` with Vishik's set `J(q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricSpec {
    pub jset: QuadricJSet,
}

impl QuadricSpec {
    pub fn new(jset: QuadricJSet) -> Self {
        QuadricSpec { jset }
    }

    pub fn n(&self) -> u32 {
        self.jset.n
    }

    pub fn m(&self) -> u32 {
        self.jset.m()
    }

    pub fn is_even(&self) -> bool {
        self.jset.is_even()
    }

    /// `{0, …, n-2}`, with `m′` right after `m` when `n` is even.
    pub fn lambda(&self) -> Vec<Lambda> {
        let mut out: Vec<Lambda> = (0..=self.n() - 2).map(Lambda::plain).collect();
        if self.is_even() {
            out.push(Lambda::primed(self.m()));
            out.sort();
        }
        out
    }

    /// Indices `j ∈ {1..m}` with `ē_j ≠ 0`.
    pub fn surviving(&self) -> Vec<u32> {
        (1..=self.m()).filter(|j| !self.jset.contains(*j)).collect()
    }

    /// `H = F_2[ē_j : j ∉ J(q)]` with `ē_i^2 = ē_{2i}` (zero when `2i` does
    /// not survive), all `ē_j` primitive.
    pub fn coalgebra(&self) -> Bialgebra {
        let surv = self.surviving();
        let n = surv.len();
        let gens = surv
            .iter()
            .map(|&j| GeneratorDecl::new(&format!("e{j}"), j, 2))
            .collect();
        let rules = surv
            .iter()
            .enumerate()
            .filter_map(|(a, &i)| {
                let b = surv.iter().position(|&j| j == 2 * i)?;
                Some(RewriteRule {
                    source: Monomial::generator(n, a, 2),
                    target: Some((1, Monomial::generator(n, b, 1))),
                })
            })
            .collect();
        let pres = Presentation::new(Prime::new(2).expect("2 is prime"), gens, rules)
            .expect("quadric coalgebra presentation is valid");
        Bialgebra::primitive(pres)
    }

    fn degree(&self, l: Lambda) -> u32 {
        if l.prime {
            self.m()
        } else {
            l.idx
        }
    }

    /// The Chow ring of the split quadric as a comodule over [`Self::coalgebra`].
    ///
    /// `b_k = h^k` for `k < m`, `b_m = l`, `b_{m′} = h^m` (even `n`), and
    /// `b_{m+k} = l h^k`.
    pub fn comodule(&self) -> Comodule {
        let h = self.coalgebra();
        let hp = h.presentation().clone();
        let m = self.m();
        let lam = self.lambda();
        let pos = |l: Lambda| lam.iter().position(|&x| x == l).expect("index in Λ");
        let ebar = |i: u32| -> Option<Monomial> {
            let k = self.surviving().iter().position(|&j| j == i)?;
            Some(Monomial::generator(hp.ngens(), k, 1))
        };
        let one = hp.one_monomial();
        let two = Prime::new(2).expect("2 is prime");
        let mut table = Vec::new();
        for &l in &lam {
            let mut row = Coaction::term(two, (one.clone(), pos(l)), 1);
            if !l.prime && l.idx >= m {
                let k = l.idx - m;
                for i in k + 1..=m {
                    if let Some(e) = ebar(i) {
                        row.add_term((e, pos(Lambda::plain(m + k - i))), 1);
                    }
                }
                if k > 0 && self.is_even() {
                    if let Some(e) = ebar(k) {
                        row.add_term((e, pos(Lambda::primed(m))), 1);
                    }
                }
            }
            table.push(row);
        }
        let basis = lam
            .iter()
            .map(|&l| BasisDecl::new(&format!("{l}"), self.degree(l)))
            .collect();
        Comodule::basis_flavor(h, basis, table).expect("quadric comodule table is well-formed")
    }
}

pub fn quadric_comodule(spec: &QuadricSpec) -> Result<Comodule> {
    Ok(spec.comodule())
}
