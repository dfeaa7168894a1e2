use alloc::vec::Vec;

use crate::algebra::{Element, Monomial};
use crate::comod::Comodule;
use crate::error::{Error, Result};
use crate::jinv::{quotient_bialgebra, JTuple};
use crate::linalg;

/// A `β` whose coaction has a nonzero `E_J`-component `α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaAlpha {
    pub degree: u32,
    pub beta: Element,
    pub alpha: Element,
}

/// `E_J = Π e_i^{p^{j_i} - 1}` in the quotient presentation.
pub fn ej_monomial(j: &JTuple, p: u32) -> Monomial {
    Monomial::from_exponents(
        j.entries()
            .iter()
            .filter(|&&x| x > 0)
            .map(|&x| p.pow(x) - 1)
            .collect(),
    )
}

/// For every degree, greedily picks basis monomials `β` of `M` (in basis
/// order) whose `α`, the `E_J`-component of `ρ(β)` over `H = A/J`, is
/// independent of the ones already picked.
pub fn rpe_beta_search(m: &Comodule, j: &JTuple) -> Result<Vec<BetaAlpha>> {
    let pres = m
        .algebra_parts()
        .map(|(p, _)| p.clone())
        .ok_or_else(|| Error::InvalidComodule("the β-search needs an algebra-flavor comodule".into()))?;
    let (h, map) = quotient_bialgebra(m.coalgebra(), j)?;
    let reduced = m.reduce(&h, &map)?;
    let p = m.prime();
    let ej = ej_monomial(j, p.get());
    let ej_deg = h.presentation().degree(&ej);
    let mut out = Vec::new();
    for d in m.degrees() {
        let cols: Vec<usize> = (0..m.dim()).filter(|&k| m.basis()[k].degree == d).collect();
        if d < ej_deg {
            continue;
        }
        let targets: Vec<usize> = (0..m.dim())
            .filter(|&k| m.basis()[k].degree == d - ej_deg)
            .collect();
        let alphas: Vec<Vec<u32>> = cols
            .iter()
            .map(|&k| {
                targets
                    .iter()
                    .map(|&t| reduced.table()[k].coeff(&(ej.clone(), t)))
                    .collect()
            })
            .collect();
        for i in linalg::independent_subset(p, &alphas, targets.len()) {
            let beta = Element::term(p, pres.basis()[cols[i]].clone(), 1);
            let alpha = Element::from_terms(
                p,
                targets
                    .iter()
                    .zip(&alphas[i])
                    .map(|(&t, &c)| (pres.basis()[t].clone(), c)),
            );
            out.push(BetaAlpha { degree: d, beta, alpha });
        }
    }
    Ok(out)
}
