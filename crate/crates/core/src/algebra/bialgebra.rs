use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::monomial::Monomial;
use super::presentation::{Element, GeneratorDecl, Presentation, RewriteRule};
use super::report::{Report, ViolationKind};
use super::tensor::{
    check_tensor, counit_left, counit_right, fmt_tensor, normalize_tensor, parse_tensor, tensor_mul,
    tensor_one, TensorElement, TripleTensor,
};
use crate::error::{Error, Result};
use crate::field::{Prime, Scalar};

/// Search bound for exhaustive group-like enumeration.
pub const GROUPLIKE_BOUND: u64 = 1_000_000;

/// Name and (negative) degree of an invertible periodicity element that has
/// been specialized to 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Periodic {
    pub name: String,
    pub degree: i32,
}

/// A presented algebra with a coproduct on each generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bialgebra {
    pres: Presentation,
    coproducts: Vec<TensorElement>,
    periodic: Option<Periodic>,
}

impl Bialgebra {
    /// Normalizes the coproduct table; axioms are checked by [`Bialgebra::verify`].
    pub fn new(pres: Presentation, coproducts: Vec<TensorElement>, periodic: Option<Periodic>) -> Result<Self> {
        if coproducts.len() != pres.ngens() {
            return Err(Error::PresentationMismatch(format!(
                "{} coproducts for {} generators",
                coproducts.len(),
                pres.ngens()
            )));
        }
        let mut table = Vec::with_capacity(coproducts.len());
        for (g, d) in pres.generators().iter().zip(&coproducts) {
            check_tensor(&pres, &pres, d).map_err(|e| Error::InvalidCoproduct {
                generator: g.name.clone(),
                reason: e.to_string(),
            })?;
            table.push(normalize_tensor(&pres, &pres, d));
        }
        if let Some(per) = &periodic {
            if per.degree >= 0 {
                return Err(Error::InvalidGenerator {
                    name: per.name.clone(),
                    reason: "periodicity element must have negative degree".into(),
                });
            }
        }
        Ok(Bialgebra {
            pres,
            coproducts: table,
            periodic,
        })
    }

    /// Every generator primitive.
    pub fn primitive(pres: Presentation) -> Self {
        let coproducts = (0..pres.ngens())
            .map(|i| {
                let g = Monomial::generator(pres.ngens(), i, 1);
                let one = pres.one_monomial();
                TensorElement::from_terms(pres.prime(), [((g.clone(), one.clone()), 1), ((one, g), 1)])
            })
            .collect();
        Bialgebra {
            pres,
            coproducts,
            periodic: None,
        }
    }

    /// Builds from `(generator, "a|b + ...")` coproduct strings; generators not
    /// listed are primitive.
    pub fn from_strings(pres: Presentation, coproducts: &[(&str, &str)], periodic: Option<Periodic>) -> Result<Self> {
        let base = Self::primitive(pres);
        let mut table = base.coproducts;
        for (name, text) in coproducts {
            let i = base.pres.generator_index(name)?;
            table[i] = parse_tensor(&base.pres, &base.pres, text)?;
        }
        Self::new(base.pres, table, periodic)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn prime(&self) -> Prime {
        self.pres.prime()
    }

    pub fn periodic(&self) -> Option<&Periodic> {
        self.periodic.as_ref()
    }

    pub fn generator_coproducts(&self) -> &[TensorElement] {
        &self.coproducts
    }

    pub fn dim(&self) -> usize {
        self.pres.dim()
    }

    /// Coproduct of an arbitrary (not necessarily normal) monomial.
    pub fn coproduct_monomial(&self, m: &Monomial) -> TensorElement {
        let mut out = tensor_one(&self.pres, &self.pres);
        for (i, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                out = tensor_mul(&self.pres, &self.pres, &out, &self.coproducts[i]);
                if out.is_zero() {
                    return out;
                }
            }
        }
        out
    }

    pub fn coproduct(&self, x: &Element) -> TensorElement {
        let p = self.prime();
        let mut out = TensorElement::zero(p);
        for (m, c) in x.iter() {
            out.add_scaled(&self.coproduct_monomial(m), c);
        }
        out
    }

    /// Coproducts of all basis monomials, in basis order.
    pub fn coproduct_table(&self) -> Vec<TensorElement> {
        self.pres.basis().iter().map(|m| self.coproduct_monomial(m)).collect()
    }

    pub fn counit(&self, x: &Element) -> Scalar {
        Scalar::new(x.coeff(&self.pres.one_monomial()) as i64, self.prime())
    }

    /// Antipode on every basis monomial, in basis order.
    ///
    /// Sums the convolution series `Σ_n (ηε - id)^{*n}`, which terminates
    /// because the augmentation ideal is nilpotent.
    pub fn antipode_table(&self) -> Vec<Element> {
        let p = self.prime();
        let basis = self.pres.basis();
        let deltas = self.coproduct_table();
        let one = self.pres.one_monomial();
        let mut cur: Vec<Element> = basis
            .iter()
            .map(|b| if b.is_one() { self.pres.one() } else { self.pres.zero() })
            .collect();
        let mut total = cur.clone();
        for _ in 0..=basis.len() {
            let mut next = vec![self.pres.zero(); basis.len()];
            for (k, delta) in deltas.iter().enumerate() {
                for ((a, b), c) in delta.iter() {
                    if *a == one {
                        continue;
                    }
                    let j = self.pres.basis_index(b).expect("normal monomial");
                    if cur[j].is_zero() {
                        continue;
                    }
                    let prod = self.pres.mul_unchecked(&Element::term(p, a.clone(), 1), &cur[j]);
                    next[k].add_scaled(&prod, p.neg(c));
                }
            }
            if next.iter().all(|x| x.is_zero()) {
                break;
            }
            for (t, n) in total.iter_mut().zip(&next) {
                t.add_assign(n);
            }
            cur = next;
        }
        total
    }

    pub fn antipode(&self, x: &Element) -> Element {
        let table = self.antipode_table();
        let mut out = self.pres.zero();
        for (m, c) in self.pres.normalize(x).iter() {
            let i = self.pres.basis_index(m).expect("normal monomial");
            out.add_scaled(&table[i], c);
        }
        out
    }

    pub fn fmt_tensor(&self, t: &TensorElement) -> String {
        fmt_tensor(&self.pres, &self.pres, t)
    }

    fn delta_left(&self, t: &TensorElement) -> TripleTensor {
        let mut out = TripleTensor::zero(self.prime());
        for ((a, b), c) in t.iter() {
            for ((a1, a2), c1) in self.coproduct_monomial(a).iter() {
                out.add_term((a1.clone(), a2.clone(), b.clone()), self.prime().mul(c, c1));
            }
        }
        out
    }

    fn delta_right(&self, t: &TensorElement) -> TripleTensor {
        let mut out = TripleTensor::zero(self.prime());
        for ((a, b), c) in t.iter() {
            for ((b1, b2), c1) in self.coproduct_monomial(b).iter() {
                out.add_term((a.clone(), b1.clone(), b2.clone()), self.prime().mul(c, c1));
            }
        }
        out
    }

    /// Checks grading, counit, connectedness and coassociativity on every
    /// generator, compatibility of Δ with every rewrite rule (including the
    /// implicit truncations), and local confluence of the rules.
    pub fn verify(&self) -> Report {
        let mut report = Report::default();
        let pres = &self.pres;
        let one = pres.one_monomial();
        for (i, g) in pres.generators().iter().enumerate() {
            let d = &self.coproducts[i];
            let gen = pres.generator(i);
            let subject = format!("Δ({})", g.name);
            for ((a, b), _) in d.iter() {
                let deg = pres.degree(a) + pres.degree(b);
                let ok = match &self.periodic {
                    None => deg == g.degree,
                    Some(per) => {
                        let w = per.degree.unsigned_abs();
                        deg >= g.degree && (deg - g.degree).is_multiple_of(w)
                    }
                };
                if !ok {
                    report.push(
                        ViolationKind::Grading,
                        subject.clone(),
                        format!(
                            "term {}⊗{} has degree {deg}, generator has degree {}",
                            pres.fmt_monomial(a),
                            pres.fmt_monomial(b),
                            g.degree
                        ),
                    );
                }
            }
            let l = counit_left(d);
            if l != gen {
                report.push(
                    ViolationKind::Counit,
                    subject.clone(),
                    format!("(ε⊗id)Δ({}) = {}", g.name, pres.fmt_element(&l)),
                );
            }
            let r = counit_right(d);
            if r != gen {
                report.push(
                    ViolationKind::Counit,
                    subject.clone(),
                    format!("(id⊗ε)Δ({}) = {}", g.name, pres.fmt_element(&r)),
                );
            }
            let gm = Monomial::generator(pres.ngens(), i, 1);
            let mut reduced = d.clone();
            reduced.add_term((gm.clone(), one.clone()), pres.prime().neg(1));
            reduced.add_term((one.clone(), gm), pres.prime().neg(1));
            if let Some((a, b)) = reduced.keys().find(|(a, b)| a.is_one() || b.is_one()) {
                report.push(
                    ViolationKind::Connectedness,
                    subject.clone(),
                    format!(
                        "reduced coproduct has term {}⊗{} with a degree-0 factor",
                        pres.fmt_monomial(a),
                        pres.fmt_monomial(b)
                    ),
                );
            }
            let lhs = self.delta_left(d);
            let rhs = self.delta_right(d);
            if lhs != rhs {
                let diff = lhs.difference(&rhs);
                let (a, b, c) = diff.keys().next().expect("nonzero difference");
                report.push(
                    ViolationKind::Coassociativity,
                    subject.clone(),
                    format!(
                        "(Δ⊗id)Δ and (id⊗Δ)Δ differ at {}⊗{}⊗{}",
                        pres.fmt_monomial(a),
                        pres.fmt_monomial(b),
                        pres.fmt_monomial(c)
                    ),
                );
            }
        }
        for rule in pres.effective_rules() {
            let lhs = self.coproduct_monomial(&rule.source);
            let rhs = match &rule.target {
                None => TensorElement::zero(pres.prime()),
                Some((c, t)) => self.coproduct_monomial(t).scaled(*c),
            };
            if lhs != rhs {
                let target = match &rule.target {
                    None => "0".to_string(),
                    Some((c, t)) => pres.fmt_element(&Element::term(pres.prime(), t.clone(), *c)),
                };
                report.push(
                    ViolationKind::RuleCompatibility,
                    format!("{} → {}", pres.fmt_monomial(&rule.source), target),
                    format!(
                        "Δ of the two sides differ by {}",
                        self.fmt_tensor(&lhs.difference(&rhs))
                    ),
                );
            }
        }
        for failure in pres.critical_pair_failures() {
            report.push(ViolationKind::Confluence, "rules".into(), failure);
        }
        report
    }

    /// All `g` with `ε(g) = 1` and `Δ(g) = g⊗g`, by exhaustive search.
    ///
    /// Candidates are enumerated with the lowest basis element varying fastest.
    pub fn find_grouplikes(&self) -> Result<Vec<Element>> {
        let p = self.prime();
        let dim = self.dim();
        let count = (p.get() as u64).checked_pow(dim as u32 - 1);
        if count.is_none_or(|c| c > GROUPLIKE_BOUND) {
            return Err(Error::BoundExceeded {
                what: format!("group-like search space {}^{}", p.get(), dim - 1),
                bound: GROUPLIKE_BOUND,
            });
        }
        let basis = self.pres.basis();
        let deltas = self.coproduct_table();
        let mut coeffs = vec![0u32; dim];
        coeffs[0] = 1;
        let mut out = Vec::new();
        loop {
            let mut lhs = TensorElement::zero(p);
            let mut rhs = TensorElement::zero(p);
            for (i, &ci) in coeffs.iter().enumerate() {
                if ci == 0 {
                    continue;
                }
                lhs.add_scaled(&deltas[i], ci);
                for (j, &cj) in coeffs.iter().enumerate() {
                    if cj != 0 {
                        rhs.add_term((basis[i].clone(), basis[j].clone()), p.mul(ci, cj));
                    }
                }
            }
            if lhs == rhs {
                out.push(Element::from_terms(
                    p,
                    basis.iter().cloned().zip(coeffs.iter().copied()),
                ));
            }
            let mut k = 1;
            while k < dim {
                coeffs[k] += 1;
                if coeffs[k] < p.get() {
                    break;
                }
                coeffs[k] = 0;
                k += 1;
            }
            if k >= dim {
                break;
            }
        }
        Ok(out)
    }

    /// Exponents `k_i` with truncations `p^{k_i}` when there are no explicit
    /// rules and every truncation is a power of `p`.
    pub fn borel_exponents(&self) -> Option<Vec<u32>> {
        if !self.pres.rules().is_empty() {
            return None;
        }
        self.pres
            .generators()
            .iter()
            .map(|g| self.prime().log(g.truncation))
            .collect()
    }

    pub fn is_borel_form(&self) -> bool {
        self.borel_exponents().is_some()
    }

    /// Re-presents an algebra whose rules have the shape `g^{N_g} → c·g'`
    /// (or `→ 0`) on the generators that are not a rule target, with
    /// truncations `p^k`.
    pub fn borel_normalize(&self) -> Result<Bialgebra> {
        let pres = &self.pres;
        let n = pres.ngens();
        let p = self.prime();
        let gens = pres.generators();
        // chain[g] = Some((c, g')) when g^{N_g} → c·g'.
        let mut chain: Vec<Option<(u32, usize)>> = vec![None; n];
        let mut target_of: Vec<Option<usize>> = vec![None; n];
        for rule in pres.rules() {
            let (g, e) = rule
                .source
                .as_power()
                .ok_or_else(|| Error::UnsupportedPresentation("rule source is not a generator power".into()))?;
            if e != gens[g].truncation {
                return Err(Error::UnsupportedPresentation(format!(
                    "rule source {} is not the truncation power of {}",
                    pres.fmt_monomial(&rule.source),
                    gens[g].name
                )));
            }
            if let Some((c, t)) = &rule.target {
                let (h, 1) = t.as_power().ok_or_else(|| {
                    Error::UnsupportedPresentation("rule target is not a single generator".into())
                })?
                else {
                    return Err(Error::UnsupportedPresentation(
                        "rule target is not a single generator".into(),
                    ));
                };
                if target_of[h].is_some() {
                    return Err(Error::UnsupportedPresentation(format!(
                        "generator {} is the target of two rules",
                        gens[h].name
                    )));
                }
                target_of[h] = Some(g);
                chain[g] = Some((*c, h));
            }
        }
        // Express each generator as coeff · survivor^power, in index order;
        // rule targets always come after their sources.
        let mut expr: Vec<(u32, usize, u32)> = vec![(1, 0, 0); n];
        for h in 0..n {
            expr[h] = match target_of[h] {
                None => (1, h, 1),
                Some(g) => {
                    let (c, _) = chain[g].expect("chain entry");
                    let (c0, s, e) = expr[g];
                    let ng = gens[g].truncation;
                    (p.mul(p.inv(c), p.pow(c0, ng)), s, e * ng)
                }
            };
        }
        let survivors: Vec<usize> = (0..n).filter(|&h| target_of[h].is_none()).collect();
        let mut new_gens = Vec::new();
        for &s in &survivors {
            let mut trunc = 1u64;
            let mut g = s;
            loop {
                trunc *= gens[g].truncation as u64;
                match chain[g] {
                    Some((_, h)) => g = h,
                    None => break,
                }
            }
            let t = u32::try_from(trunc)
                .ok()
                .filter(|&t| p.log(t).is_some())
                .ok_or_else(|| {
                    Error::NotBorelForm(format!(
                        "truncation {trunc} of {} is not a power of {}",
                        gens[s].name,
                        p.get()
                    ))
                })?;
            new_gens.push(GeneratorDecl::new(&gens[s].name, gens[s].degree, t));
        }
        let new_pres = Presentation::new(p, new_gens, Vec::<RewriteRule>::new())?;
        let pos = |s: usize| survivors.iter().position(|&x| x == s).expect("survivor");
        let translate = |m: &Monomial| -> (u32, Monomial) {
            let mut c = 1;
            let mut out = new_pres.one_monomial();
            for (g, &a) in m.exponents().iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let (cg, s, e) = expr[g];
                c = p.mul(c, p.pow(cg, a));
                let k = pos(s);
                out.set_exponent(k, out.exponent(k) + e * a);
            }
            (c, out)
        };
        let mut coproducts = Vec::new();
        for &s in &survivors {
            let mut d = TensorElement::zero(p);
            for ((a, b), c) in self.coproducts[s].iter() {
                let (ca, ma) = translate(a);
                let (cb, mb) = translate(b);
                d.add_term((ma, mb), p.mul(c, p.mul(ca, cb)));
            }
            coproducts.push(d);
        }
        Bialgebra::new(new_pres, coproducts, self.periodic.clone())
    }
}
