//! Right comodules `ρ: M → H ⊗ M` over a bialgebra `H`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{
    check_tensor, fmt_terms, parse_tensor, split_coefficient, split_signed_terms, tensor_mul, tensor_one,
    Bialgebra, Element, Monomial, Presentation, Report, TensorElement, ViolationKind,
};
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::jinv::QuotientMap;
use crate::lincomb::LinComb;
use crate::linalg;

/// Vector of a comodule in its basis.
pub type Vector = LinComb<usize>;

/// Element of `H ⊗ M` with `M` written in its basis.
pub type Coaction = LinComb<(Monomial, usize)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisDecl {
    pub name: String,
    pub degree: u32,
}

impl BasisDecl {
    pub fn new(name: &str, degree: u32) -> Self {
        BasisDecl {
            name: name.to_string(),
            degree,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Flavor {
    /// A presented algebra whose coaction is multiplicative; the table holds
    /// `ρ` of each generator.
    Algebra {
        presentation: Presentation,
        generator_coaction: Vec<TensorElement>,
    },
    /// A free module with an explicit coaction on each basis element.
    Basis,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comodule {
    coalgebra: Bialgebra,
    flavor: Flavor,
    basis: Vec<BasisDecl>,
    table: Vec<Coaction>,
}

impl Comodule {
    /// Extends the generator coaction multiplicatively to the normal monomial basis.
    pub fn algebra(coalgebra: Bialgebra, presentation: Presentation, generator_coaction: Vec<TensorElement>) -> Result<Self> {
        let h = coalgebra.presentation();
        if presentation.prime() != h.prime() {
            return Err(Error::InvalidComodule(format!(
                "module over F_{} but coalgebra over F_{}",
                presentation.prime(),
                h.prime()
            )));
        }
        if generator_coaction.len() != presentation.ngens() {
            return Err(Error::InvalidComodule(format!(
                "{} coactions for {} generators",
                generator_coaction.len(),
                presentation.ngens()
            )));
        }
        for (g, t) in presentation.generators().iter().zip(&generator_coaction) {
            check_tensor(h, &presentation, t)
                .map_err(|e| Error::InvalidComodule(format!("coaction of `{}`: {e}", g.name)))?;
        }
        let generator_coaction: Vec<TensorElement> = generator_coaction
            .iter()
            .map(|t| crate::algebra::normalize_tensor(h, &presentation, t))
            .collect();
        let basis = presentation
            .basis()
            .iter()
            .map(|m| BasisDecl::new(&presentation.fmt_monomial(m), presentation.degree(m)))
            .collect();
        let mut out = Comodule {
            coalgebra,
            flavor: Flavor::Algebra {
                presentation,
                generator_coaction,
            },
            basis,
            table: Vec::new(),
        };
        let (pres, _) = out.algebra_parts().expect("algebra flavor");
        let table = pres
            .basis()
            .iter()
            .map(|m| out.to_coaction(&out.coact_raw_monomial(m)))
            .collect();
        out.table = table;
        Ok(out)
    }

    /// `(generator, "h|m + ...")` strings; generators not listed are coinvariant.
    pub fn algebra_from_strings(coalgebra: Bialgebra, presentation: Presentation, coactions: &[(&str, &str)]) -> Result<Self> {
        let h = coalgebra.presentation();
        let mut table: Vec<TensorElement> = (0..presentation.ngens())
            .map(|i| {
                TensorElement::term(
                    presentation.prime(),
                    (h.one_monomial(), Monomial::generator(presentation.ngens(), i, 1)),
                    1,
                )
            })
            .collect();
        for (name, text) in coactions {
            let i = presentation.generator_index(name)?;
            table[i] = parse_tensor(h, &presentation, text)?;
        }
        Self::algebra(coalgebra, presentation, table)
    }

    pub fn basis_flavor(coalgebra: Bialgebra, basis: Vec<BasisDecl>, table: Vec<Coaction>) -> Result<Self> {
        if basis.len() != table.len() {
            return Err(Error::InvalidComodule(format!(
                "{} basis elements but {} coaction entries",
                basis.len(),
                table.len()
            )));
        }
        for (i, b) in basis.iter().enumerate() {
            if basis[..i].iter().any(|c| c.name == b.name) {
                return Err(Error::InvalidComodule(format!("duplicate basis element `{}`", b.name)));
            }
        }
        let h = coalgebra.presentation();
        let mut normalized = Vec::with_capacity(table.len());
        for (b, row) in basis.iter().zip(&table) {
            if row.prime() != h.prime() {
                return Err(Error::InvalidComodule(format!("coaction of `{}` over the wrong prime", b.name)));
            }
            let mut out = Coaction::zero(h.prime());
            for ((a, j), c) in row.iter() {
                if *j >= basis.len() || a.len() != h.ngens() {
                    return Err(Error::InvalidComodule(format!(
                        "coaction of `{}` refers outside the module or coalgebra",
                        b.name
                    )));
                }
                for (m, cm) in h.normalize_monomial(a).iter() {
                    out.add_term((m.clone(), *j), h.prime().mul(c, cm));
                }
            }
            normalized.push(out);
        }
        Ok(Comodule {
            coalgebra,
            flavor: Flavor::Basis,
            basis,
            table: normalized,
        })
    }

    /// Basis flavor from `(name, degree, "h|name + ...")`; an empty string means coinvariant.
    pub fn basis_from_strings(coalgebra: Bialgebra, entries: &[(&str, u32, &str)]) -> Result<Self> {
        let basis: Vec<BasisDecl> = entries.iter().map(|(n, d, _)| BasisDecl::new(n, *d)).collect();
        let h = coalgebra.presentation();
        let p = h.prime();
        let mut table = Vec::new();
        for (k, (_, _, text)) in entries.iter().enumerate() {
            if text.trim().is_empty() {
                table.push(Coaction::term(p, (h.one_monomial(), k), 1));
                continue;
            }
            let mut row = Coaction::zero(p);
            for (sign, term) in split_signed_terms(text) {
                let (coeff, body) = split_coefficient(term);
                let (l, r) = body
                    .split_once('|')
                    .ok_or_else(|| Error::InvalidComodule(format!("term `{body}` has no `|`")))?;
                let j = basis
                    .iter()
                    .position(|b| b.name == r.trim())
                    .ok_or_else(|| Error::InvalidComodule(format!("unknown basis element `{}`", r.trim())))?;
                let m = h.parse_monomial(l)?;
                row.add_term((m, j), p.reduce(sign * coeff));
            }
            table.push(row);
        }
        Self::basis_flavor(coalgebra, basis, table)
    }

    /// `ρ(b) = g ⊗ b` on a single basis element of degree 0.
    pub fn line(coalgebra: Bialgebra, g: &Element) -> Result<Self> {
        let h = coalgebra.presentation();
        h.check_element(g)?;
        let row = g.filter_map_keys(|m| Some((m.clone(), 0usize)));
        Self::basis_flavor(coalgebra, vec![BasisDecl::new("b", 0)], vec![row])
    }

    pub fn coalgebra(&self) -> &Bialgebra {
        &self.coalgebra
    }

    pub fn flavor(&self) -> &Flavor {
        &self.flavor
    }

    pub fn is_algebra(&self) -> bool {
        matches!(self.flavor, Flavor::Algebra { .. })
    }

    pub fn algebra_parts(&self) -> Option<(&Presentation, &[TensorElement])> {
        match &self.flavor {
            Flavor::Algebra {
                presentation,
                generator_coaction,
            } => Some((presentation, generator_coaction)),
            Flavor::Basis => None,
        }
    }

    fn pres(&self) -> Result<&Presentation> {
        self.algebra_parts()
            .map(|(p, _)| p)
            .ok_or_else(|| Error::InvalidComodule("operation needs an algebra-flavor comodule".into()))
    }

    pub fn basis(&self) -> &[BasisDecl] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn prime(&self) -> Prime {
        self.coalgebra.prime()
    }

    pub fn table(&self) -> &[Coaction] {
        &self.table
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    /// `ρ` of a raw monomial, as the product of generator coactions.
    pub fn coact_raw_monomial(&self, m: &Monomial) -> TensorElement {
        let (pres, gens) = self.algebra_parts().expect("algebra flavor");
        let h = self.coalgebra.presentation();
        let mut out = tensor_one(h, pres);
        for (i, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                out = tensor_mul(h, pres, &out, &gens[i]);
                if out.is_zero() {
                    return out;
                }
            }
        }
        out
    }

    fn to_coaction(&self, t: &TensorElement) -> Coaction {
        let pres = self.pres().expect("algebra flavor");
        t.filter_map_keys(|(a, m)| Some((a.clone(), pres.basis_index(m).expect("normal monomial"))))
    }

    fn tensor_of(&self, c: &Coaction) -> TensorElement {
        let pres = self.pres().expect("algebra flavor");
        c.filter_map_keys(|(a, j)| Some((a.clone(), pres.basis()[*j].clone())))
    }

    pub fn element_to_vector(&self, x: &Element) -> Result<Vector> {
        let pres = self.pres()?;
        pres.check_element(x)?;
        Ok(pres
            .normalize(x)
            .filter_map_keys(|m| pres.basis_index(m)))
    }

    pub fn vector_to_element(&self, v: &Vector) -> Result<Element> {
        let pres = self.pres()?;
        Ok(v.filter_map_keys(|&j| Some(pres.basis()[j].clone())))
    }

    pub fn coact_vector(&self, v: &Vector) -> Coaction {
        let mut out = Coaction::zero(self.prime());
        for (&k, c) in v.iter() {
            out.add_scaled(&self.table[k], c);
        }
        out
    }

    /// `ρ(x)` for an element of an algebra-flavor comodule.
    pub fn coact(&self, x: &Element) -> Result<TensorElement> {
        let v = self.element_to_vector(x)?;
        Ok(self.tensor_of(&self.coact_vector(&v)))
    }

    pub fn fmt_vector(&self, v: &Vector) -> String {
        fmt_terms(self.prime(), v.iter().rev().map(|(&k, c)| (self.basis[k].name.clone(), c)))
    }

    pub fn fmt_coaction(&self, c: &Coaction) -> String {
        let h = self.coalgebra.presentation();
        fmt_terms(
            self.prime(),
            c.iter().rev().map(|((a, j), c)| {
                (format!("{}⊗{}", h.fmt_monomial(a), self.basis[*j].name), c)
            }),
        )
    }

    /// Counit, coassociativity and grading on every basis element, compatibility
    /// with the relations (algebra flavor), and the coalgebra's own axioms.
    pub fn verify(&self) -> Report {
        let mut report = Report::default();
        for v in self.coalgebra.verify().violations {
            report.push(v.kind, format!("coalgebra: {}", v.subject), v.detail);
        }
        let p = self.prime();
        let h = self.coalgebra.presentation();
        let periodic = self.coalgebra.periodic().map(|w| w.degree.unsigned_abs());
        for (k, row) in self.table.iter().enumerate() {
            let subject = format!("ρ({})", self.basis[k].name);
            let deg = self.basis[k].degree;
            for ((a, j), _) in row.iter() {
                let d = h.degree(a) + self.basis[*j].degree;
                let ok = match periodic {
                    None => d == deg,
                    Some(w) => d >= deg && (d - deg).is_multiple_of(w),
                };
                if !ok {
                    report.push(
                        ViolationKind::Grading,
                        subject.clone(),
                        format!(
                            "term {}⊗{} has degree {d}, expected {deg}",
                            h.fmt_monomial(a),
                            self.basis[*j].name
                        ),
                    );
                }
            }
            let counit = row.filter_map_keys(|(a, j)| a.is_one().then_some(*j));
            if counit != Vector::term(p, k, 1) {
                report.push(
                    ViolationKind::Counit,
                    subject.clone(),
                    format!("(ε⊗id)ρ = {}", self.fmt_vector(&counit)),
                );
            }
            let mut lhs: LinComb<(Monomial, Monomial, usize)> = LinComb::zero(p);
            let mut rhs: LinComb<(Monomial, Monomial, usize)> = LinComb::zero(p);
            for ((a, j), c) in row.iter() {
                for ((a1, a2), c1) in self.coalgebra.coproduct_monomial(a).iter() {
                    lhs.add_term((a1.clone(), a2.clone(), *j), p.mul(c, c1));
                }
                for ((b, i), c2) in self.table[*j].iter() {
                    rhs.add_term((a.clone(), b.clone(), *i), p.mul(c, c2));
                }
            }
            if lhs != rhs {
                let diff = lhs.difference(&rhs);
                let (a, b, i) = diff.keys().next().expect("nonzero difference");
                report.push(
                    ViolationKind::Coassociativity,
                    subject.clone(),
                    format!(
                        "(Δ⊗id)ρ and (id⊗ρ)ρ differ at {}⊗{}⊗{}",
                        h.fmt_monomial(a),
                        h.fmt_monomial(b),
                        self.basis[*i].name
                    ),
                );
            }
        }
        if let Some((pres, _)) = self.algebra_parts() {
            for rule in pres.effective_rules() {
                let lhs = self.coact_raw_monomial(&rule.source);
                let rhs = match &rule.target {
                    None => TensorElement::zero(p),
                    Some((c, t)) => self.coact_raw_monomial(t).scaled(*c),
                };
                if lhs != rhs {
                    let target = match &rule.target {
                        None => "0".to_string(),
                        Some((c, t)) => pres.fmt_element(&Element::term(p, t.clone(), *c)),
                    };
                    report.push(
                        ViolationKind::RuleCompatibility,
                        format!("{} → {}", pres.fmt_monomial(&rule.source), target),
                        format!(
                            "ρ of the two sides differ by {}",
                            crate::algebra::fmt_tensor(h, pres, &lhs.difference(&rhs))
                        ),
                    );
                }
            }
            for failure in pres.critical_pair_failures() {
                report.push(ViolationKind::Confluence, "module relations".into(), failure);
            }
        }
        report
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.basis.iter().map(|b| b.degree).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Basis of `{v : ρ(v) = 1⊗v}`, degree by degree (or in one degree).
    pub fn coinvariants(&self, degree: Option<u32>) -> Vec<Vector> {
        let degrees = match degree {
            Some(d) => vec![d],
            None => self.degrees(),
        };
        let p = self.prime();
        let one = self.coalgebra.presentation().one_monomial();
        let mut out = Vec::new();
        for d in degrees {
            let cols: Vec<usize> = (0..self.dim()).filter(|&k| self.basis[k].degree == d).collect();
            if cols.is_empty() {
                continue;
            }
            let mut row_index: BTreeMap<(Monomial, usize), usize> = BTreeMap::new();
            let mut entries: Vec<(usize, usize, u32)> = Vec::new();
            for (c, &k) in cols.iter().enumerate() {
                let mut reduced = self.table[k].clone();
                reduced.add_term((one.clone(), k), p.neg(1));
                for (key, v) in reduced.iter() {
                    let n = row_index.len();
                    let r = *row_index.entry(key.clone()).or_insert(n);
                    entries.push((r, c, v));
                }
            }
            let mut rows = vec![vec![0u32; cols.len()]; row_index.len()];
            for (r, c, v) in entries {
                rows[r][c] = v;
            }
            for v in linalg::nullspace(p, &rows, cols.len()) {
                out.push(Vector::from_terms(p, cols.iter().copied().zip(v)));
            }
        }
        out
    }

    pub fn coinvariant_elements(&self, degree: Option<u32>) -> Result<Vec<Element>> {
        self.coinvariants(degree)
            .iter()
            .map(|v| self.vector_to_element(v))
            .collect()
    }

    /// Reduces the coalgebra side along a quotient `H → H/J`.
    pub fn reduce(&self, quotient: &Bialgebra, map: &QuotientMap) -> Result<Comodule> {
        if quotient.presentation() != map.target() {
            return Err(Error::PresentationMismatch(
                "quotient bialgebra does not match the quotient map".into(),
            ));
        }
        let table = self.table.iter().map(|r| map.map_left(r)).collect();
        let flavor = match &self.flavor {
            Flavor::Algebra {
                presentation,
                generator_coaction,
            } => Flavor::Algebra {
                presentation: presentation.clone(),
                generator_coaction: generator_coaction.iter().map(|t| map.map_left(t)).collect(),
            },
            Flavor::Basis => Flavor::Basis,
        };
        Ok(Comodule {
            coalgebra: quotient.clone(),
            flavor,
            basis: self.basis.clone(),
            table,
        })
    }

    /// The group-like `g` with `ρ(b) = g⊗b`, for a rank-one comodule.
    pub fn line_class(&self) -> Option<Element> {
        if self.dim() != 1 {
            return None;
        }
        Some(self.table[0].filter_map_keys(|(a, _)| Some(a.clone())))
    }
}

/// `M ⊗ N` with `ρ(m⊗n) = Σ h h' ⊗ (m_j ⊗ n_k)`, in basis flavor.
pub fn tensor_comodule(m: &Comodule, n: &Comodule) -> Result<Comodule> {
    if m.coalgebra != n.coalgebra {
        return Err(Error::InvalidComodule("tensor product over different coalgebras".into()));
    }
    let h = m.coalgebra.presentation();
    let p = m.prime();
    let dn = n.dim();
    let mut basis = Vec::new();
    let mut table = Vec::new();
    for (i, bm) in m.basis.iter().enumerate() {
        for (j, bn) in n.basis.iter().enumerate() {
            basis.push(BasisDecl::new(&format!("{}⊗{}", bm.name, bn.name), bm.degree + bn.degree));
            let mut row = Coaction::zero(p);
            for ((a, k), c) in m.table[i].iter() {
                for ((b, l), d) in n.table[j].iter() {
                    for (prod, e) in h.mul_monomials(a, b).iter() {
                        row.add_term((prod.clone(), k * dn + l), p.mul(e, p.mul(c, d)));
                    }
                }
            }
            table.push(row);
        }
    }
    Comodule::basis_flavor(m.coalgebra.clone(), basis, table)
}

/// A linear map between comodules, given by the images of source basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComoduleMap {
    pub images: Vec<Vector>,
}

impl ComoduleMap {
    pub fn new(source: &Comodule, target: &Comodule, images: Vec<Vector>) -> Result<Self> {
        if images.len() != source.dim() {
            return Err(Error::InvalidMap(format!(
                "{} images for a source of dimension {}",
                images.len(),
                source.dim()
            )));
        }
        let mut shift: Option<i64> = None;
        for (k, v) in images.iter().enumerate() {
            for (&j, _) in v.iter() {
                if j >= target.dim() {
                    return Err(Error::InvalidMap(format!("image index {j} outside the target")));
                }
                let s = target.basis[j].degree as i64 - source.basis[k].degree as i64;
                if *shift.get_or_insert(s) != s {
                    return Err(Error::InvalidMap("map is not homogeneous of a fixed degree".into()));
                }
            }
        }
        Ok(ComoduleMap { images })
    }

    pub fn identity(m: &Comodule) -> Self {
        ComoduleMap {
            images: (0..m.dim()).map(|k| Vector::term(m.prime(), k, 1)).collect(),
        }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        let mut out = Vector::zero(v.prime());
        for (&k, c) in v.iter() {
            out.add_scaled(&self.images[k], c);
        }
        out
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &ComoduleMap) -> ComoduleMap {
        ComoduleMap {
            images: first.images.iter().map(|v| self.apply(v)).collect(),
        }
    }
}

/// `ρ_N ∘ f = (id⊗f) ∘ ρ_M` on every basis element.
pub fn check_morphism(source: &Comodule, target: &Comodule, f: &ComoduleMap) -> bool {
    if source.coalgebra != target.coalgebra || f.images.len() != source.dim() {
        return false;
    }
    let p = source.prime();
    (0..source.dim()).all(|k| {
        let lhs = target.coact_vector(&f.images[k]);
        let mut rhs = Coaction::zero(p);
        for ((a, j), c) in source.table[k].iter() {
            for (&i, d) in f.images[*j].iter() {
                rhs.add_term((a.clone(), i), p.mul(c, d));
            }
        }
        lhs == rhs
    })
}

/// Rank-one comodules up to isomorphism, one per group-like.
#[derive(Debug, Clone)]
pub struct LineClasses {
    pub grouplikes: Vec<Element>,
    pub comodules: Vec<Comodule>,
    /// `table[i][j] = k` when `L_i ⊗ L_j ≅ L_k`.
    pub table: Vec<Vec<usize>>,
}

pub fn line_comodule_classes(h: &Bialgebra) -> Result<LineClasses> {
    let grouplikes = h.find_grouplikes()?;
    let comodules = grouplikes
        .iter()
        .map(|g| Comodule::line(h.clone(), g))
        .collect::<Result<Vec<_>>>()?;
    let mut table = Vec::new();
    for a in &comodules {
        let mut row = Vec::new();
        for b in &comodules {
            let t = tensor_comodule(a, b)?;
            let g = t.line_class().expect("rank one");
            let k = grouplikes
                .iter()
                .position(|x| *x == g)
                .ok_or_else(|| Error::InvalidComodule("tensor of lines is not a known line".into()))?;
            row.push(k);
        }
        table.push(row);
    }
    Ok(LineClasses {
        grouplikes,
        comodules,
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{GeneratorDecl, Periodic};

    fn pgl(q: u32) -> Bialgebra {
        let pres = Presentation::new(Prime::new(q).unwrap(), vec![GeneratorDecl::new("x", 1, q)], vec![]).unwrap();
        Bialgebra::from_strings(
            pres,
            &[("x", "x|1 + 1|x - x|x")],
            Some(Periodic {
                name: "beta".into(),
                degree: -1,
            }),
        )
        .unwrap()
    }

    fn e7() -> Bialgebra {
        let pres = Presentation::new(
            Prime::new(2).unwrap(),
            vec![
                GeneratorDecl::new("e3", 3, 2),
                GeneratorDecl::new("e5", 5, 2),
                GeneratorDecl::new("e9", 9, 2),
            ],
            vec![],
        )
        .unwrap();
        Bialgebra::primitive(pres)
    }

    fn e7p7(x9: &str) -> Comodule {
        let m = Presentation::new(
            Prime::new(2).unwrap(),
            vec![
                GeneratorDecl::new("h", 1, 14),
                GeneratorDecl::new("x5", 5, 2),
                GeneratorDecl::new("x9", 9, 2),
            ],
            vec![],
        )
        .unwrap();
        Comodule::algebra_from_strings(e7(), m, &[("x5", "e5|1 + e3|h^2 + 1|x5"), ("x9", x9)]).unwrap()
    }

    #[test]
    fn e7p7_coaction() {
        let m = e7p7("e9|1 + e5|h^4 + 1|x9");
        assert!(m.verify().passed(), "{}", m.verify());
        let pres = m.algebra_parts().unwrap().0.clone();
        let x5 = pres.parse_element("x5").unwrap();
        let expected = parse_tensor(m.coalgebra().presentation(), &pres, "e5|1 + e3|h^2 + 1|x5").unwrap();
        assert_eq!(m.coact(&x5).unwrap(), expected);
        let h3 = pres.parse_element("h^3").unwrap();
        assert_eq!(
            m.coact(&h3).unwrap(),
            parse_tensor(m.coalgebra().presentation(), &pres, "1|h^3").unwrap()
        );
        let one = pres.one();
        assert_eq!(m.coact(&one).unwrap(), tensor_one(m.coalgebra().presentation(), &pres));
        // e5 and e9 are primitive, so dropping e5⊗h^4 still gives a comodule.
        assert!(e7p7("e9|1 + 1|x9").verify().passed());
        assert!(e7p7("e9|1 + e5|h^4").verify().has(ViolationKind::Counit));
        assert!(e7p7("e9|1 + e5|h^4 + e3*e5|h + 1|x9").verify().has(ViolationKind::Coassociativity));
    }

    #[test]
    fn degree9_coinvariants() {
        let m = e7p7("e9|1 + e5|h^4 + 1|x9");
        let c = m.coinvariant_elements(Some(9)).unwrap();
        let pres = m.algebra_parts().unwrap().0;
        assert_eq!(c, vec![pres.parse_element("h^9").unwrap()]);
    }

    #[test]
    fn trivial_coalgebra_everything_coinvariant() {
        let m = e7p7("e9|1 + e5|h^4 + 1|x9");
        let (h, map) = crate::jinv::quotient_bialgebra(m.coalgebra(), &crate::jinv::JTuple(vec![0, 0, 0])).unwrap();
        let r = m.reduce(&h, &map).unwrap();
        assert!(r.verify().passed());
        assert_eq!(r.coinvariants(None).len(), r.dim());
    }

    #[test]
    fn line_classes_pgl() {
        for q in [2, 3, 5] {
            let lc = line_comodule_classes(&pgl(q)).unwrap();
            assert_eq!(lc.grouplikes.len(), q as usize);
            for (i, row) in lc.table.iter().enumerate() {
                for (j, &k) in row.iter().enumerate() {
                    assert_eq!(k, (i + j) % q as usize);
                }
            }
            for c in &lc.comodules {
                assert!(c.verify().passed());
            }
        }
    }

    #[test]
    fn tensor_with_unit() {
        let h = pgl(3);
        let l1 = Comodule::line(h.clone(), &h.presentation().parse_element("1 - x").unwrap()).unwrap();
        let unit = Comodule::line(h.clone(), &h.presentation().one()).unwrap();
        let t = tensor_comodule(&l1, &unit).unwrap();
        assert!(t.verify().passed());
        assert_eq!(t.line_class(), l1.line_class());
    }

    #[test]
    fn morphisms() {
        let m = e7p7("e9|1 + e5|h^4 + 1|x9");
        let pres = m.algebra_parts().unwrap().0.clone();
        let id = ComoduleMap::identity(&m);
        assert!(check_morphism(&m, &m, &id));
        let h = pres.parse_element("h").unwrap();
        let times_h: Vec<Vector> = pres
            .basis()
            .iter()
            .map(|b| {
                let x = pres.multiply(&Element::term(pres.prime(), b.clone(), 1), &h).unwrap();
                m.element_to_vector(&x).unwrap()
            })
            .collect();
        let f = ComoduleMap::new(&m, &m, times_h).unwrap();
        assert!(check_morphism(&m, &m, &f));
        assert!(check_morphism(&m, &m, &f.after(&f)));
        let x5 = pres.parse_element("x5").unwrap();
        let times_x5: Vec<Vector> = pres
            .basis()
            .iter()
            .map(|b| {
                let x = pres.multiply(&Element::term(pres.prime(), b.clone(), 1), &x5).unwrap();
                m.element_to_vector(&x).unwrap()
            })
            .collect();
        let g = ComoduleMap::new(&m, &m, times_x5).unwrap();
        assert!(!check_morphism(&m, &m, &g));
    }
}
