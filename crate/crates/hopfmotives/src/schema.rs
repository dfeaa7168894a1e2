//! JSON layouts for bialgebras, comodules and catalog entries.
//!
//! Monomials are objects mapping generator names to exponents; the unit is
//! `{}`. Coefficients are integers reduced mod p on input and written as
//! representatives in `0..p`.

use std::collections::BTreeMap;

use hopfmotives_core::algebra::{
    Bialgebra, Element, GeneratorDecl, Monomial, Periodic, Presentation, RewriteRule, TensorElement,
};
use hopfmotives_core::catalog::{CatalogEntry, DegreeTable, EdgeList, JCase, Payload};
use hopfmotives_core::comod::{BasisDecl, Coaction, Comodule, Flavor};
use hopfmotives_core::jinv::JTuple;
use hopfmotives_core::motdec::Lambda;
use hopfmotives_core::Prime;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub type MonomialDto = BTreeMap<String, u32>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDto {
    pub name: String,
    pub degree: u32,
    pub truncation: u32,
}

/// `["g", k]` for a generator power, or a monomial object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SourceDto {
    Power(String, u32),
    Monomial(MonomialDto),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetDto {
    pub coeff: i64,
    pub monomial: MonomialDto,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleDto {
    pub source: SourceDto,
    #[serde(default)]
    pub target: Option<TargetDto>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDto {
    pub coeff: i64,
    pub left: MonomialDto,
    pub right: MonomialDto,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PeriodicDto {
    pub name: String,
    pub degree: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BialgebraDto {
    pub prime: u32,
    pub generators: Vec<GeneratorDto>,
    #[serde(default)]
    pub rules: Vec<RuleDto>,
    #[serde(default)]
    pub coproducts: BTreeMap<String, Vec<TermDto>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub periodic: Option<PeriodicDto>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FlavorDto {
    Algebra,
    Basis,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisDto {
    pub name: String,
    pub degree: u32,
}

/// Right factor of a coaction term: a monomial (algebra flavor) or a basis
/// name (basis flavor).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RightDto {
    Basis(String),
    Monomial(MonomialDto),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoactionTermDto {
    pub coeff: i64,
    pub left: MonomialDto,
    pub right: RightDto,
}

/// Algebra flavor: `generators`/`rules` present the module and `coaction`
/// is keyed by generator. Basis flavor: `basis` lists the vectors and
/// `coaction` is keyed by basis name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleDto {
    pub flavor: FlavorDto,
    pub prime: u32,
    pub coalgebra: BialgebraDto,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<GeneratorDto>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rules: Vec<RuleDto>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub basis: Vec<BasisDto>,
    pub coaction: BTreeMap<String, Vec<CoactionTermDto>>,
}

/// A quadric vertex: a plain index, or a string such as `"7"` or `"3'"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LambdaDto {
    Index(u32),
    Name(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgesDto {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jset: Option<Vec<u32>>,
    pub edges: Vec<(LambdaDto, LambdaDto)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeRowDto {
    #[serde(rename = "type")]
    pub dynkin: String,
    pub degrees: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreesDto {
    pub rows: Vec<DegreeRowDto>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JCaseDto {
    pub group: String,
    pub prime: u32,
    pub degrees: Vec<u32>,
    pub truncations: Vec<u32>,
    pub tuple: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PayloadDto {
    Bialgebra(BialgebraDto),
    Comodule(ComoduleDto),
    Edges(EdgesDto),
    Degrees(DegreesDto),
    Jcase(JCaseDto),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryDto {
    pub key: String,
    pub provenance: String,
    pub payload: PayloadDto,
}

/// What a standalone input file holds.
#[derive(Debug, Clone)]
pub enum InputFile {
    Bialgebra(Bialgebra),
    Comodule(Comodule),
}

/// Deserializes with the failing field path and line in the error.
pub fn from_str_with_path<T: DeserializeOwned>(text: &str) -> Result<T, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        CliError::Schema {
            path,
            line: inner.line(),
            message: inner.to_string(),
        }
    })
}

/// Parses a bialgebra or comodule file; a top-level `flavor` field marks a
/// comodule.
pub fn parse_input(text: &str) -> Result<InputFile, CliError> {
    let value: serde_json::Value = from_str_with_path(text)?;
    if value.get("flavor").is_some() {
        let dto: ComoduleDto = from_str_with_path(text)?;
        Ok(InputFile::Comodule(comodule_from_dto(&dto)?))
    } else {
        let dto: BialgebraDto = from_str_with_path(text)?;
        Ok(InputFile::Bialgebra(bialgebra_from_dto(&dto)?))
    }
}

pub fn parse_entry(text: &str) -> Result<CatalogEntry, CliError> {
    let dto: EntryDto = from_str_with_path(text)?;
    entry_from_dto(&dto)
}

fn prime(p: u32) -> Result<Prime, CliError> {
    Ok(Prime::new(p)?)
}

fn coeff(p: Prime, c: i64) -> u32 {
    c.rem_euclid(p.get() as i64) as u32
}

fn monomial_from_dto(pres: &Presentation, m: &MonomialDto) -> Result<Monomial, CliError> {
    let mut exps = vec![0u32; pres.ngens()];
    for (name, &e) in m {
        exps[pres.generator_index(name)?] = e;
    }
    Ok(Monomial::from_exponents(exps))
}

fn monomial_to_dto(pres: &Presentation, m: &Monomial) -> MonomialDto {
    pres.generators()
        .iter()
        .zip(m.exponents())
        .filter(|(_, &e)| e > 0)
        .map(|(g, &e)| (g.name.clone(), e))
        .collect()
}

fn generators_from_dto(gens: &[GeneratorDto]) -> Vec<GeneratorDecl> {
    gens.iter().map(|g| GeneratorDecl::new(&g.name, g.degree, g.truncation)).collect()
}

fn generators_to_dto(pres: &Presentation) -> Vec<GeneratorDto> {
    pres.generators()
        .iter()
        .map(|g| GeneratorDto {
            name: g.name.clone(),
            degree: g.degree,
            truncation: g.truncation,
        })
        .collect()
}

fn presentation_from_dto(p: u32, gens: &[GeneratorDto], rules: &[RuleDto]) -> Result<Presentation, CliError> {
    let p = prime(p)?;
    let decls = generators_from_dto(gens);
    // Rule monomials are resolved against the generators alone.
    let bare = Presentation::new(p, decls.clone(), vec![])?;
    let mut out = Vec::new();
    for (index, r) in rules.iter().enumerate() {
        let at = |e: CliError| CliError::Invalid(format!("rule {index}: {e}"));
        let source = match &r.source {
            SourceDto::Power(g, k) => {
                let i = bare.generator_index(g).map_err(|e| at(e.into()))?;
                Monomial::generator(bare.ngens(), i, *k)
            }
            SourceDto::Monomial(m) => monomial_from_dto(&bare, m).map_err(at)?,
        };
        let target = match &r.target {
            None => None,
            Some(t) => Some((coeff(p, t.coeff), monomial_from_dto(&bare, &t.monomial).map_err(at)?)),
        };
        out.push(RewriteRule { source, target });
    }
    Ok(Presentation::new(p, decls, out)?)
}

fn rules_to_dto(pres: &Presentation) -> Vec<RuleDto> {
    pres.rules()
        .iter()
        .map(|r| {
            let source = match r.source.as_power() {
                Some((g, k)) => SourceDto::Power(pres.generators()[g].name.clone(), k),
                None => SourceDto::Monomial(monomial_to_dto(pres, &r.source)),
            };
            RuleDto {
                source,
                target: r.target.as_ref().map(|(c, m)| TargetDto {
                    coeff: *c as i64,
                    monomial: monomial_to_dto(pres, m),
                }),
            }
        })
        .collect()
}

fn tensor_from_dto(left: &Presentation, right: &Presentation, terms: &[TermDto]) -> Result<TensorElement, CliError> {
    let p = left.prime();
    let mut out = TensorElement::zero(p);
    for t in terms {
        let l = monomial_from_dto(left, &t.left)?;
        let r = monomial_from_dto(right, &t.right)?;
        out.add_term((l, r), coeff(p, t.coeff));
    }
    Ok(out)
}

fn tensor_to_dto(left: &Presentation, right: &Presentation, t: &TensorElement) -> Vec<TermDto> {
    t.iter()
        .map(|((l, r), c)| TermDto {
            coeff: c as i64,
            left: monomial_to_dto(left, l),
            right: monomial_to_dto(right, r),
        })
        .collect()
}

pub fn bialgebra_from_dto(dto: &BialgebraDto) -> Result<Bialgebra, CliError> {
    let pres = presentation_from_dto(dto.prime, &dto.generators, &dto.rules)?;
    let mut coproducts = Vec::new();
    for g in pres.generators() {
        let x = monomial_from_dto(&pres, &MonomialDto::from([(g.name.clone(), 1)]))?;
        let delta = match dto.coproducts.get(&g.name) {
            Some(terms) => tensor_from_dto(&pres, &pres, terms)
                .map_err(|e| CliError::Invalid(format!("coproduct of {}: {e}", g.name)))?,
            None => {
                let one = pres.one_monomial();
                let mut t = TensorElement::zero(pres.prime());
                t.add_term((x.clone(), one.clone()), 1);
                t.add_term((one, x), 1);
                t
            }
        };
        coproducts.push(delta);
    }
    for name in dto.coproducts.keys() {
        pres.generator_index(name)
            .map_err(|e| CliError::Invalid(format!("coproducts: {e}")))?;
    }
    let periodic = dto.periodic.as_ref().map(|w| Periodic {
        name: w.name.clone(),
        degree: w.degree,
    });
    Ok(Bialgebra::new(pres, coproducts, periodic)?)
}

pub fn bialgebra_to_dto(b: &Bialgebra) -> BialgebraDto {
    let pres = b.presentation();
    BialgebraDto {
        prime: b.prime().get(),
        generators: generators_to_dto(pres),
        rules: rules_to_dto(pres),
        coproducts: pres
            .generators()
            .iter()
            .zip(b.generator_coproducts())
            .map(|(g, t)| (g.name.clone(), tensor_to_dto(pres, pres, t)))
            .collect(),
        periodic: b.periodic().map(|w| PeriodicDto {
            name: w.name.clone(),
            degree: w.degree,
        }),
    }
}

pub fn comodule_from_dto(dto: &ComoduleDto) -> Result<Comodule, CliError> {
    let h = bialgebra_from_dto(&dto.coalgebra).map_err(|e| CliError::Invalid(format!("coalgebra: {e}")))?;
    if h.prime().get() != dto.prime {
        return Err(CliError::Invalid(format!(
            "prime {} differs from the coalgebra prime {}",
            dto.prime,
            h.prime().get()
        )));
    }
    let hp = h.presentation().clone();
    let p = h.prime();
    match dto.flavor {
        FlavorDto::Algebra => {
            if !dto.basis.is_empty() {
                return Err(CliError::Invalid("algebra flavor takes generators, not basis".into()));
            }
            let pres = presentation_from_dto(dto.prime, &dto.generators, &dto.rules)?;
            for name in dto.coaction.keys() {
                pres.generator_index(name)
                    .map_err(|e| CliError::Invalid(format!("coaction: {e}")))?;
            }
            let mut coactions = Vec::new();
            for g in pres.generators() {
                let terms = dto.coaction.get(&g.name).map(Vec::as_slice).unwrap_or(&[]);
                let mut t = TensorElement::zero(p);
                if dto.coaction.contains_key(&g.name) {
                    for term in terms {
                        let RightDto::Monomial(r) = &term.right else {
                            return Err(CliError::Invalid(format!(
                                "coaction of {}: right factors are monomial objects",
                                g.name
                            )));
                        };
                        let l = monomial_from_dto(&hp, &term.left)?;
                        let r = monomial_from_dto(&pres, r)?;
                        t.add_term((l, r), coeff(p, term.coeff));
                    }
                } else {
                    let x = monomial_from_dto(&pres, &MonomialDto::from([(g.name.clone(), 1)]))?;
                    t.add_term((hp.one_monomial(), x), 1);
                }
                coactions.push(t);
            }
            Ok(Comodule::algebra(h, pres, coactions)?)
        }
        FlavorDto::Basis => {
            if !dto.generators.is_empty() || !dto.rules.is_empty() {
                return Err(CliError::Invalid("basis flavor takes basis, not generators".into()));
            }
            let basis: Vec<BasisDecl> = dto.basis.iter().map(|b| BasisDecl::new(&b.name, b.degree)).collect();
            let index = |name: &str| {
                basis
                    .iter()
                    .position(|b| b.name == name)
                    .ok_or_else(|| CliError::Invalid(format!("coaction: unknown basis vector `{name}`")))
            };
            for name in dto.coaction.keys() {
                index(name)?;
            }
            let mut table = Vec::new();
            for b in &basis {
                let mut row = Coaction::zero(p);
                for term in dto.coaction.get(&b.name).map(Vec::as_slice).unwrap_or(&[]) {
                    let RightDto::Basis(r) = &term.right else {
                        return Err(CliError::Invalid(format!(
                            "coaction of {}: right factors are basis names",
                            b.name
                        )));
                    };
                    row.add_term((monomial_from_dto(&hp, &term.left)?, index(r)?), coeff(p, term.coeff));
                }
                table.push(row);
            }
            Ok(Comodule::basis_flavor(h, basis, table)?)
        }
    }
}

pub fn comodule_to_dto(m: &Comodule) -> ComoduleDto {
    let h = m.coalgebra();
    let hp = h.presentation();
    let base = ComoduleDto {
        flavor: FlavorDto::Basis,
        prime: m.prime().get(),
        coalgebra: bialgebra_to_dto(h),
        generators: vec![],
        rules: vec![],
        basis: vec![],
        coaction: BTreeMap::new(),
    };
    match m.flavor() {
        Flavor::Algebra {
            presentation,
            generator_coaction,
        } => ComoduleDto {
            flavor: FlavorDto::Algebra,
            generators: generators_to_dto(presentation),
            rules: rules_to_dto(presentation),
            coaction: presentation
                .generators()
                .iter()
                .zip(generator_coaction)
                .map(|(g, t)| {
                    let terms = t
                        .iter()
                        .map(|((l, r), c)| CoactionTermDto {
                            coeff: c as i64,
                            left: monomial_to_dto(hp, l),
                            right: RightDto::Monomial(monomial_to_dto(presentation, r)),
                        })
                        .collect();
                    (g.name.clone(), terms)
                })
                .collect(),
            ..base
        },
        Flavor::Basis => ComoduleDto {
            basis: m
                .basis()
                .iter()
                .map(|b| BasisDto {
                    name: b.name.clone(),
                    degree: b.degree,
                })
                .collect(),
            coaction: m
                .basis()
                .iter()
                .zip(m.table())
                .map(|(b, row)| {
                    let terms = row
                        .iter()
                        .map(|((l, r), c)| CoactionTermDto {
                            coeff: c as i64,
                            left: monomial_to_dto(hp, l),
                            right: RightDto::Basis(m.basis()[*r].name.clone()),
                        })
                        .collect();
                    (b.name.clone(), terms)
                })
                .collect(),
            ..base
        },
    }
}

pub fn lambda_from_dto(l: &LambdaDto, m: Option<u32>) -> Result<Lambda, CliError> {
    match l {
        LambdaDto::Index(i) => Ok(Lambda::plain(*i)),
        LambdaDto::Name(s) => {
            Lambda::parse(s, m).ok_or_else(|| CliError::Invalid(format!("`{s}` is not a quadric index")))
        }
    }
}

pub fn lambda_to_dto(l: &Lambda) -> LambdaDto {
    LambdaDto::Name(l.to_string())
}

pub fn edges_from_dto(dto: &EdgesDto, m: Option<u32>) -> Result<Vec<(Lambda, Lambda)>, CliError> {
    dto.edges
        .iter()
        .map(|(a, b)| Ok((lambda_from_dto(a, m)?, lambda_from_dto(b, m)?)))
        .collect()
}

pub fn entry_to_dto(e: &CatalogEntry) -> EntryDto {
    let payload = match &e.payload {
        Payload::Bialgebra(b) => PayloadDto::Bialgebra(bialgebra_to_dto(b)),
        Payload::Comodule(m) => PayloadDto::Comodule(comodule_to_dto(m)),
        Payload::Edges(x) => PayloadDto::Edges(EdgesDto {
            n: Some(x.n),
            jset: Some(x.jset.clone()),
            edges: x.edges.iter().map(|(a, b)| (lambda_to_dto(a), lambda_to_dto(b))).collect(),
        }),
        Payload::Degrees(t) => PayloadDto::Degrees(DegreesDto {
            rows: t
                .rows
                .iter()
                .map(|(d, v)| DegreeRowDto {
                    dynkin: d.clone(),
                    degrees: v.clone(),
                })
                .collect(),
        }),
        Payload::JCase(c) => PayloadDto::Jcase(JCaseDto {
            group: c.group.clone(),
            prime: c.prime.get(),
            degrees: c.degrees.clone(),
            truncations: c.truncations.clone(),
            tuple: c.tuple.entries().to_vec(),
        }),
    };
    EntryDto {
        key: e.key.clone(),
        provenance: e.provenance.clone(),
        payload,
    }
}

pub fn entry_from_dto(dto: &EntryDto) -> Result<CatalogEntry, CliError> {
    let payload = match &dto.payload {
        PayloadDto::Bialgebra(b) => Payload::Bialgebra(bialgebra_from_dto(b)?),
        PayloadDto::Comodule(m) => Payload::Comodule(comodule_from_dto(m)?),
        PayloadDto::Edges(x) => {
            let n = x.n.ok_or_else(|| CliError::Invalid("edges: `n` is required in a catalog entry".into()))?;
            let jset = x
                .jset
                .clone()
                .ok_or_else(|| CliError::Invalid("edges: `jset` is required in a catalog entry".into()))?;
            Payload::Edges(EdgeList {
                n,
                jset,
                edges: edges_from_dto(x, Some((n.max(1) - 1) / 2))?,
            })
        }
        PayloadDto::Degrees(t) => Payload::Degrees(DegreeTable {
            rows: t.rows.iter().map(|r| (r.dynkin.clone(), r.degrees.clone())).collect(),
        }),
        PayloadDto::Jcase(c) => Payload::JCase(JCase {
            group: c.group.clone(),
            prime: prime(c.prime)?,
            degrees: c.degrees.clone(),
            truncations: c.truncations.clone(),
            tuple: JTuple(c.tuple.clone()),
        }),
    };
    Ok(CatalogEntry::new(&dto.key, &dto.provenance, payload))
}

/// Writes an element with the presentation's own formatting.
pub fn fmt_element(pres: &Presentation, x: &Element) -> String {
    pres.fmt_element(x)
}
