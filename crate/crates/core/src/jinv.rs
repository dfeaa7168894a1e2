//! Tuple-shaped bi-ideals, quotient bialgebras, Poincaré polynomials and
//! the quadric J-set encoding.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Bialgebra, Element, GeneratorDecl, Monomial, Presentation, TensorElement};
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::poly::PoincarePoly;

/// Size bound on the tuple lattice `Π (k_i + 1)`.
pub const TUPLE_LATTICE_BOUND: u64 = 10_000;

/// `(j_1, …, j_r)`, standing for the ideal `(e_1^{p^{j_1}}, …, e_r^{p^{j_r}})`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JTuple(pub Vec<u32>);

impl JTuple {
    pub fn zero(r: usize) -> Self {
        JTuple(vec![0; r])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Componentwise `self ≤ other`.
    pub fn dominated_by(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Checks the tuple against a Borel-form bialgebra, returning its exponents `k_i`.
    pub fn validate(&self, b: &Bialgebra) -> Result<Vec<u32>> {
        let ks = borel_exponents(b)?;
        if ks.len() != self.0.len() {
            return Err(Error::InvalidJTuple(format!(
                "{self} has {} entries, the bialgebra has {} generators",
                self.0.len(),
                ks.len()
            )));
        }
        for (i, (&j, &k)) in self.0.iter().zip(&ks).enumerate() {
            if j > k {
                return Err(Error::InvalidJTuple(format!(
                    "{self}: entry {} is {j}, but {} has truncation {}^{k}",
                    i + 1,
                    b.presentation().generators()[i].name,
                    b.prime()
                )));
            }
        }
        Ok(ks)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(JTuple(Vec::new()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidJTuple(format!("`{}` is not a nonnegative integer", t.trim())))
            })
            .collect::<Result<Vec<_>>>()
            .map(JTuple)
    }
}

impl fmt::Display for JTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, j) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{j}")?;
        }
        f.write_str(")")
    }
}

fn borel_exponents(b: &Bialgebra) -> Result<Vec<u32>> {
    b.borel_exponents().ok_or_else(|| {
        Error::NotBorelForm(String::from(
            "explicit rewrite rules present or a truncation is not a power of p",
        ))
    })
}

/// Ideal spanned by the normal monomials divisible by one of `generators`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ngens: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(pres: &Presentation, generators: Vec<Monomial>) -> Result<Self> {
        if generators.iter().any(|g| g.len() != pres.ngens()) {
            return Err(Error::PresentationMismatch("ideal generator of the wrong shape".into()));
        }
        Ok(MonomialIdeal {
            ngens: pres.ngens(),
            generators,
        })
    }

    pub fn from_tuple(b: &Bialgebra, j: &JTuple) -> Result<Self> {
        j.validate(b)?;
        let p = b.prime();
        let n = b.presentation().ngens();
        let generators = j
            .0
            .iter()
            .enumerate()
            .map(|(i, &ji)| Monomial::generator(n, i, p.get().pow(ji)))
            .collect();
        Ok(MonomialIdeal { ngens: n, generators })
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn contains(&self, x: &Element) -> Result<bool> {
        if let Some(m) = x.keys().find(|m| m.len() != self.ngens) {
            return Err(Error::PresentationMismatch(format!(
                "monomial with {} exponents tested against an ideal in {} generators",
                m.len(),
                self.ngens
            )));
        }
        Ok(x.keys().all(|m| self.contains_monomial(m)))
    }

    /// Termwise membership in `B⊗J + J⊗B`.
    pub fn contains_tensor(&self, t: &TensorElement) -> bool {
        t.keys()
            .all(|(a, b)| self.contains_monomial(a) || self.contains_monomial(b))
    }
}

pub fn ideal_member(x: &Element, j: &JTuple, b: &Bialgebra) -> Result<bool> {
    b.presentation().check_element(x)?;
    MonomialIdeal::from_tuple(b, j)?.contains(x)
}

pub fn is_bi_ideal(j: &JTuple, b: &Bialgebra) -> Result<bool> {
    let ideal = MonomialIdeal::from_tuple(b, j)?;
    Ok(ideal
        .generators()
        .iter()
        .all(|g| ideal.contains_tensor(&b.coproduct_monomial(g))))
}

/// Projection `A → A/J` onto the generators with `j_i > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMap {
    ideal: MonomialIdeal,
    kept: Vec<usize>,
    target: Presentation,
}

impl QuotientMap {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    /// Indices, in the source presentation, of the surviving generators.
    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    /// Image of a normal monomial, or `None` if it lies in the ideal.
    pub fn map_monomial(&self, m: &Monomial) -> Option<Monomial> {
        if self.ideal.contains_monomial(m) {
            return None;
        }
        Some(Monomial::from_exponents(
            self.kept.iter().map(|&i| m.exponent(i)).collect(),
        ))
    }

    pub fn map_element(&self, x: &Element) -> Element {
        x.filter_map_keys(|m| self.map_monomial(m))
    }

    /// Reduces the left factor of an element of `A ⊗ M`.
    pub fn map_left<K: Ord + Clone>(&self, t: &crate::LinComb<(Monomial, K)>) -> crate::LinComb<(Monomial, K)> {
        t.filter_map_keys(|(a, k)| self.map_monomial(a).map(|a| (a, k.clone())))
    }
}

pub fn quotient_bialgebra(b: &Bialgebra, j: &JTuple) -> Result<(Bialgebra, QuotientMap)> {
    j.validate(b)?;
    if !is_bi_ideal(j, b)? {
        return Err(Error::NotBiIdeal(format!("{j}")));
    }
    let p = b.prime();
    let ideal = MonomialIdeal::from_tuple(b, j)?;
    let pres = b.presentation();
    let kept: Vec<usize> = (0..pres.ngens()).filter(|&i| j.0[i] > 0).collect();
    let gens = kept
        .iter()
        .map(|&i| {
            let g = &pres.generators()[i];
            GeneratorDecl::new(&g.name, g.degree, p.get().pow(j.0[i]))
        })
        .collect();
    let target = Presentation::new(p, gens, Vec::new())?;
    let map = QuotientMap { ideal, kept, target };
    let coproducts = map
        .kept
        .iter()
        .map(|&i| {
            b.generator_coproducts()[i].filter_map_keys(|(a, c)| Some((map.map_monomial(a)?, map.map_monomial(c)?)))
        })
        .collect();
    let h = Bialgebra::new(map.target.clone(), coproducts, b.periodic().cloned())?;
    Ok((h, map))
}

/// Every admissible tuple in lexicographic order, and the componentwise-maximal ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleTuples {
    pub tuples: Vec<JTuple>,
    pub maximal: Vec<JTuple>,
}

/// Tuples `J` with `x ∈ J` and `J` a bi-ideal, by enumeration of the whole lattice.
pub fn admissible_tuples_containing(x: &Element, b: &Bialgebra) -> Result<AdmissibleTuples> {
    b.presentation().check_element(x)?;
    let ks = borel_exponents(b)?;
    let size: u64 = ks.iter().map(|&k| k as u64 + 1).product();
    if size > TUPLE_LATTICE_BOUND {
        return Err(Error::BoundExceeded {
            what: format!("tuple lattice of size {size}"),
            bound: TUPLE_LATTICE_BOUND,
        });
    }
    let mut tuples = Vec::new();
    let mut cur = vec![0u32; ks.len()];
    loop {
        let j = JTuple(cur.clone());
        if ideal_member(x, &j, b)? && is_bi_ideal(&j, b)? {
            tuples.push(j);
        }
        // Odometer with the last entry fastest gives lexicographic order.
        let mut i = ks.len();
        loop {
            if i == 0 {
                let maximal = maximal_elements(&tuples);
                return Ok(AdmissibleTuples { tuples, maximal });
            }
            i -= 1;
            if cur[i] < ks[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
    }
}

pub fn maximal_elements(tuples: &[JTuple]) -> Vec<JTuple> {
    tuples
        .iter()
        .filter(|t| !tuples.iter().any(|u| *t != u && t.dominated_by(u)))
        .cloned()
        .collect()
}

/// `Π (t^{d_i p^{j_i}} - 1)/(t^{d_i} - 1)`.
pub fn poincare_fpoin(j: &JTuple, degrees: &[u32], p: Prime) -> Result<PoincarePoly> {
    if j.len() != degrees.len() {
        return Err(Error::InvalidJTuple(format!(
            "{j} has {} entries but {} degrees were given",
            j.len(),
            degrees.len()
        )));
    }
    Ok(j.0.iter().zip(degrees).fold(PoincarePoly::one(), |acc, (&ji, &d)| {
        acc.mul(&PoincarePoly::geometric(d, p.get().pow(ji)))
    }))
}

/// Vishik's `J(q)` for a quadratic form of dimension `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadricJSet {
    pub n: u32,
    pub members: BTreeSet<u32>,
}

impl QuadricJSet {
    pub fn new(n: u32, members: impl IntoIterator<Item = u32>) -> Result<Self> {
        let s = QuadricJSet {
            n,
            members: members.into_iter().collect(),
        };
        s.validate()?;
        Ok(s)
    }

    pub fn m(&self) -> u32 {
        quadric_m(self.n)
    }

    pub fn is_even(&self) -> bool {
        self.n.is_multiple_of(2)
    }

    /// `{1..m}` for odd `n`, `{0..m}` for even `n`.
    pub fn range(&self) -> BTreeSet<u32> {
        let lo = if self.is_even() { 0 } else { 1 };
        (lo..=self.m()).collect()
    }

    pub fn contains(&self, k: u32) -> bool {
        self.members.contains(&k)
    }

    fn validate(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::InvalidJSet(format!("form dimension {} is below 3", self.n)));
        }
        let range = self.range();
        if let Some(bad) = self.members.iter().find(|k| !range.contains(k)) {
            return Err(Error::InvalidJSet(format!(
                "{bad} is outside {}..={} for n = {}",
                range.first().unwrap(),
                self.m(),
                self.n
            )));
        }
        Ok(())
    }
}

/// `m` with `n = 2m + 1` or `n = 2m + 2`.
pub fn quadric_m(n: u32) -> u32 {
    (n - 1) / 2
}

/// Number of surviving generators `r = ⌊(m+1)/2⌋` of `SO_n` mod 2 in Borel form.
pub fn quadric_rank(n: u32) -> usize {
    (quadric_m(n) as usize).div_ceil(2)
}

fn jprime_from_tuple(t: &JTuple, n: u32) -> Result<BTreeSet<u32>> {
    let m = quadric_m(n);
    let r = quadric_rank(n);
    if t.len() != r {
        return Err(Error::InvalidJTuple(format!(
            "{t} has {} entries, n = {n} needs {r}",
            t.len()
        )));
    }
    let mut out = BTreeSet::new();
    for (i, &j) in t.0.iter().enumerate() {
        let d = 2 * i as u32 + 1;
        for l in 0..j {
            let v = 1u64 << l;
            let v = v.saturating_mul(d as u64);
            if v > m as u64 {
                return Err(Error::InvalidJTuple(format!(
                    "{t}: 2^{l}·{d} = {v} exceeds m = {m} for n = {n}"
                )));
            }
            out.insert(v as u32);
        }
    }
    Ok(out)
}

pub fn jset_from_tuple(t: &JTuple, n: u32) -> Result<QuadricJSet> {
    if n < 3 {
        return Err(Error::InvalidJSet(format!("form dimension {n} is below 3")));
    }
    let jp = jprime_from_tuple(t, n)?;
    let lo = if n.is_multiple_of(2) { 0 } else { 1 };
    QuadricJSet::new(n, (lo..=quadric_m(n)).filter(|k| !jp.contains(k)))
}

pub fn tuple_from_jset(s: &QuadricJSet) -> Result<JTuple> {
    s.validate()?;
    let jp: BTreeSet<u32> = s.range().into_iter().filter(|k| !s.contains(*k)).collect();
    if jp.contains(&0) {
        return Err(Error::InvalidJSet(String::from("0 must belong to J(q) for even n")));
    }
    let r = quadric_rank(s.n);
    let mut t = Vec::with_capacity(r);
    for i in 0..r {
        let d = 2 * i as u32 + 1;
        let mut j = 0;
        while jp.contains(&(d << j)) {
            j += 1;
        }
        t.push(j);
    }
    let t = JTuple(t);
    if jprime_from_tuple(&t, s.n)? != jp {
        return Err(Error::InvalidJSet(format!(
            "complement of {:?} is not of the form {{2^l·d_i : l < j_i}}",
            s.members
        )));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Bialgebra;
    use alloc::string::ToString;

    fn e8_mod2() -> Bialgebra {
        let p = Prime::new(2).unwrap();
        let pres = Presentation::new(
            p,
            vec![
                GeneratorDecl::new("e3", 3, 8),
                GeneratorDecl::new("e5", 5, 4),
                GeneratorDecl::new("e9", 9, 2),
                GeneratorDecl::new("e15", 15, 2),
            ],
            Vec::new(),
        )
        .unwrap();
        Bialgebra::from_strings(
            pres,
            &[("e15", "e15|1 + e9|e3^2 + e5|e5^2 + e3|e3^4 + 1|e15")],
            None,
        )
        .unwrap()
    }

    #[test]
    fn membership_examples() {
        let b = e8_mod2();
        let pr = b.presentation();
        let t = JTuple(vec![1, 1, 1, 0]);
        let el = |s: &str| pr.parse_element(s).unwrap();
        assert!(ideal_member(&el("e15"), &t, &b).unwrap());
        assert!(!ideal_member(&el("e3"), &t, &b).unwrap());
        assert!(ideal_member(&el("e3^2"), &t, &b).unwrap());
        let t = JTuple(vec![2, 1, 0, 0]);
        assert!(!ideal_member(&el("e3^2"), &t, &b).unwrap());
        assert!(ideal_member(&el("e3^4"), &t, &b).unwrap());
        assert!(ideal_member(&el("e9"), &t, &b).unwrap());
        assert!(!ideal_member(&el("e9 + e3"), &t, &b).unwrap());
    }

    #[test]
    fn bi_ideal_examples() {
        let b = e8_mod2();
        assert!(!is_bi_ideal(&JTuple(vec![2, 1, 1, 0]), &b).unwrap());
        assert!(is_bi_ideal(&JTuple(vec![1, 1, 1, 0]), &b).unwrap());
        assert!(matches!(
            quotient_bialgebra(&b, &JTuple(vec![2, 1, 1, 0])),
            Err(Error::NotBiIdeal(_))
        ));
        assert!(matches!(
            is_bi_ideal(&JTuple(vec![4, 0, 0, 0]), &b),
            Err(Error::InvalidJTuple(_))
        ));
    }

    #[test]
    fn e15_maxima() {
        let b = e8_mod2();
        let x = b.presentation().parse_element("e15").unwrap();
        let adm = admissible_tuples_containing(&x, &b).unwrap();
        assert_eq!(adm.maximal, vec![JTuple(vec![1, 1, 1, 0]), JTuple(vec![2, 1, 0, 0])]);
        let mut sorted = adm.tuples.clone();
        sorted.sort();
        assert_eq!(sorted, adm.tuples);
    }

    #[test]
    fn quotient_ranks() {
        let b = e8_mod2();
        let (h, map) = quotient_bialgebra(&b, &JTuple(vec![1, 1, 1, 0])).unwrap();
        assert_eq!(h.dim(), 8);
        assert!(h.verify().passed());
        assert_eq!(map.kept(), &[0, 1, 2]);
        let (h0, _) = quotient_bialgebra(&b, &JTuple(vec![0, 0, 0, 0])).unwrap();
        assert_eq!(h0.dim(), 1);
        let (h1, _) = quotient_bialgebra(&b, &JTuple(vec![2, 1, 0, 0])).unwrap();
        assert_eq!(h1.presentation().poincare(), poincare_fpoin(&JTuple(vec![2, 1]), &[3, 5], b.prime()).unwrap());
    }

    #[test]
    fn fpoin_examples() {
        let p3 = Prime::new(3).unwrap();
        let f = poincare_fpoin(&JTuple(vec![1, 1]), &[4, 10], p3).unwrap();
        assert_eq!(f.eval_one(), 9);
        let num = PoincarePoly::geometric(1, 12).mul(&PoincarePoly::geometric(1, 30));
        let den = PoincarePoly::geometric(1, 4).mul(&PoincarePoly::geometric(1, 10));
        assert_eq!(f, num.div_exact(&den).unwrap());
        assert_eq!(poincare_fpoin(&JTuple(vec![0, 0]), &[4, 10], p3).unwrap(), PoincarePoly::one());
        let p2 = Prime::new(2).unwrap();
        let f = poincare_fpoin(&JTuple(vec![1, 1, 1]), &[3, 5, 9], p2).unwrap();
        assert_eq!(f.eval_one(), 8);
    }

    #[test]
    fn jset_examples() {
        let s = jset_from_tuple(&JTuple(vec![0, 0, 0]), 11).unwrap();
        assert_eq!(s.members, (1..=5).collect());
        let s = jset_from_tuple(&JTuple(vec![1, 0, 1]), 11).unwrap();
        assert_eq!(s.members, [2, 3, 4].into_iter().collect());
        assert_eq!(tuple_from_jset(&s).unwrap(), JTuple(vec![1, 0, 1]));
        let s = jset_from_tuple(&JTuple(vec![1, 1, 0]), 12).unwrap();
        assert_eq!(s.members, [0, 2, 4, 5].into_iter().collect());
        assert!(jset_from_tuple(&JTuple(vec![4, 0, 0]), 11).is_err());
        // {1..5} minus {2}: 2 without 1 is not of the required shape.
        assert!(tuple_from_jset(&QuadricJSet::new(11, [1, 3, 4, 5]).unwrap()).is_err());
    }

    #[test]
    fn tuple_parse() {
        assert_eq!(JTuple::parse("1,1,0").unwrap(), JTuple(vec![1, 1, 0]));
        assert_eq!(JTuple::parse("(2, 1)").unwrap(), JTuple(vec![2, 1]));
        assert!(JTuple::parse("1,x").is_err());
        assert_eq!(JTuple(vec![1, 0]).to_string(), "(1,0)");
    }
}
