use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::lincomb::LinComb;
use crate::poly::PoincarePoly;

/// Element of a presented algebra: normal-form monomials with coefficients.
pub type Element = LinComb<Monomial>;

/// Hard cap on the number of normal monomials of a presentation.
pub const MAX_BASIS: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorDecl {
    pub name: String,
    pub degree: u32,
    pub truncation: u32,
}

impl GeneratorDecl {
    pub fn new(name: &str, degree: u32, truncation: u32) -> Self {
        GeneratorDecl {
            name: name.to_string(),
            degree,
            truncation,
        }
    }
}

/// `source → coeff · monomial`, or `source → 0` when `target` is `None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RewriteRule {
    pub source: Monomial,
    pub target: Option<(u32, Monomial)>,
}

/// A finitely presented graded commutative algebra over F_p.
///
/// Every generator `g` with truncation `N` satisfies `g^N → 0` unless an
/// explicit rule has source exactly `g^N`.
#[derive(Debug, Clone)]
pub struct Presentation {
    prime: Prime,
    generators: Vec<GeneratorDecl>,
    rules: Vec<RewriteRule>,
    effective: Vec<RewriteRule>,
    basis: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.prime == other.prime
            && self.generators == other.generators
            && self.rules == other.rules
    }
}

impl Eq for Presentation {}

impl Presentation {
    pub fn new(prime: Prime, generators: Vec<GeneratorDecl>, rules: Vec<RewriteRule>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            let bad = |reason: &str| Error::InvalidGenerator {
                name: g.name.clone(),
                reason: reason.to_string(),
            };
            if g.name.is_empty() || !g.name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(bad("name must be a nonempty identifier"));
            }
            if g.name.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                return Err(bad("name must not start with a digit"));
            }
            if g.degree < 1 {
                return Err(bad("degree must be at least 1"));
            }
            if g.truncation < 2 {
                return Err(bad("truncation must be at least 2"));
            }
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        let n = generators.len();
        let degrees: Vec<u32> = generators.iter().map(|g| g.degree).collect();
        let mut rules = rules;
        for (index, rule) in rules.iter_mut().enumerate() {
            let bad = |reason: String| Error::InvalidRule { index, reason };
            if rule.source.len() != n {
                return Err(bad(format!("source has {} exponents, expected {n}", rule.source.len())));
            }
            if rule.source.is_one() {
                return Err(bad("source must not be the unit monomial".into()));
            }
            if let Some((c, t)) = &rule.target {
                if t.len() != n {
                    return Err(bad(format!("target has {} exponents, expected {n}", t.len())));
                }
                if c % prime.get() == 0 {
                    rule.target = None;
                    continue;
                }
                let (ds, dt) = (rule.source.total_degree(&degrees), t.total_degree(&degrees));
                if ds != dt {
                    return Err(bad(format!("degree mismatch: source degree {ds}, target degree {dt}")));
                }
                if t >= &rule.source {
                    return Err(Error::NonTerminating { index });
                }
            }
        }
        for r in rules.iter_mut() {
            if let Some((c, _)) = &mut r.target {
                *c %= prime.get();
            }
        }
        let mut effective = rules.clone();
        for (i, g) in generators.iter().enumerate() {
            let src = Monomial::generator(n, i, g.truncation);
            if !rules.iter().any(|r| r.source == src) {
                effective.push(RewriteRule {
                    source: src,
                    target: None,
                });
            }
        }
        let mut pres = Presentation {
            prime,
            generators,
            rules,
            effective,
            basis: Vec::new(),
            index: BTreeMap::new(),
        };
        pres.build_basis()?;
        Ok(pres)
    }

    fn build_basis(&mut self) -> Result<()> {
        let n = self.generators.len();
        let mut cur = Monomial::one(n);
        let mut out = Vec::new();
        self.enumerate(0, &mut cur, &mut out)?;
        out.sort_by(|a, b| (self.degree(a), a).cmp(&(self.degree(b), b)));
        self.index = out.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        self.basis = out;
        Ok(())
    }

    fn enumerate(&self, i: usize, cur: &mut Monomial, out: &mut Vec<Monomial>) -> Result<()> {
        if i == self.generators.len() {
            if !self.rules.iter().any(|r| r.source.divides(cur)) {
                if out.len() as u64 >= MAX_BASIS {
                    return Err(Error::BoundExceeded {
                        what: "number of normal monomials".into(),
                        bound: MAX_BASIS,
                    });
                }
                out.push(cur.clone());
            }
            return Ok(());
        }
        for e in 0..self.generators[i].truncation {
            cur.set_exponent(i, e);
            // Prune as soon as a rule source already divides the prefix.
            if e > 0 && self.rules.iter().any(|r| r.source.divides(cur)) {
                break;
            }
            self.enumerate(i + 1, cur, out)?;
        }
        cur.set_exponent(i, 0);
        Ok(())
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn generators(&self) -> &[GeneratorDecl] {
        &self.generators
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    /// Explicit rules, as supplied.
    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    /// Explicit rules followed by the implicit truncation rules.
    pub fn effective_rules(&self) -> &[RewriteRule] {
        &self.effective
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    pub fn generator_index(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn degree(&self, m: &Monomial) -> u32 {
        m.exponents()
            .iter()
            .zip(&self.generators)
            .map(|(e, g)| e * g.degree)
            .sum()
    }

    /// Common degree of all terms, or `None` for zero or inhomogeneous input.
    pub fn element_degree(&self, x: &Element) -> Option<u32> {
        let mut degs = x.keys().map(|m| self.degree(m));
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    /// Normal monomials sorted by degree, then by the monomial order.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_index(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn is_normal(&self, m: &Monomial) -> bool {
        self.index.contains_key(m)
    }

    pub fn poincare(&self) -> PoincarePoly {
        let mut coeffs = Vec::new();
        for m in &self.basis {
            let d = self.degree(m) as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, 0);
            }
            coeffs[d] += 1;
        }
        PoincarePoly::from_coeffs(coeffs)
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.ngens())
    }

    pub fn one(&self) -> Element {
        Element::term(self.prime, self.one_monomial(), 1)
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.prime)
    }

    pub fn generator(&self, i: usize) -> Element {
        self.normalize_monomial(&Monomial::generator(self.ngens(), i, 1))
    }

    pub fn generator_named(&self, name: &str) -> Result<Element> {
        Ok(self.generator(self.generator_index(name)?))
    }

    pub fn normalize_monomial(&self, m: &Monomial) -> Element {
        self.reduce(m, None)
    }

    /// Normal form computed with the effective rules tried in the given order.
    pub fn normalize_with_rule_order(&self, m: &Monomial, order: &[usize]) -> Element {
        self.reduce(m, Some(order))
    }

    fn reduce(&self, m: &Monomial, order: Option<&[usize]>) -> Element {
        let p = self.prime;
        let mut out = Element::zero(p);
        if self.index.contains_key(m) {
            out.add_term(m.clone(), 1);
            return out;
        }
        let mut pending: BTreeMap<Monomial, u32> = BTreeMap::new();
        pending.insert(m.clone(), 1);
        // Targets are smaller than sources in a multiplicative order, so
        // processing the largest pending monomial first visits each key once.
        while let Some((cur, c)) = pending.pop_last() {
            if c == 0 {
                continue;
            }
            if self.index.contains_key(&cur) {
                out.add_term(cur, c);
                continue;
            }
            let rule = match order {
                Some(ord) => ord
                    .iter()
                    .map(|&i| &self.effective[i])
                    .find(|r| r.source.divides(&cur)),
                None => self.effective.iter().find(|r| r.source.divides(&cur)),
            };
            let Some(rule) = rule else {
                out.add_term(cur, c);
                continue;
            };
            if let Some((tc, t)) = &rule.target {
                let next = rule.source.quotient_of(&cur).mul(t);
                let e = pending.entry(next).or_insert(0);
                *e = p.add(*e, p.mul(c, *tc));
            }
        }
        out
    }

    /// Re-normalizes every term; a no-op on normal-form input.
    pub fn normalize(&self, x: &Element) -> Element {
        x.flat_map(|m| self.normalize_monomial(m))
    }

    pub fn check_element(&self, x: &Element) -> Result<()> {
        if x.prime() != self.prime {
            return Err(Error::PresentationMismatch(format!(
                "element over F_{} used with a presentation over F_{}",
                x.prime(),
                self.prime
            )));
        }
        if let Some(m) = x.keys().find(|m| m.len() != self.ngens()) {
            return Err(Error::PresentationMismatch(format!(
                "monomial with {} exponents in a presentation with {} generators",
                m.len(),
                self.ngens()
            )));
        }
        Ok(())
    }

    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Element {
        self.normalize_monomial(&a.mul(b))
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &Element, b: &Element) -> Element {
        let p = self.prime;
        let mut out = Element::zero(p);
        for (ma, ca) in a.iter() {
            for (mb, cb) in b.iter() {
                out.add_scaled(&self.mul_monomials(ma, mb), p.mul(ca, cb));
            }
        }
        out
    }

    pub fn pow(&self, a: &Element, e: u32) -> Element {
        (0..e).fold(self.one(), |acc, _| self.mul_unchecked(&acc, a))
    }

    /// Failing critical pairs: overlapping rule sources whose two one-step
    /// rewrites of the overlap have different normal forms.
    pub fn critical_pair_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, ri) in self.effective.iter().enumerate() {
            for rj in &self.effective[i + 1..] {
                let l = ri.source.lcm(&rj.source);
                if l == ri.source.mul(&rj.source) {
                    continue;
                }
                let a = self.one_step(&l, ri);
                let b = self.one_step(&l, rj);
                if a != b {
                    out.push(format!(
                        "overlap {} reduces to {} and {}",
                        self.fmt_monomial(&l),
                        self.fmt_element(&a),
                        self.fmt_element(&b)
                    ));
                }
            }
        }
        out
    }

    fn one_step(&self, m: &Monomial, rule: &RewriteRule) -> Element {
        match &rule.target {
            None => self.zero(),
            Some((c, t)) => self
                .normalize_monomial(&rule.source.quotient_of(m).mul(t))
                .scaled(*c),
        }
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        let mut s = String::new();
        for (g, &e) in self.generators.iter().zip(m.exponents()) {
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(&g.name);
            if e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    /// Terms in decreasing monomial order with signed coefficients.
    pub fn fmt_element(&self, x: &Element) -> String {
        fmt_terms(
            self.prime,
            x.iter().rev().map(|(m, c)| (self.fmt_monomial(m), c)),
        )
    }

    /// Parses `1`, `g`, `g^k` and `*`-products of these.
    pub fn parse_monomial(&self, s: &str) -> Result<Monomial> {
        let mut m = self.one_monomial();
        let s = s.trim();
        if s == "1" {
            return Ok(m);
        }
        for factor in s.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::UnknownGenerator(factor.to_string()))?,
                ),
                None => (factor, 1),
            };
            let i = self.generator_index(name)?;
            m.set_exponent(i, m.exponent(i) + exp);
        }
        Ok(m)
    }

    /// Parses a signed sum of terms such as `x10 - 2*x6^2*h + 1`; the result
    /// is normalized.
    pub fn parse_element(&self, s: &str) -> Result<Element> {
        let mut out = self.zero();
        for (sign, term) in split_signed_terms(s) {
            let (coeff, mono) = split_coefficient(term);
            let m = self.parse_monomial(mono)?;
            let c = self.prime.reduce(sign * coeff);
            out.add_scaled(&self.normalize_monomial(&m), c);
        }
        Ok(out)
    }
}

pub(crate) fn fmt_terms<I: Iterator<Item = (String, u32)>>(p: Prime, terms: I) -> String {
    let mut s = String::new();
    for (body, c) in terms {
        let v = p.signed(c);
        let (neg, abs) = (v < 0, v.unsigned_abs());
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if abs != 1 {
            let _ = write!(s, "{abs}*");
        }
        s.push_str(&body);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

pub(crate) fn split_signed_terms(s: &str) -> Vec<(i64, &str)> {
    let mut out = Vec::new();
    let mut sign = 1i64;
    let mut start = 0;
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if b == b'+' || b == b'-' {
            let prev = s[start..i].trim();
            if !prev.is_empty() {
                out.push((sign, prev));
            }
            sign = if b == b'-' { -1 } else { 1 };
            start = i + 1;
        }
    }
    let last = s[start..].trim();
    if !last.is_empty() {
        out.push((sign, last));
    }
    out
}

pub(crate) fn split_coefficient(term: &str) -> (i64, &str) {
    let term = term.trim();
    let digits = term.chars().take_while(|c| c.is_ascii_digit()).count();
    if digits == 0 {
        return (1, term);
    }
    let rest = term[digits..].trim_start();
    if rest.is_empty() {
        return (term[..digits].parse().unwrap_or(1), "1");
    }
    match rest.strip_prefix('*') {
        Some(r) => (term[..digits].parse().unwrap_or(1), r.trim()),
        None => (1, term),
    }
}
