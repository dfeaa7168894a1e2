use alloc::string::String;

use super::monomial::Monomial;
use super::presentation::{fmt_terms, split_coefficient, split_signed_terms, Element, Presentation};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;

/// Element of `L ⊗ R` on the basis of pairs of normal monomials.
pub type TensorElement = LinComb<(Monomial, Monomial)>;

/// Element of `A ⊗ B ⊗ C`, used for coassociativity checks.
pub type TripleTensor = LinComb<(Monomial, Monomial, Monomial)>;

pub fn tensor_one(left: &Presentation, right: &Presentation) -> TensorElement {
    TensorElement::term(left.prime(), (left.one_monomial(), right.one_monomial()), 1)
}

pub fn tensor_of(left: &Element, right: &Element) -> TensorElement {
    let p = left.prime();
    let mut out = TensorElement::zero(p);
    for (a, ca) in left.iter() {
        for (b, cb) in right.iter() {
            out.add_term((a.clone(), b.clone()), p.mul(ca, cb));
        }
    }
    out
}

/// Product in `L ⊗ R`, normalizing each side in its own presentation.
pub fn tensor_mul(
    left: &Presentation,
    right: &Presentation,
    a: &TensorElement,
    b: &TensorElement,
) -> TensorElement {
    let p = left.prime();
    let mut out = TensorElement::zero(p);
    for ((a1, a2), ca) in a.iter() {
        for ((b1, b2), cb) in b.iter() {
            let l = left.mul_monomials(a1, b1);
            if l.is_zero() {
                continue;
            }
            let r = right.mul_monomials(a2, b2);
            let c = p.mul(ca, cb);
            for (m, cm) in l.iter() {
                for (n, cn) in r.iter() {
                    out.add_term((m.clone(), n.clone()), p.mul(c, p.mul(cm, cn)));
                }
            }
        }
    }
    out
}

pub fn normalize_tensor(left: &Presentation, right: &Presentation, t: &TensorElement) -> TensorElement {
    let p = left.prime();
    let mut out = TensorElement::zero(p);
    for ((a, b), c) in t.iter() {
        let l = left.normalize_monomial(a);
        let r = right.normalize_monomial(b);
        for (m, cm) in l.iter() {
            for (n, cn) in r.iter() {
                out.add_term((m.clone(), n.clone()), p.mul(c, p.mul(cm, cn)));
            }
        }
    }
    out
}

pub fn check_tensor(left: &Presentation, right: &Presentation, t: &TensorElement) -> Result<()> {
    if t.prime() != left.prime() || t.prime() != right.prime() {
        return Err(Error::PresentationMismatch("tensor over a different prime".into()));
    }
    for (a, b) in t.keys() {
        if a.len() != left.ngens() || b.len() != right.ngens() {
            return Err(Error::PresentationMismatch(
                "tensor term with the wrong number of exponents".into(),
            ));
        }
    }
    Ok(())
}

pub fn fmt_tensor(left: &Presentation, right: &Presentation, t: &TensorElement) -> String {
    fmt_terms(
        left.prime(),
        t.iter().rev().map(|((a, b), c)| {
            let mut s = left.fmt_monomial(a);
            s.push('⊗');
            s.push_str(&right.fmt_monomial(b));
            (s, c)
        }),
    )
}

/// Parses sums like `x|1 + 1|x - x|x`, where `|` separates the tensor factors.
pub fn parse_tensor(left: &Presentation, right: &Presentation, s: &str) -> Result<TensorElement> {
    let p = left.prime();
    let mut out = TensorElement::zero(p);
    for (sign, term) in split_signed_terms(s) {
        let (coeff, body) = split_coefficient(term);
        let (l, r) = body
            .split_once('|')
            .ok_or_else(|| Error::UnknownGenerator(String::from(body)))?;
        let t = tensor_of(
            &left.normalize_monomial(&left.parse_monomial(l)?),
            &right.normalize_monomial(&right.parse_monomial(r)?),
        );
        out.add_scaled(&t, p.reduce(sign * coeff));
    }
    Ok(out)
}

/// `(ε ⊗ id)` applied to a tensor whose left factor lives in a connected algebra.
pub fn counit_left(t: &TensorElement) -> LinComb<Monomial> {
    t.filter_map_keys(|(a, b)| a.is_one().then(|| b.clone()))
}

pub fn counit_right(t: &TensorElement) -> LinComb<Monomial> {
    t.filter_map_keys(|(a, b)| b.is_one().then(|| a.clone()))
}
