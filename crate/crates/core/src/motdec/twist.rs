use alloc::vec::Vec;

use crate::error::Result;
use crate::field::Prime;
use crate::jinv::{poincare_fpoin, JTuple};
use crate::poly::PoincarePoly;

/// Multiset of Tate twists, stored as its generating polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistMultiset {
    pub poly: PoincarePoly,
}

impl TwistMultiset {
    pub fn len(&self) -> u64 {
        self.poly.eval_one()
    }

    pub fn is_empty(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn multiplicity(&self, twist: usize) -> u64 {
        self.poly.coeff(twist)
    }

    /// Explicit elements in increasing order; only sensible for small sets.
    pub fn elements(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (d, &c) in self.poly.coeffs().iter().enumerate() {
            out.extend(core::iter::repeat_n(d as u32, c as usize));
        }
        out
    }
}

/// `I` with generating polynomial `P_total / P_H`.
pub fn twist_multiset(total: &PoincarePoly, h: &PoincarePoly) -> Result<TwistMultiset> {
    Ok(TwistMultiset {
        poly: total.div_exact(h)?,
    })
}

/// [`twist_multiset`] with `P_H` given by a tuple, generator degrees and prime.
pub fn twist_multiset_for_tuple(total: &PoincarePoly, j: &JTuple, degrees: &[u32], p: Prime) -> Result<TwistMultiset> {
    twist_multiset(total, &poincare_fpoin(j, degrees, p)?)
}
