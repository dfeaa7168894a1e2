//! Finite F_p-linear combinations over an ordered key set.

use alloc::collections::btree_map::{self, BTreeMap};

use crate::field::{Prime, Scalar};

/// A sparse vector `Σ c_k · k` with nonzero coefficients in F_p.
///
/// Keys are monomials, pairs of monomials, basis indices and so on; the
/// `BTreeMap` gives every iteration a deterministic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    p: Prime,
    terms: BTreeMap<K, u32>,
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero(p: Prime) -> Self {
        LinComb {
            p,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(p: Prime, key: K, coeff: u32) -> Self {
        let mut out = Self::zero(p);
        out.add_term(key, coeff);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (K, u32)>>(p: Prime, terms: I) -> Self {
        let mut out = Self::zero(p);
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> u32 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn scalar_coeff(&self, key: &K) -> Scalar {
        Scalar::new(self.coeff(key) as i64, self.p)
    }

    pub fn add_term(&mut self, key: K, coeff: u32) {
        let c = coeff % self.p.get();
        if c == 0 {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                let s = self.p.add(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, coeff: u32) {
        for (k, &c) in &other.terms {
            self.add_term(k.clone(), self.p.mul(c, coeff));
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.add_scaled(other, 1);
    }

    pub fn sub_assign(&mut self, other: &Self) {
        self.add_scaled(other, self.p.get() - 1);
    }

    pub fn scaled(&self, coeff: u32) -> Self {
        let mut out = Self::zero(self.p);
        out.add_scaled(self, coeff);
        out
    }

    pub fn neg(&self) -> Self {
        self.scaled(self.p.get() - 1)
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&K, u32)> + '_ {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> + '_ {
        self.terms.keys()
    }

    /// Linear extension of `f` on keys; `f` may itself return a combination.
    pub fn flat_map<L: Ord + Clone, F>(&self, mut f: F) -> LinComb<L>
    where
        F: FnMut(&K) -> LinComb<L>,
    {
        let mut out = LinComb::zero(self.p);
        for (k, &c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Re-key every term; colliding images are summed, `None` drops the term.
    pub fn filter_map_keys<L: Ord + Clone, F>(&self, mut f: F) -> LinComb<L>
    where
        F: FnMut(&K) -> Option<L>,
    {
        let mut out = LinComb::zero(self.p);
        for (k, &c) in &self.terms {
            if let Some(l) = f(k) {
                out.add_term(l, c);
            }
        }
        out
    }

    pub fn retain<F: FnMut(&K) -> bool>(&mut self, mut f: F) {
        self.terms.retain(|k, _| f(k));
    }
}
