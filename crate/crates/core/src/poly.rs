//! Univariate polynomials: integer Poincaré polynomials and polynomials over F_p.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::error::{Error, Result};
use crate::field::Prime;

/// A polynomial in `t` with nonnegative integer coefficients, indexed by degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PoincarePoly {
    coeffs: Vec<u64>,
}

impl PoincarePoly {
    pub fn zero() -> Self {
        PoincarePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PoincarePoly { coeffs: vec![1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PoincarePoly { coeffs }
    }

    /// `1 + t^step + t^{2 step} + ... + t^{(count-1) step}`.
    pub fn geometric(step: u32, count: u32) -> Self {
        let len = step as usize * count.saturating_sub(1) as usize + 1;
        let mut coeffs = vec![0; len];
        for i in 0..count as usize {
            coeffs[i * step as usize] = 1;
        }
        Self::from_coeffs(coeffs)
    }

    /// `Π (t^{d_i} - 1)/(t - 1)`: the Weyl-group length generating function
    /// for fundamental degrees `d_i`.
    pub fn from_fundamental_degrees(degrees: &[u32]) -> Self {
        degrees
            .iter()
            .fold(Self::one(), |acc, &d| acc.mul(&Self::geometric(1, d)))
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> u64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `t = 1`, the total rank.
    pub fn eval_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// Exact quotient over the integers; the result must have nonnegative
    /// coefficients.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let d = divisor
            .degree()
            .ok_or_else(|| Error::NonDivisible("division by zero polynomial".into()))?;
        let lead = divisor.coeffs[d] as i128;
        let mut rem: Vec<i128> = self.coeffs.iter().map(|&c| c as i128).collect();
        if rem.len() < d + 1 {
            return if self.is_zero() {
                Ok(Self::zero())
            } else {
                Err(Error::NonDivisible(alloc::format!("{self} by {divisor}")))
            };
        }
        let mut quot = vec![0i128; rem.len() - d];
        for i in (0..quot.len()).rev() {
            let top = rem[i + d];
            if top % lead != 0 {
                return Err(Error::NonDivisible(alloc::format!("{self} by {divisor}")));
            }
            let q = top / lead;
            quot[i] = q;
            for (j, &c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= q * c as i128;
            }
        }
        if rem.iter().any(|&r| r != 0) || quot.iter().any(|&q| q < 0) {
            return Err(Error::NonDivisible(alloc::format!("{self} by {divisor}")));
        }
        Ok(Self::from_coeffs(quot.into_iter().map(|q| q as u64).collect()))
    }
}

impl fmt::Display for PoincarePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (d, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("t")?,
                (1, c) => write!(f, "{c}t")?,
                (d, 1) => write!(f, "t^{d}")?,
                (d, c) => write!(f, "{c}t^{d}")?,
            }
        }
        Ok(())
    }
}

/// A polynomial in one variable over F_p, coefficients from degree 0 upward.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    p: Prime,
    coeffs: Vec<u32>,
}

impl UniPoly {
    pub fn new(p: Prime, coeffs: Vec<u32>) -> Self {
        let mut out = UniPoly {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p.get()).collect(),
        };
        out.trim();
        out
    }

    pub fn from_signed(p: Prime, coeffs: &[i64]) -> Self {
        Self::new(p, coeffs.iter().map(|&c| p.reduce(c)).collect())
    }

    pub fn constant(p: Prime, c: u32) -> Self {
        Self::new(p, vec![c])
    }

    /// `y - root`.
    pub fn linear(p: Prime, root: u32) -> Self {
        Self::new(p, vec![p.neg(root % p.get()), 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.p.inv(self.leading());
        Self::new(self.p, self.coeffs.iter().map(|&c| self.p.mul(c, inv)).collect())
    }

    pub fn eval(&self, x: u32) -> u32 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.p.add(self.p.mul(acc, x), c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(self.p, Vec::new());
        }
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = self.p.add(out[i + j], self.p.mul(a, b));
            }
        }
        Self::new(self.p, out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(self.p, 1), |acc, _| acc.mul(self))
    }

    /// Euclidean division by a nonzero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by zero polynomial");
        let inv = self.p.inv(divisor.leading());
        let mut rem = self.coeffs.clone();
        if rem.len() < d + 1 {
            return (Self::new(self.p, Vec::new()), self.clone());
        }
        let mut quot = vec![0u32; rem.len() - d];
        for i in (0..quot.len()).rev() {
            let q = self.p.mul(rem[i + d], inv);
            quot[i] = q;
            if q == 0 {
                continue;
            }
            for (j, &c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = self.p.sub(rem[i + j], self.p.mul(q, c));
            }
        }
        rem.truncate(d);
        (Self::new(self.p, quot), Self::new(self.p, rem))
    }

    pub fn roots(&self) -> Vec<u32> {
        (0..self.p.get()).filter(|&x| self.eval(x) == 0).collect()
    }

    pub fn to_string_in(&self, var: &str) -> String {
        let mut s = String::new();
        if self.is_zero() {
            s.push('0');
            return s;
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                s.push_str(" + ");
            }
            first = false;
            let _ = match (d, c) {
                (0, c) => write!(s, "{c}"),
                (1, 1) => write!(s, "{var}"),
                (1, c) => write!(s, "{c}*{var}"),
                (d, 1) => write!(s, "{var}^{d}"),
                (d, c) => write!(s, "{c}*{var}^{d}"),
            };
        }
        s
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("y"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn exact_division() {
        // (1+t)(1+t+...+t^5) / (1+t^3) = (1+t)(1+t+t^2)
        let total = PoincarePoly::from_fundamental_degrees(&[2, 6]);
        let h = PoincarePoly::geometric(3, 2);
        let q = total.div_exact(&h).unwrap();
        assert_eq!(q.coeffs(), &[1, 2, 2, 1]);
        assert!(h.div_exact(&total).is_err());
        assert!(total.div_exact(&PoincarePoly::geometric(4, 2)).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(PoincarePoly::from_coeffs(alloc::vec![1, 2, 0, 1]).to_string(), "1 + 2t + t^3");
        let p = Prime::new(3).unwrap();
        assert_eq!(UniPoly::from_signed(p, &[0, -1, 0, 1]).to_string(), "y^3 + 2*y");
    }

    #[test]
    fn div_rem_reconstructs() {
        let p = Prime::new(5).unwrap();
        let f = UniPoly::from_signed(p, &[3, 0, 2, 1, 4]);
        let g = UniPoly::from_signed(p, &[1, 2, 3]);
        let (q, r) = f.div_rem(&g);
        let mut back = q.mul(&g).coeffs().to_vec();
        back.resize(5, 0);
        for (i, c) in r.coeffs().iter().enumerate() {
            back[i] = p.add(back[i], *c);
        }
        assert_eq!(UniPoly::new(p, back), f);
    }
}
