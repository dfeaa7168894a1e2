//! Arithmetic in the prime field F_p for the small primes this crate supports.

use core::fmt;

use crate::error::{Error, Result};

/// Largest supported characteristic.
pub const MAX_PRIME: u32 = 13;

/// A validated prime `2 <= p <= 13`; carries all field operations on residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u32) -> Result<Self> {
        if (2..=MAX_PRIME).contains(&p) && (2..p).all(|d| !p.is_multiple_of(d)) {
            Ok(Prime(p))
        } else {
            Err(Error::UnsupportedPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.0
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.0 - b) % self.0
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        (self.0 - a) % self.0
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        (a * b) % self.0
    }

    pub fn pow(self, a: u32, mut e: u32) -> u32 {
        let mut base = a % self.0;
        let mut acc = 1 % self.0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero residue.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.0), "inverse of zero in F_{}", self.0);
        self.pow(a, self.0 - 2)
    }

    /// Signed representative in `(-p/2, p/2]`, used for display.
    pub fn signed(self, a: u32) -> i64 {
        let a = (a % self.0) as i64;
        let p = self.0 as i64;
        if a > p / 2 {
            a - p
        } else {
            a
        }
    }

    /// Whether `q` is a power `p^k` (k >= 0); returns `k`.
    pub fn log(self, mut q: u32) -> Option<u32> {
        if q == 0 {
            return None;
        }
        let mut k = 0;
        while q.is_multiple_of(self.0) {
            q /= self.0;
            k += 1;
        }
        (q == 1).then_some(k)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Scalar {
    value: u32,
    p: Prime,
}

impl Scalar {
    pub fn new(value: i64, p: Prime) -> Self {
        Scalar {
            value: p.reduce(value),
            p,
        }
    }

    pub fn zero(p: Prime) -> Self {
        Scalar { value: 0, p }
    }

    pub fn one(p: Prime) -> Self {
        Scalar { value: 1, p }
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn prime(self) -> Prime {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
