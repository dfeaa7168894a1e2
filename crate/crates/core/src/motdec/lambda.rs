use alloc::string::String;
use core::fmt;

/// An index of `Λ(Q)`: an integer `0 ≤ i ≤ n-2`, or the extra index `m′`
/// of an even-dimensional form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lambda {
    pub idx: u32,
    pub prime: bool,
}

impl Lambda {
    pub const fn plain(idx: u32) -> Self {
        Lambda { idx, prime: false }
    }

    pub const fn primed(idx: u32) -> Self {
        Lambda { idx, prime: true }
    }

    /// Accepts `7`, `3'` and, given `m`, the literal `m'`.
    pub fn parse(s: &str, m: Option<u32>) -> Option<Self> {
        let s = s.trim();
        if let Some(body) = s.strip_suffix('\'').or_else(|| s.strip_suffix('′')) {
            if body == "m" {
                return m.map(Lambda::primed);
            }
            return body.parse().ok().map(Lambda::primed);
        }
        s.parse().ok().map(Lambda::plain)
    }

    /// DOT node identifier: `n3`, or `n3p` for `3′`.
    pub fn node_id(&self) -> String {
        if self.prime {
            alloc::format!("n{}p", self.idx)
        } else {
            alloc::format!("n{}", self.idx)
        }
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.prime {
            write!(f, "{}'", self.idx)
        } else {
            write!(f, "{}", self.idx)
        }
    }
}
