use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// The residue characteristic `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::InvalidInput(format!("{p} is not a prime")))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn divides(self, n: u64) -> bool {
        n.is_multiple_of(self.0)
    }

    /// `n` with every factor of `p` removed. `0` maps to `0`.
    pub fn strip(self, mut n: u64) -> u64 {
        if n == 0 {
            return 0;
        }
        while n.is_multiple_of(self.0) {
            n /= self.0;
        }
        n
    }

    /// Is `n` one of `1, p, p^2, ...`?
    pub fn is_power(self, n: u64) -> bool {
        n != 0 && self.strip(n) == 1
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
