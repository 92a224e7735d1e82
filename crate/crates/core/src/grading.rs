//! The ℤ₂-graded index set of gl(m|n).
//!
//! Indices are 1-based: `1..=m` are even, `m+1..=m+n` are odd.

use std::fmt;
use std::ops::{Add, Mul};

use num::{BigRational, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Rational;

/// Largest supported `m + n`; index bitmasks and byte-sized indices rely on it.
pub const MAX_DIM: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_odd(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl Add for Parity {
    type Output = Parity;
    // ℤ₂ addition is xor.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_odd(self.is_odd() ^ rhs.is_odd())
    }
}

impl Mul for Parity {
    type Output = Parity;
    fn mul(self, rhs: Parity) -> Parity {
        Parity::from_odd(self.is_odd() && rhs.is_odd())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_odd() { "1̄" } else { "0̄" })
    }
}

/// The ambient superalgebra gl(m|n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gl {
    pub m: usize,
    pub n: usize,
}

impl Gl {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m + n == 0 || m + n > MAX_DIM {
            return Err(Error::Usage(format!(
                "gl({m}|{n}) needs 1 <= m+n <= {MAX_DIM}"
            )));
        }
        Ok(Gl { m, n })
    }

    /// Total dimension `m + n` of the vector module.
    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    /// Parity of index `a` as a boolean (`true` = odd).
    #[inline]
    pub fn odd(&self, a: usize) -> bool {
        a > self.m
    }

    pub fn parity(&self, a: usize) -> Parity {
        Parity::from_odd(self.odd(a))
    }

    /// Validates a 1-based index.
    pub fn check(&self, a: usize) -> Result<usize> {
        if a >= 1 && a <= self.dim() {
            Ok(a)
        } else {
            Err(Error::IndexOutOfRange { index: a, dim: self.dim() })
        }
    }

    pub fn indices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.dim()
    }

    /// Number of odd matrix entries, `2mn`.
    pub fn odd_entries(&self) -> usize {
        2 * self.m * self.n
    }
}

impl fmt::Display for Gl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gl({}|{})", self.m, self.n)
    }
}

/// A weight `Σ λ_a ε_a`, stored by its coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    pub coords: Vec<Rational>,
}

impl Weight {
    pub fn new(gl: &Gl, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != gl.dim() {
            return Err(Error::Usage(format!(
                "weight needs {} coordinates, got {}",
                gl.dim(),
                coords.len()
            )));
        }
        Ok(Weight { coords })
    }

    /// The invariant form `(ε_a, ε_b) = (−1)^{[a]} δ_ab`.
    pub fn form(&self, other: &Weight, gl: &Gl) -> Rational {
        let mut acc = BigRational::zero();
        for a in gl.indices() {
            let term = &self.coords[a - 1] * &other.coords[a - 1];
            if gl.odd(a) {
                acc -= term;
            } else {
                acc += term;
            }
        }
        acc
    }

    /// Dominance for the distinguished Borel: each of the even and odd
    /// coordinate runs is weakly decreasing and consecutive differences are
    /// integers.
    pub fn is_dominant(&self, gl: &Gl) -> bool {
        let run_ok = |r: std::ops::Range<usize>| {
            r.clone().skip(1).all(|i| {
                let d = &self.coords[i - 1] - &self.coords[i];
                d.is_integer() && d >= BigRational::zero()
            })
        };
        run_ok(0..gl.m) && run_ok(gl.m..gl.dim())
    }
}
