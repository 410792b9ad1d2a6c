//! Exact dyadic-rational arithmetic and binary decompositions of integers.
//!
//! Everything downstream is phrased in terms of `n = 2^k + r` and exact
//! fractions `num / 2^exp`, so this module is deliberately small and strict:
//! values are kept in canonical form at all times and arithmetic never
//! rounds. Integer quantities use 128-bit signed arithmetic internally; the
//! public contract supports `n` up to [`N_MAX`] (2^62), which keeps overflow
//! unreachable everywhere else in the crate.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported integer argument: 2^62.
///
/// All sums and products formed from `n <= N_MAX` (including the cumulative
/// digit sum `S1(n) ~ n*log2(n)/2`) fit comfortably in 128 bits.
pub const N_MAX: u64 = 1 << 62;

/// Largest supported denominator exponent of a [`Dyadic`].
pub const MAX_EXP: u32 = 120;

fn shl_i128(v: i128, shift: u32) -> Result<i128> {
    if shift == 0 {
        return Ok(v);
    }
    if shift >= 127 {
        return Err(Error::Range(format!(
            "shift by {shift} exceeds 128-bit width"
        )));
    }
    v.checked_mul(1i128 << shift)
        .ok_or_else(|| Error::Range(format!("{v} * 2^{shift} overflows 128-bit width")))
}

/// An exact dyadic rational `num / 2^exp`, always in canonical form:
/// `exp == 0` or `num` is odd. Equality is therefore plain field equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: i128,
    exp: u32,
}

impl Dyadic {
    /// Builds `num / 2^exp`, reducing to canonical form.
    pub fn new(num: i128, exp: u32) -> Result<Self> {
        if num == 0 {
            return Ok(Dyadic { num: 0, exp: 0 });
        }
        // trailing_zeros on two's complement equals the 2-adic valuation,
        // for negative numerators too.
        let strip = exp.min(num.trailing_zeros());
        let reduced = Dyadic {
            num: num >> strip,
            exp: exp - strip,
        };
        if reduced.exp > MAX_EXP {
            return Err(Error::Range(format!(
                "denominator exponent {} exceeds supported maximum {MAX_EXP}",
                reduced.exp
            )));
        }
        Ok(reduced)
    }

    pub fn from_int(v: i128) -> Self {
        Dyadic { num: v, exp: 0 }
    }

    pub fn zero() -> Self {
        Dyadic { num: 0, exp: 0 }
    }

    pub fn num(&self) -> i128 {
        self.num
    }

    pub fn exp(&self) -> u32 {
        self.exp
    }

    /// Denominator `2^exp` as an integer.
    pub fn den(&self) -> u128 {
        1u128 << self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// True when the value is an integer (canonical form makes this `exp == 0`).
    pub fn is_integer(&self) -> bool {
        self.exp == 0
    }

    pub fn try_add(&self, other: &Dyadic) -> Result<Dyadic> {
        let exp = self.exp.max(other.exp);
        let a = shl_i128(self.num, exp - self.exp)?;
        let b = shl_i128(other.num, exp - other.exp)?;
        let sum = a
            .checked_add(b)
            .ok_or_else(|| Error::Range("addition overflows 128-bit width".into()))?;
        Dyadic::new(sum, exp)
    }

    pub fn try_sub(&self, other: &Dyadic) -> Result<Dyadic> {
        let exp = self.exp.max(other.exp);
        let a = shl_i128(self.num, exp - self.exp)?;
        let b = shl_i128(other.num, exp - other.exp)?;
        let diff = a
            .checked_sub(b)
            .ok_or_else(|| Error::Range("subtraction overflows 128-bit width".into()))?;
        Dyadic::new(diff, exp)
    }

    pub fn try_mul(&self, other: &Dyadic) -> Result<Dyadic> {
        let num = self
            .num
            .checked_mul(other.num)
            .ok_or_else(|| Error::Range("multiplication overflows 128-bit width".into()))?;
        let exp = self
            .exp
            .checked_add(other.exp)
            .ok_or_else(|| Error::Range("exponent overflow in multiplication".into()))?;
        Dyadic::new(num, exp)
    }

    /// Exact division by two.
    pub fn halve(&self) -> Result<Dyadic> {
        if self.num == 0 {
            return Ok(*self);
        }
        Dyadic::new(self.num, self.exp + 1)
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 * 2f64.powi(-(self.exp as i32))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        // Compare via the sign of the exact difference; unrepresentable
        // differences yield None rather than a wrong answer.
        self.try_sub(other).ok().map(|d| d.num.cmp(&0))
    }
}

impl std::ops::Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        self.try_add(&rhs).expect("dyadic addition overflow")
    }
}

impl std::ops::Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        self.try_sub(&rhs).expect("dyadic subtraction overflow")
    }
}

impl std::ops::Mul for Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: Dyadic) -> Dyadic {
        self.try_mul(&rhs).expect("dyadic multiplication overflow")
    }
}

impl fmt::Display for Dyadic {
    /// Integers print bare ("0", "3"); proper fractions print with the
    /// power-of-two denominator evaluated ("5/8").
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den())
        }
    }
}

/// The decomposition `n = 2^k + r` with `0 <= r < 2^k`, plus bit access.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decomposition {
    n: u64,
    k: u32,
    r: u64,
}

impl Decomposition {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `floor(log2 n)`.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    /// `x = r / 2^k` as an exact dyadic rational.
    pub fn x(&self) -> Dyadic {
        Dyadic::new(self.r as i128, self.k).expect("r < 2^k with k <= 62 always fits")
    }

    /// Bit `n_i` of the binary expansion; 0 beyond the top bit.
    pub fn bit(&self, i: u32) -> u64 {
        if i >= 64 {
            0
        } else {
            (self.n >> i) & 1
        }
    }
}

/// Decomposes `n >= 1` as `n = 2^k + r`.
pub fn decompose(n: u64) -> Result<Decomposition> {
    if n == 0 {
        return Err(Error::Domain("decompose requires n >= 1".into()));
    }
    if n > N_MAX {
        return Err(Error::Range(format!(
            "n = {n} exceeds supported maximum 2^62"
        )));
    }
    let k = n.ilog2();
    Ok(Decomposition {
        n,
        k,
        r: n - (1 << k),
    })
}

/// Index of the least-significant set bit of `r` (the trailing-zero count).
pub fn rho1(r: u64) -> Result<u32> {
    if r == 0 {
        return Err(Error::Domain(
            "rho1 requires r >= 1 (0 has no set bit)".into(),
        ));
    }
    Ok(r.trailing_zeros())
}
