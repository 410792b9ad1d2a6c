//! D-node counts of divide-and-conquer trees, computed without building any
//! tree: three-case recursion, per-level closed form, suffix-bit-sum explicit
//! form, the step recurrence, and the neighbor-average identity.

use crate::dyadic::{decompose, rho1, Dyadic, N_MAX};
use crate::error::{Error, Result};

fn validate(n: u64, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain(format!("{what} requires n >= 1")));
    }
    if n > N_MAX {
        return Err(Error::Range(format!(
            "n = {n} exceeds supported maximum 2^62"
        )));
    }
    Ok(())
}

/// D-node count via the three-case recursion
/// `delta(2m) = 2 delta(m)`, `delta(2m+1) = delta(m) + delta(m+1) + 1`,
/// `delta(1) = 0`.
///
/// Runs as an iterative walk down the binary expansion carrying the pair
/// `(delta(m), delta(m+1))`, so there is no recursion depth or memo table.
pub fn delta_recursive(n: u64) -> Result<u64> {
    validate(n, "delta_recursive")?;
    Ok(delta_recursive_unchecked(n))
}

fn delta_recursive_unchecked(n: u64) -> u64 {
    let k = n.ilog2();
    // m starts at the top bit (m = 1) and absorbs one bit per step.
    let (mut d_m, mut d_m1) = (0u64, 0u64); // delta(1), delta(2)
    for i in (0..k).rev() {
        let bit = (n >> i) & 1;
        (d_m, d_m1) = if bit == 0 {
            (2 * d_m, d_m + d_m1 + 1)
        } else {
            (d_m + d_m1 + 1, 2 * d_m1)
        };
    }
    d_m
}

/// `lambda_i(n)`: D-nodes at depth `i`, from bit `n_i` and residue `n mod 2^i`.
pub fn lambda_level(n: u64, i: u32) -> Result<u64> {
    validate(n, "lambda_level")?;
    if n < 2 {
        return Err(Error::Domain("lambda_level requires n >= 2".into()));
    }
    let k = n.ilog2();
    if i > k - 1 {
        return Err(Error::Domain(format!(
            "depth i = {i} out of range [0, {}] for n = {n}",
            k - 1
        )));
    }
    Ok(lambda_unchecked(n, i))
}

fn lambda_unchecked(n: u64, i: u32) -> u64 {
    let residue = n & ((1u64 << i) - 1); // n mod 2^i
    if (n >> i) & 1 == 0 {
        residue
    } else {
        (1u64 << i) - residue
    }
}

/// D-node count as the sum of per-level `lambda_i(n)`.
///
/// Both stated branches are evaluated — the two-case form and the
/// sign-explicit form `n_i*2^i + (-1)^{n_i}*(n mod 2^i)` — and must agree.
pub fn delta_closed(n: u64) -> Result<u64> {
    validate(n, "delta_closed")?;
    Ok(delta_closed_unchecked(n))
}

fn delta_closed_unchecked(n: u64) -> u64 {
    let k = n.ilog2();
    let mut two_case: u64 = 0;
    let mut explicit: i128 = 0;
    for i in 0..k {
        two_case += lambda_unchecked(n, i);
        let bit = ((n >> i) & 1) as i128;
        let residue = (n & ((1u64 << i) - 1)) as i128;
        let sign = if bit == 0 { 1 } else { -1 };
        explicit += bit * (1i128 << i) + sign * residue;
    }
    assert_eq!(
        two_case as i128, explicit,
        "closed-form branches disagree at n = {n}"
    );
    two_case
}

/// D-node count via the suffix-bit-sum explicit formula
/// `sum 2^i * n_i * [(k - i) - 2*s1(floor(n / 2^i)) + 4]`.
///
/// Evaluated twice — with a running suffix sum and with a popcount of the
/// shifted value — and the two must agree.
pub fn delta_explicit(n: u64) -> Result<u64> {
    validate(n, "delta_explicit")?;
    Ok(delta_explicit_unchecked(n))
}

fn delta_explicit_unchecked(n: u64) -> u64 {
    let k = n.ilog2();
    let mut running: i128 = 0;
    let mut shifted: i128 = 0;
    let mut suffix: i128 = 0; // sum of bits n_j for j in [i, k]
    for i in (0..=k).rev() {
        let bit = ((n >> i) & 1) as i128;
        suffix += bit;
        if i < k {
            let weight = (k - i) as i128 + 4;
            running += bit * (1i128 << i) * (weight - 2 * suffix);
            shifted += bit * (1i128 << i) * (weight - 2 * (n >> i).count_ones() as i128);
        }
    }
    assert_eq!(
        running, shifted,
        "explicit-form variants disagree at n = {n}"
    );
    debug_assert!(running >= 0);
    running as u64
}

/// Exact step `delta(n+1) - delta(n) = floor(log2 n) - 2*s1(n) + 2`.
pub fn delta_step(n: u64) -> Result<i64> {
    validate(n, "delta_step")?;
    Ok(n.ilog2() as i64 - 2 * n.count_ones() as i64 + 2)
}

/// Both sides of an identity, evaluated separately so the caller judges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NeighborCheck {
    pub lhs: Dyadic,
    pub rhs: Dyadic,
    pub holds: bool,
}

/// Neighbor-average identity
/// `delta(n) = [delta(n-1) + delta(n+1)]/2 + 1 - rho1(r)`,
/// defined for `n = 2^k + r` strictly between consecutive powers of two.
pub fn check_neighbor_identity(n: u64) -> Result<NeighborCheck> {
    validate(n, "check_neighbor_identity")?;
    let d = decompose(n)?;
    if d.r() == 0 {
        return Err(Error::Domain(format!(
            "n = {n} is a power of two; the identity needs 0 < r < 2^k"
        )));
    }
    let lhs = Dyadic::from_int(delta_closed_unchecked(n) as i128);
    let sum = delta_closed_unchecked(n - 1) + delta_closed_unchecked(n + 1);
    let correction = 1 - rho1(d.r())? as i128;
    let rhs = Dyadic::new(sum as i128, 1)?.try_add(&Dyadic::from_int(correction))?;
    Ok(NeighborCheck {
        lhs,
        rhs,
        holds: lhs == rhs,
    })
}

/// Internal hook for neighbors one past [`N_MAX`] (e.g. `delta(N_MAX + 1)`).
pub(crate) fn delta_unbounded(n: u64) -> u64 {
    debug_assert!(n >= 1);
    delta_closed_unchecked(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    const DELTA_1_TO_16: [u64; 16] = [0, 0, 1, 0, 2, 2, 2, 0, 3, 4, 5, 4, 5, 4, 3, 0];

    #[test]
    fn recursive_examples() {
        assert_eq!(delta_recursive(1).unwrap(), 0);
        assert_eq!(delta_recursive(5).unwrap(), 2);
        assert_eq!(delta_recursive(16).unwrap(), 0);
    }

    #[test]
    fn closed_examples() {
        assert_eq!(delta_closed(5).unwrap(), 2);
        assert_eq!(delta_closed(11).unwrap(), 5);
        assert_eq!(delta_closed(8).unwrap(), 0);
    }

    #[test]
    fn explicit_examples() {
        assert_eq!(delta_explicit(3).unwrap(), 1);
        assert_eq!(delta_explicit(5).unwrap(), 2);
        assert_eq!(delta_explicit(4).unwrap(), 0);
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_level(6, 0).unwrap(), 0);
        assert_eq!(lambda_level(6, 1).unwrap(), 2);
        assert_eq!(lambda_level(5, 0).unwrap(), 1);
        assert!(matches!(lambda_level(6, 2), Err(Error::Domain(_))));
        assert!(matches!(lambda_level(1, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn step_examples() {
        assert_eq!(delta_step(4).unwrap(), 2);
        assert_eq!(delta_step(3).unwrap(), -1);
        assert_eq!(delta_step(1).unwrap(), 0);
    }

    #[test]
    fn known_small_values() {
        for (i, &expected) in DELTA_1_TO_16.iter().enumerate() {
            let n = (i + 1) as u64;
            assert_eq!(delta_recursive(n).unwrap(), expected, "n = {n}");
            assert_eq!(delta_closed(n).unwrap(), expected, "n = {n}");
            assert_eq!(delta_explicit(n).unwrap(), expected, "n = {n}");
        }
    }

    #[test]
    fn routes_agree() {
        for n in 1..=4096 {
            let r = delta_recursive(n).unwrap();
            assert_eq!(r, delta_closed(n).unwrap(), "n = {n}");
            assert_eq!(r, delta_explicit(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn doubling_and_odd_split() {
        for m in 1..=2048u64 {
            assert_eq!(delta_closed(2 * m).unwrap(), 2 * delta_closed(m).unwrap());
            assert_eq!(
                delta_closed(2 * m + 1).unwrap(),
                delta_closed(m).unwrap() + delta_closed(m + 1).unwrap() + 1
            );
        }
    }

    #[test]
    fn step_matches_difference() {
        for n in 1..=4096u64 {
            let diff = delta_closed(n + 1).unwrap() as i64 - delta_closed(n).unwrap() as i64;
            assert_eq!(diff, delta_step(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn neighbor_examples() {
        let c = check_neighbor_identity(5).unwrap();
        assert_eq!(
            (c.lhs, c.rhs, c.holds),
            (Dyadic::from_int(2), Dyadic::from_int(2), true)
        );
        let c = check_neighbor_identity(6).unwrap();
        assert_eq!(
            (c.lhs, c.rhs, c.holds),
            (Dyadic::from_int(2), Dyadic::from_int(2), true)
        );
        let c = check_neighbor_identity(12).unwrap();
        assert_eq!(
            (c.lhs, c.rhs, c.holds),
            (Dyadic::from_int(4), Dyadic::from_int(4), true)
        );
    }

    #[test]
    fn neighbor_rejects_powers_of_two() {
        for n in [1u64, 2, 4, 8, 1024] {
            assert!(matches!(check_neighbor_identity(n), Err(Error::Domain(_))));
        }
    }

    #[test]
    fn zero_is_domain_error() {
        assert!(matches!(delta_recursive(0), Err(Error::Domain(_))));
        assert!(matches!(delta_closed(0), Err(Error::Domain(_))));
        assert!(matches!(delta_explicit(0), Err(Error::Domain(_))));
        assert!(matches!(delta_step(0), Err(Error::Domain(_))));
    }

    #[test]
    fn large_n_near_bound() {
        // delta(2^62) = 0; a step off the power of two follows the recursion.
        assert_eq!(delta_closed(N_MAX).unwrap(), 0);
        assert_eq!(delta_recursive(N_MAX).unwrap(), 0);
        let n = N_MAX - 3;
        assert_eq!(delta_recursive(n).unwrap(), delta_closed(n).unwrap());
        assert_eq!(delta_recursive(n).unwrap(), delta_explicit(n).unwrap());
        assert!(matches!(delta_closed(N_MAX + 1), Err(Error::Range(_))));
    }
}
