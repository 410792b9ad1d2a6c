//! Hamming weight `s1(n)`, its expressions through the Takagi function and
//! through D-node counts, and the cumulative digit sum `S1(n)` in every
//! exact form plus the floating Trollope evaluation.

use crate::delta::{delta_closed, delta_recursive, delta_unbounded};
use crate::dyadic::{decompose, Dyadic};
use crate::error::{Error, Result};
use crate::takagi::{takagi_dilation, tent_series};

/// Population count of the binary expansion.
pub fn s1(n: u64) -> u32 {
    n.count_ones()
}

/// Hamming weight from the Takagi function:
/// `s1(n) = 2^{k-1} * [tau(r/2^k) - tau((r+1)/2^k)] + (k+2)/2`.
///
/// Evaluated in exact dyadic arithmetic; a non-integer outcome is an
/// internal inconsistency (the formula guarantees an integer).
pub fn s1_from_takagi(n: u64) -> Result<u32> {
    let d = decompose(n)?;
    let k = d.k();
    let factor = if k >= 1 {
        Dyadic::from_int(1i128 << (k - 1))
    } else {
        Dyadic::new(1, 1)? // 2^{-1}
    };
    // tau evaluated through the dilation directly, so that n = 2^62 (one
    // past the public takagi grid cap k = 61) still works.
    let tau_r = Dyadic::new(delta_unbounded(n) as i128, k)?;
    let tau_r1 = Dyadic::new(delta_unbounded(n + 1) as i128, k)?;
    let diff = tau_r.try_sub(&tau_r1)?;
    let value = factor
        .try_mul(&diff)?
        .try_add(&Dyadic::new((k as i128) + 2, 1)?)?;
    if !value.is_integer() || value.num() < 0 {
        return Err(Error::Inconsistency(format!(
            "s1_from_takagi({n}) produced non-integer {value}"
        )));
    }
    Ok(value.num() as u32)
}

/// Hamming weight from D-node counts:
/// `s1(n) = [delta(n) - delta(n+1) + floor(log2 n)] / 2 + 1`.
pub fn s1_from_delta(n: u64) -> Result<u32> {
    let numer = delta_closed(n)? as i128 - delta_unbounded(n + 1) as i128 + n.ilog2() as i128;
    if numer.rem_euclid(2) != 0 {
        return Err(Error::Inconsistency(format!(
            "s1_from_delta({n}) hit an odd numerator {numer}"
        )));
    }
    let value = numer / 2 + 1;
    if value < 0 {
        return Err(Error::Inconsistency(format!(
            "s1_from_delta({n}) produced negative {value}"
        )));
    }
    Ok(value as u32)
}

/// `S1(n) = sum of s1(i) for i in [0, n)`, by literal summation.
///
/// Linear time; this is the ground truth every closed form is checked
/// against.
pub fn s1_cumulative(n: u64) -> u128 {
    (0..n).map(|i| i.count_ones() as u128).sum()
}

/// `S1(2^k) = k * 2^{k-1}` (half of all bits below a power of two are set).
pub fn s1_cumulative_powtwo(k: u32) -> u128 {
    if k == 0 {
        0
    } else {
        k as u128 * (1u128 << (k - 1))
    }
}

/// The three exact closed forms of `S1(n)`:
///
/// - `a = [nk + 2^k * (2x - tau(x))] / 2` (dilation route),
/// - `b = [nk + 2r - 2^k * tau(r/2^k)] / 2` (tent-series route),
/// - `c = [nk + 2r - delta(n)] / 2` (recursion route).
///
/// Each division by 2 happens only after checking the numerator is an even
/// integer, so "the formula yields an integer" is verified, not assumed.
pub fn s1_cumulative_forms(n: u64) -> Result<(u128, u128, u128)> {
    let d = decompose(n)?;
    let (k, r) = (d.k() as u128, d.r() as u128);
    let nk = n as u128 * k;

    let x = d.x();
    let two_x = x.try_add(&x)?;
    let scaled = two_x
        .try_sub(&takagi_dilation(d.r(), d.k())?)?
        .try_mul(&Dyadic::from_int(1i128 << d.k()))?;
    let a = halve_integer(Dyadic::from_int(nk as i128).try_add(&scaled)?, n, "a")?;

    let tau_scaled = tent_series(&x)?.try_mul(&Dyadic::from_int(1i128 << d.k()))?;
    let b = halve_integer(
        Dyadic::from_int((nk + 2 * r) as i128).try_sub(&tau_scaled)?,
        n,
        "b",
    )?;

    let c_numer = nk + 2 * r - delta_recursive(n)? as u128;
    if !c_numer.is_multiple_of(2) {
        return Err(Error::Inconsistency(format!(
            "S1 form c at n = {n} hit odd numerator {c_numer}"
        )));
    }
    Ok((a, b, c_numer / 2))
}

fn halve_integer(total: Dyadic, n: u64, form: &str) -> Result<u128> {
    if !total.is_integer() || total.num() < 0 || total.num() % 2 != 0 {
        return Err(Error::Inconsistency(format!(
            "S1 form {form} at n = {n} is not an even integer: {total}"
        )));
    }
    Ok((total.num() / 2) as u128)
}

/// Trollope's formula in floating arithmetic, with `tau(x)` taken exactly
/// and then converted:
/// `S1(n) = n*log2(n)/2 + 2^{k-1} * [2x - tau(x) - (1+x)*log2(1+x)]`.
pub fn s1_cumulative_trollope(n: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(
            "the floating Trollope form needs n >= 2".into(),
        ));
    }
    let d = decompose(n)?;
    let tau = takagi_dilation(d.r(), d.k())?.to_f64();
    let x = d.r() as f64 / 2f64.powi(d.k() as i32);
    let bracket = 2.0 * x - tau - (1.0 + x) * (1.0 + x).log2();
    Ok((n as f64) * (n as f64).log2() / 2.0 + 2f64.powi(d.k() as i32 - 1) * bracket)
}
