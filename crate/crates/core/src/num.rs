//! Scalar number-theoretic helpers: gcd and the Euler totient.

use crate::error::{Error, Result};

/// Greatest common divisor of two nonnegative integers.
pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Euler totient φ(j): the count of integers in [1, j] coprime to j,
/// with φ(1) = 1.
pub fn totient(j: u64) -> Result<u64> {
    if j == 0 {
        return Err(Error::InvalidInput("totient(0) is undefined".into()));
    }
    let mut n = j;
    let mut phi = j;
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            phi -= phi / f;
            while n % f == 0 {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    Ok(phi)
}

/// Σ_{j=1}^{p} φ(j).
pub fn totient_sum(p: u64) -> Result<u64> {
    let mut s = 0;
    for j in 1..=p {
        s += totient(j)?;
    }
    Ok(s)
}

/// Σ_{j=1}^{p} j·φ(j).
pub fn weighted_totient_sum(p: u64) -> Result<u64> {
    let mut s = 0;
    for j in 1..=p {
        s += j * totient(j)?;
    }
    Ok(s)
}
