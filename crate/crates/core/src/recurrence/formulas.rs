//! Closed forms for families with known volumes.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

fn pow2(k: usize) -> BigUint {
    BigUint::one() << k
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Forest on `n` vertices with `k` components: `2^{n−k}`.
pub fn nvol_forest(n: usize, k: usize) -> Result<BigUint> {
    if k == 0 || k > n {
        return Err(Error::params(
            "forest",
            format!("need 1 <= k <= n, got n={n} k={k}"),
        ));
    }
    Ok(pow2(n - k))
}

/// `C_n`: `n·2^{n−2}`.
pub fn nvol_cycle(n: usize) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::params("cycle", format!("need n >= 3, got {n}")));
    }
    Ok(BigUint::from(n) * pow2(n - 2))
}

/// `K_n` minus a `k`-matching: `C(2(n−1), n−1) − 2k`.
pub fn nvol_complete_minus_matching(n: usize, k: usize) -> Result<BigUint> {
    if n <= 2 || k > n / 2 {
        return Err(Error::params(
            "complete_minus_matching",
            format!("need n > 2 and k <= n/2, got n={n} k={k}"),
        ));
    }
    Ok(binomial(2 * (n as u64 - 1), n as u64 - 1) - BigUint::from(2 * k))
}

/// `K_{2,n−2}`: `2^{n−4}(n²−n+6) − 2`. At `n = 3` the power is `1/2`
/// and `n²−n+6 = 12` is even, so the value is the integer 4.
pub fn nvol_k2m(n: usize) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::params(
            "complete_bipartite",
            format!("K_{{2,n-2}} needs n >= 3, got {n}"),
        ));
    }
    let poly = BigUint::from(n * n - n + 6);
    let scaled = if n >= 4 {
        poly * pow2(n - 4)
    } else {
        poly >> 1
    };
    Ok(scaled - 2u32)
}

/// Conjectured wheel volume `3^n − 2^n + 1` for `W_n = K_1 ∨ C_n`.
pub fn wheel_conjecture_value(n: usize) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::params("wheel", format!("need n >= 3, got {n}")));
    }
    Ok(BigUint::from(3u32).pow(n as u32) - pow2(n) + 1u32)
}

/// Stirling numbers of the second kind `S(n, k)`.
pub fn stirling2(n: usize, k: usize) -> BigUint {
    let mut row = vec![BigUint::zero(); k + 1];
    row[0] = BigUint::one();
    for _ in 0..n {
        for j in (1..=k).rev() {
            let carried = &row[j] * j + &row[j - 1];
            row[j] = carried;
        }
        row[0] = BigUint::zero();
    }
    row[k].clone()
}

/// `3^n − 2^n + 1 = 2S(n+1,3) + S(n+1,2) + S(n+1,1)`.
pub fn stirling_identity_check(n: usize) -> Result<bool> {
    let lhs = wheel_conjecture_value(n)?;
    let rhs = stirling2(n + 1, 3) * 2u32 + stirling2(n + 1, 2) + stirling2(n + 1, 1);
    Ok(lhs == rhs)
}
