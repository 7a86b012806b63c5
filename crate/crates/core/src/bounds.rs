//! Degree predicates, diameter bounds and the lower-bound witness.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::graph::cyclic_membership;
use crate::perm::{PermError, Permutation};
use crate::primes::{bertrand_prime, is_prime, max_prime_factor_triple};
use crate::synth::SynthError;

/// None of `n, n-1, n-2` is prime, and no integral half of them is prime.
///
/// For odd values the half is not an integer and is treated as passing.
pub fn connectivity_condition(n: usize) -> bool {
    if n < 3 {
        return false;
    }
    (n - 2..=n).all(|v| {
        let v = v as u64;
        !is_prime(v) && (v % 2 == 1 || !is_prime(v / 2))
    })
}

/// `floor((n-2)/p') >= 3p'+2` with `p'` the largest prime factor of `n(n-1)(n-2)`.
pub fn diam8_condition(n: usize) -> bool {
    match max_prime_factor_triple(n as u64) {
        Ok(p) => (n as u64 - 2) / p >= 3 * p + 2,
        Err(_) => false,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub connected_hypothesis: bool,
    pub diam8_hypothesis: bool,
    /// Largest prime factor of `n(n-1)(n-2)`.
    pub p_prime: Option<u64>,
    pub lower: Option<u32>,
    pub upper: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_pair: Option<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn failing_value(n: usize) -> String {
    let vals = (n - 2..=n).rev().map(|v| v as u64);
    if let Some(v) = vals.clone().find(|&v| is_prime(v)) {
        return format!("{v} is prime");
    }
    match vals.clone().find(|&v| v % 2 == 0 && is_prime(v / 2)) {
        Some(v) => format!("{v}/2 is prime"),
        None => "no failing value".to_string(),
    }
}

pub fn diameter_bounds(n: usize) -> BoundsReport {
    let connected = connectivity_condition(n);
    let diam8 = diam8_condition(n);
    let p_prime = max_prime_factor_triple(n as u64).ok();
    let (lower, upper, note) = if connected {
        (Some(6), Some(if diam8 { 8 } else { 11 }), None)
    } else {
        let culprit = if n < 3 {
            "degree too small".to_string()
        } else {
            failing_value(n)
        };
        (
            None,
            None,
            Some(format!("connectivity hypothesis fails: {culprit}")),
        )
    };
    BoundsReport {
        n,
        connected_hypothesis: connected,
        diam8_hypothesis: diam8,
        p_prime,
        lower,
        upper,
        witness_pair: None,
        note,
    }
}

/// `(1 … p)` and `(n n-1 … n-p+1)` for the largest prime `p` in `(n/2, n)`.
pub fn lower_bound_witness(n: usize) -> Result<(Permutation, Permutation), SynthError> {
    if !connectivity_condition(n) {
        return Err(SynthError::Hypothesis { n });
    }
    let p = bertrand_prime(n as u64)
        .map_err(|_| SynthError::Hypothesis { n })?
        .p as usize;
    let x = Permutation::from_cycles(n, &[(1..=p).collect::<Vec<_>>()])?;
    let y = Permutation::from_cycles(n, &[(n - p + 1..=n).rev().collect::<Vec<_>>()])?;
    Ok((x, y))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WitnessChecks {
    pub supports_overlap: bool,
    pub commute: bool,
    pub common_fixed_points_empty: bool,
    pub same_cyclic_subgroup: bool,
    pub prime_order_equal: bool,
    pub conclusion_d_ge_6: bool,
}

/// Structural checks ruling out distances 2 and 4 between two elements of equal prime order.
pub fn verify_witness(
    x: &Permutation,
    y: &Permutation,
    n: usize,
) -> Result<WitnessChecks, PermError> {
    for v in [x, y] {
        if v.degree() != n {
            return Err(PermError::DegreeMismatch {
                left: v.degree(),
                right: n,
            });
        }
    }
    let supports_overlap = (1..=n).any(|i| x.moves(i) && y.moves(i));
    let common_fixed_points_empty = (1..=n).all(|i| x.moves(i) || y.moves(i));
    let commute = x.commutes_with(y)?;
    let px = x.order().as_prime();
    let prime_order_equal = px.is_some() && px == y.order().as_prime();
    let same_cyclic_subgroup =
        x.order() == y.order() && !x.is_identity() && cyclic_membership(y, x)?.is_some();
    Ok(WitnessChecks {
        supports_overlap,
        commute,
        common_fixed_points_empty,
        same_cyclic_subgroup,
        prime_order_equal,
        conclusion_d_ge_6: supports_overlap
            && !commute
            && common_fixed_points_empty
            && !same_cyclic_subgroup
            && prime_order_equal,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    Symmetric,
}

/// `∏ t^{m_t} · m_t!` over the cycle type, fixed points counted as 1-cycles.
pub fn centralizer_order(x: &Permutation, ambient: Ambient) -> BigUint {
    let Ambient::Symmetric = ambient;
    let mut counts: BTreeMap<usize, u32> = BTreeMap::new();
    for t in x.decompose().cycle_type() {
        *counts.entry(t).or_insert(0) += 1;
    }
    counts.into_iter().fold(BigUint::one(), |acc, (t, m)| {
        let fact: BigUint = (1..=m).map(BigUint::from).product();
        acc * BigUint::from(t).pow(m) * fact
    })
}
