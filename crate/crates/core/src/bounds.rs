//! Exact integer threshold arithmetic.
//!
//! Every threshold is a floor of a rational power. Comparisons `a^x` vs `b^y`
//! are first attempted in log space; whenever the two logarithms are within a
//! safety margin of each other the comparison is redone with arbitrary
//! precision integers, so results never depend on float rounding.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::Pow;

use crate::tau::Tau;

/// Relative gap between the two logarithms under which the float decision is
/// not trusted. Rounding error of `e * ln(a)` is many orders of magnitude
/// below this.
const LOG_MARGIN: f64 = 1e-9;

/// Compares `a^ea` with `b^eb` exactly.
pub fn cmp_pow(a: u64, ea: u32, b: u64, eb: u32) -> Ordering {
    // 0^0 is taken as 1.
    let trivial = |base: u64, exp: u32| -> Option<u64> {
        if exp == 0 {
            Some(1)
        } else if base <= 1 {
            Some(base)
        } else {
            None
        }
    };
    match (trivial(a, ea), trivial(b, eb)) {
        (Some(x), Some(y)) => return x.cmp(&y),
        // the non-trivial side is at least 2
        (Some(_), None) => return Ordering::Less,
        (None, Some(_)) => return Ordering::Greater,
        (None, None) => {}
    }
    let la = f64::from(ea) * (a as f64).ln();
    let lb = f64::from(eb) * (b as f64).ln();
    let tol = LOG_MARGIN * la.abs().max(lb.abs()).max(1.0);
    if la - lb > tol {
        Ordering::Greater
    } else if lb - la > tol {
        Ordering::Less
    } else {
        Pow::pow(BigUint::from(a), ea).cmp(&Pow::pow(BigUint::from(b), eb))
    }
}

/// `⌊s^τ⌋`: the largest `t` with `t^q ≤ s^p`. `floor_pow(0, τ)` is 0.
pub fn floor_pow(s: u64, tau: Tau) -> u64 {
    if s == 0 {
        return 0;
    }
    let (p, q) = (tau.numer(), tau.denom());
    if p == 0 {
        return 1;
    }
    let estimate = (tau.as_f64() * (s as f64).ln()).exp().floor();
    let mut t = (estimate as u64).clamp(1, s);
    while t > 1 && cmp_pow(t, q, s, p) == Ordering::Greater {
        t -= 1;
    }
    while t < s && cmp_pow(t + 1, q, s, p) != Ordering::Greater {
        t += 1;
    }
    t
}

/// `⌊x^{1/τ}⌋`: the largest `t` with `t^p ≤ x^q`.
///
/// Returns `None` for `τ = 0`, where no finite size cap exists. Values that
/// do not fit in a `u64` saturate to `u64::MAX`.
pub fn floor_invpow(x: u64, tau: Tau) -> Option<u64> {
    let (p, q) = (tau.numer(), tau.denom());
    if p == 0 {
        return None;
    }
    if x <= 1 {
        return Some(x);
    }
    let log_estimate = f64::from(q) / f64::from(p) * (x as f64).ln();
    // 2^62 leaves headroom for the +1 probes below
    if log_estimate >= 62.0 * std::f64::consts::LN_2 {
        return Some(u64::MAX);
    }
    let mut t = (log_estimate.exp().floor() as u64).max(1);
    while t > 1 && cmp_pow(t, p, x, q) == Ordering::Greater {
        t -= 1;
    }
    while cmp_pow(t + 1, p, x, q) != Ordering::Greater {
        t += 1;
    }
    Some(t)
}

/// Minimum degree any member of a Flexi-clique strictly larger than
/// `best_size` must have: `⌊(best_size + 1)^τ⌋`.
pub fn theta(best_size: u64, tau: Tau) -> u64 {
    floor_pow(best_size + 1, tau)
}

/// Minimum node count `n(k, L)` of a connected graph with minimum degree `k`
/// and diameter `L`.
pub fn degree_diameter_bound(k: u64, l: u64) -> u64 {
    debug_assert!(k >= 1 && l >= 1, "n(k, L) needs k, L >= 1");
    if l <= 2 || k <= 1 {
        k.saturating_add(l)
    } else {
        k.saturating_add(l)
            .saturating_add(1)
            .saturating_add((l / 3).saturating_mul(k - 2))
    }
}

/// Cached `⌊s^τ⌋` for `s` in `0..=max_s`; larger arguments fall back to
/// [`floor_pow`].
#[derive(Debug, Clone)]
pub struct PowTable {
    tau: Tau,
    values: Vec<u64>,
}

impl PowTable {
    pub fn new(tau: Tau, max_s: usize) -> Self {
        let (p, q) = (tau.numer(), tau.denom());
        let mut values = Vec::with_capacity(max_s + 1);
        values.push(0);
        let mut t = 0u64;
        for s in 1..=max_s as u64 {
            t = t.max(1);
            while t < s && cmp_pow(t + 1, q, s, p) != Ordering::Greater {
                t += 1;
            }
            values.push(t);
        }
        PowTable { tau, values }
    }

    pub fn tau(&self) -> Tau {
        self.tau
    }

    #[inline]
    pub fn get(&self, s: u64) -> u64 {
        match self.values.get(s as usize) {
            Some(&v) => v,
            None => floor_pow(s, self.tau),
        }
    }
}
