//! Closed-form structure and substructure connectivity of `Q_n`.
//!
//! Queries outside the range where a value is proven return
//! [`Error::NotCovered`] instead of an extrapolation.

use std::fmt;

use crate::error::{Error, Result};
use crate::family::CutMode;

/// Which proven result a value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    /// `P_k` structure and substructure connectivity.
    PathFormula,
    /// `C_k` substructure connectivity, and `C_k` structure connectivity for
    /// `n >= 5`, `6 <= k <= 2^{n-2}` together with its lower bound beyond.
    CycleFormula,
    /// `κ(Q_3; C_4) = 2`.
    SmallCubeC4,
    /// The known values for `K_1`, `K_{1,1}`, `K_{1,2}`, `K_{1,3}`, `C_4`.
    BasicStructures,
    /// `κ(Q_n; C_{2^m})`.
    PowerOfTwoCycle,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::PathFormula => "path-formula",
            Source::CycleFormula => "cycle-formula",
            Source::SmallCubeC4 => "small-cube-c4",
            Source::BasicStructures => "basic-structures",
            Source::PowerOfTwoCycle => "power-of-two-cycle",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bound {
    Exact(u64),
    AtLeast(u64),
    Between(u64, u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KappaValue {
    pub bound: Bound,
    pub source: Source,
}

impl KappaValue {
    fn exact(value: u64, source: Source) -> KappaValue {
        KappaValue { bound: Bound::Exact(value), source }
    }

    pub fn exact_value(&self) -> Option<u64> {
        match self.bound {
            Bound::Exact(v) => Some(v),
            Bound::Between(lo, hi) if lo == hi => Some(lo),
            _ => None,
        }
    }

    /// The best known lower bound.
    pub fn lower(&self) -> u64 {
        match self.bound {
            Bound::Exact(v) | Bound::AtLeast(v) | Bound::Between(v, _) => v,
        }
    }
}

impl fmt::Display for KappaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.bound {
            Bound::Exact(v) => write!(f, "= {v}"),
            Bound::AtLeast(v) => write!(f, ">= {v}"),
            Bound::Between(lo, hi) => write!(f, "in [{lo}, {hi}]"),
        }?;
        write!(f, " ({})", self.source)
    }
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

fn pow2(e: u32) -> Option<u64> {
    1u64.checked_shl(e).filter(|_| e < 64)
}

/// `⌈2n/(k+1)⌉` for odd `k`, `⌈2n/k⌉` for even `k`.
fn path_value(n: u32, k: u64) -> u64 {
    let n2 = 2 * u64::from(n);
    if k % 2 == 1 {
        ceil_div(n2, k + 1)
    } else {
        ceil_div(n2, k)
    }
}

/// `κ(Q_n; P_k) = κ^s(Q_n; P_k)` for `n >= 3`, `3 <= k <= 2^{n-1}`.
pub fn kappa_path(n: u32, k: u64, _mode: CutMode) -> Result<KappaValue> {
    if n < 3 || pow2(n - 1).is_none_or(|top| k < 3 || k > top) {
        return Err(Error::NotCovered(format!(
            "P_k connectivity is proven for n >= 3 and 3 <= k <= 2^(n-1), got n = {n}, k = {k}"
        )));
    }
    Ok(KappaValue::exact(path_value(n, k), Source::PathFormula))
}

/// `κ(Q_n; C_k)` or `κ^s(Q_n; C_k)`.
pub fn kappa_cycle(n: u32, k: u64, mode: CutMode) -> Result<KappaValue> {
    let uncovered = || {
        Error::NotCovered(format!("C_k {mode} connectivity is not determined for n = {n}, k = {k}"))
    };
    if n < 3 {
        return Err(uncovered());
    }
    let half = pow2(n - 1).ok_or_else(uncovered)?;
    match mode {
        CutMode::Substructure => {
            if k < 3 || k > half {
                return Err(uncovered());
            }
            Ok(KappaValue::exact(path_value(n, k), Source::CycleFormula))
        }
        CutMode::Structure => {
            if k % 2 == 1 || k < 4 || k > half {
                return Err(uncovered());
            }
            let quarter = half / 2;
            if n == 3 && k == 4 {
                Ok(KappaValue::exact(2, Source::SmallCubeC4))
            } else if k == 4 {
                Ok(KappaValue::exact(u64::from(n) - 2, Source::BasicStructures))
            } else if n >= 5 && k <= quarter {
                Ok(KappaValue::exact(ceil_div(2 * u64::from(n), k), Source::CycleFormula))
            } else if n >= 4 && k >= quarter + 2 {
                Ok(KappaValue {
                    bound: Bound::AtLeast(ceil_div(2 * u64::from(n), k)),
                    source: Source::CycleFormula,
                })
            } else {
                Err(uncovered())
            }
        }
    }
}

/// `κ(Q_n; C_{2^m})` for `n >= 4`, `2 <= m <= n - 2`.
///
/// Cross-checked against [`kappa_cycle`] on every call.
pub fn kappa_power_of_two_cycle(n: u32, m: u32) -> Result<KappaValue> {
    if n < 4 || m < 2 || m + 2 > n || n > 62 {
        return Err(Error::NotCovered(format!(
            "C_(2^m) connectivity is determined for n >= 4 and 2 <= m <= n-2, got n = {n}, m = {m}"
        )));
    }
    let value = if n <= 5 || m == 2 {
        u64::from(n - m)
    } else {
        ceil_div(u64::from(n), 1 << (m - 1))
    };
    let general = kappa_cycle(n, 1 << m, CutMode::Structure)?;
    match general.exact_value() {
        Some(v) if v != value => Err(Error::Inconsistent(format!(
            "kappa(Q_{n}; C_{}) is {value} by the power-of-two formula but {v} by the cycle formula",
            1u64 << m
        ))),
        _ => Ok(KappaValue::exact(value, Source::PowerOfTwoCycle)),
    }
}

/// Structures with previously known connectivities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasicStructure {
    K1,
    K11,
    K12,
    K13,
    C4,
}

/// `κ(Q_n; H)` and `κ^s(Q_n; H)` for `H ∈ {K_1, K_{1,1}, K_{1,2}, K_{1,3}, C_4}`, `n >= 4`.
pub fn kappa_basic_structure(n: u32, h: BasicStructure, mode: CutMode) -> Result<KappaValue> {
    if n < 4 {
        return Err(Error::NotCovered(format!("basic structure values need n >= 4, got {n}")));
    }
    let n64 = u64::from(n);
    let half = ceil_div(n64, 2);
    let value = match (h, mode) {
        (BasicStructure::K1, _) => n64,
        (BasicStructure::K11, _) => n64 - 1,
        (BasicStructure::K12 | BasicStructure::K13, _) => half,
        (BasicStructure::C4, CutMode::Structure) => n64 - 2,
        (BasicStructure::C4, CutMode::Substructure) => half,
    };
    Ok(KappaValue::exact(value, Source::BasicStructures))
}

/// `κ_g(Q_n)`: `(g+1)n - 2g - C(g,2)` for `g <= n - 4`, else `n(n-1)/2`.
pub fn kappa_g_extra_formula(n: u32, g: u32) -> Result<u64> {
    if n < 4 || g > n {
        return Err(Error::NotCovered(format!(
            "g-extra connectivity formula needs n >= 4 and 0 <= g <= n, got n = {n}, g = {g}"
        )));
    }
    let (n, g) = (u64::from(n), u64::from(g));
    Ok(if g + 4 <= n {
        (g + 1) * n - 2 * g - g * g.saturating_sub(1) / 2
    } else {
        n * (n - 1) / 2
    })
}

/// `⌈n/3⌉`, the known lower bound on `κ(Q_n; C_6)`.
pub fn kappa_c6_lower_bound(n: u32) -> Result<u64> {
    if n < 4 {
        return Err(Error::NotCovered(format!("the C_6 bound needs n >= 4, got {n}")));
    }
    Ok(ceil_div(u64::from(n), 3))
}

/// Pairs `(n, m)` with `6 <= n <= n_max`, `3 <= m <= n - 2` where
/// `⌈n/2^{m-1}⌉ < n - m` fails. Expected to be empty.
pub fn verify_cycle_gap_inequality(n_max: u32) -> Vec<(u32, u32)> {
    let mut bad = Vec::new();
    for n in 6..=n_max {
        for m in 3..=n - 2 {
            let lhs = match pow2(m - 1) {
                Some(p) => ceil_div(u64::from(n), p),
                None => 1,
            };
            if lhs >= u64::from(n - m) {
                bad.push((n, m));
            }
        }
    }
    bad
}
