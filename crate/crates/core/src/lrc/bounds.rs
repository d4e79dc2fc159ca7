//! Singleton-type upper bounds on d, the parameter region P(n,k,r,δ), and
//! the optimality verdict built from them.

use serde::Serialize;

use crate::error::{Error, Result};

use super::Scope;

fn ceil_div(a: i64, b: i64) -> i64 {
    (a + b - 1).div_euclid(b)
}

fn check_nk(n: i64, k: i64) -> Result<()> {
    if n < 1 || k < 1 || k > n {
        return Err(Error::BadParams(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

fn check_r(k: i64, r: i64) -> Result<()> {
    if r < 1 || r > k {
        return Err(Error::BadParams(format!(
            "need 0 < r <= k as in P(n,k,r,delta), got r={r}, k={k}"
        )));
    }
    Ok(())
}

fn check_pos(name: &str, v: i64) -> Result<()> {
    if v < 1 {
        return Err(Error::BadParams(format!("{name} must be at least 1, got {v}")));
    }
    Ok(())
}

/// d <= n - k + 1
pub fn singleton(n: i64, k: i64) -> Result<i64> {
    check_nk(n, k)?;
    Ok(n - k + 1)
}

/// d <= n - k + 1 - (⌈k/r⌉ - 1)
pub fn gopalan(n: i64, k: i64, r: i64) -> Result<i64> {
    check_nk(n, k)?;
    check_r(k, r)?;
    Ok(n - k + 1 - (ceil_div(k, r) - 1))
}

/// d <= n - k + 1 - (⌈k/r⌉ - 1)(δ - 1)
pub fn prakash(n: i64, k: i64, r: i64, delta: i64) -> Result<i64> {
    check_nk(n, k)?;
    check_r(k, r)?;
    check_pos("delta", delta)?;
    Ok(n - k + 1 - (ceil_div(k, r) - 1) * (delta - 1))
}

/// d <= n - k + 1 - (⌈(t(k-1)+1)/(t(r-1)+1)⌉ - 1)
pub fn wang(n: i64, k: i64, r: i64, t: i64) -> Result<i64> {
    check_nk(n, k)?;
    check_r(k, r)?;
    check_pos("t", t)?;
    Ok(n - k + 1 - (ceil_div(t * (k - 1) + 1, t * (r - 1) + 1) - 1))
}

/// The polymatroid bound, with k possibly fractional (it is rounded up):
/// d <= n - ⌈k⌉ + 1 - (⌈(t(⌈k⌉-1)+1)/(t(r-1)+1)⌉ - 1)(δ - 1)
pub fn polymatroid(n: i64, k: f64, r: i64, delta: i64, t: i64) -> Result<i64> {
    if !k.is_finite() {
        return Err(Error::BadParams(format!("k must be finite, got {k}")));
    }
    let kc = (k - crate::codes::EPS).ceil() as i64;
    check_nk(n, kc)?;
    check_r(kc, r)?;
    check_pos("delta", delta)?;
    check_pos("t", t)?;
    Ok(n - kc + 1 - (ceil_div(t * (kc - 1) + 1, t * (r - 1) + 1) - 1) * (delta - 1))
}

/// All-symbol availability bound: d <= n - k + 1 - Σ_{i=1..t} ⌊(k-1)/r^i⌋
pub fn tamo(n: i64, k: i64, r: i64, t: i64) -> Result<i64> {
    check_nk(n, k)?;
    check_r(k, r)?;
    check_pos("t", t)?;
    let mut sum = 0;
    let mut p: i64 = 1;
    for _ in 0..t {
        p = p.saturating_mul(r);
        sum += (k - 1) / p;
    }
    Ok(n - k + 1 - sum)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HLevel {
    pub n: i64,
    pub k: i64,
    pub d: i64,
}

/// Bounds on d_i for i = 0..=h, level 0 being the whole code (n_0, k_0):
/// d_i <= n_i - k_i + 1 - Σ_{j>i} (d_j - d_{j+1})(⌈k_i/k_j⌉ - 1), d_{h+1} = 1.
pub fn hierarchical(n0: i64, k0: i64, levels: &[HLevel]) -> Result<Vec<i64>> {
    check_nk(n0, k0)?;
    for l in levels {
        check_nk(l.n, l.k)?;
        if l.d < 1 {
            return Err(Error::BadParams(format!("level distance must be at least 1, got {}", l.d)));
        }
    }
    let nk: Vec<(i64, i64)> = std::iter::once((n0, k0)).chain(levels.iter().map(|l| (l.n, l.k))).collect();
    let ds: Vec<i64> = std::iter::once(0).chain(levels.iter().map(|l| l.d)).chain(std::iter::once(1)).collect();
    let h = levels.len();
    Ok((0..=h)
        .map(|i| {
            let (ni, ki) = nk[i];
            let pen: i64 = (i + 1..=h).map(|j| (ds[j] - ds[j + 1]) * (ceil_div(ki, nk[j].1) - 1)).sum();
            ni - ki + 1 - pen
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CadambeVerdict {
    /// min over s of s·r + max(0, n - s(r+1) - d + 1)
    pub k_max: i64,
    pub argmin_s: i64,
    /// False is definitive; true only means the surrogate does not exclude k.
    pub permitted: bool,
}

/// Alphabet-aware bound with the Singleton surrogate
/// k_opt(n', d) <= max(0, n' - d + 1), s ranging over 0..=⌊n/(r+1)⌋.
pub fn cadambe(n: i64, k: i64, d: i64, r: i64, q: i64) -> Result<CadambeVerdict> {
    check_nk(n, k)?;
    check_pos("r", r)?;
    if d < 1 || d > n {
        return Err(Error::BadParams(format!("need 1 <= d <= n, got d={d}, n={n}")));
    }
    if q < 2 {
        return Err(Error::BadParams(format!("alphabet size must be at least 2, got {q}")));
    }
    let (argmin_s, k_max) = (0..=n / (r + 1))
        .map(|s| (s, s * r + (n - s * (r + 1) - d + 1).max(0)))
        .min_by_key(|&(s, v)| (v, s))
        .expect("s = 0 is always in range");
    Ok(CadambeVerdict { k_max, argmin_s, permitted: k <= k_max })
}

/// (n,k,r,δ) in P: 2 <= δ and 0 < r <= k <= n - (δ-1)⌈k/r⌉.
pub fn in_p(n: i64, k: i64, r: i64, delta: i64) -> bool {
    delta >= 2 && 0 < r && r <= k && k <= n - (delta - 1) * ceil_div(k, r)
}

/// n - k + 1 - ⌈k/r⌉(δ - 1), achievable for every point of P.
pub fn d_max_lower_bound(n: i64, k: i64, r: i64, delta: i64) -> Result<i64> {
    if !in_p(n, k, r, delta) {
        return Err(Error::OutsideP(format!("(n,k,r,delta) = ({n},{k},{r},{delta})")));
    }
    Ok(n - k + 1 - ceil_div(k, r) * (delta - 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Achieved {
    pub n: i64,
    pub k: i64,
    pub d: i64,
    pub r: i64,
    pub delta: i64,
    pub t: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundRow {
    pub name: &'static str,
    pub formula: &'static str,
    pub value: Option<i64>,
    pub applicable: bool,
    /// bound - d, when the bound applies.
    pub gap: Option<i64>,
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub achieved: Achieved,
    pub scope: Scope,
    pub in_p: bool,
    pub bounds: Vec<BoundRow>,
    pub best_bound: Option<i64>,
    pub singleton_optimal: bool,
}

/// Every bound for (n,k,r,δ,t), flagged applicable when its hypotheses
/// hold: gopalan, wang and tamo presume δ = 2; tamo is an all-symbol bound.
/// Gaps are left empty.
pub fn bound_rows(n: i64, k: i64, r: i64, delta: i64, t: i64, scope: Scope) -> Vec<BoundRow> {
    let row = |name, formula, res: Result<i64>, applicable: bool, why: &str| {
        let (value, note) = match res {
            Ok(v) => (Some(v), if applicable { String::new() } else { why.to_string() }),
            Err(e) => (None, e.to_string()),
        };
        BoundRow { name, formula, value, applicable: applicable && value.is_some(), gap: None, note }
    };
    vec![
        row("singleton", "n - k + 1", singleton(n, k), true, ""),
        row("gopalan", "n - k + 1 - (ceil(k/r) - 1)", gopalan(n, k, r), delta == 2, "needs delta = 2"),
        row("prakash", "n - k + 1 - (ceil(k/r) - 1)(delta - 1)", prakash(n, k, r, delta), true, ""),
        row("wang", "n - k + 1 - (ceil((t(k-1)+1)/(t(r-1)+1)) - 1)", wang(n, k, r, t), delta == 2, "needs delta = 2"),
        row(
            "polymatroid",
            "n - ceil(k) + 1 - (ceil((t(ceil(k)-1)+1)/(t(r-1)+1)) - 1)(delta - 1)",
            polymatroid(n, k as f64, r, delta, t),
            true,
            "",
        ),
        row(
            "tamo",
            "n - k + 1 - sum_{i=1..t} floor((k-1)/r^i)",
            tamo(n, k, r, t),
            delta == 2 && scope == Scope::All,
            "needs delta = 2 and all-symbol scope",
        ),
    ]
}

/// The bound table for the achieved parameters, with gaps, and whether d
/// meets the smallest applicable bound.
pub fn classify_optimality(a: Achieved, scope: Scope) -> Verdict {
    let Achieved { n, k, d, r, delta, t } = a;
    let mut bounds = bound_rows(n, k, r, delta, t, scope);
    for b in &mut bounds {
        b.gap = b.value.filter(|_| b.applicable).map(|v| v - d);
    }
    let best_bound = bounds.iter().filter(|b| b.applicable).filter_map(|b| b.value).min();
    Verdict {
        achieved: a,
        scope,
        in_p: in_p(n, k, r, delta),
        singleton_optimal: best_bound == Some(d),
        bounds,
        best_bound,
    }
}
