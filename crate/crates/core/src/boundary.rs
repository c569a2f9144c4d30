//! Boundary divisors `D_I = D_{I^c}` of `M̄_{0,n}` and their purity for a
//! character `λ^k` of the degree-`d` cover.
//!
//! The local monodromy of the eigenperiod map around `D_I` is finite exactly
//! when `k·min(|I|, |I^c|) ≢ 0 (mod d)`; such divisors form the pure locus.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::cover::Regime;
use crate::error::{invalid, Error, Result};

/// Largest `n` for which divisors are listed explicitly.
pub const MAX_ENUMERATION_N: u64 = 20;

/// Canonical representative `I` of `D_I`: `2 <= |I| <= ⌊n/2⌋`, and when
/// `|I| = n/2` the representative contains point 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BoundaryDivisor {
    n: u64,
    members: Vec<u64>,
}

impl BoundaryDivisor {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Sorted, 1-based.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn size(&self) -> u64 {
        self.members.len() as u64
    }

    /// `min(|I|, |I^c|)`, which equals `|I|` for a canonical representative.
    pub fn min_side(&self) -> u64 {
        self.size().min(self.n - self.size())
    }

    pub fn complement(&self) -> Vec<u64> {
        complement(self.n, &self.members)
    }

    pub fn contains(&self, i: u64) -> bool {
        self.members.binary_search(&i).is_ok()
    }
}

impl fmt::Display for BoundaryDivisor {
    /// Comma-separated members, e.g. `1,2,5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

fn complement(n: u64, members: &[u64]) -> Vec<u64> {
    (1..=n)
        .filter(|i| members.binary_search(i).is_err())
        .collect()
}

/// Returns the canonical representative of `D_I`.
pub fn canonicalize(n: u64, members: &[u64]) -> Result<BoundaryDivisor> {
    if n < 4 {
        return Err(invalid(format!("M_0,n needs n >= 4, got {n}")));
    }
    let mut set = members.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.len() != members.len() {
        return Err(invalid(format!("repeated points in {members:?}")));
    }
    if let Some(bad) = set.iter().find(|&&i| i == 0 || i > n) {
        return Err(invalid(format!("point {bad} is outside 1..={n}")));
    }
    let m = set.len() as u64;
    if m < 2 || m > n - 2 {
        return Err(invalid(format!(
            "a boundary divisor needs 2 <= |I| <= n-2, got |I| = {m} with n = {n}"
        )));
    }
    let flip = 2 * m > n || (2 * m == n && set[0] != 1);
    let members = if flip { complement(n, &set) } else { set };
    Ok(BoundaryDivisor { n, members })
}

fn check_character(d: u64, k: u64) -> Result<()> {
    if d < 2 {
        return Err(invalid(format!("d must be at least 2, got {d}")));
    }
    if k == 0 || k >= d {
        return Err(invalid(format!(
            "character index must satisfy 1 <= k < d, got k={k}, d={d}"
        )));
    }
    Ok(())
}

fn pure_size(size: u64, d: u64, k: u64) -> bool {
    !(k * size).is_multiple_of(d)
}

/// `k·min(|I|, |I^c|) ≢ 0 (mod d)`.
pub fn is_pure_divisor(div: &BoundaryDivisor, d: u64, k: u64) -> Result<bool> {
    check_character(d, k)?;
    Ok(pure_size(div.min_side(), d, k))
}

/// Pure for every nontrivial character, i.e. the cover of the generic point
/// of `D_I` is of compact type.
pub fn is_compact_type(d: u64, div: &BoundaryDivisor) -> Result<bool> {
    if d < 2 {
        return Err(invalid(format!("d must be at least 2, got {d}")));
    }
    for k in 1..d {
        if !is_pure_divisor(div, d, k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of boundary divisors of `M̄_{0,n}`, `2^{n-1} - n - 1`.
pub fn divisor_count(n: u64) -> u128 {
    assert!(
        (4..=127).contains(&n),
        "divisor_count defined for 4 <= n <= 127"
    );
    (1u128 << (n - 1)) - n as u128 - 1
}

/// All canonical divisors of `M̄_{0,n}`, sorted lexicographically.
pub fn canonical_divisors(n: u64) -> Result<Vec<BoundaryDivisor>> {
    if n < 4 {
        return Err(invalid(format!("M_0,n needs n >= 4, got {n}")));
    }
    if n > MAX_ENUMERATION_N {
        return Err(Error::TooLarge(format!(
            "listing divisors is limited to n <= {MAX_ENUMERATION_N}, got {n}"
        )));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n as usize / 2);
    collect_subsets(n, 1, &mut current, &mut out);
    out.sort();
    Ok(out)
}

fn collect_subsets(n: u64, next: u64, current: &mut Vec<u64>, out: &mut Vec<BoundaryDivisor>) {
    let m = current.len() as u64;
    if m >= 2 && (2 * m < n || (2 * m == n && current[0] == 1)) {
        out.push(BoundaryDivisor {
            n,
            members: current.clone(),
        });
    }
    if 2 * (m + 1) > n {
        return;
    }
    for i in next..=n {
        current.push(i);
        collect_subsets(n, i + 1, current, out);
        current.pop();
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LocusWarning {
    /// `(n, d)` admits neither cover regime; the congruence is still
    /// evaluated but the codimension theory does not apply.
    NeitherRegime,
    /// `n = 4`; the extension results are stated for `n >= 5`.
    SmallN,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SizeCounts {
    pub pure: u64,
    pub non_pure: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PureLocusReport {
    pub n: u64,
    pub d: u64,
    pub k: u64,
    pub regime: Regime,
    pub warnings: Vec<LocusWarning>,
    pub non_pure: Vec<BoundaryDivisor>,
    pub counts_by_size: BTreeMap<u64, SizeCounts>,
}

impl PureLocusReport {
    pub fn total(&self) -> u64 {
        self.counts_by_size
            .values()
            .map(|c| c.pure + c.non_pure)
            .sum()
    }

    pub fn pure_total(&self) -> u64 {
        self.counts_by_size.values().map(|c| c.pure).sum()
    }

    pub fn non_pure_total(&self) -> u64 {
        self.counts_by_size.values().map(|c| c.non_pure).sum()
    }

    /// True when no divisor is removed, i.e. the pure locus is all of `M̄_{0,n}`.
    pub fn is_everything_pure(&self) -> bool {
        self.non_pure.is_empty()
    }
}

/// Classifies every canonical divisor of `M̄_{0,n}` as pure or non-pure for
/// the character `λ^k` of the degree-`d` cover.
pub fn enumerate_pure_locus(n: u64, d: u64, k: u64) -> Result<PureLocusReport> {
    check_character(d, k)?;
    let divisors = canonical_divisors(n)?;
    let regime = Regime::of(n, d);
    let mut warnings = Vec::new();
    if !regime.is_admissible() {
        warnings.push(LocusWarning::NeitherRegime);
    }
    if n == 4 {
        warnings.push(LocusWarning::SmallN);
    }
    let mut counts_by_size: BTreeMap<u64, SizeCounts> =
        (2..=n / 2).map(|m| (m, SizeCounts::default())).collect();
    let mut non_pure = Vec::new();
    for div in divisors {
        let entry = counts_by_size.entry(div.size()).or_default();
        if is_pure_divisor(&div, d, k)? {
            entry.pure += 1;
        } else {
            entry.non_pure += 1;
            non_pure.push(div);
        }
    }
    Ok(PureLocusReport {
        n,
        d,
        k,
        regime,
        warnings,
        non_pure,
        counts_by_size,
    })
}
