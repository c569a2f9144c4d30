//! Cyclic covers `y^d = ∏(z - x_i)` of the projective line branched at `n`
//! points, and the Hodge numbers of their character eigenspaces.

use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::exact::Rational;

/// Which completion of the affine cover is available for `(n, d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Regime {
    /// `d | n`: infinity is unramified, all `n` branch points are finite.
    DividesN,
    /// `d ∤ n` and `gcd(d, n-1) = 1`: infinity is the `n`-th branch point.
    CoprimeNMinus1,
    /// Neither completion exists; codimension results do not apply.
    NeitherRegime,
}

impl Regime {
    pub fn of(n: u64, d: u64) -> Regime {
        if n.is_multiple_of(d) {
            Regime::DividesN
        } else if d.gcd(&(n - 1)) == 1 {
            Regime::CoprimeNMinus1
        } else {
            Regime::NeitherRegime
        }
    }

    pub fn is_admissible(self) -> bool {
        self != Regime::NeitherRegime
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Regime::DividesN => "DividesN",
            Regime::CoprimeNMinus1 => "CoprimeNMinus1",
            Regime::NeitherRegime => "NeitherRegime",
        };
        f.write_str(s)
    }
}

/// A cover instance: `n` branch points, degree `d`, character `λ^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CoverData {
    n: u64,
    d: u64,
    k: u64,
}

impl CoverData {
    /// Validates `n >= 4` and `d >= 2`, and reduces `k` modulo `d`.
    /// The trivial character `k ≡ 0` is rejected.
    pub fn new(n: u64, d: u64, k: i64) -> Result<Self> {
        if n < 4 {
            return Err(invalid(format!("n must be at least 4, got {n}")));
        }
        if d < 2 {
            return Err(invalid(format!("d must be at least 2, got {d}")));
        }
        let d_i = i64::try_from(d).map_err(|_| invalid("d too large"))?;
        let k = k.rem_euclid(d_i) as u64;
        if k == 0 {
            return Err(invalid("k must not be divisible by d"));
        }
        Ok(CoverData { n, d, k })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// The character ratio `k/d`, reduced.
    pub fn ratio(&self) -> Rational {
        Rational::new(self.k, self.d)
    }

    /// The conjugate character `d - k`.
    pub fn conjugate(&self) -> CoverData {
        CoverData {
            k: self.d - self.k,
            ..*self
        }
    }

    pub fn regime(&self) -> Regime {
        Regime::of(self.n, self.d)
    }
}

/// `(h^{1,0}_k, h^{0,1}_k)` of the `λ^k`-eigenspace of `H^1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EigenHodgeNumbers {
    pub h10: u64,
    pub h01: u64,
}

impl EigenHodgeNumbers {
    pub fn swap(self) -> Self {
        EigenHodgeNumbers {
            h10: self.h01,
            h01: self.h10,
        }
    }

    pub fn dimension(self) -> u64 {
        self.h10 + self.h01
    }
}

pub fn regime(c: &CoverData) -> Regime {
    c.regime()
}

fn ceil_minus_one(x: Rational) -> u64 {
    let v = (x - Rational::one()).ceil();
    // n·k/d > 0, so the ceiling of n·k/d - 1 is never negative.
    v.to_u64().expect("eigen-Hodge number out of range")
}

/// `h^{1,0} = ⌈n·k/d - 1⌉`, `h^{0,1} = ⌈n·(1 - k/d) - 1⌉`, valid in every regime.
pub fn eigen_hodge_numbers(c: &CoverData) -> EigenHodgeNumbers {
    let n = Rational::from_integer(c.n);
    let t = c.ratio();
    let h10 = ceil_minus_one(&n * &t);
    let h01 = ceil_minus_one(&n * &(Rational::one() - t));
    EigenHodgeNumbers { h10, h01 }
}

/// Signature `(r, s)` of the hermitian form on the eigenspace.
pub fn signature(c: &CoverData) -> (u64, u64) {
    let h = eigen_hodge_numbers(c);
    (h.h10, h.h01)
}

pub(crate) fn riemann_hurwitz_genus(n: u64, d: u64) -> Result<u64> {
    let twice = (d - 1)
        .checked_mul(n.saturating_sub(2))
        .ok_or_else(|| Error::TooLarge(format!("genus of (n={n}, d={d})")))?;
    if twice % 2 != 0 {
        return Err(Error::Inconsistent(format!(
            "(d-1)(n-2) = {twice} is odd for n={n}, d={d}; no such totally ramified cover"
        )));
    }
    Ok(twice / 2)
}

/// Genus `(d-1)(n-2)/2` of a cyclic cover totally ramified over `n` points.
pub fn genus(n: u64, d: u64) -> Result<u64> {
    if n < 3 {
        return Err(invalid(format!("genus needs n >= 3, got {n}")));
    }
    if d < 2 {
        return Err(invalid(format!("d must be at least 2, got {d}")));
    }
    riemann_hurwitz_genus(n, d)
}

/// Genus of the smooth projective model of `y^d = (z - x_1)···(z - x_n)`.
///
/// Infinity is a branch point of ramification index `d / gcd(n, d)` unless
/// `d | n`, so Riemann–Hurwitz gives
/// `2g = n(d-1) - d - gcd(n, d) + 2`, which reduces to `(d-1)(n-2)` when
/// `d | n`. This is the curve whose eigenspaces [`eigen_hodge_numbers`]
/// describes for every `(n, d)`.
pub fn affine_model_genus(n: u64, d: u64) -> Result<u64> {
    if n < 1 || d < 2 {
        return Err(invalid(format!("need n >= 1 and d >= 2, got n={n}, d={d}")));
    }
    let g = n.gcd(&d);
    let twice = n
        .checked_mul(d - 1)
        .and_then(|v| v.checked_add(2))
        .and_then(|v| v.checked_sub(d + g))
        .ok_or_else(|| Error::TooLarge(format!("genus of (n={n}, d={d})")))?;
    if twice % 2 != 0 {
        return Err(Error::Inconsistent(format!(
            "odd Euler characteristic for n={n}, d={d}"
        )));
    }
    Ok(twice / 2)
}

/// Checks `Σ_k (h^{1,0}_k + h^{0,1}_k) = 2·genus(n, d)` over the nontrivial
/// characters.
pub fn dimension_conservation(n: u64, d: u64) -> Result<bool> {
    if !Regime::of(n.max(1), d.max(1)).is_admissible() {
        return Err(Error::NotApplicable(format!(
            "(n={n}, d={d}) is in neither cover regime"
        )));
    }
    let g = genus(n, d)?;
    let mut total = 0u64;
    for k in 1..d {
        let c = CoverData::new(n, d, k as i64)?;
        total += eigen_hodge_numbers(&c).dimension();
    }
    Ok(total == 2 * g)
}
