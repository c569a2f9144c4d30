//! Weight-one limiting mixed Hodge structures as dimension bookkeeping.
//!
//! A weight-one LMHS on an eigenspace of signature `(r, s)` is determined up
//! to dimensions by `a = rank N`: the Hodge–Deligne diagram has `a` boxes at
//! `(1,1)` and `(0,0)`, and `r - a`, `s - a` boxes at `(1,0)`, `(0,1)`.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::spectra::h11_eigen;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HodgeDeligneW1 {
    r: u64,
    s: u64,
    a: u64,
}

/// The four `I^{p,q}` dimensions of a weight-one diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DiagramPieces {
    pub i10: u64,
    pub i01: u64,
    pub i11: u64,
    pub i00: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LmhsType {
    Pure,
    TypeI,
}

impl HodgeDeligneW1 {
    pub fn new(r: u64, s: u64, a: u64) -> Result<Self> {
        if a > r.min(s) {
            return Err(invalid(format!(
                "rank of N ({a}) exceeds min(r, s) = {}",
                r.min(s)
            )));
        }
        Ok(HodgeDeligneW1 { r, s, a })
    }

    pub fn pieces(&self) -> DiagramPieces {
        DiagramPieces {
            i10: self.r - self.a,
            i01: self.s - self.a,
            i11: self.a,
            i00: self.a,
        }
    }

    pub fn signature(&self) -> (u64, u64) {
        (self.r, self.s)
    }

    pub fn rank_n(&self) -> u64 {
        self.a
    }
}

pub fn lmhs_type(h: &HodgeDeligneW1) -> LmhsType {
    if h.a == 0 {
        LmhsType::Pure
    } else {
        LmhsType::TypeI
    }
}

/// The `λ^k` part of the LMHS of a degeneration to `y^d + x^l` is pure iff
/// the vanishing cohomology has no `λ^k`-invariant `(1,1)` class, i.e. iff
/// `d ∤ k·l`.
pub fn purity_from_vanishing(d: u64, l: u64, k: u64) -> Result<bool> {
    Ok(h11_eigen(d, l, k)? == 0)
}

/// A local singularity `y^d + x^l` on the central fibre.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Singularity {
    pub d: u64,
    pub l: u64,
}

impl Singularity {
    pub fn new(d: u64, l: u64) -> Self {
        Singularity { d, l }
    }
}

fn eigen_h11s(sings: &[Singularity], k: u64) -> Result<Vec<u64>> {
    let Some(first) = sings.first() else {
        return Err(invalid("at least one singularity is required"));
    };
    if let Some(other) = sings.iter().find(|s| s.d != first.d) {
        return Err(invalid(format!(
            "all singularities must share the cover degree, found d={} and d={}",
            first.d, other.d
        )));
    }
    sings.iter().map(|s| h11_eigen(s.d, s.l, k)).collect()
}

/// Bounds `max_i h^{1,1}_k(V_i) <= h^{1,1}_{lim,k} <= Σ_i h^{1,1}_k(V_i)`.
/// When the central fibre has connected normalization the phantom part
/// vanishes and the upper bound is attained.
pub fn h11_lim_bounds(
    sings: &[Singularity],
    k: u64,
    connected_normalization: bool,
) -> Result<(u64, u64)> {
    let h = eigen_h11s(sings, k)?;
    let upper: u64 = h.iter().sum();
    let lower = if connected_normalization {
        upper
    } else {
        h.iter().copied().max().unwrap_or(0)
    };
    Ok((lower, upper))
}

/// Dimension balance of the `(1,1)` parts along the vanishing cycle sequence:
/// `Σ_i h^{1,1}_k(V_i) = h^{1,1}_{lim} + h^{1,1}_{ph}`, using `h^{1,1}(C_0) = 0`.
pub fn vanishing_balance(h11_lim: u64, h11_ph: u64, sings: &[Singularity], k: u64) -> Result<bool> {
    let total: u64 = eigen_h11s(sings, k)?.iter().sum();
    Ok(total == h11_lim + h11_ph)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lmhs_type_examples() {
        let pure = HodgeDeligneW1::new(1, 5, 0).unwrap();
        assert_eq!(lmhs_type(&pure), LmhsType::Pure);
        let t1 = HodgeDeligneW1::new(1, 5, 1).unwrap();
        assert_eq!(lmhs_type(&t1), LmhsType::TypeI);
        let p = t1.pieces();
        assert_eq!((p.i10, p.i01, p.i11, p.i00), (0, 4, 1, 1));
        assert!(HodgeDeligneW1::new(1, 5, 2).is_err());
    }

    #[test]
    fn pure_iff_diagonal_vanishes() {
        for r in 0..6 {
            for s in 0..6 {
                for a in 0..=r.min(s) {
                    let h = HodgeDeligneW1::new(r, s, a).unwrap();
                    let p = h.pieces();
                    assert_eq!(p.i10 + p.i11, r);
                    assert_eq!(p.i01 + p.i00, s);
                    assert_eq!(lmhs_type(&h) == LmhsType::Pure, p.i11 == 0 && p.i00 == 0);
                }
            }
        }
    }

    #[test]
    fn purity_examples() {
        assert!(!purity_from_vanishing(4, 4, 1).unwrap());
        assert!(purity_from_vanishing(4, 2, 1).unwrap());
        assert!(purity_from_vanishing(2, 3, 1).unwrap());
    }

    #[test]
    fn purity_matches_h11() {
        for d in 2..=20 {
            for l in 2..=20 {
                for k in 1..d {
                    assert_eq!(
                        purity_from_vanishing(d, l, k).unwrap(),
                        h11_eigen(d, l, k).unwrap() == 0
                    );
                }
            }
        }
    }

    #[test]
    fn bounds_examples() {
        let two = [Singularity::new(4, 2), Singularity::new(4, 2)];
        assert_eq!(h11_lim_bounds(&two, 2, false).unwrap(), (1, 2));
        assert_eq!(h11_lim_bounds(&two, 2, true).unwrap(), (2, 2));
        let one = [Singularity::new(4, 2)];
        assert_eq!(h11_lim_bounds(&one, 2, false).unwrap(), (1, 1));
        assert_eq!(h11_lim_bounds(&one, 2, true).unwrap(), (1, 1));
        assert!(h11_lim_bounds(&[], 1, false).is_err());
        assert!(
            h11_lim_bounds(&[Singularity::new(4, 2), Singularity::new(6, 2)], 1, false).is_err()
        );
    }

    #[test]
    fn bounds_are_ordered() {
        for d in 2..=8 {
            for l1 in 2..=8 {
                for l2 in 2..=8 {
                    for k in 1..d {
                        let s = [Singularity::new(d, l1), Singularity::new(d, l2)];
                        let (lo, hi) = h11_lim_bounds(&s, k, false).unwrap();
                        assert!(lo <= hi);
                        let (lo, hi) = h11_lim_bounds(&s, k, true).unwrap();
                        assert_eq!(lo, hi);
                        let (lo, hi) = h11_lim_bounds(&s[..1], k, false).unwrap();
                        assert_eq!(lo, hi);
                    }
                }
            }
        }
    }

    #[test]
    fn balance_examples() {
        let two = [Singularity::new(4, 2), Singularity::new(4, 2)];
        assert!(vanishing_balance(2, 0, &two, 2).unwrap());
        let one = [Singularity::new(4, 2)];
        assert!(vanishing_balance(0, 0, &one, 1).unwrap());
        assert!(!vanishing_balance(0, 0, &one, 2).unwrap());
        assert!(vanishing_balance(1, 1, &two, 2).unwrap());
    }
}
