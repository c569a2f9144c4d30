//! Eigenspectra of Brieskorn–Pham singularities `Σ z_j^{l_j}`.
//!
//! The Jacobian algebra of a Brieskorn–Pham polynomial has the monomial basis
//! `z^β` with `0 <= β_j <= l_j - 2`. Each basis element contributes one
//! spectrum entry with exponent `l(β) = Σ (β_j + 1)/l_j`; the entry sits in
//! weight `s + 1` exactly when `l(β)` is an integer and in weight `s`
//! otherwise, where `s + 1` is the number of variables.
//!
//! For the plane curve `y^d + x^l` the deck transformation `y ↦ λy` acts on
//! the basis element `x^a y^{k-1}` through the character `λ^k`, so each entry
//! also records `η = k/d`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::exact::Rational;

/// `f = Σ_j z_j^{l_j}` with every `l_j >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BrieskornPham {
    exponents: Vec<u64>,
    milnor: u64,
}

impl BrieskornPham {
    pub fn new(exponents: Vec<u64>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(invalid(
                "a Brieskorn-Pham polynomial needs at least one variable",
            ));
        }
        if let Some(bad) = exponents.iter().find(|&&l| l < 2) {
            return Err(invalid(format!("exponents must be at least 2, got {bad}")));
        }
        let milnor = exponents
            .iter()
            .try_fold(1u64, |acc, &l| acc.checked_mul(l - 1))
            .ok_or_else(|| Error::TooLarge(format!("Milnor number of {exponents:?}")))?;
        Ok(BrieskornPham { exponents, milnor })
    }

    /// The plane curve `x^l + y^d`, variables ordered `(x, y)`.
    pub fn curve(d: u64, l: u64) -> Result<Self> {
        Self::new(vec![l, d])
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// `s`, one less than the number of variables.
    pub fn s(&self) -> u64 {
        self.exponents.len() as u64 - 1
    }

    /// Quasi-homogeneous weights `1/l_j`.
    pub fn weights(&self) -> Vec<Rational> {
        self.exponents
            .iter()
            .map(|&l| Rational::new(1, l))
            .collect()
    }
}

/// Dimension of the Jacobian algebra, `Π (l_j - 1)`.
pub fn milnor_number(f: &BrieskornPham) -> u64 {
    f.milnor
}

/// All exponent vectors `β` with `0 <= β_j <= l_j - 2`, in lexicographic order.
pub fn jacobian_basis(f: &BrieskornPham) -> Vec<Vec<u64>> {
    let mut out = Vec::with_capacity(f.milnor as usize);
    let mut beta = vec![0u64; f.exponents.len()];
    loop {
        out.push(beta.clone());
        // odometer, last coordinate fastest
        let mut j = beta.len();
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            if beta[j] + 2 < f.exponents[j] {
                beta[j] += 1;
                for b in beta.iter_mut().skip(j + 1) {
                    *b = 0;
                }
                break;
            }
        }
    }
}

/// `l(β) = Σ (β_j + 1)/l_j`.
pub fn l_of_beta(beta: &[u64], f: &BrieskornPham) -> Result<Rational> {
    if beta.len() != f.exponents.len() {
        return Err(Error::LengthMismatch {
            expected: f.exponents.len(),
            got: beta.len(),
        });
    }
    if beta.iter().zip(&f.exponents).any(|(&b, &l)| b + 2 > l) {
        return Err(invalid(format!(
            "{beta:?} is outside the Jacobian basis of {:?}",
            f.exponents
        )));
    }
    Ok(beta
        .iter()
        .zip(&f.exponents)
        .map(|(&b, &l)| Rational::new(b + 1, l))
        .sum())
}

/// One spectrum entry. `alpha` is the exponent of the semisimple monodromy,
/// `eta` the exponent of the deck character.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SpectrumEntry {
    pub alpha: Rational,
    pub eta: Rational,
    pub weight: u64,
    #[serde(rename = "mult")]
    pub multiplicity: u64,
}

/// A multiset of spectrum entries, sorted by `(alpha, eta, weight)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Eigenspectra {
    s: u64,
    entries: Vec<SpectrumEntry>,
}

impl Eigenspectra {
    /// Merges equal `(alpha, eta, weight)` triples and sorts.
    pub fn from_entries(s: u64, entries: impl IntoIterator<Item = SpectrumEntry>) -> Self {
        let mut acc: BTreeMap<(Rational, Rational, u64), u64> = BTreeMap::new();
        for e in entries {
            *acc.entry((e.alpha, e.eta, e.weight)).or_default() += e.multiplicity;
        }
        let entries = acc
            .into_iter()
            .filter(|(_, m)| *m > 0)
            .map(|((alpha, eta, weight), multiplicity)| SpectrumEntry {
                alpha,
                eta,
                weight,
                multiplicity,
            })
            .collect();
        Eigenspectra { s, entries }
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// Total multiplicity of entries in the given weight.
    pub fn weight_count(&self, weight: u64) -> u64 {
        self.entries
            .iter()
            .filter(|e| e.weight == weight)
            .map(|e| e.multiplicity)
            .sum()
    }

    /// Whether the multiset is invariant under `alpha ↦ (s+1) - alpha`,
    /// `eta ↦ 1 - eta` (for `eta = 0`, `eta` stays fixed).
    pub fn is_symmetric(&self) -> bool {
        let top = Rational::from_integer(self.s + 1);
        let mirror = Eigenspectra::from_entries(
            self.s,
            self.entries.iter().map(|e| SpectrumEntry {
                alpha: &top - &e.alpha,
                eta: (Rational::one() - &e.eta).fract(),
                weight: e.weight,
                multiplicity: e.multiplicity,
            }),
        );
        mirror == *self
    }

    /// The alpha multiset, with repetitions, in sorted order.
    pub fn alphas(&self) -> Vec<Rational> {
        self.entries
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.alpha.clone(), e.multiplicity as usize))
            .collect()
    }
}

fn check_curve(d: u64, l: u64) -> Result<()> {
    if d < 2 || l < 2 {
        return Err(invalid(format!("need d, l >= 2, got d={d}, l={l}")));
    }
    Ok(())
}

/// Eigenspectra of `y^d + x^l`: one entry per basis monomial `x^a y^{k-1}`,
/// `0 <= a <= l-2`, `1 <= k <= d-1`, with `alpha = (a+1)/l + k/d`,
/// `eta = k/d` and weight 2 iff `alpha` is an integer.
pub fn eigenspectra_curve(d: u64, l: u64) -> Result<Eigenspectra> {
    check_curve(d, l)?;
    let f = BrieskornPham::curve(d, l)?;
    let mut entries = Vec::with_capacity(f.milnor as usize);
    for beta in jacobian_basis(&f) {
        let alpha = l_of_beta(&beta, &f)?;
        let k = beta[1] + 1;
        let weight = if alpha.is_integer() { f.s() + 1 } else { f.s() };
        entries.push(SpectrumEntry {
            alpha,
            eta: Rational::new(k, d),
            weight,
            multiplicity: 1,
        });
    }
    Ok(Eigenspectra::from_entries(f.s(), entries))
}

/// `dim Gr^W_{s+1} V_f` for `y^d + x^l`: the number of basis elements with
/// integral `l(β)`.
pub fn grw_top_dim(d: u64, l: u64) -> Result<u64> {
    check_curve(d, l)?;
    let f = BrieskornPham::curve(d, l)?;
    let mut count = 0;
    for beta in jacobian_basis(&f) {
        if l_of_beta(&beta, &f)?.is_integer() {
            count += 1;
        }
    }
    Ok(count)
}

/// Dimension of the `λ^k` piece of `V_f^{1,1}` for `y^d + x^l`: 1 if `d | k·l`,
/// else 0.
pub fn h11_eigen(d: u64, l: u64, k: u64) -> Result<u64> {
    check_curve(d, l)?;
    if k == 0 || k >= d {
        return Err(invalid(format!(
            "character index must satisfy 1 <= k < d, got k={k}, d={d}"
        )));
    }
    Ok(u64::from((k * l).is_multiple_of(d)))
}
