//! GIT stability of weighted points on `P^1`, Hassett reductions, and the
//! codimension `H(n, d, k)` of the non-pure image in the GIT quotient.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::cover::Regime;
use crate::error::{invalid, Error, ParseError, Result};
use crate::exact::{EpsRational, Rational};

/// Largest `n` accepted by the exhaustive subset scan in [`blowup_loci`].
pub const MAX_SUBSET_SCAN_N: usize = 20;

/// Weights `w_1, ..., w_n` with `0 < w_i <= 1`, possibly involving `ε`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector {
    weights: Vec<EpsRational>,
    total: EpsRational,
    scaled: Option<ScaledWeights>,
}

/// The weights over a common denominator `D`: `w_i = (base_i + eps_i·ε) / D`.
/// Present only when every scaled entry fits in an `i64`, so that sums of
/// up to `2^63` terms cannot overflow an `i128`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct ScaledWeights {
    denom: i128,
    base: Vec<i128>,
    eps: Vec<i128>,
}

impl ScaledWeights {
    fn from_weights(weights: &[EpsRational]) -> Option<Self> {
        let mut denom = BigInt::one();
        for w in weights {
            denom = denom.lcm(w.base.denom()).lcm(w.eps_coeff.denom());
        }
        let scale = |r: &Rational| -> Option<i128> {
            let v = r.numer() * (&denom / r.denom());
            v.to_i64().map(i128::from)
        };
        let base = weights
            .iter()
            .map(|w| scale(&w.base))
            .collect::<Option<Vec<_>>>()?;
        let eps = weights
            .iter()
            .map(|w| scale(&w.eps_coeff))
            .collect::<Option<Vec<_>>>()?;
        let denom = denom.to_i64().map(i128::from)?;
        Some(ScaledWeights { denom, base, eps })
    }

    /// Compares the weight of a block (1-based labels) with 1.
    fn cmp_block_with_one(&self, block: &[usize]) -> Ordering {
        let (b, e) = block.iter().fold((0i128, 0i128), |(b, e), &i| {
            (b + self.base[i - 1], e + self.eps[i - 1])
        });
        b.cmp(&self.denom).then(e.cmp(&0))
    }
}

impl WeightVector {
    pub fn new(weights: Vec<EpsRational>) -> Result<Self> {
        if weights.is_empty() {
            return Err(invalid("weight vector is empty"));
        }
        let one = EpsRational::one();
        if let Some((i, w)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| !w.is_positive() || **w > one)
        {
            return Err(invalid(format!(
                "weight w_{} = {w} is not in (0, 1]",
                i + 1
            )));
        }
        let total = weights.iter().sum();
        let scaled = ScaledWeights::from_weights(&weights);
        Ok(WeightVector {
            weights,
            total,
            scaled,
        })
    }

    /// `n` copies of `w`.
    pub fn uniform(n: usize, w: EpsRational) -> Result<Self> {
        Self::new(vec![w; n])
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[EpsRational] {
        &self.weights
    }

    pub fn sum(&self) -> &EpsRational {
        &self.total
    }

    /// Total weight exactly 2, as required for the GIT quotient.
    pub fn is_git_mode(&self) -> bool {
        self.total == EpsRational::exact(Rational::from(2))
    }

    /// Total weight above 2, as required for a Hassett space.
    pub fn is_hassett_mode(&self) -> bool {
        self.total > EpsRational::exact(Rational::from(2))
    }

    fn block_sum(&self, block: &[usize]) -> EpsRational {
        block.iter().map(|&i| &self.weights[i - 1]).sum()
    }

    /// `Σ_{i∈block} w_i` compared with 1.
    pub fn cmp_block_with_one(&self, block: &[usize]) -> Ordering {
        match &self.scaled {
            Some(sc) => sc.cmp_block_with_one(block),
            None => self.block_sum(block).cmp(&EpsRational::one()),
        }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for WeightVector {
    type Err = Error;

    /// Comma-separated weights such as `1/7+e,1/7+e,1-2e`.
    fn from_str(s: &str) -> Result<Self> {
        let weights = s
            .split(',')
            .map(|t| t.parse::<EpsRational>())
            .collect::<std::result::Result<Vec<_>, _>>()?;
        WeightVector::new(weights)
    }
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.weights.iter())
    }
}

/// A partition of the labels `1..=n` into blocks of coincident points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CollisionPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl CollisionPartition {
    /// Blocks are 1-based; they must be nonempty, disjoint and cover `1..=n`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for block in &blocks {
            if block.is_empty() {
                return Err(invalid("partition has an empty block"));
            }
            for &i in block {
                if i == 0 || i > n {
                    return Err(invalid(format!("label {i} is outside 1..={n}")));
                }
                if seen[i] {
                    return Err(invalid(format!("label {i} appears twice")));
                }
                seen[i] = true;
            }
        }
        if let Some(missing) = (1..=n).find(|&i| !seen[i]) {
            return Err(invalid(format!("label {missing} is in no block")));
        }
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        Ok(CollisionPartition { n, blocks })
    }

    /// Every point on its own.
    pub fn discrete(n: usize) -> Self {
        CollisionPartition {
            n,
            blocks: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn largest_block(&self) -> usize {
        self.blocks.iter().map(Vec::len).max().unwrap_or(0)
    }
}

impl fmt::Display for CollisionPartition {
    /// Pipe-separated blocks, e.g. `1,2|3|4,5,6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&parts.join("|"))
    }
}

impl FromStr for CollisionPartition {
    type Err = Error;

    /// `n` is taken to be the largest label.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(ParseError::Partition(s.to_string()));
        let mut blocks = Vec::new();
        for part in s.split('|') {
            let block = part
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            blocks.push(block);
        }
        let n = blocks.iter().flatten().copied().max().ok_or_else(bad)?;
        CollisionPartition::new(n, blocks)
    }
}

/// Iterator over all set partitions of `1..=n`, via restricted growth strings.
pub struct SetPartitions {
    n: usize,
    rgs: Vec<usize>,
    maxes: Vec<usize>,
    done: bool,
}

/// All partitions of `1..=n`; there are Bell(n) of them.
pub fn set_partitions(n: usize) -> SetPartitions {
    SetPartitions {
        n,
        rgs: vec![0; n],
        maxes: vec![0; n],
        done: n == 0,
    }
}

impl SetPartitions {
    fn current(&self) -> CollisionPartition {
        let count = self.rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); count];
        for (i, &b) in self.rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        CollisionPartition { n: self.n, blocks }
    }

    fn advance(&mut self) {
        // rgs[i] <= 1 + max(rgs[..i]); maxes[i] caches max(rgs[..=i]).
        let mut i = self.n;
        while i > 1 {
            i -= 1;
            if self.rgs[i] <= self.maxes[i - 1] {
                self.rgs[i] += 1;
                self.maxes[i] = self.maxes[i - 1].max(self.rgs[i]);
                for j in i + 1..self.n {
                    self.rgs[j] = 0;
                    self.maxes[j] = self.maxes[j - 1];
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for SetPartitions {
    type Item = CollisionPartition;

    fn next(&mut self) -> Option<CollisionPartition> {
        if self.done {
            return None;
        }
        let p = self.current();
        self.advance();
        Some(p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Stability {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl fmt::Display for Stability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Stable iff every block has weight `< 1`, unstable iff some block has
/// weight `> 1`, strictly semistable otherwise.
pub fn git_stability(w: &WeightVector, p: &CollisionPartition) -> Result<Stability> {
    if w.len() != p.n() {
        return Err(Error::LengthMismatch {
            expected: w.len(),
            got: p.n(),
        });
    }
    if !w.is_git_mode() {
        return Err(invalid(format!(
            "GIT weights must sum to 2, got {}",
            w.sum()
        )));
    }
    let mut touches_one = false;
    for block in p.blocks() {
        match w.cmp_block_with_one(block) {
            Ordering::Greater => return Ok(Stability::Unstable),
            Ordering::Equal => touches_one = true,
            Ordering::Less => {}
        }
    }
    Ok(if touches_one {
        Stability::StrictlySemistable
    } else {
        Stability::Stable
    })
}

/// The linearization used for `(n, d)`: `(2/n)^n` when `d | n`, and
/// `(1/(n-1) + ε)^{n-1}, 1 - (n-1)ε` when `d ∤ n`, `gcd(d, n-1) = 1`.
/// `None` when neither regime applies.
pub fn canonical_weights(n: u64, d: u64) -> Result<Option<WeightVector>> {
    if n < 5 {
        return Err(invalid(format!("n must be at least 5, got {n}")));
    }
    if d < 2 {
        return Err(invalid(format!("d must be at least 2, got {d}")));
    }
    let n_us = usize::try_from(n).map_err(|_| Error::TooLarge(format!("n = {n}")))?;
    let wv = match Regime::of(n, d) {
        Regime::DividesN => WeightVector::uniform(n_us, EpsRational::exact(Rational::new(2, n)))?,
        Regime::CoprimeNMinus1 => {
            let mut ws = vec![EpsRational::new(Rational::new(1, n - 1), Rational::one()); n_us - 1];
            ws.push(EpsRational::new(
                Rational::one(),
                -Rational::from_integer(n - 1),
            ));
            WeightVector::new(ws)?
        }
        Regime::NeitherRegime => return Ok(None),
    };
    Ok(Some(wv))
}

/// Value of `H(n, d, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CodimResult {
    Finite(u64),
    Infinite,
    NotApplicable,
}

impl fmt::Display for CodimResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodimResult::Finite(m) => write!(f, "{m}"),
            CodimResult::Infinite => f.write_str("inf"),
            CodimResult::NotApplicable => f.write_str("not-applicable"),
        }
    }
}

impl Serialize for CodimResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CodimResult::Finite(m) => serializer.serialize_u64(*m),
            other => serializer.collect_str(other),
        }
    }
}

fn check_codim_args(n: u64, d: u64, k: u64) -> Result<()> {
    if n < 5 {
        return Err(invalid(format!("n must be at least 5, got {n}")));
    }
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

/// Closed form of `H(n, d, k)` from comparing `gcd(k, d)` to the threshold
/// `2d/n` (when `d | n`) or `d/(n-2)` (when `gcd(d, n-1) = 1`).
pub fn codim_h_closed(n: u64, d: u64, k: u64) -> Result<CodimResult> {
    check_codim_args(n, d, k)?;
    let g = k.gcd(&d);
    // g > t  <=>  g·den > num, with threshold t = num/den
    let (lhs, rhs) = match Regime::of(n, d) {
        Regime::DividesN => (g * n, 2 * d),
        Regime::CoprimeNMinus1 => (g * (n - 2), d),
        Regime::NeitherRegime => return Ok(CodimResult::NotApplicable),
    };
    Ok(match lhs.cmp(&rhs) {
        Ordering::Greater => CodimResult::Finite(d / g - 1),
        Ordering::Equal => CodimResult::Finite(n - 3),
        Ordering::Less => CodimResult::Infinite,
    })
}

/// Largest collision size that still maps to the GIT quotient: `⌊n/2⌋` when
/// `d | n`, `n - 2` in the coprime regime.
pub fn max_collision_size(n: u64, d: u64) -> Option<u64> {
    match Regime::of(n, d) {
        Regime::DividesN => Some(n / 2),
        Regime::CoprimeNMinus1 => Some(n - 2),
        Regime::NeitherRegime => None,
    }
}

/// Codimension in the GIT quotient of the image of the divisors where
/// `size` points collide: `size - 1`, except that `n/2` colliding points
/// (with `d | n`) are contracted to a point, of codimension `n - 3`.
pub fn reduction_image_codim(n: u64, d: u64, size: u64) -> Result<u64> {
    if n < 5 || d < 2 {
        return Err(invalid(format!("need n >= 5 and d >= 2, got n={n}, d={d}")));
    }
    let regime = Regime::of(n, d);
    let max = max_collision_size(n, d).ok_or_else(|| {
        Error::NotApplicable(format!("(n={n}, d={d}) is in neither cover regime"))
    })?;
    if size < 2 || size > max {
        return Err(invalid(format!(
            "collision size {size} is outside 2..={max} for (n={n}, d={d})"
        )));
    }
    if regime == Regime::DividesN && 2 * size == n {
        Ok(n - 3)
    } else {
        Ok(size - 1)
    }
}

/// `H(n, d, k)` by search: the smallest collision size `l` with `d | k·l`
/// gives the first non-pure stratum, whose image codimension is `H`.
pub fn codim_h_oracle(n: u64, d: u64, k: u64) -> Result<CodimResult> {
    check_codim_args(n, d, k)?;
    let Some(max) = max_collision_size(n, d) else {
        return Ok(CodimResult::NotApplicable);
    };
    match (2..=max).find(|&l| (k * l).is_multiple_of(d)) {
        Some(l) => Ok(CodimResult::Finite(reduction_image_codim(n, d, l)?)),
        None => Ok(CodimResult::Infinite),
    }
}

fn check_hassett(w: &WeightVector, name: &str) -> Result<()> {
    if !w.is_hassett_mode() {
        return Err(invalid(format!(
            "{name} weights must sum to more than 2, got {}",
            w.sum()
        )));
    }
    Ok(())
}

/// A reduction morphism `M̄_{0,a} → M̄_{0,c}` exists iff `a_i >= c_i` for all `i`.
pub fn hassett_reduction_exists(a: &WeightVector, c: &WeightVector) -> Result<bool> {
    if a.len() != c.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            got: c.len(),
        });
    }
    check_hassett(a, "source")?;
    check_hassett(c, "target")?;
    Ok(a.weights().iter().zip(c.weights()).all(|(x, y)| x >= y))
}

enum RunningSum<'a> {
    Scaled {
        w: &'a ScaledWeights,
        base: i128,
        eps: i128,
    },
    Exact {
        w: &'a WeightVector,
        sum: EpsRational,
    },
}

impl<'a> RunningSum<'a> {
    fn new(w: &'a WeightVector) -> Self {
        match &w.scaled {
            Some(sc) => RunningSum::Scaled {
                w: sc,
                base: 0,
                eps: 0,
            },
            None => RunningSum::Exact {
                w,
                sum: EpsRational::zero(),
            },
        }
    }

    fn toggle(&mut self, i: usize, add: bool) {
        match self {
            RunningSum::Scaled { w, base, eps } => {
                let sign = if add { 1 } else { -1 };
                *base += sign * w.base[i];
                *eps += sign * w.eps[i];
            }
            RunningSum::Exact { w, sum } => {
                *sum = if add {
                    &*sum + &w.weights[i]
                } else {
                    &*sum - &w.weights[i]
                };
            }
        }
    }

    fn is_one(&self) -> bool {
        match self {
            RunningSum::Scaled { w, base, eps } => *base == w.denom && *eps == 0,
            RunningSum::Exact { sum, .. } => *sum == EpsRational::one(),
        }
    }
}

/// Index sets `I` (1-based) with `Σ_{i∈I} w_i = 1`, one per pair `{I, I^c}`:
/// the smaller side, or the side containing 1 on a tie. An empty result means
/// the Hassett-to-GIT morphism is an isomorphism.
pub fn blowup_loci(w: &WeightVector) -> Result<Vec<Vec<usize>>> {
    if !w.is_git_mode() {
        return Err(invalid(format!(
            "GIT weights must sum to 2, got {}",
            w.sum()
        )));
    }
    let n = w.len();
    if n > MAX_SUBSET_SCAN_N {
        return Err(Error::TooLarge(format!(
            "subset scan is limited to n <= {MAX_SUBSET_SCAN_N}, got {n}"
        )));
    }
    let mut out = Vec::new();
    // Walk subsets in Gray-code order so each step adds or removes one weight.
    let mut running = RunningSum::new(w);
    let mut mask: u64 = 0;
    for step in 1u64..(1u64 << n) {
        let bit = step.trailing_zeros() as usize;
        running.toggle(bit, mask & (1 << bit) == 0);
        mask ^= 1 << bit;
        let size = mask.count_ones() as usize;
        let canonical = 2 * size < n || (2 * size == n && mask & 1 == 1);
        if canonical && running.is_one() {
            out.push(
                (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| i + 1)
                    .collect(),
            );
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uniform(n: usize, p: i64, q: i64) -> WeightVector {
        WeightVector::uniform(n, EpsRational::exact(Rational::new(p, q))).unwrap()
    }

    fn part(s: &str) -> CollisionPartition {
        s.parse().unwrap()
    }

    #[test]
    fn stability_examples() {
        let w = uniform(6, 1, 3);
        assert_eq!(
            git_stability(&w, &part("1,2,3|4|5|6")).unwrap(),
            Stability::StrictlySemistable
        );
        assert_eq!(
            git_stability(&w, &part("1,2,3,4|5|6")).unwrap(),
            Stability::Unstable
        );
        assert_eq!(
            git_stability(&w, &CollisionPartition::discrete(6)).unwrap(),
            Stability::Stable
        );
        assert_eq!(
            git_stability(&w, &part("1,2|3,4|5,6")).unwrap(),
            Stability::Stable
        );
    }

    #[test]
    fn stability_errors() {
        let w = uniform(6, 1, 3);
        assert!(matches!(
            git_stability(&w, &CollisionPartition::discrete(5)),
            Err(Error::LengthMismatch { .. })
        ));
        let light = uniform(6, 1, 4);
        assert!(git_stability(&light, &CollisionPartition::discrete(6)).is_err());
    }

    #[test]
    fn partition_parsing() {
        let p = part("4,5,6|1,2|3");
        assert_eq!(p.blocks(), &[vec![1, 2], vec![3], vec![4, 5, 6]]);
        assert_eq!(p.to_string(), "1,2|3|4,5,6");
        assert!("1,2|2,3".parse::<CollisionPartition>().is_err());
        assert!("1,3".parse::<CollisionPartition>().is_err());
        assert!("1,x".parse::<CollisionPartition>().is_err());
        assert!("1||2".parse::<CollisionPartition>().is_err());
    }

    #[test]
    fn bell_numbers() {
        let bell = [1usize, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &b) in bell.iter().enumerate().skip(1) {
            assert_eq!(set_partitions(n).count(), b, "n={n}");
        }
        assert_eq!(set_partitions(0).count(), 0);
    }

    #[test]
    fn canonical_weight_examples() {
        let w = canonical_weights(8, 4).unwrap().unwrap();
        assert_eq!(w, uniform(8, 1, 4));
        assert!(w.is_git_mode());

        let w = canonical_weights(8, 6).unwrap().unwrap();
        let small = EpsRational::new(Rational::new(1, 7), Rational::one());
        assert!(w.weights()[..7].iter().all(|x| *x == small));
        assert_eq!(
            w.weights()[7],
            EpsRational::new(Rational::one(), Rational::from(-7))
        );
        assert!(w.is_git_mode());

        assert_eq!(canonical_weights(9, 6).unwrap(), None);
        assert!(canonical_weights(4, 2).is_err());
    }

    #[test]
    fn coprime_weights_keep_last_point_apart() {
        let w = canonical_weights(8, 6).unwrap().unwrap();
        // the first n-2 points may collide, n-1 of them may not
        assert_eq!(
            git_stability(&w, &part("1,2,3,4,5,6|7|8")).unwrap(),
            Stability::Stable
        );
        assert_eq!(
            git_stability(&w, &part("1,2,3,4,5,6,7|8")).unwrap(),
            Stability::Unstable
        );
        assert_eq!(
            git_stability(&w, &part("1,8|2|3|4|5|6|7")).unwrap(),
            Stability::Unstable
        );
        assert!(blowup_loci(&w).unwrap().is_empty());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(codim_h_closed(6, 2, 1).unwrap(), CodimResult::Finite(1));
        assert_eq!(codim_h_closed(8, 6, 1).unwrap(), CodimResult::Finite(5));
        assert_eq!(codim_h_closed(12, 12, 5).unwrap(), CodimResult::Infinite);
        assert_eq!(codim_h_closed(9, 6, 1).unwrap(), CodimResult::NotApplicable);
        assert!(codim_h_closed(4, 2, 1).is_err());
        assert!(codim_h_closed(6, 2, 2).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(codim_h_oracle(12, 6, 1).unwrap(), CodimResult::Finite(9));
        assert_eq!(codim_h_oracle(10, 4, 1).unwrap(), CodimResult::Finite(3));
        assert_eq!(codim_h_oracle(5, 5, 2).unwrap(), CodimResult::Infinite);
        assert_eq!(codim_h_oracle(9, 6, 1).unwrap(), CodimResult::NotApplicable);
    }

    #[test]
    fn closed_matches_oracle_small() {
        for n in 5..=20 {
            for d in 2..=15 {
                for k in 1..d {
                    assert_eq!(
                        codim_h_closed(n, d, k).unwrap(),
                        codim_h_oracle(n, d, k).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn reduction_codim_examples() {
        assert_eq!(reduction_image_codim(8, 4, 2).unwrap(), 1);
        assert_eq!(reduction_image_codim(8, 4, 4).unwrap(), 5);
        assert_eq!(reduction_image_codim(8, 6, 6).unwrap(), 5);
        assert!(reduction_image_codim(8, 4, 5).is_err());
        assert!(reduction_image_codim(8, 4, 1).is_err());
        assert!(matches!(
            reduction_image_codim(9, 6, 2),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn hassett_examples() {
        for n in 5..=9 {
            let dm = uniform(n, 1, 1);
            let c = WeightVector::uniform(
                n,
                EpsRational::new(Rational::new(2, n as i64), Rational::one()),
            )
            .unwrap();
            assert!(hassett_reduction_exists(&dm, &c).unwrap());
            assert!(!hassett_reduction_exists(&c, &dm).unwrap());
            assert!(hassett_reduction_exists(&c, &c).unwrap());
        }
        let a: WeightVector = "1/2,1,1,1,1".parse().unwrap();
        let c: WeightVector = "3/4,1/2,1/2,1/2,1/2".parse().unwrap();
        assert!(!hassett_reduction_exists(&a, &c).unwrap());
        assert!(hassett_reduction_exists(&a, &uniform(4, 1, 1)).is_err());
        assert!(hassett_reduction_exists(&a, &uniform(5, 2, 5)).is_err());
    }

    #[test]
    fn blowup_examples() {
        let loci = blowup_loci(&uniform(6, 1, 3)).unwrap();
        assert_eq!(loci.len(), 10);
        assert!(loci.iter().all(|s| s.len() == 3 && s[0] == 1));
        assert_eq!(blowup_loci(&uniform(8, 1, 4)).unwrap().len(), 35);
        let generic: WeightVector = "23/41,27/41,4/41,1/41,5/41,16/41,3/41,3/41"
            .parse()
            .unwrap();
        assert!(generic.is_git_mode(), "sum = {}", generic.sum());
        assert!(blowup_loci(&generic).unwrap().is_empty());
        assert!(blowup_loci(&uniform(6, 1, 4)).is_err());
    }

    #[test]
    fn weight_vector_validation() {
        assert!("0,1".parse::<WeightVector>().is_err());
        assert!("3/2,1/2".parse::<WeightVector>().is_err());
        assert!("1+e".parse::<WeightVector>().is_err());
        assert!("1-e".parse::<WeightVector>().is_ok());
        assert!("".parse::<WeightVector>().is_err());
    }

    #[test]
    fn fast_block_compare_agrees_with_exact_sums() {
        let vectors = [
            uniform(6, 1, 3),
            canonical_weights(8, 6).unwrap().unwrap(),
            "23/41,27/41,4/41,1/41,5/41,16/41,3/41,3/41"
                .parse()
                .unwrap(),
            "1/2+3/4e,1/2-3/4e,1/3,2/3".parse().unwrap(),
        ];
        for w in &vectors {
            assert!(w.scaled.is_some());
            for p in set_partitions(w.len()) {
                for b in p.blocks() {
                    assert_eq!(
                        w.cmp_block_with_one(b),
                        w.block_sum(b).cmp(&EpsRational::one())
                    );
                }
            }
        }
        let huge = format!("1/{m},1,{}/{m}", u64::MAX - 1, m = u64::MAX);
        let w: WeightVector = huge.parse().unwrap();
        assert!(w.scaled.is_none());
        assert_eq!(blowup_loci(&w).unwrap(), vec![vec![2]]);
        assert_eq!(w.cmp_block_with_one(&[1, 3]), Ordering::Equal);
        assert_eq!(
            git_stability(&w, &"1,3|2".parse().unwrap()).unwrap(),
            Stability::StrictlySemistable
        );
    }

    #[test]
    fn codim_display() {
        assert_eq!(CodimResult::Finite(3).to_string(), "3");
        assert_eq!(CodimResult::Infinite.to_string(), "inf");
        assert_eq!(CodimResult::NotApplicable.to_string(), "not-applicable");
    }
}
