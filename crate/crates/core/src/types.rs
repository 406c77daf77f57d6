//! Weights, irreducible labels, formal characters and decompositions.
//!
//! Everything here is a plain value. Counts are `i128` and every arithmetic
//! step on them is checked, so overflow surfaces as [`Error::Overflow`].

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Exact count type for weight-space dimensions and multiplicities.
pub type Count = i128;

/// Degree of a symmetric power.
pub type Degree = u32;

/// Eigenvalue triple of `(H1, H2, H3)` on a weight vector.
///
/// Ordering is lexicographic on `(l1, l2, l3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub l1: i64,
    pub l2: i64,
    pub l3: i64,
}

impl Weight {
    pub const fn new(l1: i64, l2: i64, l3: i64) -> Self {
        Weight { l1, l2, l3 }
    }

    pub const fn components(&self) -> [i64; 3] {
        [self.l1, self.l2, self.l3]
    }

    pub fn from_components(c: [i64; 3]) -> Self {
        Weight::new(c[0], c[1], c[2])
    }

    /// True when every component is non-negative.
    pub fn is_dominant(&self) -> bool {
        self.components().iter().all(|&l| l >= 0)
    }
}

impl From<[i64; 3]> for Weight {
    fn from(c: [i64; 3]) -> Self {
        Weight::from_components(c)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.l1, self.l2, self.l3)
    }
}

/// The partial order `≼`: `lower ≼ upper` iff each component of `upper`
/// exceeds the matching component of `lower` by a non-negative even amount.
pub fn weight_leq(lower: Weight, upper: Weight) -> bool {
    lower
        .components()
        .iter()
        .zip(upper.components())
        .all(|(&m, l)| {
            let d = l as i128 - m as i128;
            d >= 0 && d % 2 == 0
        })
}

/// Label `(n1, n2, n3)` of the irreducible module `V(n1) ⊗ V(n2) ⊗ V(n3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrrepLabel {
    pub n1: u32,
    pub n2: u32,
    pub n3: u32,
}

impl IrrepLabel {
    pub const fn new(n1: u32, n2: u32, n3: u32) -> Self {
        IrrepLabel { n1, n2, n3 }
    }

    pub const fn components(&self) -> [u32; 3] {
        [self.n1, self.n2, self.n3]
    }

    /// `(n1 + 1)(n2 + 1)(n3 + 1)`; at most 2^96, so it cannot overflow.
    pub fn dimension(&self) -> Count {
        self.components().iter().map(|&n| n as Count + 1).product()
    }

    pub fn highest_weight(&self) -> Weight {
        Weight::new(self.n1 as i64, self.n2 as i64, self.n3 as i64)
    }

    /// The label whose highest weight is `w`, if `w` is dominant and fits.
    pub fn from_weight(w: Weight) -> Option<Self> {
        let [a, b, c] = w.components().map(|l| u32::try_from(l).ok());
        Some(IrrepLabel::new(a?, b?, c?))
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n1, self.n2, self.n3)
    }
}

/// Finitely supported formal character `Σ dim(M_λ) e^λ`.
///
/// Only strictly positive counts are stored, so two characters are equal
/// exactly when their maps are equal and the zero character is the empty map.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Character {
    entries: BTreeMap<Weight, Count>,
}

impl Character {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `delta` (possibly negative) to the count at `weight`.
    pub fn add_count(&mut self, weight: Weight, delta: Count) -> Result<()> {
        adjust(&mut self.entries, weight, delta, || {
            Error::NotSubcharacter { weight }
        })
    }

    pub fn get(&self, weight: Weight) -> Count {
        self.entries.get(&weight).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in ascending lexicographic weight order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (Weight, Count)> + '_ {
        self.entries.iter().map(|(&w, &c)| (w, c))
    }

    /// Entries in descending lexicographic weight order.
    pub fn iter_desc(&self) -> impl Iterator<Item = (Weight, Count)> + '_ {
        self.iter().rev()
    }

    pub fn weights(&self) -> impl Iterator<Item = Weight> + '_ {
        self.entries.keys().copied()
    }

    /// Lexicographically largest weight in the support.
    pub fn lex_max(&self) -> Option<(Weight, Count)> {
        self.entries.last_key_value().map(|(&w, &c)| (w, c))
    }

    /// Sum of all counts, the dimension of the module.
    pub fn total(&self) -> Result<Count> {
        self.entries.values().try_fold(0 as Count, |acc, &c| {
            acc.checked_add(c)
                .ok_or_else(|| Error::overflow("character total"))
        })
    }

    /// Pointwise sum.
    pub fn add(&self, other: &Character) -> Result<Character> {
        let mut out = self.clone();
        for (w, c) in other.iter() {
            out.add_count(w, c)?;
        }
        Ok(out)
    }

    /// Pointwise difference; fails with [`Error::NotSubcharacter`] unless
    /// `other` is pointwise at most `self`.
    pub fn sub(&self, other: &Character) -> Result<Character> {
        let mut out = self.clone();
        out.sub_assign(other)?;
        Ok(out)
    }

    /// In-place pointwise difference. On error `self` may be partially
    /// updated.
    pub fn sub_assign(&mut self, other: &Character) -> Result<()> {
        for (w, c) in other.iter() {
            self.add_count(w, -c)?;
        }
        Ok(())
    }

    /// `factor · self`; `factor` must be non-negative.
    pub fn scaled(&self, factor: Count) -> Result<Character> {
        assert!(factor >= 0, "negative character scale {factor}");
        let mut out = Character::new();
        if factor == 0 {
            return Ok(out);
        }
        for (w, c) in self.iter() {
            let v = c
                .checked_mul(factor)
                .ok_or_else(|| Error::overflow(format!("scaled count at {w}")))?;
            out.entries.insert(w, v);
        }
        Ok(out)
    }
}

/// Finite map from irreducible label to strictly positive multiplicity.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Decomposition {
    entries: BTreeMap<IrrepLabel, Count>,
}

impl Decomposition {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `delta` copies of `label`. A resulting negative multiplicity is
    /// reported as [`Error::NotModuleCharacter`] at the label's highest weight.
    pub fn add_count(&mut self, label: IrrepLabel, delta: Count) -> Result<()> {
        adjust(&mut self.entries, label, delta, || {
            Error::NotModuleCharacter {
                weight: label.highest_weight(),
            }
        })
    }

    pub fn get(&self, label: IrrepLabel) -> Count {
        self.entries.get(&label).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in descending lexicographic label order.
    pub fn iter_desc(&self) -> impl Iterator<Item = (IrrepLabel, Count)> + '_ {
        self.entries.iter().rev().map(|(&l, &c)| (l, c))
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (IrrepLabel, Count)> + '_ {
        self.entries.iter().map(|(&l, &c)| (l, c))
    }

    /// `Σ mult · (n1 + 1)(n2 + 1)(n3 + 1)`.
    pub fn total_dim(&self) -> Result<Count> {
        self.entries.iter().try_fold(0 as Count, |acc, (l, &c)| {
            c.checked_mul(l.dimension())
                .and_then(|d| acc.checked_add(d))
                .ok_or_else(|| Error::overflow(format!("total dimension at label {l}")))
        })
    }
}

impl FromIterator<(IrrepLabel, Count)> for Decomposition {
    /// Collects positive multiplicities; panics on a negative one.
    fn from_iter<I: IntoIterator<Item = (IrrepLabel, Count)>>(iter: I) -> Self {
        let mut d = Decomposition::new();
        for (l, c) in iter {
            d.add_count(l, c).expect("negative multiplicity");
        }
        d
    }
}

fn adjust<K: Ord + Copy>(
    map: &mut BTreeMap<K, Count>,
    key: K,
    delta: Count,
    negative: impl FnOnce() -> Error,
) -> Result<()> {
    if delta == 0 {
        return Ok(());
    }
    let current = map.get(&key).copied().unwrap_or(0);
    let next = current
        .checked_add(delta)
        .ok_or_else(|| Error::overflow("count update"))?;
    match next {
        0 => {
            map.remove(&key);
        }
        n if n < 0 => return Err(negative()),
        n => {
            map.insert(key, n);
        }
    }
    Ok(())
}

/// Exponents `a[i][j][k]` of the basis monomial `Π x_{i,j,k}^{a_{i,j,k}}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MonomialExponents {
    a: [u32; 8],
}

impl MonomialExponents {
    pub const fn zero() -> Self {
        MonomialExponents { a: [0; 8] }
    }

    const fn slot(i: usize, j: usize, k: usize) -> usize {
        assert!(i < 2 && j < 2 && k < 2);
        (i << 2) | (j << 1) | k
    }

    /// Builds exponents from a flat array indexed by `4i + 2j + k`.
    pub const fn from_flat(a: [u32; 8]) -> Self {
        MonomialExponents { a }
    }

    pub const fn flat(&self) -> [u32; 8] {
        self.a
    }

    pub const fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        self.a[Self::slot(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: u32) {
        self.a[Self::slot(i, j, k)] = value;
    }

    pub fn with(mut self, i: usize, j: usize, k: usize, value: u32) -> Self {
        self.set(i, j, k, value);
        self
    }

    /// Total degree `m = Σ a_{i,j,k}`.
    pub fn degree(&self) -> u64 {
        self.a.iter().map(|&x| x as u64).sum()
    }
}

/// Weight of a basis monomial: each factor `x_{i,j,k}` contributes
/// `(1 - 2i, 1 - 2j, 1 - 2k)`.
pub fn weight_of_monomial(e: &MonomialExponents) -> Weight {
    let m = e.degree() as i64;
    let mut lowered = [0i64; 3];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                let a = e.get(i, j, k) as i64;
                lowered[0] += a * i as i64;
                lowered[1] += a * j as i64;
                lowered[2] += a * k as i64;
            }
        }
    }
    Weight::from_components(lowered.map(|x| m - 2 * x))
}

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> Result<Count> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: Count = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc = acc
            .checked_mul((n - i) as Count)
            .ok_or_else(|| Error::overflow(format!("binomial({n}, {k})")))?
            / (i as Count + 1);
    }
    Ok(acc)
}

/// `dim S^m(C^2 ⊗ C^2 ⊗ C^2) = C(m + 7, 7)`.
pub fn symmetric_power_dimension(m: Degree) -> Result<Count> {
    binomial(m as u64 + 7, 7)
}
