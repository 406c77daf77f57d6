//! Weight-space dimensions of `S^m(C^2 ⊗ C^2 ⊗ C^2)`.
//!
//! `C^m_{k,r,n}` is the dimension of the weight space at
//! `(m - 2k, m - 2r, m - 2n)`. It has three routes here:
//!
//! * [`dim_closed_form`]: six case-split quartic polynomials, valid on the
//!   normalized region `m/2 ≥ k ≥ r ≥ n ≥ 0`;
//! * [`dim_by_convolution`]: the sum `Σ_{a,b} C^{m-k}_{a,b} C^k_{r-a,n-b}` of
//!   2×2 matrix counts from [`c2`];
//! * the monomial enumeration in [`crate::oracle`].
//!
//! [`dim_weight`] maps an arbitrary weight onto the normalized region using
//! the permutation and sign symmetries, and dispatches to the closed form.

use std::fmt;

use crate::error::{Error, Result};
use crate::types::{Count, Degree, Weight};

/// Count of 2×2 non-negative integer matrices with entry total `r1`,
/// second-row sum `r2` and second-column sum `r3`.
///
/// Equals `min{r2, r3, r1 - r2, r1 - r3} + 1` when `r2, r3 ≤ r1` and 0 otherwise.
pub fn c2(r1: u32, r2: u32, r3: u32) -> u64 {
    if r2 > r1 || r3 > r1 {
        return 0;
    }
    r2.min(r3).min(r1 - r2).min(r1 - r3) as u64 + 1
}

/// `C^m_{k,r,n}` as the convolution of two 2×2 matrix counts.
///
/// Valid for any `k ≤ m` (it is a plain count); returns 0 when `k > m`.
pub fn dim_by_convolution(m: Degree, k: u32, r: u32, n: u32) -> Result<Count> {
    if k > m {
        return Ok(0);
    }
    let mut total: Count = 0;
    for a in 0..=r {
        for b in 0..=n {
            let term = c2(m - k, a, b) as Count * c2(k, r - a, n - b) as Count;
            total = total
                .checked_add(term)
                .ok_or_else(|| Error::overflow(format!("convolution C^{m}_{{{k},{r},{n}}}")))?;
        }
    }
    Ok(total)
}

/// Index `(m, k, r, n)` in the normalized region `m/2 ≥ k ≥ r ≥ n ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SortedIndex {
    m: Degree,
    k: u32,
    r: u32,
    n: u32,
}

impl SortedIndex {
    pub fn new(m: Degree, k: u32, r: u32, n: u32) -> Option<Self> {
        (2 * k as u64 <= m as u64 && k >= r && r >= n).then_some(SortedIndex { m, k, r, n })
    }

    pub fn m(&self) -> Degree {
        self.m
    }
    pub fn k(&self) -> u32 {
        self.k
    }
    pub fn r(&self) -> u32 {
        self.r
    }
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Every normalized index of degree `m`, in `(k, r, n)`-lexicographic order.
    pub fn all(m: Degree) -> impl Iterator<Item = SortedIndex> {
        (0..=m / 2).flat_map(move |k| {
            (0..=k).flat_map(move |r| (0..=r).map(move |n| SortedIndex { m, k, r, n }))
        })
    }

    /// Which closed-form polynomial applies.
    pub fn case(&self) -> FormulaCase {
        let (m, k, rn) = (self.m as u64, self.k as u64, self.r as u64 + self.n as u64);
        let even_excess = (rn + k) % 2 == 0;
        if rn <= k {
            FormulaCase::I
        } else if rn < m - k {
            if even_excess {
                FormulaCase::II1
            } else {
                FormulaCase::II2
            }
        } else if m % 2 == 1 {
            FormulaCase::III3
        } else if even_excess {
            FormulaCase::III1
        } else {
            FormulaCase::III2
        }
    }
}

impl fmt::Display for SortedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(m={}, k={}, r={}, n={})",
            self.m, self.k, self.r, self.n
        )
    }
}

/// Region of the normalized index space, each with its own polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormulaCase {
    /// `r + n ≤ k`.
    I,
    /// `k < r + n < m - k`, `r + n - k` even.
    II1,
    /// `k < r + n < m - k`, `r + n - k` odd.
    II2,
    /// `m - k ≤ r + n`, `m` even, `r + n - k` even.
    III1,
    /// `m - k ≤ r + n`, `m` even, `r + n - k` odd.
    III2,
    /// `m - k ≤ r + n`, `m` odd.
    III3,
}

impl FormulaCase {
    pub const ALL: [FormulaCase; 6] = [
        FormulaCase::I,
        FormulaCase::II1,
        FormulaCase::II2,
        FormulaCase::III1,
        FormulaCase::III2,
        FormulaCase::III3,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            FormulaCase::I => "I",
            FormulaCase::II1 => "II.1",
            FormulaCase::II2 => "II.2",
            FormulaCase::III1 => "III.1",
            FormulaCase::III2 => "III.2",
            FormulaCase::III3 => "III.3",
        }
    }
}

impl fmt::Display for FormulaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One monomial `coef · k^a r^b n^c m^d` of a polynomial scaled by 48.
type Term = (i128, [u32; 4]);

const SCALE: i128 = 48;

const CASE_I: &[Term] = &[
    (48, [0, 0, 0, 0]),
    (64, [0, 0, 1, 0]),
    (4, [0, 0, 2, 0]),
    (-16, [0, 0, 3, 0]),
    (-4, [0, 0, 4, 0]),
    (48, [0, 1, 0, 0]),
    (88, [0, 1, 1, 0]),
    (48, [0, 1, 2, 0]),
    (8, [0, 1, 3, 0]),
];

/// Non-constant part shared by II.1 and II.2.
const CASE_II: &[Term] = &[
    (16, [1, 0, 0, 0]),
    (-20, [2, 0, 0, 0]),
    (8, [3, 0, 0, 0]),
    (-1, [4, 0, 0, 0]),
    (48, [0, 0, 1, 0]),
    (40, [1, 0, 1, 0]),
    (-24, [2, 0, 1, 0]),
    (4, [3, 0, 1, 0]),
    (-16, [0, 0, 2, 0]),
    (24, [1, 0, 2, 0]),
    (-6, [2, 0, 2, 0]),
    (-24, [0, 0, 3, 0]),
    (4, [1, 0, 3, 0]),
    (-5, [0, 0, 4, 0]),
    (32, [0, 1, 0, 0]),
    (40, [1, 1, 0, 0]),
    (-24, [2, 1, 0, 0]),
    (4, [3, 1, 0, 0]),
    (48, [0, 1, 1, 0]),
    (48, [1, 1, 1, 0]),
    (-12, [2, 1, 1, 0]),
    (24, [0, 1, 2, 0]),
    (12, [1, 1, 2, 0]),
    (4, [0, 1, 3, 0]),
    (-20, [0, 2, 0, 0]),
    (24, [1, 2, 0, 0]),
    (-6, [2, 2, 0, 0]),
    (-24, [0, 2, 1, 0]),
    (12, [1, 2, 1, 0]),
    (-6, [0, 2, 2, 0]),
    (-8, [0, 3, 0, 0]),
    (4, [1, 3, 0, 0]),
    (-4, [0, 3, 1, 0]),
    (-1, [0, 4, 0, 0]),
];

/// Non-constant part shared by III.1, III.2 and III.3.
const CASE_III: &[Term] = &[
    (-40, [2, 0, 0, 0]),
    (-2, [4, 0, 0, 0]),
    (16, [0, 0, 0, 1]),
    (40, [1, 0, 0, 1]),
    (24, [2, 0, 0, 1]),
    (4, [3, 0, 0, 1]),
    (-20, [0, 0, 0, 2]),
    (-24, [1, 0, 0, 2]),
    (-6, [2, 0, 0, 2]),
    (8, [0, 0, 0, 3]),
    (4, [1, 0, 0, 3]),
    (-1, [0, 0, 0, 4]),
    (32, [0, 0, 1, 0]),
    (-48, [2, 0, 1, 0]),
    (40, [0, 0, 1, 1]),
    (48, [1, 0, 1, 1]),
    (12, [2, 0, 1, 1]),
    (-24, [0, 0, 1, 2]),
    (-12, [1, 0, 1, 2]),
    (4, [0, 0, 1, 3]),
    (-36, [0, 0, 2, 0]),
    (-12, [2, 0, 2, 0]),
    (24, [0, 0, 2, 1]),
    (12, [1, 0, 2, 1]),
    (-6, [0, 0, 2, 2]),
    (-32, [0, 0, 3, 0]),
    (4, [0, 0, 3, 1]),
    (-6, [0, 0, 4, 0]),
    (16, [0, 1, 0, 0]),
    (-48, [2, 1, 0, 0]),
    (40, [0, 1, 0, 1]),
    (48, [1, 1, 0, 1]),
    (12, [2, 1, 0, 1]),
    (-24, [0, 1, 0, 2]),
    (-12, [1, 1, 0, 2]),
    (4, [0, 1, 0, 3]),
    (8, [0, 1, 1, 0]),
    (-24, [2, 1, 1, 0]),
    (48, [0, 1, 1, 1]),
    (24, [1, 1, 1, 1]),
    (-12, [0, 1, 1, 2]),
    (12, [0, 1, 2, 1]),
    (-40, [0, 2, 0, 0]),
    (-12, [2, 2, 0, 0]),
    (24, [0, 2, 0, 1]),
    (12, [1, 2, 0, 1]),
    (-6, [0, 2, 0, 2]),
    (-48, [0, 2, 1, 0]),
    (12, [0, 2, 1, 1]),
    (-12, [0, 2, 2, 0]),
    (-16, [0, 3, 0, 0]),
    (4, [0, 3, 0, 1]),
    (-8, [0, 3, 1, 0]),
    (-2, [0, 4, 0, 0]),
];

/// Evaluates `(constant + Σ terms) / 48` exactly.
fn eval_scaled(idx: &SortedIndex, constant: i128, terms: &[Term]) -> Result<Count> {
    let vars = [idx.k, idx.r, idx.n, idx.m].map(|v| v as i128);
    let overflow = || Error::overflow(format!("closed form at {idx}"));
    let mut acc = constant;
    for &(coef, exps) in terms {
        let mut t = coef;
        for (v, e) in vars.iter().zip(exps) {
            t = t
                .checked_mul(v.checked_pow(e).ok_or_else(overflow)?)
                .ok_or_else(overflow)?;
        }
        acc = acc.checked_add(t).ok_or_else(overflow)?;
    }
    assert!(
        acc % SCALE == 0,
        "closed form at {idx} ({}) is not an integer: {acc}/48; coefficient table is wrong",
        idx.case()
    );
    Ok(acc / SCALE)
}

/// `C^m_{k,r,n}` from the case-split closed-form polynomials.
///
/// # Panics
///
/// If a polynomial value is not divisible by 48. That can only come from a
/// wrong coefficient table, never from a valid input.
pub fn dim_closed_form(idx: SortedIndex) -> Result<Count> {
    match idx.case() {
        FormulaCase::I => eval_scaled(&idx, 0, CASE_I),
        FormulaCase::II1 => eval_scaled(&idx, 48, CASE_II),
        FormulaCase::II2 => eval_scaled(&idx, 45, CASE_II),
        FormulaCase::III1 => eval_scaled(&idx, 48, CASE_III),
        FormulaCase::III2 => eval_scaled(&idx, 42, CASE_III),
        FormulaCase::III3 => eval_scaled(&idx, 45, CASE_III),
    }
}

/// Maps weight `w` of `S^m` onto its normalized index, or `None` when the
/// weight space is empty (a component out of `[-m, m]` or of the wrong parity).
pub fn normalize(m: Degree, w: Weight) -> Option<SortedIndex> {
    let m64 = m as i64;
    let mut lowered = [0u32; 3];
    for (slot, l) in lowered.iter_mut().zip(w.components()) {
        let a = l.unsigned_abs();
        if a > m as u64 || (m64 - a as i64) % 2 != 0 {
            return None;
        }
        *slot = ((m as u64 - a) / 2) as u32;
    }
    lowered.sort_unstable_by(|a, b| b.cmp(a));
    let [k, r, n] = lowered;
    let idx = SortedIndex::new(m, k, r, n);
    debug_assert!(idx.is_some(), "sorted index out of region for m={m}, w={w}");
    idx
}

/// `dim S^m(C^2 ⊗ C^2 ⊗ C^2)_w` for any integer weight `w`.
pub fn dim_weight(m: Degree, w: Weight) -> Result<Count> {
    match normalize(m, w) {
        Some(idx) => dim_closed_form(idx),
        None => Ok(0),
    }
}
