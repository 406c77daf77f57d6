//! Brute-force ground truth. Nothing here calls into [`crate::dims`].
//!
//! The oracle enumerates the objects that the closed forms count: degree-`m`
//! monomials in the eight variables `x_{i,j,k}`, 2×2 matrices with given
//! margins, and pairs of such matrices.

use crate::error::{Error, Result};
use crate::types::{weight_of_monomial, Character, Count, Degree, MonomialExponents};

/// Enumeration caps. The defaults keep every call well under a second.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    /// Largest degree accepted by [`Oracle::enumerate_character`].
    pub monomial_cap: Degree,
    /// Largest matrix total accepted by the 2×2 and pair enumerations.
    pub matrix_cap: u32,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            monomial_cap: 20,
            matrix_cap: 200,
        }
    }
}

impl Oracle {
    pub fn with_monomial_cap(mut self, cap: Degree) -> Self {
        self.monomial_cap = cap;
        self
    }

    pub fn with_matrix_cap(mut self, cap: u32) -> Self {
        self.matrix_cap = cap;
        self
    }

    fn check(&self, value: u32, cap: u32) -> Result<()> {
        if value > cap {
            Err(Error::OracleCapExceeded { value, cap })
        } else {
            Ok(())
        }
    }

    /// Weight-count character of `S^m` by visiting every basis monomial once.
    pub fn enumerate_character(&self, m: Degree) -> Result<Character> {
        self.check(m, self.monomial_cap)?;
        let mut c = Character::new();
        for_each_monomial(m, |e| {
            c.add_count(weight_of_monomial(e), 1)
                .expect("tally below C(27, 7)");
        });
        Ok(c)
    }

    /// Number of 2×2 non-negative matrices with total `r1`, second-row sum
    /// `r2` and second-column sum `r3`, by trying every `a22`.
    pub fn c2_bruteforce(&self, r1: u32, r2: u32, r3: u32) -> Result<u64> {
        self.check(r1, self.matrix_cap)?;
        let (r1, r2, r3) = (r1 as i64, r2 as i64, r3 as i64);
        let count = (0..=r2.min(r3))
            .filter(|&a22| {
                let a21 = r2 - a22;
                let a12 = r3 - a22;
                let a11 = r1 - a21 - a12 - a22;
                a21 >= 0 && a12 >= 0 && a11 >= 0
            })
            .count();
        Ok(count as u64)
    }

    /// `|S|`: pairs of 2×2 blocks `(a_{0,·,·}, a_{1,·,·})` whose entries sum to
    /// `m - k` and `k`, with combined second-row sum `r` and combined
    /// second-column sum `n`.
    pub fn convolution_bruteforce(&self, m: Degree, k: u32, r: u32, n: u32) -> Result<Count> {
        self.check(m, self.matrix_cap)?;
        if k > m {
            return Ok(0);
        }
        let (m, k, r, n) = (m as i64, k as i64, r as i64, n as i64);
        let mut count: Count = 0;
        for a011 in 0..=r.min(n) {
            for a010 in 0..=r - a011 {
                for a001 in 0..=n - a011 {
                    let a000 = m - k - a001 - a010 - a011;
                    if a000 < 0 {
                        continue;
                    }
                    for a111 in 0..=(r - a010 - a011).min(n - a001 - a011) {
                        let a110 = r - a010 - a011 - a111;
                        let a101 = n - a001 - a011 - a111;
                        let a100 = k - a110 - a101 - a111;
                        if a100 >= 0 {
                            count += 1;
                        }
                    }
                }
            }
        }
        Ok(count)
    }
}

/// Calls `f` on every exponent tuple of degree `m`, each exactly once.
///
/// Seven exponents are looped over explicitly; `a_{0,0,0}` takes the rest.
pub fn for_each_monomial(m: Degree, mut f: impl FnMut(&MonomialExponents)) {
    let m = m as u64;
    for a1 in 0..=m {
        let s1 = m - a1;
        for a2 in 0..=s1 {
            let s2 = s1 - a2;
            for a3 in 0..=s2 {
                let s3 = s2 - a3;
                for a4 in 0..=s3 {
                    let s4 = s3 - a4;
                    for a5 in 0..=s4 {
                        let s5 = s4 - a5;
                        for a6 in 0..=s5 {
                            let s6 = s5 - a6;
                            for a7 in 0..=s6 {
                                let a0 = s6 - a7;
                                let e = MonomialExponents::from_flat(
                                    [a0, a1, a2, a3, a4, a5, a6, a7].map(|x| x as u32),
                                );
                                f(&e);
                            }
                        }
                    }
                }
            }
        }
    }
}
