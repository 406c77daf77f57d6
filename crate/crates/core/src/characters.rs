//! Formal characters of irreducibles and symmetric powers, and the greedy
//! peel-off decomposition.

use crate::dims::dim_weight;
use crate::error::{Error, Result};
use crate::types::{weight_leq, Character, Count, Decomposition, Degree, IrrepLabel, Weight};

/// Weights `n, n-2, ..., -n` of the sl2 module `V(n)`, each with dimension 1.
pub fn character_sl2(n: u32) -> Vec<(i64, Count)> {
    let n = n as i64;
    (0..=n).map(|i| (n - 2 * i, 1)).collect()
}

/// Character of `V(n1) ⊗ V(n2) ⊗ V(n3)`: every weight has dimension 1.
pub fn character_irrep(label: IrrepLabel) -> Character {
    let mut c = Character::new();
    for (l1, _) in character_sl2(label.n1) {
        for (l2, _) in character_sl2(label.n2) {
            for (l3, _) in character_sl2(label.n3) {
                c.add_count(Weight::new(l1, l2, l3), 1)
                    .expect("fresh weight with count 1");
            }
        }
    }
    c
}

/// Character of `S^m(C^2 ⊗ C^2 ⊗ C^2)` assembled from [`dim_weight`] on the
/// lattice `{(m - 2k, m - 2r, m - 2n) : 0 ≤ k, r, n ≤ m}`.
pub fn character_symmetric_power(m: Degree) -> Result<Character> {
    let mut c = Character::new();
    let top = m as i64;
    for k in 0..=top {
        for r in 0..=top {
            for n in 0..=top {
                let w = Weight::new(top - 2 * k, top - 2 * r, top - 2 * n);
                c.add_count(w, dim_weight(m, w)?)?;
            }
        }
    }
    Ok(c)
}

/// `Σ mult · ch(label)` over a decomposition.
pub fn character_of_decomposition(d: &Decomposition) -> Result<Character> {
    let mut c = Character::new();
    for (label, mult) in d.iter() {
        for (w, _) in character_irrep(label).iter() {
            c.add_count(w, mult)?;
        }
    }
    Ok(c)
}

/// Maximal support weights under `≼`, in descending lexicographic order.
pub fn maximal_weights(c: &Character) -> Result<Vec<Weight>> {
    if c.is_empty() {
        return Err(Error::EmptyCharacter);
    }
    let support: Vec<Weight> = c.weights().collect();
    Ok(support
        .iter()
        .rev()
        .filter(|&&w| !support.iter().any(|&u| u != w && weight_leq(w, u)))
        .copied()
        .collect())
}

/// Greedy decomposition: repeatedly take a maximal weight of the remainder,
/// subtract one copy of the irreducible with that highest weight, and stop
/// when the remainder vanishes.
///
/// Among several maximal weights the lexicographically largest is taken. The
/// lexicographic maximum of the support is always `≼`-maximal, because
/// `w ≼ u` with `u ≠ w` forces `u` lexicographically above `w`.
pub fn greedy_decompose(c: &Character) -> Result<Decomposition> {
    let mut remainder = c.clone();
    let mut out = Decomposition::new();
    while let Some((top, _)) = remainder.lex_max() {
        let label =
            IrrepLabel::from_weight(top).ok_or(Error::NotModuleCharacter { weight: top })?;
        remainder
            .sub_assign(&character_irrep(label))
            .map_err(|e| match e {
                Error::NotSubcharacter { weight } => Error::NotModuleCharacter { weight },
                other => other,
            })?;
        out.add_count(label, 1)?;
    }
    Ok(out)
}
