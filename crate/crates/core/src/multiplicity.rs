//! Multiplicities of irreducibles by inclusion-exclusion over the eight
//! corners `(n1 + 2ε1, n2 + 2ε2, n3 + 2ε3)`, `ε ∈ {0,1}^3`.

use crate::dims::dim_weight;
use crate::error::{Error, Result};
use crate::types::{Character, Count, Decomposition, Degree, IrrepLabel, Weight};

/// Corner weights with their inclusion-exclusion signs.
fn corners(label: IrrepLabel) -> impl Iterator<Item = (Weight, Count)> {
    let [n1, n2, n3] = label.components().map(|n| n as i64);
    (0..8u8).map(move |bits| {
        let e = |b: u8| ((bits >> b) & 1) as i64;
        let sign = if bits.count_ones() % 2 == 0 { 1 } else { -1 };
        (
            Weight::new(n1 + 2 * e(0), n2 + 2 * e(1), n3 + 2 * e(2)),
            sign,
        )
    })
}

fn alternating_sum(
    label: IrrepLabel,
    mut dim_at: impl FnMut(Weight) -> Result<Count>,
) -> Result<Count> {
    let overflow = || Error::overflow(format!("multiplicity of label {label}"));
    corners(label).try_fold(0 as Count, |acc, (w, sign)| {
        let d = dim_at(w).map_err(|e| match e {
            Error::Overflow { .. } => overflow(),
            other => other,
        })?;
        acc.checked_add(sign * d).ok_or_else(overflow)
    })
}

/// Multiplicity of `V(n1) ⊗ V(n2) ⊗ V(n3)` in `S^m(C^2 ⊗ C^2 ⊗ C^2)`.
///
/// Zero without further work when a component exceeds `m` or differs from
/// `m` in parity.
pub fn multiplicity_sym(m: Degree, label: IrrepLabel) -> Result<Count> {
    if label
        .components()
        .iter()
        .any(|&n| n > m || !(m - n).is_multiple_of(2))
    {
        return Ok(0);
    }
    let x = alternating_sum(label, |w| dim_weight(m, w))?;
    debug_assert!(x >= 0, "negative multiplicity {x} for {label} in S^{m}");
    Ok(x)
}

/// Inclusion-exclusion multiplicity read from an arbitrary character.
///
/// The value is returned signed: a negative result means `c` is not the
/// character of a module.
pub fn multiplicity_general(c: &Character, label: IrrepLabel) -> Result<Count> {
    alternating_sum(label, |w| Ok(c.get(w)))
}

/// Full decomposition of `S^m`: every label with components in
/// `{m mod 2, m mod 2 + 2, ..., m}` and positive multiplicity.
pub fn decompose_symmetric_power(m: Degree) -> Result<Decomposition> {
    let mut out = Decomposition::new();
    let range = || (m % 2..=m).step_by(2);
    for n1 in range() {
        for n2 in range() {
            for n3 in range() {
                let label = IrrepLabel::new(n1, n2, n3);
                out.add_count(label, multiplicity_sym(m, label)?)?;
            }
        }
    }
    Ok(out)
}
