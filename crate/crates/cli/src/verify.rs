//! Cross-checks of every closed form against the brute-force oracle.

use std::fmt;

use clap::ValueEnum;
use symcube::{
    c2, character_symmetric_power, decompose_symmetric_power, dim_by_convolution, dim_closed_form,
    greedy_decompose, multiplicity_sym, symmetric_power_dimension, Count, IrrepLabel, Oracle,
    SortedIndex,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Mode {
    /// Monomial enumeration up to degree 12.
    #[default]
    Ci,
    /// Monomial enumeration up to degree 20.
    Extended,
}

impl Mode {
    pub fn enumeration_cap(self) -> u32 {
        match self {
            Mode::Ci => 12,
            Mode::Extended => 20,
        }
    }
}

/// Largest 2×2 matrix total compared exhaustively.
pub const C2_RANGE: u32 = 40;

/// Largest degree for which greedy peeling is compared with inclusion-exclusion.
pub const GREEDY_RANGE: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divergence {
    /// `(m, k, r, n)`; only `m` is meaningful for whole-degree checks.
    pub index: (u32, u32, u32, u32),
    pub detail: String,
}

impl fmt::Display for Divergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, k, r, n) = self.index;
        write!(
            f,
            "first divergence at (m, k, r, n) = ({m}, {k}, {r}, {n}): {}",
            self.detail
        )
    }
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub scope: String,
    pub divergence: Option<Divergence>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.divergence.is_none()
    }
}

type Found = symcube::Result<Option<Divergence>>;

/// Closed form vs convolution vs direct pair enumeration on every normalized
/// index with `m ≤ max_m`.
pub fn check_routes(
    max_m: u32,
    closed: impl Fn(SortedIndex) -> symcube::Result<Count>,
    convolution: impl Fn(u32, u32, u32, u32) -> symcube::Result<Count>,
    brute: impl Fn(u32, u32, u32, u32) -> symcube::Result<Count>,
) -> Found {
    for m in 0..=max_m {
        for idx in SortedIndex::all(m) {
            let (k, r, n) = (idx.k(), idx.r(), idx.n());
            let a = closed(idx)?;
            let b = convolution(m, k, r, n)?;
            let c = brute(m, k, r, n)?;
            if a != b || b != c {
                return Ok(Some(Divergence {
                    index: (m, k, r, n),
                    detail: format!(
                        "closed form ({}) {a}, convolution {b}, enumeration {c}",
                        idx.case()
                    ),
                }));
            }
        }
    }
    Ok(None)
}

fn check_c2(oracle: &Oracle) -> Found {
    for r1 in 0..=C2_RANGE {
        for r2 in 0..=r1 {
            for r3 in 0..=r1 {
                let fast = c2(r1, r2, r3);
                let slow = oracle.c2_bruteforce(r1, r2, r3)?;
                if fast != slow {
                    return Ok(Some(Divergence {
                        index: (r1, 0, r2, r3),
                        detail: format!(
                            "2x2 count ({r1}, {r2}, {r3}): formula {fast}, enumeration {slow}"
                        ),
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn check_enumeration(oracle: &Oracle, max_m: u32) -> Found {
    for m in 0..=max_m {
        let fast = character_symmetric_power(m)?;
        let slow = oracle.enumerate_character(m)?;
        if fast == slow {
            continue;
        }
        let w = fast
            .weights()
            .chain(slow.weights())
            .find(|&w| fast.get(w) != slow.get(w))
            .expect("unequal characters differ somewhere");
        let lower = |l: i64| ((m as i64 - l) / 2) as u32;
        return Ok(Some(Divergence {
            index: (m, lower(w.l1), lower(w.l2), lower(w.l3)),
            detail: format!(
                "weight {w}: closed form {}, enumeration {}",
                fast.get(w),
                slow.get(w)
            ),
        }));
    }
    Ok(None)
}

fn check_checksum(max_m: u32) -> Found {
    for m in 0..=max_m {
        let total = decompose_symmetric_power(m)?.total_dim()?;
        let want = symmetric_power_dimension(m)?;
        if total != want {
            return Ok(Some(Divergence {
                index: (m, 0, 0, 0),
                detail: format!("decomposition dimension {total}, expected C(m+7,7) = {want}"),
            }));
        }
    }
    Ok(None)
}

fn check_greedy(max_m: u32) -> Found {
    for m in 0..=max_m {
        let greedy = greedy_decompose(&character_symmetric_power(m)?)?;
        let direct = decompose_symmetric_power(m)?;
        if greedy != direct {
            let label = greedy
                .iter()
                .chain(direct.iter())
                .map(|(l, _)| l)
                .find(|&l| greedy.get(l) != direct.get(l))
                .expect("unequal decompositions differ somewhere");
            return Ok(Some(Divergence {
                index: (m, 0, 0, 0),
                detail: format!(
                    "label {label}: greedy {}, inclusion-exclusion {}",
                    greedy.get(label),
                    direct.get(label)
                ),
            }));
        }
    }
    Ok(None)
}

fn check_invariants(max_m: u32) -> Found {
    for m in 0..=max_m {
        let x = multiplicity_sym(m, IrrepLabel::new(0, 0, 0))?;
        let want = Count::from(m % 4 == 0);
        if x != want {
            return Ok(Some(Divergence {
                index: (m, 0, 0, 0),
                detail: format!("trivial module multiplicity {x}, expected {want}"),
            }));
        }
    }
    Ok(None)
}

pub fn run(max_m: u32, mode: Mode) -> symcube::Result<Vec<CheckOutcome>> {
    let oracle = Oracle::default()
        .with_monomial_cap(mode.enumeration_cap())
        .with_matrix_cap(max_m.max(C2_RANGE));
    let enum_max = max_m.min(mode.enumeration_cap());
    let greedy_max = max_m.min(GREEDY_RANGE);

    Ok(vec![
        CheckOutcome {
            name: "2x2 matrix count",
            scope: format!("r1 <= {C2_RANGE}"),
            divergence: check_c2(&oracle)?,
        },
        CheckOutcome {
            name: "closed form = convolution = pair enumeration",
            scope: format!("m <= {max_m}"),
            divergence: check_routes(max_m, dim_closed_form, dim_by_convolution, |m, k, r, n| {
                oracle.convolution_bruteforce(m, k, r, n)
            })?,
        },
        CheckOutcome {
            name: "character = monomial enumeration",
            scope: format!("m <= {enum_max}"),
            divergence: check_enumeration(&oracle, enum_max)?,
        },
        CheckOutcome {
            name: "decomposition dimension checksum",
            scope: format!("m <= {max_m}"),
            divergence: check_checksum(max_m)?,
        },
        CheckOutcome {
            name: "greedy = inclusion-exclusion",
            scope: format!("m <= {greedy_max}"),
            divergence: check_greedy(greedy_max)?,
        },
        CheckOutcome {
            name: "trivial module once every fourth degree",
            scope: format!("m <= {max_m}"),
            divergence: check_invariants(max_m)?,
        },
    ])
}
