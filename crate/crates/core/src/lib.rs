//! Exact decomposition of the symmetric powers `S^m(C^2 ⊗ C^2 ⊗ C^2)` into
//! irreducible `sl2 ⊕ sl2 ⊕ sl2`-modules `V(n1) ⊗ V(n2) ⊗ V(n3)`.
//!
//! Weight-space dimensions come from closed-form quartic polynomials
//! ([`dims`]), multiplicities from an eight-term inclusion-exclusion over
//! those dimensions ([`multiplicity`]), and full characters can also be
//! peeled apart greedily ([`characters`]). The [`oracle`] module counts the
//! same quantities by brute-force enumeration.
//!
//! ```
//! use symcube::{multiplicity_sym, IrrepLabel};
//!
//! // Three copies of V(4) ⊗ V(8) ⊗ V(8) in S^40.
//! assert_eq!(multiplicity_sym(40, IrrepLabel::new(4, 8, 8)).unwrap(), 3);
//! ```

pub mod characters;
pub mod charfile;
pub mod dims;
pub mod error;
pub mod multiplicity;
pub mod oracle;
pub mod types;

pub use characters::{
    character_irrep, character_of_decomposition, character_sl2, character_symmetric_power,
    greedy_decompose, maximal_weights,
};
pub use charfile::{parse_character, write_character};
pub use dims::{c2, dim_by_convolution, dim_closed_form, dim_weight, FormulaCase, SortedIndex};
pub use error::{Error, Result};
pub use multiplicity::{decompose_symmetric_power, multiplicity_general, multiplicity_sym};
pub use oracle::Oracle;
pub use types::{
    binomial, symmetric_power_dimension, weight_leq, weight_of_monomial, Character, Count,
    Decomposition, Degree, IrrepLabel, MonomialExponents, Weight,
};
