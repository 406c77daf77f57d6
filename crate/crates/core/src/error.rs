use thiserror::Error;

use crate::types::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Pointwise subtraction would leave a negative count.
    #[error("not a subcharacter: weight {weight} would become negative")]
    NotSubcharacter { weight: Weight },

    /// The greedy decomposition hit a state no module character can reach.
    #[error("not a module character: offending weight {weight}")]
    NotModuleCharacter { weight: Weight },

    #[error("empty character")]
    EmptyCharacter,

    #[error("integer overflow while computing {context}")]
    Overflow { context: String },

    #[error("oracle cap exceeded: {value} is above the enumeration cap {cap}")]
    OracleCapExceeded { value: u32, cap: u32 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: duplicate weight {weight}")]
    DuplicateWeight { line: usize, weight: Weight },
}

impl Error {
    pub(crate) fn overflow(context: impl Into<String>) -> Self {
        Error::Overflow {
            context: context.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
