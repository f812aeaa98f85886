use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("width mismatch: {0} vs {1}")]
    WidthMismatch(usize, usize),
    #[error("exponent {exponent} of variable x{var} exceeds polarization budget {budget}")]
    BudgetExceeded {
        var: usize,
        exponent: u32,
        budget: u32,
    },
    #[error("operation requires a proper nonzero ideal")]
    ImproperIdeal,
    #[error("operation requires a squarefree ideal; generator {0} is not squarefree")]
    NotSquarefree(String),
    #[error("negative power is undefined")]
    NegativePower,
    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),
    #[error("operation is undefined on the void complex")]
    VoidComplex,
    #[error("ground set size {0} exceeds the subset-enumeration cap {1}")]
    GroundTooLarge(usize, usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cochain is not a cocycle")]
    NotCocycle,
    #[error("cohomology classes live on different complexes or supports overlap improperly")]
    ClassMismatch,
    #[error("generator count {0} exceeds cap {1}")]
    CapExceeded(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
