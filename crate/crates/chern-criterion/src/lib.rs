//! Symmetric-function genus expansion and the Chern-number Kervaire
//! parity criteria for dimensions 4 and 8.

pub mod breduce;
pub mod criterion;
pub mod genus;
pub mod symmetric;

pub use breduce::BReduction;
pub use criterion::{
    b_reduction_report, evaluate_manifold, kervaire_chern_polynomial, BReductionReport,
    ChernData, ParityPoly, Verdict,
};
pub use genus::genus_q;
pub use symmetric::{pi_components, SymmetricExpansion};

#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum Error {
    #[error(transparent)]
    Kernel(#[from] algebra_kernel::Error),
    #[error(transparent)]
    Hopf(#[from] bp_hopf::Error),
    #[error("unsupported dimension {0}: the parity criteria cover 4 and 8")]
    UnsupportedDimension(u32),
    #[error("insufficient correction data in degree {degree}: {detail}")]
    InsufficientCorrections { degree: i64, detail: String },
    #[error("incomplete Chern data: missing {missing} (required: {required})")]
    IncompleteChernData { missing: String, required: String },
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
