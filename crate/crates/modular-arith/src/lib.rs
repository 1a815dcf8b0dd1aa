//! Elliptic formal groups, q-expansions, divided congruences and the
//! mod-p Igusa tower.
//!
//! Two configurations are supported, mirroring the two elliptic
//! orientations in use:
//!
//! - level 3 at p = 2: the curve `y^2 + a1 x y + a3 y = x^3` over
//!   Z_(2)\[a1, a3\], with q-expansions over W = Z_2\[zeta\] and the mod-2
//!   Igusa tower expressed in the basis `{a3^i T^j}`;
//! - level 1 at p >= 5: the classical curve with the Eisenstein
//!   generators g2 = E4/12, g3 = -E6/216.

pub mod divided;
pub mod igusa;
pub mod katz;
pub mod orientation;
pub mod qseries;
pub mod rho;
pub mod sigma;
pub mod weierstrass;

pub use divided::DividedCongruence;
pub use igusa::{igusa_basis, igusa_class, igusa_express, IgusaBasis, IgusaClass, ResidueSeries, StructuredForm};
pub use katz::katz_d;
pub use orientation::{orientation, Orientation};
pub use qseries::ModularCtx;
pub use sigma::{sigma, sigma_chi};
pub use weierstrass::{formal_log, FormalLogData, WeierstrassModel};

/// Congruence level of the modular-forms ring in play.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    One,
    Three,
}

#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum Error {
    #[error(transparent)]
    Kernel(#[from] algebra_kernel::Error),
    #[error(transparent)]
    Hopf(#[from] bp_hopf::Error),
    #[error("unsupported configuration: {0}")]
    UnsupportedConfiguration(String),
    #[error("non-integral q-expansion: {0}")]
    NonIntegralSeries(String),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
