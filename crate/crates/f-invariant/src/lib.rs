//! The f-invariant pipeline: from degree-two cohomology classes in the
//! Brown-Peterson Hopf algebroid, through an elliptic orientation and
//! constant-term pairing, into divided congruences mod p.
//!
//! A class of order p with integral cocycle certificate `w` has psi-image
//! `rho(w)`, an integral divided congruence; its reduction mod p is the
//! f-invariant, well defined modulo the subgroup spanned by constants and
//! reductions of integral top-weight forms. At (2, level 3) the reduction
//! is additionally expressed in the Igusa-tower basis `{a3^i T^j}`.

pub mod catalog;
pub mod closed;
pub mod fclass;
pub mod pipeline;
pub mod projection;

pub use catalog::{ext2_catalog, Ext2Generator, GeneratorKind};
pub use closed::{closed_form_beta_t, closed_form_kervaire_family};
pub use fclass::{classes_equal_mod_ambiguity, AmbiguityBasis, FClass};
pub use pipeline::{f_invariant, f_invariant_of_cocycle, psi_image};
pub use projection::kervaire_projection;

use bp_hopf::BpContext;
use modular_arith::igusa::IgusaBasis;
use modular_arith::{Level, ModularCtx, Orientation};
use std::sync::{Arc, OnceLock};

#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum Error {
    #[error(transparent)]
    Kernel(#[from] algebra_kernel::Error),
    #[error(transparent)]
    Hopf(#[from] bp_hopf::Error),
    #[error(transparent)]
    Modular(#[from] modular_arith::Error),
    #[error("classes of order p^r with r > 1 are outside the supported pipeline range (got r = {0})")]
    UnsupportedOrder(u32),
    #[error("coset carries no integral cocycle certificate; build it through the beta/alpha constructors")]
    MissingCertificate,
    #[error("non-integral psi-image at q^{power}: valuation {valuation} (pipeline inconsistency)")]
    NonIntegralPsiImage { power: usize, valuation: i64 },
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Shared state for one orientation: the Hopf-algebroid context, the
/// modular context, the orientation itself, the working precision and the
/// lazily built Igusa basis (level 3).
pub struct FInvCtx {
    pub bp: Arc<BpContext>,
    pub modular: Arc<ModularCtx>,
    pub orientation: Orientation,
    pub precision: usize,
    igusa: OnceLock<IgusaBasis>,
}

impl FInvCtx {
    pub fn new(
        bp: Arc<BpContext>,
        modular: Arc<ModularCtx>,
        orientation: Orientation,
        precision: usize,
    ) -> Self {
        FInvCtx { bp, modular, orientation, precision, igusa: OnceLock::new() }
    }

    /// The standard (2, level 3) pipeline.
    pub fn level3(nmax: usize, precision: usize) -> Result<Self> {
        let modular = Arc::new(ModularCtx::new(2, Level::Three)?);
        let orientation = modular_arith::orientation(&modular, nmax, false)?;
        Ok(Self::new(Arc::new(BpContext::new(2, nmax)), modular, orientation, precision))
    }

    /// The (p >= 5, level 1) pipeline, optionally with the orientation
    /// forced to the Eisenstein lift of the Hasse invariant.
    pub fn level1(p: u64, nmax: usize, precision: usize, eisenstein: bool) -> Result<Self> {
        let modular = Arc::new(ModularCtx::new(p, Level::One)?);
        let orientation = modular_arith::orientation(&modular, nmax, eisenstein)?;
        Ok(Self::new(Arc::new(BpContext::new(p, nmax)), modular, orientation, precision))
    }

    pub fn level(&self) -> Level {
        self.modular.level
    }

    pub fn p(&self) -> u64 {
        self.modular.p
    }

    /// The `{a3, T}` reduction basis; level 3 only.
    pub fn igusa(&self) -> Result<&IgusaBasis> {
        if self.level() != Level::Three {
            return Err(Error::Other("Igusa basis exists at level 3 only".into()));
        }
        if let Some(b) = self.igusa.get() {
            return Ok(b);
        }
        let built =
            modular_arith::igusa_basis(&self.bp, &self.orientation, &self.modular, self.precision)?;
        let _ = self.igusa.set(built);
        Ok(self.igusa.get().unwrap())
    }
}
