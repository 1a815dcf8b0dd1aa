//! Run configuration shared by all subcommands.

use anyhow::{bail, Result};
use modular_arith::Level;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrientationChoice {
    Default,
    Eisenstein,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub prime: u64,
    pub level: Level,
    pub precision: usize,
    pub seed: u64,
    pub cache_dir: Option<PathBuf>,
    pub format: OutputFormat,
    pub orientation: OrientationChoice,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        match (self.prime, self.level) {
            (2, Level::Three) => {}
            (p, Level::One) if p >= 5 => {}
            (p, l) => bail!(
                "invalid configuration: prime {p} with level {:?}; supported: (2, 3) and (p >= 5, 1)",
                l
            ),
        }
        if self.precision < 50 {
            bail!("precision {} too small; at least 50", self.precision);
        }
        if self.orientation == OrientationChoice::Eisenstein && self.level != Level::One {
            bail!("--orientation=eisenstein applies to level 1 only");
        }
        Ok(())
    }

    /// Generator bound large enough for the lattice in the given degree.
    pub fn nmax_for_degree(&self, degree: i64) -> usize {
        bp_hopf::lattice::sufficient_nmax(self.prime, degree).max(2)
    }

    pub fn level_number(&self) -> u64 {
        match self.level {
            Level::One => 1,
            Level::Three => 3,
        }
    }

    pub fn echo_json(&self) -> serde_json::Value {
        serde_json::json!({
            "prime": self.prime,
            "level": self.level_number(),
            "precision": self.precision,
            "seed": self.seed,
            "format": match self.format { OutputFormat::Text => "text", OutputFormat::Json => "json" },
            "orientation": match self.orientation {
                OrientationChoice::Default => "default",
                OrientationChoice::Eisenstein => "eisenstein",
            },
            "cache_dir": self.cache_dir.as_ref().map(|p| p.display().to_string()),
        })
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            prime: 2,
            level: Level::Three,
            precision: 200,
            seed: 1,
            cache_dir: None,
            format: OutputFormat::Text,
            orientation: OrientationChoice::Default,
        }
    }
}
