use serde::Serialize;

use crate::error::{Result, SpinError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mass: f64,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    /// Largest momentum component, in units of the mass.
    pub max_momentum: f64,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            mass: 1.0,
            samples: 100,
            seed: 42,
            tol: 1e-10,
            max_momentum: 10.0,
            format: Format::Json,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.mass.is_finite() && self.mass > 0.0) {
            return Err(SpinError::Config(format!("mass must be positive, got {}", self.mass)));
        }
        if self.samples < 1 {
            return Err(SpinError::Config("samples must be at least 1".into()));
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(SpinError::Config(format!("tol must be positive, got {}", self.tol)));
        }
        if !(self.max_momentum.is_finite() && self.max_momentum > 0.0) {
            return Err(SpinError::Config(format!(
                "max-momentum must be positive, got {}",
                self.max_momentum
            )));
        }
        Ok(())
    }
}
