//! Config-driven verification campaigns over the `fh-core` numerics:
//! convergence sweeps of Toeplitz-product spectral quantities, constant
//! and kernel bound checks, Fourier-coefficient asymptotics, and the
//! matrix/operator norm identity — each emitting a machine-readable CSV
//! table plus a JSON metadata sidecar.

pub mod campaigns;
pub mod config;

pub use campaigns::{CampaignOutcome, ConvergenceRecord, RunError};
pub use config::{CampaignKind, ConfigDoc, ValidatedConfig};
