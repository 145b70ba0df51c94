//! Shared fixtures for the benchmark targets.

use fh_core::symbol::SymbolSpec;

/// The workhorse benchmark symbol: one singularity at θ = 0 with α = 1/4.
pub fn bench_symbol() -> SymbolSpec {
    SymbolSpec::pure(0.0, 0.25).expect("valid exponent")
}
