//! Spectral analysis of Toeplitz matrices generated by symbols with
//! power-law (negative order) singularities on the unit circle.
//!
//! The crate covers the full pipeline from symbol to asymptotics:
//!
//! - [`specfun`] — Gamma/Beta evaluation and the derived constants
//!   C_α = Γ(1-2α) sin(πα)/π, ψ(α), and the three-Beta bound H.
//! - [`symbol`] — symbols σ = ∏_j |e^{iθ_j} - e^{iθ}|^{-2α_j} · c with a
//!   trigonometric-polynomial regular part c: pointwise evaluation, exact
//!   Fourier coefficients by singularity-aware quadrature, and the
//!   large-n coefficient asymptotics.
//! - [`toeplitz`] — (N+1)×(N+1) Toeplitz matrices T_N(f) with entry
//!   (i,j) = f̂(j-i), direct and FFT matrix-vector products, and power
//!   iteration for the top eigenvalue / singular value of products
//!   T_N(f₁)T_N(f₂).
//! - [`kernelop`] — the limiting integral operator on L²(0,1) with kernel
//!   k(x,y) = ∫₀¹ |x-t|^{2α₁-1} |y-t|^{2α₂-1} dt, its discrete analogue,
//!   Nyström norm estimation, and the matrix/operator norm identity
//!   ‖A_N‖ = N‖G_N‖.
//!
//! All operations are pure functions of their inputs and safe to call
//! concurrently; iterative solvers are deterministic given a seed.

pub mod error;
pub mod kernelop;
pub mod linalg;
pub mod quad;
pub mod rng;
pub mod specfun;
pub mod symbol;
pub mod toeplitz;

pub use error::{Error, Result};
pub use kernelop::{GammaBounds, KernelParams, NormEstimate, NormMethod, WidomCheck};
pub use symbol::{RegularPart, Singularity, SymbolSpec, UnitCirclePoint};
pub use toeplitz::{SpectralResult, ToeplitzOperator};

pub use num_complex::Complex64;
