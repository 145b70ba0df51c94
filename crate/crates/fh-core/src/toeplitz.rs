//! Toeplitz matrices T_N(f) with entry (i+1, j+1) = f̂(j-i), their fast
//! matrix-vector products, and power iteration for the extremal spectral
//! quantities of products T_N(f₁) T_N(f₂).
//!
//! Real symbols give Hermitian matrices, and products of two positive
//! definite Hermitian Toeplitz matrices are similar to positive definite
//! matrices (conjugate by T₂^{1/2}), so the dominant eigenvalue is real,
//! positive and reachable by plain power iteration. The spectral norm of
//! the product is computed independently on A*A; the two agree only
//! asymptotically, and callers are expected to track the gap.

use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};
use crate::rng::SplitMix64;
use crate::symbol::{SymbolSpec, UnitCirclePoint};

/// Matrix orders above which [`ToeplitzOperator::matvec`] switches from
/// the direct O(N²) product to the circulant-embedding FFT product.
pub const FFT_MATVEC_THRESHOLD: usize = 256;

/// An (N+1)×(N+1) Toeplitz matrix stored as its generating coefficients
/// f̂(-N..N), with Hermitian symmetry f̂(-n) = conj(f̂(n)) enforced by
/// construction. Immutable after creation; all products are read-only.
#[derive(Clone)]
pub struct ToeplitzOperator {
    order: usize,
    /// coefficient n lives at index n + (order-1), n ∈ [-(order-1), order-1]
    coeffs: Vec<Complex64>,
    /// FFT machinery for the circulant embedding (length = fft_len)
    fft: Arc<dyn Fft<f64>>,
    ifft: Arc<dyn Fft<f64>>,
    /// forward transform of the embedding circulant's first column
    spectrum: Vec<Complex64>,
}

impl std::fmt::Debug for ToeplitzOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ToeplitzOperator")
            .field("order", &self.order)
            .field("f0", &self.coefficient(0))
            .finish()
    }
}

impl ToeplitzOperator {
    /// T_N(f) for the given symbol: coefficients f̂(0..=N) by quadrature
    /// at tolerance `tol`, conjugate-reflected to the negative side.
    pub fn from_symbol(symbol: &SymbolSpec, n: usize, tol: f64) -> Result<Self> {
        let half = symbol.fourier_coefficients_upto(n, tol)?;
        Self::from_nonnegative_coefficients(&half)
    }

    /// Build from the coefficients f̂(0..=N) (length N+1 = order). The
    /// negative side is the conjugate reflection, so the matrix is
    /// Hermitian by construction.
    pub fn from_nonnegative_coefficients(half: &[Complex64]) -> Result<Self> {
        if half.is_empty() {
            return Err(Error::Domain("need at least the zeroth coefficient".into()));
        }
        let order = half.len();
        let n = order - 1;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * n + 1];
        for (k, c) in half.iter().enumerate() {
            coeffs[n + k] = *c;
            coeffs[n - k] = c.conj();
        }
        // f̂(0) must be real for a Hermitian matrix
        coeffs[n].im = 0.0;
        Ok(Self::from_full_coefficients(order, coeffs))
    }

    fn from_full_coefficients(order: usize, coeffs: Vec<Complex64>) -> Self {
        let n = order - 1;
        let fft_len = (2 * order).next_power_of_two();
        let mut planner = FftPlanner::new();
        let fft = planner.plan_fft_forward(fft_len);
        let ifft = planner.plan_fft_inverse(fft_len);
        // circulant first column: (f̂(0), f̂(-1), …, f̂(-N), 0…0, f̂(N), …, f̂(1))
        let mut col = vec![Complex64::new(0.0, 0.0); fft_len];
        for k in 0..=n {
            col[k] = coeffs[n - k]; // f̂(-k)
        }
        for k in 1..=n {
            col[fft_len - k] = coeffs[n + k]; // f̂(k)
        }
        let mut spectrum = col;
        fft.process(&mut spectrum);
        Self { order, coeffs, fft, ifft, spectrum }
    }

    /// Matrix order N+1.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Generating coefficient f̂(n); zero outside [-(order-1), order-1].
    pub fn coefficient(&self, n: i64) -> Complex64 {
        let half = (self.order - 1) as i64;
        if n < -half || n > half {
            return Complex64::new(0.0, 0.0);
        }
        self.coeffs[(n + half) as usize]
    }

    /// Entry (i, j), zero-indexed: f̂(j - i).
    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.coefficient(j as i64 - i as i64)
    }

    /// Dense row-major copy, mostly for small-order reference checks.
    pub fn to_dense(&self) -> Vec<Complex64> {
        let n = self.order;
        let mut a = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] = self.entry(i, j);
            }
        }
        a
    }

    /// T x, choosing the direct product for small orders and the FFT
    /// product above [`FFT_MATVEC_THRESHOLD`].
    pub fn matvec(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        if self.order > FFT_MATVEC_THRESHOLD {
            self.matvec_fft(x)
        } else {
            self.matvec_direct(x)
        }
    }

    /// The O(N²) product, used directly and as the reference for the FFT
    /// route.
    pub fn matvec_direct(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        self.check_len(x)?;
        let n = self.order;
        let half = n - 1;
        let mut y = vec![Complex64::new(0.0, 0.0); n];
        for (i, yi) in y.iter_mut().enumerate() {
            // row i reads coefficients f̂(-i) .. f̂(n-1-i), contiguous here
            let row = &self.coeffs[half - i..half - i + n];
            let mut s = Complex64::new(0.0, 0.0);
            for (c, xj) in row.iter().zip(x) {
                s += c * xj;
            }
            *yi = s;
        }
        Ok(y)
    }

    /// The O(N log N) product via embedding into a circulant of
    /// power-of-two size ≥ 2(N+1).
    pub fn matvec_fft(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        self.check_len(x)?;
        let l = self.spectrum.len();
        let mut buf = vec![Complex64::new(0.0, 0.0); l];
        buf[..self.order].copy_from_slice(x);
        self.fft.process(&mut buf);
        for (b, s) in buf.iter_mut().zip(&self.spectrum) {
            *b *= s;
        }
        self.ifft.process(&mut buf);
        let scale = 1.0 / l as f64;
        Ok(buf[..self.order].iter().map(|z| z * scale).collect())
    }

    fn check_len(&self, x: &[Complex64]) -> Result<()> {
        if x.len() != self.order {
            return Err(Error::Dimension { expected: self.order, got: x.len() });
        }
        Ok(())
    }

    /// The similarity Δ₀(χ₀) T Δ₀^{-1}(χ₀) with Δ₀ = diag(χ₀^i): entry
    /// (i, j) is multiplied by χ₀^{i-j}, i.e. coefficient n becomes
    /// χ₀^{-n} f̂(n). Spectra are preserved; for T built from a symbol
    /// this equals T of the symbol rotated by the angle of χ₀.
    pub fn rotate_conjugate(&self, chi0: UnitCirclePoint) -> ToeplitzOperator {
        let half = (self.order - 1) as i64;
        let coeffs = (-half..=half)
            .map(|n| {
                self.coefficient(n) * Complex64::from_polar(1.0, -(n as f64) * chi0.theta())
            })
            .collect();
        Self::from_full_coefficients(self.order, coeffs)
    }
}

/// Outcome of a power iteration.
#[derive(Debug, Clone, Copy)]
pub struct SpectralResult {
    /// The eigenvalue or singular-value estimate.
    pub value: f64,
    pub iterations: usize,
    /// ‖Av - λv‖/‖v‖ (eigen route) or ‖A*Av - σ²v‖/‖v‖ (norm route).
    pub residual: f64,
    /// True when both the successive-estimate test and the residual came
    /// in below tol·value before `max_iter`.
    pub converged: bool,
}

fn random_unit_vector(n: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = SplitMix64::new(seed);
    let mut v: Vec<Complex64> =
        (0..n).map(|_| Complex64::new(rng.symmetric(), rng.symmetric())).collect();
    let norm = vec_norm(&v);
    for z in &mut v {
        *z /= norm;
    }
    v
}

fn vec_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Largest eigenvalue of T₁T₂ (both Hermitian positive definite) by power
/// iteration on v ↦ T₁(T₂v) from a seeded random start.
///
/// The eigenvalue estimate is the generalized Rayleigh quotient
/// ⟨T₂v, T₁T₂v⟩ / ⟨T₂v, v⟩, which is real for Hermitian factors and
/// converges monotonically for the PD-similar product. `tol` is relative:
/// iteration stops once successive estimates differ by ≤ tol·value and
/// ‖Av - λv‖ ≤ tol·value. Exceeding `max_iter` returns the best estimate
/// with `converged: false`; a non-positive quotient reports a
/// positive-definiteness failure.
pub fn largest_eigenvalue_product(
    t1: &ToeplitzOperator,
    t2: &ToeplitzOperator,
    tol: f64,
    max_iter: usize,
    seed: u64,
) -> Result<SpectralResult> {
    check_pair(t1, t2, tol)?;
    let n = t1.order();
    let mut v = random_unit_vector(n, seed);
    let mut lambda_prev = f64::NAN;
    let mut result = SpectralResult { value: 0.0, iterations: 0, residual: f64::INFINITY, converged: false };
    for it in 1..=max_iter {
        let w = t2.matvec(&v)?;
        let u = t1.matvec(&w)?; // u = T₁T₂ v
        let num = inner(&w, &u).re;
        let den = inner(&w, &v).re;
        if den <= 0.0 || num <= 0.0 {
            return Err(Error::NotPositiveDefinite(format!(
                "generalized Rayleigh quotient became non-positive ({num:.3e}/{den:.3e})"
            )));
        }
        let lambda = num / den;
        let mut resid = 0.0f64;
        for (ui, vi) in u.iter().zip(&v) {
            resid += (ui - lambda * vi).norm_sqr();
        }
        let resid = resid.sqrt();
        result = SpectralResult { value: lambda, iterations: it, residual: resid, converged: false };
        if (lambda - lambda_prev).abs() <= tol * lambda.abs() && resid <= tol * lambda.abs() {
            result.converged = true;
            return Ok(result);
        }
        lambda_prev = lambda;
        let norm = vec_norm(&u);
        if norm == 0.0 {
            return Err(Error::NotPositiveDefinite("iterate collapsed to zero".into()));
        }
        v = u;
        for z in &mut v {
            *z /= norm;
        }
    }
    Ok(result)
}

/// Largest singular value of A = T₁T₂ by power iteration on A*A
/// (A* = T₂T₁ for Hermitian factors). Same convergence conventions as
/// [`largest_eigenvalue_product`]; the residual refers to A*A and σ².
pub fn spectral_norm_product(
    t1: &ToeplitzOperator,
    t2: &ToeplitzOperator,
    tol: f64,
    max_iter: usize,
    seed: u64,
) -> Result<SpectralResult> {
    check_pair(t1, t2, tol)?;
    let n = t1.order();
    let mut v = random_unit_vector(n, seed);
    let mut sigma_prev = f64::NAN;
    let mut result = SpectralResult { value: 0.0, iterations: 0, residual: f64::INFINITY, converged: false };
    for it in 1..=max_iter {
        let av = t1.matvec(&t2.matvec(&v)?)?;
        let b = t2.matvec(&t1.matvec(&av)?)?; // A*A v
        let mu = inner(&v, &b).re.max(0.0);
        let sigma = mu.sqrt();
        let mut resid = 0.0f64;
        for (bi, vi) in b.iter().zip(&v) {
            resid += (bi - mu * vi).norm_sqr();
        }
        let resid = resid.sqrt();
        result = SpectralResult { value: sigma, iterations: it, residual: resid, converged: false };
        if (sigma - sigma_prev).abs() <= tol * sigma.abs() && resid <= tol * mu.abs() {
            result.converged = true;
            return Ok(result);
        }
        sigma_prev = sigma;
        let norm = vec_norm(&b);
        if norm == 0.0 {
            // A*A v = 0: the zero operator on this subspace
            result.converged = true;
            result.value = 0.0;
            return Ok(result);
        }
        v = b;
        for z in &mut v {
            *z /= norm;
        }
    }
    Ok(result)
}

fn check_pair(t1: &ToeplitzOperator, t2: &ToeplitzOperator, tol: f64) -> Result<()> {
    if t1.order() != t2.order() {
        return Err(Error::Dimension { expected: t1.order(), got: t2.order() });
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    Ok(())
}

/// Deterministic default seed for power-iteration starting vectors.
pub const DEFAULT_SEED: u64 = 0x9e37_79b9_7f4a_7c15;
