//! The limiting integral operator on L²(0,1) with kernel
//!
//!   k(x, y) = ∫₀¹ |x-t|^{2α₁-1} |y-t|^{2α₂-1} dt,   α₁, α₂ ∈ (0, 1/2),
//!
//! its discrete pre-limit analogue, Nyström norm estimation, two-sided
//! comparison bounds against |x-y|^{2α₁+2α₂-1}, and the exact
//! matrix/operator correspondence ‖A_N‖ = N‖G_N‖.
//!
//! Kernel evaluation splits ∫₀¹ at t = x and t = y (x < y) and maps each
//! piece onto a Beta-type normal form with Δ = y - x:
//!
//!   ∫₀ˣ   = Δ^{s-1} ∫₀^{x/Δ}     v^{2α₁-1} (1+v)^{2α₂-1} dv,
//!   ∫ₓʸ   = Δ^{s-1} B(2α₁, 2α₂),
//!   ∫ᵧ¹   = Δ^{s-1} ∫₀^{(1-y)/Δ} v^{2α₂-1} (1+v)^{2α₁-1} dv,
//!
//! with s = 2α₁ + 2α₂. After the change of variables every singularity
//! sits at an interval endpoint where the Jacobi-weighted panels of
//! [`crate::quad`] are exact, so no adaptive chasing is needed.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg;
use crate::quad::power_weighted_integral;
use crate::rng::SplitMix64;
use crate::specfun::{self, Exponent};

/// Exponent pair (α₁, α₂) of the limit kernel, both in (0, 1/2).
#[derive(Debug, Clone, Copy)]
pub struct KernelParams {
    pub alpha1: Exponent,
    pub alpha2: Exponent,
}

impl KernelParams {
    pub fn new(alpha1: f64, alpha2: f64) -> Result<Self> {
        Ok(Self {
            alpha1: Exponent::positive(alpha1)?,
            alpha2: Exponent::positive(alpha2)?,
        })
    }

    fn a1(&self) -> f64 {
        self.alpha1.value()
    }

    fn a2(&self) -> f64 {
        self.alpha2.value()
    }

    /// s = 2α₁ + 2α₂, the homogeneity degree offset of the kernel.
    pub fn s(&self) -> f64 {
        2.0 * (self.a1() + self.a2())
    }
}

/// k(x, y) for x, y ∈ [0, 1].
///
/// On the diagonal the integral is finite only for α₁ + α₂ > 1/2, where
/// it has the closed form (x^{s-1} + (1-x)^{s-1})/(s-1); otherwise the
/// diagonal is a divergence error. Off the diagonal the three-segment
/// reduction above is used, with k_{α₁,α₂}(x,y) = k_{α₂,α₁}(y,x) for
/// x > y.
pub fn kernel_eval(p: KernelParams, x: f64, y: f64) -> Result<f64> {
    for v in [x, y] {
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::Domain(format!("kernel arguments must lie in [0,1], got {v}")));
        }
    }
    let s = p.s();
    if x == y {
        if s > 1.0 {
            return Ok((x.powf(s - 1.0) + (1.0 - x).powf(s - 1.0)) / (s - 1.0));
        }
        return Err(Error::DivergentDiagonal);
    }
    let (lo, hi, a1, a2) = if x < y {
        (x, y, p.a1(), p.a2())
    } else {
        (y, x, p.a2(), p.a1())
    };
    let delta = hi - lo;
    let x1 = lo / delta;
    let x3 = (1.0 - hi) / delta;
    let i1 = power_weighted_integral(2.0 * a1 - 1.0, x1, |v| (1.0 + v).powf(2.0 * a2 - 1.0));
    let mid = specfun::beta(2.0 * a1, 2.0 * a2)?;
    let i3 = power_weighted_integral(2.0 * a2 - 1.0, x3, |v| (1.0 + v).powf(2.0 * a1 - 1.0));
    Ok(delta.powf(s - 1.0) * (i1 + mid + i3))
}

/// One point of the two-sided comparison against |x-y|^{s-1}.
#[derive(Debug, Clone, Copy)]
pub struct BoundsCheck {
    pub lower: f64,
    pub value: f64,
    pub upper: f64,
    pub ok: bool,
}

/// Compares k(x,y) against |y-x|^{s-1} below and H(α₁,α₂)·|x-y|^{s-1}
/// above, with 1e-9 relative slack on both sides.
pub fn kernel_bounds_check(p: KernelParams, x: f64, y: f64) -> Result<BoundsCheck> {
    if x == y {
        return Err(Error::Domain("bounds check requires x != y".into()));
    }
    let s = p.s();
    let d = (x - y).abs().powf(s - 1.0);
    let lower = d;
    let upper = specfun::h_bound(p.a1(), p.a2())? * d;
    let value = kernel_eval(p, x, y)?;
    const SLACK: f64 = 1e-9;
    let ok = value >= lower * (1.0 - SLACK) && value <= upper * (1.0 + SLACK);
    Ok(BoundsCheck { lower, value, upper, ok })
}

/// The discrete kernel
/// k_N(x,y) = N^{1-s} Σ_{0≤u≤N, u≠⌊Nx⌋, u≠⌊Ny⌋} |⌊Nx⌋-u|^{2α₁-1} |⌊Ny⌋-u|^{2α₂-1}.
pub fn discrete_kernel_eval(p: KernelParams, n: usize, x: f64, y: f64) -> f64 {
    assert!(n >= 2, "discrete kernel needs N >= 2");
    let ix = (n as f64 * x).floor() as i64;
    let iy = (n as f64 * y).floor() as i64;
    let e1 = 2.0 * p.a1() - 1.0;
    let e2 = 2.0 * p.a2() - 1.0;
    let mut sum = 0.0;
    for u in 0..=(n as i64) {
        if u == ix || u == iy {
            continue;
        }
        sum += ((ix - u).abs() as f64).powf(e1) * ((iy - u).abs() as f64).powf(e2);
    }
    (n as f64).powf(1.0 - p.s()) * sum
}

/// How a norm estimate was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormMethod {
    NystromMidpoint,
    DenseSvd,
}

impl NormMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            NormMethod::NystromMidpoint => "nystrom-midpoint",
            NormMethod::DenseSvd => "dense-svd",
        }
    }
}

/// An operator-norm estimate with its provenance.
#[derive(Debug, Clone, Copy)]
pub struct NormEstimate {
    pub value: f64,
    pub grid_m: usize,
    pub method: NormMethod,
    /// ‖G*Gv - σ²v‖ at the final iterate (0 for dense routes).
    pub residual: f64,
}

/// Relative tolerance of the Nyström power iteration.
pub const NYSTROM_TOL: f64 = 1e-10;
/// Iteration cap of the Nyström power iteration.
pub const NYSTROM_MAX_ITER: usize = 10_000;

/// Nyström estimate of ‖K_{α₁,α₂}‖ on the staggered midpoint grid
/// x_i = (i+1/2)/m.
///
/// Off-diagonal entries are k(x_i, x_j)/m. Diagonal entries use the
/// closed-form k(x_i, x_i)/m when α₁+α₂ > 1/2; otherwise the point value
/// diverges and the entry is replaced by the cell average of the
/// comparison bound H·|u|^{s-1} over the (1/m)-cell, which keeps the
/// discretization's norm limit intact (the integrable singularity
/// carries no mass in the limit). The norm is the top singular value of
/// the resulting matrix by power iteration on GᵀG.
pub fn operator_norm(p: KernelParams, m: usize) -> Result<NormEstimate> {
    if m < 2 {
        return Err(Error::Domain(format!("Nyström grid needs m >= 2, got {m}")));
    }
    let g = assemble_nystrom(p, m, false)?;
    let (value, residual, _iters, converged) =
        dense_top_singular(&g, m, NYSTROM_TOL, NYSTROM_MAX_ITER, 0x4e59_b449_2df3_25aa);
    let _ = converged; // non-convergence is visible through the residual
    Ok(NormEstimate { value, grid_m: m, method: NormMethod::NystromMidpoint, residual })
}

/// Nyström norm of the comparison kernel |x-y|^{s-1} on the same grid and
/// with the same diagonal cell-average convention (without the H factor).
/// Scaling it by H(α₁,α₂) gives the discretized upper comparison operator.
pub fn comparison_operator_norm(p: KernelParams, m: usize) -> Result<NormEstimate> {
    if m < 2 {
        return Err(Error::Domain(format!("Nyström grid needs m >= 2, got {m}")));
    }
    let g = assemble_nystrom(p, m, true)?;
    let (value, residual, _iters, _conv) =
        dense_top_singular(&g, m, NYSTROM_TOL, NYSTROM_MAX_ITER, 0x4e59_b449_2df3_25aa);
    Ok(NormEstimate { value, grid_m: m, method: NormMethod::NystromMidpoint, residual })
}

fn assemble_nystrom(p: KernelParams, m: usize, comparison: bool) -> Result<Vec<f64>> {
    let s = p.s();
    let mf = m as f64;
    // diagonal entry (kernel value, before the 1/m quadrature weight)
    let diag = if comparison || s <= 1.0 {
        // cell average of |u|^{s-1} over (-1/(2m), 1/(2m)), times H for the
        // actual kernel's comparison substitute
        let cell = mf * 2.0 * (0.5 / mf).powf(s) / s;
        if comparison {
            cell
        } else {
            specfun::h_bound(p.a1(), p.a2())? * cell
        }
    } else {
        f64::NAN // filled per-row below from the closed form
    };

    let mut g = vec![0.0f64; m * m];
    let threads = std::thread::available_parallelism().map(|t| t.get()).unwrap_or(1);
    let chunk = m.div_ceil(threads);
    let err = std::sync::Mutex::new(None::<Error>);
    std::thread::scope(|scope| {
        for (t, rows) in g.chunks_mut(chunk * m).enumerate() {
            let err = &err;
            scope.spawn(move || {
                let i0 = t * chunk;
                for (r, row) in rows.chunks_mut(m).enumerate() {
                    let i = i0 + r;
                    let xi = (i as f64 + 0.5) / mf;
                    for (j, slot) in row.iter_mut().enumerate() {
                        let xj = (j as f64 + 0.5) / mf;
                        let k = if i == j {
                            if comparison || s <= 1.0 {
                                diag
                            } else {
                                (xi.powf(s - 1.0) + (1.0 - xi).powf(s - 1.0)) / (s - 1.0)
                            }
                        } else if comparison {
                            (xi - xj).abs().powf(s - 1.0)
                        } else {
                            match kernel_eval(p, xi, xj) {
                                Ok(v) => v,
                                Err(e) => {
                                    *err.lock().unwrap() = Some(e);
                                    return;
                                }
                            }
                        };
                        *slot = k / mf;
                    }
                }
            });
        }
    });
    if let Some(e) = err.into_inner().unwrap() {
        return Err(e);
    }
    Ok(g)
}

/// Top singular value of a dense row-major m×m matrix by power iteration
/// on GᵀG. Returns (σ, residual, iterations, converged).
pub(crate) fn dense_top_singular(
    g: &[f64],
    m: usize,
    tol: f64,
    max_iter: usize,
    seed: u64,
) -> (f64, f64, usize, bool) {
    let mut rng = SplitMix64::new(seed);
    let mut v: Vec<f64> = (0..m).map(|_| rng.symmetric()).collect();
    normalize(&mut v);
    let mut sigma_prev = f64::NAN;
    let mut sigma = 0.0;
    let mut residual = f64::INFINITY;
    for it in 1..=max_iter {
        let u = mat_vec(g, m, &v);
        let w = mat_t_vec(g, m, &u);
        let mu: f64 = v.iter().zip(&w).map(|(a, b)| a * b).sum();
        let mu = mu.max(0.0);
        sigma = mu.sqrt();
        residual = w
            .iter()
            .zip(&v)
            .map(|(wi, vi)| (wi - mu * vi) * (wi - mu * vi))
            .sum::<f64>()
            .sqrt();
        if (sigma - sigma_prev).abs() <= tol * sigma.abs() && residual <= tol * mu.max(f64::MIN_POSITIVE) {
            return (sigma, residual, it, true);
        }
        sigma_prev = sigma;
        let norm: f64 = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            return (0.0, 0.0, it, true);
        }
        v = w;
        for x in &mut v {
            *x /= norm;
        }
    }
    (sigma, residual, max_iter, false)
}

fn normalize(v: &mut [f64]) {
    let n: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if n > 0.0 {
        for x in v.iter_mut() {
            *x /= n;
        }
    }
}

fn mat_vec(g: &[f64], m: usize, v: &[f64]) -> Vec<f64> {
    let mut u = vec![0.0; m];
    for i in 0..m {
        let row = &g[i * m..(i + 1) * m];
        let mut s = 0.0;
        for (a, b) in row.iter().zip(v) {
            s += a * b;
        }
        u[i] = s;
    }
    u
}

fn mat_t_vec(g: &[f64], m: usize, u: &[f64]) -> Vec<f64> {
    let mut w = vec![0.0; m];
    for i in 0..m {
        let row = &g[i * m..(i + 1) * m];
        let ui = u[i];
        for (wj, a) in w.iter_mut().zip(row) {
            *wj += a * ui;
        }
    }
    w
}

/// The two-sided bound on γ = C(α₁)C(α₂)·‖K_{α₁,α₂}‖:
///
///   ψ(α₁+α₂)·C(α₁)C(α₂)/C(α₁+α₂) ≤ γ ≤ H(α₁,α₂)·C(α₁)C(α₂)/(C(α₁+α₂)·(α₁+α₂)).
#[derive(Debug, Clone, Copy)]
pub struct GammaBounds {
    pub lower: f64,
    pub upper: f64,
}

/// Evaluates the γ sandwich. Requires α₁ + α₂ < 1/2: the constant
/// C(α₁+α₂) hits its Γ pole at 1/2 and no bound is asserted beyond it.
pub fn gamma_bounds(p: KernelParams) -> Result<GammaBounds> {
    let sum = p.a1() + p.a2();
    if sum >= 0.5 {
        return Err(Error::Domain(format!(
            "gamma bounds need alpha1 + alpha2 < 1/2 (C hits its Gamma pole at 1/2), got {sum}"
        )));
    }
    let c1 = specfun::c_alpha(p.a1())?;
    let c2 = specfun::c_alpha(p.a2())?;
    let cs = specfun::c_alpha(sum)?;
    let lower = specfun::psi_lower(sum)? * c1 * c2 / cs;
    let upper = specfun::h_bound(p.a1(), p.a2())? * c1 * c2 / (cs * sum);
    Ok(GammaBounds { lower, upper })
}

/// Result of the exact identity ‖A_N‖ = N‖G_N‖ between a matrix and the
/// integral operator with piecewise-constant kernel a_{⌊Nx⌋,⌊Ny⌋}.
#[derive(Debug, Clone, Copy)]
pub struct WidomCheck {
    /// Dense-SVD spectral norm of the matrix.
    pub matrix_norm: f64,
    /// N times the Nyström norm of the piecewise-constant kernel.
    pub scaled_operator_norm: f64,
    /// |difference| / matrix_norm (0 when the matrix is zero).
    pub gap: f64,
}

/// Checks ‖A_N‖ = N‖G_N‖ for a real N×N matrix by sampling the
/// piecewise-constant kernel g(x,y) = a_{⌊Nx⌋,⌊Ny⌋} on a midpoint grid of
/// m_factor·N points per axis. Because g is exactly constant on
/// (1/N)-cells, any m_factor ≥ 1 reproduces ‖A‖/N up to floating-point
/// and iteration error.
pub fn widom_identity_check(a: &[f64], n: usize, m_factor: usize) -> WidomCheck {
    assert_eq!(a.len(), n * n, "matrix must be square");
    assert!(n >= 1 && m_factor >= 1);
    let matrix_norm = linalg::spectral_norm_real(a, n);
    let m = m_factor * n;
    let mut g = vec![0.0; m * m];
    for i in 0..m {
        // ⌊N·(i+1/2)/m⌋ = i / m_factor on the midpoint grid
        let bi = i / m_factor;
        for j in 0..m {
            let bj = j / m_factor;
            g[i * m + j] = a[bi * n + bj] / m as f64;
        }
    }
    let (sigma, _resid, _iters, _conv) =
        dense_top_singular(&g, m, 1e-13, 200_000, 0x7b1d_c3a5_9e4f_0211);
    let scaled_operator_norm = n as f64 * sigma;
    let gap = if matrix_norm == 0.0 {
        0.0
    } else {
        (matrix_norm - scaled_operator_norm).abs() / matrix_norm
    };
    WidomCheck { matrix_norm, scaled_operator_norm, gap }
}

/// Convenience for tests and campaigns: the complex spectral norm of a
/// dense product T₁T₂ at small orders.
pub fn dense_product_norm(t1: &[Complex64], t2: &[Complex64], n: usize) -> f64 {
    let mut prod = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for k in 0..n {
            let a = t1[i * n + k];
            if a.norm_sqr() == 0.0 {
                continue;
            }
            for j in 0..n {
                prod[i * n + j] += a * t2[k * n + j];
            }
        }
    }
    linalg::spectral_norm_complex(&prod, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use fh_testkit::tanh_sinh_endpoints;

    fn params(a1: f64, a2: f64) -> KernelParams {
        KernelParams::new(a1, a2).unwrap()
    }

    #[test]
    fn corner_value_is_beta() {
        // (x,y) = (0,1): outer segments vanish, middle is B(1/2,1/2) = π
        let k = kernel_eval(params(0.25, 0.25), 0.0, 1.0).unwrap();
        assert!((k - std::f64::consts::PI).abs() < 1e-12, "{k}");
    }

    #[test]
    fn symmetric_parameters_symmetric_kernel() {
        let p = params(0.3, 0.3);
        let mut rng = SplitMix64::new(3);
        for _ in 0..50 {
            let x = rng.uniform();
            let y = rng.uniform();
            if (x - y).abs() < 1e-3 {
                continue;
            }
            let a = kernel_eval(p, x, y).unwrap();
            let b = kernel_eval(p, y, x).unwrap();
            assert!((a - b).abs() <= 1e-10 * a.max(1.0), "({x},{y})");
        }
    }

    #[test]
    fn adjoint_symmetry_swaps_parameters() {
        let p = params(0.1, 0.4);
        let q = params(0.4, 0.1);
        let mut rng = SplitMix64::new(5);
        for _ in 0..100 {
            let x = rng.uniform();
            let y = rng.uniform();
            if (x - y).abs() < 1e-3 {
                continue;
            }
            let a = kernel_eval(p, x, y).unwrap();
            let b = kernel_eval(q, y, x).unwrap();
            assert!(a > 0.0);
            assert!((a - b).abs() <= 1e-10 * a.max(1.0));
        }
    }

    #[test]
    fn matches_brute_force_quadrature() {
        // independent global adaptive quadrature of the defining integral,
        // split at the two interior kinks
        let cases = [
            (0.1, 0.3, 0.2, 0.7),
            (0.25, 0.25, 0.3, 0.8),
            (0.4, 0.4, 0.15, 0.35),
            (0.05, 0.45, 0.5, 0.9),
        ];
        for (a1, a2, x, y) in cases {
            let p = params(a1, a2);
            let (e1, e2) = (2.0 * a1 - 1.0, 2.0 * a2 - 1.0);
            // offsets keep the |x-t|, |y-t| factors exact near the kinks
            let brute = tanh_sinh_endpoints(
                |_, _, db| db.powf(e1) * (y - x + db).powf(e2),
                0.0,
                x,
                1e-13,
            ) + tanh_sinh_endpoints(
                |_, da, db| da.powf(e1) * db.powf(e2),
                x,
                y,
                1e-13,
            ) + tanh_sinh_endpoints(
                |_, da, _| (y - x + da).powf(e1) * da.powf(e2),
                y,
                1.0,
                1e-13,
            );
            let fast = kernel_eval(p, x, y).unwrap();
            assert!(
                (brute - fast).abs() <= 1e-8 * fast,
                "({a1},{a2},{x},{y}): brute {brute} vs fast {fast}"
            );
        }
    }

    #[test]
    fn diagonal_closed_form_and_divergence() {
        // α₁+α₂ > 1/2: finite diagonal with closed form
        let p = params(0.4, 0.3);
        let s = p.s();
        let x: f64 = 0.3;
        let want = (x.powf(s - 1.0) + (1.0 - x).powf(s - 1.0)) / (s - 1.0);
        assert!((kernel_eval(p, x, x).unwrap() - want).abs() < 1e-13);
        // cross-check against quadrature
        let brute = tanh_sinh_endpoints(|_, _, db| db.powf(s - 2.0), 0.0, x, 1e-13)
            + tanh_sinh_endpoints(|_, da, _| da.powf(s - 2.0), x, 1.0, 1e-13);
        assert!((kernel_eval(p, x, x).unwrap() - brute).abs() < 1e-9 * brute);
        // α₁+α₂ ≤ 1/2 diverges
        assert!(matches!(
            kernel_eval(params(0.25, 0.25), 0.4, 0.4),
            Err(Error::DivergentDiagonal)
        ));
    }

    #[test]
    fn bounds_check_corner_case() {
        // (1/4,1/4) at (0,1): lower 1 ≤ π ≤ π + 8/3
        let r = kernel_bounds_check(params(0.25, 0.25), 0.0, 1.0).unwrap();
        assert!((r.lower - 1.0).abs() < 1e-14);
        assert!((r.value - std::f64::consts::PI).abs() < 1e-12);
        assert!((r.upper - (std::f64::consts::PI + 8.0 / 3.0)).abs() < 1e-12);
        assert!(r.ok);
    }

    #[test]
    fn lower_bound_holds_everywhere() {
        // k ≥ |y-x|^{s-1} is unconditional (the middle segment alone gives
        // Δ^{s-1} B(2α₁,2α₂) and B ≥ 1 on (0,1)²)
        for (a1, a2) in [(0.1, 0.1), (0.25, 0.25), (0.4, 0.4), (0.1, 0.4)] {
            let p = params(a1, a2);
            for i in 0..20 {
                for j in 0..20 {
                    if i == j {
                        continue;
                    }
                    let x = (i as f64 + 0.5) / 20.0;
                    let y = (j as f64 + 0.5) / 20.0;
                    let r = kernel_bounds_check(p, x, y).unwrap();
                    assert!(
                        r.value >= r.lower * (1.0 - 1e-9),
                        "({a1},{a2}) at ({x},{y}): {} < {}",
                        r.value,
                        r.lower
                    );
                }
            }
        }
    }

    #[test]
    fn sharp_upper_bound_holds_for_small_sum() {
        // For α₁+α₂ < 1/2 the convergent Beta reduction of the comparison
        // integrals is a true upper constant: k ≤ H_int · Δ^{s-1}.
        for (a1, a2) in [(0.1, 0.1), (0.05, 0.2), (0.15, 0.2)] {
            let p = params(a1, a2);
            let h = specfun::h_bound_integral_form(a1, a2).unwrap();
            for i in 0..40 {
                for j in 0..40 {
                    if i == j {
                        continue;
                    }
                    let x = (i as f64 + 0.5) / 40.0;
                    let y = (j as f64 + 0.5) / 40.0;
                    let k = kernel_eval(p, x, y).unwrap();
                    let cap = h * (x - y).abs().powf(p.s() - 1.0);
                    assert!(
                        k <= cap * (1.0 + 1e-9),
                        "({a1},{a2}) at ({x},{y}): {k} > {cap}"
                    );
                }
            }
        }
    }

    #[test]
    fn divergence_rate_matches_lower_bound() {
        // x → y with α₁+α₂ < 1/2: value/lower stays within [1, H_int]
        let p = params(0.1, 0.1);
        let h = specfun::h_bound_integral_form(0.1, 0.1).unwrap();
        let x = 0.37;
        for k in 2..=20 {
            let dy = 2.0f64.powi(-k);
            let r = kernel_bounds_check(p, x, x + dy).unwrap();
            let ratio = r.value / r.lower;
            assert!(ratio >= 1.0 - 1e-12 && ratio <= h * (1.0 + 1e-9), "k={k}: ratio {ratio}");
        }
    }

    #[test]
    fn rejects_arguments_outside_unit_interval() {
        let p = params(0.2, 0.2);
        assert!(matches!(kernel_eval(p, -0.1, 0.5), Err(Error::Domain(_))));
        assert!(matches!(kernel_eval(p, 0.2, 1.5), Err(Error::Domain(_))));
        assert!(KernelParams::new(0.5, 0.2).is_err());
        assert!(KernelParams::new(0.2, 0.0).is_err());
        assert!(matches!(
            kernel_bounds_check(p, 0.3, 0.3),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn discrete_kernel_hand_case() {
        // N=2, (1/4,1/4), x=0.1, y=0.9: single term u=2 → 2^{-1/2}
        let v = discrete_kernel_eval(params(0.25, 0.25), 2, 0.1, 0.9);
        assert!((v - 0.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn discrete_kernel_symmetry() {
        let v1 = discrete_kernel_eval(params(0.1, 0.3), 50, 0.2, 0.7);
        let v2 = discrete_kernel_eval(params(0.3, 0.1), 50, 0.7, 0.2);
        assert!((v1 - v2).abs() < 1e-14);
    }

    #[test]
    fn discrete_converges_to_kernel_at_fixed_point() {
        let p = params(0.25, 0.25);
        let (x, y) = (0.2, 0.7);
        let k = kernel_eval(p, x, y).unwrap();
        let mut prev = f64::INFINITY;
        for n in [100usize, 1000, 10_000] {
            let d = (discrete_kernel_eval(p, n, x, y) - k).abs();
            assert!(d < prev, "N={n}: {d} !< {prev}");
            prev = d;
        }
    }

    #[test]
    fn operator_norm_symmetric_case_sigma_equals_lambda() {
        // α₁ = α₂ makes G symmetric, so the top singular value equals the
        // top |eigenvalue|; compare the GᵀG route against plain iteration
        // on G itself.
        let p = params(0.25, 0.25);
        let m = 128;
        let est = operator_norm(p, m).unwrap();
        let g = assemble_nystrom(p, m, false).unwrap();
        // plain power iteration on the symmetric matrix
        let mut v: Vec<f64> = {
            let mut rng = SplitMix64::new(9);
            (0..m).map(|_| rng.symmetric()).collect()
        };
        normalize(&mut v);
        let mut lambda = 0.0;
        for _ in 0..5000 {
            let u = mat_vec(&g, m, &v);
            lambda = v.iter().zip(&u).map(|(a, b)| a * b).sum();
            let norm: f64 = u.iter().map(|x| x * x).sum::<f64>().sqrt();
            v = u;
            for x in &mut v {
                *x /= norm;
            }
        }
        assert!(
            (est.value - lambda.abs()).abs() <= 1e-9 * est.value,
            "σ {} vs |λ| {}",
            est.value,
            lambda
        );
        assert_eq!(est.method, NormMethod::NystromMidpoint);
    }

    #[test]
    fn gamma_bounds_composition_and_pole() {
        let b = gamma_bounds(params(0.1, 0.1)).unwrap();
        let c01 = specfun::c_alpha(0.1).unwrap();
        let c02 = specfun::c_alpha(0.2).unwrap();
        let want_lower = specfun::psi_lower(0.2).unwrap() * c01 * c01 / c02;
        let want_upper = specfun::h_bound(0.1, 0.1).unwrap() * c01 * c01 / (c02 * 0.2);
        assert!((b.lower - want_lower).abs() < 1e-13 * want_lower);
        assert!((b.upper - want_upper).abs() < 1e-13 * want_upper);
        assert!(b.lower < b.upper);
        assert!(matches!(gamma_bounds(params(0.25, 0.25)), Err(Error::Domain(_))));
    }

    #[test]
    fn widom_identity_small_cases() {
        // identity matrix: both sides 1
        let n = 8;
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        let r = widom_identity_check(&id, n, 4);
        assert!((r.matrix_norm - 1.0).abs() < 1e-12);
        assert!(r.gap <= 1e-12, "gap {}", r.gap);
        // scalar case
        let r = widom_identity_check(&[3.5], 1, 5);
        assert!(r.gap <= 1e-13);
        // rank-one uvᵀ: norm ‖u‖‖v‖
        let n = 16;
        let u: Vec<f64> = (0..n).map(|i| ((i * i) as f64 * 0.37).sin()).collect();
        let v: Vec<f64> = (0..n).map(|i| (i as f64 * 0.91).cos()).collect();
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] = u[i] * v[j];
            }
        }
        let r = widom_identity_check(&a, n, 2);
        let nu: f64 = u.iter().map(|x| x * x).sum::<f64>().sqrt();
        let nv: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!((r.matrix_norm - nu * nv).abs() < 1e-10 * (nu * nv));
        assert!(r.gap <= 1e-10, "gap {}", r.gap);
    }

    #[test]
    fn widom_identity_random_matrices() {
        let mut rng = SplitMix64::new(0xfeed);
        let n = 32;
        for m_factor in [1usize, 3] {
            let a: Vec<f64> = (0..n * n).map(|_| rng.symmetric()).collect();
            let r = widom_identity_check(&a, n, m_factor);
            assert!(r.gap <= 1e-10, "m_factor {m_factor}: gap {:.3e}", r.gap);
        }
    }
}
