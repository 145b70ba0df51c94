//! Independent numerical oracles for the fh test suites.
//!
//! Everything in this crate is deliberately implemented with *different*
//! algorithms than the library under test: log-gamma uses a Stirling series
//! with argument shifting (the library uses Lanczos), integrals use
//! tanh-sinh double-exponential quadrature (the library uses graded
//! Gauss panels). Agreement between the two routes is the evidence the
//! tests rely on, so nothing here may call into `fh-core`.

/// ln Γ(x) for x > 0 via the Stirling asymptotic series with upward
/// recursion. Accurate to ~1e-15 relative over (0, 1e6).
pub fn stirling_log_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "stirling_log_gamma requires x > 0, got {x}");
    // Shift the argument above 12 where the truncated series is at
    // machine precision, then undo with ln Γ(x) = ln Γ(x+m) - Σ ln(x+j).
    let mut shift = 0.0;
    let mut z = x;
    while z < 12.0 {
        shift += z.ln();
        z += 1.0;
    }
    // B_{2k} / (2k (2k-1)) for k = 1..8
    const COEF: [f64; 8] = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360360.0,
        1.0 / 156.0,
        -3617.0 / 122400.0,
    ];
    let mut series = 0.0;
    let z2 = z * z;
    let mut zp = z;
    for c in COEF {
        series += c / zp;
        zp *= z2;
    }
    let half_ln_two_pi = 0.918_938_533_204_672_7_f64;
    (z - 0.5) * z.ln() - z + half_ln_two_pi + series - shift
}

/// Γ(x) for x > 0, via [`stirling_log_gamma`].
pub fn stirling_gamma(x: f64) -> f64 {
    stirling_log_gamma(x).exp()
}

/// Euler Beta B(a, b) for a, b > 0, on the Stirling route.
pub fn stirling_beta(a: f64, b: f64) -> f64 {
    (stirling_log_gamma(a) + stirling_log_gamma(b) - stirling_log_gamma(a + b)).exp()
}

/// Tanh-sinh (double-exponential) quadrature of `f` over (a, b), where the
/// integrand receives `(x, x - a, b - x)` with the endpoint offsets
/// computed free of cancellation.
///
/// Passing the offsets explicitly is what lets integrable endpoint
/// singularities like (x-a)^{-0.9} be evaluated down to offsets of 1e-290
/// instead of collapsing onto the endpoint at ~1e-16, which would truncate
/// a visible share of the singular mass.
pub fn tanh_sinh_endpoints<F: Fn(f64, f64, f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    assert!(b > a);
    let half = 0.5 * (b - a);
    let len = b - a;

    // contribution of the node pair at ±t (the single node for t = 0)
    let pair = |t: f64| -> f64 {
        let u = std::f64::consts::FRAC_PI_2 * t.sinh();
        let emu = (-2.0 * u).exp(); // e^{-2u}; underflow only where w·f is negligible
        let denom = 1.0 + emu;
        let w = std::f64::consts::FRAC_PI_2 * t.cosh() * 4.0 * emu / (denom * denom);
        if w.is_nan() || w <= 0.0 {
            return 0.0;
        }
        // distance of the near endpoint in [-1,1] coordinates: 1 - tanh(u)
        let d_near = half * (2.0 * emu / denom);
        if t == 0.0 {
            let v = f(a + half, half, len - half);
            return if v.is_finite() { w * v } else { 0.0 };
        }
        let d_far = len - d_near;
        // node -t hugs a, node +t hugs b
        let lo = f(a + d_near, d_near, d_far);
        let hi = f(b - d_near, d_far, d_near);
        let lo = if lo.is_finite() { lo } else { 0.0 };
        let hi = if hi.is_finite() { hi } else { 0.0 };
        w * (lo + hi)
    };

    const T_MAX: f64 = 6.5;
    let mut h = 1.0;
    let mut sum = pair(0.0);
    let mut k = 1;
    loop {
        let t = k as f64 * h;
        if t > T_MAX {
            break;
        }
        sum += pair(t);
        k += 1;
    }
    let mut prev = sum * h * half;
    for _level in 1..14 {
        h *= 0.5;
        let mut k = 1;
        loop {
            let t = (2 * k - 1) as f64 * h;
            if t > T_MAX {
                break;
            }
            sum += pair(t);
            k += 1;
        }
        let estimate = sum * h * half;
        if (estimate - prev).abs() <= tol * (1.0 + estimate.abs()) {
            return estimate;
        }
        prev = estimate;
    }
    prev
}

/// Tanh-sinh quadrature for integrands that only need the point itself.
pub fn tanh_sinh<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    tanh_sinh_endpoints(|x, _, _| f(x), a, b, tol)
}

/// Fourier coefficient c_n of the symbol |1 - e^{i θ}|^{-2α}, n ≥ 0,
/// from the hypergeometric closed form
///
///   c_0 = Γ(1-2α) / Γ(1-α)²,   c_n = c_{n-1} (n-1+α) / (n-α).
///
/// Valid for α ∈ (-1/2, 1/2), α ≠ 0. The recurrence avoids Γ at negative
/// arguments, which matters for the α < 0 branch.
pub fn pure_symbol_coefficient(alpha: f64, n: i64) -> f64 {
    assert!(alpha > -0.5 && alpha < 0.5 && alpha != 0.0);
    let n = n.unsigned_abs(); // real even symbol: c_{-n} = c_n
    let c0 = (stirling_log_gamma(1.0 - 2.0 * alpha) - 2.0 * stirling_log_gamma(1.0 - alpha)).exp();
    let mut c = c0;
    for k in 1..=n {
        let k = k as f64;
        c *= (k - 1.0 + alpha) / (k - alpha);
    }
    c
}

/// (2 - 2 cos d)^{-α} written as d^{-2α} · correction, stable for small d.
pub fn chord_power(d: f64, alpha: f64) -> f64 {
    let corr = if d < 1e-4 {
        // 2 - 2 cos d = d² (1 - d²/12 + d⁴/360 - …)
        1.0 - d * d / 12.0 + d.powi(4) / 360.0
    } else {
        (2.0 - 2.0 * d.cos()) / (d * d)
    };
    d.powf(-2.0 * alpha) * corr.powf(-alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_gamma_known_values() {
        assert!((stirling_log_gamma(1.0)).abs() < 1e-14);
        assert!((stirling_log_gamma(2.0)).abs() < 1e-14);
        assert!((stirling_log_gamma(5.0) - 24.0_f64.ln()).abs() < 1e-13);
        // ln Γ(1/2) = ln √π
        let half_pi = std::f64::consts::PI.sqrt().ln();
        assert!((stirling_log_gamma(0.5) - half_pi).abs() < 1e-14);
    }

    #[test]
    fn beta_known_values() {
        assert!((stirling_beta(0.5, 0.5) - std::f64::consts::PI).abs() < 1e-13);
        assert!((stirling_beta(1.0, 1.0) - 1.0).abs() < 1e-14);
        assert!((stirling_beta(2.0, 3.0) - 1.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn tanh_sinh_handles_endpoint_singularity() {
        // ∫_0^1 x^{-1/2} dx = 2
        let v = tanh_sinh_endpoints(|_, da, _| da.powf(-0.5), 0.0, 1.0, 1e-14);
        assert!((v - 2.0).abs() < 1e-12, "got {v}");
        // ∫_0^1 ln x dx = -1
        let v = tanh_sinh_endpoints(|_, da, _| da.ln(), 0.0, 1.0, 1e-14);
        assert!((v + 1.0).abs() < 1e-12, "got {v}");
        // ∫_0^1 x^{-0.9} dx = 10: the hard algebraic endpoint
        let v = tanh_sinh_endpoints(|_, da, _| da.powf(-0.9), 0.0, 1.0, 1e-14);
        assert!((v - 10.0).abs() < 1e-10, "got {v}");
        // two-sided: ∫₀¹ x^{-1/2}(1-x)^{-1/2} dx = π
        let v = tanh_sinh_endpoints(|_, da, db| da.powf(-0.5) * db.powf(-0.5), 0.0, 1.0, 1e-14);
        assert!((v - std::f64::consts::PI).abs() < 1e-12, "got {v}");
    }

    #[test]
    fn tanh_sinh_smooth_wrapper() {
        let v = tanh_sinh(|x| x.sin(), 0.0, std::f64::consts::PI, 1e-14);
        assert!((v - 2.0).abs() < 1e-13);
    }

    #[test]
    fn pure_coefficient_matches_direct_quadrature() {
        // c_n = (1/π) ∫₀^π |1-e^{iθ}|^{-2α} cos(nθ) dθ, with the chord
        // factor evaluated via the stable offset form.
        let alpha = 0.25;
        for n in [0i64, 1, 2, 5] {
            let direct = tanh_sinh_endpoints(
                |x, da, _| chord_power(da, alpha) * (n as f64 * x).cos(),
                0.0,
                std::f64::consts::PI,
                1e-14,
            ) / std::f64::consts::PI;
            let closed = pure_symbol_coefficient(alpha, n);
            assert!(
                (direct - closed).abs() < 1e-11,
                "n={n}: direct {direct} vs closed {closed}"
            );
        }
    }

    #[test]
    fn pure_coefficient_negative_alpha_signs() {
        let alpha = -0.25;
        let c0 = pure_symbol_coefficient(alpha, 0);
        let c1 = pure_symbol_coefficient(alpha, 1);
        let c2 = pure_symbol_coefficient(alpha, 2);
        assert!(c0 > 0.0 && c1 < 0.0 && c2 < 0.0);
    }
}
