//! Gauss quadrature primitives.
//!
//! Two rules cover everything the crate integrates:
//!
//! - plain Gauss-Legendre panels for smooth (possibly oscillatory) pieces,
//! - Gauss-Jacobi rules with weight v^β, β > -1, which absorb the
//!   algebraic endpoint singularities exactly instead of chasing them
//!   with ever finer panels.
//!
//! [`power_weighted_integral`] combines the two for integrals of the form
//! ∫₀^X v^β g(v) dv with g smooth: one Jacobi panel on [0, min(X,1)] and
//! geometrically growing Legendre panels beyond, so the cost is
//! O(log X) panels at machine accuracy.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::linalg;

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1],
/// computed by Newton iteration on P_n. Accurate to ~2 ulp.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        // Tricomi initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre recurrence for P_n(x) and P'_n(x)
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

const PANEL_ORDER: usize = 16;

fn legendre_rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(PANEL_ORDER))
}

/// ∫_a^b f(x) dx by the cached 16-point Legendre rule.
pub fn legendre_panel<F: FnMut(f64) -> f64>(a: f64, b: f64, mut f: F) -> f64 {
    let (nodes, weights) = legendre_rule();
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut s = 0.0;
    for (x, w) in nodes.iter().zip(weights) {
        s += w * f(mid + half * x);
    }
    s * half
}

/// A Gauss-Jacobi rule on the unit interval for the weight v^β:
/// ∫₀¹ v^β g(v) dv ≈ Σ w_i g(v_i), with v_i ∈ (0, 1).
#[derive(Debug, Clone)]
pub struct JacobiRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub beta: f64,
}

impl JacobiRule {
    /// Golub-Welsch on the (0, β) Jacobi recurrence, order `n`.
    pub fn new(beta: f64, n: usize) -> Self {
        assert!(beta > -1.0, "Jacobi weight exponent must exceed -1");
        // Symmetric tridiagonal Jacobi matrix for weight (1+x)^β on [-1,1]
        // (Golub-Welsch; recurrence coefficients of the (0, β) family).
        let mut t = vec![0.0; n * n];
        for k in 0..n {
            let kf = k as f64;
            t[k * n + k] = if k == 0 {
                beta / (beta + 2.0)
            } else {
                let d = 2.0 * kf + beta;
                beta * beta / (d * (d + 2.0))
            };
            if k + 1 < n {
                let j = kf + 1.0;
                let d = 2.0 * j + beta;
                let b2 =
                    4.0 * j * j * (j + beta) * (j + beta) / (d * d * (d + 1.0) * (d - 1.0));
                let b = b2.sqrt();
                t[k * n + (k + 1)] = b;
                t[(k + 1) * n + k] = b;
            }
        }
        let (vals, vecs) = linalg::symmetric_eigen(&t, n);
        // Total mass of (1+x)^β on [-1,1] is 2^{β+1}/(β+1); mapping
        // v = (1+x)/2 onto [0,1] multiplies each weight by 2^{-β-1}, so
        // that Σ w_i g(v_i) = ∫₀¹ v^β g(v) dv exactly for polynomial g.
        let mu0 = 2.0f64.powf(beta + 1.0) / (beta + 1.0);
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for k in 0..n {
            let v = 0.5 * (1.0 + vals[k]);
            let first = vecs[k]; // row 0, column k of the eigenvector matrix
            nodes.push(v);
            weights.push(mu0 * first * first * 2.0f64.powf(-beta - 1.0));
        }
        Self { nodes, weights, beta }
    }

    /// ∫₀^h u^β g(u) du with g smooth on [0, h].
    pub fn integrate_scaled<F: FnMut(f64) -> f64>(&self, h: f64, mut g: F) -> f64 {
        let scale = h.powf(self.beta + 1.0);
        let mut s = 0.0;
        for (v, w) in self.nodes.iter().zip(&self.weights) {
            s += w * g(h * v);
        }
        s * scale
    }
}

type RuleCache = Mutex<HashMap<(u64, usize), Arc<JacobiRule>>>;

fn jacobi_cache(beta: f64, n: usize) -> Arc<JacobiRule> {
    static CACHE: OnceLock<RuleCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (beta.to_bits(), n);
    let mut map = cache.lock().unwrap();
    map.entry(key)
        .or_insert_with(|| Arc::new(JacobiRule::new(beta, n)))
        .clone()
}

/// Cached 16-point Jacobi rule for the weight v^β on [0, 1].
pub fn jacobi_rule(beta: f64) -> Arc<JacobiRule> {
    jacobi_cache(beta, PANEL_ORDER)
}

/// ∫₀^X v^β g(v) dv for β > -1 and g smooth on [0, X].
///
/// The singular end is handled by one Jacobi panel on [0, min(X, 1)];
/// the rest is covered by Legendre panels doubling in width, so the
/// result is machine-accurate for the v^{β}(1±v)^{γ}-type integrands the
/// kernel evaluation produces.
pub fn power_weighted_integral<F: FnMut(f64) -> f64>(beta: f64, upper: f64, mut g: F) -> f64 {
    if upper <= 0.0 {
        return 0.0;
    }
    let rule = jacobi_rule(beta);
    let head = upper.min(1.0);
    let mut total = rule.integrate_scaled(head, &mut g);
    let mut lo = head;
    while lo < upper {
        let hi = (2.0 * lo).min(upper);
        total += legendre_panel(lo, hi, |v| v.powf(beta) * g(v));
        lo = hi;
    }
    total
}
