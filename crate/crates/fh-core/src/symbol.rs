//! Symbols on the unit circle of the form
//!
//!   σ(e^{iθ}) = ∏_j |e^{iθ_j} - e^{iθ}|^{-2α_j} · c(e^{iθ})
//!
//! with α_j ∈ (-1/2, 1/2) \ {0} and c a strictly positive trigonometric
//! polynomial. The module evaluates σ pointwise, computes its Fourier
//! coefficients σ̂(n) = (1/2π)∫ σ e^{-inθ} dθ by singularity-aware
//! quadrature, and provides the large-n asymptotic
//!
//!   σ̂(n) ≈ C(α₁) c(χ₁) ∏_{j≠1} |χ₁ - χ_j|^{-2α_j} · n^{2α₁-1}
//!
//! where χ₁ carries the strictly largest exponent.
//!
//! Quadrature layout: the circle is split at every singularity; each arc
//! gets one Gauss-Jacobi closure panel per singular endpoint (absorbing
//! the |θ-θ_j|^{-2α_j} factor exactly) plus uniform Gauss-Legendre panels
//! whose width also resolves the e^{-inθ} oscillation. Two layouts a
//! factor two apart provide the error estimate; the layout is refined
//! until the requested tolerance is met or the node budget is exhausted.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quad;
use crate::specfun::{c_alpha_signed, Exponent};

/// A point e^{iθ} on the unit circle, stored as θ normalized to [0, 2π).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitCirclePoint {
    theta: f64,
}

impl UnitCirclePoint {
    pub fn new(theta: f64) -> Self {
        let mut t = theta.rem_euclid(TAU);
        // rem_euclid can return 2π when theta is a tiny negative number
        if t >= TAU {
            t -= TAU;
        }
        Self { theta: t }
    }

    pub fn theta(self) -> f64 {
        self.theta
    }

    /// The complex value e^{iθ}.
    pub fn value(self) -> Complex64 {
        Complex64::from_polar(1.0, self.theta)
    }

    /// Chord distance |e^{iθ} - e^{iφ}| = 2|sin((θ-φ)/2)|.
    pub fn chord_distance(self, other: UnitCirclePoint) -> f64 {
        2.0 * (0.5 * (self.theta - other.theta)).sin().abs()
    }
}

/// One power-law factor |e^{iθ₀} - e^{iθ}|^{-2α}.
#[derive(Debug, Clone, Copy)]
pub struct Singularity {
    pub location: UnitCirclePoint,
    pub exponent: Exponent,
}

impl Singularity {
    pub fn new(theta: f64, alpha: f64) -> Result<Self> {
        Ok(Self {
            location: UnitCirclePoint::new(theta),
            exponent: Exponent::new(alpha)?,
        })
    }
}

/// The regular factor c: a trigonometric polynomial with Hermitian
/// coefficients (hence real-valued) that is strictly positive on the
/// circle.
#[derive(Debug, Clone)]
pub struct RegularPart {
    /// ĉ(n) for n = 0..=degree; negative coefficients are the conjugates.
    coeffs: Vec<Complex64>,
}

impl RegularPart {
    /// The constant function c ≡ value (value > 0).
    pub fn constant(value: f64) -> Result<Self> {
        Self::from_coefficients(vec![(0, Complex64::new(value, 0.0))])
    }

    /// Build from a sparse list of (n, ĉ(n)). Both signs of n may be
    /// given; when both ĉ(n) and ĉ(-n) are present they must be
    /// conjugates. The resulting function must be strictly positive
    /// (checked on a 4096-point grid).
    pub fn from_coefficients(entries: Vec<(i64, Complex64)>) -> Result<Self> {
        let mut degree = 0usize;
        for (n, _) in &entries {
            degree = degree.max(n.unsigned_abs() as usize);
        }
        let mut pos = vec![None; degree + 1];
        for (n, v) in entries {
            let idx = n.unsigned_abs() as usize;
            let canonical = if n >= 0 { v } else { v.conj() };
            match pos[idx] {
                None => pos[idx] = Some(canonical),
                Some(existing) => {
                    if (existing - canonical).norm() > 1e-12 * (1.0 + existing.norm()) {
                        return Err(Error::Domain(format!(
                            "coefficients at ±{idx} violate Hermitian symmetry"
                        )));
                    }
                }
            }
        }
        if let Some(c0) = pos[0] {
            if c0.im.abs() > 1e-12 * (1.0 + c0.re.abs()) {
                return Err(Error::Domain(
                    "zeroth coefficient of a real function must be real".into(),
                ));
            }
        }
        let coeffs: Vec<Complex64> = pos
            .into_iter()
            .map(|c| c.unwrap_or(Complex64::new(0.0, 0.0)))
            .collect();
        let part = Self { coeffs };
        // regular means essentially bounded and strictly positive
        let mut min = f64::INFINITY;
        for k in 0..4096 {
            min = min.min(part.evaluate(TAU * k as f64 / 4096.0));
        }
        if min.is_nan() || min <= 0.0 {
            return Err(Error::Domain(format!(
                "regular part must be strictly positive on the circle (min {min:.3e})"
            )));
        }
        Ok(part)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Pointwise value c(e^{iθ}) = ĉ(0) + 2 Σ_{n≥1} Re(ĉ(n) e^{inθ}).
    pub fn evaluate(&self, theta: f64) -> f64 {
        let mut v = self.coeffs[0].re;
        let rot = Complex64::from_polar(1.0, theta);
        let mut phase = rot;
        for c in &self.coeffs[1..] {
            v += 2.0 * (c * phase).re;
            phase *= rot;
        }
        v
    }

    /// Σ_n |n|^r |ĉ(n)|, the weighted Wiener norm. Finite by construction
    /// for trigonometric polynomials; exists to document the smoothness
    /// hypothesis behind the coefficient asymptotics.
    pub fn wiener_r_norm(&self, r: f64) -> f64 {
        let mut s = 0.0;
        for (n, c) in self.coeffs.iter().enumerate().skip(1) {
            s += 2.0 * (n as f64).powf(r) * c.norm();
        }
        s
    }

    /// The rotated function θ ↦ c(θ - θ₀), i.e. ĉ'(n) = ĉ(n) e^{-inθ₀}.
    pub fn rotated(&self, theta0: f64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c * Complex64::from_polar(1.0, -(n as f64) * theta0))
            .collect();
        Self { coeffs }
    }

    /// ĉ(n), zero outside the stored support.
    pub fn coefficient(&self, n: i64) -> Complex64 {
        let idx = n.unsigned_abs() as usize;
        if idx >= self.coeffs.len() {
            return Complex64::new(0.0, 0.0);
        }
        if n >= 0 {
            self.coeffs[idx]
        } else {
            self.coeffs[idx].conj()
        }
    }
}

/// A full symbol: power-law singularities times a regular part.
#[derive(Debug, Clone)]
pub struct SymbolSpec {
    singularities: Vec<Singularity>,
    regular: RegularPart,
}

impl SymbolSpec {
    pub fn new(singularities: Vec<Singularity>, regular: RegularPart) -> Result<Self> {
        for (i, a) in singularities.iter().enumerate() {
            for b in &singularities[i + 1..] {
                if a.location.theta() == b.location.theta() {
                    return Err(Error::Domain(format!(
                        "singularity locations must be pairwise distinct (θ = {})",
                        a.location.theta()
                    )));
                }
            }
        }
        Ok(Self { singularities, regular })
    }

    /// Symbol with a single singularity |e^{iθ₀} - e^{iθ}|^{-2α} and c ≡ 1.
    pub fn pure(theta0: f64, alpha: f64) -> Result<Self> {
        Self::new(vec![Singularity::new(theta0, alpha)?], RegularPart::constant(1.0)?)
    }

    pub fn singularities(&self) -> &[Singularity] {
        &self.singularities
    }

    pub fn regular(&self) -> &RegularPart {
        &self.regular
    }

    /// The singularity with the strictly largest exponent. Errors when the
    /// maximum is tied or there are no singularities, since every
    /// asymptotic statement assumes a unique dominant one.
    pub fn dominant(&self) -> Result<&Singularity> {
        let mut best: Option<&Singularity> = None;
        let mut tied = false;
        for s in &self.singularities {
            match best {
                None => best = Some(s),
                Some(b) => {
                    if s.exponent.value() > b.exponent.value() {
                        best = Some(s);
                        tied = false;
                    } else if s.exponent.value() == b.exponent.value() {
                        tied = true;
                    }
                }
            }
        }
        let best = best.ok_or_else(|| {
            Error::Hypothesis("symbol has no singularities; no dominant exponent".into())
        })?;
        if tied {
            return Err(Error::Hypothesis(
                "dominant exponent is not unique".into(),
            ));
        }
        Ok(best)
    }

    /// Pointwise value; +∞ exactly at a singularity with positive
    /// exponent, 0 at one with negative exponent.
    pub fn evaluate(&self, theta: f64) -> f64 {
        let p = UnitCirclePoint::new(theta);
        let mut v = self.regular.evaluate(theta);
        for s in &self.singularities {
            let d = p.chord_distance(s.location);
            if d == 0.0 {
                return if s.exponent.value() > 0.0 { f64::INFINITY } else { 0.0 };
            }
            v *= d.powf(-2.0 * s.exponent.value());
        }
        v
    }

    /// The symbol with every feature rotated by θ₀: singularities move
    /// from θ_j to θ_j + θ₀ and c is replaced by θ ↦ c(θ - θ₀), so that
    /// σ̂'(n) = e^{-inθ₀} σ̂(n).
    pub fn rotated(&self, theta0: f64) -> SymbolSpec {
        let singularities = self
            .singularities
            .iter()
            .map(|s| Singularity {
                location: UnitCirclePoint::new(s.location.theta() + theta0),
                exponent: s.exponent,
            })
            .collect();
        SymbolSpec {
            singularities,
            regular: self.regular.rotated(theta0),
        }
    }

    /// σ̂(n) by adaptive singularity-aware quadrature, with a mixed
    /// absolute/relative error target `tol`.
    pub fn fourier_coefficient(&self, n: i64, tol: f64) -> Result<Complex64> {
        if tol.is_nan() || tol <= 0.0 {
            return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
        }
        let mut cap = self.base_cap(n.unsigned_abs());
        if self.layout_nodes_estimate(cap) > NODE_BUDGET {
            return Err(Error::QuadratureConvergence { achieved: f64::INFINITY, requested: tol });
        }
        let mut prev = self.eval_layout_single(cap, n);
        let mut achieved = f64::INFINITY;
        for _ in 0..MAX_REFINEMENTS {
            cap *= 0.5;
            if self.layout_nodes_estimate(cap) > NODE_BUDGET {
                return Err(Error::QuadratureConvergence { achieved, requested: tol });
            }
            let next = self.eval_layout_single(cap, n);
            achieved = (next - prev).norm() / (1.0 + next.norm());
            if achieved <= tol {
                return Ok(next);
            }
            prev = next;
        }
        Err(Error::QuadratureConvergence { achieved, requested: tol })
    }

    /// σ̂(0..=n_max) in one pass over a shared layout (the layout resolves
    /// the fastest oscillation, so every slower coefficient is at least as
    /// accurate). Errors if the per-coefficient target cannot be met.
    pub fn fourier_coefficients_upto(&self, n_max: usize, tol: f64) -> Result<Vec<Complex64>> {
        if tol.is_nan() || tol <= 0.0 {
            return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
        }
        let mut cap = self.base_cap(n_max as u64);
        if self.layout_nodes_estimate(cap) > NODE_BUDGET {
            return Err(Error::QuadratureConvergence { achieved: f64::INFINITY, requested: tol });
        }
        let mut prev = self.eval_layout_batch(cap, n_max);
        let mut achieved = f64::INFINITY;
        for _ in 0..MAX_REFINEMENTS {
            cap *= 0.5;
            if self.layout_nodes_estimate(cap) > NODE_BUDGET {
                return Err(Error::QuadratureConvergence { achieved, requested: tol });
            }
            let next = self.eval_layout_batch(cap, n_max);
            achieved = prev
                .iter()
                .zip(&next)
                .map(|(a, b)| (a - b).norm() / (1.0 + b.norm()))
                .fold(0.0f64, f64::max);
            if achieved <= tol {
                return Ok(next);
            }
            prev = next;
        }
        Err(Error::QuadratureConvergence { achieved, requested: tol })
    }

    /// The leading-order coefficient asymptotic
    /// C(α_dom) · c(χ_dom) · ∏_{j≠dom} |χ_dom - χ_j|^{-2α_j} · n^{2α_dom-1}.
    pub fn fourier_asymptotic(&self, n: u64) -> Result<f64> {
        if n == 0 {
            return Err(Error::Domain("asymptotic formula needs n >= 1".into()));
        }
        let dom = self.dominant()?;
        let alpha = dom.exponent.value();
        let mut amplitude = c_alpha_signed(alpha) * self.regular.evaluate(dom.location.theta());
        for s in &self.singularities {
            if s.location.theta() == dom.location.theta() {
                continue;
            }
            let d = dom.location.chord_distance(s.location);
            amplitude *= d.powf(-2.0 * s.exponent.value());
        }
        Ok(amplitude * (n as f64).powf(2.0 * alpha - 1.0))
    }

    // ----- quadrature internals -------------------------------------------

    /// Initial panel-width cap: resolve the regular part's degree and the
    /// target oscillation (~half a wavelength per 16-point panel).
    fn base_cap(&self, n_max: u64) -> f64 {
        let osc = n_max.max(2 * self.regular.degree() as u64).max(4) as f64;
        (8.0 / osc).min(PI / 4.0)
    }

    fn arcs(&self) -> Vec<(f64, f64, Option<usize>, Option<usize>)> {
        // (start, length, index of singularity at start, at end)
        if self.singularities.is_empty() {
            return vec![(0.0, TAU, None, None)];
        }
        let mut order: Vec<usize> = (0..self.singularities.len()).collect();
        order.sort_by(|&i, &j| {
            self.singularities[i]
                .location
                .theta()
                .partial_cmp(&self.singularities[j].location.theta())
                .unwrap()
        });
        let mut arcs = Vec::with_capacity(order.len());
        for k in 0..order.len() {
            let i = order[k];
            let j = order[(k + 1) % order.len()];
            let a = self.singularities[i].location.theta();
            let b = self.singularities[j].location.theta();
            let len = if k + 1 == order.len() { b + TAU - a } else { b - a };
            arcs.push((a, len, Some(i), Some(j)));
        }
        arcs
    }

    fn layout_nodes_estimate(&self, cap: f64) -> usize {
        (TAU / cap).ceil() as usize * 16 + 64 * self.singularities.len().max(1)
    }

    /// Symbol value with the factor |θ-anchor|^{-2α_own} removed, for
    /// stable evaluation at offset u from the singular anchor. `side` is
    /// +1 when u increases along θ and -1 when it decreases.
    fn reduced_value(&self, own: usize, anchor: f64, u: f64, side: f64) -> f64 {
        let theta = anchor + side * u;
        let alpha_own = self.singularities[own].exponent.value();
        // |2 sin(u/2)| = u · sinc-like correction, computed from u directly
        let corr = if u < 1e-4 {
            1.0 - u * u / 24.0 + u.powi(4) / 1920.0
        } else {
            2.0 * (0.5 * u).sin() / u
        };
        let mut v = self.regular.evaluate(theta) * corr.powf(-2.0 * alpha_own);
        let p = UnitCirclePoint::new(theta);
        for (j, s) in self.singularities.iter().enumerate() {
            if j == own {
                continue;
            }
            v *= p.chord_distance(s.location).powf(-2.0 * s.exponent.value());
        }
        v
    }

    fn full_value(&self, theta: f64) -> f64 {
        let p = UnitCirclePoint::new(theta);
        let mut v = self.regular.evaluate(theta);
        for s in &self.singularities {
            v *= p.chord_distance(s.location).powf(-2.0 * s.exponent.value());
        }
        v
    }

    /// Build the quadrature layout for panel cap `cap`: a list of
    /// (θ, w·σ_amplitude) nodes such that σ̂(n) ≈ (1/2π) Σ q_k e^{-inθ_k}.
    fn layout(&self, cap: f64) -> Vec<(f64, f64)> {
        let mut nodes: Vec<(f64, f64)> = Vec::with_capacity(self.layout_nodes_estimate(cap));
        for (start, len, s_lo, s_hi) in self.arcs() {
            let half = 0.5 * len;
            for (anchor, side, own) in [(start, 1.0, s_lo), (start + len, -1.0, s_hi)] {
                match own {
                    Some(own) => {
                        let beta = -2.0 * self.singularities[own].exponent.value();
                        let rule = quad::jacobi_rule(beta);
                        let delta = cap.min(half);
                        // closure panel [0, delta] in offset coordinates
                        let scale = delta.powf(beta + 1.0);
                        for (t, w) in rule.nodes.iter().zip(&rule.weights) {
                            let u = delta * t;
                            let q = w * scale * self.reduced_value(own, anchor, u, side);
                            nodes.push((anchor + side * u, q));
                        }
                        // uniform panels from delta to the arc midpoint
                        let mut lo = delta;
                        while lo < half {
                            let hi = (lo + cap).min(half);
                            let (gl_nodes, gl_weights) = Self::gl16();
                            let mid = 0.5 * (lo + hi);
                            let hw = 0.5 * (hi - lo);
                            for (x, w) in gl_nodes.iter().zip(gl_weights) {
                                let u = mid + hw * x;
                                let q = w * hw * self.full_value(anchor + side * u);
                                nodes.push((anchor + side * u, q));
                            }
                            lo = hi;
                        }
                    }
                    None => {
                        // no singular endpoint: plain panels over the half-arc
                        let mut lo = 0.0f64;
                        while lo < half {
                            let hi = (lo + cap).min(half);
                            let (gl_nodes, gl_weights) = Self::gl16();
                            let mid = 0.5 * (lo + hi);
                            let hw = 0.5 * (hi - lo);
                            for (x, w) in gl_nodes.iter().zip(gl_weights) {
                                let u = mid + hw * x;
                                let q = w * hw * self.full_value(anchor + side * u);
                                nodes.push((anchor + side * u, q));
                            }
                            lo = hi;
                        }
                    }
                }
            }
        }
        nodes
    }

    fn gl16() -> (&'static [f64], &'static [f64]) {
        use std::sync::OnceLock;
        static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
        let (n, w) = RULE.get_or_init(|| quad::gauss_legendre(16));
        (n, w)
    }

    fn eval_layout_single(&self, cap: f64, n: i64) -> Complex64 {
        let nodes = self.layout(cap);
        let nf = -(n as f64);
        let mut acc = Complex64::new(0.0, 0.0);
        for (theta, q) in nodes {
            acc += q * Complex64::from_polar(1.0, nf * theta);
        }
        acc / TAU
    }

    fn eval_layout_batch(&self, cap: f64, n_max: usize) -> Vec<Complex64> {
        let nodes = self.layout(cap);
        let m = nodes.len();
        let mut rot: Vec<Complex64> = Vec::with_capacity(m);
        let mut acc: Vec<Complex64> = Vec::with_capacity(m);
        for &(theta, q) in &nodes {
            rot.push(Complex64::from_polar(1.0, -theta));
            acc.push(Complex64::new(q, 0.0));
        }
        let mut out = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut s = Complex64::new(0.0, 0.0);
            for a in &acc {
                s += a;
            }
            out.push(s / TAU);
            if n == n_max {
                break;
            }
            if (n + 1) % 256 == 0 {
                // refresh the phases to stop rounding drift in the
                // incremental rotation
                let nf = -((n + 1) as f64);
                for (a, &(theta, q)) in acc.iter_mut().zip(&nodes) {
                    *a = q * Complex64::from_polar(1.0, nf * theta);
                }
            } else {
                for (a, r) in acc.iter_mut().zip(&rot) {
                    *a *= r;
                }
            }
        }
        out
    }
}

const MAX_REFINEMENTS: usize = 10;
const NODE_BUDGET: usize = 6_000_000;

#[cfg(test)]
mod tests {
    use super::*;

    fn pure_quarter() -> SymbolSpec {
        SymbolSpec::pure(0.0, 0.25).unwrap()
    }

    #[test]
    fn evaluate_trivial_cases() {
        let flat = SymbolSpec::new(vec![], RegularPart::constant(1.0).unwrap()).unwrap();
        for theta in [0.0, 1.0, 3.5] {
            assert!((flat.evaluate(theta) - 1.0).abs() < 1e-15);
        }
        // |1 - e^{iπ}|^{-1/2} = 2^{-1/2}
        let s = pure_quarter();
        assert!((s.evaluate(PI) - 0.5f64.sqrt()).abs() < 1e-14);
        assert_eq!(s.evaluate(0.0), f64::INFINITY);
    }

    #[test]
    fn evaluate_two_singularities() {
        // exponents 0.3 at θ=0 and 0.1 at θ=π, evaluated at π/2:
        // (√2)^{-0.6} (√2)^{-0.2} = 2^{-0.4}
        let s = SymbolSpec::new(
            vec![
                Singularity::new(0.0, 0.3).unwrap(),
                Singularity::new(PI, 0.1).unwrap(),
            ],
            RegularPart::constant(1.0).unwrap(),
        )
        .unwrap();
        let want = 2.0f64.powf(-0.4);
        assert!((s.evaluate(PI / 2.0) - want).abs() < 1e-14);
    }

    #[test]
    fn evaluate_negative_exponent_vanishes() {
        let s = SymbolSpec::pure(1.0, -0.25).unwrap();
        assert_eq!(s.evaluate(1.0), 0.0);
        assert!(s.evaluate(2.0) > 0.0);
    }

    #[test]
    fn wiener_norm_examples() {
        let flat = RegularPart::constant(1.0).unwrap();
        assert_eq!(flat.wiener_r_norm(1.0), 0.0);
        // ĉ(±1) = 1/2 → Σ |u| |ĉ(u)| = 1
        let c = RegularPart::from_coefficients(vec![
            (0, Complex64::new(2.0, 0.0)),
            (1, Complex64::new(0.5, 0.0)),
        ])
        .unwrap();
        assert!((c.wiener_r_norm(1.0) - 1.0).abs() < 1e-15);
        // ĉ(±2) = 1/4, r = 2 → 2·(4·1/4) = 2
        let c = RegularPart::from_coefficients(vec![
            (0, Complex64::new(2.0, 0.0)),
            (2, Complex64::new(0.25, 0.0)),
        ])
        .unwrap();
        assert!((c.wiener_r_norm(2.0) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn regular_part_must_be_positive() {
        // 1 + cos θ vanishes at π
        let r = RegularPart::from_coefficients(vec![
            (0, Complex64::new(1.0, 0.0)),
            (1, Complex64::new(0.5, 0.0)),
        ]);
        assert!(r.is_err());
        // 2 + cos θ is fine
        let r = RegularPart::from_coefficients(vec![
            (0, Complex64::new(2.0, 0.0)),
            (1, Complex64::new(0.5, 0.0)),
        ]);
        assert!(r.is_ok());
    }

    #[test]
    fn hermitian_symmetry_enforced() {
        let r = RegularPart::from_coefficients(vec![
            (0, Complex64::new(2.0, 0.0)),
            (1, Complex64::new(0.1, 0.2)),
            (-1, Complex64::new(0.1, 0.2)), // should be the conjugate
        ]);
        assert!(r.is_err());
    }

    #[test]
    fn distinct_locations_enforced() {
        let s = SymbolSpec::new(
            vec![
                Singularity::new(1.0, 0.2).unwrap(),
                Singularity::new(1.0 + TAU, 0.3).unwrap(), // same point after normalization
            ],
            RegularPart::constant(1.0).unwrap(),
        );
        assert!(s.is_err());
    }

    #[test]
    fn coefficients_of_flat_symbol() {
        let flat = SymbolSpec::new(vec![], RegularPart::constant(1.0).unwrap()).unwrap();
        let c0 = flat.fourier_coefficient(0, 1e-12).unwrap();
        assert!((c0.re - 1.0).abs() < 1e-12 && c0.im.abs() < 1e-12);
        for n in [1i64, 5, -3] {
            let c = flat.fourier_coefficient(n, 1e-12).unwrap();
            assert!(c.norm() < 1e-12, "n={n}: {c}");
        }
    }

    #[test]
    fn coefficients_of_regular_polynomial_are_exact() {
        // c = 2 + cos θ: ĉ(0)=2, ĉ(±1)=1/2, everything else 0
        let s = SymbolSpec::new(
            vec![],
            RegularPart::from_coefficients(vec![
                (0, Complex64::new(2.0, 0.0)),
                (1, Complex64::new(0.5, 0.0)),
            ])
            .unwrap(),
        )
        .unwrap();
        assert!((s.fourier_coefficient(0, 1e-12).unwrap().re - 2.0).abs() < 1e-11);
        assert!((s.fourier_coefficient(1, 1e-12).unwrap().re - 0.5).abs() < 1e-11);
        assert!((s.fourier_coefficient(-1, 1e-12).unwrap().re - 0.5).abs() < 1e-11);
        assert!(s.fourier_coefficient(2, 1e-12).unwrap().norm() < 1e-11);
    }

    #[test]
    fn pure_symbol_zeroth_coefficient() {
        // σ̂(0) = Γ(1/2)/Γ(3/4)² ≈ 1.180340599
        let s = pure_quarter();
        let c0 = s.fourier_coefficient(0, 1e-11).unwrap();
        let want = fh_testkit::pure_symbol_coefficient(0.25, 0);
        assert!((c0.re - want).abs() < 1e-9, "{} vs {want}", c0.re);
        assert!(c0.im.abs() < 1e-11);
    }

    #[test]
    fn pure_symbol_small_n_against_closed_form() {
        let s = pure_quarter();
        for n in [1i64, 2, 3, 7, 16] {
            let got = s.fourier_coefficient(n, 1e-11).unwrap();
            let want = fh_testkit::pure_symbol_coefficient(0.25, n);
            assert!(
                (got.re - want).abs() <= 1e-8 * want.abs().max(1e-3),
                "n={n}: {} vs {want}",
                got.re
            );
        }
    }

    #[test]
    fn conjugate_symmetry() {
        let s = SymbolSpec::new(
            vec![
                Singularity::new(1.3, 0.3).unwrap(),
                Singularity::new(4.0, 0.15).unwrap(),
            ],
            RegularPart::from_coefficients(vec![
                (0, Complex64::new(2.0, 0.0)),
                (1, Complex64::new(0.3, 0.4)),
            ])
            .unwrap(),
        )
        .unwrap();
        let tol = 1e-10;
        for n in [1i64, 4, 9] {
            let plus = s.fourier_coefficient(n, tol).unwrap();
            let minus = s.fourier_coefficient(-n, tol).unwrap();
            assert!(
                (minus - plus.conj()).norm() <= 2.0 * tol * (1.0 + plus.norm()),
                "n={n}"
            );
        }
    }

    #[test]
    fn rotation_covariance() {
        let s = SymbolSpec::pure(0.0, 0.3).unwrap();
        let theta0 = 0.9;
        let rotated = s.rotated(theta0);
        let tol = 1e-10;
        for n in [1i64, 5] {
            let base = s.fourier_coefficient(n, tol).unwrap();
            let rot = rotated.fourier_coefficient(n, tol).unwrap();
            let want = base * Complex64::from_polar(1.0, -(n as f64) * theta0);
            assert!((rot - want).norm() <= 2.0 * tol * (1.0 + base.norm()), "n={n}");
        }
    }

    #[test]
    fn batch_matches_single() {
        let s = SymbolSpec::new(
            vec![Singularity::new(0.0, 0.25).unwrap(), Singularity::new(2.5, 0.1).unwrap()],
            RegularPart::constant(1.0).unwrap(),
        )
        .unwrap();
        let batch = s.fourier_coefficients_upto(12, 1e-10).unwrap();
        for n in [0i64, 1, 5, 12] {
            let single = s.fourier_coefficient(n, 1e-10).unwrap();
            assert!(
                (batch[n as usize] - single).norm() < 1e-9,
                "n={n}: batch {} vs single {single}",
                batch[n as usize]
            );
        }
    }

    #[test]
    fn asymptotic_formula_values() {
        // single singularity: C(1/4) n^{-1/2}
        let s = pure_quarter();
        let want = crate::specfun::c_alpha(0.25).unwrap() * 100.0f64.powf(-0.5);
        assert!((s.fourier_asymptotic(100).unwrap() - want).abs() < 1e-15);
        // companion factor |χ_dom - χ_j|^{-2α_j} with χ_j = e^{iπ}: distance 2
        let two = SymbolSpec::new(
            vec![
                Singularity::new(0.0, 0.3).unwrap(),
                Singularity::new(PI, 0.1).unwrap(),
            ],
            RegularPart::constant(1.0).unwrap(),
        )
        .unwrap();
        let want = crate::specfun::c_alpha(0.3).unwrap()
            * 2.0f64.powf(-0.2)
            * 1000.0f64.powf(-0.4);
        assert!((two.fourier_asymptotic(1000).unwrap() - want).abs() < 1e-14);
    }

    #[test]
    fn asymptotic_requires_unique_dominant() {
        let tied = SymbolSpec::new(
            vec![
                Singularity::new(0.0, 0.2).unwrap(),
                Singularity::new(PI, 0.2).unwrap(),
            ],
            RegularPart::constant(1.0).unwrap(),
        )
        .unwrap();
        assert!(matches!(tied.fourier_asymptotic(10), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn coefficient_scaling_toward_asymptotic() {
        // σ̂(4n)/σ̂(n) ≈ 4^{2α-1} once n is large
        let s = pure_quarter();
        let a = s.fourier_coefficient(10_000, 1e-11).unwrap().re;
        let b = s.fourier_coefficient(40_000, 1e-11).unwrap().re;
        let ratio = b / a;
        let want = 4.0f64.powf(-0.5);
        assert!((ratio - want).abs() < 0.01 * want, "ratio {ratio} vs {want}");
    }
}
