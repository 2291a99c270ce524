//! The skewed geometric distribution and the generic discrete
//! cdf-weighting (Azzalini-style) combinator.
//!
//! The distribution weights the geometric pmf q·p^x by the geometric cdf
//! evaluated at αx and renormalizes:
//!
//! ```text
//! P(x) = q p^x (1 − p^{αx+1}) / W,   W = 1 − pq/(1 − p^{α+1})
//! ```
//!
//! Substituting β = p^α gives the equivalent bounded parameterization used
//! for fitting:
//!
//! ```text
//! P(x) = p^x (1−p)(1−pβ^x)(1−pβ) / (1 − pβ − p(1−p)),   0 < β ≤ 1
//! ```
//!
//! β = 1 (α = 0) is exactly the geometric distribution; β → 0 (α → ∞) is a
//! zero-modified geometric. All functions here are closed-form and pure.

use crate::error::{Error, Result};
use crate::special::powu;

/// Parameters (p, α) of the skewed geometric distribution: the geometric
/// parameter p ∈ (0,1) and the skewing exponent α ≥ 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SgParams {
    p: f64,
    alpha: f64,
}

/// Reparameterized form (p, β) with β = p^α ∈ (0, 1]. β = 1 is the
/// geometric boundary used as the null of the likelihood-ratio test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RsgParams {
    p: f64,
    beta: f64,
}

fn check_p(p: f64) -> Result<()> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidParameter {
            name: "p",
            value: p,
            reason: "must lie in the open interval (0, 1)",
        });
    }
    Ok(())
}

impl SgParams {
    pub fn new(p: f64, alpha: f64) -> Result<Self> {
        check_p(p)?;
        if !(alpha >= 0.0 && alpha.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "alpha",
                value: alpha,
                reason: "must be a finite non-negative real",
            });
        }
        Ok(Self { p, alpha })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Convert to the bounded parameterization, β = p^α. α = 0 maps to β = 1.
    pub fn to_rsg(&self) -> RsgParams {
        let beta = if self.alpha == 0.0 {
            1.0
        } else {
            (self.alpha * self.p.ln()).exp()
        };
        RsgParams {
            p: self.p,
            beta: beta.min(1.0),
        }
    }

    pub fn normalizer(&self) -> f64 {
        self.to_rsg().normalizer()
    }

    pub fn pmf(&self, x: u64) -> f64 {
        self.to_rsg().pmf(x)
    }

    pub fn log_pmf(&self, x: u64) -> f64 {
        self.to_rsg().log_pmf(x)
    }

    pub fn cdf(&self, x: u64) -> f64 {
        self.to_rsg().cdf(x)
    }

    pub fn survival(&self, x: u64) -> f64 {
        self.to_rsg().survival(x)
    }

    pub fn hazard(&self, x: u64) -> Result<f64> {
        self.to_rsg().hazard(x)
    }

    pub fn pgf(&self, z: f64) -> f64 {
        self.to_rsg().pgf(z)
    }

    pub fn mean(&self) -> f64 {
        self.to_rsg().mean()
    }

    pub fn variance(&self) -> f64 {
        self.to_rsg().variance()
    }

    pub fn dispersion_index(&self) -> f64 {
        self.to_rsg().dispersion_index()
    }

    pub fn recurrence_step(&self, x: u64, pmf_x: f64) -> f64 {
        self.to_rsg().recurrence_step(x, pmf_x)
    }

    pub fn pmf_table(&self, tail_tol: f64) -> PmfTable {
        self.to_rsg().pmf_table(tail_tol)
    }
}

impl RsgParams {
    pub fn new(p: f64, beta: f64) -> Result<Self> {
        check_p(p)?;
        if !(beta > 0.0 && beta <= 1.0) {
            return Err(Error::InvalidParameter {
                name: "beta",
                value: beta,
                reason: "must lie in the half-open interval (0, 1]",
            });
        }
        Ok(Self { p, beta })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Convert back to the (p, α) form, α = log β / log p. β = 1 maps to α = 0.
    pub fn to_sg(&self) -> SgParams {
        let alpha = if self.beta == 1.0 {
            0.0
        } else {
            self.beta.ln() / self.p.ln()
        };
        SgParams { p: self.p, alpha }
    }

    #[inline]
    fn q(&self) -> f64 {
        1.0 - self.p
    }

    /// Denominator 1 − pβ − p(1−p) shared by pmf, cdf and moments.
    #[inline]
    fn denom(&self) -> f64 {
        1.0 - self.p * self.beta - self.p * self.q()
    }

    /// Total weighted mass W = 1 − pq/(1 − pβ) ∈ (0, 1].
    pub fn normalizer(&self) -> f64 {
        self.denom() / (1.0 - self.p * self.beta)
    }

    /// log P(X = x). Computed in log space so that large x and small β do
    /// not produce spurious zeros inside likelihoods.
    pub fn log_pmf(&self, x: u64) -> f64 {
        let p = self.p;
        let bx = powu(self.beta, x);
        x as f64 * p.ln() + self.q().ln() + (-p * bx).ln_1p() + (-p * self.beta).ln_1p()
            - self.denom().ln()
    }

    pub fn pmf(&self, x: u64) -> f64 {
        self.log_pmf(x).exp()
    }

    /// P(X > x), closed form p^{x+1}(1 − pβ − pqβ^{x+1})/D.
    pub fn survival(&self, x: u64) -> f64 {
        let p = self.p;
        let b_next = powu(self.beta, x + 1);
        powu(p, x + 1) * (1.0 - p * self.beta - p * self.q() * b_next) / self.denom()
    }

    /// P(X ≤ x) = 1 − survival(x); non-decreasing, tends to 1.
    pub fn cdf(&self, x: u64) -> f64 {
        1.0 - self.survival(x)
    }

    /// Failure rate P(X = x)/P(X > x); closed form
    /// q(1−pβ^x)(1−pβ) / (p(1−pβ−pqβ^{x+1})). Errors once survival
    /// underflows to zero at the evaluation point.
    pub fn hazard(&self, x: u64) -> Result<f64> {
        if self.survival(x) == 0.0 {
            return Err(Error::SupportExhausted { x });
        }
        let p = self.p;
        let q = self.q();
        let bx = powu(self.beta, x);
        Ok(q * (1.0 - p * bx) * (1.0 - p * self.beta)
            / (p * (1.0 - p * self.beta - p * q * self.beta * bx)))
    }

    /// Probability generating function G(z) = [H(z) − pH(βpz)]/W with
    /// H(z) = q/(1 − pz). Defined for |z| ≤ 1.
    pub fn pgf(&self, z: f64) -> f64 {
        debug_assert!(z.abs() <= 1.0 + 1e-12);
        let p = self.p;
        let q = self.q();
        let h = q / (1.0 - p * z);
        let h_scaled = q / (1.0 - p * self.beta * z);
        (h - p * h_scaled) * (1.0 - p * self.beta) / self.denom()
    }

    /// Mean G′(1) = [p/q − qp²β/(1−pβ)²]/W.
    pub fn mean(&self) -> f64 {
        let p = self.p;
        let q = self.q();
        let pb = p * self.beta;
        (p / q - q * p * p * self.beta / ((1.0 - pb) * (1.0 - pb))) * (1.0 - pb) / self.denom()
    }

    /// Second factorial moment G″(1) = [2p²/q² − 2qp³β²/(1−pβ)³]/W.
    pub fn second_factorial_moment(&self) -> f64 {
        let p = self.p;
        let q = self.q();
        let pb = p * self.beta;
        let one_m = 1.0 - pb;
        (2.0 * p * p / (q * q) - 2.0 * q * p.powi(3) * self.beta * self.beta / one_m.powi(3))
            * one_m
            / self.denom()
    }

    /// Var(X) = G″(1) + μ − μ².
    pub fn variance(&self) -> f64 {
        let mu = self.mean();
        self.second_factorial_moment() + mu - mu * mu
    }

    /// Variance-to-mean ratio; exceeds 1 everywhere in the parameter space.
    pub fn dispersion_index(&self) -> f64 {
        self.variance() / self.mean()
    }

    /// Two-term recurrence P(x+1) = p(1−pβ^{x+1})/(1−pβ^x) · P(x).
    /// The ratio tends to p as x → ∞, so the tail is geometric-like.
    pub fn recurrence_step(&self, x: u64, pmf_x: f64) -> f64 {
        let bx = powu(self.beta, x);
        pmf_x * self.p * (1.0 - self.p * self.beta * bx) / (1.0 - self.p * bx)
    }

    /// Materialize P(0..=X) with X chosen as the smallest point where the
    /// geometric tail bound p^{X+1}/W drops below `tail_tol`. The stored
    /// tail mass is the closed-form survival at X.
    pub fn pmf_table(&self, tail_tol: f64) -> PmfTable {
        let w = self.normalizer();
        let mut x_max = 0u64;
        let mut bound = self.p; // p^{x_max+1}
        while bound / w >= tail_tol && x_max < 10_000_000 {
            x_max += 1;
            bound *= self.p;
        }
        let mut probabilities = Vec::with_capacity(x_max as usize + 1);
        let mut px = self.pmf(0);
        probabilities.push(px);
        for x in 0..x_max {
            px = self.recurrence_step(x, px);
            probabilities.push(px);
        }
        PmfTable {
            probabilities,
            tail_mass: self.survival(x_max),
        }
    }
}

/// Truncated materialization of a pmf for tests, expected-frequency
/// computation, and fast repeated inversion.
#[derive(Debug, Clone)]
pub struct PmfTable {
    /// P(X = x) for x = 0..=x_max.
    pub probabilities: Vec<f64>,
    /// P(X > x_max).
    pub tail_mass: f64,
}

impl PmfTable {
    pub fn x_max(&self) -> u64 {
        self.probabilities.len() as u64 - 1
    }

    /// Smallest x maximizing the stored probabilities.
    pub fn argmax(&self) -> u64 {
        let mut best = 0usize;
        for (i, &v) in self.probabilities.iter().enumerate() {
            if v > self.probabilities[best] {
                best = i;
            }
        }
        best as u64
    }
}

/// Pointwise α → ∞ limit of the skewed geometric pmf:
/// P(0) = q²/(1−pq), P(x) = qp^x/(1−pq) for x ≥ 1. Zero-deflates or
/// inflates the base geometric according as q → 0 or 1.
pub fn limit_pmf_alpha_inf(p: f64, x: u64) -> f64 {
    debug_assert!(p > 0.0 && p < 1.0);
    let q = 1.0 - p;
    let denom = 1.0 - p * q;
    if x == 0 {
        q * q / denom
    } else {
        q * powu(p, x) / denom
    }
}

/// Smallest α beyond which the mode leaves zero: log(2p−1)/log(p) − 2.
/// For p ≤ 1/2 the mode sits at zero for every α and there is no
/// threshold, so `None` is returned.
pub fn mode_threshold(p: f64) -> Option<f64> {
    debug_assert!(p > 0.0 && p < 1.0);
    if p <= 0.5 {
        None
    } else {
        Some((2.0 * p - 1.0).ln() / p.ln() - 2.0)
    }
}

/// A discrete distribution on {0, 1, 2, ...} described by its pmf and pgf.
pub trait DiscreteBase {
    fn pmf(&self, x: u64) -> f64;
    /// H(z) = Σ pmf(x)·z^x for |z| ≤ 1; H(1) = 1.
    fn pgf(&self, z: f64) -> f64;
}

/// Geometric(p) on {0, 1, 2, ...}: pmf q·p^x, pgf q/(1 − pz).
#[derive(Debug, Clone, Copy)]
pub struct GeometricBase {
    pub p: f64,
}

impl DiscreteBase for GeometricBase {
    fn pmf(&self, x: u64) -> f64 {
        (1.0 - self.p) * powu(self.p, x)
    }

    fn pgf(&self, z: f64) -> f64 {
        (1.0 - self.p) / (1.0 - self.p * z)
    }
}

/// An arbitrary base pmf reweighted by the geometric cdf at αx:
/// P(x) = base(x)·(1 − p^{αx+1})/W with W = 1 − p·H(p^α).
#[derive(Debug, Clone)]
pub struct AzzaliniWeighted<B> {
    base: B,
    p: f64,
    p_alpha: f64,
    w: f64,
}

/// Build the weighted distribution from `base`, p ∈ (0,1), and α ≥ 0.
pub fn azzalini_weighted<B: DiscreteBase>(base: B, p: f64, alpha: f64) -> Result<AzzaliniWeighted<B>> {
    check_p(p)?;
    if !(alpha >= 0.0 && alpha.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "alpha",
            value: alpha,
            reason: "must be a finite non-negative real",
        });
    }
    let p_alpha = if alpha == 0.0 { 1.0 } else { (alpha * p.ln()).exp() };
    let w = 1.0 - p * base.pgf(p_alpha);
    Ok(AzzaliniWeighted { base, p, p_alpha, w })
}

impl<B: DiscreteBase> AzzaliniWeighted<B> {
    /// Total weighted mass before normalization.
    pub fn normalizer(&self) -> f64 {
        self.w
    }
}

impl<B: DiscreteBase> DiscreteBase for AzzaliniWeighted<B> {
    fn pmf(&self, x: u64) -> f64 {
        self.base.pmf(x) * (1.0 - self.p * powu(self.p_alpha, x)) / self.w
    }

    fn pgf(&self, z: f64) -> f64 {
        (self.base.pgf(z) - self.p * self.base.pgf(self.p_alpha * z)) / self.w
    }
}
