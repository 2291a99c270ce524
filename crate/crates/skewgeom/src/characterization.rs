//! Independent numeric cross-checks of the distribution: a conditional-law
//! construction from i.i.d. geometrics, a conditional-expectation identity,
//! and a hazard reconstruction from closed-form increments. Each is computed
//! by brute force, independently of the closed forms in [`crate::dist`], and
//! is consumed by the test suite and the `verify` command.

use crate::dist::SgParams;
use crate::error::{Error, Result};
use crate::special::powu;

/// Geometric tail tolerance shared by all truncated sums here.
const TAIL_TOL: f64 = 1e-14;

/// Conditional construction P(X₁ = x | X₂ ≤ αX₁) for X₁, X₂ i.i.d.
/// geometric(p), which reproduces the skewed geometric law for integer α.
#[derive(Debug, Clone, Copy)]
pub struct ConditionalLawSpec {
    p: f64,
    alpha: u32,
    truncation: u64,
}

impl ConditionalLawSpec {
    /// α must be a positive integer for the construction to make sense.
    pub fn new(p: f64, alpha: u32) -> Result<Self> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::InvalidParameter {
                name: "p",
                value: p,
                reason: "must lie in the open interval (0, 1)",
            });
        }
        if alpha < 1 {
            return Err(Error::InvalidParameter {
                name: "alpha",
                value: alpha as f64,
                reason: "must be a positive integer",
            });
        }
        let truncation = (TAIL_TOL.ln() / p.ln()).ceil() as u64 + 1;
        Ok(Self {
            p,
            alpha,
            truncation,
        })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    fn geom_pmf(&self, x: u64) -> f64 {
        (1.0 - self.p) * powu(self.p, x)
    }

    fn geom_cdf(&self, x: u64) -> f64 {
        1.0 - powu(self.p, x + 1)
    }

    /// Brute-force denominator P(X₂ ≤ αX₁) = Σ_j P(X₁ = j)·F(αj); equals
    /// the closed-form normalizer W.
    pub fn normalizer(&self) -> f64 {
        (0..=self.truncation)
            .map(|j| self.geom_pmf(j) * self.geom_cdf(self.alpha as u64 * j))
            .sum()
    }

    /// P(X₁ = x | X₂ ≤ αX₁) by direct enumeration.
    pub fn conditional_pmf(&self, x: u64) -> f64 {
        self.geom_pmf(x) * self.geom_cdf(self.alpha as u64 * x) / self.normalizer()
    }
}

/// Both sides of the conditional-expectation identity
/// E[g(X) | X ≥ k] = p^k (1 − p^{α+1} − p^{αk+1} + p^{αk+2}) / (1 − p + p² − p^{α+1})
/// with g(x) = [p^x (1+p)(1−p^{α+1}) − p^{x(α+1)+1} (1−p)(1+p^{α+1})]
///             / (1 − p + p² − p^{α+1}).
/// The left side is a truncated series over the pmf; the right side is the
/// stated closed form. They agree iff X is skewed geometric.
pub fn tail_expectation_identity(params: SgParams, k: u64) -> (f64, f64) {
    let p = params.p();
    let alpha = params.alpha();
    let pa1 = ((alpha + 1.0) * p.ln()).exp(); // p^{α+1}
    let denom = 1.0 - p + p * p - pa1;

    let g = |x: u64| -> f64 {
        let xf = x as f64;
        let px = (xf * p.ln()).exp();
        let px_a1 = ((xf * (alpha + 1.0) + 1.0) * p.ln()).exp(); // p^{x(α+1)+1}
        (px * (1.0 + p) * (1.0 - pa1) - px_a1 * (1.0 - p) * (1.0 + pa1)) / denom
    };

    let tail_prob = if k == 0 {
        1.0
    } else {
        params.survival(k - 1)
    };
    let x_hi = k + (TAIL_TOL.ln() / p.ln()).ceil() as u64 + 1;
    let mut lhs = 0.0;
    for x in k..=x_hi {
        lhs += g(x) * params.pmf(x);
    }
    lhs /= tail_prob;

    let pak1 = ((alpha * k as f64 + 1.0) * p.ln()).exp(); // p^{αk+1}
    let rhs = powu(p, k) * (1.0 - pa1 - pak1 + pak1 * p) / denom;
    (lhs, rhs)
}

/// Reconstruct the hazard sequence h(0..=x_max) from its value at zero plus
/// the closed-form increments
/// h(x+1) − h(x) = q(1−pβ)β^x(1−β)² / (A(x+1)·A(x+2)),
/// A(m) = 1 − pβ − pqβ^m, with β = p^α. Matches the direct hazard iff X is
/// skewed geometric; every increment is non-negative (increasing failure
/// rate).
pub fn hazard_from_increments(params: SgParams, x_max: u64) -> Vec<f64> {
    let rsg = params.to_rsg();
    let p = rsg.p();
    let beta = rsg.beta();
    let q = 1.0 - p;
    let a = |m: u64| 1.0 - p * beta - p * q * powu(beta, m);

    // h(0) from the closed-form hazard at zero: q²(1−pβ)/(p·A(1)).
    let mut h = q * q * (1.0 - p * beta) / (p * a(1));
    let mut out = Vec::with_capacity(x_max as usize + 1);
    out.push(h);
    for x in 0..x_max {
        let incr = q * (1.0 - p * beta) * powu(beta, x) * (1.0 - beta) * (1.0 - beta)
            / (a(x + 1) * a(x + 2));
        h += incr;
        out.push(h);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::SgParams;

    const GRID_P: [f64; 3] = [0.2, 0.5, 0.8];

    #[test]
    fn conditional_law_anchor() {
        let spec = ConditionalLawSpec::new(0.5, 1).unwrap();
        assert!((spec.conditional_pmf(0) - 0.375).abs() < 1e-12);
    }

    #[test]
    fn conditional_law_matches_pmf_on_grid() {
        for &p in &GRID_P {
            for alpha in 1u32..=3 {
                let spec = ConditionalLawSpec::new(p, alpha).unwrap();
                let d = SgParams::new(p, alpha as f64).unwrap();
                for x in 0..=30 {
                    let diff = (spec.conditional_pmf(x) - d.pmf(x)).abs();
                    assert!(diff < 1e-10, "p={p} alpha={alpha} x={x} diff={diff}");
                }
            }
        }
    }

    #[test]
    fn conditional_law_normalizer_equals_w() {
        for &p in &GRID_P {
            for alpha in 1u32..=3 {
                let spec = ConditionalLawSpec::new(p, alpha).unwrap();
                let w = SgParams::new(p, alpha as f64).unwrap().normalizer();
                assert!((spec.normalizer() - w).abs() < 1e-12, "p={p} alpha={alpha}");
            }
        }
    }

    #[test]
    fn conditional_law_rejects_zero_alpha() {
        assert!(ConditionalLawSpec::new(0.5, 0).is_err());
    }

    #[test]
    fn tail_expectation_identity_collapses_at_k_zero() {
        for &p in &GRID_P {
            for &alpha in &[1.0, 2.0, 3.0, 0.7] {
                let params = SgParams::new(p, alpha).unwrap();
                let (lhs, rhs) = tail_expectation_identity(params, 0);
                assert!((rhs - 1.0).abs() < 1e-12, "rhs should be exactly 1 at k=0");
                assert!((lhs - 1.0).abs() < 1e-10, "p={p} alpha={alpha} lhs={lhs}");
            }
        }
    }

    #[test]
    fn tail_expectation_identity_via_pgf_evaluations() {
        // At (p, α) = (0.5, 1): E[g(X)] = 2.25·G(0.5) − 0.625·G(0.25) = 1
        let params = SgParams::new(0.5, 1.0).unwrap();
        let d = params.to_rsg();
        let combo = 2.25 * d.pgf(0.5) - 0.625 * d.pgf(0.25);
        assert!((combo - 1.0).abs() < 1e-13);
        let (lhs, _) = tail_expectation_identity(params, 0);
        assert!((lhs - combo).abs() < 1e-10);
    }

    #[test]
    fn tail_expectation_identity_holds_on_grid() {
        for &p in &GRID_P {
            for &alpha in &[1.0, 2.0, 3.0] {
                let params = SgParams::new(p, alpha).unwrap();
                for k in 0..=10 {
                    let (lhs, rhs) = tail_expectation_identity(params, k);
                    assert!(
                        (lhs - rhs).abs() < 1e-9,
                        "p={p} alpha={alpha} k={k}: {lhs} vs {rhs}"
                    );
                }
            }
        }
        // non-integer α probe
        let params = SgParams::new(0.3, 2.0).unwrap();
        let (lhs, rhs) = tail_expectation_identity(params, 3);
        assert!((lhs - rhs).abs() < 1e-9);
    }

    #[test]
    fn hazard_reconstruction_anchor() {
        let params = SgParams::new(0.5, 1.0).unwrap();
        let h = hazard_from_increments(params, 0);
        assert!((h[0] - 0.6).abs() < 1e-13);
    }

    #[test]
    fn hazard_reconstruction_matches_direct_hazard() {
        for &p in &GRID_P {
            for &alpha in &[1.0, 2.0, 3.0] {
                let params = SgParams::new(p, alpha).unwrap();
                let rebuilt = hazard_from_increments(params, 100);
                for (x, h) in rebuilt.iter().enumerate() {
                    let direct = params.hazard(x as u64).unwrap();
                    assert!(
                        (h - direct).abs() < 1e-9,
                        "p={p} alpha={alpha} x={x}: {h} vs {direct}"
                    );
                }
            }
        }
    }

    #[test]
    fn hazard_increments_nonnegative_and_zero_for_geometric() {
        let params = SgParams::new(0.6, 2.5).unwrap();
        let h = hazard_from_increments(params, 80);
        for w in h.windows(2) {
            assert!(w[1] >= w[0]);
        }
        let geom = SgParams::new(0.6, 0.0).unwrap();
        let h = hazard_from_increments(geom, 40);
        for w in h.windows(2) {
            assert!((w[1] - w[0]).abs() < 1e-15);
        }
    }
}
