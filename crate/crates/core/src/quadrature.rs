//! Generalized Gauss-Laguerre quadrature: nodes and weights exact for
//! integrals of e^(-z) z^alpha P(z) over [0, inf) with deg P <= 2k-1.
//!
//! Nodes come from the Golub-Welsch Jacobi matrix (bisection eigenvalues
//! used as initial guesses), then are polished by Newton iteration on the
//! Laguerre recurrence.  Weights are stored normalized by the zeroth moment
//! Gamma(alpha+1) so that rules with large alpha (where Gamma overflows
//! f64) stay usable; the raw weights are recovered on demand.

use crate::error::{Error, Result};
use crate::special::log_gamma_real;
use crate::tridiag;

/// A generalized Gauss-Laguerre rule.
#[derive(Debug, Clone)]
pub struct GaussLaguerre {
    nodes: Vec<f64>,
    /// weights divided by Gamma(alpha+1); they sum to 1
    norm_weights: Vec<f64>,
    log_gamma_a1: f64,
    alpha: f64,
}

// L_k^(alpha)(x) and L_{k-1}^(alpha)(x) with a shared scale factor tracked
// in log space; the recurrence overflows f64 for large alpha otherwise.
fn laguerre_pair_scaled(k: usize, alpha: f64, x: f64) -> (f64, f64, f64) {
    let mut prev = 0.0_f64; // L_{j-1}
    let mut cur = 1.0_f64; // L_j
    let mut logscale = 0.0_f64;
    for j in 0..k {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0 + alpha - x) * cur - (jf + alpha) * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
        let m = cur.abs().max(prev.abs());
        if m > 1e120 {
            cur /= m;
            prev /= m;
            logscale += m.ln();
        }
    }
    (cur, prev, logscale)
}

impl GaussLaguerre {
    pub fn new(k: usize, alpha: f64) -> Result<Self> {
        assert!(k >= 1, "rule order must be at least 1");
        assert!(alpha > -1.0, "alpha must exceed -1");

        // Golub-Welsch Jacobi matrix: diag 2i+alpha+1, offdiag sqrt(i(i+alpha))
        let diag: Vec<f64> = (0..k).map(|i| 2.0 * i as f64 + alpha + 1.0).collect();
        let off: Vec<f64> = (1..k).map(|i| (i as f64 * (i as f64 + alpha)).sqrt()).collect();
        let guesses = tridiag::lowest_eigenvalues(&diag, &off, k)?;

        let log_gamma_a1 = log_gamma_real(alpha + 1.0)?;
        let log_norm = log_gamma_real(k as f64 + alpha + 1.0)? - log_gamma_real(k as f64 + 1.0)?;
        let kf = k as f64;

        let mut nodes = Vec::with_capacity(k);
        let mut norm_weights = Vec::with_capacity(k);
        for &guess in &guesses {
            // Newton on L_k^(alpha); x L_k' = k L_k - (k+alpha) L_{k-1}
            let mut x = guess;
            let mut best_dx = f64::INFINITY;
            for _ in 0..60 {
                let (p, pm1, _) = laguerre_pair_scaled(k, alpha, x);
                let dp = (kf * p - (kf + alpha) * pm1) / x;
                let dx = p / dp;
                x -= dx;
                let step = dx.abs();
                if step <= 4.0 * f64::EPSILON * x.abs() {
                    best_dx = step;
                    break;
                }
                if step >= best_dx {
                    // rounding jitter floor reached
                    break;
                }
                best_dx = step;
            }
            if !x.is_finite() || x <= 0.0 || best_dx > 1e-11 * (x.abs() + 1.0) {
                return Err(Error::Convergence { what: "Gauss-Laguerre Newton polish" });
            }
            // w = G(k+alpha+1)/k! * x / ((k+1) L_{k+1}(x))^2
            let (p1, _, ls) = laguerre_pair_scaled(k + 1, alpha, x);
            let log_w =
                log_norm + x.ln() - 2.0 * ((kf + 1.0).ln() + p1.abs().ln() + ls);
            nodes.push(x);
            norm_weights.push((log_w - log_gamma_a1).exp());
        }

        // nodes strictly increasing, weights nonnegative and summing to the
        // zeroth moment (far-tail weights may underflow to zero)
        let mut total = 0.0;
        for i in 0..k {
            if !(norm_weights[i] >= 0.0) || (i > 0 && nodes[i] <= nodes[i - 1]) {
                return Err(Error::Convergence { what: "Gauss-Laguerre rule validation" });
            }
            total += norm_weights[i];
        }
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::Convergence { what: "Gauss-Laguerre weight normalization" });
        }
        Ok(Self { nodes, norm_weights, log_gamma_a1, alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Raw weights, summing to Gamma(alpha+1).  These overflow f64 for
    /// alpha beyond roughly 170; prefer [`Self::normalized_weights`] there.
    pub fn weights(&self) -> Vec<f64> {
        let scale = self.log_gamma_a1.exp();
        self.norm_weights.iter().map(|w| w * scale).collect()
    }

    /// Weights divided by Gamma(alpha+1); they sum to 1.
    pub fn normalized_weights(&self) -> &[f64] {
        &self.norm_weights
    }

    /// log Gamma(alpha+1), the scale factor between the two weight sets.
    pub fn log_moment0(&self) -> f64 {
        self.log_gamma_a1
    }

    /// Integral of e^(-z) z^alpha f(z) over [0, inf).
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.log_gamma_a1.exp() * self.integrate_normalized(f)
    }

    /// Same integral divided by Gamma(alpha+1); safe at any alpha.
    pub fn integrate_normalized<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.norm_weights).map(|(&x, &w)| w * f(x)).sum()
    }

    /// Normalized integral with a complex integrand.
    pub fn integrate_normalized_complex<F: Fn(f64) -> num_complex::Complex64>(
        &self,
        f: F,
    ) -> num_complex::Complex64 {
        self.nodes
            .iter()
            .zip(&self.norm_weights)
            .map(|(&x, &w)| f(x) * w)
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_point_rule() {
        let q = GaussLaguerre::new(1, 0.0).unwrap();
        assert!((q.nodes()[0] - 1.0).abs() < 1e-14);
        assert!((q.weights()[0] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn two_point_rule_analytic() {
        // alpha = 0: nodes 2 -+ sqrt(2), weights (2 +- sqrt(2))/4, from the
        // moment equations solved in closed form
        let q = GaussLaguerre::new(2, 0.0).unwrap();
        let s2 = 2.0_f64.sqrt();
        assert!((q.nodes()[0] - (2.0 - s2)).abs() < 1e-13);
        assert!((q.nodes()[1] - (2.0 + s2)).abs() < 1e-13);
        let w = q.weights();
        assert!((w[0] - (2.0 + s2) / 4.0).abs() < 1e-13);
        assert!((w[1] - (2.0 - s2) / 4.0).abs() < 1e-13);
    }

    #[test]
    fn moments_are_exact() {
        // integral z^j e^(-z) z^alpha = G(alpha+j+1), j = 0..2k-1
        for &(k, alpha) in &[(4usize, 0.0), (8, 0.5), (8, 3.7), (12, 17.3)] {
            let q = GaussLaguerre::new(k, alpha).unwrap();
            for j in 0..2 * k {
                let got = q.integrate(|z| z.powi(j as i32));
                let exact = log_gamma_real(alpha + j as f64 + 1.0).unwrap().exp();
                assert!(
                    (got - exact).abs() / exact < 1e-12,
                    "k={k} alpha={alpha} j={j}: {got} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn zeroth_moment_large_rule() {
        for &alpha in &[0.0, 2.5, 40.0] {
            let q = GaussLaguerre::new(200, alpha).unwrap();
            let sum: f64 = q.weights().iter().sum();
            let exact = log_gamma_real(alpha + 1.0).unwrap().exp();
            assert!(
                (sum - exact).abs() / exact < 1e-11,
                "alpha={alpha}: {sum} vs {exact}"
            );
            for i in 1..q.nodes().len() {
                assert!(q.nodes()[i] > q.nodes()[i - 1]);
            }
        }
    }

    #[test]
    fn moment_ratios_at_large_alpha() {
        // Gamma(alpha+1) overflows f64 here, so check the scale-free mean
        // and second factorial-moment ratios of the weight instead
        let alpha = 197.0;
        let q = GaussLaguerre::new(200, alpha).unwrap();
        let w0 = q.integrate_normalized(|_| 1.0);
        let w1 = q.integrate_normalized(|z| z);
        let w2 = q.integrate_normalized(|z| z * z);
        assert!((w1 / w0 - (alpha + 1.0)).abs() / (alpha + 1.0) < 1e-12);
        let want = (alpha + 1.0) * (alpha + 2.0);
        assert!((w2 / w0 - want).abs() / want < 1e-12);
    }
}
