//! Discretized complex wavefunctions on uniform grids, the common currency
//! for operator application and grid oracles.

use num_complex::Complex64;

use crate::params::ModelParams;

/// Coordinate chart a grid function lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    /// physical x coordinate (domain x > -1/gamma)
    Position,
    /// deformed x_gamma coordinate
    Morse,
}

/// Complex wavefunction samples on a uniform grid.
#[derive(Debug, Clone)]
pub struct GridWavefunction {
    chart: Chart,
    x0: f64,
    dx: f64,
    values: Vec<Complex64>,
}

impl GridWavefunction {
    pub fn from_fn<F: Fn(f64) -> Complex64>(
        chart: Chart,
        lo: f64,
        hi: f64,
        n: usize,
        f: F,
    ) -> Self {
        assert!(n >= 2 && hi > lo, "degenerate grid");
        let dx = (hi - lo) / (n - 1) as f64;
        let values = (0..n).map(|i| f(lo + dx * i as f64)).collect();
        Self { chart, x0: lo, dx, values }
    }

    pub fn from_real_fn<F: Fn(f64) -> f64>(
        chart: Chart,
        lo: f64,
        hi: f64,
        n: usize,
        f: F,
    ) -> Self {
        Self::from_fn(chart, lo, hi, n, |x| Complex64::new(f(x), 0.0))
    }

    pub fn chart(&self) -> Chart {
        self.chart
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn spacing(&self) -> f64 {
        self.dx
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x0 + self.dx * i as f64
    }

    pub fn xs(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(|i| self.x(i))
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    /// Same grid, new values.
    pub fn map<F: Fn(usize, f64, Complex64) -> Complex64>(&self, f: F) -> Self {
        let values =
            (0..self.len()).map(|i| f(i, self.x(i), self.values[i])).collect();
        Self { chart: self.chart, x0: self.x0, dx: self.dx, values }
    }

    /// Trapezoid inner product <self|other>.
    pub fn inner(&self, other: &Self) -> Complex64 {
        assert!(self.compatible(other), "grids differ");
        let n = self.len();
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..n {
            let w = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
            acc += self.values[i].conj() * other.values[i] * w;
        }
        acc * self.dx
    }

    /// Trapezoid L2 norm.
    pub fn norm(&self) -> f64 {
        self.inner(self).re.sqrt()
    }

    pub fn normalize(&mut self) {
        let n = self.norm();
        if n > 0.0 {
            for v in &mut self.values {
                *v /= n;
            }
        }
    }

    /// ||self - other|| / ||other||.
    pub fn rel_distance(&self, other: &Self) -> f64 {
        assert!(self.compatible(other), "grids differ");
        let mut num = 0.0;
        let mut den = 0.0;
        let n = self.len();
        for i in 0..n {
            let w = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
            num += w * (self.values[i] - other.values[i]).norm_sqr();
            den += w * other.values[i].norm_sqr();
        }
        (num / den).sqrt()
    }

    /// First derivative by 4th-order central stencils, one-sided at the two
    /// boundary points on each end.
    pub fn derivative(&self) -> Self {
        let n = self.len();
        assert!(n >= 5, "need at least 5 points for the stencil");
        let v = &self.values;
        let h = self.dx;
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for i in 2..n - 2 {
            out[i] = (v[i - 2] - v[i + 2] + 8.0 * (v[i + 1] - v[i - 1])) / (12.0 * h);
        }
        out[0] = (-25.0 * v[0] + 48.0 * v[1] - 36.0 * v[2] + 16.0 * v[3] - 3.0 * v[4])
            / (12.0 * h);
        out[1] =
            (-3.0 * v[0] - 10.0 * v[1] + 18.0 * v[2] - 6.0 * v[3] + v[4]) / (12.0 * h);
        out[n - 1] = (25.0 * v[n - 1] - 48.0 * v[n - 2] + 36.0 * v[n - 3]
            - 16.0 * v[n - 4]
            + 3.0 * v[n - 5])
            / (12.0 * h);
        out[n - 2] = (3.0 * v[n - 1] + 10.0 * v[n - 2] - 18.0 * v[n - 3] + 6.0 * v[n - 4]
            - v[n - 5])
            / (12.0 * h);
        Self { chart: self.chart, x0: self.x0, dx: self.dx, values: out }
    }

    fn compatible(&self, other: &Self) -> bool {
        self.chart == other.chart
            && self.len() == other.len()
            && (self.x0 - other.x0).abs() < 1e-12 * (1.0 + self.x0.abs())
            && (self.dx - other.dx).abs() < 1e-12 * self.dx
    }
}

/// Domain [x_lo, x_hi] on which a state with density ~ e^(-zeta) zeta^q has
/// both tails below exp(log_eps), translated from the zeta bounds.
///
/// `q_wall` is the density exponent controlling the steep wall side
/// (zeta large), `q_tail` the one controlling the long right tail.
pub fn support_interval(
    params: &ModelParams,
    q_wall: f64,
    q_tail: f64,
    log_eps: f64,
) -> (f64, f64) {
    assert!(params.gamma() > 0.0, "support interval needs gamma > 0");
    let two_s = 2.0 * params.s();
    let zeta_hi = solve_tail(q_wall.max(1.0), log_eps, true);
    let zeta_lo = solve_tail(q_tail.max(1.0), log_eps, false);
    let x_of = |zeta: f64| (two_s / zeta - 1.0) / params.gamma();
    (x_of(zeta_hi), x_of(zeta_lo))
}

// Solve q ln(z/q) - (z - q) = log_eps on the requested side of z = q.
fn solve_tail(q: f64, log_eps: f64, upper: bool) -> f64 {
    let f = |z: f64| q * (z / q).ln() - (z - q) - log_eps;
    let (mut a, mut b) = if upper {
        (q, q * 10.0 + 10.0 * (-log_eps) + 100.0)
    } else {
        (q * 1e-15, q)
    };
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        let fm = f(mid);
        // f < 0 away from the peak on both sides
        let outside = fm < 0.0;
        if upper == outside {
            b = mid;
        } else {
            a = mid;
        }
        if (b - a) < 1e-12 * b {
            break;
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_of_sine() {
        let g = GridWavefunction::from_real_fn(Chart::Position, 0.0, 6.0, 2001, f64::sin);
        let d = g.derivative();
        for i in 0..g.len() {
            let want = g.x(i).cos();
            assert!(
                (d.values()[i].re - want).abs() < 2e-9,
                "i={i}: {} vs {want}",
                d.values()[i].re
            );
        }
    }

    #[test]
    fn norm_of_gaussian() {
        let g = GridWavefunction::from_real_fn(Chart::Position, -10.0, 10.0, 4001, |x| {
            (-0.5 * x * x).exp() / std::f64::consts::PI.powf(0.25)
        });
        assert!((g.norm() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn support_covers_eigenstate() {
        let p = ModelParams::standard(0.2).unwrap();
        let st = crate::spectrum::Eigenstate::new(p, 3).unwrap();
        let nu = st.nu();
        let (lo, hi) =
            support_interval(&p, nu + 1.0 + 6.0, nu + 1.0, -50.0);
        assert!(lo > -1.0 / 0.2);
        assert!(st.evaluate(lo).abs() < 1e-9, "psi(lo) = {}", st.evaluate(lo));
        assert!(st.evaluate(hi).abs() < 1e-9, "psi(hi) = {}", st.evaluate(hi));
        // interior amplitude is order one
        assert!(st.evaluate(0.0).abs() > 0.1);
    }
}
