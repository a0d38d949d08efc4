//! Special functions shared by all modules: associated Laguerre polynomials,
//! the complex log-gamma function, and the Beta function.
//!
//! Laguerre evaluation uses the ascending three-term recurrence in n, which
//! is stable for z >= 0 (the only regime used here, since the wavefunction
//! arguments zeta and xi are nonnegative).  Log-gamma uses the Lanczos
//! approximation (g = 7, 9 coefficients) with a downward recurrence shift
//! for Re(z) < 1/2, which keeps a single algorithm for every real and
//! complex use (normalizations, cat-state overlaps).

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Associated Laguerre polynomial L_n^(nu)(z) for real (possibly
/// non-integer) degree parameter nu.
///
/// Exact for n = 0 (identically 1) and n = 1 (1 + nu - z).
pub fn assoc_laguerre(n: usize, nu: f64, z: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + nu - z;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + nu - z) * cur - (kf + nu) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Derivative d/dz L_n^(nu)(z) = -L_{n-1}^(nu+1)(z); zero for n = 0.
pub fn assoc_laguerre_deriv(n: usize, nu: f64, z: f64) -> f64 {
    if n == 0 {
        0.0
    } else {
        -assoc_laguerre(n - 1, nu + 1.0, z)
    }
}

// Lanczos coefficients for g = 7 (9 terms).
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_74;

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.floor()
}

// Lanczos sum evaluated at w with Re(w) >= 1/2.
fn lanczos_lg(w: Complex64) -> Complex64 {
    let mut series = Complex64::new(LANCZOS_COEF[0], 0.0);
    for (k, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        series += c / (w + (k as f64 - 1.0));
    }
    let t = w + (LANCZOS_G - 0.5);
    LN_SQRT_2PI + (w - 0.5) * t.ln() - t + series.ln()
}

fn lanczos_lg_real(x: f64) -> f64 {
    let mut series = LANCZOS_COEF[0];
    for (k, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        series += c / (x + k as f64 - 1.0);
    }
    let t = x + (LANCZOS_G - 0.5);
    LN_SQRT_2PI + (x - 0.5) * t.ln() - t + series.ln()
}

/// Principal-branch log-gamma.  Real positive inputs give exactly real
/// results; nonpositive-integer inputs are poles.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole { re: z.re, im: z.im });
    }
    if z.im == 0.0 && z.re > 0.0 {
        return Ok(Complex64::new(log_gamma_real(z.re)?, 0.0));
    }
    if z.re >= 0.5 {
        return Ok(lanczos_lg(z));
    }
    // Shift into Re >= 1/2: logG(z) = logG(z+m) - sum_{k<m} log(z+k).
    let m = (0.5 - z.re).ceil() as usize + 1;
    let mut shift = Complex64::new(0.0, 0.0);
    for k in 0..m {
        shift += (z + k as f64).ln();
    }
    Ok(lanczos_lg(z + m as f64) - shift)
}

/// Log-gamma restricted to the positive real axis.
pub fn log_gamma_real(x: f64) -> Result<f64> {
    if x <= 0.0 {
        if x == x.floor() {
            return Err(Error::Pole { re: x, im: 0.0 });
        }
        // Only the positive axis is needed in real form; route the rest
        // through the complex branch.
        return Ok(log_gamma(Complex64::new(x, 0.0))?.re);
    }
    if x >= 0.5 {
        Ok(lanczos_lg_real(x))
    } else {
        Ok(lanczos_lg_real(x + 1.0) - x.ln())
    }
}

/// Beta function B(a, b) = exp(logG(a) + logG(b) - logG(a+b)).
pub fn beta_fn(a: Complex64, b: Complex64) -> Result<Complex64> {
    let lg = log_gamma(a)? + log_gamma(b)? - log_gamma(a + b)?;
    Ok(lg.exp())
}
