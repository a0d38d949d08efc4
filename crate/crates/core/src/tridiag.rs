//! Eigenvalues of symmetric tridiagonal matrices by Sturm-sequence
//! bisection.  Bisection is slower than QL but cannot misconverge, which
//! is what an oracle needs.

use crate::error::{Error, Result};

/// Number of eigenvalues of the symmetric tridiagonal matrix (diag, offdiag)
/// strictly below `x`, from the sign count of the LDL^T pivots.
fn count_below(diag: &[f64], offdiag: &[f64], x: f64) -> usize {
    let n = diag.len();
    let tiny = f64::MIN_POSITIVE / f64::EPSILON;
    let mut count = 0;
    let mut q = diag[0] - x;
    // exact zero pivots count as negative and are nudged so the recurrence
    // can continue with a consistent sign
    if q <= 0.0 {
        count += 1;
        if q == 0.0 {
            q = -tiny;
        }
    }
    for i in 1..n {
        q = diag[i] - x - offdiag[i - 1] * offdiag[i - 1] / q;
        if q <= 0.0 {
            count += 1;
            if q == 0.0 {
                q = -tiny;
            }
        }
    }
    count
}

/// The `k` lowest eigenvalues, ascending.
pub fn lowest_eigenvalues(diag: &[f64], offdiag: &[f64], k: usize) -> Result<Vec<f64>> {
    let n = diag.len();
    assert!(n >= 1 && offdiag.len() == n - 1, "inconsistent tridiagonal shape");
    assert!(k <= n, "requested more eigenvalues than the matrix order");

    // Gershgorin bounds
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let r = if i > 0 { offdiag[i - 1].abs() } else { 0.0 }
            + if i + 1 < n { offdiag[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    let scale = hi.abs().max(lo.abs()).max(1.0);

    let mut out = Vec::with_capacity(k);
    let mut bracket_lo = lo;
    for j in 0..k {
        // smallest x with count_below(x) >= j+1
        let mut a = bracket_lo;
        let mut b = hi;
        let mut iter = 0;
        while b - a > 4.0 * f64::EPSILON * scale {
            let mid = 0.5 * (a + b);
            if count_below(diag, offdiag, mid) >= j + 1 {
                b = mid;
            } else {
                a = mid;
            }
            iter += 1;
            if iter > 200 {
                return Err(Error::Convergence { what: "tridiagonal bisection" });
            }
        }
        let lambda = 0.5 * (a + b);
        out.push(lambda);
        bracket_lo = a; // eigenvalues are ordered
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_laplacian_eigenvalues() {
        // -d2/dx2 on n interior points of (0, pi), h = pi/(n+1):
        // exact FD eigenvalues are (2 - 2cos(k h))/h^2.
        let n = 200;
        let h = std::f64::consts::PI / (n as f64 + 1.0);
        let diag = vec![2.0 / (h * h); n];
        let off = vec![-1.0 / (h * h); n - 1];
        let eig = lowest_eigenvalues(&diag, &off, 5).unwrap();
        for (k, ev) in eig.iter().enumerate() {
            let exact = (2.0 - 2.0 * ((k as f64 + 1.0) * h).cos()) / (h * h);
            assert!((ev - exact).abs() < 1e-9 * exact.max(1.0), "k={k}: {ev} vs {exact}");
        }
    }

    #[test]
    fn two_by_two_exact() {
        // [[2, 1], [1, 2]] has eigenvalues 1 and 3
        let eig = lowest_eigenvalues(&[2.0, 2.0], &[1.0], 2).unwrap();
        assert!((eig[0] - 1.0).abs() < 1e-12);
        assert!((eig[1] - 3.0).abs() < 1e-12);
    }
}
