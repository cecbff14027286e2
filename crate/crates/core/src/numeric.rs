//! Polynomial root finding: companion-matrix eigenvalues followed by Newton
//! polishing.

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;

use crate::error::{Error, Result};

const C0: Complex64 = Complex64::new(0.0, 0.0);

/// Evaluate `sum c_i z^i` and its derivative.
pub fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = C0;
    let mut dp = C0;
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn trim(coeffs: &[Complex64]) -> &[Complex64] {
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut n = coeffs.len();
    while n > 0 && coeffs[n - 1].norm() <= scale * 1e-300 {
        n -= 1;
    }
    &coeffs[..n]
}

/// Newton iteration from `z`, keeping the best iterate by residual.
pub fn polish(coeffs: &[Complex64], mut z: Complex64) -> Complex64 {
    let (mut p, _) = horner(coeffs, z);
    for _ in 0..60 {
        let (_, dp) = horner(coeffs, z);
        if dp.norm() == 0.0 {
            break;
        }
        let step = p / dp;
        let next = z - step;
        let (pn, _) = horner(coeffs, next);
        if !(pn.norm() < p.norm()) {
            break;
        }
        z = next;
        p = pn;
        if step.norm() <= 1e-15 * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

/// All complex roots of a real polynomial given lowest degree first.
pub fn real_poly_roots(coeffs: &[f64]) -> Result<Vec<Complex64>> {
    let c: Vec<Complex64> = coeffs.iter().map(|&a| Complex64::new(a, 0.0)).collect();
    let c = trim(&c);
    if c.is_empty() {
        return Err(Error::RootFinding("zero polynomial".into()));
    }
    let n = c.len() - 1;
    if n == 0 {
        return Ok(vec![]);
    }
    let lead = c[n].re;
    let comp = DMatrix::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -c[i].re / lead
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let eig = comp.complex_eigenvalues();
    let roots: Vec<Complex64> = eig.iter().map(|&z| polish(c, z)).collect();
    check_roots(c, roots)
}

/// All complex roots of a complex polynomial given lowest degree first.
pub fn complex_poly_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let c = trim(coeffs);
    if c.is_empty() {
        return Err(Error::RootFinding("zero polynomial".into()));
    }
    let n = c.len() - 1;
    if n == 0 {
        return Ok(vec![]);
    }
    let lead = c[n];
    let comp = DMatrix::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -c[i] / lead
        } else if i == j + 1 {
            Complex64::new(1.0, 0.0)
        } else {
            C0
        }
    });
    let eig = Schur::try_new(comp, 1e-15, 10_000).and_then(|s| s.eigenvalues());
    let start = match eig {
        Some(e) => e.iter().copied().collect(),
        None => aberth(c)?,
    };
    let roots = start.into_iter().map(|z| polish(c, z)).collect();
    check_roots(c, roots)
}

fn check_roots(c: &[Complex64], roots: Vec<Complex64>) -> Result<Vec<Complex64>> {
    if roots.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::RootFinding(format!("non-finite root for coefficients {c:?}")));
    }
    Ok(roots)
}

/// Aberth–Ehrlich simultaneous iteration.
fn aberth(c: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = c.len() - 1;
    let radius = 1.0
        + c[..n]
            .iter()
            .map(|a| (a / c[n]).norm())
            .fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect();
    for _ in 0..500 {
        let mut worst: f64 = 0.0;
        for i in 0..n {
            let (p, dp) = horner(c, z[i]);
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            z[i] -= w;
            worst = worst.max(w.norm() / (1.0 + z[i].norm()));
        }
        if worst < 1e-15 {
            return Ok(z);
        }
    }
    Err(Error::RootFinding(format!("Aberth iteration did not converge for {c:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap().then(a.im.partial_cmp(&b.im).unwrap()));
        v
    }

    #[test]
    fn cubic_real_roots() {
        // -z(z^2 - 2)
        let r = sorted(real_poly_roots(&[0.0, 2.0, 0.0, -1.0]).unwrap());
        let s = 2f64.sqrt();
        for (z, e) in r.iter().zip([-s, 0.0, s]) {
            assert!((z - Complex64::new(e, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn conjugate_pair() {
        let r = real_poly_roots(&[1.0, 0.0, 1.0]).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|z| (z.norm() - 1.0).abs() < 1e-14 && z.re.abs() < 1e-14));
    }

    #[test]
    fn complex_coefficients() {
        let i = Complex64::new(0.0, 1.0);
        let one = Complex64::new(1.0, 0.0);
        // (z - i)(z - 2) = z^2 - (2+i) z + 2i
        let r = complex_poly_roots(&[2.0 * i, -(2.0 * one + i), one]).unwrap();
        assert!(r.iter().any(|z| (z - i).norm() < 1e-13));
        assert!(r.iter().any(|z| (z - 2.0 * one).norm() < 1e-13));
        let a = aberth(&[2.0 * i, -(2.0 * one + i), one]).unwrap();
        assert!(a.iter().any(|z| (z - i).norm() < 1e-12));
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        assert!(real_poly_roots(&[0.0, 0.0]).is_err());
        assert!(real_poly_roots(&[3.0]).unwrap().is_empty());
    }
}
