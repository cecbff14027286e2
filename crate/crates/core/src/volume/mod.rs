//! Volumes of the hyperbolic cone-manifolds `E_{W_k}(α)`:
//!
//! ```text
//! Vol E(α) = ∫_α^π 2 log |(z − (s⁻² + 1)) / (z − (s² + 1))| dω,   s = e^{iω/2}
//! ```
//!
//! where `z` is a root of `R_{W_k}(s, z)` with `Im z >= 0`, chosen to
//! maximize the integrand.

mod quadrature;

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use serde::Serialize;

pub use quadrature::{integrate, QuadResult};

use crate::error::{Error, Result};
use crate::numeric::complex_poly_roots;
use crate::polyring::{var, LaurentPoly, Var};
use crate::riley::canonical_form_at;

/// Roots closer than this to the real axis count as real.
pub const REAL_AXIS_TOL: f64 = 1e-10;
const COEFF_IMAG_TOL: f64 = 1e-12;
const BRANCH_JUMP: f64 = 0.5;
const MAX_PANELS: usize = 20_000;
pub const DEFAULT_TOL: f64 = 1e-9;

/// `R_{W_k}` as a polynomial in `z` whose coefficients are polynomials in
/// `x = s + 1/s`.
#[derive(Debug, Clone)]
pub struct RPoly {
    pub k: u32,
    pub coeffs: Vec<LaurentPoly>,
}

impl RPoly {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::NotHyperbolic(0));
        }
        let x = var(Var::X);
        let r = canonical_form_at(k, &x, &x, &var(Var::Z));
        let by_z = r.coeffs_in(Var::Z);
        let deg = *by_z.keys().next_back().unwrap_or(&0) as usize;
        let mut coeffs = vec![LaurentPoly::zero(); deg + 1];
        for (e, c) in by_z {
            coeffs[e as usize] = c;
        }
        Ok(RPoly { k, coeffs })
    }

    /// Cached per `k`.
    pub fn cached(k: u32) -> Result<Arc<RPoly>> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<RPoly>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(p) = cache.lock().unwrap().get(&k) {
            return Ok(p.clone());
        }
        let p = Arc::new(RPoly::new(k)?);
        cache.lock().unwrap().insert(k, p.clone());
        Ok(p)
    }

    /// Complex coefficients at `s`, lowest degree in `z` first.
    pub fn at_s(&self, s: Complex64) -> Result<Vec<Complex64>> {
        let x = s + 1.0 / s;
        self.coeffs.iter().map(|c| c.eval_at(&[(Var::X, x)])).collect()
    }

    /// Real coefficients at `s = e^{iω/2}`.
    pub fn at(&self, omega: f64) -> Result<Vec<f64>> {
        let c = self.at_s(Complex64::from_polar(1.0, omega / 2.0))?;
        c.iter()
            .map(|a| {
                if a.im.abs() > COEFF_IMAG_TOL * (1.0 + a.re.abs()) {
                    Err(Error::Degenerate(format!(
                        "coefficient {a} of R_{{W_{}}} at ω = {omega} is not real",
                        self.k
                    )))
                } else {
                    Ok(a.re)
                }
            })
            .collect()
    }
}

fn check_omega(omega: f64) -> Result<()> {
    if !(omega > 0.0 && omega <= PI) {
        return Err(Error::InvalidArgument(format!("ω = {omega} outside (0, π]")));
    }
    Ok(())
}

/// Real coefficients of `R_{W_k}(e^{iω/2}, z)` in `z`, lowest first.
pub fn r_poly(k: u32, omega: f64) -> Result<Vec<f64>> {
    check_omega(omega)?;
    RPoly::cached(k)?.at(omega)
}

/// `2 log |(z − (s⁻² + 1)) / (z − (s² + 1))|`.
pub fn log_ratio(z: Complex64, omega: f64) -> Result<f64> {
    let s2 = Complex64::from_polar(1.0, omega);
    let den = z - (s2 + 1.0);
    if den.norm() < 1e-300 {
        return Err(Error::Pole(Var::Z));
    }
    Ok(2.0 * ((z - (s2.conj() + 1.0)).norm() / den.norm()).ln())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootChoice {
    pub omega: f64,
    pub z: (f64, f64),
    pub integrand: f64,
    /// All roots real: the integrand is zero.
    pub real_regime: bool,
    /// Two distinct roots gave the same maximal integrand; the one with
    /// larger `Im z` was kept.
    pub tie: bool,
    /// `|R(s, z)|` at the chosen root.
    pub residual: f64,
}

impl RootChoice {
    pub fn z(&self) -> Complex64 {
        Complex64::new(self.z.0, self.z.1)
    }
}

fn horner_real(c: &[f64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
}

/// The root of `R_{W_k}(e^{iω/2}, z)` with `Im z >= 0` maximizing the
/// integrand.
pub fn choose_root(k: u32, omega: f64) -> Result<RootChoice> {
    let coeffs = r_poly(k, omega)?;
    let complex: Vec<Complex64> = coeffs.iter().map(|&a| Complex64::new(a, 0.0)).collect();
    let roots = complex_poly_roots(&complex).map_err(|e| Error::RootFinding(format!("{e}; R = {coeffs:?}")))?;
    let mut best: Option<(Complex64, f64)> = None;
    let mut tie = false;
    for z in roots.iter().copied().filter(|z| z.im > REAL_AXIS_TOL) {
        let val = log_ratio(z, omega)?;
        match best {
            None => best = Some((z, val)),
            Some((bz, bv)) => {
                if (val - bv).abs() <= 1e-12 * (1.0 + bv.abs()) && (z - bz).norm() > 1e-8 {
                    tie = true;
                    if z.im > bz.im {
                        best = Some((z, val.max(bv)));
                    }
                } else if val > bv {
                    best = Some((z, val));
                }
            }
        }
    }
    let (z, integrand, real_regime) = match best {
        Some((z, v)) => (z, v, false),
        None => {
            let z = roots
                .iter()
                .copied()
                .max_by(|a, b| a.im.total_cmp(&b.im))
                .ok_or_else(|| Error::RootFinding(format!("no roots for R = {coeffs:?}")))?;
            (Complex64::new(z.re, 0.0), 0.0, true)
        }
    };
    if tie {
        log::info!("k = {k}, ω = {omega}: equal maximal integrand from two roots");
    }
    Ok(RootChoice {
        omega,
        z: (z.re, z.im),
        integrand,
        real_regime,
        tie,
        residual: horner_real(&coeffs, z).norm(),
    })
}

pub fn integrand(k: u32, omega: f64) -> Result<f64> {
    Ok(choose_root(k, omega)?.integrand)
}

/// `w₁₁ = (−1 − s2² + s1 s2 z) / (s1 + s1 s2² − s2 z)` at `s1 = s2 = s`.
pub fn w11_at(z: Complex64, s: Complex64) -> Complex64 {
    (s * s * z - 1.0 - s * s) / (s + s * s * s - s * z)
}

/// The integrand recomputed as `2 log |w₁₁|` at the chosen root.
pub fn integrand_via_w11(k: u32, omega: f64) -> Result<f64> {
    let c = choose_root(k, omega)?;
    if c.real_regime {
        return Ok(0.0);
    }
    Ok(2.0 * w11_at(c.z(), Complex64::from_polar(1.0, omega / 2.0)).norm().ln())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BranchJump {
    pub omega_left: f64,
    pub omega_right: f64,
    pub distance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sample {
    pub omega: f64,
    pub z: (f64, f64),
    pub integrand: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VolumeCurve {
    pub k: u32,
    pub alpha: f64,
    pub volume: f64,
    pub quadrature_error_estimate: f64,
    pub samples: Vec<Sample>,
    pub branch_jumps: Vec<BranchJump>,
    pub ties: usize,
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        Err(Error::NotHyperbolic(0))
    } else {
        Ok(())
    }
}

pub fn volume(k: u32, alpha: f64) -> Result<VolumeCurve> {
    volume_with_tol(k, alpha, DEFAULT_TOL)
}

/// Volume with absolute quadrature tolerance `tol`. The interval is split at
/// the estimated hyperbolicity bound so the kink there lands on a panel
/// edge.
pub fn volume_with_tol(k: u32, alpha: f64, tol: f64) -> Result<VolumeCurve> {
    check_k(k)?;
    if !(alpha > 0.0 && alpha <= PI) {
        return Err(Error::InvalidArgument(format!("α = {alpha} outside (0, π]")));
    }
    let mut curve = VolumeCurve {
        k,
        alpha,
        volume: 0.0,
        quadrature_error_estimate: 0.0,
        samples: Vec::new(),
        branch_jumps: Vec::new(),
        ties: 0,
    };
    if alpha == PI {
        return Ok(curve);
    }
    let mut choices: Vec<RootChoice> = Vec::new();
    let mut f = |omega: f64| -> Result<f64> {
        let c = choose_root(k, omega)?;
        choices.push(c);
        Ok(c.integrand)
    };
    let mut pieces = vec![alpha, PI];
    if let Ok(b) = estimate_alpha_bound(k) {
        if b > alpha && b < PI {
            pieces = vec![alpha, b, PI];
        }
    }
    let share = tol / (pieces.len() - 1) as f64;
    for w in pieces.windows(2) {
        let r = integrate(&mut f, w[0], w[1], share, MAX_PANELS)?;
        curve.volume += r.value;
        curve.quadrature_error_estimate += r.error;
    }
    choices.sort_by(|a, b| a.omega.total_cmp(&b.omega));
    choices.dedup_by(|a, b| a.omega == b.omega);
    curve.ties = choices.iter().filter(|c| c.tie).count();
    for w in choices.windows(2) {
        let d = (w[1].z() - w[0].z()).norm();
        if d > BRANCH_JUMP && !w[0].real_regime && !w[1].real_regime {
            log::warn!(
                "k = {k}: chosen root jumps by {d:.3} between ω = {} and ω = {}",
                w[0].omega,
                w[1].omega
            );
            curve.branch_jumps.push(BranchJump {
                omega_left: w[0].omega,
                omega_right: w[1].omega,
                distance: d,
            });
        }
    }
    curve.samples = choices
        .into_iter()
        .map(|c| Sample {
            omega: c.omega,
            z: c.z,
            integrand: c.integrand,
        })
        .collect();
    Ok(curve)
}

/// `r · Vol E_{W_k}(2π/r)`, the volume of the `r`-fold cyclic branched
/// cover.
pub fn cyclic_cover_volume(k: u32, r: u32) -> Result<f64> {
    cyclic_cover_volume_with_tol(k, r, DEFAULT_TOL)
}

pub fn cyclic_cover_volume_with_tol(k: u32, r: u32, tol: f64) -> Result<f64> {
    if r < 3 {
        return Err(Error::InvalidArgument(format!("cyclic cover needs r >= 3, got {r}")));
    }
    Ok(r as f64 * volume_with_tol(k, 2.0 * PI / r as f64, tol / r as f64)?.volume)
}

fn hyperbolic_at(k: u32, omega: f64) -> Result<bool> {
    Ok(!choose_root(k, omega)?.real_regime)
}

/// The angle `α_{W_k}` where the nonreal roots of `R_{W_k}` reach the real
/// axis: grid scan followed by bisection to `1e-8`.
pub fn estimate_alpha_bound(k: u32) -> Result<f64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, f64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(&b) = cache.lock().unwrap().get(&k) {
        return Ok(b);
    }
    check_k(k)?;
    const GRID: usize = 400;
    let mut hi = None;
    for i in (1..GRID).rev() {
        let omega = PI * i as f64 / GRID as f64;
        if hyperbolic_at(k, omega)? {
            hi = Some(omega);
            break;
        }
    }
    let Some(mut lo) = hi else {
        return Err(Error::RootFinding(format!("no nonreal roots of R_{{W_{k}}} on (0, π)")));
    };
    let mut up = lo + PI / GRID as f64;
    if up >= PI && hyperbolic_at(k, PI)? {
        return Err(Error::RootFinding(format!("R_{{W_{k}}} has nonreal roots up to ω = π")));
    }
    up = up.min(PI);
    while up - lo > 1e-8 {
        let mid = 0.5 * (lo + up);
        if hyperbolic_at(k, mid)? {
            lo = mid;
        } else {
            up = mid;
        }
    }
    let b = 0.5 * (lo + up);
    cache.lock().unwrap().insert(k, b);
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_and_k2_polynomials() {
        // R_{W_1} = x² − z(2x² + z² − x²z − 2)
        for omega in [0.3, 1.1, 2.5, PI] {
            let x = 2.0 * (omega / 2.0).cos();
            let x2 = x * x;
            let want = [x2, -(2.0 * x2 - 2.0), x2, -1.0];
            let got = r_poly(1, omega).unwrap();
            for (g, w) in got.iter().zip(want) {
                assert!((g - w).abs() < 1e-12, "ω = {omega}: {got:?}");
            }
            // R_{W_2} = zv − (x² − z)
            let got = r_poly(2, omega).unwrap();
            let want = [-x2, 2.0 * x2 - 2.0 + 1.0, -x2, 1.0];
            for (g, w) in got.iter().zip(want) {
                assert!((g - w).abs() < 1e-12, "ω = {omega}: {got:?}");
            }
        }
    }

    #[test]
    fn real_regime_at_pi() {
        let c = choose_root(1, PI).unwrap();
        assert!(c.real_regime);
        assert_eq!(c.integrand, 0.0);
        let c = choose_root(1, 0.2).unwrap();
        assert!(!c.real_regime && c.integrand > 0.0 && c.z.1 > 0.0);
        assert!(c.residual < 1e-10);
    }

    #[test]
    fn log_ratio_vanishes_on_real_axis() {
        for omega in [0.4, 1.7, 3.0] {
            assert!(log_ratio(Complex64::new(0.37, 0.0), omega).unwrap().abs() < 1e-14);
        }
    }

    #[test]
    fn w11_route_matches() {
        for k in 1..=4 {
            for omega in [0.5, 1.2, 2.0] {
                let a = integrand(k, omega).unwrap();
                let b = integrand_via_w11(k, omega).unwrap();
                assert!((a - b).abs() < 1e-9, "k = {k}, ω = {omega}");
            }
        }
    }

    #[test]
    fn argument_checks() {
        assert!(volume(0, 1.0).is_err());
        assert!(volume(1, 0.0).is_err());
        assert!(volume(1, 4.0).is_err());
        assert_eq!(volume(3, PI).unwrap().volume, 0.0);
        assert!(cyclic_cover_volume(1, 2).is_err());
        assert!(r_poly(1, 0.0).is_err());
    }

    #[test]
    fn alpha_bound_k1() {
        let b = estimate_alpha_bound(1).unwrap();
        assert!(b >= 2.0 * PI / 3.0 && b < PI);
        assert!(integrand(1, b - 1e-6).unwrap() > 0.0);
        assert!(integrand(1, b + 1e-6).unwrap().abs() < 1e-6);
    }
}
