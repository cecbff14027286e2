use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use whitehead::volume::{
    choose_root, cyclic_cover_volume, cyclic_cover_volume_with_tol, estimate_alpha_bound, integrand, volume,
    volume_with_tol, RPoly,
};

#[test]
fn coefficients_are_real_on_the_unit_circle() {
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let k = rng.gen_range(1..=6);
        let omega = rng.gen_range(1e-3..PI);
        let c = RPoly::cached(k).unwrap().at_s(Complex64::from_polar(1.0, omega / 2.0)).unwrap();
        worst = c.iter().map(|a| a.im.abs()).fold(worst, f64::max);
    }
    assert!(worst < 1e-12, "max imaginary part {worst:e}");
}

#[test]
fn chosen_roots_are_accurate_and_integrand_nonnegative() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let k = rng.gen_range(1..=6);
        let omega = rng.gen_range(1e-3..PI);
        let c = choose_root(k, omega).unwrap();
        assert!(c.residual < 1e-10, "k = {k}, ω = {omega}: residual {}", c.residual);
        assert!(c.integrand >= -1e-12);
        assert!(c.z.1 >= -1e-10);
    }
}

#[test]
fn volume_is_monotone_in_alpha() {
    for k in 1..=6 {
        let grid: Vec<f64> = (0..50).map(|i| 0.05 + (PI - 0.05) * i as f64 / 49.0).collect();
        let vols: Vec<f64> = grid.iter().map(|&a| volume(k, a).unwrap().volume).collect();
        for i in 1..vols.len() {
            assert!(vols[i - 1] >= vols[i] - 1e-9, "k = {k}, α = {}", grid[i]);
        }
        assert_eq!(*vols.last().unwrap(), 0.0);
    }
}

#[test]
fn sampled_integrand_is_nonnegative() {
    for k in 1..=6 {
        let curve = volume(k, 0.01).unwrap();
        assert!(curve.samples.windows(2).all(|w| w[0].omega <= w[1].omega));
        assert!(curve.samples.iter().all(|s| s.integrand >= -1e-12), "k = {k}");
    }
}

#[test]
fn cover_volumes() {
    let a = cyclic_cover_volume(1, 3).unwrap();
    let b = cyclic_cover_volume_with_tol(1, 3, 5e-10).unwrap();
    assert!((a - b).abs() < 1e-7);
    let cusp = volume(1, 1e-4).unwrap().volume;
    let per_sheet: Vec<f64> = (3..=12).map(|r| cyclic_cover_volume(1, r).unwrap() / r as f64).collect();
    for w in per_sheet.windows(2) {
        assert!(w[0] <= w[1] + 1e-12);
    }
    assert!(*per_sheet.last().unwrap() < cusp);
}

#[test]
fn alpha_bound_is_a_transition() {
    for k in 1..=6 {
        let b = estimate_alpha_bound(k).unwrap();
        assert!(b >= 2.0 * PI / 3.0 - 1e-6 && b < PI, "k = {k}: {b}");
        assert!(integrand(k, b - 1e-5).unwrap() > 0.0);
        assert!(integrand(k, (b + 1e-5).min(PI)).unwrap().abs() < 1e-4);
        // beyond the bound the integrand vanishes identically
        let tail = volume_with_tol(k, (b + 1e-6).min(PI), 1e-10).unwrap().volume;
        assert!(tail.abs() < 1e-9, "k = {k}: {tail}");
    }
}
