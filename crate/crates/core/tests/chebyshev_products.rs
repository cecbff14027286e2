use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use whitehead::chebyshev::cheb;
use whitehead::polyring::Var;

fn s(k: i64, v: f64) -> f64 {
    cheb(k).eval_at(&[(Var::V, Complex64::new(v, 0.0))]).unwrap().re
}

#[test]
fn chebyshev_factors_over_cosines() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for n in 2..=8i64 {
        for _ in 0..50 {
            let v: f64 = rng.gen_range(-2.5..2.5);
            let odd: f64 = (1..n).map(|j| v - 2.0 * (j as f64 * PI / n as f64).cos()).product();
            assert!((s(n - 1, v) - odd).abs() < 1e-8, "n = {n}, v = {v}");
            let even: f64 = (1..=n)
                .map(|j| v - 2.0 * ((2 * j - 1) as f64 * PI / (2 * n + 1) as f64).cos())
                .product();
            assert!((s(n, v) - s(n - 1, v) - even).abs() < 1e-8, "n = {n}, v = {v}");
        }
    }
}
