//! Shared fixtures for the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `n` sorted uniforms from a fixed seed.
pub fn uniform_sample(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut xs: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
    xs.sort_by(f64::total_cmp);
    xs
}

/// Interval families used when comparing local and global evaluations.
pub const LOW_FAMILY: [(f64, f64); 6] = [
    (0.0, 0.05),
    (0.0, 0.1),
    (0.0, 0.2),
    (0.0, 0.5),
    (0.0, 0.9),
    (0.0, 1.0),
];
