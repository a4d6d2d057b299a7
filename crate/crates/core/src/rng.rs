//! Counter-based random number streams.
//!
//! Every Wiener increment, bridge draw and initial-condition draw is a pure
//! function of `(master seed, path index, step index, slot)`: the path index
//! selects a ChaCha stream and the step index selects the word position
//! inside it. Nothing depends on consumption history, so ensembles are
//! bit-identical under any scheduling, and common-random-number pairs stay
//! synchronized even when one path draws bridge uniforms and the other does
//! not.
//!
//! Normals use a fixed-consumption Box-Muller transform (2 words per pair);
//! variable-consumption samplers would break the counter layout.

use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fmath;

/// Identifies one path's stream within a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RngStreamSpec {
    pub master_seed: u64,
    pub path_index: u64,
}

// Word layout (ChaCha words are u32; one u64 draw consumes two):
//   step k: [ceil(m/2) Box-Muller pairs, 2 u64 each][1 bridge u64]
// Initial-condition and auxiliary draws live far past any step position.
const WORDS_PER_U64: u128 = 2;
const INIT_BASE: u128 = 1 << 60;

/// Streams beyond this index are reserved for non-path uses.
pub const AUX_STREAM_BASE: u64 = 1 << 62;

pub struct PathRng {
    rng: ChaCha8Rng,
    noise_dim: usize,
    words_per_step: u128,
}

#[inline]
fn u64_to_open_unit(x: u64) -> f64 {
    // (0, 1]: never zero, so ln() below is always finite.
    ((x >> 11) + 1) as f64 * (1.0 / 9007199254740992.0)
}

impl PathRng {
    pub fn new(spec: RngStreamSpec, noise_dim: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(spec.master_seed);
        rng.set_stream(spec.path_index);
        let pairs = noise_dim.div_ceil(2) as u128;
        PathRng { rng, noise_dim, words_per_step: 2 * WORDS_PER_U64 * pairs + WORDS_PER_U64 }
    }

    /// Standard-normal vector for one step, scaled by `sqrt_dt`.
    pub fn wiener_increment(&mut self, step: usize, sqrt_dt: f64, out: &mut [f64]) {
        debug_assert_eq!(out.len(), self.noise_dim);
        self.rng.set_word_pos(step as u128 * self.words_per_step);
        let mut i = 0;
        while i < self.noise_dim {
            let u1 = u64_to_open_unit(self.rng.next_u64());
            let u2 = u64_to_open_unit(self.rng.next_u64());
            let r = fmath::sqrt(-2.0 * fmath::ln(u1));
            let theta = 2.0 * core::f64::consts::PI * u2;
            out[i] = r * fmath::cos(theta) * sqrt_dt;
            if i + 1 < self.noise_dim {
                out[i + 1] = r * fmath::sin(theta) * sqrt_dt;
            }
            i += 2;
        }
    }

    /// Uniform in (0, 1] from the step's dedicated bridge slot.
    pub fn bridge_uniform(&mut self, step: usize) -> f64 {
        let pairs = self.noise_dim.div_ceil(2) as u128;
        self.rng.set_word_pos(step as u128 * self.words_per_step + 2 * WORDS_PER_U64 * pairs);
        u64_to_open_unit(self.rng.next_u64())
    }

    /// Uniform in (0, 1] reserved for sampling the initial condition.
    pub fn initial_uniform(&mut self) -> f64 {
        self.rng.set_word_pos(INIT_BASE);
        u64_to_open_unit(self.rng.next_u64())
    }
}

/// Sequential uniform stream for non-path sampling tasks (couplings,
/// subsampling); `tag` keeps purposes out of each other's streams.
pub struct UniformStream {
    rng: ChaCha8Rng,
}

impl UniformStream {
    pub fn new(master_seed: u64, tag: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
        rng.set_stream(AUX_STREAM_BASE | tag);
        UniformStream { rng }
    }

    pub fn next_unit(&mut self) -> f64 {
        u64_to_open_unit(self.rng.next_u64())
    }

    pub fn fill_units(&mut self, n: usize) -> Vec<f64> {
        (0..n).map(|_| self.next_unit()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn draws_are_pure_functions_of_the_counter() {
        let spec = RngStreamSpec { master_seed: 42, path_index: 7 };
        let mut a = PathRng::new(spec, 2);
        let mut b = PathRng::new(spec, 2);
        let mut out_a = vec![0.0; 2];
        let mut out_b = vec![0.0; 2];

        // Different access orders, identical results.
        a.wiener_increment(3, 1.0, &mut out_a);
        let bridge_a = a.bridge_uniform(10);
        b.bridge_uniform(10); // consume in a different order first
        let bridge_b = b.bridge_uniform(10);
        b.wiener_increment(3, 1.0, &mut out_b);
        assert_eq!(out_a, out_b);
        assert_eq!(bridge_a, bridge_b);
        assert_eq!(bridge_a, bridge_b);
        assert_eq!(a.initial_uniform(), b.initial_uniform());
    }

    #[test]
    fn distinct_paths_and_steps_differ() {
        let mut a = PathRng::new(RngStreamSpec { master_seed: 1, path_index: 0 }, 1);
        let mut b = PathRng::new(RngStreamSpec { master_seed: 1, path_index: 1 }, 1);
        let mut xa = vec![0.0];
        let mut xb = vec![0.0];
        a.wiener_increment(0, 1.0, &mut xa);
        b.wiener_increment(0, 1.0, &mut xb);
        assert_ne!(xa, xb);
        let mut xa2 = vec![0.0];
        a.wiener_increment(1, 1.0, &mut xa2);
        assert_ne!(xa, xa2);
    }

    #[test]
    fn increments_match_normal_moments() {
        // Mean and variance of N(0, dt) across an ensemble, 3-sigma bands.
        let dt = 0.25f64;
        let n = 40_000usize;
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        let mut out = vec![0.0; 1];
        for i in 0..n {
            let mut rng = PathRng::new(RngStreamSpec { master_seed: 9, path_index: i as u64 }, 1);
            rng.wiener_increment(0, fmath::sqrt(dt), &mut out);
            sum += out[0];
            sumsq += out[0] * out[0];
        }
        let mean = sum / n as f64;
        let var = sumsq / n as f64 - mean * mean;
        let se_mean = fmath::sqrt(dt / n as f64);
        assert!(mean.abs() < 3.0 * se_mean, "mean {mean}");
        let se_var = dt * fmath::sqrt(2.0 / n as f64);
        assert!((var - dt).abs() < 3.0 * se_var, "var {var}");
    }
}
