//! Seeded, bit-stable sampling streams.
//!
//! Every stochastic suite in the crate derives one stream per sample index
//! from `(seed, index)`, so results are independent of worker count, rerun
//! order, and platform. SplitMix64 is small, fast, and fixed forever, which
//! is what a reproducibility contract needs.

use crate::error::Error;
use crate::perm::Permutation;
use crate::tuple::PositiveTuple;

/// SplitMix64 finalizer; also used to mix seeds with sample indices.
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// SplitMix64 generator (Steele, Lea, Flood 2014).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1) with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Log-uniform on [lo, hi]; both bounds must be positive.
    pub fn log_uniform(&mut self, lo: f64, hi: f64) -> f64 {
        let (ll, lh) = (lo.ln(), hi.ln());
        (ll + (lh - ll) * self.next_f64()).exp()
    }

    /// Uniform integer in [0, n) without modulo bias (multiply-shift).
    pub fn below(&mut self, n: u64) -> u64 {
        ((u128::from(self.next_u64()) * u128::from(n)) >> 64) as u64
    }
}

/// Stream for sample `index` of a seeded run. Streams for distinct indices
/// are independent, so index ranges can be split across workers freely.
pub fn stream(seed: u64, index: u64) -> SplitMix64 {
    SplitMix64::new(mix64(seed) ^ mix64(index.wrapping_add(0x5851_f42d_4c95_7f2d)))
}

/// n values log-uniform on [lo, hi], sorted ascending.
pub fn sorted_log_uniform(rng: &mut SplitMix64, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    let mut values: Vec<f64> = (0..n).map(|_| rng.log_uniform(lo, hi)).collect();
    values.sort_by(|a, b| a.partial_cmp(b).expect("finite samples"));
    values
}

/// Uniformly random permutation via Fisher-Yates.
pub fn random_permutation(rng: &mut SplitMix64, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        images.swap(i, j);
    }
    Permutation::from_one_based(&images).expect("shuffle preserves bijectivity")
}

/// Sorted tuple drawn log-uniform on [lo, hi], resampled until the
/// hypothesis flag holds. The flag is verified per sample, never assumed.
pub fn hypothesis_tuple(
    rng: &mut SplitMix64,
    n: usize,
    lo: f64,
    hi: f64,
    budget: usize,
) -> Result<PositiveTuple, Error> {
    for _ in 0..budget {
        let t = PositiveTuple::new(sorted_log_uniform(rng, n, lo, hi))?;
        if t.hypothesis_h() {
            return Ok(t);
        }
    }
    Err(Error::config(format!(
        "no hypothesis-satisfying tuple found in {budget} draws (n={n}, range [{lo}, {hi}])"
    )))
}
