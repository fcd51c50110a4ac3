//! Keyed deterministic streams.
//!
//! Every random quantity in the crate comes from a SplitMix64 generator
//! whose 64-bit state is derived from `(stream, seed, index, subkey)` with the
//! SplitMix64 output finalizer, so draws never depend on evaluation order.

use rand::SeedableRng;
use rand_xoshiro::SplitMix64;

/// Stream tag for parameter sampling.
pub const STREAM_PARAMS: u64 = 0x7061_7261_6d73;
/// Stream tag for isospectral perturbations.
pub const STREAM_ISOSPECTRAL: u64 = 0x6973_6f73;
/// Stream tag for identity evaluation points.
pub const STREAM_POINTS: u64 = 0x706f_696e_7473;
/// Stream tag for Jacobi `(alpha, beta, N)` draws.
pub const STREAM_JACOBI: u64 = 0x6a61_636f_6269;
/// Stream tag for reduced-case `(alpha_1, beta_1, N)` draws.
pub const STREAM_REDUCED: u64 = 0x7265_6475_6365;

fn finalize(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn keyed(stream: u64, seed: u64, index: u64, subkey: u64) -> SplitMix64 {
    let mut k = finalize(stream);
    for part in [seed, index, subkey] {
        k = finalize(k ^ part.wrapping_add(0x9e37_79b9_7f4a_7c15));
    }
    SplitMix64::seed_from_u64(k)
}
