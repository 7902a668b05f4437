//! Deterministic state sampling.
//!
//! The generator contract is ChaCha8 (rand_chacha 0.3) with a 64-bit seed;
//! sample `i` of a batch draws from stream `i` of that seed, so sequences are
//! identical on every platform and independent of how work is parallelized.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::state::{BellDiagonalState, GeneralXState, XxzState};

/// RNG for the `index`-th sample of a seeded batch.
pub fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn in_tetrahedron(s1: f64, c1: f64, c3: f64) -> bool {
    s1.abs() <= (1.0 + c3) / 2.0 && c1.abs() <= (1.0 - c3) / 2.0
}

/// One uniform draw from 𝒯 by rejection from the cube [-1,1]^3.
pub fn draw_xxz(rng: &mut impl Rng) -> XxzState {
    loop {
        let s1 = rng.gen_range(-1.0..=1.0);
        let c1 = rng.gen_range(-1.0..=1.0);
        let c3 = rng.gen_range(-1.0..=1.0);
        if in_tetrahedron(s1, c1, c3) {
            return XxzState::new(s1, c1, c3).expect("rejection guarantees membership");
        }
    }
}

/// One uniform draw from the valid five-parameter X domain.
pub fn draw_general_x(rng: &mut impl Rng) -> GeneralXState {
    loop {
        let v: [f64; 5] = std::array::from_fn(|_| rng.gen_range(-1.0..=1.0));
        if let Ok(st) = GeneralXState::new(v[0], v[1], v[2], v[3], v[4]) {
            return st;
        }
    }
}

/// One uniform draw from the Bell tetrahedron.
pub fn draw_bell_diagonal(rng: &mut impl Rng) -> BellDiagonalState {
    loop {
        let c1 = rng.gen_range(-1.0..=1.0);
        let c2 = rng.gen_range(-1.0..=1.0);
        let c3 = rng.gen_range(-1.0..=1.0);
        if let Ok(st) = BellDiagonalState::new(c1, c2, c3) {
            return st;
        }
    }
}

/// `count` uniform samples over 𝒯, deterministic for a fixed seed.
pub fn sample_tetrahedron(seed: u64, count: usize) -> Vec<XxzState> {
    (0..count)
        .map(|i| draw_xxz(&mut stream_rng(seed, i as u64)))
        .collect()
}

/// `count` uniform samples over the valid general-X domain.
pub fn sample_general_x(seed: u64, count: usize) -> Vec<GeneralXState> {
    (0..count)
        .map(|i| draw_general_x(&mut stream_rng(seed, i as u64)))
        .collect()
}

/// Fraction of `draws` cube points that land inside 𝒯 (expected 1/6).
pub fn tetrahedron_acceptance(seed: u64, draws: usize) -> f64 {
    let mut rng = stream_rng(seed, 0);
    let mut hits = 0usize;
    for _ in 0..draws {
        let s1 = rng.gen_range(-1.0..=1.0);
        let c1 = rng.gen_range(-1.0..=1.0);
        let c3 = rng.gen_range(-1.0..=1.0);
        if in_tetrahedron(s1, c1, c3) {
            hits += 1;
        }
    }
    hits as f64 / draws as f64
}

/// Fraction of `draws` hypercube points that are valid X states (about 8%).
pub fn general_x_acceptance(seed: u64, draws: usize) -> f64 {
    let mut rng = stream_rng(seed, 0);
    let mut hits = 0usize;
    for _ in 0..draws {
        let v: [f64; 5] = std::array::from_fn(|_| rng.gen_range(-1.0..=1.0));
        if crate::state::validate_general_x(v[0], v[1], v[2], v[3], v[4]).is_ok() {
            hits += 1;
        }
    }
    hits as f64 / draws as f64
}
