//! Seeded workloads shared by the benchmarks in `benches/`.

use orthology_core::sampling::{rng_from_seed, sample_triangle};
use orthology_core::{Triangle2, TrianglePair};

pub const RANGE: u32 = 10;

pub fn triangles(n: usize, seed: u64) -> Vec<Triangle2> {
    let mut rng = rng_from_seed(seed);
    (0..n).map(|_| sample_triangle(&mut rng, RANGE)).collect()
}

pub fn pairs(n: usize, seed: u64) -> Vec<TrianglePair> {
    let mut rng = rng_from_seed(seed);
    (0..n)
        .map(|_| {
            TrianglePair::new(
                sample_triangle(&mut rng, RANGE),
                sample_triangle(&mut rng, RANGE),
            )
        })
        .collect()
}
