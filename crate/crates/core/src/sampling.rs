//! Seeded, portable sampling of bounded rationals, points and triangles.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{Point2, Triangle2};
use crate::rational::Rational;
use crate::space3d::{Point3, Triangle3};

pub type SeededRng = ChaCha8Rng;

pub const RESAMPLE_LIMIT: usize = 64;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// splitmix64 finalizer over `(seed, index)`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Numerator uniform in `[-range, range]`, denominator uniform in `[1, range]`.
pub fn sample_rational<R: Rng>(rng: &mut R, range: u32) -> Rational {
    let r = i64::from(range.max(1));
    let n = rng.random_range(-r..=r);
    let d = rng.random_range(1..=r);
    crate::rational::rat(n, d)
}

pub fn sample_point<R: Rng>(rng: &mut R, range: u32) -> Point2 {
    let x = sample_rational(rng, range);
    let y = sample_rational(rng, range);
    Point2::new(x, y)
}

pub fn sample_point3<R: Rng>(rng: &mut R, range: u32) -> Point3 {
    let x = sample_rational(rng, range);
    let y = sample_rational(rng, range);
    let z = sample_rational(rng, range);
    Point3::new(x, y, z)
}

/// Resamples collinear draws; after [`RESAMPLE_LIMIT`] failures the range
/// doubles and sampling continues.
pub fn sample_triangle<R: Rng>(rng: &mut R, range: u32) -> Triangle2 {
    let mut range = range.max(2);
    loop {
        for _ in 0..RESAMPLE_LIMIT {
            let a = sample_point(rng, range);
            let b = sample_point(rng, range);
            let c = sample_point(rng, range);
            if let Ok(t) = Triangle2::new(a, b, c) {
                return t;
            }
        }
        range = range.saturating_mul(2);
    }
}

pub fn sample_triangle3<R: Rng>(rng: &mut R, range: u32) -> Triangle3 {
    let mut range = range.max(2);
    loop {
        for _ in 0..RESAMPLE_LIMIT {
            let a = sample_point3(rng, range);
            let b = sample_point3(rng, range);
            let c = sample_point3(rng, range);
            if let Ok(t) = Triangle3::new(a, b, c) {
                return t;
            }
        }
        range = range.saturating_mul(2);
    }
}
