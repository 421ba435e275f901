//! Seeded rational evaluation points.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::Point;

/// A nonzero rational with numerator in `±1..=9` and denominator in `1..=5`.
fn small_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
    let den: i64 = rng.gen_range(1..=5);
    BigRational::new(num.into(), den.into())
}

/// `count` random points with every coordinate nonzero. The same seed always
/// gives the same points.
pub fn random_points(seed: u64, count: usize) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = small_rational(&mut rng);
            let b = small_rational(&mut rng);
            let t = small_rational(&mut rng);
            Point::new(a, b, t)
        })
        .collect()
}

/// The all-ones point followed by `count` random ones.
pub fn sweep_points(seed: u64, count: usize) -> Vec<Point> {
    let mut pts = vec![Point::ints(1, 1, 1)];
    pts.extend(random_points(seed, count));
    pts
}
