//! Seeded random even permutations for audits.
//!
//! A pair stream is a ChaCha8 generator seeded with the audit seed; each
//! element is a Fisher–Yates shuffle of `1..=n`, redrawn until it is even and
//! not the identity.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::perm::Permutation;

pub fn random_even<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    loop {
        images.shuffle(rng);
        let x = Permutation::from_images(&images).expect("a shuffle is a bijection");
        if x.is_even() && !x.is_identity() {
            return x;
        }
    }
}

/// `count` pairs drawn from one seeded stream.
pub fn even_pairs(n: usize, count: usize, seed: u64) -> Vec<(Permutation, Permutation)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let x = random_even(n, &mut rng);
            let y = random_even(n, &mut rng);
            (x, y)
        })
        .collect()
}
