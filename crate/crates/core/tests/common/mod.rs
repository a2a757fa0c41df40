#![allow(dead_code)]

use hopfmin_core::datum::{preset_cartan, CartanType, Datum};
use hopfmin_core::scalar::Field;
use hopfmin_core::{BraidingMatrix, Scalar};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn cartan(ty: CartanType) -> Datum {
    preset_cartan(&ty.cartan_matrix(), &ty.symmetrizer(), &Scalar::t_pow(1)).unwrap()
}

pub fn rational(n: i64, d: i64) -> Scalar {
    Scalar::Rational(BigRational::new(n.into(), d.into()))
}

pub fn random_nonzero_rational(rng: &mut impl Rng) -> Scalar {
    let mut n = 0;
    while n == 0 {
        n = rng.gen_range(-4..=4);
    }
    rational(n, rng.gen_range(1..=3))
}

/// Braiding with every entry a small nonzero rational.
pub fn random_braiding(seed: u64, letters: usize) -> BraidingMatrix {
    let mut r = rng(seed);
    BraidingMatrix::new((0..letters).map(|_| (0..letters).map(|_| random_nonzero_rational(&mut r)).collect()).collect())
}

/// The three fixed random braidings used across the suites.
pub fn random_braidings() -> Vec<BraidingMatrix> {
    vec![random_braiding(11, 2), random_braiding(12, 3), random_braiding(13, 3)]
}

pub fn is_rational(b: &BraidingMatrix) -> bool {
    b.field() == Field::Rational
}
