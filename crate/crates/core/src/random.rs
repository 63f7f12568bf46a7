//! Seeded generators for exact test data.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{validate_spec, Algebra, AlgebraSpec, Element};
use crate::exact::{rational, Rational};

pub type TestRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational `p/q` with `|p| <= 9`, `1 <= q <= 5`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    rational(rng.random_range(-9..=9), rng.random_range(1..=5))
}

pub fn random_element<R: Rng + ?Sized>(rng: &mut R, algebra: &Algebra) -> Element {
    algebra
        .element((0..algebra.dim()).map(|_| random_rational(rng)).collect())
        .expect("dimension matches")
}

/// Unital algebra of dimension `dim` whose non-unit constants are drawn
/// uniformly from `{-1, 0, 1}`.
pub fn random_unital_algebra<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Algebra {
    let names = (0..dim)
        .map(|i| {
            if i == 0 {
                "1".to_string()
            } else {
                format!("e{i}")
            }
        })
        .collect();
    let mut spec = AlgebraSpec::with_unit(format!("random{dim}"), names);
    for i in 1..dim {
        for j in 1..dim {
            for k in 0..dim {
                spec.set_constant(i, j, k, rational(rng.random_range(-1..=1), 1));
            }
        }
    }
    validate_spec(spec).expect("unit row and column are forced")
}
