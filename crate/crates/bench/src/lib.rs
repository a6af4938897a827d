//! Shared inputs for the kernel benchmarks.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fibalg_core::algebra::{random_element, AlgebraSpec, Element};
use fibalg_core::scalar::rat_int;

pub fn quaternion() -> Arc<AlgebraSpec> {
    AlgebraSpec::quaternion(rat_int(1), rat_int(1))
}

pub fn octonion() -> Arc<AlgebraSpec> {
    AlgebraSpec::octonion(rat_int(2), rat_int(1), rat_int(3))
}

/// A deterministic pair of elements with small fractional coordinates.
pub fn sample_pair(spec: &Arc<AlgebraSpec>, seed: u64) -> (Element, Element) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (random_element(spec, &mut rng), random_element(spec, &mut rng))
}
