//! Placeholder, replaced during build-out.

use rand::Rng;

pub fn probe<R: Rng>(rng: &mut R) -> f64 {
    rng.random::<f64>()
}
