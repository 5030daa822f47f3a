//! Seeded random elements for homomorphism sampling.
//!
//! Coefficients are rationals `p/q` with `|p| ≤ 9` and `1 ≤ q ≤ 9`; with
//! `complex` set each coefficient also gets an independent `j` part.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::multivector::Multivector;
use crate::scalar::{Rational, Scalar};
use crate::signature::Signature;

pub type SampleRng = ChaCha8Rng;

pub const COEFF_BOUND: i64 = 9;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    let p = rng.gen_range(-COEFF_BOUND..=COEFF_BOUND);
    let q = rng.gen_range(1..=COEFF_BOUND);
    Rational::new(p.into(), q.into())
}

pub fn random_scalar(rng: &mut impl Rng, complex: bool) -> Scalar {
    let re = random_rational(rng);
    let im = if complex { random_rational(rng) } else { Rational::from_integer(0.into()) };
    Scalar::from_gaussian(re, im)
}

/// A dense random element: every blade gets a coefficient.
pub fn random_multivector(rng: &mut impl Rng, sig: &Arc<Signature>, complex: bool) -> Multivector {
    let n = sig.blade_count() as u32;
    Multivector::from_terms(sig, (0..n).map(|mask| (mask, random_scalar(rng, complex))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_is_reproducible() {
        let sig = Signature::g_nn(1).into_arc();
        let a = random_multivector(&mut rng(7), &sig, true);
        let b = random_multivector(&mut rng(7), &sig, true);
        assert_eq!(a, b);
        assert_ne!(a, random_multivector(&mut rng(8), &sig, true));
    }

    #[test]
    fn coefficients_are_bounded() {
        let mut r = rng(1);
        for _ in 0..500 {
            let q = random_rational(&mut r);
            assert!(q.numer().magnitude() <= &9u32.into());
            assert!(q.denom() <= &9.into());
        }
        assert!(random_scalar(&mut r, false).is_gaussian());
    }
}
