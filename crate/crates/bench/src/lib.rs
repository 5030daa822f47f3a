//! Fixtures shared by the criterion benchmarks.

use wittkit::{Multivector, Scalar, Signature};

/// A dense multivector with small deterministic rational coefficients.
pub fn dense_multivector(sig: &std::sync::Arc<Signature>) -> Multivector {
    Multivector::from_terms(
        sig,
        (0..sig.blade_count() as u32).map(|m| {
            let n = (m as i64 * 7 + 3) % 19 - 9;
            (m, Scalar::ratio(n, 1 + (m as i64 % 5)))
        }),
    )
}

/// `(i mod 9) - 4` as exact scalars.
pub fn ramp(len: usize) -> Vec<Scalar> {
    (0..len).map(|i| Scalar::int((i % 9) as i64 - 4)).collect()
}
